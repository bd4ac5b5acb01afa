//! The five solvable systems: L1 and L2 Laguerre, J1 and J2 Jacobi, and the
//! rationally extended Jacobi (trigonometric Darboux–Pöschl–Teller) case.
//!
//! A system is built once by [`build_system`] and is immutable afterwards;
//! everything else is a pure function of it.

mod coords;
mod eval;
pub mod grid;
mod polys;
mod residual;
mod system;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::polycore::Rational;

pub use coords::{Coordinate, PrepotentialDescriptor, PrepotentialKind};
pub use eval::{potential_eval, weight_consistency, weight_exponents, wavefunction_eval, WeightDescriptor};
pub use polys::{
    derivation_p, exceptional_poly, exceptional_poly_with, hos_poly, j2_direct, j2_direct_sign, level_p,
    level_poly, proportionality,
};
pub use residual::{ode_residual, ode_residual_of, xi_residual};
pub use system::{build_system, energy, energy_of_poly_index, EnergyMap, XSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    L1,
    L2,
    J1,
    J2,
    ExtJ,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [CaseTag::L1, CaseTag::L2, CaseTag::J1, CaseTag::J2, CaseTag::ExtJ];

    pub fn is_laguerre(self) -> bool {
        matches!(self, CaseTag::L1 | CaseTag::L2)
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::L1 => "l1",
            CaseTag::L2 => "l2",
            CaseTag::J1 => "j1",
            CaseTag::J2 => "j2",
            CaseTag::ExtJ => "extj",
        }
    }

    /// Degree of `P_{ℓ,n}` beyond `ℓ + n`.
    pub fn degree_excess(self) -> usize {
        usize::from(self == CaseTag::ExtJ)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = XError;
    fn from_str(s: &str) -> Result<Self, XError> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| XError::UnknownCase(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub ell: usize,
    #[serde(serialize_with = "crate::serial::rational")]
    pub alpha: Rational,
    /// Ignored by the Laguerre cases.
    #[serde(serialize_with = "crate::serial::rational")]
    pub beta: Rational,
}

impl Params {
    pub fn new(ell: usize, alpha: Rational, beta: Rational) -> Self {
        Params { ell, alpha, beta }
    }

    pub fn laguerre(ell: usize, alpha: Rational) -> Self {
        Params { ell, alpha, beta: crate::polycore::int(0) }
    }

    /// α and β exchanged.
    pub fn swapped(&self) -> Self {
        Params { ell: self.ell, alpha: self.beta.clone(), beta: self.alpha.clone() }
    }
}

/// Deliberate mutations used to prove that the verification suites can
/// fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip the sign of the second term of the L2 exceptional polynomial.
    L2SignFlip,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum XError {
    #[error("unknown case {0:?} (expected l1, l2, j1, j2 or extj)")]
    UnknownCase(String),
    #[error("parameter constraint violated: {0}")]
    ParameterConstraint(String),
    #[error("deforming function has physical-domain zero: {0}")]
    DeformingFunctionZero(String),
    #[error("x = {0} is outside the physical domain")]
    OutOfDomain(f64),
    #[error("not proportional")]
    NotProportional,
    #[error("residual not quasi-polynomial")]
    ResidualNotQuasi,
}
