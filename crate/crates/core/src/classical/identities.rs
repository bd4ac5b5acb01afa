//! The derivative and contiguous relations among Laguerre and Jacobi
//! polynomials that the exceptional constructions rely on.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::jacobi::jacobi_poly as jac;
use super::laguerre::laguerre as lag;
use super::ClassicalError;
use crate::polycore::{int, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    L1,
    L2,
    L3,
    J1,
    J2,
    J3,
    J4,
    J5,
    J6,
    J7,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::L1,
        Identity::L2,
        Identity::L3,
        Identity::J1,
        Identity::J2,
        Identity::J3,
        Identity::J4,
        Identity::J5,
        Identity::J6,
        Identity::J7,
    ];

    pub fn is_laguerre(self) -> bool {
        matches!(self, Identity::L1 | Identity::L2 | Identity::L3)
    }

    pub fn label(self) -> &'static str {
        match self {
            Identity::L1 => "L-1",
            Identity::L2 => "L-2",
            Identity::L3 => "L-3",
            Identity::J1 => "J-1",
            Identity::J2 => "J-2",
            Identity::J3 => "J-3",
            Identity::J4 => "J-4",
            Identity::J5 => "J-5",
            Identity::J6 => "J-6",
            Identity::J7 => "J-7",
        }
    }

    /// Both sides of the identity at degree `l`. `beta` is ignored for the
    /// Laguerre relations.
    pub fn sides(self, l: usize, alpha: &Rational, beta: &Rational) -> Result<(Poly, Poly), ClassicalError> {
        if l == 0 {
            return Err(ClassicalError::DegreeTooLow(self.label()));
        }
        let a = alpha;
        let b = beta;
        let one = int(1);
        let two = int(2);
        let ll = int(l as i64);
        let eta = Poly::eta();
        let one_plus = Poly::from_ints(&[1, 1]);
        let one_minus = Poly::from_ints(&[1, -1]);
        let sides = match self {
            Identity::L1 => (lag(l, a).derive(), -lag(l - 1, &(a + &one))),
            Identity::L2 => (&lag(l, a) + &lag(l - 1, &(a + &one)), lag(l, &(a + &one))),
            Identity::L3 => (
                &(&eta * &lag(l - 1, &(a + &two))) - &lag(l - 1, &(a + &one)).scale(&(a + &one)),
                lag(l, a).scale(&(-&ll)),
            ),
            Identity::J1 => (
                jac(l, a, b).derive(),
                jac(l - 1, &(a + &one), &(b + &one)).scale(&((&ll + a + b + &one) / &two)),
            ),
            Identity::J2 => (
                &jac(l, &(a - &one), &(b + &one)).scale(&(&two * (b + &one)))
                    + &(&one_plus * &jac(l - 1, a, &(b + &two))).scale(&(&ll + a + b + &one)),
                jac(l, a, b).scale(&(&two * (&ll + b + &one))),
            ),
            Identity::J3 => (
                &jac(l, &(a - &one), &(b + &one)).scale(&(&ll + a)) - &jac(l, a, b).scale(a),
                (&Poly::from_ints(&[-1, 1]) * &jac(l - 1, &(a + &one), &(b + &one)))
                    .scale(&((&ll + a + b + &one) / &two)),
            ),
            // printed with a stray `n`; the relation holds with ℓ in its place
            Identity::J4 => (
                &(&one_plus * &jac(l - 1, a, &(b + &one))).scale(&(&ll + a))
                    - &(&one_minus * &jac(l - 1, &(a + &one), b)).scale(b),
                jac(l, a, &(b - &one)).scale(&(&two * &ll)),
            ),
            Identity::J5 => (
                &one_minus * &jac(l, a, b).derive(),
                &jac(l, a, b).scale(a) - &jac(l, &(a - &one), &(b + &one)).scale(&(&ll + a)),
            ),
            Identity::J6 => {
                let shifted = jac(l, &(a - &one), &(b + &one));
                (
                    &one_plus * &shifted.derive(),
                    &shifted.scale(&-(b + &one)) + &jac(l, a, b).scale(&(&ll + b + &one)),
                )
            }
            Identity::J7 => (
                &one_plus * &jac(l, a, b).derive(),
                &jac(l, &(a + &one), &(b - &one)).scale(&(&ll + b)) - &jac(l, a, b).scale(b),
            ),
        };
        Ok(sides)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Identity {
    type Err = ClassicalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "");
        Identity::ALL
            .into_iter()
            .find(|id| id.label().replace('-', "") == norm)
            .ok_or_else(|| ClassicalError::UnknownIdentity(s.to_string()))
    }
}

/// True iff the identity holds as an exact polynomial identity.
pub fn verify_identity(id: Identity, l: usize, alpha: &Rational, beta: &Rational) -> Result<bool, ClassicalError> {
    let (lhs, rhs) = id.sides(l, alpha, beta)?;
    Ok((&lhs - &rhs).is_zero())
}
