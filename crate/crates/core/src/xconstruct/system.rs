use num_traits::{Signed, Zero};
use serde::Serialize;

use super::coords::{Coordinate, PrepotentialDescriptor};
use super::residual::xi_residual;
use super::{CaseTag, Params, XError};
use crate::classical::{jacobi, laguerre, nodeless_condition};
use crate::polycore::{int, rat, sturm_count, Interval, Poly, Prefactor, Rational, RealInterval};

/// Closed-form spectrum of a system. Level indices count physical states:
/// for the extended Jacobi case level 0 is the constant-`p` ground state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyMap {
    pub case: CaseTag,
    pub formula: &'static str,
    pub ground_level_zero: bool,
    #[serde(skip)]
    params: Params,
}

impl EnergyMap {
    fn new(case: CaseTag, params: Params) -> Self {
        let formula = match case {
            CaseTag::L2 => "4(n-alpha-ell)",
            CaseTag::L1 => "4(n+alpha+ell+1)",
            CaseTag::J1 => "4[n(n+alpha-beta+1) - ell(ell+alpha+beta+1) - beta(alpha+1)]",
            CaseTag::J2 => "4[n(n+beta-alpha+1) - ell(ell+alpha+beta+1) - alpha(beta+1)]",
            CaseTag::ExtJ => "0 at level 0; level n+1: 4[n(n-alpha-beta+1) - ell(ell+alpha+beta+1) - alpha - beta]",
        };
        EnergyMap { case, formula, ground_level_zero: case == CaseTag::ExtJ, params }
    }

    /// Energy attached to `P_{ℓ,n}`.
    pub fn for_poly_index(&self, n: usize) -> Rational {
        let Params { ell, alpha: a, beta: b } = &self.params;
        let n = int(n as i64);
        let l = int(*ell as i64);
        let one = int(1);
        let four = int(4);
        let xi_part = &l * (&l + a + b + &one);
        match self.case {
            CaseTag::L2 => four * (n - a - l),
            CaseTag::L1 => four * (n + a + l + one),
            CaseTag::J1 => four * (&n * (&n + a - b + &one) - xi_part - b * (a + &one)),
            CaseTag::J2 => four * (&n * (&n + b - a + &one) - xi_part - a * (b + &one)),
            CaseTag::ExtJ => four * (&n * (&n - a - b + &one) - xi_part - a - b),
        }
    }

    pub fn at(&self, level: usize) -> Rational {
        match (self.case, level) {
            (CaseTag::ExtJ, 0) => int(0),
            (CaseTag::ExtJ, k) => self.for_poly_index(k - 1),
            (_, n) => self.for_poly_index(n),
        }
    }
}

/// A fully built solvable system.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XSystem {
    pub case: CaseTag,
    pub params: Params,
    pub coordinate: Coordinate,
    /// The deforming function `ξ_ℓ(η)`.
    pub xi: Poly,
    pub xi_degenerate: bool,
    pub c2: Poly,
    pub c1: Poly,
    /// `Q = Ẇ₀η̇` as a polynomial in η.
    pub q: Poly,
    #[serde(serialize_with = "crate::serial::rational")]
    pub e_tilde: Rational,
    /// The sign in `c₂ = ±η̇²`.
    pub sign: i8,
    pub prepotential: PrepotentialDescriptor,
    /// `p(η) = p_constant · p_prefactor · P_{ℓ,n}(η)`.
    pub p_prefactor: Prefactor,
    #[serde(serialize_with = "crate::serial::rational")]
    pub p_constant: Rational,
    pub domain_eta: Interval,
    pub domain_x: RealInterval,
    pub energy_map: EnergyMap,
    /// Diagnostics that do not prevent construction.
    pub notes: Vec<String>,
}

impl XSystem {
    pub fn ell(&self) -> usize {
        self.params.ell
    }

    pub fn alpha(&self) -> &Rational {
        &self.params.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.params.beta
    }
}

fn require(cond: bool, what: &str) -> Result<(), XError> {
    if cond {
        Ok(())
    } else {
        Err(XError::ParameterConstraint(what.to_string()))
    }
}

fn check_admissible(case: CaseTag, p: &Params, notes: &mut Vec<String>) -> Result<(), XError> {
    let (a, b, l) = (&p.alpha, &p.beta, int(p.ell as i64));
    let half = rat(1, 2);
    match case {
        CaseTag::L2 => {
            require(*a < -&l, "α<−ℓ")?;
            require(*a < -&half, "α<−1/2")
        }
        CaseTag::L1 => {
            require(*a > rat(-3, 2), "α>−3/2")?;
            if *a <= int(-1) {
                notes.push("L1 bounds α>−1 and α>−3/2 disagree here; nodelessness decided by exact root count".into());
            }
            Ok(())
        }
        CaseTag::J1 | CaseTag::J2 => {
            // J2 is the mirror image: the roles of α and β are exchanged
            let (x, y, xs, ys) = if case == CaseTag::J1 { (a, b, "α", "β") } else { (b, a, "β", "α") };
            require(*x > -&half, &format!("{xs}>−1/2"))?;
            require(*y < -&l, &format!("{ys}<−ℓ"))
        }
        CaseTag::ExtJ => {
            require(*a < -&half, "α<−1/2")?;
            require(*b < -&half, "β<−1/2")?;
            require(nodeless_condition(p.ell, a, b).unwrap_or(false), "no-zero condition on ξ")?;
            require(a + b < -&l, "α+β<−ℓ")
        }
    }
}

/// Builds and exactly verifies a system.
pub fn build_system(case: CaseTag, params: Params) -> Result<XSystem, XError> {
    let mut notes = Vec::new();
    check_admissible(case, &params, &mut notes)?;
    let (a, b, l) = (&params.alpha, &params.beta, params.ell);
    let half = rat(1, 2);

    let coordinate = if case.is_laguerre() { Coordinate::Square } else { Coordinate::Cosine };
    let (xi, xi_degenerate) = match case {
        CaseTag::L2 => (laguerre(l, a), false),
        CaseTag::L1 => (laguerre(l, a).reflect(), false),
        CaseTag::J1 | CaseTag::ExtJ => {
            let j = jacobi(l, a, b);
            (j.poly, j.degenerate)
        }
        CaseTag::J2 => {
            let j = jacobi(l, b, a);
            (j.poly.reflect(), j.degenerate)
        }
    };
    if xi_degenerate {
        notes.push(format!(
            "degree-degenerate ξ: degree {} instead of {l}",
            xi.degree().map_or("-inf".to_string(), |d| d.to_string())
        ));
    }

    let domain_eta = coordinate.domain_eta();
    let zeros = sturm_count(&xi, &domain_eta)
        .map_err(|_| XError::DeformingFunctionZero("ξ vanishes identically".into()))?;
    if zeros > 0 {
        return Err(XError::DeformingFunctionZero(format!("ξ has {zeros} zero(s) in {domain_eta}")));
    }
    let endpoints: &[i64] = if case.is_laguerre() { &[0] } else { &[-1, 1] };
    for e in endpoints {
        if xi.eval(&int(*e)).is_zero() {
            return Err(XError::DeformingFunctionZero(format!("ξ vanishes at the endpoint η = {e}")));
        }
    }

    let (prepotential, e_tilde, sign) = match case {
        CaseTag::L2 | CaseTag::L1 => {
            let s: i8 = if case == CaseTag::L2 { 1 } else { -1 };
            (PrepotentialDescriptor::LaguerreLike { sign: s, log_coeff: a + &half }, int(4 * l as i64), s)
        }
        _ => {
            let ll = int(l as i64);
            (
                PrepotentialDescriptor::JacobiLike { sin_coeff: a + &half, cos_coeff: b + &half },
                int(4) * &ll * (&ll + a + b + int(1)),
                1,
            )
        }
    };
    let q = prepotential.q_poly();
    let sigma = int(i64::from(sign));
    let c2 = coordinate.eta_dot_sq().scale(&sigma);
    let c1 = (&coordinate.eta_ddot() - &q.scale(&int(2))).scale(&sigma);

    let one = int(1);
    let (p_prefactor, p_constant) = match case {
        CaseTag::L2 => (Prefactor::exponential(int(-1)), int(4)),
        CaseTag::L1 => (Prefactor::eta_power(a + &one), int(-4)),
        CaseTag::J1 => (Prefactor::one_minus_power(a + &one), int(4)),
        CaseTag::J2 => (Prefactor::one_plus_power(b + &one), int(4)),
        CaseTag::ExtJ => (Prefactor::unit(), int(4)),
    };

    let sys = XSystem {
        case,
        energy_map: EnergyMap::new(case, params.clone()),
        params,
        coordinate,
        xi,
        xi_degenerate,
        c2,
        c1,
        q,
        e_tilde,
        sign,
        prepotential,
        p_prefactor,
        p_constant,
        domain_eta,
        domain_x: coordinate.domain_x(),
        notes,
    };
    assert!(xi_residual(&sys).is_zero(), "deforming-function equation failed for {case}");
    debug_assert!(!sys.e_tilde.is_negative() || !case.is_laguerre());
    Ok(sys)
}

/// Exact energy of physical level `level`.
pub fn energy(sys: &XSystem, level: usize) -> Rational {
    sys.energy_map.at(level)
}

/// Exact energy attached to `P_{ℓ,n}`.
pub fn energy_of_poly_index(sys: &XSystem, n: usize) -> Rational {
    sys.energy_map.for_poly_index(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_builds() {
        let s = build_system(CaseTag::L2, Params::laguerre(1, int(-2))).unwrap();
        assert_eq!(s.xi, Poly::from_ints(&[-1, -1]));
        assert_eq!(s.e_tilde, int(4));
        let s = build_system(CaseTag::L1, Params::laguerre(1, int(0))).unwrap();
        assert_eq!(s.xi, Poly::from_ints(&[1, 1]));
        assert_eq!(s.e_tilde, int(4));
    }

    #[test]
    fn constraint_violation_names_the_bound() {
        let e = build_system(CaseTag::J1, Params::new(1, int(0), rat(-1, 2))).unwrap_err();
        assert_eq!(e.to_string(), "parameter constraint violated: β<−ℓ");
    }

    #[test]
    fn energies() {
        let s = build_system(CaseTag::L2, Params::laguerre(1, int(-2))).unwrap();
        assert_eq!(energy(&s, 0), int(4));
        let s = build_system(CaseTag::L1, Params::laguerre(2, rat(1, 2))).unwrap();
        assert_eq!(energy(&s, 3), int(26));
        let s = build_system(CaseTag::J1, Params::new(1, int(0), int(-2))).unwrap();
        assert_eq!(energy(&s, 0), int(8));
    }

    #[test]
    fn degenerate_xi_is_flagged() {
        let s = build_system(CaseTag::J1, Params::new(1, int(0), int(-2))).unwrap();
        assert!(s.xi_degenerate);
        assert_eq!(s.xi, Poly::one());
        assert!(!s.notes.is_empty());
    }

    #[test]
    fn ext_jacobi_ground_level() {
        let s = build_system(CaseTag::ExtJ, Params::new(2, rat(-5, 2), rat(-5, 2))).unwrap();
        let e: Vec<Rational> = (0..5).map(|k| energy(&s, k)).collect();
        assert_eq!(e, [0, 36, 64, 100, 144].map(int).to_vec());
    }

    #[test]
    fn nodal_xi_is_rejected() {
        // L1 with α < −1 puts a zero of L_ℓ^{(α)} on the negative axis
        let e = build_system(CaseTag::L1, Params::laguerre(2, rat(-5, 4))).unwrap_err();
        assert!(matches!(e, XError::DeformingFunctionZero(_)), "{e}");
    }
}
