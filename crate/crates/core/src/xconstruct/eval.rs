use serde::Serialize;

use super::polys::level_p;
use super::system::XSystem;
use super::{CaseTag, XError};
use crate::polycore::{int, to_f64, Prefactor};

/// Orthogonality weight `prefactor(η) / ξ(η)^2` in η-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDescriptor {
    pub prefactor: Prefactor,
    pub xi_power: i32,
}

impl WeightDescriptor {
    /// `ln w(η)` from accurate `(η, 1−η, 1+η)` and `ξ(η)`.
    pub fn ln_eval(&self, eta: f64, one_minus: f64, one_plus: f64, xi: f64) -> f64 {
        self.prefactor.ln_f64(eta, one_minus, one_plus) + f64::from(self.xi_power) * xi.abs().ln()
    }
}

/// The weight under which the `P_{ℓ,n}` (or the level functions) are
/// orthogonal.
pub fn weight_exponents(sys: &XSystem) -> WeightDescriptor {
    let (a, b, one) = (sys.alpha(), sys.beta(), int(1));
    let prefactor = match sys.case {
        CaseTag::L2 => Prefactor::exponential(int(-1)).times(&Prefactor::eta_power(-(a + &one))),
        CaseTag::L1 => Prefactor::exponential(int(-1)).times(&Prefactor::eta_power(a + &one)),
        CaseTag::J1 => Prefactor::one_minus_power(a + &one).times(&Prefactor::one_plus_power(-(b + &one))),
        CaseTag::J2 => Prefactor::one_minus_power(-(a + &one)).times(&Prefactor::one_plus_power(b + &one)),
        CaseTag::ExtJ => Prefactor::one_minus_power(-(a + &one)).times(&Prefactor::one_plus_power(-(b + &one))),
    };
    WeightDescriptor { prefactor, xi_power: -2 }
}

/// True iff the tabulated weight equals `e^{2W₀}/|η̇|` times the square of
/// the `p` prefactor, exponent by exponent.
pub fn weight_consistency(sys: &XSystem) -> bool {
    let derived = sys
        .prepotential
        .exp_prefactor()
        .powi(2)
        .times(&sys.coordinate.inverse_speed())
        .times(&sys.p_prefactor.powi(2));
    derived == weight_exponents(sys).prefactor
}

fn check_domain(sys: &XSystem, x: f64) -> Result<(), XError> {
    if sys.domain_x.contains_open(x) {
        Ok(())
    } else {
        Err(XError::OutOfDomain(x))
    }
}

/// `V(x) = Ẇ₀² + Ẅ₀ + (ξ′/ξ)[2η̇²(ξ′/ξ) − (2Ẇ₀η̇ + η̈) ± c₁] ± Ẽ`.
pub fn potential_eval(sys: &XSystem, x: f64) -> Result<f64, XError> {
    check_domain(sys, x)?;
    let eta = sys.coordinate.eta(x);
    let r = sys.xi.derive().eval_f64(eta) / sys.xi.eval_f64(eta);
    let eds = sys.coordinate.eta_dot_sq().eval_f64(eta);
    let drift = 2.0 * sys.q.eval_f64(eta) + sys.coordinate.eta_ddot().eval_f64(eta);
    let s = f64::from(sys.sign);
    let c1 = sys.c1.eval_f64(eta);
    Ok(sys.prepotential.riccati(x) + r * (2.0 * eds * r - drift + s * c1) + s * to_f64(&sys.e_tilde))
}

/// Unnormalized `φ(x) = e^{W₀}/ξ · prefactor · P` for a physical level,
/// evaluated in log space.
pub fn wavefunction_eval(sys: &XSystem, level: usize, x: f64) -> Result<f64, XError> {
    check_domain(sys, x)?;
    let (eta, om, op) = sys.coordinate.distances(x);
    let p = level_p(sys, level);
    let (ln_p, sign_p) = p.body.log_abs_eval_f64(eta);
    let (ln_xi, sign_xi) = sys.xi.log_abs_eval_f64(eta);
    let ln = sys.prepotential.eval(x) + p.prefactor.ln_f64(eta, om, op) + ln_p - ln_xi;
    Ok(sign_p * sign_xi * ln.exp())
}
