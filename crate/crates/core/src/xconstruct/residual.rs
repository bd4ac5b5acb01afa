use super::polys::exceptional_poly;
use super::system::{energy_of_poly_index, XSystem};
use super::XError;
use crate::polycore::{int, Poly, QuasiPoly, Rational};

/// `c₂ξ″ + c₁ξ′ + Ẽξ`; zero for every valid system.
pub fn xi_residual(sys: &XSystem) -> Poly {
    let d1 = sys.xi.derive();
    let d2 = d1.derive();
    &(&(&sys.c2 * &d2) + &(&sys.c1 * &d1)) + &sys.xi.scale(&sys.e_tilde)
}

/// The constraint on `p` multiplied through by `ξ`,
/// `ξη̇²p″ + (2Q+η̈)ξp′ − 2η̇²ξ′p′ + 𝓔ξp`, with the common prefactor
/// cleared. Zero iff `p` solves the constraint at energy `e`.
pub fn ode_residual_of(sys: &XSystem, p: &QuasiPoly, e: &Rational) -> Result<Poly, XError> {
    let eds = sys.coordinate.eta_dot_sq();
    let drift = &sys.q.scale(&int(2)) + &sys.coordinate.eta_ddot();
    let xi = &sys.xi;
    let dp = p.derive();
    let ddp = dp.derive();
    let terms = [
        ddp.mul_poly(&(xi * &eds)),
        dp.mul_poly(&(&(&drift * xi) - &(&eds * &xi.derive()).scale(&int(2)))),
        p.mul_poly(&xi.scale(e)),
    ];
    let mut sum = terms[0].clone();
    for t in &terms[1..] {
        sum = sum.add(t).map_err(|_| XError::ResidualNotQuasi)?;
    }
    Ok(sum.body)
}

/// Residual for `P_{ℓ,n}` at its energy.
pub fn ode_residual(sys: &XSystem, n: usize) -> Result<Poly, XError> {
    let p = QuasiPoly::new(sys.p_prefactor.clone(), exceptional_poly(sys, n));
    ode_residual_of(sys, &p, &energy_of_poly_index(sys, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;
    use crate::xconstruct::{build_system, CaseTag, Params};

    #[test]
    fn worked_residuals_vanish() {
        let s = build_system(CaseTag::L2, Params::laguerre(1, int(-2))).unwrap();
        assert!(ode_residual(&s, 0).unwrap().is_zero());
        let s = build_system(CaseTag::J1, Params::new(1, int(0), int(-2))).unwrap();
        assert!(ode_residual(&s, 1).unwrap().is_zero());
    }

    #[test]
    fn wrong_energy_leaves_a_residual() {
        let s = build_system(CaseTag::L2, Params::laguerre(1, int(-2))).unwrap();
        let p = QuasiPoly::new(s.p_prefactor.clone(), exceptional_poly(&s, 0));
        assert!(!ode_residual_of(&s, &p, &int(5)).unwrap().is_zero());
    }

    #[test]
    fn extj_constant_ground_state() {
        let s = build_system(CaseTag::ExtJ, Params::new(2, rat(-5, 2), rat(-5, 2))).unwrap();
        assert!(ode_residual_of(&s, &QuasiPoly::plain(Poly::one()), &int(0)).unwrap().is_zero());
    }
}
