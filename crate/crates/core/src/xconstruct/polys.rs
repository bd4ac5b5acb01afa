use num_traits::One;

use super::system::XSystem;
use super::{CaseTag, Fault, Params, XError};
use crate::classical::{jacobi_poly as jac, laguerre as lag};
use crate::polycore::{int, Poly, Prefactor, QuasiPoly, Rational};

fn one_plus() -> Poly {
    Poly::from_ints(&[1, 1])
}

fn one_minus() -> Poly {
    Poly::from_ints(&[1, -1])
}

fn one_minus_sq() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

/// The J1 polynomial built directly from parameters, so the J2 mirror can
/// reuse it with α and β exchanged.
fn j1_formula(n: usize, p: &Params) -> Poly {
    let (a, b, one) = (&p.alpha, &p.beta, int(1));
    let xi = jac(p.ell, a, b);
    let nn = int(n as i64);
    &(&(&one_plus() * &jac(n, a, &-b)) * &xi.derive())
        - &(&jac(n, &(a + &one), &(-b - &one)) * &xi).scale(&(nn - b))
}

fn j1_hos(n: usize, p: &Params) -> Poly {
    let (a, b, one) = (&p.alpha, &p.beta, int(1));
    let l = int(p.ell as i64);
    let v = jac(n, a, &-b);
    &(&v * &jac(p.ell, &(a + &one), &(b - &one))).scale(&(l + b))
        - &(&(&one_plus() * &v.derive()) * &jac(p.ell, a, b))
}

/// `P_{ℓ,n}` in its formula-literal normalization (the overall constant of
/// `p` is not folded in).
pub fn exceptional_poly(sys: &XSystem, n: usize) -> Poly {
    exceptional_poly_with(sys, n, None)
}

pub fn exceptional_poly_with(sys: &XSystem, n: usize, fault: Option<Fault>) -> Poly {
    let (a, b, one) = (sys.alpha(), sys.beta(), int(1));
    let xi = &sys.xi;
    let dxi = xi.derive();
    let nn = int(n as i64);
    match sys.case {
        CaseTag::L2 => {
            let first = &(&Poly::eta() * &lag(n, &-a)) * &dxi;
            let second = (&lag(n, &(-a - &one)) * xi).scale(&(a - &nn));
            if fault == Some(Fault::L2SignFlip) {
                &first - &second
            } else {
                &first + &second
            }
        }
        CaseTag::L1 => &(&lag(n, a) * &dxi) + &(&lag(n, &(a + &one)) * xi),
        CaseTag::J1 => j1_formula(n, &sys.params),
        CaseTag::J2 => j1_formula(n, &sys.params.swapped()).reflect(),
        CaseTag::ExtJ => {
            let v = jac(n, &-a, &-b);
            let lin = Poly::linear(b - a, -(a + b));
            let bracket = &(&lin * &v) - &(&one_minus_sq() * &v.derive());
            &(&(&one_minus_sq() * &v) * &dxi) + &(&bracket * xi)
        }
    }
}

/// The bilinear form in `ξ` at shifted parameters.
pub fn hos_poly(sys: &XSystem, n: usize) -> Poly {
    let (a, b, one) = (sys.alpha(), sys.beta(), int(1));
    let l = sys.ell();
    let ll = int(l as i64);
    match sys.case {
        CaseTag::L2 => {
            let v = lag(n, &-a);
            &(&v * &lag(l, &(a - &one))).scale(&(a + &ll))
                - &(&(&Poly::eta() * &v.derive()) * &lag(l, a))
        }
        CaseTag::L1 => {
            let v = lag(n, a);
            &(&v * &lag(l, &(a + &one)).reflect()) - &(&v.derive() * &sys.xi)
        }
        CaseTag::J1 => j1_hos(n, &sys.params),
        CaseTag::J2 => j1_hos(n, &sys.params.swapped()).reflect(),
        CaseTag::ExtJ => {
            let nn = int(n as i64);
            let v = jac(n, &-a, &-b);
            let shifted = jac(l, &(a + &one), &(b - &one));
            &(&(&one_minus() * &v) * &shifted).scale(&(&ll + b))
                + &(&(&one_plus() * &jac(n, &(-a - &one), &(&one - b))) * &sys.xi).scale(&(nn - a))
        }
    }
}

/// The constant `c` with `p = c·q`.
pub fn proportionality(p: &Poly, q: &Poly) -> Result<Rational, XError> {
    if p.is_zero() || q.is_zero() || p.degree() != q.degree() {
        return Err(XError::NotProportional);
    }
    let d = q.degree().unwrap_or(0);
    let c = p.coeff(d) / q.coeff(d);
    if *p == q.scale(&c) {
        Ok(c)
    } else {
        Err(XError::NotProportional)
    }
}

/// Polynomial part of physical level `level`: `P_{ℓ,level}`, except for the
/// extended Jacobi case where level 0 is the constant and level k ≥ 1 is
/// `P_{ℓ,k−1}`.
pub fn level_poly(sys: &XSystem, level: usize) -> Poly {
    match (sys.case, level) {
        (CaseTag::ExtJ, 0) => Poly::one(),
        (CaseTag::ExtJ, k) => exceptional_poly(sys, k - 1),
        (_, n) => exceptional_poly(sys, n),
    }
}

/// `p(η)` of a physical level, up to its overall constant.
pub fn level_p(sys: &XSystem, level: usize) -> QuasiPoly {
    let prefactor = if sys.case == CaseTag::ExtJ { Prefactor::unit() } else { sys.p_prefactor.clone() };
    QuasiPoly::new(prefactor, level_poly(sys, level))
}

/// `p = ξ′F + ξG` from the generic ansatz, with `F = c₂𝒱` and
/// `G = (c₁ − c₂′)𝒱 − c₂𝒱′`, and `𝒱` the confluent or ordinary
/// hypergeometric solution matching each case. Independent of the closed
/// forms used by [`exceptional_poly`].
pub fn derivation_p(sys: &XSystem, n: usize) -> QuasiPoly {
    let (a, b) = (sys.alpha(), sys.beta());
    let cal_v = match sys.case {
        CaseTag::L2 => QuasiPoly::new(Prefactor::exponential(int(-1)), lag(n, &-a)),
        CaseTag::L1 => QuasiPoly::new(Prefactor::eta_power(a.clone()), lag(n, a)),
        CaseTag::J1 => QuasiPoly::new(Prefactor::one_minus_power(a.clone()), jac(n, a, &-b)),
        CaseTag::J2 => QuasiPoly::new(Prefactor::one_plus_power(b.clone()), jac(n, &-a, b)),
        CaseTag::ExtJ => QuasiPoly::plain(jac(n, &-a, &-b)),
    };
    let f = cal_v.mul_poly(&sys.c2);
    let g = cal_v
        .mul_poly(&(&sys.c1 - &sys.c2.derive()))
        .sub(&cal_v.derive().mul_poly(&sys.c2))
        .expect("prefactors of 𝒱 and 𝒱′ are compatible");
    f.mul_poly(&sys.xi.derive()).add(&g.mul_poly(&sys.xi)).expect("compatible prefactors")
}

/// The J2 exceptional polynomial assembled directly from group-(iii)
/// parameters, `(1−η)P_n^{(−α,β)}ξ̂′ + (n−α)P_n^{(−α−1,β+1)}ξ̂` with
/// `ξ̂ = P_ℓ^{(α,β)}`, without going through the J1 formula.
pub fn j2_direct(params: &Params, n: usize) -> Poly {
    let (a, b, one) = (&params.alpha, &params.beta, int(1));
    let xi_hat = jac(params.ell, a, b);
    let nn = int(n as i64);
    &(&(&one_minus() * &jac(n, &-a, b)) * &xi_hat.derive())
        + &(&jac(n, &(-a - &one), &(b + &one)) * &xi_hat).scale(&(nn - a))
}

/// Sign relating the mirror-built J2 polynomial to [`j2_direct`]:
/// `exceptional_poly(J2) = (−1)^{n+ℓ+1} · j2_direct`.
pub fn j2_direct_sign(ell: usize, n: usize) -> Rational {
    if (n + ell + 1).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
