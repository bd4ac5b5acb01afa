//! Quasi-polynomials `e^{sη} η^a (1−η)^b (1+η)^c · P(η)` and their calculus.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly::Poly;
use super::rational::{as_nonneg_integer, int, to_f64, Rational};
use super::PolyError;

/// The prefactor `e^{sη} η^a (1−η)^b (1+η)^c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Prefactor {
    #[serde(serialize_with = "ser_rat")]
    pub exp: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub eta: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub one_minus: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub one_plus: Rational,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Prefactor {
    pub fn unit() -> Self {
        Prefactor::default()
    }

    pub fn exponential(s: Rational) -> Self {
        Prefactor { exp: s, ..Default::default() }
    }

    pub fn eta_power(a: Rational) -> Self {
        Prefactor { eta: a, ..Default::default() }
    }

    pub fn one_minus_power(b: Rational) -> Self {
        Prefactor { one_minus: b, ..Default::default() }
    }

    pub fn one_plus_power(c: Rational) -> Self {
        Prefactor { one_plus: c, ..Default::default() }
    }

    /// Product of two prefactors (exponents add).
    pub fn times(&self, other: &Prefactor) -> Prefactor {
        Prefactor {
            exp: &self.exp + &other.exp,
            eta: &self.eta + &other.eta,
            one_minus: &self.one_minus + &other.one_minus,
            one_plus: &self.one_plus + &other.one_plus,
        }
    }

    pub fn powi(&self, k: i64) -> Prefactor {
        let k = int(k);
        Prefactor {
            exp: &self.exp * &k,
            eta: &self.eta * &k,
            one_minus: &self.one_minus * &k,
            one_plus: &self.one_plus * &k,
        }
    }

    /// `ln` of the prefactor, given η, 1−η and 1+η separately so that callers
    /// near an endpoint can pass accurately computed distances.
    pub fn ln_f64(&self, eta: f64, one_minus: f64, one_plus: f64) -> f64 {
        let term = |e: &Rational, v: f64| if e.is_zero() { 0.0 } else { to_f64(e) * v.ln() };
        to_f64(&self.exp) * eta
            + term(&self.eta, eta)
            + term(&self.one_minus, one_minus)
            + term(&self.one_plus, one_plus)
    }

    /// Largest common factor of two prefactors, i.e. the one both divide
    /// into with nonnegative integer gaps.
    pub fn common_with(&self, other: &Prefactor) -> Result<Prefactor, PolyError> {
        if self.exp != other.exp {
            return Err(PolyError::IncompatiblePrefactor);
        }
        let pick = |a: &Rational, b: &Rational| -> Result<Rational, PolyError> {
            if !(a - b).is_integer() {
                return Err(PolyError::IncompatiblePrefactor);
            }
            Ok(if a < b { a.clone() } else { b.clone() })
        };
        Ok(Prefactor {
            exp: self.exp.clone(),
            eta: pick(&self.eta, &other.eta)?,
            one_minus: pick(&self.one_minus, &other.one_minus)?,
            one_plus: pick(&self.one_plus, &other.one_plus)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiPoly {
    pub prefactor: Prefactor,
    pub body: Poly,
}

fn one_minus_eta() -> Poly {
    Poly::from_ints(&[1, -1])
}

fn one_plus_eta() -> Poly {
    Poly::from_ints(&[1, 1])
}

impl QuasiPoly {
    pub fn new(prefactor: Prefactor, body: Poly) -> Self {
        QuasiPoly { prefactor, body }
    }

    pub fn plain(body: Poly) -> Self {
        QuasiPoly { prefactor: Prefactor::unit(), body }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// d/dη. Each nonzero power exponent is lowered by exactly one; zero
    /// exponents stay zero.
    pub fn derive(&self) -> QuasiPoly {
        let f = &self.prefactor;
        let has = |e: &Rational| !e.is_zero();
        let eta_f = if has(&f.eta) { Poly::eta() } else { Poly::one() };
        let om_f = if has(&f.one_minus) { one_minus_eta() } else { Poly::one() };
        let op_f = if has(&f.one_plus) { one_plus_eta() } else { Poly::one() };
        let p = &self.body;

        // lowered prefactor times the full product-rule bracket
        let all = &(&eta_f * &om_f) * &op_f;
        let mut bracket = &all * &p.derive();
        if has(&f.exp) {
            bracket = &bracket + &(&all * p).scale(&f.exp);
        }
        if has(&f.eta) {
            bracket = &bracket + &(&(&om_f * &op_f) * p).scale(&f.eta);
        }
        if has(&f.one_minus) {
            bracket = &bracket - &(&(&eta_f * &op_f) * p).scale(&f.one_minus);
        }
        if has(&f.one_plus) {
            bracket = &bracket + &(&(&eta_f * &om_f) * p).scale(&f.one_plus);
        }
        let lower = |e: &Rational| if has(e) { e - int(1) } else { e.clone() };
        QuasiPoly {
            prefactor: Prefactor {
                exp: f.exp.clone(),
                eta: lower(&f.eta),
                one_minus: lower(&f.one_minus),
                one_plus: lower(&f.one_plus),
            },
            body: bracket,
        }
    }

    /// The polynomial `B` with `target · B == self`.
    pub fn extract(&self, target: &Prefactor) -> Result<Poly, PolyError> {
        let f = &self.prefactor;
        if f.exp != target.exp {
            return Err(PolyError::IncompatiblePrefactor);
        }
        let gap = |a: &Rational, b: &Rational| {
            as_nonneg_integer(&(a - b)).ok_or(PolyError::IncompatiblePrefactor)
        };
        let ga = gap(&f.eta, &target.eta)?;
        let gb = gap(&f.one_minus, &target.one_minus)?;
        let gc = gap(&f.one_plus, &target.one_plus)?;
        let factor = &(&Poly::eta().pow(ga) * &one_minus_eta().pow(gb)) * &one_plus_eta().pow(gc);
        Ok(&factor * &self.body)
    }

    /// Rewrites `self` over a prefactor it is divisible by.
    pub fn rebase(&self, target: &Prefactor) -> Result<QuasiPoly, PolyError> {
        Ok(QuasiPoly { prefactor: target.clone(), body: self.extract(target)? })
    }

    pub fn add(&self, other: &QuasiPoly) -> Result<QuasiPoly, PolyError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let common = self.prefactor.common_with(&other.prefactor)?;
        let body = &self.extract(&common)? + &other.extract(&common)?;
        Ok(QuasiPoly { prefactor: common, body })
    }

    pub fn sub(&self, other: &QuasiPoly) -> Result<QuasiPoly, PolyError> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul_poly(&self, p: &Poly) -> QuasiPoly {
        QuasiPoly { prefactor: self.prefactor.clone(), body: &self.body * p }
    }

    pub fn mul(&self, other: &QuasiPoly) -> QuasiPoly {
        QuasiPoly {
            prefactor: self.prefactor.times(&other.prefactor),
            body: &self.body * &other.body,
        }
    }

    pub fn scale(&self, c: &Rational) -> QuasiPoly {
        QuasiPoly { prefactor: self.prefactor.clone(), body: self.body.scale(c) }
    }

    /// Floating value at η (requires the powers to be real there).
    pub fn eval_f64(&self, eta: f64) -> f64 {
        let ln = self.prefactor.ln_f64(eta, 1.0 - eta, 1.0 + eta);
        ln.exp() * self.body.eval_f64(eta)
    }

    pub fn has_negative_exponent(&self) -> bool {
        let f = &self.prefactor;
        f.eta.is_negative() || f.one_minus.is_negative() || f.one_plus.is_negative()
    }
}

pub fn quasi_derive(q: &QuasiPoly) -> QuasiPoly {
    q.derive()
}

pub fn quasi_extract(q: &QuasiPoly, target: &Prefactor) -> Result<Poly, PolyError> {
    q.extract(target)
}
