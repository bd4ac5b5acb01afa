use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;

use crate::polycore::rational::binomial;
use crate::polycore::{int, rat, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacSpec {
    pub n: usize,
    #[serde(serialize_with = "crate::serial::rational")]
    pub alpha: Rational,
    #[serde(serialize_with = "crate::serial::rational")]
    pub beta: Rational,
}

impl JacSpec {
    pub fn new(n: usize, alpha: Rational, beta: Rational) -> Self {
        JacSpec { n, alpha, beta }
    }

    pub fn poly(&self) -> JacobiPoly {
        jacobi(self.n, &self.alpha, &self.beta)
    }
}

/// A Jacobi polynomial together with a flag recording whether its nominal
/// leading coefficient `(n+α+β+1)_n / (2^n n!)` vanished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiPoly {
    pub poly: Poly,
    pub degenerate: bool,
}

/// `P_n^{(α,β)}(η)` from the finite sum
/// `Σ_s C(n+α, n−s) C(n+β, s) ((η−1)/2)^s ((η+1)/2)^{n−s}`,
/// which is polynomial in α and β and so valid at every parameter value,
/// including those where the three-term recurrence divides by zero.
pub fn jacobi(n: usize, alpha: &Rational, beta: &Rational) -> JacobiPoly {
    type Key = (usize, Rational, Rational);
    static CACHE: OnceLock<Mutex<HashMap<Key, JacobiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, alpha.clone(), beta.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let built = build(n, alpha, beta);
    let mut map = cache.lock().unwrap();
    if map.len() >= CACHE_LIMIT {
        map.clear();
    }
    map.insert(key, built.clone());
    built
}

const CACHE_LIMIT: usize = 4096;

fn build(n: usize, alpha: &Rational, beta: &Rational) -> JacobiPoly {
    let nn = int(n as i64);
    let down = Poly::linear(rat(-1, 2), rat(1, 2));
    let up = Poly::linear(rat(1, 2), rat(1, 2));
    let mut down_pows = vec![Poly::one()];
    let mut up_pows = vec![Poly::one()];
    for k in 1..=n {
        down_pows.push(&down_pows[k - 1] * &down);
        up_pows.push(&up_pows[k - 1] * &up);
    }
    let mut sum = Poly::zero();
    for s in 0..=n {
        let c = binomial(&(&nn + alpha), n - s) * binomial(&(&nn + beta), s);
        if c.is_zero() {
            continue;
        }
        sum = &sum + &(&down_pows[s] * &up_pows[n - s]).scale(&c);
    }
    assert!(
        jacobi_ode_residual(&sum, n, alpha, beta).is_zero(),
        "Jacobi construction failed its ODE self-check"
    );
    let degenerate = sum.degree() != Some(n);
    JacobiPoly { poly: sum, degenerate }
}

/// Shorthand when the degenerate flag is not needed.
pub fn jacobi_poly(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    jacobi(n, alpha, beta).poly
}

/// Nominal leading coefficient `Π_{k=1..n} (n+α+β+k) / (2^n n!)`.
pub fn jacobi_leading(n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let base = int(n as i64) + alpha + beta;
    (1..=n).fold(int(1), |acc, k| acc * (&base + int(k as i64)) / int(2 * k as i64))
}

/// `(1−η²) P'' + (β−α−(α+β+2)η) P' + n(n+α+β+1) P`.
pub fn jacobi_ode_residual(p: &Poly, n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    let d1 = p.derive();
    let d2 = d1.derive();
    let nn = int(n as i64);
    let first = Poly::linear(beta - alpha, -(alpha + beta + int(2)));
    let eig = &nn * (&nn + alpha + beta + int(1));
    &(&(&Poly::from_ints(&[1, 0, -1]) * &d2) + &(&first * &d1)) + &p.scale(&eig)
}
