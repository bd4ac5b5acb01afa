use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::polycore::{int, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LagSpec {
    pub n: usize,
    #[serde(serialize_with = "crate::serial::rational")]
    pub alpha: Rational,
}

impl LagSpec {
    pub fn new(n: usize, alpha: Rational) -> Self {
        LagSpec { n, alpha }
    }

    pub fn poly(&self) -> Poly {
        laguerre(self.n, &self.alpha)
    }
}

/// Generalized Laguerre polynomial `L_n^{(α)}(η)`, built from the three-term
/// recurrence `(k+1) L_{k+1} = (2k+1+α−η) L_k − (k+α) L_{k−1}`.
///
/// The result is checked against the Laguerre differential equation before
/// it is returned.
pub fn laguerre(n: usize, alpha: &Rational) -> Poly {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Rational), Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, alpha.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let built = build(n, alpha);
    let mut map = cache.lock().unwrap();
    if map.len() >= 4096 {
        map.clear();
    }
    map.insert(key, built.clone());
    built
}

fn build(n: usize, alpha: &Rational) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::linear(alpha + int(1), int(-1));
    for k in 1..n {
        let kk = int(k as i64);
        let lin = Poly::linear(int(2 * k as i64 + 1) + alpha, int(-1));
        let next = (&(&lin * &cur) - &prev.scale(&(&kk + alpha))).scale(&(kk + int(1)).recip());
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur.degree(), Some(n));
    assert!(
        laguerre_ode_residual(&cur, n, alpha).is_zero(),
        "Laguerre recurrence failed its ODE self-check"
    );
    cur
}

/// `η L'' + (α+1−η) L' + n L`.
pub fn laguerre_ode_residual(l: &Poly, n: usize, alpha: &Rational) -> Poly {
    let d1 = l.derive();
    let d2 = d1.derive();
    let coef = Poly::linear(alpha + int(1), int(-1));
    &(&(&Poly::eta() * &d2) + &(&coef * &d1)) + &l.scale(&int(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{binomial, rat};
    use num_traits::One;

    /// Σ_k (−1)^k C(n+α, n−k) η^k / k!
    fn series(n: usize, alpha: &Rational) -> Poly {
        let mut fact = Rational::one();
        let mut coeffs = Vec::new();
        for k in 0..=n {
            if k > 0 {
                fact *= int(k as i64);
            }
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            coeffs.push(sign * binomial(&(int(n as i64) + alpha), n - k) / &fact);
        }
        Poly::new(coeffs)
    }

    #[test]
    fn low_degrees() {
        assert_eq!(laguerre(0, &rat(7, 3)), Poly::one());
        let a = rat(-2, 5);
        assert_eq!(laguerre(1, &a), Poly::linear(&a + int(1), int(-1)));
        assert_eq!(laguerre(1, &a), series(1, &a));
    }

    #[test]
    fn degree_two_at_minus_five_halves() {
        let l = laguerre(2, &rat(-5, 2));
        assert_eq!(l, Poly::new(vec![rat(3, 8), rat(1, 2), rat(1, 2)]));
        assert!(laguerre_ode_residual(&l, 2, &rat(-5, 2)).is_zero());
    }

    #[test]
    fn recurrence_matches_series_definition() {
        for alpha in [rat(0, 1), rat(-3, 1), rat(5, 7), rat(-11, 2)] {
            for n in 0..=10 {
                assert_eq!(laguerre(n, &alpha), series(n, &alpha), "n={n} α={alpha}");
            }
        }
    }
}
