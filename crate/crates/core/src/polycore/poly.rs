//! Dense univariate polynomials in η over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{int, lcm_denominators, to_f64, Rational};

/// Polynomial with coefficients in ascending powers of η.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and two equal polynomials have identical vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Poly, q: &Poly, op: ArithOp) -> Poly {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

pub fn poly_derive(p: &Poly) -> Poly {
    p.derive()
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial η.
    pub fn eta() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b η`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in binary64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Coefficients rounded to binary64, for repeated floating evaluation.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn derive(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-η)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Multiplication by η^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / lead;
            let shift = top - d_deg;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Scales by a positive rational so that the coefficients are coprime
    /// integers. Signs (and so root locations and Sturm signs) are kept.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = lcm_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    /// Sign of `p(x)`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval(x))
    }

    /// Sign as η → +∞ (`positive == true`) or η → −∞.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match (self.degree(), self.leading()) {
            (Some(d), Some(l)) => {
                let s = sign_of(l);
                if !positive && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => 0,
        }
    }

    /// `(ln |p(x)|, sign p(x))` in binary64, falling back to the leading term
    /// when the Horner value overflows.
    pub fn log_abs_eval_f64(&self, x: f64) -> (f64, f64) {
        let v = self.eval_f64(x);
        if v.is_finite() {
            return (v.abs().ln(), v.signum());
        }
        let deg = self.degree().unwrap_or(0);
        let lead = self.leading().map(to_f64).unwrap_or(0.0);
        let sign = lead.signum() * if x < 0.0 && deg % 2 == 1 { -1.0 } else { 1.0 };
        (lead.abs().ln() + deg as f64 * x.abs().ln(), sign)
    }
}

pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})η")?,
                _ => write!(f, "({c})η^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as the list of ascending-power coefficients in `p/q` form.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // clear denominators so the inner loop is integer-only
        let integral = |p: &Poly| {
            let d = lcm_denominators(&p.coeffs);
            let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * &d).to_integer()).collect();
            (ints, d)
        };
        let (a, da) = integral(self);
        let (b, db) = integral(rhs);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let den = da * db;
        Poly::new(out.into_iter().map(|c| Rational::new(c, den.clone())).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn arithmetic_examples() {
        let a = Poly::from_ints(&[2, 1]);
        let b = Poly::from_ints(&[0, -1]);
        assert_eq!(poly_arith(&a, &b, ArithOp::Add), Poly::from_ints(&[2]));

        let one_plus = Poly::from_ints(&[1, 1]);
        let one_minus = Poly::from_ints(&[1, -1]);
        assert_eq!(
            poly_arith(&one_plus, &one_minus, ArithOp::Mul),
            Poly::from_ints(&[1, 0, -1])
        );

        let q = p(&[(3, 8), (1, 2), (1, 2)]);
        let r = p(&[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(poly_arith(&q, &r, ArithOp::Sub), p(&[(3, 8), (1, 2)]));
    }

    #[test]
    fn derivative_examples() {
        assert!(poly_derive(&Poly::from_ints(&[7])).is_zero());
        assert_eq!(poly_derive(&Poly::from_ints(&[2, 1])), Poly::from_ints(&[1]));
        let q = p(&[(3, 8), (1, 2), (1, 2)]);
        assert_eq!(poly_derive(&q), p(&[(1, 2), (1, 1)]));
    }

    #[test]
    fn zero_poly_has_no_degree() {
        let z = Poly::from_ints(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.coeffs().len(), 0);
    }

    #[test]
    fn division_reconstructs_dividend() {
        let a = Poly::from_ints(&[-1, 0, 3, 5, 2]);
        let b = Poly::from_ints(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let f = Poly::from_ints(&[1, 1]); // 1 + η
        let a = &f * &Poly::from_ints(&[-2, 1]);
        let b = &f * &Poly::from_ints(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn primitive_part_keeps_sign() {
        let q = p(&[(-3, 4), (1, 2)]);
        assert_eq!(q.primitive_part(), Poly::from_ints(&[-3, 2]));
    }

    #[test]
    fn reflect_flips_odd_powers() {
        assert_eq!(
            Poly::from_ints(&[1, 2, 3, 4]).reflect(),
            Poly::from_ints(&[1, -2, 3, -4])
        );
    }

    #[test]
    fn sign_at_infinity_uses_degree_parity() {
        let q = Poly::from_ints(&[0, 0, 0, -1]);
        assert_eq!(q.sign_at_infinity(true), -1);
        assert_eq!(q.sign_at_infinity(false), 1);
    }
}
