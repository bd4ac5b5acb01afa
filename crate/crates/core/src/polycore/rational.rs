//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, positive
//! denominator, arbitrary precision. This module adds parsing from the
//! textual forms accepted on the command line and a few small helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical text form: `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p/q`, an integer, or a decimal literal (with optional exponent)
/// into an exact rational. `"0.1"` is exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let s = text.trim();
    let bad = || PolyError::Parse(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{whole}{frac}");
    let mut numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad())?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Generalized binomial coefficient `C(x, k) = x (x-1) ... (x-k+1) / k!`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

/// Floor of a rational as a machine integer.
pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("integer part fits in i64")
}

/// Integer part toward zero.
pub fn trunc_i64(r: &Rational) -> i64 {
    r.trunc().to_integer().to_i64().expect("integer part fits in i64")
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// Returns `Some(n)` if `r` is a nonnegative integer.
pub fn as_nonneg_integer(r: &Rational) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_usize()
    } else {
        None
    }
}

/// Least common multiple of the denominators of `values`.
pub(crate) fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_forms() {
        assert_eq!(parse_rational("-5/2").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" 3 ").unwrap(), int(3));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("-2.50").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("1.25E2").unwrap(), int(125));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1/0", "1.2.3", "--1", "1e", "/2"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn binomial_matches_product_form() {
        // C(l + a, l) = prod_{k=1..l} (a + k) / k
        let a = rat(-5, 2);
        let direct = binomial(&(int(2) + &a), 2);
        let product = (&a + int(1)) * (&a + int(2)) / int(2);
        assert_eq!(direct, product);
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(3), 0), int(1));
    }

    #[test]
    fn floor_and_trunc_differ_for_negatives() {
        assert_eq!(floor_i64(&rat(-3, 2)), -2);
        assert_eq!(trunc_i64(&rat(-3, 2)), -1);
        assert_eq!(floor_i64(&rat(5, 2)), 2);
    }
}
