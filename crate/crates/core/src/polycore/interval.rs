use std::fmt;

use serde::Serialize;

use super::rational::Rational;
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    PosInfinity,
    Finite { value: Rational, closed: bool },
}

impl Bound {
    pub fn open(value: Rational) -> Self {
        Bound::Finite { value, closed: false }
    }

    pub fn closed(value: Rational) -> Self {
        Bound::Finite { value, closed: true }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Bound::Finite { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// An interval of the real η-line; either end may be infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Bound,
    hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Result<Self, PolyError> {
        let ok = match (&lo, &hi) {
            (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => false,
            (Bound::Finite { value: a, .. }, Bound::Finite { value: b, .. }) => a < b,
            _ => true,
        };
        if ok {
            Ok(Interval { lo, hi })
        } else {
            Err(PolyError::EmptyInterval)
        }
    }

    /// `(a, b)`. Panics unless `a < b`.
    pub fn open(a: Rational, b: Rational) -> Self {
        Interval::new(Bound::open(a), Bound::open(b)).expect("a < b")
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Interval::new(Bound::closed(a), Bound::closed(b)).expect("a < b")
    }

    /// `(a, +∞)`.
    pub fn above(a: Rational) -> Self {
        Interval { lo: Bound::open(a), hi: Bound::PosInfinity }
    }

    /// `(−∞, b)`.
    pub fn below(b: Rational) -> Self {
        Interval { lo: Bound::NegInfinity, hi: Bound::open(b) }
    }

    pub fn real_line() -> Self {
        Interval { lo: Bound::NegInfinity, hi: Bound::PosInfinity }
    }

    pub fn lo(&self) -> &Bound {
        &self.lo
    }

    pub fn hi(&self) -> &Bound {
        &self.hi
    }

    /// Same endpoints with both finite ends closed.
    pub fn closure(&self) -> Self {
        let close = |b: &Bound| match b {
            Bound::Finite { value, .. } => Bound::closed(value.clone()),
            other => other.clone(),
        };
        Interval { lo: close(&self.lo), hi: close(&self.hi) }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.value().is_some() && self.hi.value().is_some()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above_lo = match &self.lo {
            Bound::NegInfinity => true,
            Bound::PosInfinity => false,
            Bound::Finite { value, closed } => x > value || (*closed && x == value),
        };
        let below_hi = match &self.hi {
            Bound::PosInfinity => true,
            Bound::NegInfinity => false,
            Bound::Finite { value, closed } => x < value || (*closed && x == value),
        };
        above_lo && below_hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Bound::NegInfinity => write!(f, "(-inf")?,
            Bound::PosInfinity => write!(f, "(+inf")?,
            Bound::Finite { value, closed } => write!(f, "{}{}", if *closed { '[' } else { '(' }, value)?,
        }
        write!(f, ", ")?;
        match &self.hi {
            Bound::PosInfinity => write!(f, "+inf)"),
            Bound::NegInfinity => write!(f, "-inf)"),
            Bound::Finite { value, closed } => write!(f, "{}{}", value, if *closed { ']' } else { ')' }),
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Open interval of the real x-line with floating endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RealInterval {
    #[serde(serialize_with = "crate::serial::f64")]
    pub lo: f64,
    #[serde(serialize_with = "crate::serial::f64")]
    pub hi: f64,
}

impl RealInterval {
    pub fn contains_open(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }
}
