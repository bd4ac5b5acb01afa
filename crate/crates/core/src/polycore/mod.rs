//! Exact scalar and polynomial algebra: rationals, dense polynomials in η,
//! Sturm root counting, and quasi-polynomial calculus.

pub mod interval;
pub mod poly;
pub mod quasi;
pub mod rational;
pub mod sturm;

pub use interval::{Bound, Interval, RealInterval};
pub use poly::{poly_arith, poly_derive, ArithOp, Poly};
pub use quasi::{quasi_derive, quasi_extract, Prefactor, QuasiPoly};
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use sturm::{sturm_count, SturmChain};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("indeterminate root count")]
    IndeterminateRootCount,
    #[error("incompatible prefactor")]
    IncompatiblePrefactor,
    #[error("empty interval")]
    EmptyInterval,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
