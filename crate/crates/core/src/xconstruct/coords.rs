use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::polycore::{int, rat, to_f64, Interval, Poly, Prefactor, Rational, RealInterval};

/// Sinusoidal coordinate: `η = x²` on (0, ∞) or `η = cos 2x` on (0, π/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    Square,
    Cosine,
}

impl Coordinate {
    pub fn eta(self, x: f64) -> f64 {
        self.distances(x).0
    }

    /// `(η, 1−η, 1+η)`, with the two distances computed without
    /// cancellation near the ends of the Jacobi interval.
    pub fn distances(self, x: f64) -> (f64, f64, f64) {
        match self {
            Coordinate::Square => {
                let e = x * x;
                (e, 1.0 - e, 1.0 + e)
            }
            Coordinate::Cosine => {
                let (s, c) = x.sin_cos();
                ((2.0 * x).cos(), 2.0 * s * s, 2.0 * c * c)
            }
        }
    }

    pub fn eta_dot_sq(self) -> Poly {
        match self {
            Coordinate::Square => Poly::from_ints(&[0, 4]),
            Coordinate::Cosine => Poly::from_ints(&[4, 0, -4]),
        }
    }

    /// `η̈ = ½ d(η̇²)/dη`.
    pub fn eta_ddot(self) -> Poly {
        self.eta_dot_sq().derive().scale(&rat(1, 2))
    }

    pub fn domain_eta(self) -> Interval {
        match self {
            Coordinate::Square => Interval::above(int(0)),
            Coordinate::Cosine => Interval::open(int(-1), int(1)),
        }
    }

    pub fn domain_x(self) -> RealInterval {
        match self {
            Coordinate::Square => RealInterval { lo: 0.0, hi: f64::INFINITY },
            Coordinate::Cosine => RealInterval { lo: 0.0, hi: FRAC_PI_2 },
        }
    }

    /// `1/|η̇|` as an η-prefactor, up to a constant factor.
    pub fn inverse_speed(self) -> Prefactor {
        match self {
            Coordinate::Square => Prefactor::eta_power(rat(-1, 2)),
            Coordinate::Cosine => Prefactor::one_minus_power(rat(-1, 2)).times(&Prefactor::one_plus_power(rat(-1, 2))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrepotentialKind {
    LaguerreLike,
    JacobiLike,
}

/// The zero-th order prepotential `W₀(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrepotentialDescriptor {
    /// `W₀ = s·x²/2 − k·ln x`.
    LaguerreLike {
        sign: i8,
        #[serde(serialize_with = "crate::serial::rational")]
        log_coeff: Rational,
    },
    /// `W₀ = −a·ln sin x − b·ln cos x`.
    JacobiLike {
        #[serde(serialize_with = "crate::serial::rational")]
        sin_coeff: Rational,
        #[serde(serialize_with = "crate::serial::rational")]
        cos_coeff: Rational,
    },
}

impl PrepotentialDescriptor {
    pub fn kind(&self) -> PrepotentialKind {
        match self {
            PrepotentialDescriptor::LaguerreLike { .. } => PrepotentialKind::LaguerreLike,
            PrepotentialDescriptor::JacobiLike { .. } => PrepotentialKind::JacobiLike,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            PrepotentialDescriptor::LaguerreLike { sign, log_coeff } => {
                f64::from(*sign) * x * x / 2.0 - to_f64(log_coeff) * x.ln()
            }
            PrepotentialDescriptor::JacobiLike { sin_coeff, cos_coeff } => {
                -to_f64(sin_coeff) * x.sin().ln() - to_f64(cos_coeff) * x.cos().ln()
            }
        }
    }

    /// `Ẇ₀² + Ẅ₀` in closed form.
    pub fn riccati(&self, x: f64) -> f64 {
        match self {
            PrepotentialDescriptor::LaguerreLike { sign, log_coeff } => {
                let k = to_f64(log_coeff);
                let s = f64::from(*sign);
                x * x + k * (k + 1.0) / (x * x) + s * (1.0 - 2.0 * k)
            }
            PrepotentialDescriptor::JacobiLike { sin_coeff, cos_coeff } => {
                let (a, b) = (to_f64(sin_coeff), to_f64(cos_coeff));
                let (s, c) = x.sin_cos();
                a * (a + 1.0) / (s * s) + b * (b + 1.0) / (c * c) - (a + b) * (a + b)
            }
        }
    }

    /// `e^{W₀}` rewritten as an η-prefactor, constants dropped.
    pub fn exp_prefactor(&self) -> Prefactor {
        match self {
            PrepotentialDescriptor::LaguerreLike { sign, log_coeff } => Prefactor::exponential(rat(i64::from(*sign), 2))
                .times(&Prefactor::eta_power(-log_coeff / int(2))),
            PrepotentialDescriptor::JacobiLike { sin_coeff, cos_coeff } => Prefactor::one_minus_power(-sin_coeff / int(2))
                .times(&Prefactor::one_plus_power(-cos_coeff / int(2))),
        }
    }

    /// `(dW₀/dη)·η̇²`, which equals `Ẇ₀η̇` and must reproduce `Q`.
    pub fn q_poly(&self) -> Poly {
        match self {
            PrepotentialDescriptor::LaguerreLike { sign, log_coeff } => {
                Poly::linear(-int(2) * log_coeff, int(2 * i64::from(*sign)))
            }
            PrepotentialDescriptor::JacobiLike { sin_coeff, cos_coeff } => Poly::linear(
                int(2) * (sin_coeff - cos_coeff),
                int(2) * (sin_coeff + cos_coeff),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_derivative_of_the_coordinates() {
        assert_eq!(Coordinate::Square.eta_ddot(), Poly::from_ints(&[2]));
        assert_eq!(Coordinate::Cosine.eta_ddot(), Poly::from_ints(&[0, -4]));
    }

    #[test]
    fn accurate_endpoint_distances() {
        let (e, om, op) = Coordinate::Cosine.distances(1e-9);
        assert_eq!(e, 1.0);
        assert!((om - 2e-18).abs() < 1e-30);
        assert!((op - 2.0).abs() < 1e-15);
    }

    #[test]
    fn riccati_matches_finite_differences() {
        let cases = [
            PrepotentialDescriptor::LaguerreLike { sign: 1, log_coeff: rat(-3, 2) },
            PrepotentialDescriptor::LaguerreLike { sign: -1, log_coeff: rat(1, 1) },
            PrepotentialDescriptor::JacobiLike { sin_coeff: rat(2, 1), cos_coeff: rat(-2, 1) },
        ];
        for w in &cases {
            let x = 0.7;
            let h = 1e-4;
            let d1 = (w.eval(x + h) - w.eval(x - h)) / (2.0 * h);
            let d2 = (w.eval(x + h) - 2.0 * w.eval(x) + w.eval(x - h)) / (h * h);
            assert!((d1 * d1 + d2 - w.riccati(x)).abs() < 1e-5, "{w:?}");
        }
    }
}
