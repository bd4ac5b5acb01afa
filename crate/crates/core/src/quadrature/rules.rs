use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::QuadError;
use crate::polycore::{to_f64, Bound, Interval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    GaussLegendre,
    TanhSinh,
}

/// One quadrature node with accurate distances to both ends of the domain
/// (`dist_hi` is infinite on a half-line).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Node {
    pub x: f64,
    pub dist_lo: f64,
    pub dist_hi: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadRule {
    pub nodes: Vec<Node>,
    pub weights: Vec<f64>,
    pub domain: Interval,
    pub scheme: Scheme,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ wᵢ f(nodeᵢ)` and `Σ wᵢ |f(nodeᵢ)|`.
    pub fn apply(&self, f: &impl Fn(&Node) -> f64) -> (f64, f64) {
        let mut sum = 0.0;
        let mut abs = 0.0;
        for (node, w) in self.nodes.iter().zip(&self.weights) {
            let v = w * f(node);
            sum += v;
            abs += v.abs();
        }
        (sum, abs)
    }
}

/// Half-width of the tanh-sinh parameter range; beyond it the weights are
/// below the smallest normal double.
const T_MAX: f64 = 6.5;

fn finite_bounds(domain: &Interval) -> Option<(f64, Option<f64>)> {
    let lo = match domain.lo() {
        Bound::Finite { value, .. } => to_f64(value),
        _ => return None,
    };
    match domain.hi() {
        Bound::Finite { value, .. } => Some((lo, Some(to_f64(value)))),
        Bound::PosInfinity => Some((lo, None)),
        Bound::NegInfinity => None,
    }
}

/// Tanh-sinh nodes on (0, 1) with step `h`, as `(t, 1−t, weight)`.
fn tanh_sinh_unit(h: f64) -> Vec<(f64, f64, f64)> {
    let k_max = (T_MAX / h).floor() as i64;
    let mut out = Vec::with_capacity(2 * k_max as usize + 1);
    for k in -k_max..=k_max {
        let t = k as f64 * h;
        let u = FRAC_PI_2 * t.sinh();
        // t = 1/(1+e^{−2u}), 1−t = 1/(1+e^{2u})
        let lo = 1.0 / (1.0 + (-2.0 * u).exp());
        let hi = 1.0 / (1.0 + (2.0 * u).exp());
        let cu = u.cosh();
        let w = h * FRAC_PI_2 * t.cosh() / (2.0 * cu * cu);
        if lo > 0.0 && hi > 0.0 && w > 0.0 && w.is_finite() {
            out.push((lo, hi, w));
        }
    }
    out
}

/// Gauss–Legendre nodes and weights on (−1, 1) by Newton iteration on `P_n`.
fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.reverse();
    out
}

/// Builds a rule. For tanh-sinh, `level` sets the step `h = 2^{1−level}`,
/// so each level contains the nodes of the previous one; for Gauss–Legendre
/// it is the number of points.
pub fn make_rule(domain: &Interval, scheme: Scheme, level: u32) -> Result<QuadRule, QuadError> {
    if level == 0 {
        return Err(QuadError::Unsupported("level must be at least 1".into()));
    }
    let (a, b) = finite_bounds(domain)
        .ok_or_else(|| QuadError::Unsupported(format!("domain {domain} has no finite lower end")))?;
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    match (scheme, b) {
        (Scheme::GaussLegendre, None) => {
            return Err(QuadError::Unsupported("Gauss–Legendre needs a bounded domain".into()))
        }
        (Scheme::GaussLegendre, Some(b)) => {
            let half = (b - a) / 2.0;
            for (x, w) in gauss_legendre_unit(level as usize) {
                nodes.push(Node { x: a + half * (1.0 + x), dist_lo: half * (1.0 + x), dist_hi: half * (1.0 - x) });
                weights.push(half * w);
            }
        }
        (Scheme::TanhSinh, Some(b)) => {
            let len = b - a;
            for (lo, hi, w) in tanh_sinh_unit(2f64.powi(1 - level as i32)) {
                let (dl, dh) = (len * lo, len * hi);
                let x = if dl <= dh { a + dl } else { b - dh };
                nodes.push(Node { x, dist_lo: dl, dist_hi: dh });
                weights.push(len * w);
            }
        }
        (Scheme::TanhSinh, None) => {
            // η = a + t/(1−t), dη = dt/(1−t)²
            for (lo, hi, w) in tanh_sinh_unit(2f64.powi(1 - level as i32)) {
                let d = lo / hi;
                let jac = w / (hi * hi);
                if d.is_finite() && jac.is_finite() {
                    nodes.push(Node { x: a + d, dist_lo: d, dist_hi: f64::INFINITY });
                    weights.push(jac);
                }
            }
        }
    }
    Ok(QuadRule { nodes, weights, domain: domain.clone(), scheme })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::int;

    #[test]
    fn gauss_legendre_exactness() {
        let r = make_rule(&Interval::open(int(-1), int(1)), Scheme::GaussLegendre, 5).unwrap();
        // exact through degree 9
        let (s, _) = r.apply(&|n| n.x.powi(8));
        assert!((s - 2.0 / 9.0).abs() < 1e-14);
        assert!(r.weights.iter().all(|w| *w > 0.0));
    }

    #[test]
    fn semi_infinite_needs_tanh_sinh() {
        assert!(make_rule(&Interval::above(int(0)), Scheme::GaussLegendre, 4).is_err());
        assert!(make_rule(&Interval::real_line(), Scheme::TanhSinh, 4).is_err());
    }
}
