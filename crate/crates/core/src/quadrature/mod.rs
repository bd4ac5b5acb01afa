//! Numerical inner products under the deformed weights, and the Gram
//! matrices that check orthogonality of the exceptional families.

mod rules;

use serde::Serialize;

pub use rules::{make_rule, Node, QuadRule, Scheme};

use crate::polycore::Interval;
use crate::xconstruct::{level_poly, weight_exponents, Coordinate, XSystem};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadError {
    #[error("unsupported quadrature: {0}")]
    Unsupported(String),
    #[error("integration did not converge: estimate {estimate:e}, last change {change:e}")]
    NonConvergence { estimate: f64, change: f64 },
}

/// Stopping rule for nested tanh-sinh levels.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerance {
    pub rel: f64,
    pub max_nodes: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel: 1e-12, max_nodes: 1 << 14 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Integral {
    pub value: f64,
    /// `∫|f|`, the scale against which convergence is judged.
    pub abs_value: f64,
    pub level: u32,
    pub nodes: usize,
}

/// Integrates over `domain` with nested tanh-sinh levels until the value
/// changes by less than `tol.rel · max(|S|, ∫|f|)` between levels.
pub fn integrate(f: impl Fn(&Node) -> f64, domain: &Interval, tol: Tolerance) -> Result<Integral, QuadError> {
    let mut prev: Option<f64> = None;
    let mut change = f64::INFINITY;
    let mut last = 0.0;
    for level in 2.. {
        let rule = make_rule(domain, Scheme::TanhSinh, level)?;
        if rule.len() > tol.max_nodes {
            break;
        }
        let (s, abs) = rule.apply(&f);
        if !s.is_finite() {
            return Err(QuadError::NonConvergence { estimate: s, change });
        }
        if let Some(p) = prev {
            change = (s - p).abs();
            if change <= tol.rel * s.abs().max(abs) {
                return Ok(Integral { value: s, abs_value: abs, level, nodes: rule.len() });
            }
        }
        prev = Some(s);
        last = s;
    }
    Err(QuadError::NonConvergence { estimate: last, change })
}

/// `(η, 1−η, 1+η)` at a node of the system's η-domain.
fn coordinates(c: Coordinate, node: &Node) -> (f64, f64, f64) {
    match c {
        Coordinate::Square => (node.dist_lo, 1.0 - node.x, 1.0 + node.x),
        Coordinate::Cosine => (node.x, node.dist_hi, node.dist_lo),
    }
}

/// `⟨f_n, f_m⟩ = ∫ w(η) f_n f_m dη` over the physical η-domain, where the
/// `f_k` are the level polynomials of the system.
pub fn inner_product(sys: &XSystem, n: usize, m: usize) -> Result<f64, QuadError> {
    inner_product_with(sys, n, m, Tolerance::default()).map(|i| i.value)
}

pub fn inner_product_with(sys: &XSystem, n: usize, m: usize, tol: Tolerance) -> Result<Integral, QuadError> {
    let w = weight_exponents(sys);
    let (pn, pm) = (level_poly(sys, n), level_poly(sys, m));
    let coord = sys.coordinate;
    let xi = &sys.xi;
    integrate(
        |node| {
            let (eta, om, op) = coordinates(coord, node);
            let (ln_n, s_n) = pn.log_abs_eval_f64(eta);
            let (ln_m, s_m) = pm.log_abs_eval_f64(eta);
            let ln = w.ln_eval(eta, om, op, xi.eval_f64(eta)) + ln_n + ln_m;
            s_n * s_m * ln.exp()
        },
        &sys.domain_eta,
        tol,
    )
}

/// Weight value at an η-node; used to check positivity.
pub fn weight_at(sys: &XSystem, node: &Node) -> f64 {
    let (eta, om, op) = coordinates(sys.coordinate, node);
    weight_exponents(sys).ln_eval(eta, om, op, sys.xi.eval_f64(eta)).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GramReport {
    pub size: usize,
    #[serde(serialize_with = "crate::serial::f64_matrix")]
    pub matrix: Vec<Vec<f64>>,
    /// Unnormalized `⟨f_n, f_n⟩`.
    #[serde(serialize_with = "crate::serial::f64_vec")]
    pub norms: Vec<f64>,
    #[serde(serialize_with = "crate::serial::f64")]
    pub max_off_diagonal: f64,
    pub max_level_used: u32,
}

/// Normalized Gram matrix of levels `0..size`.
pub fn gram(sys: &XSystem, size: usize) -> Result<GramReport, QuadError> {
    if size < 2 {
        return Err(QuadError::Unsupported("Gram matrix needs at least two levels".into()));
    }
    let mut raw = vec![vec![0.0; size]; size];
    let mut max_level = 0;
    for i in 0..size {
        for j in i..size {
            let r = inner_product_with(sys, i, j, Tolerance::default())?;
            max_level = max_level.max(r.level);
            raw[i][j] = r.value;
            raw[j][i] = r.value;
        }
    }
    let norms: Vec<f64> = (0..size).map(|i| raw[i][i]).collect();
    let mut matrix = vec![vec![0.0; size]; size];
    let mut max_off = 0.0_f64;
    for i in 0..size {
        for j in 0..size {
            matrix[i][j] = if i == j { 1.0 } else { raw[i][j] / (norms[i] * norms[j]).sqrt() };
            if i != j {
                max_off = max_off.max(matrix[i][j].abs());
            }
        }
    }
    Ok(GramReport { size, matrix, norms, max_off_diagonal: max_off, max_level_used: max_level })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::int;

    #[test]
    fn elementary_integrals() {
        let tol = Tolerance::default();
        let r = integrate(|n| n.x, &Interval::open(int(0), int(1)), tol).unwrap();
        assert!((r.value - 0.5).abs() < 1e-14);
        let r = integrate(|n| n.dist_hi.sqrt(), &Interval::open(int(-1), int(1)), tol).unwrap();
        let exact = 2.0 / 3.0 * 2f64.powf(1.5);
        assert!((r.value - exact).abs() < 1e-12 * exact);
        let r = integrate(|n| (-n.x).exp(), &Interval::above(int(0)), tol).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ η^{−1/2} = 2, with the singular end resolved by the stored distance
        let r = integrate(|n| n.dist_lo.powf(-0.5), &Interval::open(int(0), int(1)), Tolerance::default()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
    }
}
