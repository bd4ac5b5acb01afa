/// Symmetric tridiagonal matrix: `diag` has length N and `off` N−1.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// pivots of the `LDLᵀ` factorization of `T − λI`.
    pub fn count_below(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut d = 1.0;
        for i in 0..self.diag.len() {
            let b2 = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            d = self.diag[i] - lambda - if i == 0 { 0.0 } else { b2 / d };
            if d == 0.0 {
                d = -f64::EPSILON * (self.diag[i].abs() + lambda.abs()).max(f64::MIN_POSITIVE);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }
}

/// The `k` smallest eigenvalues in ascending order, each isolated by
/// bisection on [`Tridiagonal::count_below`].
pub fn eigen_lowest(op: &Tridiagonal, k: usize) -> Vec<f64> {
    let k = k.min(op.len());
    let (lo0, hi0) = op.bounds();
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let (mut lo, mut hi) = (out.last().copied().unwrap_or(lo0), hi0);
        while hi - lo > 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1e-300) {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if op.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix() {
        let t = Tridiagonal { diag: vec![3.0, 1.0, 2.0], off: vec![0.0, 0.0] };
        let ev = eigen_lowest(&t, 3);
        for (e, w) in ev.iter().zip([1.0, 2.0, 3.0]) {
            assert!((e - w).abs() < 1e-14);
        }
    }

    #[test]
    fn two_by_two() {
        let t = Tridiagonal { diag: vec![2.0, 2.0], off: vec![-1.0] };
        let ev = eigen_lowest(&t, 2);
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }
}
