//! Independent numerical check of the spectrum: a second-order finite
//! difference discretization of `H = −d²/dx² + V(x)` on a truncated domain
//! with Dirichlet ends, diagonalized by Sturm-count bisection.

mod tridiag;

use std::f64::consts::FRAC_PI_2;

use num_traits::Zero;
use serde::Serialize;

pub use tridiag::{eigen_lowest, Tridiagonal};

use crate::polycore::{to_f64, Rational};
use crate::xconstruct::{energy, potential_eval, wavefunction_eval, XError, XSystem};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("potential is not finite at node {index} (x = {x})")]
    NonFinitePotential { index: usize, x: f64 },
    #[error("at most 10 levels can be extracted, asked for {0}")]
    TooManyLevels(usize),
    #[error(transparent)]
    System(#[from] XError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    Dirichlet,
}

/// `points` interior nodes strictly between `x_min` and `x_max`, where the
/// wavefunction is pinned to zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    #[serde(serialize_with = "crate::serial::f64")]
    pub x_min: f64,
    #[serde(serialize_with = "crate::serial::f64")]
    pub x_max: f64,
    pub points: usize,
    pub boundary: Boundary,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Self {
        GridSpec { x_min, x_max, points, boundary: Boundary::Dirichlet }
    }

    /// Laguerre cases `[1e−3, 12]`, Jacobi cases `[1e−3, π/2 − 1e−3]`,
    /// 4000 points.
    pub fn default_for(sys: &XSystem) -> Self {
        if sys.case.is_laguerre() {
            GridSpec::new(1e-3, 12.0, 4000)
        } else {
            GridSpec::new(1e-3, FRAC_PI_2 - 1e-3, 4000)
        }
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points + 1) as f64
    }

    /// Interior node `i` for `i = 1..=points`; 0 and `points+1` are the ends.
    pub fn node(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.step()
    }

    fn validate(&self) -> Result<(), SpectralError> {
        if self.x_min.partial_cmp(&self.x_max) != Some(std::cmp::Ordering::Less) {
            return Err(SpectralError::InvalidGrid("x_min must be below x_max".into()));
        }
        if self.points < 100 {
            return Err(SpectralError::InvalidGrid(format!("{} points, need at least 100", self.points)));
        }
        Ok(())
    }

    fn validate_for(&self, sys: &XSystem) -> Result<(), SpectralError> {
        self.validate()?;
        if !(sys.domain_x.contains_open(self.x_min) && sys.domain_x.contains_open(self.x_max)) {
            return Err(SpectralError::InvalidGrid(format!(
                "[{}, {}] is not strictly inside ({}, {})",
                self.x_min, self.x_max, sys.domain_x.lo, sys.domain_x.hi
            )));
        }
        Ok(())
    }
}

/// Central-difference operator for an arbitrary potential.
pub fn discretize_potential(v: impl Fn(f64) -> f64, grid: &GridSpec) -> Result<Tridiagonal, SpectralError> {
    grid.validate()?;
    let h = grid.step();
    let inv = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(grid.points);
    for i in 1..=grid.points {
        let x = grid.node(i);
        let vx = v(x);
        if !vx.is_finite() {
            return Err(SpectralError::NonFinitePotential { index: i, x });
        }
        diag.push(2.0 * inv + vx);
    }
    Ok(Tridiagonal { diag, off: vec![-inv; grid.points - 1] })
}

pub fn discretize(sys: &XSystem, grid: &GridSpec) -> Result<Tridiagonal, SpectralError> {
    grid.validate_for(sys)?;
    // the domain was checked above, so evaluation cannot fail
    discretize_potential(|x| potential_eval(sys, x).unwrap_or(f64::NAN), grid)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    #[serde(serialize_with = "crate::serial::rational_vec")]
    pub analytic: Vec<Rational>,
    #[serde(serialize_with = "crate::serial::f64_vec")]
    pub numeric: Vec<f64>,
    /// Relative error, or absolute error where the analytic level is zero.
    #[serde(serialize_with = "crate::serial::f64_vec")]
    pub errors: Vec<f64>,
    #[serde(serialize_with = "crate::serial::f64")]
    pub max_error: f64,
    pub grid: GridSpec,
}

pub fn compare_spectrum(sys: &XSystem, k: usize, grid: &GridSpec) -> Result<SpectrumReport, SpectralError> {
    if k > 10 {
        return Err(SpectralError::TooManyLevels(k));
    }
    let op = discretize(sys, grid)?;
    let numeric = eigen_lowest(&op, k);
    let analytic: Vec<Rational> = (0..k).map(|n| energy(sys, n)).collect();
    let errors: Vec<f64> = analytic
        .iter()
        .zip(&numeric)
        .map(|(a, x)| {
            let af = to_f64(a);
            if a.is_zero() {
                x.abs()
            } else {
                ((x - af) / af).abs()
            }
        })
        .collect();
    let max_error = errors.iter().cloned().fold(0.0, f64::max);
    Ok(SpectrumReport { analytic, numeric, errors, max_error, grid: *grid })
}

/// Fraction of the window dropped at each end by [`eigenfunction_residual`].
pub const RESIDUAL_MARGIN: f64 = 0.05;

/// `‖(H_grid − E)φ‖ / ‖φ‖` for the analytic eigenfunction of `level` sampled
/// on the grid. Nodes within [`RESIDUAL_MARGIN`] of either end are left out
/// of the norm: near a singular endpoint `φ ~ x^s` with non-integral `s`, and
/// the stencil there converges more slowly than the bulk.
pub fn eigenfunction_residual(sys: &XSystem, level: usize, grid: &GridSpec) -> Result<f64, SpectralError> {
    grid.validate_for(sys)?;
    let e = to_f64(&energy(sys, level));
    let h = grid.step();
    let phi: Vec<f64> = (0..=grid.points + 1)
        .map(|i| wavefunction_eval(sys, level, grid.node(i)))
        .collect::<Result<_, _>>()?;
    let scale = phi.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let margin = RESIDUAL_MARGIN * (grid.x_max - grid.x_min);
    let (mut num, mut den) = (0.0, 0.0);
    for i in 1..=grid.points {
        let x = grid.node(i);
        if x < grid.x_min + margin || x > grid.x_max - margin {
            continue;
        }
        let lap = (phi[i - 1] - 2.0 * phi[i] + phi[i + 1]) / (h * h);
        let r = (-lap + (potential_eval(sys, x)? - e) * phi[i]) / scale;
        num += r * r;
        den += (phi[i] / scale).powi(2);
    }
    Ok((num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn particle_in_a_box() {
        let grid = GridSpec::new(0.0, PI, 2000);
        let op = discretize_potential(|_| 0.0, &grid).unwrap();
        let ev = eigen_lowest(&op, 3);
        for (k, e) in ev.iter().enumerate() {
            let want = ((k + 1) * (k + 1)) as f64;
            assert!(((e - want) / want).abs() < 1e-5, "{e} vs {want}");
        }
    }

    #[test]
    fn bad_grids() {
        assert!(discretize_potential(|_| 0.0, &GridSpec::new(1.0, 0.0, 200)).is_err());
        assert!(discretize_potential(|_| 0.0, &GridSpec::new(0.0, 1.0, 10)).is_err());
        let e = discretize_potential(|x| 1.0 / (x - 0.5), &GridSpec::new(0.0, 1.0, 199)).unwrap_err();
        assert!(matches!(e, SpectralError::NonFinitePotential { index: 100, .. }), "{e}");
    }
}
