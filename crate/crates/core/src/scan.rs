//! Grid sweeps: (η, ω) region maps and design-space objective fields.

use rayon::prelude::*;

use crate::error::InvalidParam;
use crate::localize::{classify, Region};
use crate::medium::{MediumConfig, WaveParams};
use crate::pso::{evaluate_objective, PsoConfig};

/// `n` sample points at the centers of `n` equal subdivisions of
/// [min, max]. Keeps every sample strictly inside the range, so a scan over
/// ω ∈ [0, ω_max] never touches the invalid ω = 0 endpoint.
pub fn cell_centers(min: f64, max: f64, n: usize) -> Vec<f64> {
    let width = (max - min) / n as f64;
    (0..n).map(|i| min + (i as f64 + 0.5) * width).collect()
}

/// Validated (η, ω) scan axes: strictly increasing and within the wave
/// parameter domain (η ≥ 0, ω > 0).
#[derive(Debug, Clone, PartialEq)]
pub struct ScanGrid {
    eta_axis: Vec<f64>,
    omega_axis: Vec<f64>,
}

impl ScanGrid {
    pub fn new(eta_axis: Vec<f64>, omega_axis: Vec<f64>) -> Result<Self, InvalidParam> {
        fn check(
            axis: &[f64],
            field: &'static str,
            min_ok: impl Fn(f64) -> bool,
        ) -> Result<(), InvalidParam> {
            if axis.is_empty() {
                return Err(InvalidParam::new(field, "must be non-empty"));
            }
            if !axis.iter().all(|v| v.is_finite() && min_ok(*v)) {
                return Err(InvalidParam::new(field, "values outside the wave domain"));
            }
            if !axis.windows(2).all(|w| w[0] < w[1]) {
                return Err(InvalidParam::new(field, "must be strictly increasing"));
            }
            Ok(())
        }
        check(&eta_axis, "eta_axis", |v| v >= 0.0)?;
        check(&omega_axis, "omega_axis", |v| v > 0.0)?;
        Ok(Self {
            eta_axis,
            omega_axis,
        })
    }

    pub fn eta_axis(&self) -> &[f64] {
        &self.eta_axis
    }

    pub fn omega_axis(&self) -> &[f64] {
        &self.omega_axis
    }

    pub fn len(&self) -> usize {
        self.eta_axis.len() * self.omega_axis.len()
    }

    /// Always false: validation rejects empty axes.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Classification summary of one grid cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionCell {
    pub region: Region,
    pub lambda1_abs: f64,
}

/// Region map of a medium over a wave-parameter grid, stored row-major
/// with η outermost.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMap {
    grid: ScanGrid,
    cells: Vec<RegionCell>,
    medium: MediumConfig,
}

impl RegionMap {
    pub fn grid(&self) -> &ScanGrid {
        &self.grid
    }

    pub fn medium(&self) -> &MediumConfig {
        &self.medium
    }

    pub fn cells(&self) -> &[RegionCell] {
        &self.cells
    }

    pub fn cell(&self, eta_idx: usize, omega_idx: usize) -> &RegionCell {
        &self.cells[eta_idx * self.grid.omega_axis.len() + omega_idx]
    }
}

/// Classify every (η, ω) cell of the grid for one medium.
///
/// Cells are independent and evaluated in parallel; the output ordering is
/// canonical (row-major, η outer) regardless of scheduling.
pub fn scan_wave_plane(medium: &MediumConfig, grid: &ScanGrid) -> RegionMap {
    let n_omega = grid.omega_axis.len();
    let cells: Vec<RegionCell> = (0..grid.len())
        .into_par_iter()
        .map(|idx| {
            let eta = grid.eta_axis[idx / n_omega];
            let omega = grid.omega_axis[idx % n_omega];
            let wave = WaveParams::new(omega, eta).expect("grid is validated");
            let report = classify(medium, wave);
            RegionCell {
                region: report.region,
                lambda1_abs: report.lambda1_abs,
            }
        })
        .collect();
    RegionMap {
        grid: grid.clone(),
        cells,
        medium: *medium,
    }
}

/// Objective values over a 3-D slice of the design space at one wave point,
/// stored row-major as `values[(i * len(c_b) + j) * len(theta) + k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveField {
    pub c_a_axis: Vec<f64>,
    pub c_b_axis: Vec<f64>,
    pub theta_axis: Vec<f64>,
    pub values: Vec<f64>,
}

impl ObjectiveField {
    pub fn value(&self, c_a_idx: usize, c_b_idx: usize, theta_idx: usize) -> f64 {
        self.values[(c_a_idx * self.c_b_axis.len() + c_b_idx) * self.theta_axis.len() + theta_idx]
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Evaluate the constrained objective on a design grid (speeds positive,
/// θ within [0, 1]); infeasible cells hold the sentinel value 2.
pub fn scan_design_slice(
    wave: WaveParams,
    c_a_axis: &[f64],
    c_b_axis: &[f64],
    theta_axis: &[f64],
    cfg: &PsoConfig,
) -> ObjectiveField {
    debug_assert!(c_a_axis.iter().all(|&c| c.is_finite() && c > 0.0));
    debug_assert!(c_b_axis.iter().all(|&c| c.is_finite() && c > 0.0));
    debug_assert!(theta_axis.iter().all(|&t| (0.0..=1.0).contains(&t)));
    let (nb, nt) = (c_b_axis.len(), theta_axis.len());
    let values: Vec<f64> = (0..c_a_axis.len() * nb * nt)
        .into_par_iter()
        .map(|idx| {
            let position = [
                c_a_axis[idx / (nb * nt)],
                c_b_axis[(idx / nt) % nb],
                theta_axis[idx % nt],
            ];
            evaluate_objective(position, wave, cfg).value
        })
        .collect();
    ObjectiveField {
        c_a_axis: c_a_axis.to_vec(),
        c_b_axis: c_b_axis.to_vec(),
        theta_axis: theta_axis.to_vec(),
        values,
    }
}
