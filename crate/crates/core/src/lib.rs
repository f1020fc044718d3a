//! Interface-localized TM modes of a periodic two-material half-space.
//!
//! The medium is a half-space x > 0 layered with period 1 (material A over
//! volume fraction θ, material B over 1 − θ) joined to a homogeneous
//! half-space x < 0. Modes u(x)·e^{i(ηy − ωt)} of the governing equation
//! u'' + (ω²/c(x)² − η²)u = 0 are analyzed in closed form via 2x2 transfer
//! matrices:
//!
//! - [`transfer`] and [`eigen`] propagate solution states across layers and
//!   decompose the unit-cell matrix;
//! - [`localize`] matches the decaying Bloch eigenvector to the homogeneous
//!   half-space and classifies (η, ω) points by localization behavior;
//! - [`field`] reconstructs sampled mode profiles;
//! - [`scan`] sweeps wave-parameter and design grids;
//! - [`pso`] solves the inverse design problem — choosing (c_A, c_B, θ)
//!   to minimize |λ₁| under physical constraints — by particle swarm
//!   optimization.

pub mod eigen;
pub mod error;
pub mod field;
pub mod localize;
pub mod medium;
pub mod pso;
pub mod scan;
pub mod transfer;

pub use eigen::{eigen_decompose, DegenerateEigenvector, EigenPair, DEGENERACY_TOL};
pub use error::InvalidParam;
pub use field::{field_2d, field_profile, Field2d, FieldError, FieldProfile, Normalization};
pub use localize::{
    classify, match_half_space, HalfSpaceMatch, LocalizationReport, NoMatch, NoMatchReason, Region,
};
pub use medium::{layer_wave_numbers, LayerWaveNumbers, MediumConfig, WaveNumber, WaveParams};
pub use pso::{
    evaluate_objective, pso_minimize, pso_minimize_observed, Bounds, FeasibilityResult, Interval,
    ObjectiveEval, Particle, PsoConfig, PsoError, PsoRun, Violation, INFEASIBLE_SENTINEL,
};
pub use scan::{
    cell_centers, scan_design_slice, scan_wave_plane, ObjectiveField, RegionCell, RegionMap,
    ScanGrid,
};
pub use transfer::{cell_matrix, layer_propagator, CellMatrix, Mat2};
