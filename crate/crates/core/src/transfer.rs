//! Closed-form propagators for the state vector (u, u') across layers and
//! unit cells of the piecewise-constant medium.

use crate::medium::{layer_wave_numbers, MediumConfig, WaveNumber, WaveParams};

/// Real 2x2 matrix acting on the solution state (u, u').
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
    };

    /// Matrix product `self * rhs` (rhs acts first).
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
        }
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.m11 * v[0] + self.m12 * v[1],
            self.m21 * v[0] + self.m22 * v[1],
        ]
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22
    }
}

/// Exact state propagator across a homogeneous layer of the given length.
///
/// Propagating layers use the trigonometric solution; evanescent layers its
/// analytic continuation (cos → cosh, sin/σ → sinh/s, −σ·sin → +s·sinh);
/// σ = 0 uses the shear limit [[1, ℓ], [0, 1]]. All three branches have
/// determinant 1.
pub fn layer_propagator(sigma: WaveNumber, length: f64) -> Mat2 {
    debug_assert!(length >= 0.0, "layer length must be non-negative");
    match sigma {
        WaveNumber::Propagating(s) if s > 0.0 => {
            let (sin, cos) = (s * length).sin_cos();
            Mat2 {
                m11: cos,
                m12: sin / s,
                m21: -s * sin,
                m22: cos,
            }
        }
        WaveNumber::Evanescent(s) if s > 0.0 => {
            let arg = s * length;
            let (sinh, cosh) = (arg.sinh(), arg.cosh());
            Mat2 {
                m11: cosh,
                m12: sinh / s,
                m21: s * sinh,
                m22: cosh,
            }
        }
        _ => Mat2 {
            m11: 1.0,
            m12: length,
            m21: 0.0,
            m22: 1.0,
        },
    }
}

/// Single-period transfer matrix T = T_B(1−θ) · T_A(θ) with its trace cached.
///
/// As a product of unit-determinant propagators, det(T) = 1 (within
/// round-off), so the eigenvalues of T are mutually inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellMatrix {
    entries: Mat2,
    trace: f64,
}

impl CellMatrix {
    pub fn new(entries: Mat2) -> Self {
        Self {
            trace: entries.trace(),
            entries,
        }
    }

    pub fn entries(&self) -> &Mat2 {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn det(&self) -> f64 {
        self.entries.det()
    }
}

/// Unit-cell transfer matrix of the medium at the given wave parameters.
///
/// Depends on the inputs only through (σ_A, σ_B, θ): any two (medium, wave)
/// pairs producing the same tagged wave numbers yield identical matrices.
pub fn cell_matrix(medium: &MediumConfig, wave: WaveParams) -> CellMatrix {
    let wn = layer_wave_numbers(medium, wave);
    let theta = medium.theta();
    let t_a = layer_propagator(wn.sigma_a, theta);
    let t_b = layer_propagator(wn.sigma_b, 1.0 - theta);
    CellMatrix::new(t_b.mul(&t_a))
}
