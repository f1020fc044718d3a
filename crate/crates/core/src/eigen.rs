//! Eigen-decomposition of the unit-cell transfer matrix.
//!
//! The characteristic polynomial of a unimodular 2x2 matrix is
//! λ² − tr·λ + 1, so the eigenvalues come in a mutually inverse pair: real
//! and distinct when |tr| > 2, unit-modulus complex conjugates when
//! |tr| < 2, and a defective double root ±1 at |tr| = 2 (a band edge).

use num_complex::Complex64;
use thiserror::Error;

use crate::transfer::{CellMatrix, Mat2};

/// Half-width of the band-edge window around |tr| = 2 that is treated as
/// degenerate.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// |tr| = 2 within [`DEGENERACY_TOL`]: the double eigenvalue ±1 has a
/// defective eigenvector and no exponential decay. Callers map this to the
/// no-right-decay region.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("degenerate eigenvector: |trace| = 2 within tolerance (trace = {trace})")]
pub struct DegenerateEigenvector {
    pub trace: f64,
}

/// Eigenvalues and decaying-direction eigenvector of a unit-cell matrix.
///
/// `lambda1` is the eigenvalue of smaller (or tied) modulus and `v1` its
/// eigenvector, normalized to unit Euclidean length with the first nonzero
/// component made (real) positive. For a real pair the imaginary parts are
/// exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub v1: [Complex64; 2],
    pub real_flag: bool,
}

impl EigenPair {
    pub fn lambda1_abs(&self) -> f64 {
        self.lambda1.norm()
    }

    /// The eigenvector as a real 2-vector; `None` for a complex pair.
    pub fn v1_real(&self) -> Option<[f64; 2]> {
        self.real_flag.then(|| [self.v1[0].re, self.v1[1].re])
    }
}

fn real_eigenvector(m: &Mat2, lambda: f64) -> [f64; 2] {
    // Null vector of (T - λI) from whichever row is better conditioned.
    let row1 = [m.m12, lambda - m.m11];
    let row2 = [lambda - m.m22, m.m21];
    let n1 = row1[0] * row1[0] + row1[1] * row1[1];
    let n2 = row2[0] * row2[0] + row2[1] * row2[1];
    let v = if n1 >= n2 { row1 } else { row2 };
    let norm = (v[0] * v[0] + v[1] * v[1]).sqrt();
    debug_assert!(norm > 0.0, "defective matrix should have been rejected");
    let mut v = [v[0] / norm, v[1] / norm];
    let lead = if v[0] != 0.0 { v[0] } else { v[1] };
    if lead < 0.0 {
        v = [-v[0], -v[1]];
    }
    v
}

fn complex_eigenvector(m: &Mat2, lambda: Complex64) -> [Complex64; 2] {
    let row1 = [Complex64::from(m.m12), lambda - m.m11];
    let row2 = [lambda - m.m22, Complex64::from(m.m21)];
    let n1 = row1[0].norm_sqr() + row1[1].norm_sqr();
    let n2 = row2[0].norm_sqr() + row2[1].norm_sqr();
    let v = if n1 >= n2 { row1 } else { row2 };
    let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    debug_assert!(norm > 0.0, "defective matrix should have been rejected");
    let mut v = [v[0] / norm, v[1] / norm];
    // Rotate the phase so the first component of nonzero modulus is real
    // and positive.
    let lead = if v[0].norm() > 0.0 { v[0] } else { v[1] };
    let phase = lead / lead.norm();
    v = [v[0] / phase, v[1] / phase];
    v
}

/// Closed-form eigen-decomposition via λ = (tr ± √(tr² − 4))/2 with the
/// determinant pinned to exactly 1.
///
/// Returns [`DegenerateEigenvector`] when |tr| = 2 within
/// [`DEGENERACY_TOL`]. Otherwise the pair is real with |λ₁| < 1 < |λ₂|
/// (|tr| > 2) or complex conjugate with |λ| = 1 (|tr| < 2).
pub fn eigen_decompose(cell: &CellMatrix) -> Result<EigenPair, DegenerateEigenvector> {
    let tr = cell.trace();
    if (tr.abs() - 2.0).abs() <= DEGENERACY_TOL {
        return Err(DegenerateEigenvector { trace: tr });
    }
    let m = cell.entries();
    if tr.abs() > 2.0 {
        // Compute the larger-modulus root first; the smaller one as its
        // reciprocal avoids cancellation and pins λ₁λ₂ = 1 exactly.
        let root = (tr * tr - 4.0).sqrt();
        let big = 0.5 * (tr + tr.signum() * root);
        let small = 1.0 / big;
        let v = real_eigenvector(m, small);
        Ok(EigenPair {
            lambda1: Complex64::from(small),
            lambda2: Complex64::from(big),
            v1: [Complex64::from(v[0]), Complex64::from(v[1])],
            real_flag: true,
        })
    } else {
        let lambda1 = Complex64::new(0.5 * tr, 0.5 * (4.0 - tr * tr).sqrt());
        Ok(EigenPair {
            lambda1,
            lambda2: lambda1.conj(),
            v1: complex_eigenvector(m, lambda1),
            real_flag: false,
        })
    }
}
