//! Reconstruction of localized mode profiles u(x) and their 2-D extension
//! u(x)·sin(ηy).

use thiserror::Error;

use crate::eigen::EigenPair;
use crate::medium::{layer_wave_numbers, MediumConfig, WaveParams};
use crate::transfer::layer_propagator;

/// Amplitude convention marker for sampled profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// u(0) = 1 at the interface; u'(0) = κ follows from the matching.
    InterfaceUnity,
}

/// Sampled mode profile over a window spanning both half-spaces.
///
/// Samples are ordered by position from `x_min` up to `n_periods`; each
/// layer boundary appears exactly once. For x < 0 the profile is the exact
/// exponential e^{κx}; for x > 0 it is propagated in closed form within
/// each layer from the period-start state λ₁^m·(1, κ).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldProfile {
    pub x_samples: Vec<f64>,
    pub u_values: Vec<f64>,
    pub du_values: Vec<f64>,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The supplied mode data does not describe a localized mode.
    #[error("not localized: field profiles require a localized mode")]
    NotLocalized,
    /// Degenerate sampling window.
    #[error("invalid window: {0}")]
    InvalidWindow(&'static str),
}

/// Sample the localized mode profile with u(0) = 1, u'(0) = κ.
///
/// `pair` and `kappa` must come from a LOCALIZED classification of
/// (medium, wave); anything else yields [`FieldError::NotLocalized`].
/// `x_min` ≤ 0 bounds the homogeneous-side window (0 disables it).
pub fn field_profile(
    medium: &MediumConfig,
    wave: WaveParams,
    pair: &EigenPair,
    kappa: f64,
    n_periods: u32,
    samples_per_layer: u32,
    x_min: f64,
) -> Result<FieldProfile, FieldError> {
    if n_periods == 0 {
        return Err(FieldError::InvalidWindow("n_periods must be positive"));
    }
    if samples_per_layer == 0 {
        return Err(FieldError::InvalidWindow(
            "samples_per_layer must be positive",
        ));
    }
    if !x_min.is_finite() || x_min > 0.0 {
        return Err(FieldError::InvalidWindow("x_min must be <= 0"));
    }
    let localized = pair.real_flag
        && pair.lambda1_abs() < 1.0
        && kappa > 0.0
        && wave.eta().powi(2) - kappa * kappa > 0.0;
    if !localized {
        return Err(FieldError::NotLocalized);
    }

    let lambda1 = pair.lambda1.re;
    let theta = medium.theta();
    let wn = layer_wave_numbers(medium, wave);
    let spl = samples_per_layer as usize;

    let mut x_samples = Vec::new();
    let mut u_values = Vec::new();
    let mut du_values = Vec::new();

    // Homogeneous side: u(x) = e^{kappa x}, sampled at roughly the same
    // density as the layered side (two layers per unit period).
    if x_min < 0.0 {
        let n_neg = ((-x_min) * (2 * samples_per_layer) as f64).ceil().max(1.0) as usize;
        for i in 0..n_neg {
            let x = x_min * (n_neg - i) as f64 / n_neg as f64;
            let amp = (kappa * x).exp();
            x_samples.push(x);
            u_values.push(amp);
            du_values.push(kappa * amp);
        }
    }

    // Layered side. The boundary state (1, kappa) is parallel to v1, so the
    // state at the start of period m is exactly lambda1^m * (1, kappa).
    let t_a_full = layer_propagator(wn.sigma_a, theta);
    for m in 0..n_periods {
        let scale = lambda1.powi(m as i32);
        let start = [scale, scale * kappa];
        if theta > 0.0 {
            for j in 0..spl {
                let frac = j as f64 / spl as f64;
                let state = layer_propagator(wn.sigma_a, theta * frac).apply(start);
                x_samples.push(m as f64 + theta * frac);
                u_values.push(state[0]);
                du_values.push(state[1]);
            }
        }
        if theta < 1.0 {
            let at_theta = t_a_full.apply(start);
            for j in 0..spl {
                let frac = j as f64 / spl as f64;
                let state = layer_propagator(wn.sigma_b, (1.0 - theta) * frac).apply(at_theta);
                x_samples.push(m as f64 + theta + (1.0 - theta) * frac);
                u_values.push(state[0]);
                du_values.push(state[1]);
            }
        }
    }
    let end_scale = lambda1.powi(n_periods as i32);
    x_samples.push(n_periods as f64);
    u_values.push(end_scale);
    du_values.push(end_scale * kappa);

    Ok(FieldProfile {
        x_samples,
        u_values,
        du_values,
        normalization: Normalization::InterfaceUnity,
    })
}

/// Separable 2-D field u(x)·sin(ηy) sampled on the profile grid × `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2d {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// `values[i][j] = u(x_i) * sin(eta * y_j)`.
    pub values: Vec<Vec<f64>>,
}

pub fn field_2d(profile: &FieldProfile, wave: WaveParams, y_grid: &[f64]) -> Field2d {
    let values = profile
        .u_values
        .iter()
        .map(|&u| y_grid.iter().map(|&y| u * (wave.eta() * y).sin()).collect())
        .collect();
    Field2d {
        x: profile.x_samples.clone(),
        y: y_grid.to_vec(),
        values,
    }
}
