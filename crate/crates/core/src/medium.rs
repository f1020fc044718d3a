//! Domain types: the design triple describing the layered medium and the
//! wave parameters at which it is analyzed.
//!
//! Coordinates are period-normalized (the period is 1), so lengths, wave
//! numbers and frequencies are all dimensionless.

use crate::error::InvalidParam;

/// The (angular frequency, transverse wave number) pair at which all
/// analysis is performed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveParams {
    omega: f64,
    eta: f64,
}

impl WaveParams {
    pub fn new(omega: f64, eta: f64) -> Result<Self, InvalidParam> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(InvalidParam::new("omega", "must be finite and > 0"));
        }
        if !eta.is_finite() || eta < 0.0 {
            return Err(InvalidParam::new("eta", "must be finite and >= 0"));
        }
        Ok(Self { omega, eta })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// The design triple (c_A, c_B, θ): wave speeds of the two materials and the
/// volume fraction of material A within each unit period. Optionally carries
/// the matched homogeneous half-space speed c₀ once known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumConfig {
    c_a: f64,
    c_b: f64,
    theta: f64,
    c0: Option<f64>,
}

impl MediumConfig {
    pub fn new(c_a: f64, c_b: f64, theta: f64) -> Result<Self, InvalidParam> {
        if !c_a.is_finite() || c_a <= 0.0 {
            return Err(InvalidParam::new("c_a", "must be finite and > 0"));
        }
        if !c_b.is_finite() || c_b <= 0.0 {
            return Err(InvalidParam::new("c_b", "must be finite and > 0"));
        }
        if !theta.is_finite() || !(0.0..=1.0).contains(&theta) {
            return Err(InvalidParam::new("theta", "must lie in [0, 1]"));
        }
        Ok(Self {
            c_a,
            c_b,
            theta,
            c0: None,
        })
    }

    /// Attach a matched homogeneous half-space speed.
    pub fn with_c0(mut self, c0: f64) -> Result<Self, InvalidParam> {
        if !c0.is_finite() || c0 <= 0.0 {
            return Err(InvalidParam::new("c0", "must be finite and > 0"));
        }
        self.c0 = Some(c0);
        Ok(self)
    }

    pub fn c_a(&self) -> f64 {
        self.c_a
    }

    pub fn c_b(&self) -> f64 {
        self.c_b
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn c0(&self) -> Option<f64> {
        self.c0
    }
}

/// Longitudinal wave number of a single layer, tagged by the sign of
/// ω²/c² − η². The stored value is √|ω²/c² − η²| in both cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WaveNumber {
    /// ω²/c² − η² > 0: oscillatory solution with σ = √(ω²/c² − η²).
    Propagating(f64),
    /// ω²/c² − η² ≤ 0: exponential solution with s = √(η² − ω²/c²).
    /// The boundary case σ = 0 lands here with magnitude 0.
    Evanescent(f64),
}

impl WaveNumber {
    pub fn from_speed(c: f64, wave: WaveParams) -> Self {
        let q = (wave.omega() / c).powi(2) - wave.eta().powi(2);
        if q > 0.0 {
            WaveNumber::Propagating(q.sqrt())
        } else {
            WaveNumber::Evanescent((-q).sqrt())
        }
    }

    pub fn magnitude(&self) -> f64 {
        match *self {
            WaveNumber::Propagating(s) | WaveNumber::Evanescent(s) => s,
        }
    }

    pub fn is_propagating(&self) -> bool {
        matches!(self, WaveNumber::Propagating(_))
    }
}

/// Tagged wave numbers for the two materials of the unit cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerWaveNumbers {
    pub sigma_a: WaveNumber,
    pub sigma_b: WaveNumber,
}

/// σ_A = √(ω²/c_A² − η²) and σ_B = √(ω²/c_B² − η²), each tagged
/// propagating or evanescent by the sign of the radicand.
pub fn layer_wave_numbers(medium: &MediumConfig, wave: WaveParams) -> LayerWaveNumbers {
    LayerWaveNumbers {
        sigma_a: WaveNumber::from_speed(medium.c_a(), wave),
        sigma_b: WaveNumber::from_speed(medium.c_b(), wave),
    }
}
