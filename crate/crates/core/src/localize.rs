//! Half-space matching and localization classification.
//!
//! A mode decaying into the periodic half-space (real eigenpair, |λ₁| < 1)
//! also decays into the homogeneous half-space x < 0 iff the boundary state
//! (1, κ) can be aligned with the decaying eigenvector v₁ for some decay
//! rate κ > 0 with η² − κ² > 0; the matched speed is then
//! c₀ = ω/√(η² − κ²).

use std::fmt;

use thiserror::Error;

use crate::eigen::{eigen_decompose, EigenPair};
use crate::medium::{MediumConfig, WaveParams};
use crate::transfer::cell_matrix;

/// Localization class of one (medium, wave) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Eigenvalues complex or degenerate: no exponential decay for x > 0.
    NoRightDecay,
    /// |λ₁| < 1 but no admissible homogeneous half-space match.
    RightDecayNoMatch,
    /// Decay on both sides: a mode localized at the interface.
    Localized,
}

impl Region {
    /// Stable small-integer code used in data files.
    pub fn code(&self) -> u8 {
        match self {
            Region::NoRightDecay => 0,
            Region::RightDecayNoMatch => 1,
            Region::Localized => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Region::NoRightDecay => "NO_RIGHT_DECAY",
            Region::RightDecayNoMatch => "RIGHT_DECAY_NO_MATCH",
            Region::Localized => "LOCALIZED",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification result for one (medium, wave) pair.
///
/// `kappa` is the left-half-space decay rate κ = v₂₁/v₁₁, present whenever
/// that ratio is computable and finite (even if it fails the matching
/// conditions); `c0` is present only for localized modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalizationReport {
    pub region: Region,
    pub lambda1_abs: f64,
    pub kappa: Option<f64>,
    pub c0: Option<f64>,
}

/// Why a right-decaying mode could not be matched to a decaying
/// homogeneous half-space solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoMatchReason {
    /// v₁₁ = 0: the boundary state cannot be scaled to u(0) = 1.
    V11Zero,
    /// κ = v₂₁/v₁₁ ≤ 0: constant or growing toward x = −∞.
    KappaNonpositive,
    /// η² − κ² ≤ 0: no real positive matched speed exists.
    C0Imaginary,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("no half-space match ({reason:?})")]
pub struct NoMatch {
    pub reason: NoMatchReason,
    /// The computed ratio when it exists, kept for reporting.
    pub kappa: Option<f64>,
}

/// A successful half-space match: decay rate κ and matched speed c₀.
///
/// By construction ω²/c₀² − η² = −κ² < 0, so the matched half-space
/// solution e^{κx} decays as x → −∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSpaceMatch {
    pub kappa: f64,
    pub c0: f64,
}

/// Align the boundary state (1, κ) with the decaying eigenvector.
///
/// Requires a real eigenpair with |λ₁| < 1 (the caller's obligation).
pub fn match_half_space(pair: &EigenPair, wave: WaveParams) -> Result<HalfSpaceMatch, NoMatch> {
    let v = pair
        .v1_real()
        .expect("match_half_space requires a real eigenpair");
    debug_assert!(pair.lambda1_abs() < 1.0);
    let [v11, v21] = v;
    if v11 == 0.0 {
        return Err(NoMatch {
            reason: NoMatchReason::V11Zero,
            kappa: None,
        });
    }
    let kappa = v21 / v11;
    if kappa.is_nan() || kappa <= 0.0 {
        return Err(NoMatch {
            reason: NoMatchReason::KappaNonpositive,
            kappa: Some(kappa),
        });
    }
    let c0_sq_inv = wave.eta().powi(2) - kappa * kappa;
    if c0_sq_inv.is_nan() || c0_sq_inv <= 0.0 {
        return Err(NoMatch {
            reason: NoMatchReason::C0Imaginary,
            kappa: Some(kappa),
        });
    }
    Ok(HalfSpaceMatch {
        kappa,
        c0: wave.omega() / c0_sq_inv.sqrt(),
    })
}

/// Classify one (medium, wave) pair by localization behavior.
///
/// Degenerate or complex eigenvalues map to [`Region::NoRightDecay`]; a
/// real pair with a failed match to [`Region::RightDecayNoMatch`]; a
/// successful match to [`Region::Localized`] with κ and c₀ populated.
pub fn classify(medium: &MediumConfig, wave: WaveParams) -> LocalizationReport {
    let cell = cell_matrix(medium, wave);
    let pair = match eigen_decompose(&cell) {
        Err(_) => {
            return LocalizationReport {
                region: Region::NoRightDecay,
                lambda1_abs: 1.0,
                kappa: None,
                c0: None,
            }
        }
        Ok(pair) => pair,
    };
    if !pair.real_flag {
        return LocalizationReport {
            region: Region::NoRightDecay,
            lambda1_abs: pair.lambda1_abs(),
            kappa: None,
            c0: None,
        };
    }
    match match_half_space(&pair, wave) {
        Ok(m) => LocalizationReport {
            region: Region::Localized,
            lambda1_abs: pair.lambda1_abs(),
            kappa: Some(m.kappa),
            c0: Some(m.c0),
        },
        Err(no_match) => LocalizationReport {
            region: Region::RightDecayNoMatch,
            lambda1_abs: pair.lambda1_abs(),
            kappa: no_match.kappa,
            c0: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn real_pair(v1: [f64; 2]) -> EigenPair {
        let norm = (v1[0] * v1[0] + v1[1] * v1[1]).sqrt();
        EigenPair {
            lambda1: Complex64::from(0.5),
            lambda2: Complex64::from(2.0),
            v1: [Complex64::from(v1[0] / norm), Complex64::from(v1[1] / norm)],
            real_flag: true,
        }
    }

    #[test]
    fn zero_kappa_has_no_left_decay() {
        let wave = WaveParams::new(6.18, 2.0).unwrap();
        let err = match_half_space(&real_pair([1.0, 0.0]), wave).unwrap_err();
        assert_eq!(err.reason, NoMatchReason::KappaNonpositive);
        assert_eq!(err.kappa, Some(0.0));
    }

    #[test]
    fn negative_kappa_grows_instead_of_decaying() {
        let wave = WaveParams::new(6.18, 2.0).unwrap();
        let err = match_half_space(&real_pair([1.0, -2.0]), wave).unwrap_err();
        assert_eq!(err.reason, NoMatchReason::KappaNonpositive);
        assert!(err.kappa.unwrap() < 0.0);
    }

    #[test]
    fn kappa_beyond_eta_cannot_be_matched() {
        // kappa = 3 > eta = 2: eta^2 - kappa^2 < 0.
        let wave = WaveParams::new(6.18, 2.0).unwrap();
        let err = match_half_space(&real_pair([1.0, 3.0]), wave).unwrap_err();
        assert_eq!(err.reason, NoMatchReason::C0Imaginary);
    }

    #[test]
    fn v11_zero_is_reported() {
        let wave = WaveParams::new(6.18, 2.0).unwrap();
        let err = match_half_space(&real_pair([0.0, 1.0]), wave).unwrap_err();
        assert_eq!(err.reason, NoMatchReason::V11Zero);
        assert_eq!(err.kappa, None);
    }

    #[test]
    fn homogeneous_propagating_medium_never_decays() {
        // omega/c > eta: |tr| = |2 cos sigma| <= 2, no band gap.
        let medium = MediumConfig::new(1.5, 1.5, 0.4).unwrap();
        let wave = WaveParams::new(5.0, 1.0).unwrap();
        let report = classify(&medium, wave);
        assert_eq!(report.region, Region::NoRightDecay);
        assert!((report.lambda1_abs - 1.0).abs() < 1e-9);
        assert_eq!(report.kappa, None);
        assert_eq!(report.c0, None);
    }

    #[test]
    fn homogeneous_evanescent_medium_decays_rightward_only() {
        // Eigenvector of the hyperbolic cell is (1, -s): kappa < 0.
        let medium = MediumConfig::new(2.0, 2.0, 0.5).unwrap();
        let wave = WaveParams::new(1.0, 2.0).unwrap();
        let report = classify(&medium, wave);
        assert_eq!(report.region, Region::RightDecayNoMatch);
        assert!(report.lambda1_abs < 1.0);
        assert!(report.kappa.unwrap() < 0.0);
        assert_eq!(report.c0, None);
    }

    #[test]
    fn region_codes_are_stable() {
        assert_eq!(Region::NoRightDecay.code(), 0);
        assert_eq!(Region::RightDecayNoMatch.code(), 1);
        assert_eq!(Region::Localized.code(), 2);
        assert_eq!(Region::Localized.to_string(), "LOCALIZED");
    }
}
