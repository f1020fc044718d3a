//! Constrained particle swarm optimization of the localization objective
//! over the design triple (c_A, c_B, θ) at a fixed wave point.
//!
//! The objective is |λ₁| for designs that localize and satisfy every
//! constraint, and the sentinel 2 otherwise, extending the objective's own
//! "no localization" branch to infeasibility. Randomness comes from ChaCha8:
//! stream 0 seeds the swarm, and particle i draws its per-iteration update
//! coefficients from stream i + 1, so runs are reproducible regardless of
//! how evaluations are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::InvalidParam;
use crate::localize::{classify, LocalizationReport, Region};
use crate::medium::{layer_wave_numbers, MediumConfig, WaveParams};

/// Objective value assigned to non-localizing or infeasible designs.
pub const INFEASIBLE_SENTINEL: f64 = 2.0;

/// Closed interval of one design dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

/// Per-dimension search bounds for (c_A, c_B, θ).
///
/// The θ default [1e-3, 1 − 1e-3] stands in for the open interval (0, 1);
/// the endpoints degenerate to a homogeneous medium and are never feasible
/// anyway.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub c_a: Interval,
    pub c_b: Interval,
    pub theta: Interval,
}

impl Bounds {
    pub fn as_array(&self) -> [Interval; 3] {
        [self.c_a, self.c_b, self.theta]
    }

    pub fn contains(&self, position: [f64; 3]) -> bool {
        self.c_a.contains(position[0])
            && self.c_b.contains(position[1])
            && self.theta.contains(position[2])
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            c_a: Interval::new(0.5, 3.5),
            c_b: Interval::new(0.5, 3.5),
            theta: Interval::new(1e-3, 1.0 - 1e-3),
        }
    }
}

/// Swarm hyperparameters, search bounds and constraint thresholds.
///
/// `kappa_tol` is a small slack below `kappa_min` applied when testing the
/// left-decay constraint; it absorbs the rounding of quoted design points
/// whose κ sits marginally at the threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub swarm_size: usize,
    pub max_iters: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    pub seed: u64,
    pub bounds: Bounds,
    pub kappa_min: f64,
    pub kappa_tol: f64,
    pub distinct_eps: f64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            swarm_size: 40,
            max_iters: 200,
            inertia: 0.7,
            cognitive: 1.5,
            social: 1.5,
            seed: 42,
            bounds: Bounds::default(),
            kappa_min: 0.5,
            kappa_tol: 0.01,
            distinct_eps: 1e-6,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<(), InvalidParam> {
        if self.swarm_size < 2 {
            return Err(InvalidParam::new("swarm_size", "must be at least 2"));
        }
        if self.max_iters == 0 {
            return Err(InvalidParam::new("max_iters", "must be positive"));
        }
        if !self.inertia.is_finite() || self.inertia <= 0.0 || self.inertia >= 1.0 {
            return Err(InvalidParam::new("inertia", "must lie in (0, 1)"));
        }
        if !self.cognitive.is_finite() || self.cognitive <= 0.0 {
            return Err(InvalidParam::new("cognitive", "must be > 0"));
        }
        if !self.social.is_finite() || self.social <= 0.0 {
            return Err(InvalidParam::new("social", "must be > 0"));
        }
        for (name, iv, lo_floor, hi_ceil) in [
            ("c_a_bounds", self.bounds.c_a, 0.0, f64::INFINITY),
            ("c_b_bounds", self.bounds.c_b, 0.0, f64::INFINITY),
            ("theta_bounds", self.bounds.theta, -f64::EPSILON, 1.0),
        ] {
            if !iv.lo.is_finite() || !iv.hi.is_finite() || iv.lo > iv.hi {
                return Err(InvalidParam::new(
                    name,
                    "must be a finite interval lo <= hi",
                ));
            }
            if iv.lo <= lo_floor || iv.hi > hi_ceil {
                return Err(InvalidParam::new(name, "outside the physical range"));
            }
        }
        if !self.kappa_min.is_finite() || self.kappa_min < 0.0 {
            return Err(InvalidParam::new("kappa_min", "must be finite and >= 0"));
        }
        if !self.kappa_tol.is_finite() || self.kappa_tol < 0.0 {
            return Err(InvalidParam::new("kappa_tol", "must be finite and >= 0"));
        }
        if !self.distinct_eps.is_finite() || self.distinct_eps <= 0.0 {
            return Err(InvalidParam::new("distinct_eps", "must be > 0"));
        }
        Ok(())
    }
}

/// Constraint violated by a design, in check order (cheap to expensive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    EqualSpeeds,
    SigmaANonpositive,
    SigmaBNonpositive,
    NotRightDecaying,
    NoC0Match,
    KappaTooSmall,
}

/// Outcome of the constraint checks for one design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub violations: Vec<Violation>,
}

impl FeasibilityResult {
    fn feasible() -> Self {
        Self {
            feasible: true,
            violations: Vec::new(),
        }
    }

    fn violated(violation: Violation) -> Self {
        Self {
            feasible: false,
            violations: vec![violation],
        }
    }
}

/// One evaluation of the constrained objective.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveEval {
    pub value: f64,
    pub feasibility: FeasibilityResult,
    /// Present once classification was reached (absent when a cheaper
    /// constraint already failed).
    pub report: Option<LocalizationReport>,
}

impl ObjectiveEval {
    fn infeasible(violation: Violation, report: Option<LocalizationReport>) -> Self {
        Self {
            value: INFEASIBLE_SENTINEL,
            feasibility: FeasibilityResult::violated(violation),
            report,
        }
    }
}

/// Constrained localization objective at `position` = (c_A, c_B, θ).
///
/// Checks run cheap-to-expensive and stop at the first failure:
/// |c_A − c_B| ≥ distinct_eps, σ_A > 0, σ_B > 0, right decay, half-space
/// match, κ above the left-decay threshold. Feasible designs score |λ₁|;
/// everything else scores [`INFEASIBLE_SENTINEL`].
pub fn evaluate_objective(position: [f64; 3], wave: WaveParams, cfg: &PsoConfig) -> ObjectiveEval {
    let [c_a, c_b, theta] = position;
    if (c_a - c_b).abs() < cfg.distinct_eps {
        return ObjectiveEval::infeasible(Violation::EqualSpeeds, None);
    }
    let medium = match MediumConfig::new(c_a, c_b, theta) {
        Ok(m) => m,
        Err(_) => return ObjectiveEval::infeasible(Violation::SigmaANonpositive, None),
    };
    let wn = layer_wave_numbers(&medium, wave);
    if !wn.sigma_a.is_propagating() {
        return ObjectiveEval::infeasible(Violation::SigmaANonpositive, None);
    }
    if !wn.sigma_b.is_propagating() {
        return ObjectiveEval::infeasible(Violation::SigmaBNonpositive, None);
    }
    let report = classify(&medium, wave);
    match report.region {
        Region::NoRightDecay => {
            ObjectiveEval::infeasible(Violation::NotRightDecaying, Some(report))
        }
        Region::RightDecayNoMatch => ObjectiveEval::infeasible(Violation::NoC0Match, Some(report)),
        Region::Localized => {
            let kappa = report.kappa.expect("localized reports carry kappa");
            if kappa <= cfg.kappa_min - cfg.kappa_tol {
                ObjectiveEval::infeasible(Violation::KappaTooSmall, Some(report))
            } else {
                ObjectiveEval {
                    value: report.lambda1_abs,
                    feasibility: FeasibilityResult::feasible(),
                    report: Some(report),
                }
            }
        }
    }
}

/// Swarm member state.
#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: [f64; 3],
    pub velocity: [f64; 3],
    pub best_position: [f64; 3],
    pub best_value: f64,
}

/// Result of a swarm run.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoRun {
    pub best_position: [f64; 3],
    pub best_value: f64,
    /// Global best value after initialization (index 0) and after each
    /// iteration; non-increasing.
    pub history: Vec<f64>,
    pub evaluations: u64,
    pub iterations: usize,
    /// Iteration at which the final best was first attained (0 = at
    /// initialization).
    pub best_iteration: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PsoError {
    #[error("no feasible point: every evaluated design scored the infeasible sentinel")]
    NoFeasiblePoint,
    #[error(transparent)]
    InvalidConfig(#[from] InvalidParam),
}

/// Global-best PSO over the configured bounds.
///
/// v ← w·v + c₁·r₁⊙(pbest − x) + c₂·r₂⊙(gbest − x), x ← x + v, with fresh
/// uniform [0, 1) draws per component; positions clamp to the bounds with
/// the velocity zeroed on the clamped component. Initial positions are
/// uniform over the bounds and initial velocities uniform over ±¼ of each
/// dimension's width. Given (seed, cfg, wave) the run is bit-reproducible.
pub fn pso_minimize(wave: WaveParams, cfg: &PsoConfig) -> Result<PsoRun, PsoError> {
    pso_minimize_observed(wave, cfg, |_, _| ())
}

/// [`pso_minimize`] with a per-iteration observer.
///
/// `observe(iteration, particles)` runs after every evaluation sweep
/// (iteration 0 is the initial one); it sees the evaluated swarm state and
/// does not influence the run.
pub fn pso_minimize_observed(
    wave: WaveParams,
    cfg: &PsoConfig,
    mut observe: impl FnMut(usize, &[Particle]),
) -> Result<PsoRun, PsoError> {
    cfg.validate()?;
    let dims = cfg.bounds.as_array();

    // Initialization draws: per particle, position then velocity, component
    // order (c_A, c_B, theta).
    let mut init_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut particles: Vec<Particle> = (0..cfg.swarm_size)
        .map(|_| {
            let mut position = [0.0; 3];
            for (x, iv) in position.iter_mut().zip(&dims) {
                *x = iv.lo + init_rng.random::<f64>() * iv.width();
            }
            let mut velocity = [0.0; 3];
            for (v, iv) in velocity.iter_mut().zip(&dims) {
                *v = (init_rng.random::<f64>() - 0.5) * 0.5 * iv.width();
            }
            Particle {
                position,
                velocity,
                best_position: position,
                best_value: f64::INFINITY,
            }
        })
        .collect();
    let mut update_rngs: Vec<ChaCha8Rng> = (0..cfg.swarm_size)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64 + 1);
            rng
        })
        .collect();

    let mut evaluations = 0_u64;
    for p in particles.iter_mut() {
        let eval = evaluate_objective(p.position, wave, cfg);
        evaluations += 1;
        p.best_value = eval.value;
        p.best_position = p.position;
    }
    let mut best_value = f64::INFINITY;
    let mut best_position = particles[0].position;
    for p in &particles {
        if p.best_value < best_value {
            best_value = p.best_value;
            best_position = p.best_position;
        }
    }
    let mut best_iteration = 0;
    let mut history = Vec::with_capacity(cfg.max_iters + 1);
    history.push(best_value);
    observe(0, &particles);

    for iter in 1..=cfg.max_iters {
        for (i, p) in particles.iter_mut().enumerate() {
            let rng = &mut update_rngs[i];
            let r1: [f64; 3] = [rng.random(), rng.random(), rng.random()];
            let r2: [f64; 3] = [rng.random(), rng.random(), rng.random()];
            for d in 0..3 {
                p.velocity[d] = cfg.inertia * p.velocity[d]
                    + cfg.cognitive * r1[d] * (p.best_position[d] - p.position[d])
                    + cfg.social * r2[d] * (best_position[d] - p.position[d]);
                p.position[d] += p.velocity[d];
                if p.position[d] < dims[d].lo {
                    p.position[d] = dims[d].lo;
                    p.velocity[d] = 0.0;
                } else if p.position[d] > dims[d].hi {
                    p.position[d] = dims[d].hi;
                    p.velocity[d] = 0.0;
                }
            }
        }
        // Evaluation step; a sequential barrier, no randomness consumed.
        for p in particles.iter_mut() {
            let eval = evaluate_objective(p.position, wave, cfg);
            evaluations += 1;
            if eval.value < p.best_value {
                p.best_value = eval.value;
                p.best_position = p.position;
            }
        }
        for p in &particles {
            if p.best_value < best_value {
                best_value = p.best_value;
                best_position = p.best_position;
                best_iteration = iter;
            }
        }
        history.push(best_value);
        observe(iter, &particles);
    }

    if best_value >= INFEASIBLE_SENTINEL {
        return Err(PsoError::NoFeasiblePoint);
    }
    Ok(PsoRun {
        best_position,
        best_value,
        history,
        evaluations,
        iterations: cfg.max_iters,
        best_iteration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wave() -> WaveParams {
        WaveParams::new(6.18, 2.0).unwrap()
    }

    #[test]
    fn equal_speeds_are_rejected_before_anything_else() {
        let eval = evaluate_objective([1.7, 1.7, 0.5], wave(), &PsoConfig::default());
        assert_eq!(eval.value, INFEASIBLE_SENTINEL);
        assert_eq!(eval.feasibility.violations, vec![Violation::EqualSpeeds]);
        assert!(!eval.feasibility.feasible);
        assert!(eval.report.is_none());
    }

    #[test]
    fn evanescent_layers_are_infeasible() {
        // omega/c_a = 6.18/3.5 < eta = 2.
        let eval = evaluate_objective([3.5, 1.0, 0.5], wave(), &PsoConfig::default());
        assert_eq!(
            eval.feasibility.violations,
            vec![Violation::SigmaANonpositive]
        );
        let eval = evaluate_objective([1.0, 3.5, 0.5], wave(), &PsoConfig::default());
        assert_eq!(
            eval.feasibility.violations,
            vec![Violation::SigmaBNonpositive]
        );
    }

    #[test]
    fn non_decaying_design_scores_sentinel() {
        let inside_band = WaveParams::new(3.0, 0.5).unwrap();
        let eval = evaluate_objective([2.0, 1.0, 0.5], inside_band, &PsoConfig::default());
        assert_eq!(eval.value, INFEASIBLE_SENTINEL);
        assert_eq!(
            eval.feasibility.violations,
            vec![Violation::NotRightDecaying]
        );
        assert!(eval.report.is_some());
    }

    #[test]
    fn degenerate_swarm_keeps_a_constant_history() {
        // Zero-width bounds pin every particle to one feasible point with
        // zero initial velocity, so pbest = gbest = x and the update terms
        // vanish for any coefficients.
        let cfg = PsoConfig {
            swarm_size: 5,
            max_iters: 12,
            bounds: Bounds {
                c_a: Interval::new(2.0, 2.0),
                c_b: Interval::new(1.0, 1.0),
                theta: Interval::new(0.6, 0.6),
            },
            ..PsoConfig::default()
        };
        let run = pso_minimize(wave(), &cfg).unwrap();
        let expected = evaluate_objective([2.0, 1.0, 0.6], wave(), &cfg).value;
        assert_eq!(run.best_value, expected);
        assert!(run.history.iter().all(|&h| h == expected));
        assert_eq!(run.history.len(), 13);
        assert_eq!(run.best_iteration, 0);
    }

    #[test]
    fn invalid_configs_are_named() {
        let cfg = PsoConfig {
            swarm_size: 1,
            ..PsoConfig::default()
        };
        assert_eq!(cfg.validate().unwrap_err().field, "swarm_size");
        let cfg = PsoConfig {
            inertia: 1.0,
            ..PsoConfig::default()
        };
        assert_eq!(cfg.validate().unwrap_err().field, "inertia");
        let cfg = PsoConfig {
            bounds: Bounds {
                theta: Interval::new(0.2, 1.2),
                ..Bounds::default()
            },
            ..PsoConfig::default()
        };
        assert_eq!(cfg.validate().unwrap_err().field, "theta_bounds");
    }

    #[test]
    fn infeasible_wave_point_reports_no_feasible_point() {
        // omega/eta = 0.25 is below every admissible speed: sigma_A can
        // never be positive inside the default bounds.
        let wave = WaveParams::new(0.5, 2.0).unwrap();
        let cfg = PsoConfig {
            swarm_size: 8,
            max_iters: 5,
            ..PsoConfig::default()
        };
        assert_eq!(
            pso_minimize(wave, &cfg).unwrap_err(),
            PsoError::NoFeasiblePoint
        );
    }
}
