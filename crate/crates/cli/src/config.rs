//! Run configuration: a declarative TOML file plus `--set key=value`
//! overrides (flags win) and the `LOCWAVE_SEED` environment variable for
//! the optimizer seed.

use std::env;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use locwave_core::{cell_centers, Bounds, Interval, MediumConfig, PsoConfig, ScanGrid, WaveParams};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub wave: Option<WaveSection>,
    pub medium: Option<MediumSection>,
    pub medium_b: Option<MediumSection>,
    #[serde(default)]
    pub scan: ScanSection,
    #[serde(default)]
    pub mode: ModeSection,
    #[serde(default)]
    pub pso: PsoSection,
    #[serde(default)]
    pub compare: CompareSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaveSection {
    pub omega: f64,
    pub eta: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediumSection {
    pub c_a: f64,
    pub c_b: f64,
    pub theta: f64,
    pub c0: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanSection {
    pub eta_min: f64,
    pub eta_max: f64,
    pub eta_steps: usize,
    pub omega_min: f64,
    pub omega_max: f64,
    pub omega_steps: usize,
}

impl Default for ScanSection {
    fn default() -> Self {
        Self {
            eta_min: 0.0,
            eta_max: 8.0,
            eta_steps: 400,
            omega_min: 0.0,
            omega_max: 12.0,
            omega_steps: 400,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModeSection {
    pub n_periods: u32,
    pub samples_per_layer: u32,
    pub x_min: f64,
    pub field2d: bool,
    pub y_min: f64,
    pub y_max: f64,
    pub y_steps: usize,
}

impl Default for ModeSection {
    fn default() -> Self {
        Self {
            n_periods: 10,
            samples_per_layer: 40,
            x_min: -3.0,
            field2d: false,
            y_min: 0.0,
            y_max: std::f64::consts::TAU,
            y_steps: 121,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PsoSection {
    pub swarm_size: usize,
    pub max_iters: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    pub seed: u64,
    pub c_a_bounds: [f64; 2],
    pub c_b_bounds: [f64; 2],
    pub theta_bounds: [f64; 2],
    pub kappa_min: f64,
    pub kappa_tol: f64,
    pub distinct_eps: f64,
}

impl Default for PsoSection {
    fn default() -> Self {
        let cfg = PsoConfig::default();
        Self {
            swarm_size: cfg.swarm_size,
            max_iters: cfg.max_iters,
            inertia: cfg.inertia,
            cognitive: cfg.cognitive,
            social: cfg.social,
            seed: cfg.seed,
            c_a_bounds: [cfg.bounds.c_a.lo, cfg.bounds.c_a.hi],
            c_b_bounds: [cfg.bounds.c_b.lo, cfg.bounds.c_b.hi],
            theta_bounds: [cfg.bounds.theta.lo, cfg.bounds.theta.hi],
            kappa_min: cfg.kappa_min,
            kappa_tol: cfg.kappa_tol,
            distinct_eps: cfg.distinct_eps,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CompareSection {
    pub n_periods: u32,
}

impl Default for CompareSection {
    fn default() -> Self {
        Self { n_periods: 10 }
    }
}

/// Read `path`, apply `--set` overrides, then the environment seed
/// (overridden in turn by an explicit `--set pso.seed=...`).
pub fn load(path: &Path, sets: &[String]) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
    let mut root: toml::Table = text
        .parse()
        .map_err(|e| CliError::Config(format!("config parse error: {e}")))?;
    for spec in sets {
        apply_set(&mut root, spec)?;
    }
    let rendered = toml::to_string(&root)
        .map_err(|e| CliError::Config(format!("config rendering error: {e}")))?;
    let mut cfg: FileConfig =
        toml::from_str(&rendered).map_err(|e| CliError::Config(format!("invalid config: {e}")))?;

    let seed_set_by_flag = sets.iter().any(|s| s.trim_start().starts_with("pso.seed="));
    if !seed_set_by_flag {
        if let Ok(value) = env::var("LOCWAVE_SEED") {
            cfg.pso.seed = value.parse().map_err(|_| {
                CliError::Config(format!(
                    "invalid LOCWAVE_SEED: {value:?} is not a 64-bit unsigned integer"
                ))
            })?;
        }
    }
    Ok(cfg)
}

fn apply_set(root: &mut toml::Table, spec: &str) -> Result<(), CliError> {
    let (path, raw) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got {spec:?}")))?;
    let mut segments: Vec<&str> = path.split('.').collect();
    if segments.iter().any(|s| s.is_empty()) {
        return Err(CliError::Config(format!(
            "--set: empty key segment in {path:?}"
        )));
    }
    let leaf = segments.pop().expect("split always yields one segment");
    let mut cursor = root;
    for seg in segments {
        if !cursor.contains_key(seg) {
            cursor.insert(seg.to_string(), toml::Value::Table(toml::Table::new()));
        }
        cursor = cursor
            .get_mut(seg)
            .expect("just inserted")
            .as_table_mut()
            .ok_or_else(|| CliError::Config(format!("--set {path}: `{seg}` is not a table")))?;
    }
    cursor.insert(leaf.to_string(), parse_value(raw));
    Ok(())
}

/// Parse an override value as TOML; anything unparseable is a string.
fn parse_value(raw: &str) -> toml::Value {
    if let Ok(table) = format!("v = {raw}").parse::<toml::Table>() {
        if let Some(v) = table.get("v") {
            return v.clone();
        }
    }
    toml::Value::String(raw.to_string())
}

fn named<T>(result: Result<T, locwave_core::InvalidParam>, section: &str) -> Result<T, CliError> {
    result.map_err(|e| CliError::Config(format!("{section}.{}: {}", e.field, e.reason)))
}

impl FileConfig {
    pub fn wave(&self) -> Result<WaveParams, CliError> {
        let w = self
            .wave
            .as_ref()
            .ok_or_else(|| CliError::Config("missing [wave] section".into()))?;
        named(WaveParams::new(w.omega, w.eta), "wave")
    }

    fn medium_from(section: &MediumSection, name: &str) -> Result<MediumConfig, CliError> {
        let medium = named(
            MediumConfig::new(section.c_a, section.c_b, section.theta),
            name,
        )?;
        match section.c0 {
            Some(c0) => named(medium.with_c0(c0), name),
            None => Ok(medium),
        }
    }

    pub fn medium(&self) -> Result<MediumConfig, CliError> {
        let m = self
            .medium
            .as_ref()
            .ok_or_else(|| CliError::Config("missing [medium] section".into()))?;
        Self::medium_from(m, "medium")
    }

    pub fn medium_b(&self) -> Result<MediumConfig, CliError> {
        let m = self
            .medium_b
            .as_ref()
            .ok_or_else(|| CliError::Config("missing [medium_b] section".into()))?;
        Self::medium_from(m, "medium_b")
    }

    /// Scan axes sampled at the centers of `steps` equal cells of each
    /// range, which keeps every sample strictly inside (min, max).
    pub fn scan_grid(&self) -> Result<ScanGrid, CliError> {
        let s = &self.scan;
        for (steps, name) in [
            (s.eta_steps, "scan.eta_steps"),
            (s.omega_steps, "scan.omega_steps"),
        ] {
            if steps == 0 {
                return Err(CliError::Config(format!("{name}: must be positive")));
            }
        }
        // Degenerate or non-finite ranges; non-finite axis values also trip
        // the grid validation below with an axis-level message.
        if s.eta_max <= s.eta_min {
            return Err(CliError::Config(
                "scan.eta_max: must exceed scan.eta_min".into(),
            ));
        }
        if s.omega_max <= s.omega_min {
            return Err(CliError::Config(
                "scan.omega_max: must exceed scan.omega_min".into(),
            ));
        }
        named(
            ScanGrid::new(
                cell_centers(s.eta_min, s.eta_max, s.eta_steps),
                cell_centers(s.omega_min, s.omega_max, s.omega_steps),
            ),
            "scan",
        )
    }

    pub fn pso_config(&self) -> Result<PsoConfig, CliError> {
        let p = &self.pso;
        let cfg = PsoConfig {
            swarm_size: p.swarm_size,
            max_iters: p.max_iters,
            inertia: p.inertia,
            cognitive: p.cognitive,
            social: p.social,
            seed: p.seed,
            bounds: Bounds {
                c_a: Interval::new(p.c_a_bounds[0], p.c_a_bounds[1]),
                c_b: Interval::new(p.c_b_bounds[0], p.c_b_bounds[1]),
                theta: Interval::new(p.theta_bounds[0], p.theta_bounds[1]),
            },
            kappa_min: p.kappa_min,
            kappa_tol: p.kappa_tol,
            distinct_eps: p.distinct_eps,
        };
        named(cfg.validate(), "pso")?;
        Ok(cfg)
    }

    /// Inclusive y-axis for the optional 2-D field export.
    pub fn y_grid(&self) -> Result<Vec<f64>, CliError> {
        let m = &self.mode;
        if m.y_steps == 0 {
            return Err(CliError::Config("mode.y_steps: must be positive".into()));
        }
        if !m.y_min.is_finite() || !m.y_max.is_finite() || m.y_max < m.y_min {
            return Err(CliError::Config(
                "mode.y_max: y range must be finite with y_max >= y_min".into(),
            ));
        }
        if m.y_steps == 1 {
            return Ok(vec![m.y_min]);
        }
        let step = (m.y_max - m.y_min) / (m.y_steps - 1) as f64;
        Ok((0..m.y_steps).map(|i| m.y_min + step * i as f64).collect())
    }
}
