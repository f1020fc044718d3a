//! Plot-ready data files. CSV for grids and traces, JSON for single
//! records. All numbers use the shortest representation that parses back
//! to the same value, rows are newline-terminated, and output is a pure
//! function of the run configuration.

use std::fs;
use std::path::Path;

use serde::Serialize;

use locwave_core::{Field2d, FieldProfile, LocalizationReport, MediumConfig, RegionMap};

use crate::CliError;

pub fn fmt(v: f64) -> String {
    format!("{v}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ClassifyRecord {
    region: u8,
    lambda1_abs: f64,
    kappa: Option<f64>,
    c0: Option<f64>,
}

pub fn classify_json(report: &LocalizationReport) -> String {
    let record = ClassifyRecord {
        region: report.region.code(),
        lambda1_abs: report.lambda1_abs,
        kappa: report.kappa,
        c0: report.c0,
    };
    let mut text = serde_json::to_string_pretty(&record).expect("record serializes");
    text.push('\n');
    text
}

pub fn classify_csv(report: &LocalizationReport) -> String {
    format!(
        "region,lambda1_abs,kappa,c0\n{},{},{},{}\n",
        report.region.code(),
        fmt(report.lambda1_abs),
        fmt_opt(report.kappa),
        fmt_opt(report.c0),
    )
}

/// Row-major region map: η outer, ω inner.
pub fn scan_csv(map: &RegionMap) -> String {
    let mut out = String::with_capacity(map.cells().len() * 24 + 32);
    out.push_str("eta,omega,region,lambda1_abs\n");
    let n_omega = map.grid().omega_axis().len();
    for (idx, cell) in map.cells().iter().enumerate() {
        let eta = map.grid().eta_axis()[idx / n_omega];
        let omega = map.grid().omega_axis()[idx % n_omega];
        out.push_str(&fmt(eta));
        out.push(',');
        out.push_str(&fmt(omega));
        out.push(',');
        out.push_str(&cell.region.code().to_string());
        out.push(',');
        out.push_str(&fmt(cell.lambda1_abs));
        out.push('\n');
    }
    out
}

pub fn profile_csv(profile: &FieldProfile) -> String {
    let mut out = String::from("x,u,du\n");
    for i in 0..profile.x_samples.len() {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt(profile.x_samples[i]),
            fmt(profile.u_values[i]),
            fmt(profile.du_values[i]),
        ));
    }
    out
}

/// Layer extents and material labels; cell boundaries sit at the integer
/// `x_start` of each A row, material changes at its `x_end`.
pub fn layers_csv(medium: &MediumConfig, n_periods: u32) -> String {
    let mut out = String::from("x_start,x_end,material\n");
    let theta = medium.theta();
    for m in 0..n_periods {
        let start = m as f64;
        if theta > 0.0 {
            out.push_str(&format!("{},{},A\n", fmt(start), fmt(start + theta)));
        }
        if theta < 1.0 {
            out.push_str(&format!("{},{},B\n", fmt(start + theta), fmt(start + 1.0)));
        }
    }
    out
}

pub fn field2d_csv(field: &Field2d) -> String {
    let mut out = String::from("x,y,value\n");
    for (i, &x) in field.x.iter().enumerate() {
        for (j, &y) in field.y.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{}\n",
                fmt(x),
                fmt(y),
                fmt(field.values[i][j])
            ));
        }
    }
    out
}

pub fn history_csv(history: &[f64]) -> String {
    let mut out = String::from("iteration,best_value\n");
    for (i, &v) in history.iter().enumerate() {
        out.push_str(&format!("{i},{}\n", fmt(v)));
    }
    out
}

#[derive(Serialize)]
struct PositionRecord {
    c_a: f64,
    c_b: f64,
    theta: f64,
}

#[derive(Serialize)]
struct BestRecord {
    position: PositionRecord,
    value: f64,
    kappa: Option<f64>,
    c0: Option<f64>,
    seed: u64,
    iterations: usize,
    best_iteration: usize,
}

#[allow(clippy::too_many_arguments)]
pub fn best_json(
    position: [f64; 3],
    value: f64,
    kappa: Option<f64>,
    c0: Option<f64>,
    seed: u64,
    iterations: usize,
    best_iteration: usize,
) -> String {
    let record = BestRecord {
        position: PositionRecord {
            c_a: position[0],
            c_b: position[1],
            theta: position[2],
        },
        value,
        kappa,
        c0,
        seed,
        iterations,
        best_iteration,
    };
    let mut text = serde_json::to_string_pretty(&record).expect("record serializes");
    text.push('\n');
    text
}

/// Per-period envelope amplitudes |λ₁|^m for two media side by side.
pub fn compare_csv(lambda_a: f64, lambda_b: f64, n_periods: u32) -> String {
    let mut out = String::from("period,amplitude_a,amplitude_b\n");
    for m in 0..=n_periods {
        out.push_str(&format!(
            "{m},{},{}\n",
            fmt(lambda_a.powi(m as i32)),
            fmt(lambda_b.powi(m as i32)),
        ));
    }
    out
}
