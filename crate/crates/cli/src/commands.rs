//! The five subcommands. Exit codes: 0 success, 2 config error,
//! 3 not-localized, 4 optimizer found no feasible point.

use std::path::Path;

use locwave_core::{
    cell_matrix, classify, eigen_decompose, field_2d, field_profile, match_half_space,
    pso_minimize, scan_wave_plane, FieldError, MediumConfig, PsoError, Region, WaveParams,
};

use crate::config::FileConfig;
use crate::output;
use crate::{CliError, Format};

fn print_report(report: &locwave_core::LocalizationReport) {
    let opt = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_else(|| "-".into());
    println!(
        "region={} |lambda1|={:.6} kappa={} c0={}",
        report.region,
        report.lambda1_abs,
        opt(report.kappa),
        opt(report.c0),
    );
}

pub fn run_classify(cfg: &FileConfig, out: &Path, format: Format) -> Result<u8, CliError> {
    let medium = cfg.medium()?;
    let wave = cfg.wave()?;
    let report = classify(&medium, wave);
    print_report(&report);
    match format {
        Format::Json => {
            output::write_file(&out.join("classify.json"), &output::classify_json(&report))?
        }
        Format::Csv => {
            output::write_file(&out.join("classify.csv"), &output::classify_csv(&report))?
        }
    }
    Ok(if report.region == Region::Localized {
        0
    } else {
        3
    })
}

pub fn run_scan(cfg: &FileConfig, out: &Path, _format: Format) -> Result<u8, CliError> {
    let medium = cfg.medium()?;
    let grid = cfg.scan_grid()?;
    let map = scan_wave_plane(&medium, &grid);
    let path = out.join("scan.csv");
    output::write_file(&path, &output::scan_csv(&map))?;
    println!(
        "scan: {} x {} cells -> {}",
        grid.eta_axis().len(),
        grid.omega_axis().len(),
        path.display()
    );
    Ok(0)
}

/// The decaying eigenpair and half-space match behind a LOCALIZED report.
fn localized_mode(
    medium: &MediumConfig,
    wave: WaveParams,
) -> Result<(locwave_core::EigenPair, locwave_core::HalfSpaceMatch), CliError> {
    let report = classify(medium, wave);
    if report.region != Region::Localized {
        print_report(&report);
        return Err(CliError::NotLocalized(format!(
            "mode is {} at omega={}, eta={}",
            report.region,
            wave.omega(),
            wave.eta()
        )));
    }
    let pair = eigen_decompose(&cell_matrix(medium, wave))
        .expect("localized classification implies a real eigenpair");
    let matched = match_half_space(&pair, wave).expect("localized classification implies a match");
    Ok((pair, matched))
}

pub fn run_mode(cfg: &FileConfig, out: &Path, _format: Format) -> Result<u8, CliError> {
    let wave = cfg.wave()?;
    let (pair, matched) = localized_mode(&cfg.medium()?, wave)?;
    let kappa = matched.kappa;
    let medium = cfg
        .medium()?
        .with_c0(matched.c0)
        .expect("matched speed is positive");
    let mode = &cfg.mode;
    let profile = field_profile(
        &medium,
        wave,
        &pair,
        kappa,
        mode.n_periods,
        mode.samples_per_layer,
        mode.x_min,
    )
    .map_err(|e| match e {
        FieldError::NotLocalized => CliError::NotLocalized(e.to_string()),
        FieldError::InvalidWindow(_) => CliError::Config(format!("mode: {e}")),
    })?;

    let profile_path = out.join("profile.csv");
    output::write_file(&profile_path, &output::profile_csv(&profile))?;
    let layers_path = out.join("layers.csv");
    output::write_file(&layers_path, &output::layers_csv(&medium, mode.n_periods))?;
    let mut written = vec![profile_path, layers_path];

    if mode.field2d {
        let y = cfg.y_grid()?;
        let field = field_2d(&profile, wave, &y);
        let path = out.join("field2d.csv");
        output::write_file(&path, &output::field2d_csv(&field))?;
        written.push(path);
    }
    println!(
        "mode: {} samples, kappa={:.6} -> {}",
        profile.x_samples.len(),
        kappa,
        written
            .iter()
            .map(|p| p.display().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(0)
}

pub fn run_optimize(cfg: &FileConfig, out: &Path, _format: Format) -> Result<u8, CliError> {
    let wave = cfg.wave()?;
    let pso_cfg = cfg.pso_config()?;
    let run = pso_minimize(wave, &pso_cfg).map_err(|e| match e {
        PsoError::NoFeasiblePoint => CliError::Infeasible(e.to_string()),
        PsoError::InvalidConfig(inner) => {
            CliError::Config(format!("pso.{}: {}", inner.field, inner.reason))
        }
    })?;

    // Re-classify the winner for its decay data; a sub-sentinel objective
    // certifies a localized design.
    let medium = MediumConfig::new(
        run.best_position[0],
        run.best_position[1],
        run.best_position[2],
    )
    .expect("positions stay inside physical bounds");
    let report = classify(&medium, wave);

    output::write_file(
        &out.join("best.json"),
        &output::best_json(
            run.best_position,
            run.best_value,
            report.kappa,
            report.c0,
            pso_cfg.seed,
            run.iterations,
            run.best_iteration,
        ),
    )?;
    output::write_file(&out.join("history.csv"), &output::history_csv(&run.history))?;
    println!(
        "best: c_a={:.6} c_b={:.6} theta={:.6}",
        run.best_position[0], run.best_position[1], run.best_position[2]
    );
    println!(
        "value={:.6} (first attained at iteration {} of {}, {} evaluations, seed {})",
        run.best_value, run.best_iteration, run.iterations, run.evaluations, pso_cfg.seed
    );
    Ok(0)
}

pub fn run_compare(cfg: &FileConfig, out: &Path, _format: Format) -> Result<u8, CliError> {
    let wave = cfg.wave()?;
    let medium_a = cfg.medium()?;
    let medium_b = cfg.medium_b()?;
    let report_a = classify(&medium_a, wave);
    let report_b = classify(&medium_b, wave);
    for (name, report) in [("medium", &report_a), ("medium_b", &report_b)] {
        if report.region != Region::Localized {
            return Err(CliError::NotLocalized(format!(
                "{name} is {} at omega={}, eta={}",
                report.region,
                wave.omega(),
                wave.eta()
            )));
        }
    }
    let n = cfg.compare.n_periods;
    let path = out.join("compare.csv");
    output::write_file(
        &path,
        &output::compare_csv(report_a.lambda1_abs, report_b.lambda1_abs, n),
    )?;
    println!(
        "compare: |lambda1| {:.6} vs {:.6} over {} periods -> {}",
        report_a.lambda1_abs,
        report_b.lambda1_abs,
        n,
        path.display()
    );
    Ok(0)
}
