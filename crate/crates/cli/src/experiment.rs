//! Experiment orchestration: resolve the signal, run the sweep, write the
//! CSV and SVG artifacts, and report threshold searches.

use std::fs;
use std::path::{Path, PathBuf};

use dht_core::{
    generate, min_guard_band, plot, report::format_sig12, sweep, Signal, SweepTable, WaveformKind,
    WaveformSpec,
};

use crate::error::CliError;
use crate::signal_file::read_signal;

/// Where the experiment's signal comes from; exactly one source per run.
pub enum SignalSource {
    Waveform(WaveformSpec),
    File(PathBuf),
}

impl SignalSource {
    fn resolve(&self) -> Result<(Signal, String), CliError> {
        match self {
            SignalSource::Waveform(spec) => Ok((generate(spec)?, spec.kind.to_string())),
            SignalSource::File(path) => {
                let label = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "signal".to_string());
                Ok((read_signal(path)?, label))
            }
        }
    }
}

pub struct ExperimentConfig {
    pub source: SignalSource,
    pub guards: Vec<usize>,
    pub theta: Option<f64>,
    pub output_csv: PathBuf,
    pub output_svg: Option<PathBuf>,
}

/// Parses `lo:hi:step`, merges any extra values, sorts, and dedups.
/// The resulting list must start at 0 for the ratio baseline to exist.
pub fn build_guard_list(range: &str, extra: &[usize]) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = range.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(CliError::Usage(format!(
            "--guards expects lo:hi:step, got '{range}'"
        )));
    };
    let parse = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("--guards: bad {what} '{s}'")))
    };
    let (lo, hi, step) = (parse(lo, "lo")?, parse(hi, "hi")?, parse(step, "step")?);
    if step == 0 {
        return Err(CliError::Usage("--guards: step must be >= 1".into()));
    }
    if lo > hi {
        return Err(CliError::Usage(format!(
            "--guards: empty range {lo}:{hi}:{step}"
        )));
    }
    let mut guards: Vec<usize> = (lo..=hi).step_by(step).collect();
    guards.extend_from_slice(extra);
    guards.sort_unstable();
    guards.dedup();
    if guards.first() != Some(&0) {
        return Err(CliError::Usage(
            "guard list must include 0 (the ratio baseline)".into(),
        ));
    }
    Ok(guards)
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<SweepTable, CliError> {
    let (signal, label) = config.source.resolve()?;
    let result = sweep(&signal, &config.guards)?;
    let table = SweepTable::from_sweep(label, signal.width(), &result);

    fs::write(&config.output_csv, table.to_csv()).map_err(CliError::io(&config.output_csv))?;
    if let Some(svg_path) = &config.output_svg {
        let svg = plot::sweep_svg(&table)?;
        fs::write(svg_path, svg).map_err(CliError::io(svg_path))?;
    }

    println!(
        "{} (N = {}): {} guard values, baseline rms {:.6e}",
        table.label,
        table.width,
        table.rows.len(),
        table.baseline_rms()
    );
    if let Some(theta) = config.theta {
        let m_max = *config.guards.last().expect("guard list is non-empty");
        match min_guard_band(&signal, theta, m_max)? {
            Some(m) => println!("smallest guard with rms error < {theta:e}: m = {m}"),
            None => println!("no guard in [0, {m_max}] reaches rms error < {theta:e}"),
        }
    }
    Ok(table)
}

/// Reference ratios (%) at m = 90 for the four canonical waveforms.
const REFERENCE_PERCENT: [(WaveformKind, f64); 4] = [
    (WaveformKind::Sine, 1.02),
    (WaveformKind::Ramp, 0.62),
    (WaveformKind::Square, 1.6),
    (WaveformKind::Triangle, 1.08),
];

/// The canonical four-waveform run: N = 90, guards 0..900 step 10 plus 90,
/// one CSV and one SVG per waveform, and a summary of the m = 90 ratios.
pub fn run_paper_suite(outdir: &Path) -> Result<Vec<SweepTable>, CliError> {
    fs::create_dir_all(outdir).map_err(CliError::io(outdir))?;
    let guards = build_guard_list("0:900:10", &[90])?;

    let mut tables = Vec::new();
    for (kind, _) in REFERENCE_PERCENT {
        let config = ExperimentConfig {
            source: SignalSource::Waveform(WaveformSpec::new(kind, 90)),
            guards: guards.clone(),
            theta: None,
            output_csv: outdir.join(format!("{kind}.csv")),
            output_svg: Some(outdir.join(format!("{kind}.svg"))),
        };
        tables.push(run_experiment(&config)?);
    }

    println!("\nratio of rms error at m = 90 to m = 0:");
    println!("{:<10} {:>12} {:>8}", "waveform", "computed %", "ref %");
    let mut worst: Option<(&str, f64)> = None;
    for (table, (_, reference)) in tables.iter().zip(REFERENCE_PERCENT) {
        let row = table.row_at(90).expect("paper suite always sweeps m = 90");
        println!(
            "{:<10} {:>12.4} {:>8}",
            table.label, row.ratio_percent, reference
        );
        if worst.is_none_or(|(_, w)| row.ratio_percent > w) {
            worst = Some((&table.label, row.ratio_percent));
        }
    }
    let (worst_label, worst_ratio) = worst.expect("suite is non-empty");
    println!("largest m = 90 ratio: {worst_label} at {worst_ratio:.4}%");
    Ok(tables)
}

/// Forward + inverse round trip for a user-supplied signal, with a
/// per-sample CSV report (`n,original,reconstructed,error`).
pub fn run_transform(input: &Path, guard: usize, csv_path: &Path) -> Result<(), CliError> {
    let signal = read_signal(input)?;
    let reconstructed = dht_core::reconstruct_with_guard(&signal, guard)?;
    let rms = dht_core::rms_error(&signal, &reconstructed)?;

    let mut csv = String::from("n,original,reconstructed,error\n");
    for (j, (orig, rec)) in signal
        .samples()
        .iter()
        .zip(reconstructed.samples())
        .enumerate()
    {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            signal.origin() + j as i64,
            format_sig12(*orig),
            format_sig12(*rec),
            format_sig12(orig - rec)
        ));
    }
    fs::write(csv_path, csv).map_err(CliError::io(csv_path))?;

    let signal_rms = signal.rms();
    if signal_rms > 0.0 {
        println!(
            "N = {}, guard = {guard}: rms error {:.6e} ({:.4}% of signal rms)",
            signal.width(),
            rms,
            100.0 * rms / signal_rms
        );
    } else {
        println!(
            "N = {}, guard = {guard}: rms error {rms:.6e}",
            signal.width()
        );
    }
    Ok(())
}
