mod error;
mod experiment;
mod signal_file;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use dht_core::{WaveformKind, WaveformSpec};

use error::CliError;
use experiment::{build_guard_list, ExperimentConfig, SignalSource};

const SIGNAL_FILE_HELP: &str = "Signal files are UTF-8 text with one finite decimal amplitude \
per line; blank lines and lines starting with '#' are ignored. The first sample sits at index 0.";

/// Guard-band experiments for the non-periodic discrete Hilbert transform.
///
/// Reconstructing a finite signal through the transform pair needs extra
/// transform-domain points (a guard band) on both sides of the signal's
/// index range; these commands measure how the RMS reconstruction error
/// falls as that guard band grows.
#[derive(Parser)]
#[command(name = "dht-guardband", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep guard widths for one waveform (or signal file) and write CSV/SVG
    #[command(after_help = SIGNAL_FILE_HELP)]
    Sweep(SweepArgs),
    /// Run the canonical four-waveform study (N = 90, guards 0..900) into a directory
    PaperSuite {
        /// Output directory for sine/ramp/square/triangle CSV and SVG files
        #[arg(long)]
        outdir: PathBuf,
    },
    /// Forward + inverse round trip of a signal file at one guard width
    #[command(after_help = SIGNAL_FILE_HELP)]
    Transform {
        /// Signal file, one amplitude per line
        #[arg(long)]
        input: PathBuf,
        /// Guard width m (extra transform points on each side)
        #[arg(long)]
        guard: usize,
        /// Per-sample report: n,original,reconstructed,error
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Waveform to generate: sine, ramp, square, or triangle
    #[arg(long, value_parser = parse_waveform, conflicts_with = "input")]
    waveform: Option<WaveformKind>,

    /// Signal width N
    #[arg(long, default_value_t = 90, conflicts_with = "input")]
    width: usize,

    /// Peak amplitude A
    #[arg(long, default_value_t = 1.0, conflicts_with = "input")]
    amplitude: f64,

    /// Whole periods across the width (sine and square)
    #[arg(long, default_value_t = 1, conflicts_with = "input")]
    periods: usize,

    /// Guard range as lo:hi:step, inclusive
    #[arg(long, default_value = "0:900:10")]
    guards: String,

    /// Extra guard values to merge into the range (repeatable)
    #[arg(long)]
    extra: Vec<usize>,

    /// Output CSV path (columns m,rms_abs,ratio_percent)
    #[arg(long)]
    csv: PathBuf,

    /// Optional SVG plot of ratio_percent vs m (log scale)
    #[arg(long)]
    svg: Option<PathBuf>,

    /// Report the smallest guard whose absolute RMS error is below this
    #[arg(long)]
    theta: Option<f64>,

    /// Sweep a signal file instead of a generated waveform
    #[arg(long)]
    input: Option<PathBuf>,
}

fn parse_waveform(s: &str) -> Result<WaveformKind, String> {
    s.parse().map_err(|e: dht_core::DhtError| e.to_string())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(args) => {
            let source = match (args.waveform, args.input) {
                (Some(kind), None) => SignalSource::Waveform(
                    WaveformSpec::new(kind, args.width)
                        .with_amplitude(args.amplitude)
                        .with_periods(args.periods),
                ),
                (None, Some(path)) => SignalSource::File(path),
                (None, None) => {
                    return Err(CliError::Usage(
                        "either --waveform or --input is required".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
            };
            let config = ExperimentConfig {
                source,
                guards: build_guard_list(&args.guards, &args.extra)?,
                theta: args.theta,
                output_csv: args.csv,
                output_svg: args.svg,
            };
            experiment::run_experiment(&config)?;
            Ok(())
        }
        Command::PaperSuite { outdir } => {
            experiment::run_paper_suite(&outdir)?;
            Ok(())
        }
        Command::Transform { input, guard, csv } => experiment::run_transform(&input, guard, &csv),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
