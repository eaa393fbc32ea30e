//! Non-periodic discrete Hilbert transform for finite sequences.
//!
//! A finite signal's transform spreads energy over the whole integer line,
//! so reconstructing from a finite window loses information. This crate
//! implements the transform pair, reconstruction through a symmetric guard
//! band of m extra transform points on each side of the signal's support,
//! and the machinery to study how the RMS reconstruction error falls as the
//! guard band grows: error metrics, guard sweeps, a minimum-guard search,
//! the four standard test waveforms, and CSV/SVG reporting.
//!
//! ```
//! use dht_core::{generate, error_ratio, WaveformKind, WaveformSpec};
//!
//! let sine = generate(&WaveformSpec::new(WaveformKind::Sine, 90)).unwrap();
//! let report = error_ratio(&sine, 90).unwrap();
//! // A guard band as wide as the signal leaves ~1% of the unguarded error.
//! assert!(report.ratio_to_zero_guard < 0.02);
//! ```

pub mod error;
pub mod metrics;
pub mod oracle;
pub mod plot;
pub mod report;
pub mod signal;
pub mod spectrum;
pub mod transform;
pub mod waveform;

pub use error::{DhtError, Result};
pub use metrics::{
    error_ratio, min_guard_band, rms_error, sweep, ErrorReport, SweepResult, SweepRow,
};
pub use oracle::{oracle_forward, oracle_inverse};
pub use report::{parse_csv_rows, SweepTable, TableRow, CSV_HEADER};
pub use signal::Signal;
pub use spectrum::GuardedSpectrum;
pub use transform::{forward_dht, forward_guarded, inverse_dht, reconstruct_with_guard};
pub use waveform::{generate, WaveformKind, WaveformSpec};
