//! Plain-text signal files: UTF-8, one finite decimal amplitude per line,
//! `#`-prefixed comment lines and blank lines ignored, origin fixed at 0.

use std::fs;
use std::path::Path;

use dht_core::Signal;

use crate::error::CliError;

pub fn read_signal(path: &Path) -> Result<Signal, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let mut samples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| {
            CliError::Usage(format!(
                "{}:{}: expected one decimal amplitude per line, got '{trimmed}'",
                path.display(),
                lineno + 1
            ))
        })?;
        if !value.is_finite() {
            return Err(CliError::Usage(format!(
                "{}:{}: amplitude must be finite",
                path.display(),
                lineno + 1
            )));
        }
        samples.push(value);
    }
    Signal::new(0, samples).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
