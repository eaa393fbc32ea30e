//! Reconstruction error metrics and the guard-band search.
//!
//! The error measure throughout is the per-point RMS difference over the
//! signal's N support points, `sqrt(sum (f - f')^2 / N)`, compared either
//! against an absolute threshold or against the zero-guard reconstruction
//! error as a baseline.

use crate::error::{DhtError, Result};
use crate::signal::Signal;
use crate::transform::reconstruct_with_guard;

/// Reconstruction error at one guard width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    /// RMS difference between original and reconstruction, signal units.
    pub rms_abs: f64,
    /// `rms_abs` divided by the zero-guard RMS error; exactly 1.0 at m = 0.
    pub ratio_to_zero_guard: f64,
}

/// One sweep row: guard width plus its error report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub guard: usize,
    pub rms_abs: f64,
    pub ratio_to_zero_guard: f64,
}

/// Reconstruction error as a function of guard width, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Zero-guard RMS error, the 100% reference for all ratios.
    pub fn baseline_rms(&self) -> f64 {
        self.rows[0].rms_abs
    }
}

/// RMS pointwise difference between two signals of identical shape.
pub fn rms_error(reference: &Signal, candidate: &Signal) -> Result<f64> {
    if reference.origin() != candidate.origin() || reference.width() != candidate.width() {
        return Err(DhtError::ShapeMismatch {
            origin_a: reference.origin(),
            width_a: reference.width(),
            origin_b: candidate.origin(),
            width_b: candidate.width(),
        });
    }
    let sum_sq: f64 = reference
        .samples()
        .iter()
        .zip(candidate.samples())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok((sum_sq / reference.width() as f64).sqrt())
}

/// Reconstruction error at guard `m`, absolute and relative to the m = 0
/// baseline. Fails with [`DhtError::DegenerateBaseline`] when the zero-guard
/// reconstruction is already exact.
pub fn error_ratio(signal: &Signal, guard: usize) -> Result<ErrorReport> {
    let baseline = rms_error(signal, &reconstruct_with_guard(signal, 0)?)?;
    if baseline == 0.0 {
        return Err(DhtError::DegenerateBaseline { rms_abs: 0.0 });
    }
    let rms_abs = rms_error(signal, &reconstruct_with_guard(signal, guard)?)?;
    Ok(ErrorReport {
        rms_abs,
        ratio_to_zero_guard: rms_abs / baseline,
    })
}

/// Smallest guard width in `[0, m_max]` whose reconstruction RMS error is
/// strictly below `theta`, or `None` if no width in range qualifies.
///
/// The scan is linear from 0 upward: the error is not proven monotone in m,
/// so a bisection could skip over the true minimum.
pub fn min_guard_band(signal: &Signal, theta: f64, m_max: usize) -> Result<Option<usize>> {
    if theta <= 0.0 || !theta.is_finite() {
        return Err(DhtError::InvalidInput(format!(
            "threshold must be a positive finite number, got {theta}"
        )));
    }
    for guard in 0..=m_max {
        let rms = rms_error(signal, &reconstruct_with_guard(signal, guard)?)?;
        if rms < theta {
            return Ok(Some(guard));
        }
    }
    Ok(None)
}

/// Reconstruction error for each guard width in `guard_values`.
///
/// The list must be non-empty, ascending, and start at 0 so the first row
/// can serve as the ratio baseline. Rows are computed independently from
/// scratch; their order matches the input.
pub fn sweep(signal: &Signal, guard_values: &[usize]) -> Result<SweepResult> {
    if guard_values.is_empty() {
        return Err(DhtError::InvalidInput("guard list is empty".into()));
    }
    if guard_values[0] != 0 {
        return Err(DhtError::InvalidInput(
            "guard list must start at 0 to define the ratio baseline".into(),
        ));
    }
    if guard_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DhtError::InvalidInput(
            "guard list must be strictly ascending".into(),
        ));
    }

    let baseline = rms_error(signal, &reconstruct_with_guard(signal, 0)?)?;
    if baseline == 0.0 {
        return Err(DhtError::DegenerateBaseline { rms_abs: 0.0 });
    }

    let mut rows = Vec::with_capacity(guard_values.len());
    for &guard in guard_values {
        let rms_abs = rms_error(signal, &reconstruct_with_guard(signal, guard)?)?;
        rows.push(SweepRow {
            guard,
            rms_abs,
            ratio_to_zero_guard: rms_abs / baseline,
        });
    }
    debug_assert_eq!(rows[0].ratio_to_zero_guard, 1.0);
    Ok(SweepResult { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rms_identical_is_zero() {
        let s = Signal::new(0, vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(rms_error(&s, &s).unwrap(), 0.0);
    }

    #[test]
    fn rms_direct_values() {
        let a = Signal::new(0, vec![1.0, 0.0]).unwrap();
        let b = Signal::new(0, vec![0.0, 0.0]).unwrap();
        assert!((rms_error(&a, &b).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);

        let c = Signal::new(0, vec![0.6, 0.6, 0.6, 0.6]).unwrap();
        let d = Signal::new(0, vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        assert!((rms_error(&c, &d).unwrap() - 0.1).abs() < 1e-15);
    }

    #[test]
    fn rms_shape_mismatch() {
        let a = Signal::new(0, vec![1.0, 2.0]).unwrap();
        let b = Signal::new(1, vec![1.0, 2.0]).unwrap();
        let c = Signal::new(0, vec![1.0]).unwrap();
        assert!(matches!(
            rms_error(&a, &b),
            Err(DhtError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            rms_error(&a, &c),
            Err(DhtError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn ratio_is_one_at_zero_guard() {
        let s = Signal::new(0, vec![1.0, -0.5, 0.25, 2.0]).unwrap();
        let report = error_ratio(&s, 0).unwrap();
        assert_eq!(report.ratio_to_zero_guard, 1.0);
        assert!(report.rms_abs > 0.0);
    }

    #[test]
    fn zero_signal_baseline_is_degenerate() {
        let s = Signal::zeros(0, 6).unwrap();
        assert!(matches!(
            error_ratio(&s, 3),
            Err(DhtError::DegenerateBaseline { .. })
        ));
        assert!(matches!(
            sweep(&s, &[0, 10]),
            Err(DhtError::DegenerateBaseline { .. })
        ));
    }

    #[test]
    fn min_guard_band_edges() {
        let s = Signal::new(0, vec![1.0, -0.5, 0.25, 2.0]).unwrap();
        let m0 = rms_error(&s, &reconstruct_with_guard(&s, 0).unwrap()).unwrap();
        // Threshold above the zero-guard error: first candidate qualifies.
        assert_eq!(min_guard_band(&s, m0 * 2.0, 50).unwrap(), Some(0));
        // Threshold nothing in range can reach.
        assert_eq!(min_guard_band(&s, 1e-300, 5).unwrap(), None);
        assert!(min_guard_band(&s, 0.0, 5).is_err());
        assert!(min_guard_band(&s, f64::NAN, 5).is_err());
    }

    #[test]
    fn sweep_validates_guard_list() {
        let s = Signal::new(0, vec![1.0, -0.5, 0.25, 2.0]).unwrap();
        assert!(sweep(&s, &[]).is_err());
        assert!(sweep(&s, &[1, 2]).is_err());
        assert!(sweep(&s, &[0, 5, 5]).is_err());
        assert!(sweep(&s, &[0, 7, 3]).is_err());
        let result = sweep(&s, &[0, 2, 8]).unwrap();
        assert_eq!(result.rows().len(), 3);
        assert_eq!(result.rows()[0].ratio_to_zero_guard, 1.0);
        assert_eq!(result.baseline_rms(), result.rows()[0].rms_abs);
    }
}
