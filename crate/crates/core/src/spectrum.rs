use crate::error::{DhtError, Result};

/// Transform-domain values covering a signal's support plus `guard` extra
/// points on each side.
///
/// For a signal of width `N` at origin `o`, the covered absolute index
/// range is exactly `[o - guard, o + N + guard - 1]`, so `values` has
/// length `N + 2 * guard` and `values[j]` holds `g(o - guard + j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GuardedSpectrum {
    signal_origin: i64,
    signal_width: usize,
    guard: usize,
    values: Vec<f64>,
}

impl GuardedSpectrum {
    /// Wraps precomputed transform values, checking length and finiteness.
    pub fn from_values(
        signal_origin: i64,
        signal_width: usize,
        guard: usize,
        values: Vec<f64>,
    ) -> Result<Self> {
        if signal_width == 0 {
            return Err(DhtError::InvalidInput("signal width must be >= 1".into()));
        }
        let expected = signal_width + 2 * guard;
        if values.len() != expected {
            return Err(DhtError::InvalidInput(format!(
                "expected {expected} spectrum values (width {signal_width} + 2*{guard}), got {}",
                values.len()
            )));
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(DhtError::NonFinite { index, value });
            }
        }
        Ok(Self {
            signal_origin,
            signal_width,
            guard,
            values,
        })
    }

    pub fn signal_origin(&self) -> i64 {
        self.signal_origin
    }

    pub fn signal_width(&self) -> usize {
        self.signal_width
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// First covered absolute index, `origin - guard`.
    pub fn start(&self) -> i64 {
        self.signal_origin - self.guard as i64
    }

    /// Last covered absolute index, `origin + N + guard - 1`.
    pub fn end(&self) -> i64 {
        self.signal_origin + (self.signal_width + self.guard) as i64 - 1
    }

    /// Total number of transform-domain points, `N + 2 * guard`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at absolute index `k`; must lie in the covered range.
    pub fn value_at(&self, k: i64) -> f64 {
        debug_assert!(k >= self.start() && k <= self.end());
        self.values[(k - self.start()) as usize]
    }
}
