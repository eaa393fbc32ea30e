use crate::error::{DhtError, Result};

/// A finite real-valued sequence anchored at an integer origin.
///
/// The sample at absolute index `i` is `samples[i - origin]` for
/// `origin <= i < origin + width`; outside that range the signal is
/// identically zero. Parity-sensitive operations (the transform pair)
/// work on absolute indices, so a signal at an odd origin behaves
/// differently from the same samples at origin 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    origin: i64,
    samples: Vec<f64>,
}

impl Signal {
    /// Builds a signal, rejecting empty or non-finite input.
    pub fn new(origin: i64, samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(DhtError::InvalidInput("signal must have width >= 1".into()));
        }
        for (index, &value) in samples.iter().enumerate() {
            if !value.is_finite() {
                return Err(DhtError::NonFinite { index, value });
            }
        }
        Ok(Self { origin, samples })
    }

    /// All-zero signal of the given width.
    pub fn zeros(origin: i64, width: usize) -> Result<Self> {
        Self::new(origin, vec![0.0; width])
    }

    /// Unit impulse at absolute index `at`, embedded in a width-`width` signal.
    pub fn impulse(origin: i64, width: usize, at: i64) -> Result<Self> {
        if at < origin || at >= origin + width as i64 {
            return Err(DhtError::InvalidInput(format!(
                "impulse index {at} outside [{origin}, {})",
                origin + width as i64
            )));
        }
        let mut samples = vec![0.0; width];
        samples[(at - origin) as usize] = 1.0;
        Self::new(origin, samples)
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// Number of samples N.
    pub fn width(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Absolute index of the last sample, `origin + N - 1`.
    pub fn end(&self) -> i64 {
        self.origin + self.samples.len() as i64 - 1
    }

    /// Value at absolute index `i`; zero outside the support.
    pub fn value_at(&self, i: i64) -> f64 {
        if i < self.origin || i > self.end() {
            0.0
        } else {
            self.samples[(i - self.origin) as usize]
        }
    }

    /// Root-mean-square of the samples over the support.
    pub fn rms(&self) -> f64 {
        let sum_sq: f64 = self.samples.iter().map(|x| x * x).sum();
        (sum_sq / self.samples.len() as f64).sqrt()
    }

    /// Same samples re-anchored at `origin + shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            origin: self.origin + shift,
            samples: self.samples.clone(),
        }
    }
}
