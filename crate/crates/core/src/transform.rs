//! The non-periodic discrete Hilbert transform pair.
//!
//! Forward, for a signal f supported on a finite index range:
//!
//! ```text
//! g(k) = (2/pi) * sum over n of opposite parity to k of f(n) / (k - n)
//! ```
//!
//! Inverse, restricted to the transform values actually available:
//!
//! ```text
//! f(n) = (-2/pi) * sum over k of opposite parity to n of g(k) / (n - k)
//! ```
//!
//! The parity split means every contributing denominator is odd and never
//! zero. Truncating the inverse sum to a finite guarded range is exactly the
//! approximation whose error the rest of this crate measures.

use std::f64::consts::FRAC_2_PI;

use crate::error::{DhtError, Result};
use crate::signal::Signal;
use crate::spectrum::GuardedSpectrum;

#[inline]
fn same_parity(a: i64, b: i64) -> bool {
    (a - b) % 2 == 0
}

/// First index >= `lo` with parity opposite to `k`.
#[inline]
fn first_opposite(lo: i64, k: i64) -> i64 {
    if same_parity(lo, k) {
        lo + 1
    } else {
        lo
    }
}

/// Forward transform value at a single transform-domain index.
fn forward_point(signal: &Signal, k: i64) -> f64 {
    let samples = signal.samples();
    let origin = signal.origin();
    let mut n = first_opposite(origin, k);
    let mut sum = 0.0f64;
    while n <= signal.end() {
        sum += samples[(n - origin) as usize] / (k - n) as f64;
        n += 2;
    }
    FRAC_2_PI * sum
}

/// Inverse transform value at a single signal-domain index, summing only
/// over the spectrum's covered range.
fn inverse_point(spectrum: &GuardedSpectrum, n: i64) -> f64 {
    let values = spectrum.values();
    let start = spectrum.start();
    let mut k = first_opposite(start, n);
    let mut sum = 0.0f64;
    while k <= spectrum.end() {
        sum += values[(k - start) as usize] / (n - k) as f64;
        k += 2;
    }
    -FRAC_2_PI * sum
}

/// Forward transform of `signal` evaluated at every integer k in
/// `[k_lo, k_hi]`, in ascending order.
pub fn forward_dht(signal: &Signal, k_lo: i64, k_hi: i64) -> Result<Vec<f64>> {
    if k_lo > k_hi {
        return Err(DhtError::InvalidRange { lo: k_lo, hi: k_hi });
    }
    Ok((k_lo..=k_hi).map(|k| forward_point(signal, k)).collect())
}

/// Inverse transform of `spectrum` evaluated at every integer n in
/// `[n_lo, n_hi]`, returned as a signal with origin `n_lo`.
pub fn inverse_dht(spectrum: &GuardedSpectrum, n_lo: i64, n_hi: i64) -> Result<Signal> {
    if n_lo > n_hi {
        return Err(DhtError::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let samples: Vec<f64> = (n_lo..=n_hi).map(|n| inverse_point(spectrum, n)).collect();
    Signal::new(n_lo, samples)
}

/// Forward transform over the signal's support widened by `guard` points on
/// each side, packaged with its guard bookkeeping.
pub fn forward_guarded(signal: &Signal, guard: usize) -> Result<GuardedSpectrum> {
    let k_lo = signal.origin() - guard as i64;
    let k_hi = signal.end() + guard as i64;
    let values = forward_dht(signal, k_lo, k_hi)?;
    GuardedSpectrum::from_values(signal.origin(), signal.width(), guard, values)
}

/// Round trip through the truncated transform pair: forward over the guarded
/// range, then inverse back onto the signal's own support. The result has
/// the same origin and width as the input; the input is left untouched.
pub fn reconstruct_with_guard(signal: &Signal, guard: usize) -> Result<Signal> {
    let spectrum = forward_guarded(signal, guard)?;
    inverse_dht(&spectrum, signal.origin(), signal.end())
}
