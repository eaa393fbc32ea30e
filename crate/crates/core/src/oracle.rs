//! Deliberately naive reference evaluation of the transform pair.
//!
//! These walk every (k, n) pair, test parity per term, and assert that no
//! contributing denominator can vanish. They exist to cross-check the
//! production path in tests and are kept free of any shared code with it;
//! both accumulate in f64 so equivalence bounds are meaningful.

use std::f64::consts::FRAC_2_PI;

use crate::error::{DhtError, Result};
use crate::signal::Signal;
use crate::spectrum::GuardedSpectrum;

/// Same contract as [`crate::transform::forward_dht`], evaluated by a plain
/// double loop over the full rectangle of (k, n) pairs.
pub fn oracle_forward(signal: &Signal, k_lo: i64, k_hi: i64) -> Result<Vec<f64>> {
    if k_lo > k_hi {
        return Err(DhtError::InvalidRange { lo: k_lo, hi: k_hi });
    }
    let mut out = Vec::with_capacity((k_hi - k_lo + 1) as usize);
    for k in k_lo..=k_hi {
        let mut sum = 0.0f64;
        for n in signal.origin()..=signal.end() {
            if (k - n).rem_euclid(2) == 1 {
                assert!((k - n).abs() >= 1, "singular term at k={k}, n={n}");
                sum += signal.value_at(n) / (k - n) as f64;
            }
        }
        out.push(FRAC_2_PI * sum);
    }
    Ok(out)
}

/// Same contract as [`crate::transform::inverse_dht`], evaluated by a plain
/// double loop over the full rectangle of (n, k) pairs.
pub fn oracle_inverse(spectrum: &GuardedSpectrum, n_lo: i64, n_hi: i64) -> Result<Signal> {
    if n_lo > n_hi {
        return Err(DhtError::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let mut samples = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let mut sum = 0.0f64;
        for k in spectrum.start()..=spectrum.end() {
            if (n - k).rem_euclid(2) == 1 {
                assert!((n - k).abs() >= 1, "singular term at n={n}, k={k}");
                sum += spectrum.value_at(k) / (n - k) as f64;
            }
        }
        samples.push(-FRAC_2_PI * sum);
    }
    Signal::new(n_lo, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{forward_dht, inverse_dht};

    #[test]
    fn matches_analytic_impulse_values() {
        let s = Signal::impulse(0, 1, 0).unwrap();
        let g = oracle_forward(&s, -2, 2).unwrap();
        let expected = [0.0, -FRAC_2_PI, 0.0, FRAC_2_PI, 0.0];
        for (a, e) in g.iter().zip(expected) {
            assert!((a - e).abs() < 1e-14);
        }
    }

    #[test]
    fn agrees_with_production_path_on_fixed_input() {
        let s = Signal::new(0, vec![0.3, -1.2, 2.5, 0.0, -0.7]).unwrap();
        let a = oracle_forward(&s, -6, 10).unwrap();
        let b = forward_dht(&s, -6, 10).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }

        let spec = GuardedSpectrum::from_values(0, 5, 2, b[4..13].to_vec()).unwrap();
        let fa = oracle_inverse(&spec, -1, 6).unwrap();
        let fb = inverse_dht(&spec, -1, 6).unwrap();
        for (x, y) in fa.samples().iter().zip(fb.samples()) {
            assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
    }
}
