//! The demo's three operations, kept free of wasm types so they can be
//! unit-tested on any target. Each returns a complete SVG document.

use dht_core::{
    forward_guarded, generate,
    plot::{sweep_svg as render_sweep, LinePlot, Series, YScale},
    reconstruct_with_guard, rms_error, sweep, SweepTable, WaveformKind, WaveformSpec,
};

// Keep interactive recomputation comfortably under a frame budget.
const MAX_WIDTH: usize = 512;
const MAX_GUARD: usize = 4096;
const MAX_SWEEP_POINTS: usize = 256;

fn parse_spec(kind: &str, width: usize) -> Result<WaveformSpec, String> {
    let kind: WaveformKind = kind.parse().map_err(|e| format!("{e}"))?;
    if width > MAX_WIDTH {
        return Err(format!(
            "width {width} is above the demo limit of {MAX_WIDTH}"
        ));
    }
    Ok(WaveformSpec::new(kind, width))
}

fn check_guard(guard: usize) -> Result<(), String> {
    if guard > MAX_GUARD {
        return Err(format!(
            "guard {guard} is above the demo limit of {MAX_GUARD}"
        ));
    }
    Ok(())
}

/// Original vs reconstructed samples at one guard width, RMS error in the
/// title.
pub fn reconstruction_svg(kind: &str, width: usize, guard: usize) -> Result<String, String> {
    let spec = parse_spec(kind, width)?;
    check_guard(guard)?;
    let signal = generate(&spec).map_err(|e| e.to_string())?;
    let reconstructed = reconstruct_with_guard(&signal, guard).map_err(|e| e.to_string())?;
    let rms = rms_error(&signal, &reconstructed).map_err(|e| e.to_string())?;

    let mut plot = LinePlot::new(
        format!(
            "{} (N = {width}, m = {guard}): rms error {rms:.3e}",
            spec.kind
        ),
        "n",
        "amplitude",
        YScale::Linear,
    );
    let as_points = |s: &dht_core::Signal| {
        s.samples()
            .iter()
            .enumerate()
            .map(|(j, &v)| ((s.origin() + j as i64) as f64, v))
            .collect()
    };
    plot.add_series(Series::new("original", as_points(&signal)));
    plot.add_series(Series::new("reconstructed", as_points(&reconstructed)));
    plot.to_svg().map_err(|e| e.to_string())
}

/// The guarded transform-domain values over [-m, N + m - 1].
pub fn spectrum_svg(kind: &str, width: usize, guard: usize) -> Result<String, String> {
    let spec = parse_spec(kind, width)?;
    check_guard(guard)?;
    let signal = generate(&spec).map_err(|e| e.to_string())?;
    let spectrum = forward_guarded(&signal, guard).map_err(|e| e.to_string())?;

    let mut plot = LinePlot::new(
        format!(
            "transform of {} (N = {width}, m = {guard}, {} points)",
            spec.kind,
            spectrum.len()
        ),
        "k",
        "g(k)",
        YScale::Linear,
    );
    let points = spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(j, &v)| ((spectrum.start() + j as i64) as f64, v))
        .collect();
    plot.add_series(Series::new("spectrum", points));
    plot.to_svg().map_err(|e| e.to_string())
}

/// RMS error ratio vs guard width on a log scale, guards 0..=max_guard.
pub fn sweep_svg(
    kind: &str,
    width: usize,
    max_guard: usize,
    step: usize,
) -> Result<String, String> {
    let spec = parse_spec(kind, width)?;
    check_guard(max_guard)?;
    if step == 0 {
        return Err("step must be at least 1".into());
    }
    let guards: Vec<usize> = (0..=max_guard).step_by(step).collect();
    if guards.len() > MAX_SWEEP_POINTS {
        return Err(format!(
            "{} sweep points would stall the page (limit {MAX_SWEEP_POINTS}); increase the step",
            guards.len()
        ));
    }
    let signal = generate(&spec).map_err(|e| e.to_string())?;
    let result = sweep(&signal, &guards).map_err(|e| e.to_string())?;
    let table = SweepTable::from_sweep(spec.kind.to_string(), width, &result);
    render_sweep(&table).map_err(|e| e.to_string())
}
