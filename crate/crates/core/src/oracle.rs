//! Reference evaluation and single-precision differential checks.
//!
//! [`quantize_hp`] evaluates the quantizer formula in `f64`, the widest native
//! float, with its own octave/step split. The per-family `log2 f(n/T)` forms
//! are cross-checked against the literal `f` in the scale module's tests and
//! against arbitrary-precision constants in the integration tests.

use crate::error::{Error, Result};
use crate::quantizer::{Precision, QuantizerConfig};

/// Inputs closer than this (in volts) to a step boundary are skipped by
/// [`differential_sweep`]: either side of a floor is a legitimate answer there.
pub const BOUNDARY_EXCLUSION: f64 = 1e-7;

/// Accuracy target for single-precision output, in volts.
pub const SINGLE_PRECISION_TOLERANCE: f64 = 5e-6;

/// Quantized output evaluated at the widest native precision.
pub fn quantize_hp(config: &QuantizerConfig, v_in: f64) -> Result<f64> {
    if !v_in.is_finite() {
        return Err(Error::NonFinite { index: None, value: v_in });
    }
    let spec = config.spec();
    let v_ref = config.calibration().v_ref();
    let tones = spec.tones_per_octave() as f64;

    let t = v_in / v_ref;
    let mut octave = t.floor();
    let mut step = (tones * (t - octave)).floor();
    if step >= tones {
        octave += 1.0;
        step = 0.0;
    }
    let level: f64 = spec
        .family()
        .log2_ratio_at_step(step as u32, spec.tones_per_octave());
    Ok(v_ref * (octave + level))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiffReport {
    pub max_abs_error: f64,
    /// Input at which `max_abs_error` occurred.
    pub argmax_input: f64,
    pub samples_tested: usize,
    /// Grid points skipped for sitting next to a step boundary.
    pub samples_excluded: usize,
}

impl DiffReport {
    pub fn within(&self, tolerance: f64) -> bool {
        self.max_abs_error <= tolerance
    }
}

/// Compares the single-precision pipeline against [`quantize_hp`] on `count`
/// evenly spaced inputs over `[lo, hi]`.
///
/// Each grid point is first rounded to `f32`, the input a single-precision
/// host would actually see; both paths are evaluated at that value so the
/// report measures arithmetic error only.
pub fn differential_sweep(config: &QuantizerConfig, lo: f64, hi: f64, count: usize) -> Result<DiffReport> {
    differential_sweep_with_exclusion(config, lo, hi, count, BOUNDARY_EXCLUSION)
}

/// [`differential_sweep`] with a custom boundary exclusion width in volts.
pub fn differential_sweep_with_exclusion(
    config: &QuantizerConfig,
    lo: f64,
    hi: f64,
    count: usize,
    exclusion: f64,
) -> Result<DiffReport> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidSweep(format!("need finite lo < hi, got [{lo}, {hi}]")));
    }
    if count < 2 {
        return Err(Error::InvalidSweep(format!("need at least 2 samples, got {count}")));
    }
    if !(exclusion >= 0.0) {
        return Err(Error::InvalidSweep(format!("exclusion must be >= 0, got {exclusion}")));
    }

    let single = config.with_precision(Precision::Single);
    let v_ref = config.calibration().v_ref();
    let tones = config.spec().tones_per_octave() as f64;
    let span = hi - lo;
    let last = (count - 1) as f64;

    let mut report = DiffReport {
        max_abs_error: 0.0,
        argmax_input: lo,
        samples_tested: 0,
        samples_excluded: 0,
    };
    for i in 0..count {
        let grid = lo + span * (i as f64 / last);
        let v = grid as f32 as f64;
        let steps = v / v_ref * tones;
        let distance = (steps - steps.round()).abs() * v_ref / tones;
        if distance < exclusion {
            report.samples_excluded += 1;
            continue;
        }
        let err = (single.quantize(v)? - quantize_hp(config, v)?).abs();
        report.samples_tested += 1;
        if err > report.max_abs_error {
            report.max_abs_error = err;
            report.argmax_input = v;
        }
    }
    if report.samples_tested == 0 {
        return Err(Error::InvalidSweep(
            "every sample fell inside the boundary exclusion zone".into(),
        ));
    }
    Ok(report)
}
