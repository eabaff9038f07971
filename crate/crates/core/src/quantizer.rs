//! Control-voltage quantization.
//!
//! Under a `V_ref`-volts-per-octave calibration an input voltage is split into
//! an octave `k = ⌊V_in/V_ref⌋` and a step `n = ⌊T·frac(V_in/V_ref)⌋`, and
//! mapped to
//!
//! ```text
//! V_out = V_ref · (k + log2 f(n/T))
//! ```
//!
//! which feeds an oscillator tracking `F_0 · 2^(V_out/V_ref)` onto step `n` of
//! octave `k`. Floors round toward negative infinity, so negative (bipolar)
//! inputs are handled the same way as positive ones.

use std::fmt;
use std::str::FromStr;

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};
use crate::scale::{cast, ScaleSpec};

/// Reference voltage, in volts per octave.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Calibration {
    v_ref: f64,
}

impl Calibration {
    /// The usual 1 V/oct.
    pub const VOLT_PER_OCTAVE: Calibration = Calibration { v_ref: 1.0 };
    /// Buchla systems run at 1.2 V/oct.
    pub const BUCHLA: Calibration = Calibration { v_ref: 1.2 };

    pub fn new(v_ref: f64) -> Result<Self> {
        if v_ref.is_finite() && v_ref > 0.0 {
            Ok(Calibration { v_ref })
        } else {
            Err(Error::InvalidCalibration(v_ref))
        }
    }

    pub fn v_ref(self) -> f64 {
        self.v_ref
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Calibration::VOLT_PER_OCTAVE
    }
}

/// Arithmetic width of the quantization pipeline.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Precision {
    /// `f32` throughout, as in typical plugin hosts.
    Single,
    #[default]
    Double,
}

impl FromStr for Precision {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "single" | "f32" => Ok(Precision::Single),
            "double" | "f64" => Ok(Precision::Double),
            other => Err(Error::InvalidParameter(format!(
                "unknown precision `{other}`, expected single or double"
            ))),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precision::Single => "single",
            Precision::Double => "double",
        })
    }
}

/// Where an input voltage lands: octave `⌊V_in/V_ref⌋` and step `n ∈ [0, T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepIndex {
    pub octave: i64,
    pub step: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantizerConfig {
    spec: ScaleSpec,
    calibration: Calibration,
    precision: Precision,
    // log2 f(n/T) for n in 0..T, computed at `precision` and stored widened.
    levels: Vec<f64>,
}

impl QuantizerConfig {
    /// Fails if the scale does not satisfy the generator contract.
    pub fn new(spec: ScaleSpec, calibration: Calibration, precision: Precision) -> Result<Self> {
        spec.validate().into_result()?;
        let tones = spec.tones_per_octave();
        let family = spec.family();
        let levels = (0..tones)
            .map(|n| match precision {
                Precision::Single => family.log2_ratio_at_step::<f32>(n, tones) as f64,
                Precision::Double => family.log2_ratio_at_step::<f64>(n, tones),
            })
            .collect();
        Ok(QuantizerConfig {
            spec,
            calibration,
            precision,
            levels,
        })
    }

    pub fn spec(&self) -> &ScaleSpec {
        &self.spec
    }

    pub fn calibration(&self) -> Calibration {
        self.calibration
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Same scale and calibration at a different precision.
    pub fn with_precision(&self, precision: Precision) -> Self {
        if precision == self.precision {
            return self.clone();
        }
        QuantizerConfig::new(self.spec.clone(), self.calibration, precision)
            .expect("spec was validated when the config was built")
    }

    pub fn step_index(&self, v_in: f64) -> Result<StepIndex> {
        check_finite(v_in, None)?;
        Ok(match self.precision {
            Precision::Single => {
                let v = narrow(v_in, None)?;
                let (octave, step) = split(v, self.calibration.v_ref as f32, self.tones::<f32>());
                StepIndex {
                    octave: octave as i64,
                    step,
                }
            }
            Precision::Double => {
                let (octave, step) = split(v_in, self.calibration.v_ref, self.tones::<f64>());
                StepIndex {
                    octave: octave as i64,
                    step,
                }
            }
        })
    }

    /// Quantized output voltage for one input sample.
    pub fn quantize(&self, v_in: f64) -> Result<f64> {
        self.quantize_at(v_in, None)
    }

    /// Element-wise [`quantize`](Self::quantize). Stateless: each output
    /// depends only on the matching input.
    pub fn quantize_block(&self, samples: &[f64]) -> Result<Vec<f64>> {
        samples
            .iter()
            .enumerate()
            .map(|(i, &v)| self.quantize_at(v, Some(i)))
            .collect()
    }

    fn quantize_at(&self, v_in: f64, index: Option<usize>) -> Result<f64> {
        check_finite(v_in, index)?;
        Ok(match self.precision {
            Precision::Single => self.quantize_generic(narrow(v_in, index)?) as f64,
            Precision::Double => self.quantize_generic(v_in),
        })
    }

    fn quantize_generic<F: Float + FloatConst>(&self, v_in: F) -> F {
        let v_ref = cast::<F>(self.calibration.v_ref);
        let (octave, step) = split(v_in, v_ref, self.tones::<F>());
        v_ref * (octave + cast::<F>(self.levels[step as usize]))
    }

    fn tones<F: Float>(&self) -> F {
        cast(self.spec.tones_per_octave() as f64)
    }
}

/// The LOG QNT formula written out directly:
/// `V_ref · (⌊V_in/V_ref⌋ − 1 + log2 log2(4 + ⌊12·frac(V_in/V_ref)⌋))`.
///
/// Kept separate from the generic pipeline so the two can be checked against
/// each other.
pub fn log_qnt<F: Float>(v_in: F, v_ref: F) -> F {
    let t = v_in / v_ref;
    let octave = t.floor();
    let frac = t - octave;
    let step = (cast::<F>(12.0) * frac).floor();
    v_ref * (octave - F::one() + (cast::<F>(4.0) + step).log2().log2())
}

/// Splits `v_in` into `(octave, step)`.
///
/// `t − ⌊t⌋` can round up to exactly 1 for tiny negative `t`; that lands on
/// step 0 of the next octave, the value the formula itself would produce.
fn split<F: Float>(v_in: F, v_ref: F, tones: F) -> (F, u32) {
    let t = v_in / v_ref;
    let octave = t.floor();
    let frac = t - octave;
    let step = (tones * frac).floor();
    if step >= tones {
        (octave + F::one(), 0)
    } else {
        (octave, step.to_u32().unwrap_or(0))
    }
}

fn check_finite(v: f64, index: Option<usize>) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { index, value: v })
    }
}

fn narrow(v: f64, index: Option<usize>) -> Result<f32> {
    let narrowed = v as f32;
    if narrowed.is_finite() {
        Ok(narrowed)
    } else {
        Err(Error::NonFinite { index, value: v })
    }
}
