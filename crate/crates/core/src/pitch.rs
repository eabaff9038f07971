//! Voltages, steps, frequencies and cents.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::quantizer::Calibration;
use crate::scale::ScaleSpec;

/// Middle C, used when no base frequency is given.
pub const DEFAULT_BASE_FREQUENCY: f64 = 261.6256;

/// Frequency in hertz of an oscillator tracking `F_0 · 2^(v / V_ref)`.
pub fn voltage_to_frequency(base_frequency: f64, calibration: Calibration, v: f64) -> Result<f64> {
    check_base_frequency(base_frequency)?;
    if !v.is_finite() {
        return Err(Error::NonFinite { index: None, value: v });
    }
    Ok(base_frequency * (v / calibration.v_ref()).exp2())
}

/// Cents above the root for steps `0..=T`.
pub fn step_cents(spec: &ScaleSpec) -> Result<Vec<f64>> {
    Ok(spec.step_table()?.cents())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrequencyRow {
    pub octave: i32,
    pub step: u32,
    pub frequency: f64,
    /// Cents of this step above the octave's root.
    pub cents: f64,
}

/// Pitches of a scale across a run of octaves, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencyTable {
    base_frequency: f64,
    rows: Vec<FrequencyRow>,
}

impl FrequencyTable {
    /// Rows for steps `0..T` of every octave in `octaves`, followed by step
    /// `T` of the last octave (the octave above its root).
    pub fn new(spec: &ScaleSpec, base_frequency: f64, octaves: RangeInclusive<i32>) -> Result<Self> {
        check_base_frequency(base_frequency)?;
        if octaves.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "empty octave range {}..={}",
                octaves.start(),
                octaves.end()
            )));
        }
        let table = spec.step_table()?;
        let tones = spec.tones_per_octave();
        let top = *octaves.end();

        let mut rows = Vec::with_capacity((octaves.clone().count()) * tones as usize + 1);
        for octave in octaves {
            let last = if octave == top { tones } else { tones - 1 };
            for step in 0..=last {
                rows.push(FrequencyRow {
                    octave,
                    step,
                    frequency: (octave as f64).exp2() * base_frequency * spec.ratio_at_step(step),
                    cents: 1200.0 * table.entries()[step as usize],
                });
            }
        }
        Ok(FrequencyTable {
            base_frequency,
            rows,
        })
    }

    pub fn base_frequency(&self) -> f64 {
        self.base_frequency
    }

    pub fn rows(&self) -> &[FrequencyRow] {
        &self.rows
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| r.frequency)
    }
}

/// Shorthand for [`FrequencyTable::new`].
pub fn scale_frequencies(
    spec: &ScaleSpec,
    base_frequency: f64,
    octaves: RangeInclusive<i32>,
) -> Result<FrequencyTable> {
    FrequencyTable::new(spec, base_frequency, octaves)
}

fn check_base_frequency(f: f64) -> Result<()> {
    if f.is_finite() && f > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidBaseFrequency(f))
    }
}
