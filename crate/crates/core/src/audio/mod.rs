//! Audition rendering: sine tones stepping through a scale, or following a
//! quantized CV trace, written as 16-bit mono WAV.

mod wav;

use std::f64::consts::TAU;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::pitch::{scale_frequencies, voltage_to_frequency};
use crate::quantizer::QuantizerConfig;
use crate::scale::ScaleSpec;

pub use wav::{encode_wav, read_wav, WavData, BITS_PER_SAMPLE, CHANNELS};

/// Length of the linear fade at each note edge.
pub const FADE_SECS: f64 = 0.005;

const FULL_SCALE: f64 = i16::MAX as f64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderConfig {
    pub sample_rate: u32,
    pub note_duration: f64,
    pub amplitude: f64,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            sample_rate: 44_100,
            note_duration: 0.5,
            amplitude: 0.5,
        }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sample_rate < 8000 {
            return Err(Error::InvalidRenderConfig(format!(
                "sample rate must be at least 8000 Hz, got {}",
                self.sample_rate
            )));
        }
        if !(self.note_duration.is_finite() && self.note_duration > 0.0) {
            return Err(Error::InvalidRenderConfig(format!(
                "note duration must be positive, got {}",
                self.note_duration
            )));
        }
        if !(self.amplitude > 0.0 && self.amplitude <= 1.0) {
            return Err(Error::InvalidRenderConfig(format!(
                "amplitude must be in (0, 1], got {}",
                self.amplitude
            )));
        }
        Ok(())
    }

    fn fade_len(&self) -> usize {
        (FADE_SECS * self.sample_rate as f64).round() as usize
    }
}

/// A stretch of constant frequency within a rendering, in samples.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoteSpan {
    pub frequency: f64,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rendering {
    pub sample_rate: u32,
    pub samples: Vec<i16>,
    pub notes: Vec<NoteSpan>,
}

impl Rendering {
    pub fn to_wav(&self) -> Result<Vec<u8>> {
        encode_wav(&self.samples, self.sample_rate)
    }

    pub fn note_samples(&self, index: usize) -> &[i16] {
        let note = &self.notes[index];
        &self.samples[note.start..note.start + note.len]
    }
}

/// Phase-continuous sine oscillator writing notes back to back.
struct Oscillator {
    phase: f64,
    sample_rate: f64,
    amplitude: f64,
    fade_len: usize,
    out: Vec<i16>,
}

impl Oscillator {
    fn new(cfg: &RenderConfig, capacity: usize) -> Self {
        Oscillator {
            phase: 0.0,
            sample_rate: cfg.sample_rate as f64,
            amplitude: cfg.amplitude,
            fade_len: cfg.fade_len(),
            out: Vec::with_capacity(capacity),
        }
    }

    /// `fade_in`/`fade_out` apply the edge ramps to this segment.
    fn play(&mut self, frequency: f64, len: usize, fade_in: bool, fade_out: bool) {
        let step = TAU * frequency / self.sample_rate;
        let fade = self.fade_len.min(len / 2).max(1) as f64;
        for i in 0..len {
            let mut env = 1.0_f64;
            if fade_in {
                env = env.min(i as f64 / fade);
            }
            if fade_out {
                env = env.min((len - 1 - i) as f64 / fade);
            }
            let s = (self.amplitude * env * self.phase.sin() * FULL_SCALE).round();
            self.out.push(s.clamp(-FULL_SCALE, FULL_SCALE) as i16);
            self.phase = (self.phase + step) % TAU;
        }
    }
}

/// One note per scale row (see [`scale_frequencies`]), ascending, each
/// `note_duration` long with a 5 ms fade at both edges.
pub fn render_scale_samples(
    spec: &ScaleSpec,
    base_frequency: f64,
    octaves: RangeInclusive<i32>,
    cfg: &RenderConfig,
) -> Result<Rendering> {
    cfg.validate()?;
    let table = scale_frequencies(spec, base_frequency, octaves)?;
    let sr = cfg.sample_rate as f64;
    let count = table.rows().len();
    let total = (count as f64 * cfg.note_duration * sr).round() as usize;
    let boundary = |i: usize| (i as f64 * cfg.note_duration * sr).round() as usize;

    let mut osc = Oscillator::new(cfg, total);
    let mut notes = Vec::with_capacity(count);
    for (i, frequency) in table.frequencies().enumerate() {
        let start = boundary(i);
        let len = boundary(i + 1) - start;
        osc.play(frequency, len, true, true);
        notes.push(NoteSpan { frequency, start, len });
    }
    debug_assert_eq!(osc.out.len(), total);
    Ok(Rendering {
        sample_rate: cfg.sample_rate,
        samples: osc.out,
        notes,
    })
}

/// [`render_scale_samples`] encoded as WAV bytes.
pub fn render_scale(
    spec: &ScaleSpec,
    base_frequency: f64,
    octaves: RangeInclusive<i32>,
    cfg: &RenderConfig,
) -> Result<Vec<u8>> {
    render_scale_samples(spec, base_frequency, octaves, cfg)?.to_wav()
}

/// Voltage samples over time. Times strictly increase; voltages are finite.
#[derive(Clone, Debug, PartialEq)]
pub struct CvTrace {
    samples: Vec<(f64, f64)>,
}

impl CvTrace {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        for (i, &(t, v)) in samples.iter().enumerate() {
            if !t.is_finite() {
                return Err(Error::InvalidTrace(format!("time at sample {i} is not finite")));
            }
            if !v.is_finite() {
                return Err(Error::NonFinite { index: Some(i), value: v });
            }
            if i > 0 && !(t > samples[i - 1].0) {
                return Err(Error::InvalidTrace(format!(
                    "time at sample {i} ({t}) does not increase"
                )));
            }
        }
        Ok(CvTrace { samples })
    }

    /// Voltages sampled at `0, dt, 2·dt, ...`.
    pub fn from_voltages(voltages: &[f64], dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidTrace(format!("sample interval must be positive, got {dt}")));
        }
        CvTrace::new(voltages.iter().enumerate().map(|(i, &v)| (i as f64 * dt, v)).collect())
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.0)
    }

    pub fn voltages(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.1)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Same times, voltages run through the quantizer.
pub fn quantize_trace(config: &QuantizerConfig, trace: &CvTrace) -> Result<CvTrace> {
    let voltages: Vec<f64> = trace.voltages().collect();
    let quantized = config.quantize_block(&voltages)?;
    Ok(CvTrace {
        samples: trace.times().zip(quantized).collect(),
    })
}

/// Sonifies a CV trace: each sample's quantized voltage is held until the
/// next sample's time, the last one for `note_duration`. Fades are applied
/// only at the start and end of the whole rendering.
pub fn render_trace(
    config: &QuantizerConfig,
    trace: &CvTrace,
    base_frequency: f64,
    cfg: &RenderConfig,
) -> Result<Rendering> {
    cfg.validate()?;
    if trace.is_empty() {
        return Err(Error::InvalidTrace("trace is empty".into()));
    }
    let quantized = quantize_trace(config, trace)?;
    let sr = cfg.sample_rate as f64;
    let t0 = quantized.samples[0].0;
    let end = quantized.samples[quantized.len() - 1].0 + cfg.note_duration;
    let at = |t: f64| ((t - t0) * sr).round() as usize;

    let mut notes: Vec<NoteSpan> = Vec::new();
    for (i, &(t, v)) in quantized.samples.iter().enumerate() {
        let next = quantized.samples.get(i + 1).map_or(end, |s| s.0);
        let (start, stop) = (at(t), at(next));
        if stop == start {
            continue;
        }
        let frequency = voltage_to_frequency(base_frequency, config.calibration(), v)?;
        match notes.last_mut() {
            Some(last) if last.frequency == frequency => last.len += stop - start,
            _ => notes.push(NoteSpan {
                frequency,
                start,
                len: stop - start,
            }),
        }
    }

    let mut osc = Oscillator::new(cfg, at(end));
    let last = notes.len().saturating_sub(1);
    for (i, note) in notes.iter().enumerate() {
        osc.play(note.frequency, note.len, i == 0, i == last);
    }
    Ok(Rendering {
        sample_rate: cfg.sample_rate,
        samples: osc.out,
        notes,
    })
}
