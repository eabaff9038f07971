//! Quantize a wobbling CV trace and sonify the result.

use std::f64::consts::TAU;

use fq_scales::audio::render_trace;
use fq_scales::{quantize_trace, Calibration, CvTrace, Precision, QuantizerConfig, RenderConfig, ScaleFamily, ScaleSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a slow LFO with some vibrato on top, sampled at 50 Hz for four seconds
    let dt = 0.02;
    let volts: Vec<f64> = (0..200)
        .map(|i| {
            let t = i as f64 * dt;
            0.5 + 0.5 * (TAU * 0.25 * t).sin() + 0.01 * (TAU * 5.0 * t).sin()
        })
        .collect();
    let trace = CvTrace::from_voltages(&volts, dt)?;

    let config = QuantizerConfig::new(
        ScaleSpec::from(ScaleFamily::Log),
        Calibration::VOLT_PER_OCTAVE,
        Precision::Single,
    )?;
    let quantized = quantize_trace(&config, &trace)?;
    for ((t, v), q) in trace.samples().iter().zip(quantized.voltages()).step_by(20) {
        println!("{t:5.2} s  {v:+.4} V -> {q:+.4} V");
    }

    let cfg = RenderConfig {
        note_duration: dt,
        ..RenderConfig::default()
    };
    let rendering = render_trace(&config, &trace, 261.6256, &cfg)?;
    let path = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("quantized_trace.wav"));
    std::fs::write(&path, rendering.to_wav()?)?;
    println!("{} distinct notes -> {}", rendering.notes.len(), path.display());
    Ok(())
}
