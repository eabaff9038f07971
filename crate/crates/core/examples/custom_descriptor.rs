//! Load scales from JSON descriptors, including a hand-made custom one.

use fq_scales::{read_scale_descriptor, write_scale_descriptor, Calibration, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};

const PENTATONIC: &str = r#"{
    "family": "custom",
    "steps": [0.0, 0.1667, 0.3333, 0.5833, 0.75, 1.0]
}"#;

fn main() -> fq_scales::Result<()> {
    let spec = read_scale_descriptor(PENTATONIC)?;
    println!("loaded {spec}, {} tones", spec.tones_per_octave());

    let config = QuantizerConfig::new(spec, Calibration::VOLT_PER_OCTAVE, Precision::Double)?;
    for v in [0.0, 0.2, 0.45, 0.7, 0.95, 1.1] {
        println!("  {v:.2} V -> {:.4} V", config.quantize(v)?);
    }

    let power = ScaleSpec::new(ScaleFamily::power(0.5)?, 24)?;
    println!("{}", write_scale_descriptor(&power));

    // contract violations are reported, not silently accepted
    match read_scale_descriptor(r#"{"steps": [0.0, 0.6, 0.4, 1.0]}"#) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
