//! Snap a slow voltage ramp onto the logarithmic scale, 1 V/oct.

use fq_scales::{log_qnt, Calibration, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};

fn main() -> fq_scales::Result<()> {
    let config = QuantizerConfig::new(
        ScaleSpec::from(ScaleFamily::Log),
        Calibration::VOLT_PER_OCTAVE,
        Precision::Single,
    )?;

    println!("{:>8} {:>10} {:>8} {:>10}", "v_in", "v_out", "step", "log_qnt");
    for i in 0..=24 {
        let v = i as f64 / 12.0 + 1.0 / 24.0;
        let idx = config.step_index(v)?;
        let out = config.quantize(v)?;
        println!(
            "{v:>8.4} {out:>10.6} {:>4}/{:<3} {:>10.6}",
            idx.octave,
            idx.step,
            log_qnt(v as f32, 1.0)
        );
    }
    Ok(())
}
