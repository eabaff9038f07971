//! The same scale at 1 V/oct and at Buchla's 1.2 V/oct.

use fq_scales::{voltage_to_frequency, Calibration, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};

fn main() -> fq_scales::Result<()> {
    let spec = ScaleSpec::from(ScaleFamily::Log);
    for cal in [Calibration::VOLT_PER_OCTAVE, Calibration::BUCHLA] {
        let config = QuantizerConfig::new(spec.clone(), cal, Precision::Double)?;
        println!("v_ref = {} V/oct", cal.v_ref());
        for half_octaves in 0..=4 {
            let v = half_octaves as f64 * cal.v_ref() / 2.0;
            let out = config.quantize(v)?;
            let hz = voltage_to_frequency(440.0, cal, out)?;
            println!("  {v:>5.2} V -> {out:.6} V -> {hz:8.3} Hz");
        }
    }
    Ok(())
}
