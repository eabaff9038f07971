//! How far does the f32 pipeline drift from the f64 reference?

use fq_scales::oracle::SINGLE_PRECISION_TOLERANCE;
use fq_scales::{differential_sweep, Calibration, FamilyKind, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};

fn main() -> fq_scales::Result<()> {
    for kind in FamilyKind::BUNDLED {
        let a = kind.takes_parameter().then_some(0.5);
        let spec = ScaleSpec::from(ScaleFamily::from_name(kind.name(), a)?);
        for cal in [Calibration::VOLT_PER_OCTAVE, Calibration::BUCHLA] {
            let config = QuantizerConfig::new(spec.clone(), cal, Precision::Double)?;
            let r = differential_sweep(&config, -5.0, 10.0, 100_000)?;
            println!(
                "{:<18} v_ref {:.1}: max |err| {:.2e} V at {:+.5} V ({} tested, {} skipped) {}",
                spec.to_string(),
                cal.v_ref(),
                r.max_abs_error,
                r.argmax_input,
                r.samples_tested,
                r.samples_excluded,
                if r.within(SINGLE_PRECISION_TOLERANCE) { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
