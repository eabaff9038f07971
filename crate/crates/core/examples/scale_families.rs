//! Print every bundled family's generator and its step table in cents.

use fq_scales::{FamilyKind, ScaleFamily, ScaleSpec};

fn main() -> fq_scales::Result<()> {
    for kind in FamilyKind::BUNDLED {
        let a = kind.takes_parameter().then_some(2.0);
        let spec = ScaleSpec::from(ScaleFamily::from_name(kind.name(), a)?);
        let report = spec.validate();
        println!("{} ({})", spec, spec.family().formula());
        println!("  boundary residual {:e}, valid: {}", report.boundary_residual, report.is_valid());
        let cents: Vec<String> = spec.step_table()?.cents().iter().map(|c| format!("{c:.1}")).collect();
        println!("  cents: {}", cents.join(" "));
    }

    // small exponents approach equal temperament
    for a in [1.0, 0.1, 0.01, 0.001] {
        let table = ScaleSpec::from(ScaleFamily::power(a)?).step_table()?;
        let dev = table
            .entries()
            .iter()
            .enumerate()
            .map(|(n, v)| (v - n as f64 / 12.0).abs())
            .fold(0.0, f64::max);
        println!("power a={a:<6} max deviation from 12-TET: {dev:.3e} oct");
    }
    Ok(())
}
