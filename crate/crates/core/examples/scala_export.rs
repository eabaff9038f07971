//! Write a Scala file for a 19-tone square-root scale and read it back.
//!
//! Pass an output path to keep the file: `cargo run --example scala_export -- sqrt19.scl`

use fq_scales::{write_scl, ScaleFamily, ScaleSpec, SclDocument};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ScaleSpec::new(ScaleFamily::Sqrt, 19)?;
    let text = write_scl(&spec, "Square-root scale, 19 tones", true)?;

    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &text)?;
            println!("wrote {path}");
        }
        None => print!("{text}"),
    }

    let doc = SclDocument::parse(&text)?;
    let cents = spec.step_table()?.cents();
    let worst = doc
        .pitches
        .iter()
        .zip(&cents[1..])
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("re-parsed {} notes, max cents error {worst:.1e}", doc.note_count());
    Ok(())
}
