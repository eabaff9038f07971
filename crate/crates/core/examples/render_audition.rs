//! Render one octave of each bundled scale to WAV so they can be compared by ear.
//!
//! `cargo run --release --example render_audition -- out_dir`

use std::path::PathBuf;

use fq_scales::audio::render_scale;
use fq_scales::{FamilyKind, RenderConfig, ScaleFamily, ScaleSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let cfg = RenderConfig {
        note_duration: 0.3,
        ..RenderConfig::default()
    };

    for kind in FamilyKind::BUNDLED {
        let a = kind.takes_parameter().then_some(3.0);
        let spec = ScaleSpec::from(ScaleFamily::from_name(kind.name(), a)?);
        let wav = render_scale(&spec, 220.0, 0..=0, &cfg)?;
        let path = dir.join(format!("{}.wav", kind.name()));
        std::fs::write(&path, &wav)?;
        println!("{} ({} bytes)", path.display(), wav.len());
    }
    Ok(())
}
