//! Frequencies of the sine scale over three octaves around middle C, as CSV.

use fq_scales::pitch::DEFAULT_BASE_FREQUENCY;
use fq_scales::{scale_frequencies, write_frequency_csv, ScaleFamily, ScaleSpec};

fn main() -> fq_scales::Result<()> {
    let spec = ScaleSpec::from(ScaleFamily::Sine);
    let table = scale_frequencies(&spec, DEFAULT_BASE_FREQUENCY, -1..=1)?;
    print!("{}", write_frequency_csv(&table));

    let lowest = table.frequencies().next().unwrap_or_default();
    let highest = table.frequencies().last().unwrap_or_default();
    eprintln!("{} rows, {lowest:.2} Hz to {highest:.2} Hz", table.rows().len());
    Ok(())
}
