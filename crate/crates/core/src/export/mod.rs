//! Tuning interchange: Scala files, CSV frequency tables, JSON descriptors.

mod descriptor;
mod scl;

use std::fmt::Write;

use crate::pitch::FrequencyTable;

pub use descriptor::{read_scale_descriptor, write_scale_descriptor, ScaleDescriptor};
pub use scl::{write_scl, SclDocument};

pub const FREQUENCY_CSV_HEADER: &str = "octave,step,frequency_hz,cents";

/// `octave,step,frequency_hz,cents` rows with LF endings, six decimals for
/// both real columns.
pub fn write_frequency_csv(table: &FrequencyTable) -> String {
    let mut out = String::with_capacity(32 * (table.rows().len() + 1));
    out.push_str(FREQUENCY_CSV_HEADER);
    out.push('\n');
    for row in table.rows() {
        writeln!(
            out,
            "{},{},{:.6},{:.6}",
            row.octave, row.step, row.frequency, row.cents
        )
        .unwrap();
    }
    out
}
