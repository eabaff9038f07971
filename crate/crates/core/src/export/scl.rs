//! Scala `.scl` tuning files.
//!
//! Layout: an optional run of `!` comment lines, one description line, the
//! note count, then one pitch per line for steps `1..=T` (the implicit `1/1`
//! is omitted). Pitches are written in cents with exactly six decimals; the
//! decimal point is what marks a Scala pitch as cents rather than a ratio.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::scale::ScaleSpec;

#[derive(Clone, Debug, PartialEq)]
pub struct SclDocument {
    pub description: String,
    /// Cents for steps `1..=T`; the last one is the period.
    pub pitches: Vec<f64>,
}

impl SclDocument {
    pub fn from_spec(spec: &ScaleSpec, description: &str) -> Result<Self> {
        let cents = spec.step_table()?.cents();
        Ok(SclDocument {
            description: description.lines().collect::<Vec<_>>().join(" "),
            pitches: cents[1..].to_vec(),
        })
    }

    pub fn note_count(&self) -> usize {
        self.pitches.len()
    }

    /// Serializes the document. `banner` prepends a comment naming the tool.
    pub fn render(&self, banner: bool) -> String {
        let mut out = String::new();
        if banner {
            writeln!(out, "! {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")).unwrap();
        }
        writeln!(out, "{}", self.description).unwrap();
        writeln!(out, "{}", self.pitches.len()).unwrap();
        for cents in &self.pitches {
            writeln!(out, "{cents:.6}").unwrap();
        }
        out
    }

    /// Reads a `.scl` file. Ratio pitches (`3/2`, `2`) are converted to cents.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.starts_with('!'));

        let (_, description) = lines.next().ok_or_else(|| Error::SclParse {
            line: 1,
            message: "missing description line".into(),
        })?;
        let (count_line, count) = lines.next().ok_or_else(|| Error::SclParse {
            line: 2,
            message: "missing note count".into(),
        })?;
        let count: usize = first_token(count)
            .parse()
            .map_err(|_| Error::SclParse {
                line: count_line,
                message: format!("bad note count `{}`", count.trim()),
            })?;

        let mut pitches = Vec::with_capacity(count);
        for (line, text) in lines.take(count) {
            pitches.push(parse_pitch(first_token(text)).map_err(|message| Error::SclParse { line, message })?);
        }
        if pitches.len() != count {
            return Err(Error::SclParse {
                line: count_line,
                message: format!("expected {count} pitches, found {}", pitches.len()),
            });
        }
        Ok(SclDocument {
            description: description.trim().to_string(),
            pitches,
        })
    }
}

/// `.scl` text for a scale.
pub fn write_scl(spec: &ScaleSpec, description: &str, banner: bool) -> Result<String> {
    Ok(SclDocument::from_spec(spec, description)?.render(banner))
}

fn first_token(line: &str) -> &str {
    line.split_whitespace().next().unwrap_or("")
}

fn parse_pitch(token: &str) -> std::result::Result<f64, String> {
    let bad = || format!("bad pitch `{token}`");
    if token.contains('.') {
        return token.parse::<f64>().map_err(|_| bad());
    }
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: u64 = num.parse().map_err(|_| bad())?;
    let den: u64 = den.parse().map_err(|_| bad())?;
    if num == 0 || den == 0 {
        return Err(bad());
    }
    Ok(1200.0 * (num as f64 / den as f64).log2())
}
