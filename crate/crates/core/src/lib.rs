//! Functionally quantized musical scales.
//!
//! A scale is generated by a strictly increasing `f` on `[0, 1]` with
//! `f(0) = 1` and `f(1) = 2`: step `n` of a `T`-tone octave sounds at
//! `F_0 · f(n/T)`. This crate maps control voltages onto such scales the way a
//! modular-synth quantizer does, converts them to frequencies, checks the
//! single-precision pipeline against a double-precision reference, and exports
//! Scala files, CSV tables and WAV auditions.
//!
//! ```
//! use fq_scales::{Calibration, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};
//!
//! let config = QuantizerConfig::new(
//!     ScaleSpec::from(ScaleFamily::Log),
//!     Calibration::VOLT_PER_OCTAVE,
//!     Precision::Single,
//! )?;
//! assert_eq!(config.quantize(0.0)?, 0.0);
//! assert_eq!(config.quantize(2.0)?, 2.0);
//! # Ok::<(), fq_scales::Error>(())
//! ```
//!
//! See the `examples/` directory for one program per capability.

// `!(x > y)` is how NaN gets rejected alongside out-of-order values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audio;
pub mod cli;
pub mod error;
pub mod export;
pub mod oracle;
pub mod pitch;
pub mod quantizer;
pub mod scale;

pub use audio::{quantize_trace, render_scale, CvTrace, RenderConfig};
pub use error::{Error, Result};
pub use export::{read_scale_descriptor, write_frequency_csv, write_scale_descriptor, write_scl, SclDocument};
pub use oracle::{differential_sweep, quantize_hp, DiffReport};
pub use pitch::{scale_frequencies, step_cents, voltage_to_frequency, FrequencyTable};
pub use quantizer::{log_qnt, Calibration, Precision, QuantizerConfig, StepIndex};
pub use scale::{CustomSteps, Exponent, FamilyKind, ScaleFamily, ScaleSpec, StepTable, ValidationReport};
