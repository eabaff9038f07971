//! JSON scale descriptors.
//!
//! ```json
//! {"family": "power", "a": 2.0, "tones_per_octave": 12}
//! {"steps": [0.0, 0.25, 0.6, 1.0]}
//! ```
//!
//! `family` names a bundled family (`equal_temperament`, `log`, `sqrt`,
//! `sine`, `power`, `power2`); `a` is required by the two power families and
//! rejected by the others. `tones_per_octave` defaults to 12. A `steps` array
//! of `T + 1` octave fractions describes a custom scale instead; `family` may
//! then be omitted or set to `custom`, and `tones_per_octave`, when present,
//! must equal `T`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scale::{CustomSteps, FamilyKind, ScaleFamily, ScaleSpec, DEFAULT_TONES_PER_OCTAVE};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tones_per_octave: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<f64>>,
}

impl ScaleDescriptor {
    pub fn from_spec(spec: &ScaleSpec) -> Self {
        let family = spec.family();
        match family {
            ScaleFamily::Custom(steps) => ScaleDescriptor {
                family: Some(FamilyKind::Custom.name().into()),
                steps: Some(steps.as_slice().to_vec()),
                ..Default::default()
            },
            _ => ScaleDescriptor {
                family: Some(family.name().into()),
                a: family.parameter(),
                tones_per_octave: Some(spec.tones_per_octave()),
                steps: None,
            },
        }
    }

    /// Builds and validates the scale this descriptor names.
    pub fn to_spec(&self) -> Result<ScaleSpec> {
        let kind = self.family.as_deref().map(str::parse::<FamilyKind>).transpose()?;
        let spec = match (&self.steps, kind) {
            (Some(steps), None | Some(FamilyKind::Custom)) => {
                if self.a.is_some() {
                    return Err(Error::InvalidParameter(
                        "custom scales take no parameter a".into(),
                    ));
                }
                let steps = CustomSteps::new(steps.clone())?;
                let tones = self.tones_per_octave.unwrap_or(steps.tones());
                ScaleSpec::new(ScaleFamily::Custom(steps), tones)?
            }
            (Some(_), Some(kind)) => {
                return Err(Error::DescriptorParse(format!(
                    "`steps` cannot be combined with family `{}`",
                    kind.name()
                )))
            }
            (None, Some(FamilyKind::Custom)) => {
                return Err(Error::DescriptorParse("family `custom` needs `steps`".into()))
            }
            (None, Some(kind)) => ScaleSpec::new(
                ScaleFamily::from_name(kind.name(), self.a)?,
                self.tones_per_octave.unwrap_or(DEFAULT_TONES_PER_OCTAVE),
            )?,
            (None, None) => {
                return Err(Error::DescriptorParse(
                    "descriptor needs either `family` or `steps`".into(),
                ))
            }
        };
        spec.validate().into_result()?;
        Ok(spec)
    }
}

/// Parses and validates a JSON descriptor. Malformed JSON is reported as
/// [`Error::DescriptorParse`]; contract violations as validation errors.
pub fn read_scale_descriptor(text: &str) -> Result<ScaleSpec> {
    let descriptor: ScaleDescriptor =
        serde_json::from_str(text).map_err(|e| Error::DescriptorParse(e.to_string()))?;
    descriptor.to_spec()
}

pub fn write_scale_descriptor(spec: &ScaleSpec) -> String {
    serde_json::to_string_pretty(&ScaleDescriptor::from_spec(spec))
        .expect("descriptor fields always serialize")
}
