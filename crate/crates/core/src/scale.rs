//! Scale generator functions.
//!
//! A functionally quantized scale with `T` tones per octave is described by a
//! strictly increasing `f: [0, 1] -> [1, 2]` with `f(0) = 1` and `f(1) = 2`.
//! Step `n` of the first octave sounds at `F_0 * f(n / T)`; higher and lower
//! octaves double and halve.
//!
//! The bundled families are:
//!
//! | family              | `f(x)`                                   |
//! |---------------------|------------------------------------------|
//! | `equal_temperament` | `2^x`                                    |
//! | `log`               | `½·log2(4 + 12x)`                        |
//! | `sqrt`              | `½·√(4 + 12x)`                           |
//! | `sine`              | `1 + sin(πx/2)`                          |
//! | `power(a)`          | `½·(2^a + (4^a − 2^a)·x)^(1/a)`, `a > 0` |
//! | `power2(a)`         | `1 + x^a`, `a > 0`                       |
//!
//! `power(2)` coincides with `sqrt`, and `power(a)` tends to equal temperament
//! as `a -> 0`. Arbitrary scales can be supplied as a table of octave
//! fractions, see [`CustomSteps`].

use std::fmt;
use std::str::FromStr;

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};

/// Tolerance for `f(0) = 1`, `f(1) = 2` and the step-table endpoints.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

/// Number of grid intervals used when sampling `f` for monotonicity.
pub const MONOTONICITY_GRID: usize = 1000;

pub const DEFAULT_TONES_PER_OCTAVE: u32 = 12;

/// Strictly positive, finite family parameter `a`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub fn new(a: f64) -> Result<Self> {
        if a.is_finite() && a > 0.0 {
            Ok(Exponent(a))
        } else {
            Err(Error::InvalidParameter(format!(
                "family parameter a must be finite and > 0, got {a}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// A user-supplied scale given by its octave fractions `log2 f(n/T)`, `n = 0..=T`.
///
/// Between step points the scale is interpolated linearly in the log domain,
/// so `f` is piecewise exponential and strictly increasing whenever the steps are.
#[derive(Clone, Debug, PartialEq)]
pub struct CustomSteps(Vec<f64>);

impl CustomSteps {
    /// Accepts `T + 1` octave fractions starting at 0 and ending at 1.
    pub fn new(steps: Vec<f64>) -> Result<Self> {
        let violations = step_violations(&steps);
        if violations.is_empty() {
            Ok(CustomSteps(steps))
        } else {
            Err(Error::InvalidScale(violations))
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn tones(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    fn log2_ratio<F: Float>(&self, x: F) -> F {
        let steps = &self.0;
        let tones = steps.len() - 1;
        let pos = x * cast::<F>(tones as f64);
        let i = pos.floor().to_usize().unwrap_or(0).min(tones - 1);
        let t = pos - cast(i as f64);
        let lo = cast::<F>(steps[i]);
        let hi = cast::<F>(steps[i + 1]);
        lo + (hi - lo) * t
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScaleFamily {
    EqualTemperament,
    Log,
    Sqrt,
    Sine,
    Power(Exponent),
    Power2(Exponent),
    Custom(CustomSteps),
}

impl ScaleFamily {
    pub fn power(a: f64) -> Result<Self> {
        Exponent::new(a).map(ScaleFamily::Power)
    }

    pub fn power2(a: f64) -> Result<Self> {
        Exponent::new(a).map(ScaleFamily::Power2)
    }

    /// Looks a bundled family up by name. `a` is required for `power` and
    /// `power2` and must be absent otherwise.
    pub fn from_name(name: &str, a: Option<f64>) -> Result<Self> {
        let kind: FamilyKind = name.parse()?;
        match (kind, a) {
            (FamilyKind::Power, Some(a)) => ScaleFamily::power(a),
            (FamilyKind::Power2, Some(a)) => ScaleFamily::power2(a),
            (FamilyKind::Power | FamilyKind::Power2, None) => Err(Error::InvalidParameter(
                format!("family `{}` requires parameter a", kind.name()),
            )),
            (_, Some(_)) => Err(Error::InvalidParameter(format!(
                "family `{}` takes no parameter",
                kind.name()
            ))),
            (FamilyKind::EqualTemperament, None) => Ok(ScaleFamily::EqualTemperament),
            (FamilyKind::Log, None) => Ok(ScaleFamily::Log),
            (FamilyKind::Sqrt, None) => Ok(ScaleFamily::Sqrt),
            (FamilyKind::Sine, None) => Ok(ScaleFamily::Sine),
            (FamilyKind::Custom, None) => Err(Error::InvalidParameter(
                "custom scales are built from a step table, not by name".into(),
            )),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            ScaleFamily::EqualTemperament => FamilyKind::EqualTemperament,
            ScaleFamily::Log => FamilyKind::Log,
            ScaleFamily::Sqrt => FamilyKind::Sqrt,
            ScaleFamily::Sine => FamilyKind::Sine,
            ScaleFamily::Power(_) => FamilyKind::Power,
            ScaleFamily::Power2(_) => FamilyKind::Power2,
            ScaleFamily::Custom(_) => FamilyKind::Custom,
        }
    }

    pub fn name(&self) -> &'static str {
        self.kind().name()
    }

    pub fn parameter(&self) -> Option<f64> {
        match self {
            ScaleFamily::Power(a) | ScaleFamily::Power2(a) => Some(a.get()),
            _ => None,
        }
    }

    /// `f(x)` written literally, evaluated in `F`.
    pub(crate) fn ratio<F: Float + FloatConst>(&self, x: F) -> F {
        let half = cast::<F>(0.5);
        let twelve = cast::<F>(12.0);
        let four = cast::<F>(4.0);
        match self {
            ScaleFamily::EqualTemperament => x.exp2(),
            ScaleFamily::Log => half * (four + twelve * x).log2(),
            ScaleFamily::Sqrt => half * (four + twelve * x).sqrt(),
            ScaleFamily::Sine => F::one() + (F::FRAC_PI_2() * x).sin(),
            ScaleFamily::Power(a) => {
                let a = cast::<F>(a.get());
                let lo = a.exp2();
                let hi = (a + a).exp2();
                half * (lo + (hi - lo) * x).powf(a.recip())
            }
            ScaleFamily::Power2(a) => F::one() + x.powf(cast(a.get())),
            ScaleFamily::Custom(steps) => steps.log2_ratio(x).exp2(),
        }
    }

    /// `log2 f(n/T)` in `F`, using the simplest closed form for each family.
    ///
    /// For `log` this is `log2 log2(4 + 12n/T) − 1`, which for `T = 12` is the
    /// LOG QNT expression term for term.
    pub(crate) fn log2_ratio_at_step<F: Float + FloatConst>(&self, n: u32, tones: u32) -> F {
        let t = cast::<F>(tones as f64);
        let n_f = cast::<F>(n as f64);
        let x = n_f / t;
        let four = cast::<F>(4.0);
        match self {
            ScaleFamily::EqualTemperament => x,
            ScaleFamily::Log => {
                let arg = four + cast::<F>(12.0 * n as f64) / t;
                arg.log2().log2() - F::one()
            }
            ScaleFamily::Sqrt => {
                let arg = four + cast::<F>(12.0 * n as f64) / t;
                cast::<F>(0.5) * arg.log2() - F::one()
            }
            ScaleFamily::Sine => (F::one() + (F::FRAC_PI_2() * x).sin()).log2(),
            ScaleFamily::Power(a) => {
                let a = cast::<F>(a.get());
                let lo = a.exp2();
                let hi = (a + a).exp2();
                (lo + (hi - lo) * x).log2() / a - F::one()
            }
            ScaleFamily::Power2(a) => (F::one() + x.powf(cast(a.get()))).log2(),
            ScaleFamily::Custom(steps) => cast(steps.as_slice()[n as usize]),
        }
    }

    /// Human-readable `f(x)` for listings.
    pub fn formula(&self) -> String {
        match self {
            ScaleFamily::Power(a) => format!("f(x) = 1/2 * (2^a + (4^a - 2^a) * x)^(1/a), a = {}", a.get()),
            ScaleFamily::Power2(a) => format!("f(x) = 1 + x^a, a = {}", a.get()),
            _ => self.kind().formula().to_string(),
        }
    }
}

impl fmt::Display for ScaleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(a) => write!(f, "{}(a={a})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Family tag without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    EqualTemperament,
    Log,
    Sqrt,
    Sine,
    Power,
    Power2,
    Custom,
}

impl FamilyKind {
    pub const BUNDLED: [FamilyKind; 6] = [
        FamilyKind::EqualTemperament,
        FamilyKind::Log,
        FamilyKind::Sqrt,
        FamilyKind::Sine,
        FamilyKind::Power,
        FamilyKind::Power2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::EqualTemperament => "equal_temperament",
            FamilyKind::Log => "log",
            FamilyKind::Sqrt => "sqrt",
            FamilyKind::Sine => "sine",
            FamilyKind::Power => "power",
            FamilyKind::Power2 => "power2",
            FamilyKind::Custom => "custom",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            FamilyKind::EqualTemperament => "f(x) = 2^x",
            FamilyKind::Log => "f(x) = 1/2 * log2(4 + 12x)",
            FamilyKind::Sqrt => "f(x) = 1/2 * sqrt(4 + 12x)",
            FamilyKind::Sine => "f(x) = 1 + sin(pi * x / 2)",
            FamilyKind::Power => "f(x) = 1/2 * (2^a + (4^a - 2^a) * x)^(1/a), a > 0",
            FamilyKind::Power2 => "f(x) = 1 + x^a, a > 0",
            FamilyKind::Custom => "f(x) = 2^(interpolated octave fraction)",
        }
    }

    pub fn takes_parameter(self) -> bool {
        matches!(self, FamilyKind::Power | FamilyKind::Power2)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "equal_temperament" | "et" | "12tet" | "edo" => Ok(FamilyKind::EqualTemperament),
            "log" => Ok(FamilyKind::Log),
            "sqrt" | "sqt" => Ok(FamilyKind::Sqrt),
            "sine" | "sin" => Ok(FamilyKind::Sine),
            "power" | "pow" => Ok(FamilyKind::Power),
            "power2" | "pow2" => Ok(FamilyKind::Power2),
            "custom" => Ok(FamilyKind::Custom),
            other => Err(Error::InvalidParameter(format!("unknown scale family `{other}`"))),
        }
    }
}

/// A scale family together with its number of tones per octave.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaleSpec {
    family: ScaleFamily,
    tones: u32,
}

impl ScaleSpec {
    pub fn new(family: ScaleFamily, tones_per_octave: u32) -> Result<Self> {
        if tones_per_octave == 0 {
            return Err(Error::InvalidParameter(
                "tones per octave must be at least 1".into(),
            ));
        }
        if let ScaleFamily::Custom(steps) = &family {
            if steps.tones() != tones_per_octave {
                return Err(Error::InvalidParameter(format!(
                    "custom scale has {} steps but {tones_per_octave} tones per octave were requested",
                    steps.tones()
                )));
            }
        }
        Ok(ScaleSpec {
            family,
            tones: tones_per_octave,
        })
    }

    pub fn family(&self) -> &ScaleFamily {
        &self.family
    }

    pub fn tones_per_octave(&self) -> u32 {
        self.tones
    }

    /// `f(x)` for `x` in `[0, 1]`.
    pub fn eval_f(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain(x));
        }
        Ok(self.family.ratio(x))
    }

    /// `f(n/T)` for a step index `n` in `0..=T`.
    pub fn ratio_at_step(&self, n: u32) -> f64 {
        debug_assert!(n <= self.tones);
        self.family.ratio(n as f64 / self.tones as f64)
    }

    /// Checks the generator contract and collects every violation found.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let at_zero = self.family.ratio(0.0_f64);
        let at_one = self.family.ratio(1.0_f64);
        let residual_zero = (at_zero - 1.0).abs();
        let residual_one = (at_one - 2.0).abs();
        // NaN must count as a failure, hence the negated comparisons.
        if !(residual_zero <= BOUNDARY_TOLERANCE) {
            violations.push(Violation::BoundaryAtZero(at_zero));
        }
        if !(residual_one <= BOUNDARY_TOLERANCE) {
            violations.push(Violation::BoundaryAtOne(at_one));
        }

        let mut prev = at_zero;
        for k in 1..=MONOTONICITY_GRID {
            let x = k as f64 / MONOTONICITY_GRID as f64;
            let y = self.family.ratio(x);
            if !(y > prev) {
                violations.push(Violation::NotIncreasing { x });
                break;
            }
            prev = y;
        }

        if let ScaleFamily::Custom(steps) = &self.family {
            violations.extend(step_violations(steps.as_slice()));
        }

        ValidationReport {
            boundary_residual: residual_zero.max(residual_one),
            violations,
        }
    }

    /// Octave fractions `log2 f(n/T)` for `n = 0..=T`.
    pub fn step_table(&self) -> Result<StepTable> {
        self.validate().into_result()?;
        let entries: Vec<f64> = (0..=self.tones)
            .map(|n| self.family.log2_ratio_at_step(n, self.tones))
            .collect();
        let violations = step_violations(&entries);
        if !violations.is_empty() {
            return Err(Error::InvalidScale(violations));
        }
        Ok(StepTable { entries })
    }
}

impl From<ScaleFamily> for ScaleSpec {
    /// Twelve tones per octave, or the step count of a custom scale.
    fn from(family: ScaleFamily) -> Self {
        let tones = match &family {
            ScaleFamily::Custom(steps) => steps.tones(),
            _ => DEFAULT_TONES_PER_OCTAVE,
        };
        ScaleSpec { family, tones }
    }
}

impl fmt::Display for ScaleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, T={}", self.family, self.tones)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    BoundaryAtZero(f64),
    BoundaryAtOne(f64),
    NotIncreasing { x: f64 },
    TooFewSteps(usize),
    FirstStep(f64),
    LastStep(f64),
    StepOutOfRange { index: usize, value: f64 },
    StepsNotIncreasing { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BoundaryAtZero(v) => write!(f, "f(0) = {v}, expected 1"),
            Violation::BoundaryAtOne(v) => write!(f, "f(1) = {v}, expected 2"),
            Violation::NotIncreasing { x } => write!(f, "f is not strictly increasing at x = {x}"),
            Violation::TooFewSteps(n) => write!(f, "need at least 2 step values, got {n}"),
            Violation::FirstStep(v) => write!(f, "first step is {v}, expected 0"),
            Violation::LastStep(v) => write!(f, "last step is {v}, expected 1"),
            Violation::StepOutOfRange { index, value } => {
                write!(f, "step {index} = {value} is outside [0, 1]")
            }
            Violation::StepsNotIncreasing { index } => {
                write!(f, "step {index} does not exceed step {}", index - 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    /// `max(|f(0) − 1|, |f(1) − 2|)`.
    pub boundary_residual: f64,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidScale(self.violations))
        }
    }
}

/// Per-step octave fractions `log2 f(n/T)`, `n = 0..=T`.
///
/// `entries[0]` is 0 and `entries[T]` is 1, strictly increasing in between.
#[derive(Clone, Debug, PartialEq)]
pub struct StepTable {
    entries: Vec<f64>,
}

impl StepTable {
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn tones_per_octave(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    /// The table narrowed to single precision.
    pub fn to_f32(&self) -> Vec<f32> {
        self.entries.iter().map(|&v| v as f32).collect()
    }

    pub fn cents(&self) -> Vec<f64> {
        self.entries.iter().map(|v| 1200.0 * v).collect()
    }
}

fn step_violations(steps: &[f64]) -> Vec<Violation> {
    let mut out = Vec::new();
    if steps.len() < 2 {
        out.push(Violation::TooFewSteps(steps.len()));
        return out;
    }
    let first = steps[0];
    let last = steps[steps.len() - 1];
    if !(first.abs() <= BOUNDARY_TOLERANCE) {
        out.push(Violation::FirstStep(first));
    }
    if !((last - 1.0).abs() <= BOUNDARY_TOLERANCE) {
        out.push(Violation::LastStep(last));
    }
    for (index, &value) in steps.iter().enumerate() {
        if !(-BOUNDARY_TOLERANCE..=1.0 + BOUNDARY_TOLERANCE).contains(&value) {
            out.push(Violation::StepOutOfRange { index, value });
        }
    }
    if let Some(index) = (1..steps.len()).find(|&i| !(steps[i] > steps[i - 1])) {
        out.push(Violation::StepsNotIncreasing { index });
    }
    out
}

#[inline]
pub(crate) fn cast<F: Float>(v: f64) -> F {
    F::from(v).expect("f64 converts to any float type")
}
