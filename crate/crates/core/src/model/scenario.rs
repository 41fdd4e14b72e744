use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use super::ModelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Industry {
    Pollution,
    Agriculture,
    Energy,
    Custom,
}

impl Industry {
    pub fn as_str(self) -> &'static str {
        match self {
            Industry::Pollution => "pollution",
            Industry::Agriculture => "agriculture",
            Industry::Energy => "energy",
            Industry::Custom => "custom",
        }
    }
}

impl fmt::Display for Industry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Industry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pollution" => Ok(Industry::Pollution),
            "agriculture" => Ok(Industry::Agriculture),
            "energy" => Ok(Industry::Energy),
            "custom" => Ok(Industry::Custom),
            other => Err(format!(
                "unknown industry `{other}` (expected pollution, agriculture, energy or custom)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioMeta {
    pub name: String,
    pub industry: Industry,
    pub activity_unit: String,
    pub currency_unit: String,
    pub notes: String,
}

impl ScenarioMeta {
    /// Metadata for ad-hoc scenarios built in code.
    pub fn custom(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            industry: Industry::Custom,
            activity_unit: "units".to_owned(),
            currency_unit: "$".to_owned(),
            notes: String::new(),
        }
    }
}

/// The four model parameters. Not validated on its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parameters {
    /// MPC slope.
    pub a: f64,
    /// MSC slope.
    pub b: f64,
    /// Magnitude of the cooperative MSB slope.
    pub c: f64,
    /// MSB intercept: benefit of the first unit of activity.
    pub y1: f64,
}

impl Parameters {
    pub fn new(a: f64, b: f64, c: f64, y1: f64) -> Self {
        Self { a, b, c, y1 }
    }
}

/// The predicates checked by [`validate`], in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    Finite,
    APositive,
    BAboveA,
    CAboveB,
    Y1Positive,
    SumAboveTwiceA,
}

impl Constraint {
    /// The violated condition, written as it fails.
    pub fn failure(self) -> &'static str {
        match self {
            Constraint::Finite => "parameter not finite",
            Constraint::APositive => "a <= 0",
            Constraint::BAboveA => "b <= a",
            Constraint::CAboveB => "c <= b",
            Constraint::Y1Positive => "y1 <= 0",
            Constraint::SumAboveTwiceA => "b + c <= 2a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("constraint violated: {} (a={}, b={}, c={}, y1={})",
    .constraint.failure(), .values.a, .values.b, .values.c, .values.y1)]
pub struct ConstraintViolation {
    pub constraint: Constraint,
    pub values: Parameters,
}

/// First failing predicate, if any. Non-finite values fail before any
/// ordering check.
pub fn validate_parameters(p: Parameters) -> Result<Parameters, ConstraintViolation> {
    let fail = |constraint| {
        Err(ConstraintViolation {
            constraint,
            values: p,
        })
    };
    if ![p.a, p.b, p.c, p.y1].iter().all(|v| v.is_finite()) {
        return fail(Constraint::Finite);
    }
    if p.a <= 0.0 {
        return fail(Constraint::APositive);
    }
    if p.b <= p.a {
        return fail(Constraint::BAboveA);
    }
    if p.c <= p.b {
        return fail(Constraint::CAboveB);
    }
    if p.y1 <= 0.0 {
        return fail(Constraint::Y1Positive);
    }
    if p.b + p.c <= 2.0 * p.a {
        return fail(Constraint::SumAboveTwiceA);
    }
    Ok(p)
}

/// A validated, immutable market description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExternalityScenario {
    params: Parameters,
    meta: Arc<ScenarioMeta>,
}

impl ExternalityScenario {
    pub fn parameters(&self) -> Parameters {
        self.params
    }

    pub fn a(&self) -> f64 {
        self.params.a
    }

    pub fn b(&self) -> f64 {
        self.params.b
    }

    pub fn c(&self) -> f64 {
        self.params.c
    }

    pub fn y1(&self) -> f64 {
        self.params.y1
    }

    pub fn meta(&self) -> &ScenarioMeta {
        &self.meta
    }

    /// Same metadata, new parameters. Metadata is shared, not copied.
    pub fn with_parameters(&self, params: Parameters) -> Result<Self, ConstraintViolation> {
        Ok(Self {
            params: validate_parameters(params)?,
            meta: Arc::clone(&self.meta),
        })
    }
}

pub fn validate(
    a: f64,
    b: f64,
    c: f64,
    y1: f64,
    meta: ScenarioMeta,
) -> Result<ExternalityScenario, ModelError> {
    let params = validate_parameters(Parameters::new(a, b, c, y1))?;
    if meta.name.trim().is_empty() {
        return Err(ModelError::EmptyMeta("name"));
    }
    if meta.activity_unit.trim().is_empty() {
        return Err(ModelError::EmptyMeta("activity_unit"));
    }
    if meta.currency_unit.trim().is_empty() {
        return Err(ModelError::EmptyMeta("currency_unit"));
    }
    Ok(ExternalityScenario {
        params,
        meta: Arc::new(meta),
    })
}
