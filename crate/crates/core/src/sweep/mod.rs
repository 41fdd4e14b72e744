//! Exploration of the valid parameter region.
//!
//! * [`sample`] draws seeded random scenarios by rejection.
//! * [`sweep_grid`] varies one parameter over a uniform grid.
//! * [`sensitivity`] compares analytic partials of the closed-form welfare
//!   measures with central finite differences.
//! * [`aggregate`] summarizes cooperation gains over a set of scenarios.
//!
//! Point evaluations run in parallel; results are always assembled in input
//! order, so output is independent of scheduling.

mod grid;
mod sample;
mod sensitivity;
mod stats;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{ConstraintViolation, Parameters};

pub use grid::{sweep_grid, PointSummary, SkippedPoint, SweepPoint, SweepSeries};
pub use sample::{sample, Interval, ParameterRegion, REJECTION_FACTOR};
pub use sensitivity::{
    default_step, partial, sensitivity, target_value, SensitivityResult, Target,
};
pub use stats::{aggregate, GainStatistics, Summary};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("unknown parameter `{0}` (expected one of a, b, c, y1)")]
    UnknownParameter(String),
    #[error("unknown target `{0}` (expected one of tau1, tau2, alpha1, alpha2)")]
    UnknownTarget(String),
    #[error("invalid region for `{parameter}`: [{lo}, {hi}] must be finite, nonempty, with positive lower bound")]
    InvalidRegion {
        parameter: Parameter,
        lo: f64,
        hi: f64,
    },
    #[error("region infeasible: {rejections} consecutive draws violated the constraints")]
    RegionInfeasible { rejections: usize },
    #[error("invalid grid: need finite from < to and at least 2 steps (from={from}, to={to}, steps={steps})")]
    InvalidGrid { from: f64, to: f64, steps: usize },
    #[error("perturbation by ±{h} leaves the valid region: {violation}")]
    PerturbationInvalid {
        h: f64,
        violation: ConstraintViolation,
    },
    #[error("finite-difference step must be finite and positive, got {0}")]
    InvalidStep(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    A,
    B,
    C,
    Y1,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [Parameter::A, Parameter::B, Parameter::C, Parameter::Y1];

    pub fn as_str(self) -> &'static str {
        match self {
            Parameter::A => "a",
            Parameter::B => "b",
            Parameter::C => "c",
            Parameter::Y1 => "y1",
        }
    }

    pub fn get(self, p: &Parameters) -> f64 {
        match self {
            Parameter::A => p.a,
            Parameter::B => p.b,
            Parameter::C => p.c,
            Parameter::Y1 => p.y1,
        }
    }

    pub fn set(self, mut p: Parameters, value: f64) -> Parameters {
        match self {
            Parameter::A => p.a = value,
            Parameter::B => p.b = value,
            Parameter::C => p.c = value,
            Parameter::Y1 => p.y1 = value,
        }
        p
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parameter {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(Parameter::A),
            "b" => Ok(Parameter::B),
            "c" => Ok(Parameter::C),
            "y1" => Ok(Parameter::Y1),
            other => Err(SweepError::UnknownParameter(other.to_owned())),
        }
    }
}
