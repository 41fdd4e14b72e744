//! Linear externality markets.
//!
//! Every market is described by four affine marginal curves over an activity
//! level `x`:
//!
//! | curve          | equation        |
//! |----------------|-----------------|
//! | MPC            | `a·x`           |
//! | MSC            | `b·x`           |
//! | MSB (non-coop) | `−a·x + y1`     |
//! | MSB (coop)     | `−c·x + y1`     |
//!
//! with `c > b > a > 0` and `y1 > 0`. Private benefit and social benefit
//! coincide, so there is no separate MPB curve.
//!
//! Welfare is available in two modes. [`Mode::Paper`] reproduces the
//! published closed forms for the tax and deadweight loss verbatim, including
//! the fact that the two regimes evaluate the tax at different points.
//! [`Mode::Standard`] applies the textbook definitions uniformly and is
//! checked against [`dwl_quadrature`].

mod curve;
mod equilibrium;
mod quadrature;
mod scenario;
mod welfare;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use curve::{intersect, AffineCurve, CurveLabel, Point, PARALLEL_TOLERANCE};
pub use equilibrium::{curves, equilibria, CurveSet, EquilibriumSet};
pub use quadrature::{dwl_quadrature, trapezoid};
pub use scenario::{
    validate, validate_parameters, Constraint, ConstraintViolation, ExternalityScenario, Industry,
    Parameters, ScenarioMeta,
};
pub use welfare::{welfare, welfare_paper, welfare_standard, WelfareResult};

/// Relative tolerance for algebraic identities between closed forms.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
/// Relative tolerance for geometric residuals (points lying on curves).
pub const GEOMETRIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("curves are parallel (slopes {first} and {second})")]
    ParallelCurves { first: f64, second: f64 },
    #[error(transparent)]
    Constraint(#[from] ConstraintViolation),
    #[error("scenario metadata field `{0}` must be nonempty")]
    EmptyMeta(&'static str),
}

/// Which benefit curve is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    NonCooperative,
    Cooperative,
}

impl Regime {
    pub const BOTH: [Regime; 2] = [Regime::NonCooperative, Regime::Cooperative];

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::NonCooperative => "noncooperative",
            Regime::Cooperative => "cooperative",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "noncooperative" | "noncoop" => Ok(Regime::NonCooperative),
            "cooperative" | "coop" => Ok(Regime::Cooperative),
            other => Err(format!(
                "unknown regime `{other}` (expected noncooperative or cooperative)"
            )),
        }
    }
}

/// Welfare accounting convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Published closed forms, reproduced verbatim.
    #[default]
    Paper,
    /// Tax is the MSC−MPC gap at the social optimum; deadweight loss is the
    /// triangle integral of MSC−MSB between the two equilibria.
    Standard,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Paper => "paper",
            Mode::Standard => "standard",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Mode::Paper),
            "standard" => Ok(Mode::Standard),
            other => Err(format!(
                "unknown mode `{other}` (expected paper or standard)"
            )),
        }
    }
}

/// `|actual − expected| / max(1e-300, |expected|)`, or the absolute gap when
/// `expected` is exactly zero.
pub fn relative_error(actual: f64, expected: f64) -> f64 {
    let gap = (actual - expected).abs();
    if expected == 0.0 {
        gap
    } else {
        gap / expected.abs()
    }
}
