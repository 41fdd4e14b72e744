use rayon::prelude::*;

use crate::cooperation::{compare, ComparisonReport};
use crate::model::{ConstraintViolation, ExternalityScenario, Mode};

use super::{Parameter, SweepError};

/// The six headline numbers of one comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointSummary {
    pub tau1: f64,
    pub tau2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub x_social1: f64,
    pub x_social2: f64,
}

impl From<&ComparisonReport> for PointSummary {
    fn from(r: &ComparisonReport) -> Self {
        Self {
            tau1: r.noncoop.welfare.tau,
            tau2: r.coop.welfare.tau,
            alpha1: r.noncoop.welfare.alpha,
            alpha2: r.coop.welfare.alpha,
            x_social1: r.noncoop.equilibria.x_social,
            x_social2: r.coop.equilibria.x_social,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub index: usize,
    pub value: f64,
    pub summary: PointSummary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkippedPoint {
    pub index: usize,
    pub value: f64,
    pub violation: ConstraintViolation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSeries {
    pub parameter: Parameter,
    pub mode: Mode,
    pub grid: Vec<f64>,
    pub points: Vec<SweepPoint>,
    pub skipped: Vec<SkippedPoint>,
}

impl SweepSeries {
    /// Evaluated or skipped outcome for each grid index, in grid order.
    pub fn rows(&self) -> impl Iterator<Item = (f64, Result<&PointSummary, &ConstraintViolation>)> {
        let mut points = self.points.iter().peekable();
        let mut skipped = self.skipped.iter().peekable();
        self.grid.iter().enumerate().map(move |(i, &value)| {
            match points.peek() {
                Some(p) if p.index == i => return (value, Ok(&points.next().unwrap().summary)),
                _ => {}
            }
            let s = skipped
                .next()
                .expect("every grid index is evaluated or skipped");
            debug_assert_eq!(s.index, i);
            (value, Err(&s.violation))
        })
    }
}

/// Uniform grid of `steps` points from `from` to `to`, both inclusive.
pub(super) fn uniform_grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                to
            } else {
                from + (to - from) * (i as f64 / last)
            }
        })
        .collect()
}

/// Vary one parameter of `base` over a uniform grid and compare both regimes
/// at each point. Points that fail validation are kept in `skipped`.
pub fn sweep_grid(
    base: &ExternalityScenario,
    parameter: &str,
    from: f64,
    to: f64,
    steps: usize,
    mode: Mode,
) -> Result<SweepSeries, SweepError> {
    let parameter: Parameter = parameter.parse()?;
    if !(from.is_finite() && to.is_finite() && from < to && steps >= 2) {
        return Err(SweepError::InvalidGrid { from, to, steps });
    }
    let grid = uniform_grid(from, to, steps);
    let params = base.parameters();

    let outcomes: Vec<Result<PointSummary, ConstraintViolation>> = grid
        .par_iter()
        .map(|&value| {
            base.with_parameters(parameter.set(params, value))
                .map(|s| PointSummary::from(&compare(&s, mode)))
        })
        .collect();

    let mut points = Vec::with_capacity(outcomes.len());
    let mut skipped = Vec::new();
    for (index, (outcome, &value)) in outcomes.into_iter().zip(&grid).enumerate() {
        match outcome {
            Ok(summary) => points.push(SweepPoint {
                index,
                value,
                summary,
            }),
            Err(violation) => skipped.push(SkippedPoint {
                index,
                value,
                violation,
            }),
        }
    }
    Ok(SweepSeries {
        parameter,
        mode,
        grid,
        points,
        skipped,
    })
}
