use std::fmt;

use super::ModelError;

/// Slopes closer than this are treated as parallel by [`intersect`].
pub const PARALLEL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveLabel {
    Mpc,
    Msc,
    MsbNonCoop,
    MsbCoop,
}

impl CurveLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveLabel::Mpc => "MPC",
            CurveLabel::Msc => "MSC",
            CurveLabel::MsbNonCoop => "MSB_noncoop",
            CurveLabel::MsbCoop => "MSB_coop",
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A marginal curve `slope·x + intercept`, in currency per unit of activity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineCurve {
    pub slope: f64,
    pub intercept: f64,
    pub label: CurveLabel,
}

impl AffineCurve {
    pub fn new(slope: f64, intercept: f64, label: CurveLabel) -> Self {
        Self {
            slope,
            intercept,
            label,
        }
    }

    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    /// Vertical gap `self(x) − other(x)` as its own affine function.
    ///
    /// Evaluating the difference curve avoids the cancellation of
    /// subtracting two large nearby values.
    #[inline]
    pub fn gap(&self, other: &AffineCurve, x: f64) -> f64 {
        (self.slope - other.slope) * x + (self.intercept - other.intercept)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Crossing point of two non-parallel lines. `x` may be negative.
pub fn intersect(first: &AffineCurve, second: &AffineCurve) -> Result<Point, ModelError> {
    if (first.slope - second.slope).abs() <= PARALLEL_TOLERANCE {
        return Err(ModelError::ParallelCurves {
            first: first.slope,
            second: second.slope,
        });
    }
    Ok(crossing(first, second))
}

// Caller guarantees the slopes differ.
pub(super) fn crossing(first: &AffineCurve, second: &AffineCurve) -> Point {
    let x = (second.intercept - first.intercept) / (first.slope - second.slope);
    Point {
        x,
        y: first.value(x),
    }
}
