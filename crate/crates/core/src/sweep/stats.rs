use rayon::prelude::*;

use crate::cooperation::compare;
use crate::model::{ExternalityScenario, Mode};

/// Running moments of one quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub std_dev: f64,
    pub min: f64,
    pub max: f64,
}

impl Summary {
    fn of(values: &[f64]) -> Self {
        let count = values.len();
        if count == 0 {
            return Self {
                count,
                mean: f64::NAN,
                std_dev: f64::NAN,
                min: f64::NAN,
                max: f64::NAN,
            };
        }
        // Welford, sequential for deterministic rounding
        let (mut mean, mut m2) = (0.0, 0.0);
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        for (i, &v) in values.iter().enumerate() {
            let delta = v - mean;
            mean += delta / (i + 1) as f64;
            m2 += delta * (v - mean);
            min = min.min(v);
            max = max.max(v);
        }
        let std_dev = if count > 1 {
            (m2 / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Self {
            count,
            mean,
            std_dev,
            min,
            max,
        }
    }
}

/// Distribution of cooperation gains over a scenario set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainStatistics {
    pub mode: Mode,
    pub scenarios: usize,
    /// Scenarios whose three verdicts all held.
    pub verdicts_held: usize,
    pub delta_tau: Summary,
    pub delta_alpha: Summary,
    pub delta_x_social: Summary,
    /// `(τ₁ − τ₂)/τ₁`
    pub tau_reduction: Summary,
    /// `(α₁ − α₂)/α₁`
    pub alpha_reduction: Summary,
}

pub fn aggregate(scenarios: &[ExternalityScenario], mode: Mode) -> GainStatistics {
    let rows: Vec<([f64; 5], bool)> = scenarios
        .par_iter()
        .map(|s| {
            let r = compare(s, mode);
            let gains = [
                r.delta_tau,
                r.delta_alpha,
                r.delta_x_social,
                r.delta_tau / r.noncoop.welfare.tau,
                r.delta_alpha / r.noncoop.welfare.alpha,
            ];
            (gains, r.verdicts.all())
        })
        .collect();
    let column = |j: usize| -> Vec<f64> { rows.iter().map(|(g, _)| g[j]).collect() };
    GainStatistics {
        mode,
        scenarios: scenarios.len(),
        verdicts_held: rows.iter().filter(|(_, held)| *held).count(),
        delta_tau: Summary::of(&column(0)),
        delta_alpha: Summary::of(&column(1)),
        delta_x_social: Summary::of(&column(2)),
        tau_reduction: Summary::of(&column(3)),
        alpha_reduction: Summary::of(&column(4)),
    }
}
