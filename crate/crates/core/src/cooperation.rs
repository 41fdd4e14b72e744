//! Paired non-cooperative/cooperative analysis.
//!
//! [`compare`] evaluates both regimes of a scenario under one welfare mode
//! and records how much cooperation lowers the tax, the deadweight loss and
//! the social optimum. [`recommend`] turns a comparison into a short
//! three-action policy report. [`slope_from_efficiency`] derives a candidate
//! cooperative slope from a per-unit energy (or emissions) improvement.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{
    equilibria, welfare, EquilibriumSet, ExternalityScenario, Industry, Mode, Regime, WelfareResult,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CooperationError {
    #[error(
        "no efficiency improvement: energy after ({after}) must be below energy before ({before})"
    )]
    NoImprovement { before: f64, after: f64 },
    #[error(
        "calibration inputs must be finite and positive (a={a}, before={before}, after={after})"
    )]
    InvalidCalibration { a: f64, before: f64, after: f64 },
    #[error("comparison verdict failed: {0}")]
    VerdictFailure(&'static str),
}

/// Candidate cooperative slope `c = a · before / after`.
///
/// The benefit curve steepens by the per-unit efficiency gain. The result
/// still has to satisfy `c > b` when the scenario is validated.
pub fn slope_from_efficiency(
    a: f64,
    energy_before: f64,
    energy_after: f64,
) -> Result<f64, CooperationError> {
    let positive = |v: f64| v.is_finite() && v > 0.0;
    if !(positive(a) && positive(energy_before) && positive(energy_after)) {
        return Err(CooperationError::InvalidCalibration {
            a,
            before: energy_before,
            after: energy_after,
        });
    }
    if energy_after >= energy_before {
        return Err(CooperationError::NoImprovement {
            before: energy_before,
            after: energy_after,
        });
    }
    Ok(a * (energy_before / energy_after))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeOutcome {
    pub equilibria: EquilibriumSet,
    pub welfare: WelfareResult,
}

impl RegimeOutcome {
    pub fn evaluate(scenario: &ExternalityScenario, regime: Regime, mode: Mode) -> Self {
        Self {
            equilibria: equilibria(scenario, regime),
            welfare: welfare(scenario, regime, mode),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InequalityVerdicts {
    /// τ₁ > τ₂
    pub tau_reduced: bool,
    /// α₁ > α₂
    pub alpha_reduced: bool,
    /// x*₂ < x*₁
    pub equilibrium_lowered: bool,
}

impl InequalityVerdicts {
    pub fn all(&self) -> bool {
        self.tau_reduced && self.alpha_reduced && self.equilibrium_lowered
    }

    fn first_failure(&self) -> Option<&'static str> {
        if !self.tau_reduced {
            Some("tau_reduced")
        } else if !self.alpha_reduced {
            Some("alpha_reduced")
        } else if !self.equilibrium_lowered {
            Some("equilibrium_lowered")
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub scenario: ExternalityScenario,
    pub mode: Mode,
    pub noncoop: RegimeOutcome,
    pub coop: RegimeOutcome,
    /// τ₁ − τ₂
    pub delta_tau: f64,
    /// α₁ − α₂
    pub delta_alpha: f64,
    /// x*₁ − x*₂
    pub delta_x_social: f64,
    pub verdicts: InequalityVerdicts,
}

impl ComparisonReport {
    pub fn outcome(&self, regime: Regime) -> &RegimeOutcome {
        match regime {
            Regime::NonCooperative => &self.noncoop,
            Regime::Cooperative => &self.coop,
        }
    }
}

pub fn compare(scenario: &ExternalityScenario, mode: Mode) -> ComparisonReport {
    let noncoop = RegimeOutcome::evaluate(scenario, Regime::NonCooperative, mode);
    let coop = RegimeOutcome::evaluate(scenario, Regime::Cooperative, mode);
    let (w1, w2) = (noncoop.welfare, coop.welfare);
    let (x1, x2) = (noncoop.equilibria.x_social, coop.equilibria.x_social);
    ComparisonReport {
        scenario: scenario.clone(),
        mode,
        noncoop,
        coop,
        delta_tau: w1.tau - w2.tau,
        delta_alpha: w1.alpha - w2.alpha,
        delta_x_social: x1 - x2,
        verdicts: InequalityVerdicts {
            tau_reduced: w1.tau > w2.tau,
            alpha_reduced: w1.alpha > w2.alpha,
            equilibrium_lowered: x2 < x1,
        },
    }
}

/// The kind of partnership recommended for an industry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CooperativeAction {
    EmissionReducingTechnology,
    WaterPurification,
    CleanSourceSubstitution,
    TechnologyPartnership,
}

impl CooperativeAction {
    pub fn for_industry(industry: Industry) -> Self {
        match industry {
            Industry::Pollution => CooperativeAction::EmissionReducingTechnology,
            Industry::Agriculture => CooperativeAction::WaterPurification,
            Industry::Energy => CooperativeAction::CleanSourceSubstitution,
            Industry::Custom => CooperativeAction::TechnologyPartnership,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CooperativeAction::EmissionReducingTechnology => {
                "partner emitters with an emission-reducing technology provider \
                 (cleaner drivetrains, air purification, emission controls)"
            }
            CooperativeAction::WaterPurification => {
                "partner producers with a water-purification technology business \
                 so that contaminated discharge is no longer needed"
            }
            CooperativeAction::CleanSourceSubstitution => {
                "partner generators with clean-source suppliers to substitute \
                 hydro and biofuel capacity for coal, oil and gas"
            }
            CooperativeAction::TechnologyPartnership => {
                "partner the producing industry with a technology provider that \
                 lowers the benefit of each additional unit of the externality"
            }
        }
    }
}

fn externality_for(industry: Industry) -> &'static str {
    match industry {
        Industry::Pollution => "air pollution (fine particulate and CO2 emissions)",
        Industry::Agriculture => "agricultural water contamination and loss of natural aesthetics",
        Industry::Energy => "emissions from unclean energy sources",
        Industry::Custom => "unspecified production externality",
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecommendationReport {
    pub scenario_name: String,
    pub industry: Industry,
    pub identified_externality: &'static str,
    pub action: CooperativeAction,
    pub cooperative_slope: f64,
    pub residual_tax: f64,
    pub avoided_deadweight_loss: f64,
    pub narrative: String,
}

pub fn recommend(report: &ComparisonReport) -> Result<RecommendationReport, CooperationError> {
    if let Some(failed) = report.verdicts.first_failure() {
        return Err(CooperationError::VerdictFailure(failed));
    }
    let meta = report.scenario.meta();
    let action = CooperativeAction::for_industry(meta.industry);
    let identified_externality = externality_for(meta.industry);
    let cooperative_slope = report.scenario.c();
    let residual_tax = report.coop.welfare.tau;
    let avoided_deadweight_loss = report.delta_alpha;

    let num = crate::io::format_number;
    let currency = &meta.currency_unit;
    let activity = &meta.activity_unit;
    let mut narrative = String::new();
    // writing to a String cannot fail
    let _ = writeln!(narrative, "Scenario: {} ({})", meta.name, meta.industry);
    let _ = writeln!(narrative, "Externality: {identified_externality}");
    let _ = writeln!(narrative, "Welfare mode: {}", report.mode);
    let _ = writeln!(narrative);
    let _ = writeln!(narrative, "1. Cooperate: {}.", action.description());
    let _ = writeln!(
        narrative,
        "   Target benefit slope magnitude rises from {} to {} {currency}/{activity} per {activity}.",
        num(report.scenario.a()),
        num(cooperative_slope)
    );
    let _ = writeln!(
        narrative,
        "2. Tax the remainder: a residual Pigouvian tax of {} {currency}/{activity} \
         (down from {}, a reduction of {}).",
        num(residual_tax),
        num(report.noncoop.welfare.tau),
        num(report.delta_tau)
    );
    let _ = writeln!(
        narrative,
        "3. Reallocate: deadweight loss falls from {} to {} {currency}, avoiding {} {currency}; \
         the social optimum moves from {} to {} {activity}.",
        num(report.noncoop.welfare.alpha),
        num(report.coop.welfare.alpha),
        num(avoided_deadweight_loss),
        num(report.noncoop.equilibria.x_social),
        num(report.coop.equilibria.x_social)
    );

    Ok(RecommendationReport {
        scenario_name: meta.name.clone(),
        industry: meta.industry,
        identified_externality,
        action,
        cooperative_slope,
        residual_tax,
        avoided_deadweight_loss,
        narrative,
    })
}
