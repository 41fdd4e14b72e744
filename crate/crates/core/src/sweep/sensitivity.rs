use std::fmt;
use std::str::FromStr;

use crate::model::{welfare_paper, ExternalityScenario, Parameters, Regime};

use super::{Parameter, SweepError};

/// A closed-form welfare measure (paper mode).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Tau1,
    Tau2,
    Alpha1,
    Alpha2,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Tau1, Target::Tau2, Target::Alpha1, Target::Alpha2];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::Tau1 => "tau1",
            Target::Tau2 => "tau2",
            Target::Alpha1 => "alpha1",
            Target::Alpha2 => "alpha2",
        }
    }

    fn regime(self) -> Regime {
        match self {
            Target::Tau1 | Target::Alpha1 => Regime::NonCooperative,
            Target::Tau2 | Target::Alpha2 => Regime::Cooperative,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tau1" => Ok(Target::Tau1),
            "tau2" => Ok(Target::Tau2),
            "alpha1" => Ok(Target::Alpha1),
            "alpha2" => Ok(Target::Alpha2),
            other => Err(SweepError::UnknownTarget(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityResult {
    pub target: Target,
    pub parameter: Parameter,
    pub closed_form: f64,
    pub finite_difference: f64,
    /// `|closed_form − finite_difference| / max(1, |closed_form|)`
    pub relative_gap: f64,
}

/// The target measure evaluated through the model.
pub fn target_value(scenario: &ExternalityScenario, target: Target) -> f64 {
    let w = welfare_paper(scenario, target.regime());
    match target {
        Target::Tau1 | Target::Tau2 => w.tau,
        Target::Alpha1 | Target::Alpha2 => w.alpha,
    }
}

/// Analytic partial derivative of a paper-mode measure.
///
/// With `d = b − a`:
/// `τ₁ = d·y1/(a+b)`, `α₁ = τ₁²/(4a)`, `τ₂ = d·y1/(a+c)`, `α₂ = τ₂²/(2(b+c))`.
pub fn partial(p: Parameters, target: Target, parameter: Parameter) -> f64 {
    let Parameters { a, b, c, y1 } = p;
    let d = b - a;
    let s1 = a + b;
    let s2 = a + c;
    let tau1 = d * y1 / s1;
    let tau2 = d * y1 / s2;
    let dtau1 = match parameter {
        Parameter::A => -2.0 * b * y1 / (s1 * s1),
        Parameter::B => 2.0 * a * y1 / (s1 * s1),
        Parameter::C => 0.0,
        Parameter::Y1 => d / s1,
    };
    let dtau2 = match parameter {
        Parameter::A => -(b + c) * y1 / (s2 * s2),
        Parameter::B => y1 / s2,
        Parameter::C => -d * y1 / (s2 * s2),
        Parameter::Y1 => d / s2,
    };
    match target {
        Target::Tau1 => dtau1,
        Target::Tau2 => dtau2,
        Target::Alpha1 => {
            let direct = if parameter == Parameter::A {
                -tau1 * tau1 / (4.0 * a * a)
            } else {
                0.0
            };
            tau1 * dtau1 / (2.0 * a) + direct
        }
        Target::Alpha2 => {
            let k = b + c;
            let direct = match parameter {
                Parameter::B | Parameter::C => -tau2 * tau2 / (2.0 * k * k),
                _ => 0.0,
            };
            tau2 * dtau2 / k + direct
        }
    }
}

/// `1e-6 · max(1, |parameter value|)`.
pub fn default_step(scenario: &ExternalityScenario, parameter: Parameter) -> f64 {
    1e-6 * parameter.get(&scenario.parameters()).abs().max(1.0)
}

/// Analytic partial against a central difference with step `h`.
pub fn sensitivity(
    scenario: &ExternalityScenario,
    target: Target,
    parameter: Parameter,
    h: f64,
) -> Result<SensitivityResult, SweepError> {
    if !(h.is_finite() && h > 0.0) {
        return Err(SweepError::InvalidStep(h));
    }
    let params = scenario.parameters();
    let value = parameter.get(&params);
    let shifted = |delta: f64| {
        scenario
            .with_parameters(parameter.set(params, value + delta))
            .map_err(|violation| SweepError::PerturbationInvalid { h, violation })
    };
    let up = shifted(h)?;
    let down = shifted(-h)?;
    let finite_difference = (target_value(&up, target) - target_value(&down, target)) / (2.0 * h);
    let closed_form = partial(params, target, parameter);
    Ok(SensitivityResult {
        target,
        parameter,
        closed_form,
        finite_difference,
        relative_gap: (closed_form - finite_difference).abs() / closed_form.abs().max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{validate, Constraint, ScenarioMeta};

    fn worked() -> ExternalityScenario {
        validate(1.0, 2.0, 3.0, 12.0, ScenarioMeta::custom("w")).unwrap()
    }

    #[test]
    fn tau1_wrt_b() {
        let r = sensitivity(&worked(), Target::Tau1, Parameter::B, 1e-6).unwrap();
        assert!((r.closed_form - 8.0 / 3.0).abs() < 1e-12);
        assert!(r.relative_gap < 1e-5);
    }

    #[test]
    fn tau2_wrt_c_is_negative() {
        let r = sensitivity(&worked(), Target::Tau2, Parameter::C, 1e-6).unwrap();
        assert!((r.closed_form + 0.75).abs() < 1e-12);
        assert!(r.finite_difference < 0.0);
    }

    #[test]
    fn tau1_ignores_c() {
        let r = sensitivity(&worked(), Target::Tau1, Parameter::C, 1e-6).unwrap();
        assert_eq!(r.closed_form, 0.0);
        assert_eq!(r.finite_difference, 0.0);
    }

    #[test]
    fn perturbation_leaving_region() {
        let s = validate(1.0, 1.0 + 1e-7, 3.0, 12.0, ScenarioMeta::custom("edge")).unwrap();
        match sensitivity(&s, Target::Tau1, Parameter::B, 1e-6) {
            Err(SweepError::PerturbationInvalid { violation, .. }) => {
                assert_eq!(violation.constraint, Constraint::BAboveA)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_step() {
        assert!(matches!(
            sensitivity(&worked(), Target::Tau1, Parameter::B, 0.0),
            Err(SweepError::InvalidStep(_))
        ));
    }

    #[test]
    fn default_step_scales_with_value() {
        assert_eq!(default_step(&worked(), Parameter::A), 1e-6);
        assert!((default_step(&worked(), Parameter::Y1) - 12e-6).abs() < 1e-18);
    }

    #[test]
    fn all_pairs_agree_on_worked_instance() {
        for target in Target::ALL {
            for parameter in Parameter::ALL {
                let r = sensitivity(&worked(), target, parameter, 1e-6).unwrap();
                assert!(r.relative_gap < 1e-5, "{target} wrt {parameter}: {r:?}");
            }
        }
    }
}
