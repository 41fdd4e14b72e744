use super::equilibrium::{curves, equilibria};
use super::{ExternalityScenario, Mode, Regime};

/// Pigouvian tax and deadweight loss for one regime under one convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WelfareResult {
    pub regime: Regime,
    pub mode: Mode,
    /// Per-unit tax.
    pub tau: f64,
    /// Deadweight loss.
    pub alpha: f64,
    /// Activity level at which the MSC−MPC gap equals `tau`.
    pub evaluation_x: f64,
}

pub fn welfare(scenario: &ExternalityScenario, regime: Regime, mode: Mode) -> WelfareResult {
    match mode {
        Mode::Paper => welfare_paper(scenario, regime),
        Mode::Standard => welfare_standard(scenario, regime),
    }
}

/// Published closed forms.
///
/// Non-cooperative: `τ = (b−a)·y1/(a+b)`, `α = τ²/(4a)`.
/// Cooperative: `τ = (b−a)·y1/(a+c)`, `α = τ²/(2(b+c))`.
///
/// The non-cooperative tax is the gap at the social optimum `y1/(a+b)`; the
/// cooperative tax is the gap at the private equilibrium `y1/(a+c)`. Both are
/// kept as published and the point used is reported in `evaluation_x`.
pub fn welfare_paper(scenario: &ExternalityScenario, regime: Regime) -> WelfareResult {
    let p = scenario.parameters();
    let (denominator, evaluation_x) = match regime {
        Regime::NonCooperative => (p.a + p.b, p.y1 / (p.a + p.b)),
        Regime::Cooperative => (p.a + p.c, p.y1 / (p.a + p.c)),
    };
    let tau = (p.b - p.a) * p.y1 / denominator;
    let alpha = match regime {
        Regime::NonCooperative => 1.0 / (4.0 * p.a) * (tau * tau),
        Regime::Cooperative => 1.0 / (2.0 * (p.b + p.c)) * (tau * tau),
    };
    WelfareResult {
        regime,
        mode: Mode::Paper,
        tau,
        alpha,
        evaluation_x,
    }
}

/// Textbook definitions: the tax closes the MSC−MPC gap at the social
/// optimum, and the deadweight loss is the triangle between MSC and MSB
/// spanning the social optimum and the private equilibrium.
pub fn welfare_standard(scenario: &ExternalityScenario, regime: Regime) -> WelfareResult {
    let set = curves(scenario, regime);
    let eq = equilibria(scenario, regime);
    let tau = set.msc.gap(&set.mpc, eq.x_social);
    // MSB meets MPC at the private equilibrium, so the triangle's vertical
    // side MSC − MSB equals MSC − MPC there.
    let height = set.msc.gap(&set.mpc, eq.x_private);
    let alpha = 0.5 * (eq.x_private - eq.x_social) * height;
    WelfareResult {
        regime,
        mode: Mode::Standard,
        tau,
        alpha,
        evaluation_x: eq.x_social,
    }
}
