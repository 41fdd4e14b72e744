use super::equilibrium::{curves, equilibria};
use super::{ExternalityScenario, Regime};

/// Composite trapezoid rule for `f` over `[lo, hi]` with `panels` panels.
///
/// Exact (up to rounding) for affine integrands at any panel count.
pub fn trapezoid<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> f64 {
    assert!(panels >= 1, "trapezoid needs at least one panel");
    let n = panels as f64;
    let width = hi - lo;
    let mut interior = 0.0;
    for i in 1..panels {
        interior += f(lo + width * (i as f64 / n));
    }
    width / n * (0.5 * (f(lo) + f(hi)) + interior)
}

/// Deadweight loss as `∫ (MSC − MSB) dx` from the social optimum to the
/// private equilibrium. Panics if `panels` is zero.
pub fn dwl_quadrature(scenario: &ExternalityScenario, regime: Regime, panels: usize) -> f64 {
    let set = curves(scenario, regime);
    let eq = equilibria(scenario, regime);
    trapezoid(
        |x| set.msc.gap(&set.msb, x),
        eq.x_social,
        eq.x_private,
        panels,
    )
}
