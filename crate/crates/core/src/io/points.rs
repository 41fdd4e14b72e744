use crate::cooperation::ComparisonReport;
use crate::model::{curves, Regime};

use super::push_number;

pub const POINTS_HEADER: &str = "x,MPC,MSC,MSB_noncoop,MSB_coop";

/// Right edge of every plotted range: 10% past the non-cooperative private
/// equilibrium.
pub fn plot_extent(report: &ComparisonReport) -> f64 {
    1.1 * report.noncoop.equilibria.x_private
}

/// Curve values on `samples` evenly spaced points of `[0, plot_extent]`.
/// Panics if `samples < 2`.
pub fn emit_points(report: &ComparisonReport, samples: usize) -> String {
    assert!(samples >= 2, "emit_points needs at least two samples");
    let noncoop = curves(&report.scenario, Regime::NonCooperative);
    let coop = curves(&report.scenario, Regime::Cooperative);
    let extent = plot_extent(report);
    let last = (samples - 1) as f64;

    let mut out = String::with_capacity(64 * (samples + 1));
    out.push_str(POINTS_HEADER);
    out.push('\n');
    for i in 0..samples {
        let x = if i + 1 == samples {
            extent
        } else {
            extent * (i as f64 / last)
        };
        let row = [
            x,
            noncoop.mpc.value(x),
            noncoop.msc.value(x),
            noncoop.msb.value(x),
            coop.msb.value(x),
        ];
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            push_number(&mut out, *v);
        }
        out.push('\n');
    }
    out
}
