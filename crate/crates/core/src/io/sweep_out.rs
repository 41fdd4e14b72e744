use crate::sweep::{GainStatistics, Summary, SweepSeries};

use super::{format_number, push_number};

/// One row per grid point: `<param>,tau1,tau2,alpha1,alpha2,x_social1,x_social2,status`.
/// Skipped points leave the numeric columns empty and name the violated
/// constraint in `status`.
pub fn write_sweep_csv(series: &SweepSeries) -> String {
    let mut out = String::with_capacity(96 * (series.grid.len() + 1));
    out.push_str(series.parameter.as_str());
    out.push_str(",tau1,tau2,alpha1,alpha2,x_social1,x_social2,status\n");
    for (value, row) in series.rows() {
        push_number(&mut out, value);
        match row {
            Ok(s) => {
                for v in [s.tau1, s.tau2, s.alpha1, s.alpha2, s.x_social1, s.x_social2] {
                    out.push(',');
                    push_number(&mut out, v);
                }
                out.push_str(",ok\n");
            }
            Err(v) => {
                out.push_str(",,,,,,,skipped: ");
                out.push_str(v.constraint.failure());
                out.push('\n');
            }
        }
    }
    out
}

fn summary_block(out: &mut String, key: &str, s: &Summary, last: bool) {
    out.push_str(&format!(
        "  \"{key}\": {{\"count\": {}, \"mean\": {}, \"std_dev\": {}, \"min\": {}, \"max\": {}}}{}\n",
        s.count,
        format_number(s.mean),
        format_number(s.std_dev),
        format_number(s.min),
        format_number(s.max),
        if last { "" } else { "," }
    ));
}

/// JSON summary of a Monte Carlo run. Requires a nonempty sample.
pub fn write_gain_statistics(stats: &GainStatistics, seed: u64) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"mode\": \"{}\",\n", stats.mode));
    out.push_str(&format!("  \"seed\": {seed},\n"));
    out.push_str(&format!("  \"scenarios\": {},\n", stats.scenarios));
    out.push_str(&format!("  \"verdicts_held\": {},\n", stats.verdicts_held));
    summary_block(&mut out, "delta_tau", &stats.delta_tau, false);
    summary_block(&mut out, "delta_alpha", &stats.delta_alpha, false);
    summary_block(&mut out, "delta_x_social", &stats.delta_x_social, false);
    summary_block(&mut out, "tau_reduction", &stats.tau_reduction, false);
    summary_block(&mut out, "alpha_reduction", &stats.alpha_reduction, true);
    out.push_str("}\n");
    out
}
