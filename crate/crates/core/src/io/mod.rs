//! Scenario files, presets, and the text emitters.
//!
//! All emitters are pure: the same report always renders to the same bytes.

mod number;
mod plot;
mod points;
pub mod presets;
mod results;
mod scenario_file;
mod sweep_out;

pub use number::{format_number, push_number, SIGNIFICANT_DIGITS};
pub use plot::{
    emit_plot, plot_spec, render_svg, CurvePolyline, MarkedPoint, PanelSpec, PlotSpec,
    CANVAS_HEIGHT, CANVAS_WIDTH, MARGIN,
};
pub use points::{emit_points, plot_extent, POINTS_HEADER};
pub use results::{
    load_scenario_echo, scenario_document_from_results, write_results, write_solution,
};
pub use scenario_file::{load_scenario, write_scenario, LoadError, SchemaProblem};
pub use sweep_out::{write_gain_statistics, write_sweep_csv};
