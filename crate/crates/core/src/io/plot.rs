//! Two-panel SVG of the marginal curves.
//!
//! The left panel shows the non-cooperative regime and the right panel the
//! cooperative one. Both share the same model-coordinate window so that the
//! steeper cooperative benefit curve is directly comparable.

use std::fmt::Write as _;

use crate::cooperation::ComparisonReport;
use crate::model::{curves, CurveLabel, Point, Regime};

use super::points::plot_extent;

pub const CANVAS_WIDTH: f64 = 800.0;
pub const CANVAS_HEIGHT: f64 = 400.0;
/// Fraction of each panel reserved on every side.
pub const MARGIN: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct CurvePolyline {
    pub label: CurveLabel,
    pub points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarkedPoint {
    pub label: &'static str,
    pub at: Point,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PanelSpec {
    pub regime: Regime,
    pub title: &'static str,
    pub curves: Vec<CurvePolyline>,
    /// Social optimum, MSC ∩ MSB.
    pub optimum: MarkedPoint,
    /// Social optimum, private equilibrium, and MSC at the private equilibrium.
    pub triangle: [Point; 3],
}

/// Everything drawn, in model coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub x_label: String,
    pub y_label: String,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub width: f64,
    pub height: f64,
    pub panels: [PanelSpec; 2],
}

fn panel(report: &ComparisonReport, regime: Regime, extent: f64) -> PanelSpec {
    let set = curves(&report.scenario, regime);
    let eq = report.outcome(regime).equilibria;
    let polyline = |c: crate::model::AffineCurve| CurvePolyline {
        label: c.label,
        points: vec![
            Point {
                x: 0.0,
                y: c.value(0.0),
            },
            Point {
                x: extent,
                y: c.value(extent),
            },
        ],
    };
    let (title, label) = match regime {
        Regime::NonCooperative => ("Non-cooperative", "O\u{2081}"),
        Regime::Cooperative => ("Cooperative", "O\u{2082}"),
    };
    let optimum = Point {
        x: eq.x_social,
        y: set.msc.value(eq.x_social),
    };
    PanelSpec {
        regime,
        title,
        curves: vec![polyline(set.mpc), polyline(set.msc), polyline(set.msb)],
        optimum: MarkedPoint { label, at: optimum },
        triangle: [
            optimum,
            Point {
                x: eq.x_private,
                y: eq.y_private,
            },
            Point {
                x: eq.x_private,
                y: set.msc.value(eq.x_private),
            },
        ],
    }
}

pub fn plot_spec(report: &ComparisonReport) -> PlotSpec {
    let extent = plot_extent(report);
    let noncoop = panel(report, Regime::NonCooperative, extent);
    let coop = panel(report, Regime::Cooperative, extent);
    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    for p in [&noncoop, &coop]
        .iter()
        .flat_map(|panel| panel.curves.iter().flat_map(|c| c.points.iter()))
    {
        lo = lo.min(p.y);
        hi = hi.max(p.y);
    }
    let meta = report.scenario.meta();
    PlotSpec {
        x_label: meta.activity_unit.clone(),
        y_label: format!("{} per {}", meta.currency_unit, meta.activity_unit),
        x_range: (0.0, extent),
        y_range: (lo, hi),
        width: CANVAS_WIDTH,
        height: CANVAS_HEIGHT,
        panels: [noncoop, coop],
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn coord(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

/// Affine map from model coordinates to one panel's canvas box.
struct Frame {
    left: f64,
    top: f64,
    inner_width: f64,
    inner_height: f64,
    x_range: (f64, f64),
    y_range: (f64, f64),
}

impl Frame {
    fn new(spec: &PlotSpec, index: usize) -> Self {
        let panel_width = spec.width / 2.0;
        let (mx, my) = (MARGIN * panel_width, MARGIN * spec.height);
        Self {
            left: index as f64 * panel_width + mx,
            top: my,
            inner_width: panel_width - 2.0 * mx,
            inner_height: spec.height - 2.0 * my,
            x_range: spec.x_range,
            y_range: spec.y_range,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        let sx = self.left + (p.x - x0) / (x1 - x0) * self.inner_width;
        let sy = self.top + self.inner_height - (p.y - y0) / (y1 - y0) * self.inner_height;
        (sx, sy)
    }

    fn points_attr(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{},{}", coord(x), coord(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn stroke_for(label: CurveLabel) -> &'static str {
    match label {
        CurveLabel::Mpc => "#1f77b4",
        CurveLabel::Msc => "#d62728",
        CurveLabel::MsbNonCoop | CurveLabel::MsbCoop => "#2ca02c",
    }
}

pub fn render_svg(spec: &PlotSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    );
    for (index, panel) in spec.panels.iter().enumerate() {
        let frame = Frame::new(spec, index);
        let _ = writeln!(out, r#"  <g id="{}">"#, panel.regime.as_str());
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            coord(frame.left + frame.inner_width / 2.0),
            coord(frame.top / 2.0 + 5.0),
            panel.title
        );
        // axes through the model origin
        let origin = frame.map(Point { x: 0.0, y: 0.0 });
        let right = frame.map(Point {
            x: spec.x_range.1,
            y: 0.0,
        });
        let _ = writeln!(
            out,
            r#"    <line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            coord(origin.0),
            coord(origin.1),
            coord(right.0),
            coord(right.1)
        );
        let _ = writeln!(
            out,
            r#"    <line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            coord(origin.0),
            coord(frame.top),
            coord(origin.0),
            coord(frame.top + frame.inner_height)
        );
        let _ = writeln!(
            out,
            r#"    <text class="x-label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
            coord(frame.left + frame.inner_width / 2.0),
            coord(spec.height - frame.top / 3.0),
            escape(&spec.x_label)
        );
        let _ = writeln!(
            out,
            r#"    <text class="y-label" x="{}" y="{}" text-anchor="start">{}</text>"#,
            coord(frame.left),
            coord(frame.top - 4.0),
            escape(&spec.y_label)
        );
        let _ = writeln!(
            out,
            r##"    <polygon class="deadweight" points="{}" fill="#ff7f0e" fill-opacity="0.4" stroke="none"/>"##,
            frame.points_attr(&panel.triangle)
        );
        for curve in &panel.curves {
            let _ = writeln!(
                out,
                r#"    <polyline class="curve" data-label="{}" points="{}" fill="none" stroke="{}"/>"#,
                curve.label,
                frame.points_attr(&curve.points),
                stroke_for(curve.label)
            );
        }
        let (ox, oy) = frame.map(panel.optimum.at);
        let _ = writeln!(
            out,
            r#"    <circle class="optimum" cx="{}" cy="{}" r="3" fill="black"/>"#,
            coord(ox),
            coord(oy)
        );
        let _ = writeln!(
            out,
            r#"    <text class="optimum-label" x="{}" y="{}">{}</text>"#,
            coord(ox + 5.0),
            coord(oy - 5.0),
            panel.optimum.label
        );
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}

pub fn emit_plot(report: &ComparisonReport) -> String {
    render_svg(&plot_spec(report))
}
