//! Results documents.
//!
//! `write_results` renders a [`ComparisonReport`] as JSON with this fixed
//! key order:
//!
//! ```text
//! scenario      { name, industry, units { activity, currency },
//!                 parameters { a, b, c, y1 }, notes }
//! mode
//! noncooperative{ x_private, x_social, y_private, y_social,
//!                 tau, alpha, evaluation_x }
//! cooperative   { same keys }
//! deltas        { tau, alpha, x_social }
//! verdicts      { tau_reduced, alpha_reduced, equilibrium_lowered }
//! ```
//!
//! Two-space indentation, numbers at 12 significant digits, trailing newline.

use serde_json::Value;

use crate::cooperation::{ComparisonReport, RegimeOutcome};
use crate::model::{ExternalityScenario, Mode, Regime};

use super::format_number;
use super::scenario_file::{load_scenario, toml_string, LoadError, SchemaProblem};

enum Json<'a> {
    Num(f64),
    Str(&'a str),
    Bool(bool),
    Obj(Vec<(&'static str, Json<'a>)>),
}

impl Json<'_> {
    fn render(&self, indent: usize, out: &mut String) {
        match self {
            Json::Num(v) => out.push_str(&format_number(*v)),
            Json::Str(s) => out.push_str(&serde_json::to_string(s).expect("string serializes")),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    out.push_str(if i == 0 { "\n" } else { ",\n" });
                    out.push_str(&"  ".repeat(indent + 1));
                    out.push('"');
                    out.push_str(key);
                    out.push_str("\": ");
                    value.render(indent + 1, out);
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }
}

fn scenario_echo(scenario: &ExternalityScenario) -> Json<'_> {
    let meta = scenario.meta();
    Json::Obj(vec![
        ("name", Json::Str(&meta.name)),
        ("industry", Json::Str(meta.industry.as_str())),
        (
            "units",
            Json::Obj(vec![
                ("activity", Json::Str(&meta.activity_unit)),
                ("currency", Json::Str(&meta.currency_unit)),
            ]),
        ),
        (
            "parameters",
            Json::Obj(vec![
                ("a", Json::Num(scenario.a())),
                ("b", Json::Num(scenario.b())),
                ("c", Json::Num(scenario.c())),
                ("y1", Json::Num(scenario.y1())),
            ]),
        ),
        ("notes", Json::Str(&meta.notes)),
    ])
}

fn regime_block(outcome: &RegimeOutcome) -> Json<'static> {
    let (e, w) = (outcome.equilibria, outcome.welfare);
    Json::Obj(vec![
        ("x_private", Json::Num(e.x_private)),
        ("x_social", Json::Num(e.x_social)),
        ("y_private", Json::Num(e.y_private)),
        ("y_social", Json::Num(e.y_social)),
        ("tau", Json::Num(w.tau)),
        ("alpha", Json::Num(w.alpha)),
        ("evaluation_x", Json::Num(w.evaluation_x)),
    ])
}

fn finish(doc: Json<'_>) -> String {
    let mut out = String::new();
    doc.render(0, &mut out);
    out.push('\n');
    out
}

pub fn write_results(report: &ComparisonReport) -> String {
    let v = report.verdicts;
    finish(Json::Obj(vec![
        ("scenario", scenario_echo(&report.scenario)),
        ("mode", Json::Str(report.mode.as_str())),
        ("noncooperative", regime_block(&report.noncoop)),
        ("cooperative", regime_block(&report.coop)),
        (
            "deltas",
            Json::Obj(vec![
                ("tau", Json::Num(report.delta_tau)),
                ("alpha", Json::Num(report.delta_alpha)),
                ("x_social", Json::Num(report.delta_x_social)),
            ]),
        ),
        (
            "verdicts",
            Json::Obj(vec![
                ("tau_reduced", Json::Bool(v.tau_reduced)),
                ("alpha_reduced", Json::Bool(v.alpha_reduced)),
                ("equilibrium_lowered", Json::Bool(v.equilibrium_lowered)),
            ]),
        ),
    ]))
}

/// Single-regime (or both-regime) solution: `scenario`, `mode`, then one
/// block per requested regime in the same layout as [`write_results`].
pub fn write_solution(scenario: &ExternalityScenario, mode: Mode, regimes: &[Regime]) -> String {
    let mut fields = vec![
        ("scenario", scenario_echo(scenario)),
        ("mode", Json::Str(mode.as_str())),
    ];
    for &regime in regimes {
        fields.push((
            regime.as_str(),
            regime_block(&RegimeOutcome::evaluate(scenario, regime, mode)),
        ));
    }
    finish(Json::Obj(fields))
}

fn echo_error(key: &str, problem: SchemaProblem) -> LoadError {
    LoadError::Schema {
        key: format!("scenario.{key}"),
        problem,
    }
}

/// Rebuild a scenario document from the `scenario` echo of a results
/// document. Number tokens are copied verbatim.
pub fn scenario_document_from_results(results: &str) -> Result<String, LoadError> {
    let root: Value = serde_json::from_str(results).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let echo = root.get("scenario").ok_or_else(|| LoadError::Schema {
        key: "scenario".into(),
        problem: SchemaProblem::Missing,
    })?;
    let text = |path: &[&str]| -> Result<String, LoadError> {
        let mut v = echo;
        for p in path {
            v = v
                .get(p)
                .ok_or_else(|| echo_error(&path.join("."), SchemaProblem::Missing))?;
        }
        v.as_str().map(str::to_owned).ok_or_else(|| {
            echo_error(
                &path.join("."),
                SchemaProblem::WrongType {
                    expected: "a string",
                },
            )
        })
    };
    let number = |key: &str| -> Result<String, LoadError> {
        let path = format!("parameters.{key}");
        match echo.get("parameters").and_then(|p| p.get(key)) {
            Some(Value::Number(n)) => Ok(n.to_string()),
            Some(_) => Err(echo_error(
                &path,
                SchemaProblem::WrongType {
                    expected: "a number",
                },
            )),
            None => Err(echo_error(&path, SchemaProblem::Missing)),
        }
    };

    let mut out = String::new();
    out.push_str(&format!("name = {}\n", toml_string(&text(&["name"])?)));
    out.push_str(&format!(
        "industry = {}\n",
        toml_string(&text(&["industry"])?)
    ));
    let notes = text(&["notes"])?;
    if !notes.is_empty() {
        out.push_str(&format!("notes = {}\n", toml_string(&notes)));
    }
    out.push_str("\n[units]\n");
    out.push_str(&format!(
        "activity = {}\n",
        toml_string(&text(&["units", "activity"])?)
    ));
    out.push_str(&format!(
        "currency = {}\n",
        toml_string(&text(&["units", "currency"])?)
    ));
    out.push_str("\n[parameters]\n");
    for key in ["a", "b", "c", "y1"] {
        out.push_str(&format!("{key} = {}\n", number(key)?));
    }
    Ok(out)
}

/// [`scenario_document_from_results`] followed by [`load_scenario`].
pub fn load_scenario_echo(results: &str) -> Result<ExternalityScenario, LoadError> {
    load_scenario(&scenario_document_from_results(results)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooperation::compare;
    use crate::io::{load_scenario, write_scenario};
    use crate::model::{validate, Industry, ScenarioMeta};

    fn worked() -> ExternalityScenario {
        let meta = ScenarioMeta {
            name: "worked \"quoted\"".into(),
            industry: Industry::Pollution,
            activity_unit: "tonnes PM2.5".into(),
            currency_unit: "USD".into(),
            notes: "illustrative".into(),
        };
        validate(1.0, 2.0, 3.0, 12.0, meta).unwrap()
    }

    #[test]
    fn worked_results_document() {
        let doc = write_results(&compare(&worked(), Mode::Paper));
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["noncooperative"]["tau"], 4);
        assert_eq!(v["cooperative"]["tau"], 3);
        assert_eq!(v["cooperative"]["alpha"].as_f64(), Some(0.9));
        assert_eq!(v["deltas"]["alpha"].as_f64(), Some(3.1));
        assert_eq!(v["verdicts"]["alpha_reduced"], true);
        assert_eq!(v["mode"], "paper");
        assert!(doc.ends_with("}\n"));
    }

    #[test]
    fn key_order_is_fixed() {
        let doc = write_results(&compare(&worked(), Mode::Standard));
        let order = [
            "\"scenario\"",
            "\"mode\"",
            "\"noncooperative\"",
            "\"cooperative\"",
            "\"deltas\"",
            "\"verdicts\"",
        ];
        let positions: Vec<usize> = order.iter().map(|k| doc.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn byte_identical_across_calls() {
        let r = compare(&worked(), Mode::Paper);
        assert_eq!(write_results(&r), write_results(&r));
    }

    #[test]
    fn echo_round_trip() {
        let s = worked();
        let doc = write_results(&compare(&s, Mode::Paper));
        let back = load_scenario_echo(&doc).unwrap();
        assert_eq!(back, s);
        assert_eq!(
            scenario_document_from_results(&doc).unwrap(),
            write_scenario(&s)
        );
        assert_eq!(load_scenario(&write_scenario(&s)).unwrap(), s);
    }

    #[test]
    fn solution_lists_requested_regimes() {
        let doc = write_solution(&worked(), Mode::Paper, &[Regime::Cooperative]);
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert!(v.get("noncooperative").is_none());
        assert_eq!(v["cooperative"]["x_private"], 3);
    }

    #[test]
    fn echo_from_garbage() {
        assert!(matches!(
            scenario_document_from_results("{"),
            Err(LoadError::Parse { .. })
        ));
        assert!(matches!(
            scenario_document_from_results("{}"),
            Err(LoadError::Schema { .. })
        ));
    }
}
