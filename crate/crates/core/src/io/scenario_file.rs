//! Scenario files.
//!
//! A scenario file is a TOML document with a fixed schema:
//!
//! ```toml
//! name = "Urban PM2.5"          # required, nonempty
//! industry = "pollution"        # pollution | agriculture | energy | custom
//! notes = "free text"           # optional
//!
//! [units]                       # required
//! activity = "tonnes PM2.5"
//! currency = "USD"
//!
//! [parameters]                  # required; c optional iff [calibration] present
//! a = 1
//! b = 2
//! c = 3
//! y1 = 12
//!
//! [calibration]                 # optional; derives c = a * energy_before / energy_after
//! energy_before = 6500
//! energy_after = 4200
//! ```
//!
//! Unknown keys, duplicate keys and wrong value types are errors.

use std::fmt;

use thiserror::Error;
use toml::{Table, Value};

use crate::cooperation::{slope_from_efficiency, CooperationError};
use crate::model::{validate, ConstraintViolation, ExternalityScenario, ModelError, ScenarioMeta};

use super::format_number;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{key}`: {problem}")]
    Schema { key: String, problem: SchemaProblem },
    #[error("calibration conflict: `parameters.c` and `[calibration]` are mutually exclusive")]
    CalibrationConflict,
    #[error(transparent)]
    Calibration(#[from] CooperationError),
    #[error(transparent)]
    Constraint(#[from] ConstraintViolation),
    #[error("schema error at `{0}`: must be nonempty")]
    EmptyField(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaProblem {
    Missing,
    Unknown,
    Duplicate,
    WrongType { expected: &'static str },
    NotFinite,
    BadValue(String),
}

impl fmt::Display for SchemaProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaProblem::Missing => f.write_str("missing required key"),
            SchemaProblem::Unknown => f.write_str("unknown key"),
            SchemaProblem::Duplicate => f.write_str("duplicate key"),
            SchemaProblem::WrongType { expected } => write!(f, "expected {expected}"),
            SchemaProblem::NotFinite => f.write_str("number must be finite"),
            SchemaProblem::BadValue(msg) => f.write_str(msg),
        }
    }
}

fn schema(key: impl Into<String>, problem: SchemaProblem) -> LoadError {
    LoadError::Schema {
        key: key.into(),
        problem,
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_table(document: &str) -> Result<Table, LoadError> {
    document.parse::<Table>().map_err(|err| {
        let (line, column) = err
            .span()
            .map_or((1, 1), |span| line_column(document, span.start));
        if err.message().starts_with("duplicate key") {
            // The span points at the repeated key itself.
            let key = err
                .span()
                .and_then(|span| document.get(span))
                .map(|k| k.trim().to_owned())
                .filter(|k| !k.is_empty())
                .unwrap_or_else(|| format!("line {line}"));
            schema(key, SchemaProblem::Duplicate)
        } else {
            LoadError::Parse {
                line,
                column,
                message: err.message().to_owned(),
            }
        }
    })
}

/// Strict view over one TOML table. Keys outside `allowed` are rejected up
/// front, so a misspelt key is reported as unknown rather than as a missing
/// required key.
struct Fields<'a> {
    prefix: &'a str,
    table: Table,
}

impl<'a> Fields<'a> {
    fn new(prefix: &'a str, table: Table, allowed: &[&str]) -> Result<Self, LoadError> {
        let fields = Self { prefix, table };
        if let Some(key) = fields
            .table
            .keys()
            .filter(|k| !allowed.contains(&k.as_str()))
            .min()
        {
            return Err(schema(fields.path(key), SchemaProblem::Unknown));
        }
        Ok(fields)
    }

    fn path(&self, key: &str) -> String {
        if self.prefix.is_empty() {
            key.to_owned()
        } else {
            format!("{}.{key}", self.prefix)
        }
    }

    fn take(&mut self, key: &str) -> Option<Value> {
        self.table.remove(key)
    }

    fn string(&mut self, key: &str) -> Result<Option<String>, LoadError> {
        match self.take(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(schema(
                self.path(key),
                SchemaProblem::WrongType {
                    expected: "a string",
                },
            )),
        }
    }

    fn required_string(&mut self, key: &str) -> Result<String, LoadError> {
        self.string(key)?
            .ok_or_else(|| schema(self.path(key), SchemaProblem::Missing))
    }

    fn number(&mut self, key: &str) -> Result<Option<f64>, LoadError> {
        let value = match self.take(key) {
            None => return Ok(None),
            Some(Value::Integer(i)) => i as f64,
            Some(Value::Float(f)) => f,
            Some(_) => {
                return Err(schema(
                    self.path(key),
                    SchemaProblem::WrongType {
                        expected: "a number",
                    },
                ))
            }
        };
        if value.is_finite() {
            Ok(Some(value))
        } else {
            Err(schema(self.path(key), SchemaProblem::NotFinite))
        }
    }

    fn required_number(&mut self, key: &str) -> Result<f64, LoadError> {
        self.number(key)?
            .ok_or_else(|| schema(self.path(key), SchemaProblem::Missing))
    }

    fn table(&mut self, key: &str) -> Result<Option<Table>, LoadError> {
        match self.take(key) {
            None => Ok(None),
            Some(Value::Table(t)) => Ok(Some(t)),
            Some(_) => Err(schema(
                self.path(key),
                SchemaProblem::WrongType {
                    expected: "a table",
                },
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct RawScenario {
    meta: ScenarioMeta,
    a: f64,
    b: f64,
    c: Option<f64>,
    y1: f64,
    calibration: Option<(f64, f64)>,
}

fn read_raw(document: &str) -> Result<RawScenario, LoadError> {
    let mut root = Fields::new(
        "",
        parse_table(document)?,
        &[
            "name",
            "industry",
            "notes",
            "units",
            "parameters",
            "calibration",
        ],
    )?;

    let name = root.required_string("name")?;
    let industry_key = root.required_string("industry")?;
    let industry = industry_key
        .parse()
        .map_err(|msg| schema("industry", SchemaProblem::BadValue(msg)))?;
    let notes = root.string("notes")?.unwrap_or_default();

    let units = root
        .table("units")?
        .ok_or_else(|| schema("units", SchemaProblem::Missing))?;
    let mut units = Fields::new("units", units, &["activity", "currency"])?;
    let activity_unit = units.required_string("activity")?;
    let currency_unit = units.required_string("currency")?;

    let parameters = root
        .table("parameters")?
        .ok_or_else(|| schema("parameters", SchemaProblem::Missing))?;
    let mut parameters = Fields::new("parameters", parameters, &["a", "b", "c", "y1"])?;
    let a = parameters.required_number("a")?;
    let b = parameters.required_number("b")?;
    let c = parameters.number("c")?;
    let y1 = parameters.required_number("y1")?;

    let calibration = match root.table("calibration")? {
        None => None,
        Some(table) => {
            let mut cal = Fields::new("calibration", table, &["energy_before", "energy_after"])?;
            let before = cal.required_number("energy_before")?;
            let after = cal.required_number("energy_after")?;
            Some((before, after))
        }
    };

    Ok(RawScenario {
        meta: ScenarioMeta {
            name,
            industry,
            activity_unit,
            currency_unit,
            notes,
        },
        a,
        b,
        c,
        y1,
        calibration,
    })
}

/// Parse, resolve calibration, and validate a scenario document.
pub fn load_scenario(document: &str) -> Result<ExternalityScenario, LoadError> {
    let raw = read_raw(document)?;
    let c = match (raw.c, raw.calibration) {
        (Some(_), Some(_)) => return Err(LoadError::CalibrationConflict),
        (None, None) => return Err(schema("parameters.c", SchemaProblem::Missing)),
        (Some(c), None) => c,
        (None, Some((before, after))) => slope_from_efficiency(raw.a, before, after)?,
    };
    validate(raw.a, raw.b, c, raw.y1, raw.meta).map_err(|err| match err {
        ModelError::Constraint(v) => LoadError::Constraint(v),
        ModelError::EmptyMeta("name") => LoadError::EmptyField("name"),
        ModelError::EmptyMeta("activity_unit") => LoadError::EmptyField("units.activity"),
        ModelError::EmptyMeta(_) => LoadError::EmptyField("units.currency"),
        ModelError::ParallelCurves { .. } => unreachable!("validate never intersects curves"),
    })
}

pub(crate) fn toml_string(s: &str) -> String {
    Value::String(s.to_owned()).to_string()
}

/// Canonical scenario document. Calibrated scenarios are written with their
/// derived `c`; numbers use 12 significant digits.
pub fn write_scenario(scenario: &ExternalityScenario) -> String {
    let meta = scenario.meta();
    let mut out = String::new();
    out.push_str(&format!("name = {}\n", toml_string(&meta.name)));
    out.push_str(&format!(
        "industry = {}\n",
        toml_string(meta.industry.as_str())
    ));
    if !meta.notes.is_empty() {
        out.push_str(&format!("notes = {}\n", toml_string(&meta.notes)));
    }
    out.push_str("\n[units]\n");
    out.push_str(&format!(
        "activity = {}\n",
        toml_string(&meta.activity_unit)
    ));
    out.push_str(&format!(
        "currency = {}\n",
        toml_string(&meta.currency_unit)
    ));
    out.push_str("\n[parameters]\n");
    for (key, value) in [
        ("a", scenario.a()),
        ("b", scenario.b()),
        ("c", scenario.c()),
        ("y1", scenario.y1()),
    ] {
        out.push_str(&format!("{key} = {}\n", format_number(value)));
    }
    out
}
