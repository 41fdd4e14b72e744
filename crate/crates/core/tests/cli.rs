use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use externality::cli::{EXIT_CONSTRAINT, EXIT_IO, EXIT_OK, EXIT_USAGE};
use externality::io::presets;

fn preset(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../presets")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_externality"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

struct Files {
    dir: tempfile::TempDir,
}

impl Files {
    fn new() -> Self {
        Self {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path = self.dir.path().join(name);
        fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

#[test]
fn compare_worked_preset() {
    let out = run(&[
        "compare",
        &preset("pollution_worked.scn"),
        "--mode",
        "paper",
    ]);
    assert_eq!(code(&out), EXIT_OK);
    assert!(out.stderr.is_empty());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["noncooperative"]["tau"], 4);
    assert_eq!(v["cooperative"]["tau"], 3);
    assert_eq!(v["mode"], "paper");
}

#[test]
fn default_mode_is_paper() {
    let explicit = run(&[
        "compare",
        &preset("pollution_worked.scn"),
        "--mode",
        "paper",
    ]);
    let default = run(&["compare", &preset("pollution_worked.scn")]);
    assert_eq!(explicit.stdout, default.stdout);
    let standard = run(&[
        "compare",
        &preset("pollution_worked.scn"),
        "--mode",
        "standard",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&standard)).unwrap();
    assert_eq!(v["noncooperative"]["alpha"], 6);
}

#[test]
fn missing_file_names_path() {
    let out = run(&["solve", "missing.scn"]);
    assert_eq!(code(&out), EXIT_IO);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.scn"));
}

#[test]
fn unknown_sweep_parameter_lists_valid_ones() {
    let out = run(&[
        "sweep",
        &preset("pollution_worked.scn"),
        "--param",
        "q",
        "--from",
        "1",
        "--to",
        "2",
        "--steps",
        "5",
    ]);
    assert_eq!(code(&out), EXIT_USAGE);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a, b, c, y1"), "{err}");
}

#[test]
fn sweep_flags_checked_before_reading_file() {
    // the file does not exist; flag errors still win
    for args in [
        vec![
            "sweep", "nope.scn", "--param", "c", "--from", "5", "--to", "1", "--steps", "5",
        ],
        vec![
            "sweep", "nope.scn", "--param", "c", "--from", "1", "--to", "5", "--steps", "1",
        ],
        vec![
            "sweep", "nope.scn", "--param", "c", "--from", "1", "--to", "5",
        ],
        vec!["sweep", "nope.scn"],
        vec!["sweep", "nope.scn", "--samples", "0"],
        vec!["sweep", "nope.scn", "--samples", "10", "--spread", "1.5"],
        vec![
            "sweep",
            "nope.scn",
            "--param",
            "c",
            "--from",
            "1",
            "--to",
            "5",
            "--steps",
            "3",
            "--samples",
            "4",
        ],
    ] {
        assert_eq!(code(&run(&args)), EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn sweep_grid_csv() {
    let out = run(&[
        "sweep",
        &preset("pollution_worked.scn"),
        "--param",
        "c",
        "--from",
        "2.5",
        "--to",
        "5",
        "--steps",
        "6",
    ]);
    assert_eq!(code(&out), EXIT_OK);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[2], "3,4,3,4,0.9,4,2.4,ok");
    let tau2: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert!(tau2.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn sweep_skips_invalid_points() {
    let out = run(&[
        "sweep",
        &preset("pollution_worked.scn"),
        "--param",
        "b",
        "--from",
        "0.5",
        "--to",
        "1",
        "--steps",
        "3",
    ]);
    assert_eq!(code(&out), EXIT_OK);
    assert_eq!(stdout(&out).matches("skipped: b <= a").count(), 3);
}

#[test]
fn monte_carlo_sweep_deterministic_by_seed() {
    let args = [
        "sweep",
        &preset("energy.scn"),
        "--samples",
        "300",
        "--seed",
        "9",
        "--spread",
        "0.2",
    ];
    let (x, y) = (run(&args), run(&args));
    assert_eq!(code(&x), EXIT_OK);
    assert_eq!(x.stdout, y.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&x)).unwrap();
    assert_eq!(v["scenarios"], 300);
    assert_eq!(v["verdicts_held"], 300);
    let other = run(&[
        "sweep",
        &preset("energy.scn"),
        "--samples",
        "300",
        "--seed",
        "10",
        "--spread",
        "0.2",
    ]);
    assert_ne!(other.stdout, x.stdout);
}

#[test]
fn solve_single_regime() {
    let out = run(&[
        "solve",
        &preset("pollution_worked.scn"),
        "--regime",
        "cooperative",
    ]);
    assert_eq!(code(&out), EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.get("noncooperative").is_none());
    assert_eq!(v["cooperative"]["x_private"], 3);
    assert_eq!(v["cooperative"]["x_social"], 2.4);
}

#[test]
fn out_flag_writes_file_and_keeps_stdout_empty() {
    let files = Files::new();
    let target = files.path("results.json");
    let out = run(&[
        "compare",
        &preset("agriculture.scn"),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), EXIT_OK);
    assert!(out.stdout.is_empty());
    let direct = run(&["compare", &preset("agriculture.scn")]);
    assert_eq!(fs::read(&target).unwrap(), direct.stdout);
}

#[test]
fn unwritable_output_is_io_error() {
    let out = run(&[
        "compare",
        &preset("agriculture.scn"),
        "--out",
        "/nonexistent-dir/x.json",
    ]);
    assert_eq!(code(&out), EXIT_IO);
}

#[test]
fn plot_outputs() {
    let files = Files::new();
    let svg = files.path("p.svg");
    let csv = files.path("p.csv");
    let out = run(&[
        "plot",
        &preset("pollution_worked.scn"),
        "--svg-out",
        svg.to_str().unwrap(),
        "--csv-out",
        csv.to_str().unwrap(),
        "--samples",
        "2",
    ]);
    assert_eq!(code(&out), EXIT_OK);
    assert!(out.stdout.is_empty());
    let svg_text = fs::read_to_string(&svg).unwrap();
    roxmltree::Document::parse(&svg_text).unwrap();
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "x,MPC,MSC,MSB_noncoop,MSB_coop\n0,0,0,12,12\n6.6,6.6,13.2,5.4,-7.8\n"
    );
    let to_stdout = run(&["plot", &preset("pollution_worked.scn")]);
    assert_eq!(to_stdout.stdout, svg_text.as_bytes());
}

#[test]
fn recommendation_text() {
    let out = run(&["compare", &preset("pollution_worked.scn"), "--recommend"]);
    assert_eq!(code(&out), EXIT_OK);
    let text = stdout(&out);
    assert!(text.contains("residual Pigouvian tax of 3 "));
    assert!(text.contains("avoiding 3.1 "));
    let agri = stdout(&run(&[
        "compare",
        &preset("agriculture.scn"),
        "--recommend",
    ]));
    assert!(agri.contains("water-purification"));
}

#[test]
fn validate_prints_canonical_scenario() {
    let out = run(&["validate", &preset("pollution.scn")]);
    assert_eq!(code(&out), EXIT_OK);
    let text = stdout(&out);
    assert!(text.contains("c = 1.54761904762"));
    assert!(!text.contains("calibration"));
    externality::io::load_scenario(&text).unwrap();
}

#[test]
fn schema_and_constraint_errors() {
    let files = Files::new();
    let conflict = files.write(
        "conflict.scn",
        &(presets::POLLUTION_WORKED.to_owned()
            + "\n[calibration]\nenergy_before = 10\nenergy_after = 5\n"),
    );
    let out = run(&["validate", &conflict]);
    assert_eq!(code(&out), EXIT_IO);
    assert!(String::from_utf8_lossy(&out.stderr).contains("calibration conflict"));

    let typo = files.write(
        "typo.scn",
        &presets::POLLUTION_WORKED.replace("y1 = 12", "y2 = 12"),
    );
    let out = run(&["validate", &typo]);
    assert_eq!(code(&out), EXIT_IO);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parameters.y2"));

    let syntax = files.write("syntax.scn", "name = \n");
    let out = run(&["validate", &syntax]);
    assert_eq!(code(&out), EXIT_IO);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    // the published Btu pair with b = 2 fails c > b
    let strict = files.write(
        "strict.scn",
        &presets::POLLUTION.replace("b = 1.2", "b = 2"),
    );
    let out = run(&["validate", &strict]);
    assert_eq!(code(&out), EXIT_CONSTRAINT);
    assert!(String::from_utf8_lossy(&out.stderr).contains("c <= b"));

    let reversed = files.write(
        "reversed.scn",
        &presets::POLLUTION
            .replace("energy_before = 6500", "energy_before = 4200")
            .replace("energy_after = 4200", "energy_after = 6500"),
    );
    assert_eq!(code(&run(&["validate", &reversed])), EXIT_CONSTRAINT);
}

#[test]
fn help_and_version_go_to_stdout() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), EXIT_OK);
    let text = stdout(&out);
    for sub in ["solve", "compare", "sweep", "plot", "validate"] {
        assert!(text.contains(sub));
    }
    let sweep_help = stdout(&run(&["sweep", "--help"]));
    for flag in [
        "--param",
        "--from",
        "--to",
        "--steps",
        "--seed",
        "--samples",
        "--mode",
        "--out",
    ] {
        assert!(sweep_help.contains(flag), "{flag}");
    }
    let plot_help = stdout(&run(&["plot", "--help"]));
    for flag in ["--svg-out", "--csv-out", "--samples"] {
        assert!(plot_help.contains(flag), "{flag}");
    }
    assert_eq!(code(&run(&["--version"])), EXIT_OK);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&[])), EXIT_USAGE);
    assert_eq!(code(&run(&["frobnicate"])), EXIT_USAGE);
    assert_eq!(code(&run(&["solve"])), EXIT_USAGE);
    assert_eq!(code(&run(&["plot", "x.scn", "--samples", "1"])), EXIT_USAGE);
}

#[test]
fn every_subcommand_is_deterministic() {
    let worked = preset("pollution_worked.scn");
    for args in [
        vec!["solve", worked.as_str()],
        vec!["compare", worked.as_str(), "--mode", "standard"],
        vec![
            "sweep",
            worked.as_str(),
            "--param",
            "y1",
            "--from",
            "1",
            "--to",
            "30",
            "--steps",
            "50",
        ],
        vec!["plot", worked.as_str()],
        vec!["validate", worked.as_str()],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn in_process_run_matches_binary() {
    let worked = preset("pollution_worked.scn");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = externality::cli::run(
        ["externality", "compare", worked.as_str()],
        &mut out,
        &mut err,
    );
    assert_eq!(code, EXIT_OK);
    assert!(err.is_empty());
    assert_eq!(out, run(&["compare", &worked]).stdout);
}
