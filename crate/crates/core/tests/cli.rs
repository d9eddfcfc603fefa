use std::path::PathBuf;
use std::process::{Command, Output};

use cubic_dirac::cli::Report;
use cubic_dirac::document::PairDocument;
use cubic_dirac::fixtures;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")].iter().collect();
    path.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-dirac")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let report: Report = serde_json::from_slice(&out.stdout).expect("report parses");
    (report, out.status.code().expect("exit code"))
}

fn check<'a>(report: &'a Report, name: &str) -> &'a cubic_dirac::cli::CheckRecord {
    report.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn validate_exit_codes() {
    let (report, code) = json(&["validate", &fixture("sl2-cartan")]);
    assert_eq!(code, 0);
    assert_eq!(report.results["dim.p"], "2");

    let (report, code) = json(&["validate", &fixture("sl2-broken-jacobi")]);
    assert_eq!(code, 1);
    assert!(check(&report, "lie.jacobi").detail.contains("(h, e, f)"));

    let (report, code) = json(&["validate", &fixture("sl2-isotropic")]);
    assert_eq!(code, 1);
    assert!(check(&report, "pair.valid").detail.contains("degenerate"));
}

#[test]
fn input_errors_exit_with_two() {
    let out = run(&["validate", "/nonexistent/pair.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let dir = std::env::temp_dir().join(format!("cubic-dirac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ \"basis\": [\"h\", ").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));

    let out = run(&["cohomology", &fixture("sl2-cartan"), "--z", "quartic"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cohomology", &fixture("sl2-cartan"), "--module", "V9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dirac_command_prints_exact_expressions() {
    let (report, code) = json(&["dirac", &fixture("sl2-cartan")]);
    assert_eq!(code, 0);
    assert_eq!(report.results["dirac"], "e⊗f + f⊗e");
    assert_eq!(report.results["gamma_p"], "0");
    assert_eq!(report.results["alpha.h"], "2 e∧f");
    assert_eq!(report.results["xi.h"], "h⊗1 + 2 1⊗e∧f");

    let (report, _) = json(&["dirac", &fixture("sl2-full")]);
    assert_eq!(report.results["dirac"], "0");

    let (report, _) = json(&["dirac", &fixture("sl2-point")]);
    assert_ne!(report.results["gamma_p"], "0");
    assert!(report.results["dirac"].contains("1⊗"));
}

#[test]
fn cohomology_command() {
    let (report, code) = json(&["cohomology", &fixture("sl2-cartan")]);
    assert_eq!(code, 0);
    for (name, chi) in [("trivial", "0"), ("V1", "3/2"), ("V2", "4"), ("V3", "15/2"), ("V4", "12")] {
        assert_eq!(report.results[&format!("cohomology.{name}.dim")], "2", "{name}");
        let c = check(&report, &format!("cohomology.{name}.central_character"));
        assert_eq!(c.status, cubic_dirac::cli::Status::Pass);
        assert_eq!(c.witness["chi"], chi);
    }
    assert_eq!(report.results["cohomology.trivial.weights.h"], "(-1, 1)");
    assert_eq!(check(&report, "cohomology.V0+V2.central_character").status, cubic_dirac::cli::Status::Skipped);

    let (report, code) = json(&["cohomology", &fixture("sl2-point"), "--module", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(report.results["cohomology.trivial.dim"], "0");
}

#[test]
fn verify_suites() {
    let (report, code) = json(&["verify", &fixture("sl2-cartan"), "--cap", "3"]);
    assert_eq!(code, 0, "{}", report.to_text());
    assert!(report.checks.len() > 20);

    let (_, code) = json(&["verify", &fixture("sl2-corrupted-form")]);
    assert_eq!(code, 1);

    let (report, code) = json(&["verify", &fixture("sl2xsl2-diagonal"), "--suite", "theorem34"]);
    assert_eq!(code, 0);
    let h = check(&report, "theorem34.casimir.homotopy");
    assert_eq!(h.witness["residual"], "0");
    assert_ne!(h.witness["a_z"], "0");

    let (report, _) = json(&["verify", &fixture("sl2-cartan"), "--suite", "theorem33", "--cap", "2"]);
    assert_eq!(check(&report, "theorem33.kernel_decomposition").status, cubic_dirac::cli::Status::Skipped);
}

#[test]
fn reports_are_deterministic_and_exact() {
    let args = ["verify", &fixture("sl2-cartan"), "--suite", "dirac", "--format", "json"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let value: serde_json::Value = serde_json::from_slice(&a).unwrap();
    fn no_floats(v: &serde_json::Value) -> bool {
        match v {
            serde_json::Value::Number(n) => !n.is_f64(),
            serde_json::Value::Array(xs) => xs.iter().all(no_floats),
            serde_json::Value::Object(m) => m.values().all(no_floats),
            _ => true,
        }
    }
    assert!(no_floats(&value));
    assert!(value.get("timing_ms").is_none());

    let (report, _) = json(&["validate", &fixture("sl2-cartan"), "--timing"]);
    assert!(report.timing_ms.is_some());
}

#[test]
fn output_flag_and_text_format() {
    let dir = std::env::temp_dir().join(format!("cubic-dirac-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = run(&["validate", &fixture("sl2-cartan"), "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("[PASS] lie.jacobi"));
}

#[test]
fn field_override() {
    let (report, code) = json(&["validate", &fixture("sl2-cartan"), "--field", "Qi"]);
    assert_eq!(code, 0);
    assert_eq!(report.settings.field, "Qi");
}

#[test]
fn documents_round_trip() {
    for name in fixtures::NAMES {
        let doc = fixtures::document(name);
        let again = PairDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again, "{name}");
        assert_eq!(doc.to_json(), again.to_json(), "{name}");
    }
}
