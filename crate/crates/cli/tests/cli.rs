//! End-to-end tests of the binary: subcommand behavior, exit codes, file
//! round-trips, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn comvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("comvar-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn ideal_build_emits_the_file_format() {
    let out = comvar(&["ideal", "build", "sl2-nilcomm:r=2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("ring x1 y1 z1 x2 y2 z2\n"));
    assert!(text.contains("field p=32003"));
    assert!(text.contains("order grevlex"));
    assert!(text.contains("gens:"));
    assert!(text.contains("x1^2 + y1*z1"));
}

#[test]
fn ideal_file_roundtrips_through_gb_and_dim() {
    let path = temp_path("nilcomm2.ideal");
    let out = comvar(&[
        "ideal",
        "build",
        "sl2-nilcomm:r=2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let gb = comvar(&["gb", "--in", path.to_str().unwrap(), "--stats"]);
    assert!(gb.status.success());
    let text = stdout(&gb);
    assert!(text.lines().count() >= 6, "{text}");
    assert!(text.lines().last().unwrap().starts_with("# pairs="));

    let dim = comvar(&["dim", "--in", path.to_str().unwrap()]);
    assert!(dim.status.success());
    assert_eq!(stdout(&dim).trim(), "3");
}

#[test]
fn dim_by_id_matches_expected_values() {
    let out = comvar(&["dim", "--id", "sl2-nilcomm:r=3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");

    let out = comvar(&["dim", "--id", "sl3-u-comm:r=2", "--field", "q"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5");
}

#[test]
fn membership_queries_answer_without_failing() {
    let args_base = ["--id", "sl2-nilcomm:r=2"];
    let member = comvar(&[&["member", "--poly", "x1*x2 + y1*z2"], &args_base[..]].concat());
    assert!(member.status.success());
    assert_eq!(stdout(&member).trim(), "false");

    let radical = comvar(
        &[
            &["radical-member", "--poly", "x1*x2 + y1*z2"],
            &args_base[..],
        ]
        .concat(),
    );
    assert!(radical.status.success());
    assert_eq!(stdout(&radical).trim(), "true");
}

#[test]
fn hilbert_reports_the_cone_series() {
    let out = comvar(&["hilbert", "--id", "sl2-nilcomm:r=1", "-N", "5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["denominator_power"], 2);
    assert_eq!(v["coefficients"], serde_json::json!([1, 3, 5, 7, 9]));
}

#[test]
fn usage_errors_exit_two() {
    let out = comvar(&["dim"]);
    assert_eq!(out.status.code(), Some(2), "missing source must be usage error");
    let out = comvar(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = comvar(&["gb", "--id", "sl2-nilcomm:r=2", "--budget-pairs", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn characteristic_two_file_parses_but_builder_rejects() {
    // the io layer accepts characteristic 2
    let path = temp_path("chartwo.ideal");
    std::fs::write(&path, "ring x y\nfield p=2\norder grevlex\ngens:\nx*y + y^2\n").unwrap();
    let out = comvar(&["dim", "--in", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
    // the builder does not
    let out = comvar(&["ideal", "build", "sl2-comm:r=2", "--field", "p=2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic"));
}

#[test]
fn oracle_outputs_are_seed_deterministic() {
    let args = [
        "oracle", "sample", "--id", "sl2-nilcomm:r=2", "--count", "3", "--seed", "7",
    ];
    let a = comvar(&args);
    let b = comvar(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let rows: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);

    let dim = comvar(&["oracle", "dim", "--id", "sl3-nilcomm:r=1", "--seed", "5"]);
    assert!(dim.status.success());
    assert_eq!(stdout(&dim).trim(), "6");

    let hf = comvar(&[
        "oracle", "hf", "--id", "sl2-nilcomm:r=1", "--degree", "2", "--seed", "5",
    ]);
    assert!(hf.status.success());
    assert_eq!(stdout(&hf).trim(), "5");
}

#[test]
fn charseries_table_and_json() {
    let out = comvar(&["charseries", "-r", "2", "-N", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree"));
    // degree 2: three copies of the five-dimensional string
    assert!(text.lines().any(|l| l.trim_start().starts_with('2') && l.contains("15")));

    let out = comvar(&["charseries", "-r", "1", "-N", "1", "--json"]);
    let rows: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rows[1]["dim"], 3);
    assert_eq!(rows[1]["weights"]["0"], 1);
}

#[test]
fn verify_run_reports_and_exit_codes() {
    let out = comvar(&["verify", "run", "nonradical.witness", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["provenance"], "paper");

    // a characteristic the builders refuse surfaces as an error status
    let out = comvar(&["verify", "run", "dim.sl2comm", "--field", "p=2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = comvar(&["verify", "run", "no.such.scenario"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suite_filter_and_empty_match() {
    let out = comvar(&["verify", "suite", "--filter", "cut.*"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 3, "{text}");

    let out = comvar(&["verify", "suite", "--filter", "zzz*"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("matches no scenario"));
}

#[test]
fn suite_reports_are_byte_identical_modulo_time_fields() {
    let args = [
        "verify", "suite", "--filter", "cut.*", "--json", "--seed", "11",
    ];
    let a = comvar(&args);
    let b = comvar(&args);
    assert!(a.status.success() && b.status.success());
    let strip = |raw: &str| -> String {
        let mut v: serde_json::Value = serde_json::from_str(raw.trim()).unwrap();
        v["generated_at_ms"] = serde_json::json!(0);
        for report in v["reports"].as_array_mut().unwrap() {
            report["runtime_ms"] = serde_json::json!(0);
        }
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&stdout(&a)), strip(&stdout(&b)));
}

#[test]
fn verify_audit_covers_every_claim() {
    let out = comvar(&["verify", "audit"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all claims are covered"));
    for key in [
        "dims.groebner",
        "nonradicality.witness",
        "appendix.obligations",
        "hypersurface.cut",
        "character.series",
        "good.filtration",
        "sl3.nilcone.dimension",
        "subregular.codimension",
        "mixed.decomposition",
        "gl2.splitting",
        "engine.selfcert",
    ] {
        assert!(text.contains(key), "claim {key} missing from audit");
    }
}

#[test]
fn heavy_scenarios_stay_out_of_the_default_suite() {
    let out = comvar(&["verify", "suite", "--filter", "heavy*"]);
    assert!(out.status.success());
    assert!(!String::from_utf8_lossy(&out.stderr).contains("matches no scenario"));
    // with the default config the filter matches the registry entry but
    // the heavy gate excludes it, so nothing runs
    let text = stdout(&out);
    assert!(text.contains("0 scenarios"), "{text}");
}
