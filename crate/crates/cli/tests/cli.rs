use std::path::Path;
use std::process::{Command, Output};

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hook-census"))
        .args(args)
        .env("HOOK_CENSUS_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn oracle_and_series_tables_agree() {
    for class in ["odd", "distinct"] {
        let base = ["table", "--class", class, "--h", "1..4", "--n", "0..30", "--no-cache"];
        let oracle = run(&[&base[..], &["--source", "oracle"]].concat());
        let series = run(&[&base[..], &["--source", "series"]].concat());
        assert_eq!(code(&oracle), 0);
        assert_eq!(code(&series), 0);
        assert_eq!(stdout(&oracle), stdout(&series), "{class}");
        assert_eq!(stdout(&series).lines().count(), 1 + 4 * 31);
    }
    let lines = stdout(&run(&["table", "--class", "odd", "--h", "2", "--n", "0..5", "--no-cache"]));
    let counts: Vec<&str> = lines.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(counts, ["0", "0", "1", "2", "2", "4"]);
}

#[test]
fn invalid_arguments_exit_2() {
    assert_eq!(code(&run(&["table", "--class", "odd", "--h", "3..1", "--n", "0..5"])), 2);
    assert_eq!(code(&run(&["table", "--class", "odd", "--h", "1", "--n", "x"])), 2);
    assert_eq!(code(&run(&["table", "--class", "self-conjugate", "--h", "1", "--n", "0..5"])), 2);
    assert_eq!(code(&run(&["table", "--class", "nope", "--h", "1", "--n", "0..5"])), 2);
    assert_eq!(code(&run(&["asymptotics", "--h", "", "--n", "100"])), 2);
}

#[test]
fn cache_hit_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--verbose", "table", "--class", "distinct", "--h", "1..3", "--n", "0..50", "--format", "json"];
    let cold = run_in(dir.path(), &args);
    let warm = run_in(dir.path(), &args);
    assert_eq!(code(&cold), 0);
    assert!(String::from_utf8_lossy(&cold.stderr).contains("cache miss"));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache hit"));
    assert_eq!(cold.stdout, warm.stdout);
    let csv_cold = run(&["table", "--class", "distinct", "--h", "1..3", "--n", "0..50", "--no-cache"]);
    let csv_warm = run_in(dir.path(), &args[1..8]);
    assert_eq!(csv_cold.stdout, csv_warm.stdout);
}

#[test]
fn json_output_is_accepted_by_the_cache() {
    let source = tempfile::tempdir().unwrap();
    let json = stdout(&run_in(
        source.path(),
        &["table", "--class", "odd", "--h", "1..2", "--n", "0..10", "--format", "json", "--no-cache"],
    ));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["version"], 1);
    assert_eq!(value["counts"][1][5], "4");

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("hook-counts-odd-series-h1-2-n0-10.json"), &json).unwrap();
    let loaded = run_in(
        dir.path(),
        &["--verbose", "table", "--class", "odd", "--h", "1..2", "--n", "0..10", "--format", "json"],
    );
    assert!(String::from_utf8_lossy(&loaded.stderr).contains("cache hit"));
    assert_eq!(stdout(&loaded), json);

    let tampered = json.replacen("\"4\"", "\"5\"", 1);
    std::fs::write(dir.path().join("hook-counts-odd-series-h1-2-n0-10.json"), tampered).unwrap();
    let rebuilt = run_in(
        dir.path(),
        &["--verbose", "table", "--class", "odd", "--h", "1..2", "--n", "0..10", "--format", "json"],
    );
    assert!(String::from_utf8_lossy(&rebuilt.stderr).contains("cache miss"));
    assert_eq!(stdout(&rebuilt), json);
}

#[test]
fn verification_suites_pass() {
    for args in [
        &["verify", "gf", "--h-max", "6", "--n-max", "30"][..],
        &["verify", "identities"],
        &["verify", "constants", "--h-max", "40"],
        &["verify", "balanced", "--n-max", "25"],
        &["verify", "andrews", "--n-max", "60"],
        &["verify", "nekrasov", "--n-max", "15"],
    ] {
        let out = run(args);
        let text = stdout(&out);
        assert_eq!(code(&out), 0, "{args:?}: {text}");
        assert!(text.trim_end().ends_with(" 0 failures"), "{text}");
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn constants_json() {
    let out = run(&["constants", "--h-max", "10", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 10);
    assert_eq!(records[0]["alpha"], "1/2");
    assert_eq!(records[0]["beta"]["s"], "1/1");
    assert_eq!(records[1]["gamma_exact"], "3/2");
    assert!(records[2].get("gamma_exact").is_none());
    assert!(records[2]["gamma"].as_str().unwrap().starts_with("1.17340"));
    let csv = stdout(&run(&["constants", "--h-max", "3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("h,alpha,beta_r,beta_s,gamma"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn asymptotic_ratios_approach_one() {
    let out = run(&["asymptotics", "--h", "2", "--n", "500,1000,2000"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("formula,h,n_or_z,predicted,observed,ratio"));
    let gaps: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| (l.rsplit(',').next().unwrap().parse::<f64>().unwrap() - 1.0).abs())
        .collect();
    assert_eq!(gaps.len(), 3);
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    assert!(gaps[2] < 0.05);
}

#[test]
fn conjecture_scans_find_nothing() {
    let out = run(&["conjectures", "--m-max", "3", "--n-max", "30"]);
    assert_eq!(code(&out), 0);
    let scans: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(scans.len(), 2);
    for scan in scans {
        assert_eq!(scan["counterexamples"].as_array().unwrap().len(), 0, "{scan}");
    }
}

#[test]
fn verbose_output_stays_on_stderr() {
    let args = ["table", "--class", "odd", "--h", "1", "--n", "0..8", "--no-cache"];
    let quiet = run(&args);
    let loud = run(&[&["--verbose"][..], &args].concat());
    assert_eq!(quiet.stdout, loud.stdout);
    assert!(quiet.stderr.is_empty());
    assert!(String::from_utf8_lossy(&loud.stderr).contains("elapsed"));
}
