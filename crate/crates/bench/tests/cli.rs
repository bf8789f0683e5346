use std::process::Command;

use lpsearch_bench::{read_csv, run_benchmark, Format, Method, Report, RunConfig};

fn lpbench(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lpbench"))
        .args(args)
        .output()
        .expect("run lpbench")
}

#[test]
fn table_3_1_sweep_has_sixteen_records() {
    let config = RunConfig {
        functions: vec![1],
        refine: true,
        ..Default::default()
    };
    let report = run_benchmark(&config).unwrap();
    assert_eq!(report.records.len(), 16);
    let refined = report.find(1, Method::Halton, 2000, true).unwrap();
    assert_eq!(refined.best_value, 0.0);
    assert_eq!(refined.best_point, [1.0, 1.0]);
    for raw in report.records.iter().filter(|r| !r.refined) {
        let refined = report.find(raw.function, raw.method, raw.n, true).unwrap();
        assert!(refined.best_value <= raw.best_value);
        assert!(refined.evals > raw.evals);
    }
}

#[test]
fn function_5_sobol_hits_the_minimum_at_every_n() {
    let config = RunConfig {
        functions: vec![5],
        methods: vec![Method::Sobol],
        ..Default::default()
    };
    let report = run_benchmark(&config).unwrap();
    assert_eq!(report.records.len(), 4);
    for r in &report.records {
        assert_eq!(r.best_value, -2.0);
        assert_eq!(r.best_point, [0.0, 0.0]);
    }
}

#[test]
fn quasi_reports_are_byte_identical() {
    let args = [
        "-f",
        "1,3",
        "-m",
        "halton,sobol,grid",
        "-n",
        "500,1000",
        "--refine",
        "--no-timing",
    ];
    let a = lpbench(&args);
    let b = lpbench(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let report = read_csv(a.stdout.as_slice()).unwrap();
    assert_eq!(report.records.len(), 2 * 3 * 2 * 2);
}

#[test]
fn json_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = lpbench(&[
        "-f",
        "4",
        "-m",
        "sobol",
        "-n",
        "2000",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let report = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.records.len(), 1);
    assert_eq!(report.records[0].best_point.len(), 4);
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "function = 2\nmethod = halton\npoints = 64\nformat = json\n").unwrap();
    let o = lpbench(&["--config", cfg.to_str().unwrap(), "--points", "32", "--format", "csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(report.records.len(), 1);
    assert_eq!((report.records[0].function, report.records[0].n), (2, 32));
}

#[test]
fn configuration_errors_exit_nonzero() {
    for args in [
        &["-f", "9"][..],
        &["-m", "simplex"],
        &["-m", "random"],
        &["-n", "0"],
        &["--refine", "--epsilon=0"],
        &["--direction-table", "/nonexistent/table.txt"],
    ] {
        let o = lpbench(args);
        assert!(!o.status.success(), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("lpbench: "), "{args:?}");
    }
}

#[test]
fn random_is_repeatable_per_seed() {
    let args = ["-f", "5", "-m", "random", "-n", "300", "--seed", "7", "--no-timing"];
    assert_eq!(lpbench(&args).stdout, lpbench(&args).stdout);
    let other = lpbench(&["-f", "5", "-m", "random", "-n", "300", "--seed", "8", "--no-timing"]);
    assert_ne!(lpbench(&args).stdout, other.stdout);
}

#[test]
fn published_tables_preset() {
    let o = lpbench(&["--preset", "paper-tables", "--no-timing"]);
    assert!(o.status.success());
    let report = read_csv(o.stdout.as_slice()).unwrap();
    // Seven functions, two methods, four N, raw and refined.
    assert_eq!(report.records.len(), 7 * 2 * 4 * 2);
    let fp = report.find(2, Method::Sobol, 2000, false).unwrap();
    assert_eq!(fp.best_value, 0.2782941);
    let f7 = report.find(7, Method::Halton, 65535, false).unwrap();
    assert!((f7.best_value - 27845.0).abs() < 1.0);
}

#[test]
fn quasi_vs_random_preset_reports_ratio() {
    let o = lpbench(&["--preset", "quasi-vs-random", "--seeds", "20"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("method,runs,first_hit_n\nsobol,1,3\n"), "{text}");
    assert!(text.contains("# ratio random_median/sobol = "));
    let o = lpbench(&["--preset", "quasi-vs-random", "--seeds", "20", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["random"].as_array().unwrap().len(), 20);
}

#[test]
fn csv_format_is_the_default() {
    assert_eq!(RunConfig::default().format, Format::Csv);
}
