use std::path::PathBuf;
use std::process::{Command, Output};

fn qconcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qconcat"))
        .args(args)
        .env_remove("QCONCAT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn build_reports_parameters() {
    let o = qconcat(&["build", "qrs", "--m", "2", "--k", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# qconcat build qrs m=2 k=1\n"), "{text}");
    assert!(text.contains("[[6,2]] d_lower=2"), "{text}");

    let o = qconcat(&["build", "concat", "--outer", "five", "--inner", "five"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[[25,1]] d_lower=9"));

    let o = qconcat(&["build", "qrs", "--m", "3", "--k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("k exceeds 2^{m-1}-1"), "{}", stderr(&o));
}

#[test]
fn emitted_generators_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.gen");
    let p = path.to_str().unwrap();
    let o = qconcat(&[
        "build",
        "concat",
        "--outer",
        "five",
        "--inner",
        "five",
        "--emit-generators",
        p,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("25 24\n"));
    let o = qconcat(&["mindist", "--code", p]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("[[25,1]] d=9"));
    assert!(stderr(&o).starts_with("elapsed: "));
}

#[test]
fn mindist_budget_refusal_exits_three() {
    let o = qconcat(&["mindist", "--code", "steane", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["build", "qrs", "--m", "2"],
        &["bounds", "--kind", "gv", "--bogus"],
        &["bounds", "--kind", "ktv"],
        &["simulate", "--code", "five*five", "--p", "1.5"],
    ] {
        let o = qconcat(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn gv_curve_endpoints() {
    let o = qconcat(&["bounds", "--kind", "gv", "--grid", "101"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# qconcat bounds kind=gv grid=101");
    assert_eq!(lines[1], "R,delta");
    assert_eq!(lines.len(), 2 + 101);
    assert_eq!(lines[2], "0.000000,0.189290");
    assert_eq!(lines[102], "1.000000,0.000000");
}

#[test]
fn order_one_gcq_matches_zyablov() {
    let rows = |args: &[&str]| -> Vec<(f64, f64)> {
        let o = qconcat(args);
        assert!(o.status.success(), "{}", stderr(&o));
        qconcat::io::parse_curve(&stdout(&o)).unwrap()
    };
    let g = rows(&["bounds", "--kind", "gcq", "--s", "1", "--grid", "21"]);
    let z = rows(&["bounds", "--kind", "zyablov", "--grid", "21"]);
    assert_eq!(g.len(), 21);
    for ((r1, d1), (r2, d2)) in g.iter().zip(&z) {
        assert_eq!(r1, r2);
        assert!((d1 - d2).abs() <= 1e-6, "R={r1}: {d1} vs {d2}");
    }
}

#[test]
fn ktv_table_and_overlay() {
    let table = data("ktv_synthetic.txt");
    let overlay = data("altm_synthetic.csv");
    let o = qconcat(&[
        "bounds",
        "--kind",
        "ktv",
        "--table",
        table.to_str().unwrap(),
        "--grid",
        "3",
        "--overlay",
        overlay.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "R,delta,altm_synthetic");
    let first: Vec<f64> = body[1].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!(first[1] >= 0.05 - 1e-6, "{text}");
    assert_eq!(first[2], 0.1);
    assert_eq!(body[2].split(',').nth(2), Some("0.020000"));
}

#[test]
fn written_csv_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bz.csv");
    let o = qconcat(&[
        "bounds",
        "--kind",
        "bz",
        "--grid",
        "11",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = qconcat::io::parse_curve(&text).unwrap();
    assert_eq!(rows.len(), 11);
    for (r, d) in rows {
        assert_eq!(format!("{r:.6}").parse::<f64>().unwrap(), r);
        assert!((0.0..0.2).contains(&d));
    }
}

#[test]
fn simulation_is_reproducible_across_threads_and_runs() {
    let run = |threads: &str| {
        let o = qconcat(&[
            "--seed",
            "0",
            "simulate",
            "--code",
            "five*five",
            "--p",
            "0.05",
            "--trials",
            "100000",
            "--threads",
            threads,
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(stderr(&o).starts_with("wall time: "));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
    let text = String::from_utf8(one).unwrap();
    assert!(
        text.contains("failures=502 trials=100000 rate=5.020000e-3 ci95=[4.600576e-3, 5.477451e-3]"),
        "{text}"
    );
}

#[test]
fn seed_comes_from_the_environment() {
    let args = ["simulate", "--code", "five*five", "--p", "0.1", "--trials", "2000"];
    let with_env = Command::new(env!("CARGO_BIN_EXE_qconcat"))
        .args(args)
        .env("QCONCAT_SEED", "17")
        .output()
        .unwrap();
    let mut flagged = vec!["--seed", "17"];
    flagged.extend(args);
    let explicit = qconcat(&flagged);
    let default = qconcat(&args);
    assert_eq!(stdout(&with_env), stdout(&explicit));
    assert!(stdout(&with_env).contains("seed=17"));
    assert!(stdout(&default).contains("seed=0"));
}

#[test]
fn verify_suites_pass() {
    let o = qconcat(&["verify", "--suite", "counting", "--max-n", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS [counting]"));
    assert!(text.trim_end().ends_with("12 checks, 0 failed"), "{text}");

    let o = qconcat(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("0 failed"));
}
