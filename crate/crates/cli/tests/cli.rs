use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golden-chroma")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn chromatic_of_family_and_file() {
    let v = json(&["chromatic", "--family", "TC", "--param", "3"]);
    assert_eq!(v["n"], 9);
    assert_eq!(v["display"], "q^9 - 21q^8 + 195q^7 - 1039q^6 + 3453q^5 - 7279q^4 + 9426q^3 - 6784q^2 + 2048q");

    let dir = tempfile::tempdir().unwrap();
    let k4 = dir.path().join("k4.json");
    std::fs::write(&k4, r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#).unwrap();
    let v = json(&["chromatic", "--in", k4.to_str().unwrap()]);
    assert_eq!(v["display"], "q^4 - 6q^3 + 11q^2 - 6q");

    let ce12 = json(&["chromatic", "--family", "CE12"]);
    assert_eq!(ce12["n"], 12);
}

#[test]
fn report_records() {
    let b20 = json(&["report", "--family", "B", "--param", "20"]);
    let off = b20["nearest_real"]["offset"].as_f64().unwrap();
    assert!((b20["nearest_real"]["value"].as_f64().unwrap() - 2.617957).abs() < 1e-6);
    assert!((off + 0.7725e-4).abs() < 1e-8);

    let cm = json(&["report", "--family", "CM", "--param", "1"]);
    assert_eq!(cm["nearest"]["is_real"], "complex");
    assert!((cm["nearest"]["re"].as_f64().unwrap() - 2.641998).abs() < 1e-6);
    assert!((cm["nearest"]["im"].as_f64().unwrap() - 0.014795).abs() < 1e-6);

    let h9 = json(&["report", "--family", "H", "--param", "9"]);
    assert_eq!(h9["violation"], false);
}

#[test]
fn table_bn_rows() {
    let csv = stdout(&["table-bn", "--n-min", "6", "--n-max", "15"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,q_z,offset");
    assert_eq!(lines.len(), 11);
    assert!(lines[1].starts_with("6,2.546602"));
    assert!(lines[8].starts_with("13,2.620356"));
    assert!(lines[10].starts_with("15,2.618905"));
    assert_eq!(run(&["table-bn", "--n-min", "5"]).status.code(), Some(2));
}

#[test]
fn boundcheck_generators() {
    let fam = json(&["boundcheck", "--generator", "families", "--count", "10"]);
    assert_eq!(fam["violations"].as_array().unwrap().len(), 0);
    assert_eq!(fam["saturated"], serde_json::json!(["R_1"]));
    let flips = json(&["boundcheck", "--generator", "flip", "--count", "50", "--seed", "1"]);
    assert_eq!(flips["checked"], 50);
    assert_eq!(flips["violations"].as_array().unwrap().len(), 0);
    let ap = json(&["boundcheck", "--generator", "apollonian", "--count", "10", "--seed", "3"]);
    assert_eq!(ap["checked"], 10);
    assert!(ap["max_ratio"].as_f64().unwrap() < 1.0);
}

#[test]
fn zeros_locus_entropy_csv() {
    let zeros = stdout(&["zeros", "--family", "I", "--param", "1"]);
    let rows: Vec<&str> = zeros.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    for r in &rows {
        let residual: f64 = r.split(',').nth(2).unwrap().parse().unwrap();
        assert!(residual < 1e-9);
    }

    let locus = stdout(&["locus", "--grid", "1,4,-2,2", "--res", "64"]);
    assert!(locus.lines().any(|l| l == "2.5,1,1-2"));
    assert!(locus.lines().any(|l| l.starts_with("2.5,-0.875,")));

    let e = stdout(&["entropy", "--family", "I", "--q", "4"]);
    let row = e.lines().nth(1).unwrap();
    assert!(row.starts_with("I,4,nq,"));
    let w: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!((w - 1.29155).abs() < 1e-5);
    assert_eq!(run(&["entropy", "--family", "R", "--q", "3"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["chromatic", "--family", "nope", "--param", "1"]).status.code(), Some(2));
    assert_eq!(run(&["chromatic"]).status.code(), Some(2));
    assert_eq!(run(&["chromatic", "--family", "TC", "--param", "8", "--budget", "50"]).status.code(), Some(3));
    assert_eq!(run(&["zeros", "--family", "R", "--param", "3", "--tol", "0"]).status.code(), Some(2));
}

#[test]
fn output_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        stdout(&["zeros", "--family", "CM", "--param", "1", "--out", p.to_str().unwrap()]);
    }
    let read = |p: &Path| std::fs::read(p).unwrap();
    assert_eq!(read(&a), read(&b));
    assert!(String::from_utf8(read(&a)).unwrap().starts_with("re,im,residual,is_real\n"));
    let names: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 2, "no temporary files left behind");
}
