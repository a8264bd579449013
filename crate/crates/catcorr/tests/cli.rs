use std::fs;
use std::process::{Command, Output};
use std::time::Instant;

fn catcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_owned).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn report_json_has_tangle() {
    let out = catcorr(&["report", "--p", "0.5", "--t2", "0.5", "--m", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["tau"].as_f64().unwrap() - 0.12).abs() < 1e-12);
    assert!((v["Dg_deficit"].as_f64().unwrap() + 0.10).abs() < 1e-12);
}

#[test]
fn report_rejects_unit_overlap_for_odd_states() {
    let out = catcorr(&["report", "--p", "1", "--t2", "0.5", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside its domain"));
    assert!(out.stdout.is_empty());
}

#[test]
fn report_accepts_alpha() {
    let by_alpha = catcorr(&["report", "--alpha", "0.5887", "--t2", "0.5", "--m", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&by_alpha.stdout).unwrap();
    assert!((v["p"].as_f64().unwrap() - 0.5).abs() < 1e-4);
    assert!((v["tau"].as_f64().unwrap() - 0.12).abs() < 1e-4);
    let exact = format!("{}", (2.0_f64.ln() / 2.0).sqrt());
    let v: serde_json::Value =
        serde_json::from_slice(&catcorr(&["report", "--alpha", &exact, "--format", "json"]).stdout).unwrap();
    assert!((v["p"].as_f64().unwrap() - 0.5).abs() < 1e-14);
}

#[test]
fn invalid_flags_exit_two() {
    assert_eq!(catcorr(&["report", "--p", "0.5", "--m", "2"]).status.code(), Some(2));
    assert_eq!(catcorr(&["report", "--p", "0.5", "--alpha", "0.3"]).status.code(), Some(2));
    assert_eq!(catcorr(&["report", "--p", "-0.1"]).status.code(), Some(2));
    assert_eq!(catcorr(&["sweep", "--p-steps", "0"]).status.code(), Some(2));
    assert_eq!(catcorr(&["--jobs", "0", "sweep"]).status.code(), Some(2));
    assert_eq!(catcorr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(catcorr(&["--help"]).status.code(), Some(0));
}

#[test]
fn odd_sweep_crosses_root_two_minus_one() {
    let out = catcorr(&[
        "sweep", "--p-start", "0.01", "--p-end", "0.99", "--p-steps", "50", "--t2-start", "0.5", "--t2-end",
        "0.5", "--t2-steps", "1", "--m", "1",
    ]);
    assert!(out.status.success());
    let (header, rows) = csv(&stdout(&out));
    assert_eq!(rows.len(), 50);
    let (p, tau, dg) = (column(&header, "p"), column(&header, "tau"), column(&header, "Dg_deficit"));
    let mut crossings = Vec::new();
    for pair in rows.windows(2) {
        assert!(pair[0][tau].parse::<f64>().unwrap() > 0.0);
        let (a, b): (f64, f64) = (pair[0][dg].parse().unwrap(), pair[1][dg].parse().unwrap());
        if a > 0.0 && b <= 0.0 {
            crossings.push((pair[0][p].parse::<f64>().unwrap(), pair[1][p].parse::<f64>().unwrap()));
        }
    }
    assert_eq!(crossings.len(), 1);
    let (lo, hi) = crossings[0];
    assert!(lo <= 2.0_f64.sqrt() - 1.0 && 2.0_f64.sqrt() - 1.0 <= hi && lo >= 0.40 && hi <= 0.43, "{lo} {hi}");
}

#[test]
fn single_cell_sweep_matches_report() {
    let sweep = catcorr(&["sweep", "--p-start", "0.3", "--p-steps", "1", "--t2-start", "0.7", "--t2-steps", "1", "--m", "1"]);
    let report = catcorr(&["report", "--p", "0.3", "--t2", "0.7", "--m", "1"]);
    assert_eq!(stdout(&sweep), stdout(&report));
    assert_eq!(stdout(&report).lines().count(), 2);
}

#[test]
fn header_is_stable() {
    let (header, rows) = csv(&stdout(&catcorr(&["sweep", "--p-steps", "2", "--t2-steps", "2"])));
    assert_eq!(
        header.join(","),
        "p,t2,m,C_AB,C_AE,C_ABE,E_AB,E_AE,E_ABE,D_AB,D_AE,D_ABE,Dg_AB,Dg_AE,Dg_ABE,tau,E_deficit,D_deficit,Dg_deficit"
    );
    assert_eq!(rows.len(), 4);
    let (header, _) = csv(&stdout(&catcorr(&["sweep", "--p-steps", "2", "--p-end", "0.9", "--t2-steps", "2", "--oracles"])));
    assert_eq!(header.len(), 27);
    assert_eq!(header[19], "C_AB_oracle");
}

#[test]
fn even_sweep_tangle_is_nonnegative() {
    let (header, rows) = csv(&stdout(&catcorr(&["sweep", "--p-steps", "21", "--t2-steps", "21", "--m", "0"])));
    let tau = column(&header, "tau");
    assert_eq!(rows.len(), 441);
    assert!(rows.iter().all(|r| r[tau].parse::<f64>().unwrap() >= -1e-12));
}

#[test]
fn csv_and_json_tokens_match() {
    let args = ["sweep", "--p-steps", "4", "--p-end", "0.9", "--t2-steps", "3", "--m", "1", "--oracles"];
    let (header, rows) = csv(&stdout(&catcorr(&args)));
    let json = stdout(&catcorr(&[&args[..], &["--format", "json"]].concat()));
    let parsed: Vec<serde_json::Map<String, serde_json::Value>> = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.len(), rows.len());
    for (line, row) in json.lines().filter(|l| l.trim_start().starts_with('{')).zip(&rows) {
        for (name, token) in header.iter().zip(row) {
            assert!(line.contains(&format!("\"{name}\": {token}")), "{name} {token} in {line}");
        }
    }
}

#[test]
fn sweep_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = catcorr(&["sweep", "--p-steps", "3", "--t2-steps", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, stdout(&catcorr(&["sweep", "--p-steps", "3", "--t2-steps", "2"])));
}

#[test]
fn unwritable_output_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = catcorr(&["sweep", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["sweep", "--p-steps", "11", "--t2-steps", "7", "--m", "0"];
    let one = catcorr(&[&["--jobs", "1"][..], &args[..]].concat());
    let many = catcorr(&[&args[..], &["--jobs", "8"]].concat());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, catcorr(&args).stdout);
}

#[test]
fn threshold_examples() {
    let (header, rows) = csv(&stdout(&catcorr(&["threshold", "--measure", "geo", "--m", "1", "--t2", "0.5"])));
    let p: f64 = rows[0][column(&header, "p")].parse().unwrap();
    assert!((p - 0.414214).abs() < 1e-6);
    let out = catcorr(&["threshold", "--measure", "geo", "--m", "0", "--t2", "0.5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["p"].as_f64().unwrap() - 0.206783).abs() < 1e-6);
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(v["measure"], "geo");
    let out = catcorr(&["threshold", "--measure", "discord", "--m", "1", "--bracket", "0.7,0.95", "--tol", "1e-4"]);
    let (header, rows) = csv(&stdout(&out));
    let p: f64 = rows[0][column(&header, "p")].parse().unwrap();
    assert!((p - 0.85).abs() <= 0.02);
}

#[test]
fn threshold_without_sign_change_exits_four() {
    let out = catcorr(&["threshold", "--measure", "tangle", "--m", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no sign change"));
    let out = catcorr(&["threshold", "--measure", "geo", "--m", "1", "--bracket", "0.5,0.9"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn coarse_verify_is_fast_and_passes() {
    let start = Instant::now();
    let out = catcorr(&["verify", "--grid", "3"]);
    assert!(start.elapsed().as_secs_f64() < 10.0);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v.get("paper_verbatim").is_none());
    let conc = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "concurrence_oracle").unwrap();
    assert!(conc["max_residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn default_verify_passes() {
    let out = catcorr(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn paper_verbatim_reports_without_failing() {
    let out = catcorr(&["verify", "--grid", "3", "--paper-verbatim"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let d = v["paper_verbatim"]["eof_a_be_unit_overlap"]["discrepancy"].as_f64().unwrap();
    assert!((d - 0.811278).abs() < 1e-6);
    assert!(v["paper_verbatim"]["eof_ab"]["max_residual"].as_f64().unwrap() > 1e-3);
}

#[test]
fn impossible_tolerance_fails_verify() {
    let out = catcorr(&["verify", "--grid", "3", "--concurrence-tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("FAIL concurrence_oracle"));
    assert!(err.contains("p="));
}

#[test]
fn verify_csv_summary() {
    let out = catcorr(&["verify", "--grid", "2", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("check,tolerance,max_residual,cells,passed,informational\n"));
    assert!(text.contains("\nkoashi_winter,"));
}

#[test]
fn config_file_values_and_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# shared settings\np = 0.5\nt2 = 0.5\nformat = json\nmeasure = geo\np-steps = 3\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let from_file = catcorr(&["--config", cfg, "report"]);
    let v: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    assert!((v["tau"].as_f64().unwrap() - 0.12).abs() < 1e-12);

    // flags given on the command line win over the file
    let overridden = catcorr(&["--config", cfg, "report", "--p", "0.3", "--format", "csv"]);
    let (header, rows) = csv(&stdout(&overridden));
    assert_eq!(rows[0][column(&header, "p")], "0.3");
    let overridden = catcorr(&["--format", "csv", "--config", cfg, "report"]);
    assert!(stdout(&overridden).starts_with("p,t2,m,"));

    let sweep = catcorr(&["--config", cfg, "sweep", "--t2-steps", "1", "--format", "csv"]);
    assert_eq!(stdout(&sweep).lines().count(), 4);

    fs::write(dir.path().join("bad.conf"), "colour = blue\n").unwrap();
    let bad = catcorr(&["--config", dir.path().join("bad.conf").to_str().unwrap(), "report", "--p", "0.5"]);
    assert_eq!(bad.status.code(), Some(2));

    fs::write(dir.path().join("flags.conf"), "oracles = yes\np-end = 0.9\n").unwrap();
    let flagged = catcorr(&["--config", dir.path().join("flags.conf").to_str().unwrap(), "sweep", "--p-steps", "2", "--t2-steps", "2"]);
    assert!(stdout(&flagged).lines().next().unwrap().ends_with("Dg_ABE_oracle"));

    let missing = catcorr(&["--config", dir.path().join("nope.conf").to_str().unwrap(), "report", "--p", "0.5"]);
    assert_eq!(missing.status.code(), Some(3));
}
