use std::process::{Command, Output};

use steinfill::Report;

fn steinfill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steinfill")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bern_prints_exact_value() {
    let o = steinfill(&["bern", "--top", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3617/510"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bern", "--top", "0"][..],
        &["nope"][..],
        &["thm-a1", "--k", "3"][..],
        &["admits", "--k", "3", "--sigma", "0", "--tau2", "0"][..],
        &["admits", "--k", "4", "--sigma", "0", "--tau2", "4", "--tau-in-image"][..],
    ] {
        let o = steinfill(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn vsc_csv_has_header_and_eight_rows() {
    let o = steinfill(&["vsc", "--max-n", "16", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap().iter().next(), Some("check"));
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.get(r.len() - 1) == Some("true")));
}

#[test]
fn empty_sweep_json() {
    let o = steinfill(&["thm-a1", "--max-k", "0", "--format", "json"]);
    let report: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report.results.is_empty());
    assert_eq!(report.summary.checked, 0);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn thm_a1_human_table_columns() {
    let o = steinfill(&["thm-a1", "--max-k", "10"]);
    let text = stdout(&o);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header, ["k", "j", "ord", "bound", "holds"]);
    assert_eq!(text.lines().count(), 1 + 5 + 1);
}

// json render, re-read, same summary; exit code 1 iff failures
#[test]
fn json_round_trip_preserves_summary() {
    for args in [
        &["carlitz", "--max-n", "10", "--max-w", "8", "--max-r", "3"][..],
        &["prop-a4", "--max-m", "20"][..],
        &["audit-yang", "--max-k", "6"][..],
        &["num-identity", "--max-k", "7"][..],
        &["parts", "--max-k", "12"][..],
    ] {
        let cmd = steinfill::parse(args.iter().copied()).unwrap();
        let direct = steinfill::run(&cmd).unwrap();
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let o = steinfill(&full);
        let reread: Report = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(reread.summary, direct.summary, "{args:?}");
        assert_eq!(reread.results, direct.results);
        assert_eq!(o.status.code(), Some(if reread.summary.failed > 0 { 1 } else { 0 }));
    }
}

#[test]
fn rationals_never_render_as_decimals() {
    for format in ["human", "json", "csv"] {
        let o = steinfill(&["bern", "--max-n", "30", "--format", format]);
        let text = stdout(&o);
        assert!(text.contains("-174611/330"), "{format}");
        let o = steinfill(&["prop-a4", "--max-m", "12", "--format", format]);
        let text = stdout(&o);
        // the only dot allowed is inside the version string
        let dots = text.replace(env!("CARGO_PKG_VERSION"), "").matches('.').count();
        assert_eq!(dots, 0, "{format}: {text}");
    }
}

#[test]
fn admits_json_audit_trail() {
    let o = steinfill(&["admits", "--k", "4", "--sigma", "512", "--tau2", "8", "--tau-in-image", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let values = &v["results"][0]["values"];
    assert_eq!(values["yang"], "true");
    assert_eq!(values["yang_plus"], "true");
    assert_eq!(values["condition_ord2"], "2");
    assert_eq!(v["summary"]["failed"], 0);
}
