use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use vcell::forms::catalog::{a1_boundary, cusp_cubic, cusp_curve, omega_a1, p};
use vcell::forms::{CurveDoc, FormDoc, RationalTwoForm};
use vcell::planar::curves::vandermonde_curve;

fn vcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vcell-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn boundary_counts_and_ranges() {
    let o = vcell(&["boundary", "--n", "5", "--d", "4", "--count-new"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
    assert_eq!(
        vcell(&["boundary", "--n", "2", "--d", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn boundary_equations_and_multiplicities() {
    let o = vcell(&["boundary", "--n", "6", "--d", "3", "--equations"]);
    assert_eq!(o.status.code(), Some(0));
    let eqs = json(&o)["equations"].as_array().unwrap().clone();
    assert_eq!(
        eqs.iter()
            .map(|e| e["k"].as_u64().unwrap())
            .collect::<Vec<_>>(),
        vec![2, 3, 4, 5, 6]
    );
    let o = vcell(&["boundary", "--n", "4", "--d", "4", "--list-multiplicities"]);
    let v = json(&o);
    assert!(!v["multiplicity_vectors"].as_array().unwrap().is_empty());
    assert_eq!(
        vcell(&["boundary", "--n", "5", "--d", "4", "--equations"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn boundary_sample_is_seeded_csv() {
    let run = |seed: &str| {
        stdout(&vcell(&[
            "boundary", "--n", "4", "--d", "4", "--sample", "3", "--seed", seed,
        ]))
    };
    let a = run("5");
    assert_eq!(a, run("5"));
    assert_ne!(a, run("6"));
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines[0], "type,multiplicities,preimage,y2,y3,y4");
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 6));
}

#[test]
fn canonical_certificates() {
    let o = vcell(&["canonical", "--n", "3", "--combined"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["denominator_factors"].as_array().unwrap().len(), 2);
    let o = vcell(&["planar", "canonical", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let cancelled = v["certificate"]["cancelled"].as_array().unwrap();
    assert_eq!(cancelled.len(), 1);
    assert!(cancelled[0]
        .as_str()
        .unwrap()
        .starts_with("spurious factor"));
    let o = vcell(&["canonical", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["certificate"]["logarithmic"], Value::Bool(true));
    assert!(v["residues"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["poles"]["all_simple"] == Value::Bool(true)));
    assert_eq!(vcell(&["canonical", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn canonical_writes_out_file_that_round_trips() {
    let out = scratch("form.json", "");
    let o = vcell(&[
        "canonical",
        "--n",
        "5",
        "--combined",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: FormDoc = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let form = RationalTwoForm::try_from(&doc).unwrap();
    assert_eq!(form, vcell::planar::canonical_form(5).unwrap().combined);
}

#[test]
fn plot_is_deterministic_svg() {
    let s3 = stdout(&vcell(&["plot", "--n", "3"]));
    assert_eq!(s3.matches(r#"class="boundary""#).count(), 2);
    let s5 = stdout(&vcell(&["planar", "plot", "--n", "5"]));
    assert_eq!(s5.matches(r#"class="boundary""#).count(), 4);
    assert_eq!(s5.matches(r#"class="chord""#).count(), 2);
    assert_eq!(s5.matches(r#"class="tangent""#).count(), 2);
    assert_eq!(s5, stdout(&vcell(&["plot", "--n", "5"])));
    assert_eq!(
        vcell(&["plot", "--n", "5", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn membership_uses_rational_literals() {
    let o = vcell(&["membership", "--n", "3", "--x", "7/18", "--y", "1/6"]);
    assert_eq!(json(&o)["membership"], "Inside");
    let o = vcell(&["planar", "membership", "--n", "3", "--x", "1/2", "--y", "1"]);
    assert_eq!(json(&o)["membership"], "Outside");
    assert_eq!(
        vcell(&["membership", "--n", "3", "--x", "0.5", "--y", "1/4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn residue_and_logcheck() {
    let form = scratch(
        "a1.json",
        &serde_json::to_string(&FormDoc::from(&omega_a1())).unwrap(),
    );
    let (curve, _) = &a1_boundary()[0];
    let curve_path = scratch(
        "a1-curve.json",
        &serde_json::to_string(&CurveDoc::from(curve)).unwrap(),
    );
    let o = vcell(&[
        "forms",
        "residue",
        "--form",
        path_str(&form),
        "--curve",
        path_str(&curve_path),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["poles"]["all_simple"], Value::Bool(true));
    let curves: Vec<CurveDoc> = a1_boundary()
        .iter()
        .map(|(c, _)| CurveDoc::from(c))
        .collect();
    let curves_path = scratch("a1-curves.json", &serde_json::to_string(&curves).unwrap());
    let o = vcell(&[
        "logcheck",
        "--form",
        path_str(&form),
        "--curves",
        path_str(&curves_path),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["logarithmic"], Value::Bool(true));

    let bare = RationalTwoForm::new(p("1"), vec![(cusp_cubic(), 1)]).unwrap();
    let bare_path = scratch(
        "bare.json",
        &serde_json::to_string(&FormDoc::from(&bare)).unwrap(),
    );
    let cubic = scratch(
        "cubic.json",
        &serde_json::to_string(&vec![CurveDoc::from(&cusp_curve())]).unwrap(),
    );
    let o = vcell(&[
        "forms",
        "logcheck",
        "--form",
        path_str(&bare_path),
        "--curves",
        path_str(&cubic),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["logarithmic"], Value::Bool(false));
    assert_eq!(v["offenders"].as_array().unwrap().len(), 1);
}

#[test]
fn logcheck_on_canonical_output() {
    let form = scratch("pi4.json", "");
    vcell(&[
        "canonical",
        "--n",
        "4",
        "--combined",
        "--out",
        path_str(&form),
    ]);
    let curves: Vec<CurveDoc> = (3..=4)
        .map(|k| CurveDoc::from(&vandermonde_curve(k).unwrap()))
        .collect();
    let curves_path = scratch("pi4-curves.json", &serde_json::to_string(&curves).unwrap());
    let o = vcell(&[
        "logcheck",
        "--form",
        path_str(&form),
        "--curves",
        path_str(&curves_path),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn dualvol_values() {
    let tri = scratch(
        "tri.json",
        r#"{"vertices": [["0","0"],["1","0"],["0","1"]]}"#,
    );
    let o = vcell(&[
        "dualvol",
        "--polygon",
        path_str(&tri),
        "--x",
        "1/3",
        "--y",
        "1/3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], "27");
    let o = vcell(&[
        "dualvol",
        "--polygon",
        path_str(&tri),
        "--x",
        "1",
        "--y",
        "1",
    ]);
    let v = json(&o);
    assert_eq!(v["bounded"], Value::Bool(false));
    assert_eq!(v["value"], Value::Null);
    let bad = scratch(
        "bad.json",
        r#"{"vertices": [["0","0"],["1","0"],["2","0"]]}"#,
    );
    assert_eq!(
        vcell(&[
            "dualvol",
            "--polygon",
            path_str(&bad),
            "--x",
            "0",
            "--y",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn limit_csv() {
    let o = vcell(&["limit", "--x", "7/18", "--y", "1/6", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "n,value_num,value_den,float_approx,delta_float");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("3,3888,1,"));
    let o = vcell(&[
        "limit", "--x", "7/18", "--y", "1/6", "--n-max", "4", "--format", "json",
    ]);
    assert!(json(&o)["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["hull_identity"] == Value::Bool(true)));
    assert_eq!(
        vcell(&["limit", "--x", "0", "--y", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn fixtures_and_selftest_pass() {
    let o = vcell(&["fixtures", "verify", "--samples", "20", "--slow"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], Value::Bool(true));
    assert_eq!(
        vcell(&["fixtures-verify", "--samples", "20"]).status.code(),
        Some(0)
    );
    let o = vcell(&["selftest", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vcell(&[]).status.code(), Some(2));
    assert_eq!(
        vcell(&["boundary", "--n", "x", "--d", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        vcell(&["canonical", "--n", "3", "--combined", "--summands"])
            .status
            .code(),
        Some(2)
    );
}
