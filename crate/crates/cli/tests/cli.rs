use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pbck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn pbck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbck")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

#[test]
fn check_a6_equational_passes() {
    let o = pbck(&["check", &fixture("a6.pbck"), "--system", "equational"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("equational: PASS\n"));
}

#[test]
fn check_all_systems_on_a6() {
    let o = pbck(&["check", &fixture("a6.pbck"), "--system", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(": PASS")).count(), 4, "{out}");
}

#[test]
fn printed_typo_fails_with_first_witness() {
    let o = pbck(&["check", &fixture("a4l_printed.pbck")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("psBCK3': 1->a = b, expected a"), "{out}");
    assert!(out.contains("psBCK4': 1~>a = b, expected a"), "{out}");
    assert!(out.contains("ok   psBCK5'"), "{out}");
}

#[test]
fn corrected_chain_passes() {
    let o = pbck(&["check", &fixture("a4l_corrected.pbck")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn ds_lists_four_systems_of_a6() {
    let o = pbck(&["ds", &fixture("a6.pbck")]);
    assert_eq!(o.status.code(), Some(0));
    let sets: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_owned()).collect();
    assert_eq!(sets, ["{1}", "{c,d,1}", "{a,b,c,d,1}", "{0,a,b,c,d,1}"]);
}

#[test]
fn ds_filters_and_generation() {
    let normal = stdout(&pbck(&["ds", &fixture("a6.pbck"), "--normal"]));
    assert_eq!(normal.lines().count(), 3, "{normal}");
    assert!(!normal.contains("{c,d,1}"));
    let comm = stdout(&pbck(&["ds", &fixture("a6.pbck"), "--commutative"]));
    assert_eq!(comm.lines().count(), 2, "{comm}");
    let gen = pbck(&["ds", &fixture("a6.pbck"), "--generated", "c"]);
    assert_eq!(stdout(&gen).trim(), "{c,d,1}");
}

#[test]
fn quotient_by_normal_and_non_normal_ds() {
    let ok = pbck(&["quotient", &fixture("a6.pbck"), "--ds", "a,b,c,d,1"]);
    assert_eq!(ok.status.code(), Some(0));
    let out = stdout(&ok);
    let q = pbck::parse_algebra(&out).expect("quotient output parses").algebra;
    assert_eq!(q.size(), 2);
    assert!(pbck::is_pseudo_bck(&q));
    assert!(out.contains("# block 1: {a,b,c,d,1}"), "{out}");

    let bad = pbck(&["quotient", &fixture("a6.pbck"), "--ds", "c,d,1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("is not normal"), "{}", stderr(&bad));
}

#[test]
fn classify_reports_every_method() {
    let o = pbck(&["classify", &fixture("a6.pbck")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    for m in pbck::CommutativityMethod::ALL {
        assert!(out.lines().any(|l| l.starts_with(m.label())), "missing {}: {out}", m.label());
    }
    assert!(out.contains("commutative: no"));

    let o = pbck(&["--json", "classify", &fixture("a4c.pbck")]);
    let v = json(&o);
    assert_eq!(o.status.code(), Some(0), "{v}");
    assert_eq!(v["commutative"], true);
    assert_eq!(v["methods"].as_array().unwrap().len(), 9);
}

#[test]
fn states_for_corrected_chain_map() {
    let o = pbck(&["states", &fixture("a4l_corrected.pbck"), "--map", &fixture("a4l_mu.map")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("type I: yes"), "{out}");
    assert!(out.contains("type II: no"), "{out}");
    assert!(out.contains("state-morphism: no"), "{out}");

    let sm = pbck(&["states", &fixture("a4l_corrected.pbck"), "--map", &fixture("a4l_mu.map"), "--kind", "sm"]);
    assert_eq!(sm.status.code(), Some(1));
}

#[test]
fn states_enumeration_on_two_element_chain() {
    let o = pbck(&["--json", "states", &fixture("a2.pbck"), "--enumerate", "--kind", "type1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let maps: Vec<Vec<String>> = serde_json::from_value(v["maps"].clone()).unwrap();
    assert_eq!(maps, [vec!["0", "1"], vec!["1", "1"]]);
}

#[test]
fn measure_command() {
    let o = pbck(&["measure", &fixture("a2.pbck"), &fixture("a2_half.measure")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("kernel: {1}"));
}

#[test]
fn hoop_levels() {
    let o = pbck(&["hoop", &fixture("hl3.pbck"), "--level", "wajsberg"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let missing = pbck(&["hoop", &fixture("a6.pbck")]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn product_writes_a_parseable_algebra() {
    let out = scratch("prod.pbck");
    let o = pbck(&["product", &fixture("a2.pbck"), &fixture("a4c.pbck"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let p = pbck::parse_algebra(&std::fs::read_to_string(&out).unwrap()).unwrap().algebra;
    assert_eq!(p.size(), 8);
    assert!(pbck::is_pseudo_bck(&p));
}

#[test]
fn enumerate_counts() {
    let count = |extra: &[&str]| {
        let mut args = vec!["enumerate", "--size", "4", "--count-only"];
        args.extend_from_slice(extra);
        let o = pbck(&args);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).trim().parse::<u64>().unwrap()
    };
    assert_eq!(count(&[]), 85);
    assert_eq!(count(&["--up-to-iso"]), 17);
    assert_eq!(count(&["--up-to-iso", "--commutative"]), 5);
}

#[test]
fn enumerate_listing_reparses() {
    let o = pbck(&["enumerate", "--size", "3", "--up-to-iso"]);
    assert_eq!(o.status.code(), Some(0));
    let models = pbck::parse_algebras(&stdout(&o)).unwrap();
    assert_eq!(models.len(), 3);
    assert!(models.iter().all(|m| pbck::is_pseudo_bck(&m.algebra)));
}

#[test]
fn enumerate_rejects_oversized_search() {
    let o = pbck(&["enumerate", "--size", "9", "--count-only"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_file_reports_line_and_column() {
    let path = scratch("bad.pbck");
    std::fs::write(&path, "pbck 2\nelements 0 1\ntop 1\narrow\n0 1 1\n1 0 x\n").unwrap();
    let o = pbck(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let expected = format!("{}:6:5:", path.display());
    assert!(stderr(&o).contains(&expected), "{}", stderr(&o));
}

#[test]
fn missing_file_and_unknown_names_are_input_errors() {
    assert_eq!(pbck(&["check", "/definitely/not/here.pbck"]).status.code(), Some(2));
    let o = pbck(&["ds", &fixture("a6.pbck"), "--generated", "zz"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown element"));
}

#[test]
fn json_check_schema() {
    let o = pbck(&["--json", "check", &fixture("a4l_printed.pbck")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let report = &v["reports"][0];
    assert_eq!(report["suite"], "equational");
    let names: Vec<&str> = report["clauses"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["psBCK1'", "psBCK2'", "psBCK3'", "psBCK4'", "psBCK5'", "psBCK6'"]);
    let c3 = &report["clauses"][2];
    assert_eq!(c3["passed"], false);
    assert_eq!(c3["witnesses"][0]["tuple"], serde_json::json!(["a"]));
    assert_eq!(c3["witnesses"][0]["message"], "psBCK3': 1->a = b, expected a");
}

#[test]
fn json_errors_are_structured() {
    let o = pbck(&["--json", "check", "/definitely/not/here.pbck"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "input");
}
