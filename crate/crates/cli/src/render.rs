//! Text and JSON rendering shared by the subcommands.

use std::fmt::Write;

use pbck::{CheckReport, Elem, FiniteAlgebra, Subset, UnaryMap};
use serde_json::{json, Value};

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Witness messages usually start with the clause name already.
fn labelled(name: &str, message: &str) -> String {
    if message.strip_prefix(name).is_some_and(|rest| rest.starts_with(':')) {
        message.to_owned()
    } else {
        format!("{name}: {message}")
    }
}

/// One line per clause; failing clauses carry their witnesses.
pub fn report_text(out: &mut String, report: &CheckReport, indent: &str) {
    for clause in &report.clauses {
        if clause.passed {
            writeln!(out, "{indent}ok   {}", clause.name).unwrap();
        } else if clause.witnesses.is_empty() {
            writeln!(out, "{indent}FAIL {}", clause.name).unwrap();
        } else {
            for w in &clause.witnesses {
                writeln!(out, "{indent}FAIL {}", labelled(&clause.name, &w.message)).unwrap();
            }
        }
    }
}

/// Only the failing clauses, for sub-reports that would otherwise drown the output.
pub fn failures_text(out: &mut String, report: &CheckReport, indent: &str) {
    for clause in report.failures() {
        match clause.witnesses.first() {
            Some(w) => writeln!(out, "{indent}FAIL {}", labelled(&clause.name, &w.message)).unwrap(),
            None => writeln!(out, "{indent}FAIL {}", clause.name).unwrap(),
        }
    }
}

fn names_of(a: &FiniteAlgebra, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| a.name(x).to_owned()).collect()
}

/// Witness tuples are rendered as element names rather than indices.
pub fn report_json(a: &FiniteAlgebra, report: &CheckReport) -> Value {
    let clauses: Vec<Value> = report
        .clauses
        .iter()
        .map(|c| {
            let witnesses: Vec<Value> = c
                .witnesses
                .iter()
                .map(|w| json!({ "tuple": names_of(a, &w.tuple), "message": w.message }))
                .collect();
            json!({ "name": c.name, "passed": c.passed, "witnesses": witnesses })
        })
        .collect();
    json!({ "suite": report.suite, "passed": report.passed(), "clauses": clauses })
}

pub fn subset_json(a: &FiniteAlgebra, s: Subset) -> Value {
    json!(s.names(a))
}

pub fn map_json(a: &FiniteAlgebra, mu: &UnaryMap) -> Value {
    json!(names_of(a, mu.as_slice()))
}

/// A map as a single row of images, in carrier order.
pub fn map_row(a: &FiniteAlgebra, mu: &UnaryMap) -> String {
    names_of(a, mu.as_slice()).join(" ")
}

pub fn algebra_json(a: &FiniteAlgebra, prod: Option<&[Elem]>) -> Value {
    let table = |get: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<String>> {
        a.elements().map(|x| a.elements().map(|y| a.name(get(x, y)).to_owned()).collect()).collect()
    };
    let mut v = json!({
        "size": a.size(),
        "elements": a.names(),
        "top": a.name(a.top()),
        "arrow": table(&|x, y| a.arrow(x, y)),
        "squiggle": table(&|x, y| a.squiggle(x, y)),
    });
    if let Some(p) = prod {
        v["prod"] = json!(table(&|x, y| p[x * a.size() + y]));
    }
    v
}
