//! Clause-level check reports with counterexample witnesses.
//!
//! Every law is quantified exhaustively over the carrier. Tuples are visited in
//! lexicographic order, so the first reported witness is the lexicographically
//! smallest violating tuple.

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub clauses: Vec<ClauseResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseResult {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Element indices bound to the clause variables, in variable order.
    pub tuple: Vec<Elem>,
    pub message: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Whether the named clause exists and passed.
    pub fn clause_passed(&self, name: &str) -> bool {
        self.clause(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    /// First witness of the first failing clause.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.failures().next().and_then(|c| c.witnesses.first())
    }
}

impl ClauseResult {
    pub fn witness(&self) -> Option<&[Elem]> {
        self.witnesses.first().map(|w| w.tuple.as_slice())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WitnessMode {
    /// Stop each clause at its first counterexample.
    #[default]
    First,
    /// Collect every counterexample.
    All,
}

/// Outcome of evaluating one law at one tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Check {
    Holds,
    /// The two sides of an equation evaluated to different elements.
    NotEqual(Elem, Elem),
    /// The left side is not below the right side.
    NotBelow(Elem, Elem),
    /// A non-equational condition (quasi-identity, membership, ...) failed.
    Fails,
}

pub(crate) fn eq(lhs: Elem, rhs: Elem) -> Check {
    if lhs == rhs {
        Check::Holds
    } else {
        Check::NotEqual(lhs, rhs)
    }
}

pub(crate) fn below(a: &FiniteAlgebra, lhs: Elem, rhs: Elem) -> Check {
    if a.le(lhs, rhs) {
        Check::Holds
    } else {
        Check::NotBelow(lhs, rhs)
    }
}

pub(crate) fn holds(ok: bool) -> Check {
    if ok {
        Check::Holds
    } else {
        Check::Fails
    }
}

/// A single law: display text plus an evaluator over a variable assignment.
pub(crate) struct Law<'f> {
    lhs: &'static str,
    rel: &'static str,
    rhs: &'static str,
    eval: &'f dyn Fn(&[Elem]) -> Check,
}

impl<'f> Law<'f> {
    pub(crate) fn new(lhs: &'static str, rel: &'static str, rhs: &'static str, eval: &'f dyn Fn(&[Elem]) -> Check) -> Self {
        Self { lhs, rel, rhs, eval }
    }
}

/// Accumulates clause results for one suite.
pub(crate) struct Suite<'a> {
    alg: &'a FiniteAlgebra,
    name: String,
    mode: WitnessMode,
    clauses: Vec<ClauseResult>,
}

impl<'a> Suite<'a> {
    pub(crate) fn new(alg: &'a FiniteAlgebra, name: impl Into<String>, mode: WitnessMode) -> Self {
        Self { alg, name: name.into(), mode, clauses: Vec::new() }
    }

    /// Checks a clause made of one or more laws over all assignments of `vars`.
    ///
    /// `vars` lists single-character variable names (e.g. `"xyz"`); their
    /// occurrences in the law text are replaced by element names in messages.
    pub(crate) fn clause(&mut self, name: &str, vars: &str, laws: &[Law<'_>]) -> bool {
        let arity = vars.chars().count();
        let n = self.alg.size();
        let mut witnesses = Vec::new();
        let mut tuple = vec![0; arity];
        'tuples: loop {
            for law in laws {
                let outcome = (law.eval)(&tuple);
                if outcome != Check::Holds {
                    witnesses.push(Witness {
                        tuple: tuple.clone(),
                        message: self.render(name, vars, &tuple, law, outcome),
                    });
                    if self.mode == WitnessMode::First {
                        break 'tuples;
                    }
                    break;
                }
            }
            if !advance(&mut tuple, n) {
                break;
            }
        }
        self.push(name, witnesses)
    }

    /// Records a clause whose witnesses were computed by the caller.
    pub(crate) fn record(&mut self, name: &str, mut witnesses: Vec<Witness>) -> bool {
        if self.mode == WitnessMode::First {
            witnesses.truncate(1);
        }
        self.push(name, witnesses)
    }

    fn push(&mut self, name: &str, witnesses: Vec<Witness>) -> bool {
        let passed = witnesses.is_empty();
        self.clauses.push(ClauseResult { name: name.to_owned(), passed, witnesses });
        passed
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport { suite: self.name, clauses: self.clauses }
    }

    fn render(&self, name: &str, vars: &str, tuple: &[Elem], law: &Law<'_>, outcome: Check) -> String {
        let lhs = substitute(self.alg, vars, tuple, law.lhs);
        let rhs = substitute(self.alg, vars, tuple, law.rhs);
        let nm = |x: Elem| self.alg.name(x);
        match outcome {
            Check::NotEqual(l, r) => format!("{name}: {lhs} = {}, expected {}", nm(l), nm(r)),
            Check::NotBelow(l, r) => {
                format!("{name}: {lhs} = {} is not <= {rhs} = {}", nm(l), nm(r))
            }
            Check::Fails | Check::Holds => format!("{name}: {lhs} {} {rhs} fails", law.rel),
        }
    }
}

/// Replaces each variable character in `text` by the name of its bound element.
pub(crate) fn substitute(a: &FiniteAlgebra, vars: &str, tuple: &[Elem], text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match vars.chars().position(|v| v == ch) {
            Some(i) => out.push_str(a.name(tuple[i])),
            None => out.push(ch),
        }
    }
    out
}

/// Advances `tuple` to the lexicographic successor over `0..n`; false after the last tuple.
pub(crate) fn advance(tuple: &mut [Elem], n: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}
