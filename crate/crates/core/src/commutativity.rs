//! Commutativity: the defining identities, four equational axiom systems that
//! characterize commutative pseudo BCK-algebras from scratch, three further
//! characterizations, joins and order-determining systems of measures.

use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::require_pbck;
use crate::error::{Error, Result};
use crate::measure::{is_measure, Measure};
use crate::report::{below, eq, Check, CheckReport, Law, Suite, WitnessMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CommutativityMethod {
    /// `(x->y)~>y = (y->x)~>x` and `(x~>y)->y = (y~>x)->x`.
    Def,
    /// The same with `<=` in place of `=`.
    OneSided,
    YutaniKuhr,
    KuhrK,
    PalasinskiP,
    CornishC,
    CharB,
    CharC,
    CharD,
}

impl CommutativityMethod {
    pub const ALL: [CommutativityMethod; 9] = [
        CommutativityMethod::Def,
        CommutativityMethod::OneSided,
        CommutativityMethod::YutaniKuhr,
        CommutativityMethod::KuhrK,
        CommutativityMethod::PalasinskiP,
        CommutativityMethod::CornishC,
        CommutativityMethod::CharB,
        CommutativityMethod::CharC,
        CommutativityMethod::CharD,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CommutativityMethod::Def => "def",
            CommutativityMethod::OneSided => "one-sided",
            CommutativityMethod::YutaniKuhr => "yutani-kuhr",
            CommutativityMethod::KuhrK => "kuhr-k",
            CommutativityMethod::PalasinskiP => "palasinski-p",
            CommutativityMethod::CornishC => "cornish-c",
            CommutativityMethod::CharB => "char-b",
            CommutativityMethod::CharC => "char-c",
            CommutativityMethod::CharD => "char-d",
        }
    }

    /// Methods that are complete axiom systems and therefore accept arbitrary tables.
    pub fn accepts_raw_tables(self) -> bool {
        matches!(
            self,
            CommutativityMethod::YutaniKuhr
                | CommutativityMethod::KuhrK
                | CommutativityMethod::PalasinskiP
                | CommutativityMethod::CornishC
        )
    }
}

impl FromStr for CommutativityMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        CommutativityMethod::ALL
            .into_iter()
            .find(|m| m.label() == s)
            .ok_or_else(|| Error::Structure(format!("unknown commutativity method {s:?}")))
    }
}

pub fn check_commutative(a: &FiniteAlgebra, method: CommutativityMethod) -> Result<CheckReport> {
    check_commutative_with(a, method, WitnessMode::First)
}

pub fn check_commutative_with(a: &FiniteAlgebra, method: CommutativityMethod, mode: WitnessMode) -> Result<CheckReport> {
    if !method.accepts_raw_tables() {
        require_pbck(a)?;
    }
    let mut s = Suite::new(a, method.label(), mode);
    use CommutativityMethod as M;
    match method {
        M::Def => def_identities(a, &mut s, "comm1", "comm2"),
        M::OneSided => one_sided(a, &mut s),
        M::YutaniKuhr => {
            def_identities(a, &mut s, "Y1", "Y1");
            exchange(a, &mut s, "Y2");
            self_arrow(a, &mut s, "Y3");
            top_left_unit(a, &mut s, "Y4");
        }
        M::KuhrK => {
            def_identities(a, &mut s, "K1", "K1");
            exchange(a, &mut s, "K2");
            arrow_to_top(a, &mut s, "K3");
            top_left_unit(a, &mut s, "K4");
        }
        M::PalasinskiP => palasinski(a, &mut s),
        M::CornishC => cornish(a, &mut s),
        M::CharB => char_b(a, &mut s),
        M::CharC => char_c(a, &mut s),
        M::CharD => char_d(a, &mut s),
    }
    Ok(merge_same_names(s.finish()))
}

/// Y1, K1 and P2 bundle both identities in one clause; collapse the pair into a single entry.
fn merge_same_names(mut r: CheckReport) -> CheckReport {
    let mut out: Vec<crate::report::ClauseResult> = Vec::with_capacity(r.clauses.len());
    for c in r.clauses.drain(..) {
        match out.iter_mut().find(|o| o.name == c.name) {
            Some(o) => {
                if o.passed && !c.passed {
                    o.passed = false;
                    o.witnesses = c.witnesses;
                }
            }
            None => out.push(c),
        }
    }
    r.clauses = out;
    r
}

fn def_identities(a: &FiniteAlgebra, s: &mut Suite<'_>, first: &str, second: &str) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    s.clause(
        first,
        "xy",
        &[Law::new("(x->y)~>y", "=", "(y->x)~>x", &|v| eq(sq(ar(v[0], v[1]), v[1]), sq(ar(v[1], v[0]), v[0])))],
    );
    s.clause(
        second,
        "xy",
        &[Law::new("(x~>y)->y", "=", "(y~>x)->x", &|v| eq(ar(sq(v[0], v[1]), v[1]), ar(sq(v[1], v[0]), v[0])))],
    );
}

fn one_sided(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    s.clause(
        "comm1<=",
        "xy",
        &[Law::new("(x->y)~>y", "<=", "(y->x)~>x", &|v| below(a, sq(ar(v[0], v[1]), v[1]), sq(ar(v[1], v[0]), v[0])))],
    );
    s.clause(
        "comm2<=",
        "xy",
        &[Law::new("(x~>y)->y", "<=", "(y~>x)->x", &|v| below(a, ar(sq(v[0], v[1]), v[1]), ar(sq(v[1], v[0]), v[0])))],
    );
}

fn exchange(a: &FiniteAlgebra, s: &mut Suite<'_>, name: &str) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    s.clause(
        name,
        "xyz",
        &[Law::new("x->(y~>z)", "=", "y~>(x->z)", &|v| eq(ar(v[0], sq(v[1], v[2])), sq(v[1], ar(v[0], v[2]))))],
    );
}

fn self_arrow(a: &FiniteAlgebra, s: &mut Suite<'_>, name: &str) {
    let top = a.top();
    s.clause(
        name,
        "x",
        &[
            Law::new("x->x", "=", "1", &|v| eq(a.arrow(v[0], v[0]), top)),
            Law::new("x~>x", "=", "1", &|v| eq(a.squiggle(v[0], v[0]), top)),
        ],
    );
}

fn arrow_to_top(a: &FiniteAlgebra, s: &mut Suite<'_>, name: &str) {
    let top = a.top();
    s.clause(
        name,
        "x",
        &[
            Law::new("x->1", "=", "1", &|v| eq(a.arrow(v[0], top), top)),
            Law::new("x~>1", "=", "1", &|v| eq(a.squiggle(v[0], top), top)),
        ],
    );
}

fn top_left_unit(a: &FiniteAlgebra, s: &mut Suite<'_>, name: &str) {
    let top = a.top();
    s.clause(
        name,
        "x",
        &[
            Law::new("1->x", "=", "x", &|v| eq(a.arrow(top, v[0]), v[0])),
            Law::new("1~>x", "=", "x", &|v| eq(a.squiggle(top, v[0]), v[0])),
        ],
    );
}

fn palasinski(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), a.top());
    s.clause(
        "P1",
        "xyz",
        &[
            Law::new("(x->(y~>z))->(y~>(x->z))", "=", "1", &|v| {
                eq(ar(ar(v[0], sq(v[1], v[2])), sq(v[1], ar(v[0], v[2]))), top)
            }),
            Law::new("(x~>(y->z))->(y->(x~>z))", "=", "1", &|v| {
                eq(ar(sq(v[0], ar(v[1], v[2])), ar(v[1], sq(v[0], v[2]))), top)
            }),
        ],
    );
    def_identities(a, s, "P2", "P2");
    s.clause(
        "P3",
        "xyz",
        &[
            Law::new("(x->(y~>x))->z", "=", "z", &|v| eq(ar(ar(v[0], sq(v[1], v[0])), v[2]), v[2])),
            Law::new("(x->(y~>x))~>z", "=", "z", &|v| eq(sq(ar(v[0], sq(v[1], v[0])), v[2]), v[2])),
            Law::new("(x~>(y->x))->z", "=", "z", &|v| eq(ar(sq(v[0], ar(v[1], v[0])), v[2]), v[2])),
            Law::new("(x~>(y->x))~>z", "=", "z", &|v| eq(sq(sq(v[0], ar(v[1], v[0])), v[2]), v[2])),
        ],
    );
}

fn cornish(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), a.top());
    s.clause(
        "C1",
        "xy",
        &[
            Law::new("(x->1)~>y", "=", "y", &|v| eq(sq(ar(v[0], top), v[1]), v[1])),
            Law::new("(x~>1)->y", "=", "y", &|v| eq(ar(sq(v[0], top), v[1]), v[1])),
        ],
    );
    s.clause(
        "C2",
        "xyz",
        &[Law::new("(x->y)~>(z->y)", "=", "(y->x)~>(z->x)", &|v| {
            eq(sq(ar(v[0], v[1]), ar(v[2], v[1])), sq(ar(v[1], v[0]), ar(v[2], v[0])))
        })],
    );
    s.clause(
        "C3",
        "xyz",
        &[Law::new("(x~>y)->(z~>y)", "=", "(y~>x)->(z~>x)", &|v| {
            eq(ar(sq(v[0], v[1]), sq(v[2], v[1])), ar(sq(v[1], v[0]), sq(v[2], v[0])))
        })],
    );
}

fn char_b(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    s.clause(
        "b",
        "xy",
        &[
            Law::new("((y->x)~>x)->y", "=", "x->y", &|v| eq(ar(sq(ar(v[1], v[0]), v[0]), v[1]), ar(v[0], v[1]))),
            Law::new("((y~>x)->x)~>y", "=", "x~>y", &|v| eq(sq(ar(sq(v[1], v[0]), v[0]), v[1]), sq(v[0], v[1]))),
        ],
    );
}

fn char_c(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    s.clause(
        "c",
        "xy",
        &[
            Law::new("(((x->y)~>y)->x)~>x", "=", "(x->y)~>y", &|v| {
                let j = sq(ar(v[0], v[1]), v[1]);
                eq(sq(ar(j, v[0]), v[0]), j)
            }),
            Law::new("(((x~>y)->y)~>x)->x", "=", "(x~>y)->y", &|v| {
                let j = ar(sq(v[0], v[1]), v[1]);
                eq(ar(sq(j, v[0]), v[0]), j)
            }),
        ],
    );
}

fn char_d(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    let when_le = |v: &[Elem], f: &dyn Fn() -> Check| if a.le(v[0], v[1]) { f() } else { Check::Holds };
    s.clause(
        "d",
        "xy",
        &[
            Law::new("(y->x)~>x", "=", "y", &|v| when_le(v, &|| eq(sq(ar(v[1], v[0]), v[0]), v[1]))),
            Law::new("(y~>x)->x", "=", "y", &|v| when_le(v, &|| eq(ar(sq(v[1], v[0]), v[0]), v[1]))),
        ],
    );
}

/// Fast test of the defining identities, without witnesses and without checking the axioms.
pub fn satisfies_def(a: &FiniteAlgebra) -> bool {
    a.elements().all(|x| {
        a.elements().all(|y| {
            a.squiggle(a.arrow(x, y), y) == a.squiggle(a.arrow(y, x), x)
                && a.arrow(a.squiggle(x, y), y) == a.arrow(a.squiggle(y, x), x)
        })
    })
}

/// Whether `a` satisfies the defining commutativity identities (no axiom check).
pub fn is_commutative(a: &FiniteAlgebra) -> bool {
    satisfies_def(a)
}

/// `x v y = (x->y)~>y` in a commutative pseudo BCK-algebra.
pub fn join(a: &FiniteAlgebra, x: Elem, y: Elem) -> Result<Elem> {
    require_pbck(a)?;
    if !is_commutative(a) {
        return Err(Error::PreconditionViolated("join requires a commutative pseudo BCK-algebra".into()));
    }
    a.check_elem(x)?;
    a.check_elem(y)?;
    Ok(a.squiggle(a.arrow(x, y), y))
}

/// Whether the measures determine the order: for all `x, y`, if `m(x) >= m(y)` for
/// every measure `m` then `x <= y`.
///
/// A positive answer on a non-empty list forces commutativity; a non-commutative
/// algebra with such a list is reported as a theorem violation.
pub fn check_order_determining(a: &FiniteAlgebra, measures: &[Measure]) -> Result<bool> {
    require_pbck(a)?;
    for (index, m) in measures.iter().enumerate() {
        if !is_measure(a, m)? {
            return Err(Error::NotAMeasure { index });
        }
    }
    let determining = a.elements().all(|x| {
        a.elements().all(|y| !measures.iter().all(|m| m.value(x) >= m.value(y)) || a.le(x, y))
    });
    if determining && !measures.is_empty() && !is_commutative(a) {
        return Err(Error::TheoremViolation(
            "an order-determining system of measures exists on a non-commutative algebra".into(),
        ));
    }
    Ok(determining)
}
