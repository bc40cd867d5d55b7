//! Foundational axiom suites: pseudo BCK (relational and equational form),
//! pseudo BCI, pseudo BE, the basic laws every pseudo BCK-algebra satisfies,
//! and boundedness.

use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{product_tables, Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::order::derive_order;
use crate::report::{below, eq, holds, Check, CheckReport, Law, Suite, WitnessMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomSystem {
    /// psBCK1-psBCK6, with `<=` read off the arrow table.
    Relational,
    /// psBCK1'-psBCK6'.
    Equational,
    PseudoBci,
    PseudoBe,
}

impl AxiomSystem {
    pub const ALL: [AxiomSystem; 4] =
        [AxiomSystem::Relational, AxiomSystem::Equational, AxiomSystem::PseudoBci, AxiomSystem::PseudoBe];

    pub fn label(self) -> &'static str {
        match self {
            AxiomSystem::Relational => "relational",
            AxiomSystem::Equational => "equational",
            AxiomSystem::PseudoBci => "pseudo-bci",
            AxiomSystem::PseudoBe => "pseudo-be",
        }
    }
}

impl FromStr for AxiomSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AxiomSystem::ALL
            .into_iter()
            .find(|sys| sys.label() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Structure(format!("unknown axiom system {s:?}")))
    }
}

pub fn check_axiom_system(a: &FiniteAlgebra, system: AxiomSystem) -> CheckReport {
    check_axiom_system_with(a, system, WitnessMode::First)
}

pub fn check_axiom_system_with(a: &FiniteAlgebra, system: AxiomSystem, mode: WitnessMode) -> CheckReport {
    let mut s = Suite::new(a, system.label(), mode);
    match system {
        AxiomSystem::Relational => relational(a, &mut s),
        AxiomSystem::Equational => {
            equational_identities(a, &mut s, true);
            psbck6_prime(a, &mut s);
        }
        AxiomSystem::PseudoBci => {
            equational_identities(a, &mut s, false);
            psbck6_prime(a, &mut s);
        }
        AxiomSystem::PseudoBe => pseudo_be(a, &mut s),
    }
    s.finish()
}

fn relational(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), a.top());
    s.clause(
        "psBCK1",
        "xyz",
        &[
            Law::new("x->y", "<=", "(y->z)~>(x->z)", &|v| {
                below(a, ar(v[0], v[1]), sq(ar(v[1], v[2]), ar(v[0], v[2])))
            }),
            Law::new("x~>y", "<=", "(y~>z)->(x~>z)", &|v| {
                below(a, sq(v[0], v[1]), ar(sq(v[1], v[2]), sq(v[0], v[2])))
            }),
        ],
    );
    s.clause(
        "psBCK2",
        "xy",
        &[
            Law::new("x", "<=", "(x->y)~>y", &|v| below(a, v[0], sq(ar(v[0], v[1]), v[1]))),
            Law::new("x", "<=", "(x~>y)->y", &|v| below(a, v[0], ar(sq(v[0], v[1]), v[1]))),
        ],
    );
    s.clause("psBCK3", "x", &[Law::new("x", "<=", "x", &|v| below(a, v[0], v[0]))]);
    s.clause("psBCK4", "x", &[Law::new("x", "<=", "1", &|v| below(a, v[0], top))]);
    s.clause(
        "psBCK5",
        "xy",
        &[Law::new("x<=y & y<=x", "=>", "x=y", &|v| {
            holds(!(a.le(v[0], v[1]) && a.le(v[1], v[0])) || v[0] == v[1])
        })],
    );
    s.clause(
        "psBCK6",
        "xy",
        &[Law::new("x->y=1", "<=>", "x~>y=1", &|v| holds((ar(v[0], v[1]) == top) == (sq(v[0], v[1]) == top)))],
    );
}

/// psBCK1'-psBCK5' (psBCK5' only when `with_top_absorbing`, i.e. not for pseudo BCI).
fn equational_identities(a: &FiniteAlgebra, s: &mut Suite<'_>, with_top_absorbing: bool) {
    let (ar, sq, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), a.top());
    s.clause(
        "psBCK1'",
        "xyz",
        &[Law::new("(x->y)~>((y->z)~>(x->z))", "=", "1", &|v| {
            eq(sq(ar(v[0], v[1]), sq(ar(v[1], v[2]), ar(v[0], v[2]))), top)
        })],
    );
    s.clause(
        "psBCK2'",
        "xyz",
        &[Law::new("(x~>y)->((y~>z)->(x~>z))", "=", "1", &|v| {
            eq(ar(sq(v[0], v[1]), ar(sq(v[1], v[2]), sq(v[0], v[2]))), top)
        })],
    );
    s.clause("psBCK3'", "x", &[Law::new("1->x", "=", "x", &|v| eq(ar(top, v[0]), v[0]))]);
    s.clause("psBCK4'", "x", &[Law::new("1~>x", "=", "x", &|v| eq(sq(top, v[0]), v[0]))]);
    if with_top_absorbing {
        s.clause("psBCK5'", "x", &[Law::new("x->1", "=", "1", &|v| eq(ar(v[0], top), top))]);
    }
}

fn psbck6_prime(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    s.clause(
        "psBCK6'",
        "xy",
        &[Law::new("x->y=1 & y->x=1", "=>", "x=y", &|v| {
            holds(!(a.le(v[0], v[1]) && a.le(v[1], v[0])) || v[0] == v[1])
        })],
    );
}

fn pseudo_be(a: &FiniteAlgebra, s: &mut Suite<'_>) {
    let (ar, sq, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), a.top());
    s.clause(
        "psBE1",
        "x",
        &[
            Law::new("x->x", "=", "1", &|v| eq(ar(v[0], v[0]), top)),
            Law::new("x~>x", "=", "1", &|v| eq(sq(v[0], v[0]), top)),
        ],
    );
    s.clause(
        "psBE2",
        "x",
        &[
            Law::new("x->1", "=", "1", &|v| eq(ar(v[0], top), top)),
            Law::new("x~>1", "=", "1", &|v| eq(sq(v[0], top), top)),
        ],
    );
    s.clause(
        "psBE3",
        "x",
        &[
            Law::new("1->x", "=", "x", &|v| eq(ar(top, v[0]), v[0])),
            Law::new("1~>x", "=", "x", &|v| eq(sq(top, v[0]), v[0])),
        ],
    );
    s.clause(
        "psBE4",
        "xyz",
        &[Law::new("x->(y~>z)", "=", "y~>(x->z)", &|v| eq(ar(v[0], sq(v[1], v[2])), sq(v[1], ar(v[0], v[2]))))],
    );
    s.clause(
        "psBE5",
        "xy",
        &[Law::new("x->y=1", "<=>", "x~>y=1", &|v| holds((ar(v[0], v[1]) == top) == (sq(v[0], v[1]) == top)))],
    );
}

/// Fast equational pseudo BCK test without witness bookkeeping.
pub fn is_pseudo_bck(a: &FiniteAlgebra) -> bool {
    let top = a.top();
    let els = a.elements();
    for x in els.clone() {
        if a.arrow(top, x) != x || a.squiggle(top, x) != x || a.arrow(x, top) != top {
            return false;
        }
    }
    for x in els.clone() {
        for y in els.clone() {
            if x != y && a.le(x, y) && a.le(y, x) {
                return false;
            }
            let (xy, xy_) = (a.arrow(x, y), a.squiggle(x, y));
            for z in els.clone() {
                if a.squiggle(xy, a.squiggle(a.arrow(y, z), a.arrow(x, z))) != top
                    || a.arrow(xy_, a.arrow(a.squiggle(y, z), a.squiggle(x, z))) != top
                {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn require_pbck(a: &FiniteAlgebra) -> Result<()> {
    if is_pseudo_bck(a) {
        Ok(())
    } else {
        let report = check_axiom_system(a, AxiomSystem::Equational);
        let why = report.first_witness().map(|w| w.message.clone()).unwrap_or_default();
        Err(Error::PreconditionViolated(format!("not a pseudo BCK-algebra ({why})")))
    }
}

/// The six basic laws that hold in every pseudo BCK-algebra.
pub fn check_basic_laws(a: &FiniteAlgebra) -> Result<CheckReport> {
    require_pbck(a)?;
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    let mut s = Suite::new(a, "basic-laws", WitnessMode::First);
    s.clause(
        "(1)",
        "xyz",
        &[
            Law::new("z->x", "<=", "z->y", &|v| if a.le(v[0], v[1]) { below(a, ar(v[2], v[0]), ar(v[2], v[1])) } else { Check::Holds }),
            Law::new("z~>x", "<=", "z~>y", &|v| if a.le(v[0], v[1]) { below(a, sq(v[2], v[0]), sq(v[2], v[1])) } else { Check::Holds }),
        ],
    );
    s.clause(
        "(2)",
        "xyz",
        &[
            Law::new("y->z", "<=", "x->z", &|v| if a.le(v[0], v[1]) { below(a, ar(v[1], v[2]), ar(v[0], v[2])) } else { Check::Holds }),
            Law::new("y~>z", "<=", "x~>z", &|v| if a.le(v[0], v[1]) { below(a, sq(v[1], v[2]), sq(v[0], v[2])) } else { Check::Holds }),
        ],
    );
    s.clause(
        "(3)",
        "xyz",
        &[
            Law::new("x->y", "<=", "(z->x)->(z->y)", &|v| below(a, ar(v[0], v[1]), ar(ar(v[2], v[0]), ar(v[2], v[1])))),
            Law::new("x~>y", "<=", "(z~>x)~>(z~>y)", &|v| below(a, sq(v[0], v[1]), sq(sq(v[2], v[0]), sq(v[2], v[1])))),
        ],
    );
    s.clause(
        "(4)",
        "xyz",
        &[
            Law::new("x->(y~>z)", "=", "y~>(x->z)", &|v| eq(ar(v[0], sq(v[1], v[2])), sq(v[1], ar(v[0], v[2])))),
            Law::new("x~>(y->z)", "=", "y->(x~>z)", &|v| eq(sq(v[0], ar(v[1], v[2])), ar(v[1], sq(v[0], v[2])))),
        ],
    );
    s.clause(
        "(5)",
        "xy",
        &[
            Law::new("x", "<=", "y->x", &|v| below(a, v[0], ar(v[1], v[0]))),
            Law::new("x", "<=", "y~>x", &|v| below(a, v[0], sq(v[1], v[0]))),
        ],
    );
    s.clause(
        "(6)",
        "xy",
        &[
            Law::new("((x->y)~>y)->y", "=", "x->y", &|v| eq(ar(sq(ar(v[0], v[1]), v[1]), v[1]), ar(v[0], v[1]))),
            Law::new("((x~>y)->y)~>y", "=", "x~>y", &|v| eq(sq(ar(sq(v[0], v[1]), v[1]), v[1]), sq(v[0], v[1]))),
        ],
    );
    Ok(s.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundednessProfile {
    /// The least element, when the algebra is bounded.
    pub least: Option<Elem>,
    /// `(x->0)~>0 = (x~>0)->0` for all x; only computed when bounded.
    pub good: Option<bool>,
    /// `(x->a)~>a = (x~>a)->a = x` for all `x >= a`; only computed for a given point `a`.
    pub pointed_involutive: Option<bool>,
}

pub fn boundedness_profile(a: &FiniteAlgebra, point_at: Option<Elem>) -> Result<BoundednessProfile> {
    require_pbck(a)?;
    if let Some(p) = point_at {
        a.check_elem(p)?;
    }
    let least = derive_order(a).least;
    let good = least.map(|zero| {
        a.elements()
            .all(|x| a.squiggle(a.arrow(x, zero), zero) == a.arrow(a.squiggle(x, zero), zero))
    });
    let pointed_involutive = point_at.map(|p| {
        a.elements()
            .filter(|&x| a.le(p, x))
            .all(|x| a.squiggle(a.arrow(x, p), p) == x && a.arrow(a.squiggle(x, p), p) == x)
    });
    Ok(BoundednessProfile { least, good, pointed_involutive })
}

pub fn direct_product(a1: &FiniteAlgebra, a2: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    require_pbck(a1)?;
    require_pbck(a2)?;
    product_tables(a1, a2)
}
