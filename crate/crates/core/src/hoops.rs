//! Pseudo-hoops: a two-arrow table with an extra product `.` and its
//! Wajsberg and basic refinements.

use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::is_pseudo_bck;
use crate::error::{Error, Result};
use crate::order::derive_order;
use crate::report::{below, eq, CheckReport, Law, Suite, WitnessMode};

#[derive(Clone, PartialEq, Eq)]
pub struct HoopAlgebra {
    base: FiniteAlgebra,
    prod: Vec<u8>,
}

impl HoopAlgebra {
    pub fn new(base: FiniteAlgebra, prod: Vec<Elem>) -> Result<Self> {
        let n = base.size();
        if prod.len() != n * n {
            return Err(Error::Structure(format!("product table has {} entries, expected {}", prod.len(), n * n)));
        }
        if let Some(&bad) = prod.iter().find(|&&v| v >= n) {
            return Err(Error::Structure(format!("product entry {bad} out of range")));
        }
        Ok(Self { base, prod: prod.into_iter().map(|v| v as u8).collect() })
    }

    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }

    #[inline]
    pub fn prod(&self, x: Elem, y: Elem) -> Elem {
        self.prod[x * self.base.size() + y] as Elem
    }

    pub fn prod_table(&self) -> Vec<Elem> {
        self.prod.iter().map(|&v| v as Elem).collect()
    }
}

impl std::fmt::Debug for HoopAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::format::write_algebra(&self.base, Some(&self.prod_table())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HoopLevel {
    /// psH1-psH5.
    Hoop,
    /// Adds W1 and W2.
    Wajsberg,
    /// Adds B1 and B2.
    Basic,
}

impl FromStr for HoopLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hoop" => Ok(HoopLevel::Hoop),
            "wajsberg" => Ok(HoopLevel::Wajsberg),
            "basic" => Ok(HoopLevel::Basic),
            _ => Err(Error::Structure(format!("unknown hoop level {s:?}"))),
        }
    }
}

pub fn check_hoop(h: &HoopAlgebra, level: HoopLevel) -> CheckReport {
    let a = &h.base;
    let (ar, sq, p, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), |x, y| h.prod(x, y), a.top());
    let label = match level {
        HoopLevel::Hoop => "hoop",
        HoopLevel::Wajsberg => "wajsberg",
        HoopLevel::Basic => "basic",
    };
    let mut s = Suite::new(a, label, WitnessMode::First);
    s.clause(
        "psH1",
        "x",
        &[
            Law::new("x.1", "=", "x", &|v| eq(p(v[0], top), v[0])),
            Law::new("1.x", "=", "x", &|v| eq(p(top, v[0]), v[0])),
        ],
    );
    s.clause(
        "psH2",
        "x",
        &[
            Law::new("x->x", "=", "1", &|v| eq(ar(v[0], v[0]), top)),
            Law::new("x~>x", "=", "1", &|v| eq(sq(v[0], v[0]), top)),
        ],
    );
    s.clause(
        "psH3",
        "xyz",
        &[Law::new("(x.y)->z", "=", "x->(y->z)", &|v| eq(ar(p(v[0], v[1]), v[2]), ar(v[0], ar(v[1], v[2]))))],
    );
    s.clause(
        "psH4",
        "xyz",
        &[Law::new("(x.y)~>z", "=", "y~>(x~>z)", &|v| eq(sq(p(v[0], v[1]), v[2]), sq(v[1], sq(v[0], v[2]))))],
    );
    s.clause(
        "psH5",
        "xy",
        &[
            Law::new("(y->x).y", "=", "(x->y).x", &|v| eq(p(ar(v[1], v[0]), v[1]), p(ar(v[0], v[1]), v[0]))),
            Law::new("x.(x~>y)", "=", "(x->y).x", &|v| eq(p(v[0], sq(v[0], v[1])), p(ar(v[0], v[1]), v[0]))),
            Law::new("y.(y~>x)", "=", "(x->y).x", &|v| eq(p(v[1], sq(v[1], v[0])), p(ar(v[0], v[1]), v[0]))),
        ],
    );
    match level {
        HoopLevel::Hoop => {}
        HoopLevel::Wajsberg => {
            s.clause(
                "W1",
                "xy",
                &[Law::new("(x->y)~>y", "=", "(y->x)~>x", &|v| eq(sq(ar(v[0], v[1]), v[1]), sq(ar(v[1], v[0]), v[0])))],
            );
            s.clause(
                "W2",
                "xy",
                &[Law::new("(x~>y)->y", "=", "(y~>x)->x", &|v| eq(ar(sq(v[0], v[1]), v[1]), ar(sq(v[1], v[0]), v[0])))],
            );
        }
        HoopLevel::Basic => {
            s.clause(
                "B1",
                "xyz",
                &[Law::new("(x->y)->z", "<=", "((y->x)->z)->z", &|v| {
                    below(a, ar(ar(v[0], v[1]), v[2]), ar(ar(ar(v[1], v[0]), v[2]), v[2]))
                })],
            );
            s.clause(
                "B2",
                "xyz",
                &[Law::new("(x~>y)~>z", "<=", "((y~>x)~>z)~>z", &|v| {
                    below(a, sq(sq(v[0], v[1]), v[2]), sq(sq(sq(v[1], v[0]), v[2]), v[2]))
                })],
            );
        }
    }
    s.finish()
}

/// The underlying pseudo BCK-algebra of a pseudo-hoop.
///
/// Besides the hoop axioms, confirms that the reduct is a pseudo BCK-algebra
/// whose order is a meet-semilattice with `x ^ y = (x->y).x`.
pub fn to_pbck(h: &HoopAlgebra) -> Result<FiniteAlgebra> {
    if !check_hoop(h, HoopLevel::Hoop).passed() {
        return Err(Error::NotAHoop);
    }
    let a = &h.base;
    if !is_pseudo_bck(a) {
        return Err(Error::TheoremViolation("reduct of a pseudo-hoop is not a pseudo BCK-algebra".into()));
    }
    let order = derive_order(a);
    let meets_agree = a
        .elements()
        .all(|x| a.elements().all(|y| order.meet(x, y) == Some(h.prod(a.arrow(x, y), x))));
    if !meets_agree {
        return Err(Error::TheoremViolation("pseudo-hoop meet differs from (x->y).x".into()));
    }
    Ok(a.clone())
}
