//! Internal state operators of type I and type II.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::require_pbck;
use crate::deduction::{classify_subset, quotient, QuotientResult};
use crate::error::{Error, Result};
use crate::morphisms::is_endomorphism_raw;
use crate::order::{derive_order, structure_of};
use crate::report::{below, eq, CheckReport, Law, Suite, WitnessMode};
use crate::subset::Subset;

/// A total self-map of the carrier, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnaryMap(Vec<Elem>);

impl UnaryMap {
    pub fn new(image: Vec<Elem>) -> Self {
        Self(image)
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// The map sending everything to `top`.
    pub fn constant(n: usize, top: Elem) -> Self {
        Self(vec![top; n])
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` after `other`, i.e. `x |-> self(other(x))`.
    pub fn compose(&self, other: &UnaryMap) -> UnaryMap {
        UnaryMap(other.0.iter().map(|&y| self.apply(y)).collect())
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.iter().all(|&y| self.apply(y) == y)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set() == Subset::full(self.len())
    }

    /// `{mu(x) : x}`.
    pub fn image_set(&self) -> Subset {
        self.0.iter().copied().collect()
    }

    /// `{x : mu(x) = top}`.
    pub fn kernel(&self, top: Elem) -> Subset {
        (0..self.len()).filter(|&x| self.apply(x) == top).collect()
    }

    /// `{mu(x) : x in d}`.
    pub fn image_of(&self, d: Subset) -> Subset {
        d.iter().map(|x| self.apply(x)).collect()
    }

    pub fn preimage_of(&self, d: Subset) -> Subset {
        (0..self.len()).filter(|&x| d.contains(self.apply(x))).collect()
    }

    pub(crate) fn check_for(&self, a: &FiniteAlgebra) -> Result<()> {
        if self.len() != a.size() {
            return Err(Error::Structure(format!("map has {} entries, carrier has {}", self.len(), a.size())));
        }
        match self.0.iter().find(|&&y| y >= a.size()) {
            Some(&y) => Err(Error::Structure(format!("map image {y} out of range"))),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for UnaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnaryMap{:?}", self.0)
    }
}

/// Componentwise map `(x, y) |-> (mu1(x), mu2(y))` on a product built by
/// [`crate::axioms::direct_product`].
pub fn product_map(mu1: &UnaryMap, mu2: &UnaryMap) -> UnaryMap {
    let n2 = mu2.len();
    UnaryMap((0..mu1.len() * n2).map(|p| mu1.apply(p / n2) * n2 + mu2.apply(p % n2)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StateKind {
    /// IS1, IS2, IS3.
    Type1,
    /// IS1, IS2', IS3.
    Type2,
}

/// What [`enumerate_states`] searches for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchKind {
    Type1,
    Type2,
    Morphism,
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "type1" | "i" => Ok(SearchKind::Type1),
            "type2" | "ii" => Ok(SearchKind::Type2),
            "sm" | "morphism" => Ok(SearchKind::Morphism),
            _ => Err(Error::Structure(format!("unknown state kind {s:?}"))),
        }
    }
}

pub fn check_state(a: &FiniteAlgebra, mu: &UnaryMap, kind: StateKind) -> Result<CheckReport> {
    check_state_with(a, mu, kind, WitnessMode::First)
}

pub fn check_state_with(a: &FiniteAlgebra, mu: &UnaryMap, kind: StateKind, mode: WitnessMode) -> Result<CheckReport> {
    require_pbck(a)?;
    mu.check_for(a)?;
    let (ar, sq, m) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), |x| mu.apply(x));
    let label = match kind {
        StateKind::Type1 => "type1",
        StateKind::Type2 => "type2",
    };
    let mut s = Suite::new(a, label, mode);
    s.clause(
        "IS1",
        "xy",
        &[Law::new("mu(x)", "<=", "mu(y)", &|v| {
            if a.le(v[0], v[1]) {
                below(a, m(v[0]), m(v[1]))
            } else {
                crate::report::Check::Holds
            }
        })],
    );
    match kind {
        StateKind::Type1 => {
            s.clause(
                "IS2",
                "xy",
                &[
                    Law::new("mu(x->y)", "=", "mu((x->y)~>y)->mu(y)", &|v| {
                        eq(m(ar(v[0], v[1])), ar(m(sq(ar(v[0], v[1]), v[1])), m(v[1])))
                    }),
                    Law::new("mu(x~>y)", "=", "mu((x~>y)->y)~>mu(y)", &|v| {
                        eq(m(sq(v[0], v[1])), sq(m(ar(sq(v[0], v[1]), v[1])), m(v[1])))
                    }),
                ],
            );
        }
        StateKind::Type2 => {
            s.clause(
                "IS2'",
                "xy",
                &[
                    Law::new("mu(x->y)", "=", "mu((y->x)~>x)->mu(y)", &|v| {
                        eq(m(ar(v[0], v[1])), ar(m(sq(ar(v[1], v[0]), v[0])), m(v[1])))
                    }),
                    Law::new("mu(x~>y)", "=", "mu((y~>x)->x)~>mu(y)", &|v| {
                        eq(m(sq(v[0], v[1])), sq(m(ar(sq(v[1], v[0]), v[0])), m(v[1])))
                    }),
                ],
            );
        }
    }
    s.clause(
        "IS3",
        "xy",
        &[
            Law::new("mu(mu(x)->mu(y))", "=", "mu(x)->mu(y)", &|v| {
                let t = ar(m(v[0]), m(v[1]));
                eq(m(t), t)
            }),
            Law::new("mu(mu(x)~>mu(y))", "=", "mu(x)~>mu(y)", &|v| {
                let t = sq(m(v[0]), m(v[1]));
                eq(m(t), t)
            }),
        ],
    );
    Ok(s.finish())
}

/// Fast state test without reports or precondition checks.
pub(crate) fn is_state_raw(a: &FiniteAlgebra, mu: &UnaryMap, kind: StateKind) -> bool {
    let m = |x| mu.apply(x);
    let (ar, sq) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y));
    a.elements().all(|x| {
        a.elements().all(|y| {
            (!a.le(x, y) || a.le(m(x), m(y)))
                && match kind {
                    StateKind::Type1 => {
                        m(ar(x, y)) == ar(m(sq(ar(x, y), y)), m(y)) && m(sq(x, y)) == sq(m(ar(sq(x, y), y)), m(y))
                    }
                    StateKind::Type2 => {
                        m(ar(x, y)) == ar(m(sq(ar(y, x), x)), m(y)) && m(sq(x, y)) == sq(m(ar(sq(y, x), x)), m(y))
                    }
                }
                && {
                    let (t, u) = (ar(m(x), m(y)), sq(m(x), m(y)));
                    m(t) == t && m(u) == u
                }
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateClassification {
    pub type1: bool,
    pub type2: bool,
    /// Type I with a normal kernel.
    pub normal1: bool,
    /// Type II with a normal kernel.
    pub normal2: bool,
    /// `None` when the derived order is not a meet-semilattice.
    pub is4: Option<bool>,
    pub kernel: Subset,
    pub image: Subset,
    pub kernel_normal: bool,
    pub kernel_commutative: bool,
    pub type1_report: CheckReport,
    pub type2_report: CheckReport,
}

pub fn classify_map(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<StateClassification> {
    let type1_report = check_state(a, mu, StateKind::Type1)?;
    let type2_report = check_state(a, mu, StateKind::Type2)?;
    let (type1, type2) = (type1_report.passed(), type2_report.passed());
    let kernel = mu.kernel(a.top());
    let kc = classify_subset(a, kernel)?;
    let order = derive_order(a);
    let is4 = structure_of(&order).meet_semilattice.then(|| {
        a.elements().all(|x| {
            a.elements().all(|y| {
                let w = order.meet(mu.apply(x), mu.apply(y)).expect("meet exists in a meet-semilattice");
                mu.apply(w) == w
            })
        })
    });
    Ok(StateClassification {
        type1,
        type2,
        normal1: type1 && kc.is_normal,
        normal2: type2 && kc.is_normal,
        is4,
        kernel,
        image: mu.image_set(),
        kernel_normal: kc.is_normal,
        kernel_commutative: kc.is_commutative,
        type1_report,
        type2_report,
    })
}

/// Every map of the requested kind, in lexicographic order of image vectors.
///
/// Candidates are built one coordinate at a time. Partial maps are abandoned
/// as soon as they move the top, break idempotence or break monotonicity on the
/// coordinates fixed so far; every complete candidate is then fully checked.
/// `budget` bounds the number of search nodes visited.
pub fn enumerate_states(a: &FiniteAlgebra, kind: SearchKind, budget: u64) -> Result<Vec<UnaryMap>> {
    require_pbck(a)?;
    let n = a.size();
    let mut image = vec![0; n];
    let mut out = Vec::new();
    let mut nodes = 0u64;
    extend_map(a, kind, &mut image, 0, &mut nodes, budget, &mut out)?;
    Ok(out)
}

/// Default node budget for [`enumerate_states`].
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

fn extend_map(
    a: &FiniteAlgebra,
    kind: SearchKind,
    image: &mut Vec<Elem>,
    k: usize,
    nodes: &mut u64,
    budget: u64,
    out: &mut Vec<UnaryMap>,
) -> Result<()> {
    let n = a.size();
    if k == n {
        let mu = UnaryMap(image.clone());
        let ok = match kind {
            SearchKind::Type1 => is_state_raw(a, &mu, StateKind::Type1),
            SearchKind::Type2 => is_state_raw(a, &mu, StateKind::Type2),
            SearchKind::Morphism => mu.is_idempotent() && is_endomorphism_raw(a, &mu),
        };
        if ok {
            out.push(mu);
        }
        return Ok(());
    }
    let candidates: Vec<Elem> = if k == a.top() { vec![a.top()] } else { (0..n).collect() };
    for v in candidates {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        image[k] = v;
        if consistent_prefix(a, image, k) {
            extend_map(a, kind, image, k + 1, nodes, budget, out)?;
        }
    }
    Ok(())
}

/// Checks idempotence and monotonicity constraints among coordinates `0..=k`.
fn consistent_prefix(a: &FiniteAlgebra, image: &[Elem], k: usize) -> bool {
    let v = image[k];
    if v < k && image[v] != v {
        return false;
    }
    if v != k && image[..k].contains(&k) {
        return false;
    }
    (0..k).all(|x| (!a.le(x, k) || a.le(image[x], v)) && (!a.le(k, x) || a.le(v, image[x])))
}

/// Lifts a normal type II state to the quotient by its kernel.
///
/// The lift must be well defined and must be both a normal type I and a normal
/// type II state on the quotient.
pub fn lift_to_quotient(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<(QuotientResult, UnaryMap)> {
    let class = classify_map(a, mu)?;
    if !class.normal2 {
        return Err(Error::PreconditionViolated("map is not a normal type II state".into()));
    }
    let q = quotient(a, class.kernel)?;
    let lifted = lift_map(a, mu, &q)?;
    let qc = classify_map(&q.quotient, &lifted)?;
    if !(qc.normal1 && qc.normal2) {
        return Err(Error::TheoremViolation("lifted state is not both normal type I and normal type II".into()));
    }
    Ok((q, lifted))
}

/// `x/H |-> mu(x)/H`, verified to be independent of representatives.
pub(crate) fn lift_map(a: &FiniteAlgebra, mu: &UnaryMap, q: &QuotientResult) -> Result<UnaryMap> {
    let mut image = Vec::with_capacity(q.blocks.len());
    for block in &q.blocks {
        let rep = block.least().expect("blocks are non-empty");
        let target = q.projection[mu.apply(rep)];
        if let Some(x) = block.iter().find(|&x| q.projection[mu.apply(x)] != target) {
            return Err(Error::WellDefinedness(format!(
                "lift depends on the representative: {} and {} lie in one block but their images do not",
                a.name(rep),
                a.name(x)
            )));
        }
        image.push(target);
    }
    Ok(UnaryMap(image))
}
