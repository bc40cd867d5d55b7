//! Deductive systems: classification (plain, normal, commutative), enumeration,
//! generation, the congruence of a normal deductive system and its quotient.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::{is_pseudo_bck, require_pbck};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Suite, Witness, WitnessMode};
use crate::subset::Subset;

/// Largest carrier for which [`enumerate_ds`] scans all subsets.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsClassification {
    pub is_ds: bool,
    /// Only ever true when `is_ds` is.
    pub is_normal: bool,
    /// Only ever true when `is_ds` is.
    pub is_commutative: bool,
    pub report: CheckReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum DsFilter {
    #[default]
    All,
    Normal,
    Commutative,
}

fn pairs(n: usize) -> impl Iterator<Item = (Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn witness(tuple: Vec<Elem>, message: String) -> Witness {
    Witness { tuple, message }
}

/// Classifies `s` against the deductive-system, normality and commutativity clauses.
pub fn classify_subset(a: &FiniteAlgebra, s: Subset) -> Result<DsClassification> {
    classify_subset_with(a, s, WitnessMode::First)
}

pub fn classify_subset_with(a: &FiniteAlgebra, s: Subset, mode: WitnessMode) -> Result<DsClassification> {
    require_pbck(a)?;
    s.check_within(a.size())?;
    let n = a.size();
    let nm = |x: Elem| a.name(x).to_owned();
    let mut suite = Suite::new(a, "deductive-system", mode);

    let top_in = if s.contains(a.top()) {
        Vec::new()
    } else {
        vec![witness(vec![a.top()], format!("DS1: {} is not in the subset", nm(a.top())))]
    };
    let ds1 = suite.record("DS1", top_in);

    let mp = |side_is_arrow: bool, label: &str| -> Vec<Witness> {
        pairs(n)
            .filter_map(|(x, y)| {
                let xy = if side_is_arrow { a.arrow(x, y) } else { a.squiggle(x, y) };
                let sym = if side_is_arrow { "->" } else { "~>" };
                (s.contains(x) && s.contains(xy) && !s.contains(y)).then(|| {
                    witness(
                        vec![x, y],
                        format!("{label}: {} and {}{sym}{} are in the subset but {} is not", nm(x), nm(x), nm(y), nm(y)),
                    )
                })
            })
            .collect()
    };
    let ds2 = suite.record("DS2", mp(true, "DS2"));
    let ds2b = suite.record("DS2'", mp(false, "DS2'"));
    let is_ds = ds1 && ds2 && ds2b;

    let normal_w: Vec<Witness> = pairs(n)
        .filter(|&(x, y)| s.contains(a.arrow(x, y)) != s.contains(a.squiggle(x, y)))
        .map(|(x, y)| {
            let (inside, outside) = if s.contains(a.arrow(x, y)) { ("->", "~>") } else { ("~>", "->") };
            witness(
                vec![x, y],
                format!("normal: {x}{inside}{y} is in the subset but {x}{outside}{y} is not", x = nm(x), y = nm(y)),
            )
        })
        .collect();
    let normal = suite.record("normal", normal_w);

    let cds1_w: Vec<Witness> = pairs(n)
        .filter(|&(x, y)| s.contains(a.arrow(y, x)) && !s.contains(a.arrow(a.squiggle(a.arrow(x, y), y), x)))
        .map(|(x, y)| {
            witness(vec![x, y], format!("cds1: {y}->{x} is in the subset but (({x}->{y})~>{y})->{x} is not", x = nm(x), y = nm(y)))
        })
        .collect();
    let cds1 = suite.record("cds1", cds1_w);
    let cds2_w: Vec<Witness> = pairs(n)
        .filter(|&(x, y)| s.contains(a.squiggle(y, x)) && !s.contains(a.squiggle(a.arrow(a.squiggle(x, y), y), x)))
        .map(|(x, y)| {
            witness(vec![x, y], format!("cds2: {y}~>{x} is in the subset but (({x}~>{y})->{y})~>{x} is not", x = nm(x), y = nm(y)))
        })
        .collect();
    let cds2 = suite.record("cds2", cds2_w);

    Ok(DsClassification {
        is_ds,
        is_normal: is_ds && normal,
        is_commutative: is_ds && cds1 && cds2,
        report: suite.finish(),
    })
}

/// Unchecked membership tests used by enumeration.
pub(crate) fn is_ds_raw(a: &FiniteAlgebra, s: Subset) -> bool {
    s.contains(a.top())
        && pairs(a.size()).all(|(x, y)| {
            !s.contains(x) || s.contains(y) || (!s.contains(a.arrow(x, y)) && !s.contains(a.squiggle(x, y)))
        })
}

pub(crate) fn is_normal_raw(a: &FiniteAlgebra, s: Subset) -> bool {
    pairs(a.size()).all(|(x, y)| s.contains(a.arrow(x, y)) == s.contains(a.squiggle(x, y)))
}

pub(crate) fn is_commutative_raw(a: &FiniteAlgebra, s: Subset) -> bool {
    pairs(a.size()).all(|(x, y)| {
        (!s.contains(a.arrow(y, x)) || s.contains(a.arrow(a.squiggle(a.arrow(x, y), y), x)))
            && (!s.contains(a.squiggle(y, x)) || s.contains(a.squiggle(a.arrow(a.squiggle(x, y), y), x)))
    })
}

/// The three-condition characterization of commutative deductive systems:
/// `1` is in `D`; `z->(y->x)` and `z` in `D` give `((x->y)~>y)->x` in `D`;
/// `z~>(y~>x)` and `z` in `D` give `((x~>y)->y)~>x` in `D`.
pub fn classify_subset_alt_commutative(a: &FiniteAlgebra, s: Subset) -> Result<bool> {
    require_pbck(a)?;
    s.check_within(a.size())?;
    let n = a.size();
    if !s.contains(a.top()) {
        return Ok(false);
    }
    for z in s.iter() {
        for (x, y) in pairs(n) {
            if s.contains(a.arrow(z, a.arrow(y, x))) && !s.contains(a.arrow(a.squiggle(a.arrow(x, y), y), x)) {
                return Ok(false);
            }
            if s.contains(a.squiggle(z, a.squiggle(y, x))) && !s.contains(a.squiggle(a.arrow(a.squiggle(x, y), y), x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All deductive systems passing `filter`, in ascending bitmask order.
pub fn enumerate_ds(a: &FiniteAlgebra, filter: DsFilter) -> Result<Vec<Subset>> {
    require_pbck(a)?;
    let n = a.size();
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimit { size: n, limit: ENUMERATION_LIMIT });
    }
    let top_bit = 1u64 << a.top();
    Ok((0..1u64 << n)
        .filter(|m| m & top_bit != 0)
        .map(Subset)
        .filter(|&s| is_ds_raw(a, s))
        .filter(|&s| match filter {
            DsFilter::All => true,
            DsFilter::Normal => is_normal_raw(a, s),
            DsFilter::Commutative => is_commutative_raw(a, s),
        })
        .collect())
}

/// The smallest deductive system containing `x`.
pub fn generated_ds(a: &FiniteAlgebra, x: Subset) -> Result<Subset> {
    require_pbck(a)?;
    x.check_within(a.size())?;
    Ok(closure(a, x))
}

pub(crate) fn closure(a: &FiniteAlgebra, x: Subset) -> Subset {
    let mut d = x.with(a.top());
    loop {
        let mut grown = d;
        for u in d.iter() {
            for y in a.elements() {
                if d.contains(a.arrow(u, y)) || d.contains(a.squiggle(u, y)) {
                    grown.insert(y);
                }
            }
        }
        if grown == d {
            return d;
        }
        d = grown;
    }
}

pub fn is_simple(a: &FiniteAlgebra) -> Result<bool> {
    Ok(enumerate_ds(a, DsFilter::All)?.len() == 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: FiniteAlgebra,
    /// `projection[x]` is the quotient element (block index) of `x`.
    pub projection: Vec<Elem>,
    pub blocks: Vec<Subset>,
}

impl QuotientResult {
    /// Elements of the source sent to the quotient's top.
    pub fn kernel(&self) -> Subset {
        let top = self.quotient.top();
        self.projection.iter().enumerate().filter(|&(_, &b)| b == top).map(|(x, _)| x).collect()
    }
}

/// The quotient by a normal deductive system `h`.
///
/// Blocks are the classes of `x ~ y iff x->y, y->x in h`, sorted by minimum
/// member. The block of the top is named after the source top; every other
/// block is named after its minimum member. Operations on blocks are checked
/// for independence from the choice of representatives.
pub fn quotient(a: &FiniteAlgebra, h: Subset) -> Result<QuotientResult> {
    require_pbck(a)?;
    h.check_within(a.size())?;
    if !is_ds_raw(a, h) {
        return Err(Error::NotDeductiveSystem);
    }
    if let Some((x, y)) = pairs(a.size()).find(|&(x, y)| h.contains(a.arrow(x, y)) != h.contains(a.squiggle(x, y))) {
        return Err(Error::NotNormal { x, y });
    }
    let n = a.size();
    let related = |x: Elem, y: Elem| h.contains(a.arrow(x, y)) && h.contains(a.arrow(y, x));

    let mut projection = vec![usize::MAX; n];
    let mut blocks: Vec<Subset> = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let block: Subset = (x..n).filter(|&y| related(x, y)).collect();
        for y in block.iter() {
            if projection[y] != usize::MAX {
                return Err(Error::WellDefinedness(format!(
                    "relation induced by {} is not transitive at {}",
                    h.display(a),
                    a.name(y)
                )));
            }
            projection[y] = blocks.len();
        }
        blocks.push(block);
    }

    let m = blocks.len();
    let mut arrow = vec![0; m * m];
    let mut squiggle = vec![0; m * m];
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            for (table, op) in [(&mut arrow, 0), (&mut squiggle, 1)] {
                let eval = |x: Elem, y: Elem| projection[if op == 0 { a.arrow(x, y) } else { a.squiggle(x, y) }];
                let first = eval(bi.least().unwrap(), bj.least().unwrap());
                for x in bi.iter() {
                    for y in bj.iter() {
                        if eval(x, y) != first {
                            return Err(Error::WellDefinedness(format!(
                                "quotient operation depends on representatives at ({}, {})",
                                a.name(x),
                                a.name(y)
                            )));
                        }
                    }
                }
                table[i * m + j] = first;
            }
        }
    }

    let top = projection[a.top()];
    if blocks[top] != h {
        return Err(Error::TheoremViolation(format!("block of the top differs from {}", h.display(a))));
    }
    let names = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| if i == top { a.name(a.top()).to_owned() } else { a.name(b.least().unwrap()).to_owned() })
        .collect();
    let quotient = FiniteAlgebra::new(names, arrow, squiggle, top)?;
    if !is_pseudo_bck(&quotient) {
        return Err(Error::TheoremViolation("quotient is not a pseudo BCK-algebra".into()));
    }
    Ok(QuotientResult { quotient, projection, blocks })
}
