use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::require_pbck;
use crate::error::Result;

/// The relation `x <= y iff x -> y = 1`, read off the arrow table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
    pub linear: bool,
    pub least: Option<Elem>,
}

impl OrderRelation {
    #[inline]
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lower_bounds(&self, x: Elem, y: Elem) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).filter(move |&z| self.le(z, x) && self.le(z, y))
    }

    pub fn upper_bounds(&self, x: Elem, y: Elem) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).filter(move |&z| self.le(x, z) && self.le(y, z))
    }

    /// Greatest lower bound of `{x, y}`, if one exists.
    pub fn meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        let lower: Vec<Elem> = self.lower_bounds(x, y).collect();
        lower.iter().copied().find(|&g| lower.iter().all(|&l| self.le(l, g)))
    }

    /// Least upper bound of `{x, y}`, if one exists.
    pub fn join(&self, x: Elem, y: Elem) -> Option<Elem> {
        let upper: Vec<Elem> = self.upper_bounds(x, y).collect();
        upper.iter().copied().find(|&g| upper.iter().all(|&u| self.le(g, u)))
    }
}

pub fn derive_order(a: &FiniteAlgebra) -> OrderRelation {
    let n = a.size();
    let leq: Vec<bool> = (0..n * n).map(|i| a.le(i / n, i % n)).collect();
    let at = |x: Elem, y: Elem| leq[x * n + y];
    let linear = (0..n).all(|x| (0..n).all(|y| at(x, y) || at(y, x)));
    let lower_bounds: Vec<Elem> = (0..n).filter(|&z| (0..n).all(|x| at(z, x))).collect();
    let least = match lower_bounds.as_slice() {
        [only] => Some(*only),
        _ => None,
    };
    OrderRelation { n, leq, linear, least }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureKind {
    pub linear: bool,
    pub meet_semilattice: bool,
    pub join_semilattice: bool,
    pub lattice: bool,
}

pub fn structure_kind(a: &FiniteAlgebra) -> Result<StructureKind> {
    require_pbck(a)?;
    Ok(structure_of(&derive_order(a)))
}

pub(crate) fn structure_of(order: &OrderRelation) -> StructureKind {
    let n = order.size();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let meet_semilattice = pairs().all(|(x, y)| order.meet(x, y).is_some());
    let join_semilattice = pairs().all(|(x, y)| order.join(x, y).is_some());
    StructureKind {
        linear: order.linear,
        meet_semilattice,
        join_semilattice,
        lattice: meet_semilattice && join_semilattice,
    }
}

/// Meet in the derived order of a pseudo BCK-meet-semilattice; `None` when the glb does not exist.
pub fn meet(a: &FiniteAlgebra, x: Elem, y: Elem) -> Option<Elem> {
    derive_order(a).meet(x, y)
}
