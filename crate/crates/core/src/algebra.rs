//! Finite algebras with two implication tables and a distinguished top element.
//!
//! A [`FiniteAlgebra`] is only a structurally valid pair of Cayley tables. Being a
//! pseudo BCK-algebra is a property that has to be checked explicitly (see
//! [`crate::axioms`]), so that broken tables can be loaded and reported on.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element of the carrier.
pub type Elem = usize;

/// Largest supported carrier, so that every subset fits in one `u64`.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    arrow: Vec<u8>,
    squiggle: Vec<u8>,
    top: u8,
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major `n * n` tables.
    pub fn new(names: Vec<String>, arrow: Vec<Elem>, squiggle: Vec<Elem>, top: Elem) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Structure("carrier must not be empty".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::SizeLimit { size: n, limit: MAX_CARRIER });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Structure(format!("invalid element name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Structure(format!("duplicate element name {name:?}")));
            }
        }
        if top >= n {
            return Err(Error::Structure(format!("top index {top} out of range")));
        }
        let arrow = pack_table("arrow", n, arrow)?;
        let squiggle = pack_table("squiggle", n, squiggle)?;
        Ok(Self { names, arrow, squiggle, top: top as u8 })
    }

    /// Builds an algebra whose elements are named by their index.
    pub fn from_indexed(n: usize, arrow: Vec<Elem>, squiggle: Vec<Elem>, top: Elem) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), arrow, squiggle, top)
    }

    /// A BCK-style algebra: `~>` is the same table as `->`.
    pub fn bck(names: Vec<String>, arrow: Vec<Elem>, top: Elem) -> Result<Self> {
        let squiggle = arrow.clone();
        Self::new(names, arrow, squiggle, top)
    }

    pub(crate) fn from_raw(names: Vec<String>, arrow: Vec<u8>, squiggle: Vec<u8>, top: u8) -> Self {
        debug_assert_eq!(arrow.len(), names.len() * names.len());
        debug_assert_eq!(squiggle.len(), names.len() * names.len());
        Self { names, arrow, squiggle, top }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top as Elem
    }

    #[inline]
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    /// `x -> y`
    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow[x * self.size() + y] as Elem
    }

    /// `x ~> y`
    #[inline]
    pub fn squiggle(&self, x: Elem, y: Elem) -> Elem {
        self.squiggle[x * self.size() + y] as Elem
    }

    #[inline]
    pub fn op(&self, side: Side, x: Elem, y: Elem) -> Elem {
        match side {
            Side::Arrow => self.arrow(x, y),
            Side::Squiggle => self.squiggle(x, y),
        }
    }

    /// `x <= y` in the order induced by `->`.
    #[inline]
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        self.arrow(x, y) == self.top()
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// Looks up an element by name, panicking if it does not exist. Meant for fixtures and tests.
    pub fn el(&self, name: &str) -> Elem {
        self.element(name).unwrap_or_else(|| panic!("no element named {name:?}"))
    }

    pub fn arrow_table(&self) -> Vec<Elem> {
        self.arrow.iter().map(|&v| v as Elem).collect()
    }

    pub fn squiggle_table(&self) -> Vec<Elem> {
        self.squiggle.iter().map(|&v| v as Elem).collect()
    }

    /// True when both implications coincide (the BCK case).
    pub fn tables_coincide(&self) -> bool {
        self.arrow == self.squiggle
    }

    pub(crate) fn raw_arrow(&self) -> &[u8] {
        &self.arrow
    }

    pub(crate) fn raw_squiggle(&self) -> &[u8] {
        &self.squiggle
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(Error::Structure("name count does not match carrier size".into()));
        }
        let arrow = self.arrow_table();
        let squiggle = self.squiggle_table();
        self = Self::new(names, arrow, squiggle, self.top())?;
        Ok(self)
    }

    /// Checks that `x` is an element of the carrier.
    pub fn check_elem(&self, x: Elem) -> Result<()> {
        if x < self.size() {
            Ok(())
        } else {
            Err(Error::InvalidPoint(x))
        }
    }

    /// The subalgebra carried by the elements of `keep`, in ascending order.
    ///
    /// Returns `None` if `keep` is not closed under both arrows or misses the top.
    pub fn restrict(&self, keep: &[Elem]) -> Option<FiniteAlgebra> {
        if !keep.contains(&self.top()) {
            return None;
        }
        let index = |v: Elem| keep.iter().position(|&k| k == v);
        let mut arrow = Vec::with_capacity(keep.len() * keep.len());
        let mut squiggle = Vec::with_capacity(keep.len() * keep.len());
        for &x in keep {
            for &y in keep {
                arrow.push(index(self.arrow(x, y))? as u8);
                squiggle.push(index(self.squiggle(x, y))? as u8);
            }
        }
        let names = keep.iter().map(|&k| self.names[k].clone()).collect();
        Some(Self::from_raw(names, arrow, squiggle, index(self.top())? as u8))
    }
}

fn pack_table(which: &str, n: usize, table: Vec<Elem>) -> Result<Vec<u8>> {
    if table.len() != n * n {
        return Err(Error::Structure(format!(
            "{which} table has {} entries, expected {}",
            table.len(),
            n * n
        )));
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            if v < n {
                Ok(v as u8)
            } else {
                Err(Error::Structure(format!(
                    "{which} entry at row {}, column {} is {v}, outside the carrier",
                    i / n,
                    i % n
                )))
            }
        })
        .collect()
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_algebra(self, None))
    }
}

/// Which of the two implications an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Arrow,
    Squiggle,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Arrow => Side::Squiggle,
            Side::Squiggle => Side::Arrow,
        }
    }
}

/// Iterated implication: `x ->^0 y = y`, `x ->^k y = x -> (x ->^(k-1) y)`.
pub fn iter_arrow(a: &FiniteAlgebra, x: Elem, y: Elem, k: usize, side: Side) -> Elem {
    (0..k).fold(y, |acc, _| a.op(side, x, acc))
}

/// Direct product with row-major pair encoding `i1 * n2 + i2` and no axiom checks.
///
/// [`crate::axioms::direct_product`] is the checked entry point.
pub fn product_tables(a1: &FiniteAlgebra, a2: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let (n1, n2) = (a1.size(), a2.size());
    let n = n1 * n2;
    if n > MAX_CARRIER {
        return Err(Error::SizeLimit { size: n, limit: MAX_CARRIER });
    }
    let pair = |i1: Elem, i2: Elem| (i1 * n2 + i2) as u8;
    let mut arrow = Vec::with_capacity(n * n);
    let mut squiggle = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / n2, x % n2);
        for y in 0..n {
            let (y1, y2) = (y / n2, y % n2);
            arrow.push(pair(a1.arrow(x1, y1), a2.arrow(x2, y2)));
            squiggle.push(pair(a1.squiggle(x1, y1), a2.squiggle(x2, y2)));
        }
    }
    let names = (0..n)
        .map(|x| format!("({},{})", a1.name(x / n2), a2.name(x % n2)))
        .collect();
    Ok(FiniteAlgebra::from_raw(names, arrow, squiggle, pair(a1.top(), a2.top())))
}
