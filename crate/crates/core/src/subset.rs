use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// A subset of the carrier, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: Elem) -> Subset {
        Subset(1u64 << x)
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(elems: I) -> Subset {
        elems.into_iter().fold(Subset::EMPTY, |s, x| s.with(x))
    }

    /// Builds a subset from element names, failing on unknown names.
    pub fn from_names<S: AsRef<str>>(a: &FiniteAlgebra, names: &[S]) -> Result<Subset> {
        names.iter().try_fold(Subset::EMPTY, |s, name| {
            let name = name.as_ref();
            a.element(name)
                .map(|x| s.with(x))
                .ok_or_else(|| Error::Structure(format!("unknown element {name:?}")))
        })
    }

    #[inline]
    pub fn contains(self, x: Elem) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[inline]
    #[must_use]
    pub fn with(self, x: Elem) -> Subset {
        Subset(self.0 | 1u64 << x)
    }

    #[inline]
    pub fn insert(&mut self, x: Elem) -> bool {
        let fresh = !self.contains(x);
        self.0 |= 1u64 << x;
        fresh
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn least(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as Elem;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// Fails if the subset mentions indices outside a carrier of size `n`.
    pub fn check_within(self, n: usize) -> Result<()> {
        if self.is_subset_of(Subset::full(n)) {
            Ok(())
        } else {
            Err(Error::Structure(format!("subset {:#x} exceeds a carrier of size {n}", self.0)))
        }
    }

    /// Renders as `{1,a,b}` using the algebra's element names.
    pub fn display(self, a: &FiniteAlgebra) -> String {
        let names: Vec<&str> = self.iter().map(|x| a.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn names(self, a: &FiniteAlgebra) -> Vec<String> {
        self.iter().map(|x| a.name(x).to_owned()).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Elem> for Subset {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        Subset::from_elems(iter)
    }
}
