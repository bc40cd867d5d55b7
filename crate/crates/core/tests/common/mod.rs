//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's own axiom checker or search: tables are
//! plain `Vec<usize>` and every property is evaluated directly from its
//! defining identity.

#![allow(dead_code)]

use pbck::{FiniteAlgebra, UnaryMap};

/// A table pair on `0..n` with top `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Raw {
    pub n: usize,
    pub ar: Vec<usize>,
    pub sq: Vec<usize>,
}

impl Raw {
    pub fn of(a: &FiniteAlgebra) -> Raw {
        assert_eq!(a.top(), a.size() - 1, "oracle tables keep the top last");
        Raw { n: a.size(), ar: a.arrow_table(), sq: a.squiggle_table() }
    }

    pub fn algebra(&self) -> FiniteAlgebra {
        FiniteAlgebra::from_indexed(self.n, self.ar.clone(), self.sq.clone(), self.n - 1).unwrap()
    }

    fn a(&self, x: usize, y: usize) -> usize {
        self.ar[x * self.n + y]
    }

    fn s(&self, x: usize, y: usize) -> usize {
        self.sq[x * self.n + y]
    }

    /// psBCK1'-psBCK6' evaluated literally.
    pub fn is_pbck(&self) -> bool {
        let (n, t) = (self.n, self.n - 1);
        for x in 0..n {
            if self.a(t, x) != x || self.s(t, x) != x || self.a(x, t) != t {
                return false;
            }
            for y in 0..n {
                if x != y && self.a(x, y) == t && self.a(y, x) == t {
                    return false;
                }
                for z in 0..n {
                    if self.s(self.a(x, y), self.s(self.a(y, z), self.a(x, z))) != t {
                        return false;
                    }
                    if self.a(self.s(x, y), self.a(self.s(y, z), self.s(x, z))) != t {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(x->y)~>y = (y->x)~>x` and `(x~>y)->y = (y~>x)->x`.
    pub fn is_def_commutative(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.s(self.a(x, y), y) == self.s(self.a(y, x), x) && self.a(self.s(x, y), y) == self.a(self.s(y, x), x)
            })
        })
    }

    pub fn relabel(&self, p: &[usize]) -> Raw {
        let n = self.n;
        let mut ar = vec![0; n * n];
        let mut sq = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                ar[p[x] * n + p[y]] = p[self.a(x, y)];
                sq[p[x] * n + p[y]] = p[self.s(x, y)];
            }
        }
        Raw { n, ar, sq }
    }

    /// Least relabelling over permutations fixing the top, compared on the
    /// concatenated arrow and squiggle tables.
    pub fn canonical(&self) -> Raw {
        perms_fixing_last(self.n).iter().map(|p| self.relabel(p)).min_by(|l, r| (&l.ar, &l.sq).cmp(&(&r.ar, &r.sq))).unwrap()
    }
}

pub fn perms_fixing_last(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            let mut p = prefix.clone();
            p.push(m);
            out.push(p);
            return;
        }
        for i in 0..m {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, m, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n - 1], n - 1, &mut out);
    out
}

/// Counts through every assignment of `cells` slots with values in `0..n`.
fn odometer(cells: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    let mut v = vec![0; cells];
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == cells {
                return;
            }
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Every table pair with `1->x = 1~>x = x` and `x->1 = 1` already in place and
/// every other cell free: `n^((n-1)^2) * n^(n(n-1))` candidates.
pub fn naive_candidates(n: usize, mut visit: impl FnMut(&Raw)) {
    let t = n - 1;
    let ar_free: Vec<usize> = (0..t).flat_map(|x| (0..t).map(move |y| x * n + y)).collect();
    let sq_free: Vec<usize> = (0..t).flat_map(|x| (0..n).map(move |y| x * n + y)).collect();
    let mut base = Raw { n, ar: vec![0; n * n], sq: vec![0; n * n] };
    for x in 0..n {
        base.ar[t * n + x] = x;
        base.sq[t * n + x] = x;
        base.ar[x * n + t] = t;
    }
    odometer(ar_free.len(), n, |av| {
        let mut r = base.clone();
        for (&i, &v) in ar_free.iter().zip(av) {
            r.ar[i] = v;
        }
        odometer(sq_free.len(), n, |sv| {
            for (&i, &v) in sq_free.iter().zip(sv) {
                r.sq[i] = v;
            }
            visit(&r);
        });
    });
}

/// Filter-only enumeration: every naive candidate passing [`Raw::is_pbck`].
pub fn naive_models(n: usize) -> Vec<Raw> {
    let mut out = Vec::new();
    naive_candidates(n, |r| {
        if r.is_pbck() {
            out.push(r.clone());
        }
    });
    out.sort();
    out
}

/// Enumeration for sizes where [`naive_models`] is out of reach. Besides the
/// top row and column, the diagonal (`x->x = x~>x = 1`) is fixed, each table
/// is screened on its own for antisymmetry, and pairs must agree on where
/// they equal the top. Every fixed cell and screen is a consequence of the
/// axioms, so no model is lost.
pub fn seeded_models(n: usize) -> Vec<Raw> {
    let t = n - 1;
    let free: Vec<usize> = (0..t).flat_map(|x| (0..t).filter(move |&y| y != x).map(move |y| x * n + y)).collect();
    let mut base = vec![0; n * n];
    for x in 0..n {
        base[t * n + x] = x;
        base[x * n + t] = t;
        base[x * n + x] = t;
    }
    let mut halves = Vec::new();
    odometer(free.len(), n, |v| {
        let mut tab = base.clone();
        for (&i, &val) in free.iter().zip(v) {
            tab[i] = val;
        }
        let antisym = (0..n).all(|x| (0..n).all(|y| x == y || tab[x * n + y] != t || tab[y * n + x] != t));
        if antisym {
            halves.push(tab);
        }
    });
    let mut out = Vec::new();
    for ar in &halves {
        for sq in &halves {
            if ar.iter().zip(sq).all(|(a, s)| (*a == t) == (*s == t)) {
                let r = Raw { n, ar: ar.clone(), sq: sq.clone() };
                if r.is_pbck() {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

/// One representative (the canonical form) per isomorphism class.
pub fn iso_classes(models: &[Raw]) -> Vec<Raw> {
    let mut c: Vec<Raw> = models.iter().map(Raw::canonical).collect();
    c.sort();
    c.dedup();
    c
}

/// All `n^n` maps on `0..n`.
pub fn all_maps(n: usize) -> Vec<UnaryMap> {
    let mut out = Vec::with_capacity(n.pow(n as u32));
    odometer(n, n, |v| out.push(UnaryMap::new(v.to_vec())));
    out
}

/// Pseudo BCK models of size 1..=4 from the library search, up to isomorphism.
pub fn small_models(max: usize) -> Vec<FiniteAlgebra> {
    (1..=max).flat_map(|n| pbck::enumerate_models(&pbck::SearchConfig::new(n).up_to_iso(true)).unwrap()).collect()
}
