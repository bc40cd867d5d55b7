//! Exhaustive enumeration of small pseudo BCK-algebras.
//!
//! The top is fixed at `size - 1`. Row and column of the top and the diagonal
//! are forced (`1->x = 1~>x = x`, `x->1 = x~>1 = 1`, `x->x = x~>x = 1`), and
//! the remaining cells are filled in row-major order, each arrow cell followed
//! by its squiggle partner. After every assignment the partial tables are
//! tested against every axiom instance whose value is already determined.
//! Every emitted table pair is also fully re-checked.

use serde::Serialize;

use crate::algebra::{FiniteAlgebra, MAX_CARRIER};
use crate::axioms::is_pseudo_bck;
use crate::commutativity::satisfies_def;
use crate::error::{Error, Result};

pub const MAX_SEARCH_SIZE: usize = 5;
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub size: usize,
    pub commutative_only: bool,
    pub up_to_iso: bool,
    pub node_budget: u64,
}

impl SearchConfig {
    pub fn new(size: usize) -> Self {
        Self { size, commutative_only: false, up_to_iso: false, node_budget: DEFAULT_NODE_BUDGET }
    }

    pub fn up_to_iso(mut self, yes: bool) -> Self {
        self.up_to_iso = yes;
        self
    }

    pub fn commutative_only(mut self, yes: bool) -> Self {
        self.commutative_only = yes;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.size == 0 || self.size > MAX_SEARCH_SIZE.min(MAX_CARRIER) {
            return Err(Error::SizeLimit { size: self.size, limit: MAX_SEARCH_SIZE });
        }
        if self.node_budget == 0 {
            return Err(Error::Structure("node budget must be positive".into()));
        }
        Ok(())
    }
}

/// Element names used for searched models: `a, b, c, d` then `1` for the top.
pub fn search_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i + 1 == n { "1".to_owned() } else { ((b'a' + i as u8) as char).to_string() })
        .collect()
}

/// Calls `visit` on every model in emission order and returns how many there were.
pub fn for_each_model<F: FnMut(&FiniteAlgebra)>(cfg: &SearchConfig, mut visit: F) -> Result<u64> {
    cfg.validate()?;
    let n = cfg.size;
    let top = (n - 1) as u8;
    let mut ar = vec![UNSET; n * n];
    let mut sq = vec![UNSET; n * n];
    for x in 0..n {
        ar[(n - 1) * n + x] = x as u8;
        sq[(n - 1) * n + x] = x as u8;
        ar[x * n + n - 1] = top;
        sq[x * n + n - 1] = top;
        ar[x * n + x] = top;
        sq[x * n + x] = top;
    }
    // Free cells, each arrow cell immediately followed by the squiggle cell.
    let mut cells = Vec::new();
    for x in 0..n - 1 {
        for y in 0..n - 1 {
            if x != y {
                cells.push((false, x * n + y));
                cells.push((true, x * n + y));
            }
        }
    }
    let perms = if cfg.up_to_iso { permutations_fixing_last(n) } else { Vec::new() };
    let mut st = State { n, top, ar, sq, cells, nodes: 0, budget: cfg.node_budget, count: 0 };
    let names = search_names(n);
    let mut emit = |ar: &[u8], sq: &[u8]| -> bool {
        if cfg.up_to_iso && !is_canonical_tables(n, ar, sq, &perms) {
            return false;
        }
        let a = FiniteAlgebra::from_raw(names.clone(), ar.to_vec(), sq.to_vec(), top);
        if !is_pseudo_bck(&a) || (cfg.commutative_only && !satisfies_def(&a)) {
            return false;
        }
        visit(&a);
        true
    };
    st.fill(0, &mut emit)?;
    Ok(st.count)
}

pub fn enumerate_models(cfg: &SearchConfig) -> Result<Vec<FiniteAlgebra>> {
    let mut out = Vec::new();
    for_each_model(cfg, |a| out.push(a.clone()))?;
    Ok(out)
}

pub fn count_models(cfg: &SearchConfig) -> Result<u64> {
    for_each_model(cfg, |_| {})
}

struct State {
    n: usize,
    top: u8,
    ar: Vec<u8>,
    sq: Vec<u8>,
    cells: Vec<(bool, usize)>,
    nodes: u64,
    budget: u64,
    count: u64,
}

impl State {
    fn fill(&mut self, k: usize, emit: &mut dyn FnMut(&[u8], &[u8]) -> bool) -> Result<()> {
        if k == self.cells.len() {
            if emit(&self.ar, &self.sq) {
                self.count += 1;
            }
            return Ok(());
        }
        let (squiggle, idx) = self.cells[k];
        for v in 0..self.n as u8 {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            if squiggle {
                self.sq[idx] = v;
            } else {
                self.ar[idx] = v;
            }
            if self.consistent() {
                self.fill(k + 1, emit)?;
            }
        }
        if squiggle {
            self.sq[idx] = UNSET;
        } else {
            self.ar[idx] = UNSET;
        }
        Ok(())
    }

    /// Whether no axiom instance with fully determined value is violated.
    fn consistent(&self) -> bool {
        let (n, top) = (self.n, self.top);
        let ar = |x: u8, y: u8| if x == UNSET || y == UNSET { UNSET } else { self.ar[x as usize * n + y as usize] };
        let sq = |x: u8, y: u8| if x == UNSET || y == UNSET { UNSET } else { self.sq[x as usize * n + y as usize] };
        let els = 0..n as u8;
        for x in els.clone() {
            for y in els.clone() {
                let (a, s) = (ar(x, y), sq(x, y));
                if a != UNSET && s != UNSET && (a == top) != (s == top) {
                    return false;
                }
                if x != y && a == top && ar(y, x) == top {
                    return false;
                }
                for z in els.clone() {
                    let r1 = sq(a, sq(ar(y, z), ar(x, z)));
                    if r1 != UNSET && r1 != top {
                        return false;
                    }
                    let r2 = ar(s, ar(sq(y, z), sq(x, z)));
                    if r2 != UNSET && r2 != top {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All permutations of `0..n` that fix `n - 1`.
fn permutations_fixing_last(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    permute(&mut p, 0, n.saturating_sub(1), &mut out);
    out
}

fn permute(p: &mut Vec<u8>, k: usize, m: usize, out: &mut Vec<Vec<u8>>) {
    if k >= m {
        out.push(p.clone());
        return;
    }
    for i in k..m {
        p.swap(k, i);
        permute(p, k + 1, m, out);
        p.swap(k, i);
    }
}

/// The table pair relabelled by `p` (element `x` becomes `p[x]`).
fn relabel(n: usize, t: &[u8], p: &[u8]) -> Vec<u8> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[p[x] as usize * n + p[y] as usize] = p[t[x * n + y] as usize];
        }
    }
    out
}

fn is_canonical_tables(n: usize, ar: &[u8], sq: &[u8], perms: &[Vec<u8>]) -> bool {
    perms.iter().all(|p| {
        let (pa, ps) = (relabel(n, ar, p), relabel(n, sq, p));
        (ar, sq) <= (pa.as_slice(), ps.as_slice())
    })
}

/// The lexicographically least relabelling (fixing the top, which must be the
/// last element) of the concatenated arrow and squiggle tables.
pub fn canonical_form(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let n = a.size();
    if a.top() != n - 1 {
        return Err(Error::PreconditionViolated("canonical form needs the top as the last element".into()));
    }
    let (ar, sq) = (a.raw_arrow(), a.raw_squiggle());
    let best = permutations_fixing_last(n)
        .into_iter()
        .map(|p| (relabel(n, ar, &p), relabel(n, sq, &p)))
        .min()
        .expect("identity permutation is always present");
    Ok(FiniteAlgebra::from_raw(search_names(n), best.0, best.1, (n - 1) as u8))
}
