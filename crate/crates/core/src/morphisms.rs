//! State-morphism operators: idempotent endomorphisms, their kernels, the
//! deductive systems they preserve, and their quotients.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::require_pbck;
use crate::commutativity::is_commutative;
use crate::deduction::{is_commutative_raw, is_ds_raw, is_normal_raw, quotient, QuotientResult};
use crate::error::{Error, Result};
use crate::order::derive_order;
use crate::report::{eq, CheckReport, Law, Suite, Witness, WitnessMode};
use crate::states::{classify_map, enumerate_states, lift_map, SearchKind, UnaryMap, DEFAULT_STATE_BUDGET};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub is_endomorphism: bool,
    pub is_idempotent: bool,
    /// Always `is_endomorphism && is_idempotent`.
    pub is_state_morphism: bool,
    pub kernel: Subset,
    pub report: CheckReport,
}

pub fn is_state_morphism(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<MorphismReport> {
    require_pbck(a)?;
    mu.check_for(a)?;
    let (ar, sq, m, top) = (|x, y| a.arrow(x, y), |x, y| a.squiggle(x, y), |x| mu.apply(x), a.top());
    let mut s = Suite::new(a, "state-morphism", WitnessMode::First);
    let hom_ar = s.clause(
        "hom->",
        "xy",
        &[Law::new("mu(x->y)", "=", "mu(x)->mu(y)", &|v| eq(m(ar(v[0], v[1])), ar(m(v[0]), m(v[1]))))],
    );
    let hom_sq = s.clause(
        "hom~>",
        "xy",
        &[Law::new("mu(x~>y)", "=", "mu(x)~>mu(y)", &|v| eq(m(sq(v[0], v[1])), sq(m(v[0]), m(v[1]))))],
    );
    let hom_top = s.clause("hom1", "", &[Law::new("mu(1)", "=", "1", &|_| eq(m(top), top))]);
    let idem = s.clause("idempotent", "x", &[Law::new("mu(mu(x))", "=", "mu(x)", &|v| eq(m(m(v[0])), m(v[0])))]);
    let is_endomorphism = hom_ar && hom_sq && hom_top;
    Ok(MorphismReport {
        is_endomorphism,
        is_idempotent: idem,
        is_state_morphism: is_endomorphism && idem,
        kernel: mu.kernel(top),
        report: s.finish(),
    })
}

pub(crate) fn is_endomorphism_raw(a: &FiniteAlgebra, mu: &UnaryMap) -> bool {
    let m = |x| mu.apply(x);
    m(a.top()) == a.top()
        && a.elements().all(|x| {
            a.elements()
                .all(|y| m(a.arrow(x, y)) == a.arrow(m(x), m(y)) && m(a.squiggle(x, y)) == a.squiggle(m(x), m(y)))
        })
}

pub(crate) fn is_sm_raw(a: &FiniteAlgebra, mu: &UnaryMap) -> bool {
    mu.is_idempotent() && is_endomorphism_raw(a, mu)
}

fn require_sm(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<()> {
    require_pbck(a)?;
    mu.check_for(a)?;
    if is_sm_raw(a, mu) {
        Ok(())
    } else {
        Err(Error::NotStateMorphism)
    }
}

fn require_ds(a: &FiniteAlgebra, d: Subset) -> Result<()> {
    d.check_within(a.size())?;
    if is_ds_raw(a, d) {
        Ok(())
    } else {
        Err(Error::NotDeductiveSystem)
    }
}

/// Compares `Ker(mu)` with `{mu(x)->x}`, `{x->mu(x)}`, `{mu(x)~>x}` and `{x~>mu(x)}`,
/// and checks that a trivial kernel forces `mu` to be the identity.
///
/// Only the `mu(x)->x` and `mu(x)~>x` forms always equal the kernel. The sets
/// `{x->mu(x)}` and `{x~>mu(x)}` are always contained in it but can be
/// smaller: on a bounded algebra the map sending `0` to `0` and everything
/// else to `1` can be a state-morphism, and then both sets are `{1}`.
pub fn kernel_characterizations(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<CheckReport> {
    require_sm(a, mu).map_err(|e| match e {
        Error::NotStateMorphism => Error::PreconditionViolated("map is not a state-morphism".into()),
        other => other,
    })?;
    let kernel = mu.kernel(a.top());
    let mut s = Suite::new(a, "kernel", WitnessMode::First);
    let forms: [(&str, &dyn Fn(Elem) -> Elem); 4] = [
        ("mu(x)->x", &|x| a.arrow(mu.apply(x), x)),
        ("x->mu(x)", &|x| a.arrow(x, mu.apply(x))),
        ("mu(x)~>x", &|x| a.squiggle(mu.apply(x), x)),
        ("x~>mu(x)", &|x| a.squiggle(x, mu.apply(x))),
    ];
    for (label, f) in forms {
        let set: Subset = a.elements().map(f).collect();
        let witnesses = if set == kernel {
            Vec::new()
        } else {
            vec![Witness {
                tuple: Vec::new(),
                message: format!("Ker = {{{label}}}: {} differs from {}", set.display(a), kernel.display(a)),
            }]
        };
        s.record(&format!("Ker = {{{label}}}"), witnesses);
    }
    let trivial_ok = kernel != Subset::singleton(a.top()) || *mu == UnaryMap::identity(a.size());
    let w = if trivial_ok {
        Vec::new()
    } else {
        vec![Witness { tuple: Vec::new(), message: "(2): kernel is {1} but the map is not the identity".into() }]
    };
    s.record("(2)", w);
    Ok(s.finish())
}

/// Whether `mu(d)` is contained in `d`.
pub fn mu_state_ds(a: &FiniteAlgebra, mu: &UnaryMap, d: Subset) -> Result<bool> {
    require_sm(a, mu)?;
    require_ds(a, d)?;
    Ok(mu.image_of(d).is_subset_of(d))
}

/// `mu^{-1}(d)`, after confirming the preimage theorem on this instance:
/// injective iff trivial kernel; the preimage is a deductive system containing
/// the kernel; it is normal when `d` is and commutative when `d` is.
pub fn preimage_ds(a: &FiniteAlgebra, mu: &UnaryMap, d: Subset) -> Result<Subset> {
    require_sm(a, mu)?;
    require_ds(a, d)?;
    let pre = mu.preimage_of(d);
    let kernel = mu.kernel(a.top());
    let violation = |clause: &str| Err(Error::TheoremViolation(format!("preimage clause {clause} fails for {}", d.display(a))));
    let injective = mu.image_set().len() == a.size();
    if injective != (kernel == Subset::singleton(a.top())) {
        return violation("(1)");
    }
    if !is_ds_raw(a, pre) || !kernel.is_subset_of(pre) {
        return violation("(2)");
    }
    if is_normal_raw(a, d) && !is_normal_raw(a, pre) {
        return violation("(3)");
    }
    if is_commutative_raw(a, d) && !is_commutative_raw(a, pre) {
        return violation("(4)");
    }
    if image_clause(a, mu, d)? == Some(false) {
        return violation("(5)");
    }
    Ok(pre)
}

/// For a surjective `mu` and a `mu`-state deductive system `d`: whether `mu(d)` and
/// `mu(mu(d))` are again `mu`-state deductive systems. `None` when `mu` is not
/// surjective or `d` is not a `mu`-state deductive system.
pub fn image_clause(a: &FiniteAlgebra, mu: &UnaryMap, d: Subset) -> Result<Option<bool>> {
    require_sm(a, mu)?;
    require_ds(a, d)?;
    if !mu.is_surjective() || !mu.image_of(d).is_subset_of(d) {
        return Ok(None);
    }
    let is_sds = |s: Subset| is_ds_raw(a, s) && mu.image_of(s).is_subset_of(s);
    let once = mu.image_of(d);
    Ok(Some(is_sds(once) && is_sds(mu.image_of(once))))
}

/// Quotient by `Ker(mu)` together with the induced map on blocks.
///
/// The induced map is checked to be a state-morphism, and `pi . mu = pi` is
/// checked pointwise.
pub fn quotient_sm(a: &FiniteAlgebra, mu: &UnaryMap) -> Result<(QuotientResult, UnaryMap)> {
    require_sm(a, mu).map_err(|e| match e {
        Error::NotStateMorphism => Error::PreconditionViolated("map is not a state-morphism".into()),
        other => other,
    })?;
    let q = quotient(a, mu.kernel(a.top()))?;
    let lifted = lift_map(a, mu, &q)?;
    if !is_sm_raw(&q.quotient, &lifted) {
        return Err(Error::TheoremViolation("induced map on the quotient is not a state-morphism".into()));
    }
    if let Some(x) = a.elements().find(|&x| q.projection[mu.apply(x)] != q.projection[x]) {
        return Err(Error::TheoremViolation(format!("pi(mu({0})) differs from pi({0})", a.name(x))));
    }
    Ok((q, lifted))
}

/// On a linearly ordered algebra: every normal type II state is a state-morphism,
/// and, when the algebra is also commutative, every state of either type is.
pub fn check_linear_theorems(a: &FiniteAlgebra) -> Result<CheckReport> {
    require_pbck(a)?;
    if !derive_order(a).linear {
        return Err(Error::NotLinear);
    }
    let mut s = Suite::new(a, "linear", WitnessMode::First);
    let type2 = enumerate_states(a, SearchKind::Type2, DEFAULT_STATE_BUDGET)?;
    let mut clause1 = Vec::new();
    for mu in &type2 {
        if classify_map(a, mu)?.normal2 && !is_sm_raw(a, mu) {
            clause1.push(map_witness(a, mu, "normal type II state is not a state-morphism"));
        }
    }
    s.record("normal-type2-is-sm", clause1);
    if is_commutative(a) {
        let mut states = enumerate_states(a, SearchKind::Type1, DEFAULT_STATE_BUDGET)?;
        states.extend(type2);
        let clause2 = states
            .iter()
            .filter(|mu| !is_sm_raw(a, mu))
            .map(|mu| map_witness(a, mu, "state is not a state-morphism"))
            .collect();
        s.record("state-is-sm", clause2);
    }
    Ok(s.finish())
}

fn map_witness(a: &FiniteAlgebra, mu: &UnaryMap, what: &str) -> Witness {
    let shown: Vec<&str> = mu.as_slice().iter().map(|&y| a.name(y)).collect();
    Witness { tuple: mu.as_slice().to_vec(), message: format!("{what}: [{}]", shown.join(" ")) }
}

/// `(x, y) |-> (x, x)` and `(x, y) |-> (y, y)` on the square of an `n`-element algebra.
pub fn diagonal_projections(n: usize) -> (UnaryMap, UnaryMap) {
    let first = (0..n * n).map(|p| (p / n) * n + p / n).collect();
    let second = (0..n * n).map(|p| (p % n) * n + p % n).collect();
    (UnaryMap::new(first), UnaryMap::new(second))
}

/// `x |-> (x->0)~>0` on a bounded algebra with least element `0`.
pub fn double_negation(a: &FiniteAlgebra) -> Result<UnaryMap> {
    require_pbck(a)?;
    let zero = derive_order(a)
        .least
        .ok_or_else(|| Error::PreconditionViolated("algebra has no least element".into()))?;
    Ok(UnaryMap::new(a.elements().map(|x| a.squiggle(a.arrow(x, zero), zero)).collect()))
}
