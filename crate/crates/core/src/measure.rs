//! Measures: non-negative valuations with `m(x -> y) = m(x ~> y) = m(y) - m(x)`
//! whenever `y <= x`, in exact rational arithmetic.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::require_pbck;
use crate::commutativity::is_commutative;
use crate::deduction::{classify_subset, quotient};
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    values: Vec<BigRational>,
}

impl Measure {
    pub fn new(values: Vec<BigRational>) -> Self {
        Self { values }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        Self::new(values.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![BigRational::zero(); n])
    }

    pub fn value(&self, x: Elem) -> &BigRational {
        &self.values[x]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Every comparable pair `(x, y)` with `y <= x` that breaks the measure identity,
/// in lexicographic order.
pub fn measure_violations(a: &FiniteAlgebra, m: &Measure) -> Vec<(Elem, Elem)> {
    if m.values.len() != a.size() {
        return Vec::new();
    }
    a.elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| a.le(y, x))
        .filter(|&(x, y)| {
            let diff = m.value(y) - m.value(x);
            *m.value(a.arrow(x, y)) != diff || *m.value(a.squiggle(x, y)) != diff
        })
        .collect()
}

/// First pair reported by [`measure_violations`].
pub fn measure_violation(a: &FiniteAlgebra, m: &Measure) -> Option<(Elem, Elem)> {
    measure_violations(a, m).into_iter().next()
}

pub fn is_measure(a: &FiniteAlgebra, m: &Measure) -> Result<bool> {
    require_pbck(a)?;
    let well_formed = m.values.len() == a.size() && !m.values.iter().any(Signed::is_negative);
    Ok(well_formed && measure_violations(a, m).is_empty())
}

/// The zero set `{x : m(x) = 0}`.
///
/// Also confirms that the zero set is a normal and commutative deductive system
/// and that the quotient by it is commutative.
pub fn measure_kernel(a: &FiniteAlgebra, m: &Measure) -> Result<Subset> {
    if !is_measure(a, m)? {
        return Err(Error::NotAMeasure { index: 0 });
    }
    let kernel: Subset = a.elements().filter(|&x| m.value(x).is_zero()).collect();
    let class = classify_subset(a, kernel)?;
    if !(class.is_ds && class.is_normal && class.is_commutative) {
        return Err(Error::TheoremViolation(format!(
            "measure kernel {} is not a normal commutative deductive system",
            kernel.display(a)
        )));
    }
    if !is_commutative(&quotient(a, kernel)?.quotient) {
        return Err(Error::TheoremViolation("quotient by a measure kernel is not commutative".into()));
    }
    Ok(kernel)
}
