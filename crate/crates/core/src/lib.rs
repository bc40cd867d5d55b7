//! Finite-model workbench for pseudo BCK-algebras.
//!
//! An algebra is a finite carrier with two binary operations `->` and `~>` and
//! a distinguished top `1`, given by Cayley tables. Nothing is validated on
//! load: every property (the axioms themselves included) is an explicit check
//! that reports the lexicographically first counterexample per clause.
//!
//! ```
//! use pbck::{check_axiom_system, enumerate_ds, fixtures, AxiomSystem, DsFilter};
//!
//! let a = fixtures::a6();
//! assert!(check_axiom_system(&a, AxiomSystem::Equational).passed());
//! let normal = enumerate_ds(&a, DsFilter::Normal).unwrap();
//! assert_eq!(normal.len(), 3);
//! ```

pub mod algebra;
pub mod axioms;
pub mod commutativity;
pub mod deduction;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod hoops;
pub mod measure;
pub mod morphisms;
pub mod order;
pub mod report;
pub mod search;
pub mod states;
pub mod subset;

pub use algebra::{iter_arrow, product_tables, Elem, FiniteAlgebra, Side, MAX_CARRIER};
pub use axioms::{
    boundedness_profile, check_axiom_system, check_axiom_system_with, check_basic_laws, direct_product,
    is_pseudo_bck, AxiomSystem, BoundednessProfile,
};
pub use commutativity::{
    check_commutative, check_commutative_with, check_order_determining, is_commutative, join, CommutativityMethod,
};
pub use deduction::{
    classify_subset, classify_subset_alt_commutative, classify_subset_with, enumerate_ds, generated_ds, is_simple,
    quotient, DsClassification, DsFilter, QuotientResult,
};
pub use error::{Error, Result};
pub use format::{parse_algebra, parse_algebras, parse_map, parse_measure, write_algebra, write_map, AlgebraFile, ParseError};
pub use hoops::{check_hoop, to_pbck, HoopAlgebra, HoopLevel};
pub use measure::{is_measure, measure_kernel, measure_violation, measure_violations, Measure};
pub use morphisms::{
    check_linear_theorems, diagonal_projections, double_negation, image_clause, is_state_morphism,
    kernel_characterizations, mu_state_ds, preimage_ds, quotient_sm, MorphismReport,
};
pub use order::{derive_order, meet, structure_kind, OrderRelation, StructureKind};
pub use report::{CheckReport, ClauseResult, Witness, WitnessMode};
pub use search::{canonical_form, count_models, enumerate_models, for_each_model, SearchConfig};
pub use states::{
    check_state, check_state_with, classify_map, enumerate_states, lift_to_quotient, product_map, SearchKind,
    StateClassification, StateKind, UnaryMap, DEFAULT_STATE_BUDGET,
};
pub use subset::Subset;
