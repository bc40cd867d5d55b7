//! Built-in algebras and maps, shipped as text files under `fixtures/`.

use crate::algebra::FiniteAlgebra;
use crate::format::parse_algebra;
use crate::hoops::HoopAlgebra;
use crate::states::UnaryMap;

pub const A2_SRC: &str = include_str!("../../../fixtures/a2.pbck");
pub const A6_SRC: &str = include_str!("../../../fixtures/a6.pbck");
pub const A4C_SRC: &str = include_str!("../../../fixtures/a4c.pbck");
pub const A4L_PRINTED_SRC: &str = include_str!("../../../fixtures/a4l_printed.pbck");
pub const A4L_CORRECTED_SRC: &str = include_str!("../../../fixtures/a4l_corrected.pbck");
pub const H2_SRC: &str = include_str!("../../../fixtures/h2.pbck");
pub const HG3_SRC: &str = include_str!("../../../fixtures/hg3.pbck");
pub const HL3_SRC: &str = include_str!("../../../fixtures/hl3.pbck");

fn load(src: &str) -> FiniteAlgebra {
    parse_algebra(src).expect("built-in fixture parses").algebra
}

fn load_hoop(src: &str) -> HoopAlgebra {
    parse_algebra(src).expect("built-in fixture parses").into_hoop().expect("built-in fixture has a product table")
}

/// Two-element chain.
pub fn a2() -> FiniteAlgebra {
    load(A2_SRC)
}

/// Six-element bounded non-commutative pseudo BCK-algebra on `0 a b c d 1`.
pub fn a6() -> FiniteAlgebra {
    load(A6_SRC)
}

/// Four-element commutative BCK-algebra on `a b c 1`.
pub fn a4c() -> FiniteAlgebra {
    load(A4C_SRC)
}

/// Four-element chain as printed, with `1->a = b`. Not a pseudo BCK-algebra.
pub fn a4l_printed() -> FiniteAlgebra {
    load(A4L_PRINTED_SRC)
}

/// Four-element chain with the top row repaired to `1->x = x`.
pub fn a4l_corrected() -> FiniteAlgebra {
    load(A4L_CORRECTED_SRC)
}

pub fn h2() -> HoopAlgebra {
    load_hoop(H2_SRC)
}

/// Goedel three-element chain.
pub fn hg3() -> HoopAlgebra {
    load_hoop(HG3_SRC)
}

/// Lukasiewicz three-element chain.
pub fn hl3() -> HoopAlgebra {
    load_hoop(HL3_SRC)
}

fn maps(a: &FiniteAlgebra, rows: &[&str]) -> Vec<UnaryMap> {
    rows.iter().map(|row| UnaryMap::new(row.split_whitespace().map(|t| a.el(t)).collect())).collect()
}

/// The ten maps `mu1..mu10` on [`a6`], images listed for `0 a b c d 1`.
pub fn a6_maps() -> Vec<UnaryMap> {
    maps(
        &a6(),
        &[
            "0 0 0 1 1 1",
            "0 a a 1 1 1",
            "0 a b c d 1",
            "0 b b 1 1 1",
            "0 d c c d 1",
            "0 1 1 1 1 1",
            "a a a 1 1 1",
            "b b b 1 1 1",
            "d d c c d 1",
            "1 1 1 1 1 1",
        ],
    )
}

/// The four maps `mu1..mu4` on [`a4c`], images listed for `a b c 1`.
pub fn a4c_maps() -> Vec<UnaryMap> {
    maps(&a4c(), &["a a c 1", "a b c 1", "b b c 1", "1 1 1 1"])
}

/// `0, a |-> a` and `b, 1 |-> 1` on the four-element chains.
pub fn a4l_map() -> UnaryMap {
    maps(&a4l_corrected(), &["a a 1 1"]).remove(0)
}

/// Every named pseudo BCK fixture, for sweeping invariants.
pub fn all_pbck() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("a2", a2()),
        ("a6", a6()),
        ("a4c", a4c()),
        ("a4l_corrected", a4l_corrected()),
        ("hg3", hg3().base().clone()),
        ("hl3", hl3().base().clone()),
    ]
}
