//! Concrete claims about the shipped fixtures, one test per operation.

use pbck::*;

fn set(a: &FiniteAlgebra, names: &[&str]) -> Subset {
    Subset::from_names(a, names).unwrap()
}

fn map(a: &FiniteAlgebra, images: &str) -> UnaryMap {
    UnaryMap::new(images.split_whitespace().map(|t| a.el(t)).collect())
}

fn ds_names(a: &FiniteAlgebra, f: DsFilter) -> Vec<String> {
    enumerate_ds(a, f).unwrap().into_iter().map(|s| s.display(a)).collect()
}

#[test]
fn derived_order_of_the_six_element_example() {
    let a = fixtures::a6();
    let o = derive_order(&a);
    assert!(o.le(a.el("a"), a.el("c")));
    assert!(!o.le(a.el("c"), a.el("a")));
    assert_eq!(a.name(a.arrow(a.el("c"), a.el("a"))), "b");
    assert_eq!(o.least, Some(a.el("0")));
    assert!(!o.linear);

    let two = derive_order(&fixtures::a2());
    assert!(two.linear && two.least == Some(0));
    assert!(two.le(0, 1) && !two.le(1, 0));
}

#[test]
fn axiom_suites_on_fixtures() {
    let a6 = fixtures::a6();
    for sys in AxiomSystem::ALL {
        assert!(check_axiom_system(&a6, sys).passed(), "{sys:?}");
    }
    assert!(check_axiom_system(&fixtures::a2(), AxiomSystem::Relational).passed());

    let printed = check_axiom_system(&fixtures::a4l_printed(), AxiomSystem::Equational);
    let c3 = printed.clause("psBCK3'").unwrap();
    assert!(!c3.passed);
    assert_eq!(c3.witnesses[0].tuple, vec![1]);
    assert_eq!(c3.witnesses[0].message, "psBCK3': 1->a = b, expected a");
}

#[test]
fn basic_laws_hold_on_the_six_element_example() {
    let r = check_basic_laws(&fixtures::a6()).unwrap();
    for c in ["(1)", "(2)", "(3)", "(4)", "(5)", "(6)"] {
        assert!(r.clause_passed(c), "{c}");
    }
    assert!(check_basic_laws(&fixtures::a2()).unwrap().passed());
}

#[test]
fn boundedness() {
    let a6 = fixtures::a6();
    let p = boundedness_profile(&a6, None).unwrap();
    assert_eq!(p.least, Some(a6.el("0")));
    assert_eq!(p.good, Some(true));
    assert_eq!(p.pointed_involutive, None);

    let a4c = fixtures::a4c();
    let p = boundedness_profile(&a4c, None).unwrap();
    assert_eq!(p.least, None);
    assert_eq!(p.good, None);
}

#[test]
fn structure_kinds() {
    let k = structure_kind(&fixtures::a2()).unwrap();
    assert!(k.linear && k.meet_semilattice && k.join_semilattice && k.lattice);
    assert!(structure_kind(&fixtures::a4l_corrected()).unwrap().linear);
    let c = structure_kind(&fixtures::a4c()).unwrap();
    assert!(c.join_semilattice);
    // a and b are both minimal, so {a, b} has no lower bound at all.
    let a4c = fixtures::a4c();
    assert_eq!(meet(&a4c, a4c.el("a"), a4c.el("b")), None);
    assert!(!c.meet_semilattice && !c.lattice);
    assert!(matches!(structure_kind(&fixtures::a4l_printed()), Err(Error::PreconditionViolated(_))));
}

#[test]
fn direct_products() {
    let a2 = fixtures::a2();
    let sq = direct_product(&a2, &a2).unwrap();
    assert_eq!(sq.size(), 4);
    assert!(is_pseudo_bck(&sq));
    assert_eq!(derive_order(&sq).least, Some(0));

    let big = direct_product(&a2, &fixtures::a6()).unwrap();
    assert_eq!(big.size(), 12);
    assert!(check_axiom_system(&big, AxiomSystem::Equational).passed());

    assert!(is_commutative(&direct_product(&a2, &fixtures::a4c()).unwrap()));
    assert!(direct_product(&a2, &fixtures::a4l_printed()).is_err());
}

#[test]
fn iterated_arrow() {
    let a = fixtures::a6();
    assert_eq!(a.name(iter_arrow(&a, a.el("c"), a.el("a"), 2, Side::Arrow)), "b");
    assert_eq!(iter_arrow(&a, a.el("c"), a.el("a"), 0, Side::Squiggle), a.el("a"));
}

#[test]
fn commutativity_verdicts() {
    let a4c = fixtures::a4c();
    let a2 = fixtures::a2();
    for m in CommutativityMethod::ALL {
        assert!(check_commutative(&a4c, m).unwrap().passed(), "a4c {m:?}");
        assert!(check_commutative(&a2, m).unwrap().passed(), "a2 {m:?}");
    }

    let a6 = fixtures::a6();
    let all = check_commutative_with(&a6, CommutativityMethod::Def, WitnessMode::All).unwrap();
    let comm1 = all.clause("comm1").unwrap();
    assert!(comm1.witnesses.iter().any(|w| w.tuple == [a6.el("a"), a6.el("b")]));
    assert_eq!(comm1.witness(), Some(&[a6.el("0"), a6.el("a")][..]));
    // (a->b)~>b = 1~>b = b but (b->a)~>a = b~>a = c.
    assert_eq!(a6.squiggle(a6.arrow(a6.el("a"), a6.el("b")), a6.el("b")), a6.el("b"));
    assert_eq!(a6.squiggle(a6.arrow(a6.el("b"), a6.el("a")), a6.el("a")), a6.el("c"));

    let l = fixtures::a4l_corrected();
    let r = check_commutative_with(&l, CommutativityMethod::Def, WitnessMode::All).unwrap();
    assert!(!r.passed());
    let hit = r.clause("comm1").unwrap().witnesses.iter().find(|w| w.tuple == [l.el("a"), l.el("b")]).cloned();
    assert_eq!(hit.unwrap().message, "comm1: (a->b)~>b = b, expected 1");
}

#[test]
fn joins_in_the_commutative_example() {
    let a = fixtures::a4c();
    assert_eq!(a.name(join(&a, a.el("a"), a.el("b")).unwrap()), "c");
    assert!(matches!(join(&fixtures::a6(), 0, 1), Err(Error::PreconditionViolated(_))));
}

#[test]
fn order_determining_measures() {
    let a2 = fixtures::a2();
    assert!(check_order_determining(&a2, &[Measure::from_integers([1, 0])]).unwrap());
    assert!(is_commutative(&a2));
    assert!(!check_order_determining(&a2, &[]).unwrap());

    let a4c = fixtures::a4c();
    assert!(!check_order_determining(&a4c, &[Measure::zero(4)]).unwrap());
    assert!(matches!(
        check_order_determining(&a2, &[Measure::zero(2), Measure::from_integers([1, 1])]),
        Err(Error::NotAMeasure { index: 1 })
    ));
}

#[test]
fn measures() {
    let a2 = fixtures::a2();
    assert!(is_measure(&a2, &Measure::from_integers([1, 0])).unwrap());
    assert!(is_measure(&fixtures::a6(), &Measure::zero(6)).unwrap());

    let bad = Measure::from_integers([1, 1]);
    assert!(!is_measure(&a2, &bad).unwrap());
    // m(1->0) = m(0) = 1 while m(0) - m(1) = 0.
    assert!(measure_violations(&a2, &bad).contains(&(1, 0)));
    // m(0->0) = m(1) = 1 while m(0) - m(0) = 0, and (0,0) comes first.
    assert_eq!(measure_violation(&a2, &bad), Some((0, 0)));

    assert_eq!(measure_kernel(&a2, &Measure::from_integers([1, 0])).unwrap(), Subset::singleton(1));
    let k = classify_subset(&a2, Subset::singleton(1)).unwrap();
    assert!(k.is_normal && k.is_commutative);
    let a6 = fixtures::a6();
    assert_eq!(measure_kernel(&a6, &Measure::zero(6)).unwrap(), Subset::full(6));
    assert_eq!(measure_kernel(&a6, &Measure::from_integers([1, 0, 0, 0, 0, 0])).unwrap(), set(&a6, &["a", "b", "c", "d", "1"]));
}

#[test]
fn deductive_system_classification() {
    let a = fixtures::a6();
    let c = classify_subset(&a, set(&a, &["1", "c", "d"])).unwrap();
    assert!(c.is_ds && !c.is_normal && !c.is_commutative);
    let c = classify_subset(&a, set(&a, &["1", "a", "b", "c", "d"])).unwrap();
    assert!(c.is_ds && c.is_normal && c.is_commutative);
    let c = classify_subset(&a, set(&a, &["1"])).unwrap();
    assert!(c.is_ds && c.is_normal && !c.is_commutative);
    let c = classify_subset(&a, set(&a, &["c", "d"])).unwrap();
    assert!(!c.is_ds && !c.report.clause_passed("DS1"));

    assert!(classify_subset_alt_commutative(&a, set(&a, &["1", "a", "b", "c", "d"])).unwrap());
    assert!(!classify_subset_alt_commutative(&a, set(&a, &["1"])).unwrap());
    assert!(classify_subset_alt_commutative(&fixtures::a2(), Subset::singleton(1)).unwrap());
}

#[test]
fn deductive_system_lists() {
    let a = fixtures::a6();
    assert_eq!(ds_names(&a, DsFilter::All), ["{1}", "{c,d,1}", "{a,b,c,d,1}", "{0,a,b,c,d,1}"]);
    assert_eq!(ds_names(&a, DsFilter::Normal), ["{1}", "{a,b,c,d,1}", "{0,a,b,c,d,1}"]);
    assert_eq!(ds_names(&a, DsFilter::Commutative), ["{a,b,c,d,1}", "{0,a,b,c,d,1}"]);
    assert_eq!(ds_names(&fixtures::a2(), DsFilter::All), ["{1}", "{0,1}"]);
}

#[test]
fn generated_systems() {
    let a = fixtures::a6();
    assert_eq!(generated_ds(&a, set(&a, &["d"])).unwrap(), set(&a, &["1", "c", "d"]));
    assert_eq!(generated_ds(&a, Subset::default()).unwrap(), Subset::singleton(a.top()));
    assert_eq!(generated_ds(&a, set(&a, &["0"])).unwrap(), Subset::full(6));
}

#[test]
fn quotients_of_the_six_element_example() {
    let a = fixtures::a6();
    let q = quotient(&a, set(&a, &["1", "a", "b", "c", "d"])).unwrap();
    assert_eq!(q.quotient.size(), 2);
    assert_eq!(q.quotient.arrow_table(), fixtures::a2().arrow_table());
    assert_eq!(q.quotient.squiggle_table(), fixtures::a2().squiggle_table());
    assert!(is_commutative(&q.quotient));

    let id = quotient(&a, Subset::singleton(a.top())).unwrap();
    assert_eq!(id.quotient.arrow_table(), a.arrow_table());
    assert_eq!(id.quotient.squiggle_table(), a.squiggle_table());

    assert!(matches!(quotient(&a, set(&a, &["1", "c", "d"])), Err(Error::NotNormal { .. })));
    assert!(matches!(quotient(&a, set(&a, &["c", "d"])), Err(Error::NotDeductiveSystem)));
}

#[test]
fn simplicity() {
    assert!(is_simple(&fixtures::a2()).unwrap());
    assert!(!is_simple(&fixtures::a6()).unwrap());
    let a4c = fixtures::a4c();
    assert_eq!(ds_names(&a4c, DsFilter::All), ["{1}", "{a,b,c,1}"]);
    assert!(is_simple(&a4c).unwrap());
}

#[test]
fn states_of_the_six_element_example() {
    let a = fixtures::a6();
    for (i, mu) in fixtures::a6_maps().iter().enumerate() {
        assert!(check_state(&a, mu, StateKind::Type1).unwrap().passed(), "mu{}", i + 1);
    }
    for alg in [fixtures::a2(), a.clone(), fixtures::a4c(), fixtures::a4l_corrected()] {
        let one = UnaryMap::constant(alg.size(), alg.top());
        assert!(check_state(&alg, &one, StateKind::Type1).unwrap().passed());
        assert!(check_state(&alg, &one, StateKind::Type2).unwrap().passed());
        assert!(check_state(&alg, &UnaryMap::identity(alg.size()), StateKind::Type1).unwrap().passed());
    }

    let id2 = check_state_with(&a, &UnaryMap::identity(6), StateKind::Type2, WitnessMode::All).unwrap();
    let is2 = id2.clause("IS2'").unwrap();
    assert!(!is2.passed);
    assert!(is2.witnesses.iter().any(|w| w.tuple == [a.el("b"), a.el("a")] || w.tuple == [a.el("a"), a.el("b")]));

    let mu6 = map(&a, "0 1 1 1 1 1");
    let c = classify_map(&a, &mu6).unwrap();
    assert!(c.type1 && c.type2 && c.normal2);
    assert_eq!(c.kernel, set(&a, &["a", "b", "c", "d", "1"]));
    let c = classify_map(&a, &UnaryMap::identity(6)).unwrap();
    assert!(c.type1 && c.normal1 && !c.type2);
}

#[test]
fn states_of_the_commutative_example() {
    let a = fixtures::a4c();
    let mu1 = map(&a, "a a c 1");
    let c = classify_map(&a, &mu1).unwrap();
    assert!(c.type1 && c.type2 && c.normal1 && c.normal2);
    assert_eq!(c.kernel, Subset::singleton(a.top()));
    assert!(c.kernel_commutative);
}

#[test]
fn state_enumeration() {
    let a6 = fixtures::a6();
    let found = enumerate_states(&a6, SearchKind::Type1, DEFAULT_STATE_BUDGET).unwrap();
    for mu in fixtures::a6_maps() {
        assert!(found.contains(&mu), "{mu:?}");
    }
    let a2 = fixtures::a2();
    let expected = vec![UnaryMap::identity(2), UnaryMap::constant(2, 1)];
    for kind in [SearchKind::Type1, SearchKind::Type2] {
        let mut got = enumerate_states(&a2, kind, DEFAULT_STATE_BUDGET).unwrap();
        got.sort_by(|l, r| l.as_slice().cmp(r.as_slice()));
        assert_eq!(got, expected, "{kind:?}");
    }
}

#[test]
fn lifting_states_to_quotients() {
    let a = fixtures::a6();
    let (q, lifted) = lift_to_quotient(&a, &map(&a, "0 1 1 1 1 1")).unwrap();
    assert_eq!(q.quotient.size(), 2);
    assert_eq!(lifted, UnaryMap::identity(2));
    let c = classify_map(&q.quotient, &lifted).unwrap();
    assert!(c.normal1 && c.normal2);

    let (q, lifted) = lift_to_quotient(&a, &UnaryMap::constant(6, a.top())).unwrap();
    assert_eq!(q.quotient.size(), 1);
    assert_eq!(lifted, UnaryMap::constant(1, 0));

    let c4 = fixtures::a4c();
    let (q, lifted) = lift_to_quotient(&c4, &UnaryMap::identity(4)).unwrap();
    assert_eq!(q.quotient.arrow_table(), c4.arrow_table());
    assert_eq!(lifted, UnaryMap::identity(4));

    assert!(matches!(lift_to_quotient(&a, &UnaryMap::identity(6)), Err(Error::PreconditionViolated(_))));
}

#[test]
fn state_morphisms() {
    let a = fixtures::a6();
    let sm: Vec<usize> = fixtures::a6_maps()
        .iter()
        .enumerate()
        .filter(|(_, mu)| is_state_morphism(&a, mu).unwrap().is_state_morphism)
        .map(|(i, _)| i + 1)
        .collect();
    assert_eq!(sm, [3, 6, 10]);

    for alg in [fixtures::a2(), a.clone(), fixtures::a4c(), fixtures::a4l_corrected()] {
        assert!(is_state_morphism(&alg, &UnaryMap::identity(alg.size())).unwrap().is_state_morphism);
        assert!(is_state_morphism(&alg, &UnaryMap::constant(alg.size(), alg.top())).unwrap().is_state_morphism);
    }

    let c4 = fixtures::a4c();
    let r = is_state_morphism(&c4, &map(&c4, "a a c 1")).unwrap();
    assert!(!r.is_state_morphism);
    // mu1(b->a) = mu1(c) = c while mu1(b)->mu1(a) = a->a = 1.
    let all = is_state_morphism(&c4, &map(&c4, "a a c 1")).unwrap().report;
    assert!(!all.clause_passed("hom->"));
    assert_eq!(c4.arrow(c4.el("b"), c4.el("a")), c4.el("c"));
    // The lexicographically first failing pair is (a,b); (b,a) fails too.
    let hom = all.clause("hom->").unwrap();
    assert_eq!(hom.witness(), Some(&[c4.el("a"), c4.el("b")][..]));
    assert_eq!(hom.witnesses[0].message, "hom->: mu(a->b) = c, expected 1");
    let mu1 = map(&c4, "a a c 1");
    let (a_, b_) = (c4.el("a"), c4.el("b"));
    assert_ne!(mu1.apply(c4.arrow(b_, a_)), c4.arrow(mu1.apply(b_), mu1.apply(a_)));
}

#[test]
fn kernels_of_state_morphisms() {
    let a = fixtures::a6();
    let mu6 = map(&a, "0 1 1 1 1 1");
    let r = kernel_characterizations(&a, &mu6).unwrap();
    for c in ["Ker = {mu(x)->x}", "Ker = {mu(x)~>x}", "(2)"] {
        assert!(r.clause_passed(c), "{c}");
    }
    let from_arrows: Subset = Subset::from_elems(a.elements().map(|x| a.arrow(mu6.apply(x), x)));
    assert_eq!(from_arrows, set(&a, &["1", "a", "b", "c", "d"]));
    // x->mu6(x) is 1 everywhere (0->0 = 1, x->1 = 1), so that form only yields {1}.
    let reversed = r.clause("Ker = {x->mu(x)}").unwrap();
    assert!(!reversed.passed);
    assert_eq!(reversed.witnesses[0].message, "Ker = {x->mu(x)}: {1} differs from {a,b,c,d,1}");
    assert!(!r.clause_passed("Ker = {x~>mu(x)}"));
    assert!(matches!(kernel_characterizations(&a, &map(&a, "0 0 0 1 1 1")), Err(Error::PreconditionViolated(_))));
}

#[test]
fn mu_state_deductive_systems() {
    let a = fixtures::a6();
    let mu6 = map(&a, "0 1 1 1 1 1");
    assert!(mu_state_ds(&a, &mu6, set(&a, &["1", "a", "b", "c", "d"])).unwrap());
    assert!(mu_state_ds(&a, &mu6, set(&a, &["1", "c", "d"])).unwrap());
    for mu in [mu6.clone(), UnaryMap::identity(6), UnaryMap::constant(6, 5)] {
        assert!(mu_state_ds(&a, &mu, Subset::singleton(5)).unwrap());
    }
}

#[test]
fn preimages() {
    let a = fixtures::a6();
    let mu6 = map(&a, "0 1 1 1 1 1");
    let pre = preimage_ds(&a, &mu6, Subset::singleton(5)).unwrap();
    assert_eq!(pre, set(&a, &["1", "a", "b", "c", "d"]));
    let c = classify_subset(&a, pre).unwrap();
    assert!(c.is_normal && c.is_commutative);

    for d in enumerate_ds(&a, DsFilter::All).unwrap() {
        assert_eq!(preimage_ds(&a, &UnaryMap::identity(6), d).unwrap(), d);
    }
    assert_eq!(preimage_ds(&a, &UnaryMap::constant(6, 5), Subset::singleton(5)).unwrap(), Subset::full(6));
    assert_eq!(image_clause(&a, &UnaryMap::identity(6), Subset::singleton(5)).unwrap(), Some(true));
    assert_eq!(image_clause(&a, &mu6, Subset::singleton(5)).unwrap(), None);
}

#[test]
fn quotients_by_state_morphism_kernels() {
    let a = fixtures::a6();
    let (q, lifted) = quotient_sm(&a, &map(&a, "0 1 1 1 1 1")).unwrap();
    assert_eq!(q.quotient.size(), 2);
    assert_eq!(lifted, UnaryMap::identity(2));
    let (q, lifted) = quotient_sm(&a, &UnaryMap::identity(6)).unwrap();
    assert_eq!(q.quotient.size(), 6);
    assert_eq!(lifted, UnaryMap::identity(6));
    let (q, _) = quotient_sm(&a, &UnaryMap::constant(6, 5)).unwrap();
    assert_eq!(q.quotient.size(), 1);
}

#[test]
fn linear_chain_remark() {
    let l = fixtures::a4l_corrected();
    assert!(is_pseudo_bck(&l));
    assert!(derive_order(&l).linear);
    assert!(!is_commutative(&l));
    let r = check_linear_theorems(&l).unwrap();
    assert!(r.clause_passed("normal-type2-is-sm"));
    assert!(r.clause("state-is-sm").is_none());

    let mu = fixtures::a4l_map();
    assert_eq!(mu, map(&l, "a a 1 1"));
    assert!(check_state(&l, &mu, StateKind::Type1).unwrap().passed());
    assert!(!is_state_morphism(&l, &mu).unwrap().is_state_morphism);

    assert!(check_linear_theorems(&fixtures::a2()).unwrap().passed());
    assert!(matches!(check_linear_theorems(&fixtures::a6()), Err(Error::NotLinear)));
    let a6 = fixtures::a6();
    // a <= b holds here; the incomparable pairs are {a, d} and {b, d}.
    assert!(a6.le(a6.el("a"), a6.el("b")));
    assert!(!a6.le(a6.el("a"), a6.el("d")) && !a6.le(a6.el("d"), a6.el("a")));
    assert!(!a6.le(a6.el("b"), a6.el("d")) && !a6.le(a6.el("d"), a6.el("b")));
}

#[test]
fn hoop_levels() {
    let h2 = fixtures::h2();
    for level in [HoopLevel::Hoop, HoopLevel::Wajsberg, HoopLevel::Basic] {
        assert!(check_hoop(&h2, level).passed());
    }
    let g = fixtures::hg3();
    assert!(check_hoop(&g, HoopLevel::Hoop).passed());
    let w = check_hoop(&g, HoopLevel::Wajsberg);
    let w1 = w.clause("W1").unwrap();
    assert!(!w1.passed);
    assert_eq!(w1.witnesses[0].tuple, vec![0, 1]);
    assert!(check_hoop(&fixtures::hl3(), HoopLevel::Wajsberg).passed());
}

#[test]
fn hoop_reducts() {
    assert_eq!(to_pbck(&fixtures::h2()).unwrap(), fixtures::a2());
    let g = to_pbck(&fixtures::hg3()).unwrap();
    assert_eq!(g.size(), 3);
    let k = structure_kind(&g).unwrap();
    assert!(k.linear && k.meet_semilattice);
    assert!(is_commutative(&to_pbck(&fixtures::hl3()).unwrap()));
}

#[test]
fn smallest_search_sizes() {
    assert_eq!(count_models(&SearchConfig::new(1)).unwrap(), 1);
    let two = enumerate_models(&SearchConfig::new(2)).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].arrow_table(), fixtures::a2().arrow_table());
}

#[test]
fn shipped_side_files_parse() {
    let a6 = fixtures::a6();
    let mu = parse_map(&a6, include_str!("../../../fixtures/a6_mu6.map")).unwrap();
    assert_eq!(mu, map(&a6, "0 1 1 1 1 1"));
    let l = fixtures::a4l_corrected();
    assert_eq!(parse_map(&l, include_str!("../../../fixtures/a4l_mu.map")).unwrap(), fixtures::a4l_map());
    let m = parse_measure(&a6, include_str!("../../../fixtures/a6_zero_bottom.measure")).unwrap();
    assert!(is_measure(&a6, &m).unwrap());
    let a2 = fixtures::a2();
    let half = parse_measure(&a2, include_str!("../../../fixtures/a2_half.measure")).unwrap();
    assert!(is_measure(&a2, &half).unwrap());
}
