use std::time::Instant;

use symsym_core::q;
use symsym_core::rootsys::{
    admissible_nodes, all_types, build_simple_tss, chevalley_algebra, expected_positive_roots,
    roots_from_cartan, AdmissibleSystem, CartanMatrix, CartanType,
};

#[test]
fn positive_root_counts_match_classical_formulas() {
    for (ty, n) in all_types(8) {
        let r = roots_from_cartan(&CartanMatrix::of_type(ty, n).unwrap());
        assert_eq!(r.num_positive(), expected_positive_roots(ty, n), "{ty:?}{n}");
    }
}

#[test]
fn chevalley_bases_satisfy_jacobi_through_rank_six() {
    for (ty, n) in all_types(6) {
        let c = CartanMatrix::of_type(ty, n).unwrap();
        let ca = chevalley_algebra(&c).unwrap();
        assert_eq!(ca.alg().dim(), n + 2 * expected_positive_roots(ty, n));
        assert!(ca.alg().jacobi_check().passed);
    }
}

#[test]
fn exceptional_admissible_nodes() {
    let nodes = |ty, n| admissible_nodes(&roots_from_cartan(&CartanMatrix::of_type(ty, n).unwrap())).unwrap();
    assert_eq!(nodes(CartanType::E, 6), vec![1, 6]);
    assert_eq!(nodes(CartanType::E, 7), vec![7]);
    assert!(nodes(CartanType::E, 8).is_empty());
    assert!(nodes(CartanType::F, 4).is_empty());
}

#[test]
fn e6_simple_triple_is_valid() {
    let start = Instant::now();
    let ca = chevalley_algebra(&CartanMatrix::of_type(CartanType::E, 6).unwrap()).unwrap();
    let adm = AdmissibleSystem::new(ca.roots(), 1).unwrap();
    let t = build_simple_tss(&ca, &adm, &q(1)).unwrap();
    let report = t.validate();
    assert!(report.passed(), "{:?}", report.failures());
    assert_eq!((t.dim_k(), t.dim_p()), (46, 32));
    assert_eq!(t.center_of_k().dim(), 1);
    eprintln!("e6 triple built and validated in {:?}", start.elapsed());
}
