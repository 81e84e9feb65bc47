use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symsym_core::catalog::{self, Family, Params};
use symsym_core::symtriple::direct_sum_triples;
use symsym_core::{decompose, frac, LieAlgebra, Mat, Scalar};

fn small_families() -> Vec<&'static Family> {
    catalog::families().iter().filter(|f| f.dim_p <= 4).collect()
}

fn entry(index: usize, pick: usize) -> (String, Params) {
    let fams = small_families();
    let f = fams[index % fams.len()];
    let grid = f.grid(usize::MAX);
    (f.id.to_string(), grid[pick % grid.len()].clone())
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transport_preserves_validity_and_fingerprint(index in 0usize..64, pick in 0usize..64, seed in any::<u64>()) {
        let (id, p) = entry(index, pick);
        let t = catalog::build(&id, &p).unwrap();
        let (s, m) = t.scramble(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(s.validate().passed());
        prop_assert_eq!(s.fingerprint(), t.fingerprint());
        let back = s.transport(&m.inverse().unwrap()).unwrap();
        prop_assert!(back.validate().passed());
        prop_assert_eq!(back.fingerprint(), t.fingerprint());
    }

    #[test]
    fn jacobi_survives_change_of_basis(entries in proptest::collection::vec(rational(), 9)) {
        let m = Mat::from_rows(entries.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        prop_assume!(!num::Zero::is_zero(&m.det()));
        let sl2 = catalog::build("t_H1", &Params::new()).unwrap().alg().clone();
        let moved = sl2.change_of_basis(&m).unwrap();
        prop_assert!(moved.jacobi_check().passed);
        prop_assert_eq!(moved.killing_form().rank(), 3);
    }

    #[test]
    fn scrambled_sums_reassemble(a in 0usize..64, b in 0usize..64, seed in any::<u64>()) {
        let dim2: Vec<&Family> = catalog::families().iter().filter(|f| f.dim_p == 2).collect();
        let fa = dim2[a % dim2.len()];
        let fb = dim2[b % dim2.len()];
        let ta = fa.build(&fa.grid(usize::MAX)[0]).unwrap();
        let tb = fb.build(&fb.grid(usize::MAX)[0]).unwrap();
        let t = direct_sum_triples(&ta, &tb).unwrap();
        let (s, _) = t.scramble(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let d = decompose(&s).unwrap();
        prop_assert!(d.reassembles(&s).unwrap());
        let direct = decompose(&t).unwrap();
        prop_assert_eq!(d.flat_dim(), direct.flat_dim());
        prop_assert_eq!(d.factor_fingerprints(), direct.factor_fingerprints());
    }
}

#[test]
fn abelian_algebra_is_trivially_jacobi() {
    assert!(LieAlgebra::abelian(5).jacobi_check().passed);
}
