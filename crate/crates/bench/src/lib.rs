//! Fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symsym_core::catalog::{self, Params};
use symsym_core::rootsys::{CartanMatrix, CartanType};
use symsym_core::symtriple::direct_sum_triples;
use symsym_core::{q, SymmetricTriple};

pub fn cartan(ty: CartanType, rank: usize) -> CartanMatrix {
    CartanMatrix::of_type(ty, rank).expect("valid type")
}

/// `t2_eps ⊕ t2_epsp` under a seeded random change of basis.
pub fn scrambled_plane_sum(eps: i64, epsp: i64, seed: u64) -> SymmetricTriple {
    let t2 = |e: i64| catalog::build("t2_eps", &Params::new().with("eps", q(e))).expect("t2");
    let sum = direct_sum_triples(&t2(eps), &t2(epsp)).expect("sum");
    sum.scramble(&mut ChaCha8Rng::seed_from_u64(seed))
        .expect("scramble")
        .0
}
