//! Exact computations with symplectic symmetric triples.
//!
//! A symplectic symmetric triple is a real Lie algebra `G`, an involutive
//! automorphism `σ` splitting `G = K ⊕ P` into its `±1` eigenspaces with
//! `[P, P] = K` and `K` acting faithfully on `P`, and a `K`-invariant
//! symplectic form `Ω` on `P`. Everything is computed over ℚ with no
//! rounding.
//!
//! * [`linalg`]: rational matrices and canonical subspaces.
//! * [`liealg`]: Lie algebras by structure constants.
//! * [`symtriple`]: validation, cochains, exactness, fingerprints.
//! * [`decompose`]: splitting a triple into indecomposable factors.
//! * [`rootsys`]: root systems, Chevalley bases and simple complex triples.
//! * [`catalog`]: the low-dimensional classification as data.

pub mod catalog;
pub mod decompose;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod rootsys;
pub mod symtriple;

pub use decompose::{decompose, flat_split, verify_uniqueness_pair, Decomposition, MatchReport};
pub use error::{Error, Result};
pub use liealg::{JacobiReport, LieAlgebra};
pub use linalg::{frac, q, Inertia, Mat, Scalar, Subspace};
pub use symtriple::{SymmetricTriple, TripleFingerprint, ValidationReport};
