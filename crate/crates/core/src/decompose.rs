//! Splitting a triple into a flat factor and indecomposable factors.
//!
//! The flat factor is the Ω-nondegenerate part of the center of `G`. What is
//! left is split recursively: candidate splittings come from idempotents of
//! the σ-equivariant centroid of `G` (endomorphisms commuting with every
//! `ad x` and with σ). Their restrictions to `P` lie in the commutant of the
//! `K`-action, and each candidate is kept only if its image and kernel are
//! Ω-orthogonal, bracket to zero, and generate subalgebras. Idempotents are
//! produced exactly, from the rational factorization of minimal polynomials
//! of centroid elements.
//!
//! A factor for which no candidate survives is reported as
//! indecomposable-by-search. This is an attestation about the search, not a
//! proof of indecomposability.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{annihilator, LieAlgebra};
use crate::linalg::{is_zero_vec, Mat, Scalar, Subspace};
use crate::poly::{minimal_polynomial, Poly};
use crate::symtriple::{direct_sum_triples, SymmetricTriple, TripleFingerprint};

const SEARCH_SEED: u64 = 0x5eed_5eed;
const RANDOM_TRIES: usize = 12;
const MAX_PRIMARY_PARTS: usize = 8;

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Flat factor (`K = 0`), possibly zero-dimensional.
    pub flat_factor: SymmetricTriple,
    /// Non-flat factors, each indecomposable-by-search.
    pub factors: Vec<SymmetricTriple>,
    /// Columns: the basis of `flat ⊕ factors…` in the input's coordinates.
    pub assembly: Mat,
}

impl Decomposition {
    /// `flat ⊕ factor₁ ⊕ …`, in that block order.
    pub fn direct_sum(&self) -> Result<SymmetricTriple> {
        let mut acc = self.flat_factor.clone();
        for f in &self.factors {
            acc = direct_sum_triples(&acc, f)?;
        }
        Ok(acc)
    }

    /// Transports the direct sum back along the assembly and compares it
    /// with `input`: structure constants, σ and Ω must agree exactly.
    pub fn reassembles(&self, input: &SymmetricTriple) -> Result<bool> {
        let sum = self.direct_sum()?;
        let back = sum.transport(&self.assembly.inverse()?)?;
        Ok(same_structure(&back, input))
    }

    pub fn flat_dim(&self) -> usize {
        self.flat_factor.dim()
    }

    /// Fingerprints of the non-flat factors, sorted.
    pub fn factor_fingerprints(&self) -> Vec<TripleFingerprint> {
        let mut v: Vec<_> = self.factors.iter().map(SymmetricTriple::fingerprint).collect();
        v.sort();
        v
    }
}

/// Equal structure constants, σ and Ω; labels are ignored.
pub fn same_structure(a: &SymmetricTriple, b: &SymmetricTriple) -> bool {
    let n = a.dim();
    if n != b.dim() || a.sigma() != b.sigma() || a.omega() != b.omega() {
        return false;
    }
    (0..n).all(|i| {
        (i + 1..n).all(|j| a.alg().basis_bracket_dense(i, j) == b.alg().basis_bracket_dense(i, j))
    })
}

/// Coordinates with respect to an arbitrary (not echelon) basis.
struct Frame {
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    inv: Mat,
    span: Subspace,
}

impl Frame {
    fn new(ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        let span = Subspace::from_spanning(ambient, basis.iter().cloned())?;
        if span.dim() != basis.len() {
            return Err(Error::Internal("frame vectors are dependent".into()));
        }
        let pivots = span.pivots().to_vec();
        let m = basis.len();
        let inv = Mat::from_fn(m, m, |r, c| basis[c][pivots[r]].clone()).inverse()?;
        Ok(Self {
            basis,
            pivots,
            inv,
            span,
        })
    }

    fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.span.contains(v) {
            return None;
        }
        let picked: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        Some(self.inv.mul_vec(&picked).expect("square"))
    }
}

fn basis_label(alg: &LieAlgebra, v: &[Scalar]) -> Option<String> {
    let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    match (nz.next(), nz.next()) {
        (Some((i, c)), None) if c.is_one() => Some(alg.labels()[i].clone()),
        _ => None,
    }
}

/// The sub-triple on `span(kvecs) ⊕ span(pvecs)`, in that basis order, with
/// the embedding matrix (columns: the chosen vectors).
fn sub_triple(
    t: &SymmetricTriple,
    kvecs: &[Vec<Scalar>],
    pvecs: &[Vec<Scalar>],
) -> Result<(SymmetricTriple, Mat)> {
    let n = t.dim();
    let all: Vec<Vec<Scalar>> = kvecs.iter().chain(pvecs).cloned().collect();
    let m = all.len();
    let frame = Frame::new(n, all.clone())?;
    let alg = t.alg();
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let v = alg.bracket(&all[i], &all[j])?;
            if is_zero_vec(&v) {
                continue;
            }
            let c = frame.coords(&v).ok_or(Error::NotSubalgebra)?;
            entries.push((i, j, c));
        }
    }
    let nk = kvecs.len();
    let named: Option<Vec<String>> = all.iter().map(|v| basis_label(alg, v)).collect();
    let generic = || -> Vec<String> {
        (0..m)
            .map(|i| if i < nk { format!("k{i}") } else { format!("p{}", i - nk) })
            .collect()
    };
    let labels = match named {
        Some(l) => {
            let mut sorted = l.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == l.len() {
                l
            } else {
                generic()
            }
        }
        None => generic(),
    };
    let sub = LieAlgebra::from_brackets(labels, entries)?;
    let d = pvecs.len();
    let omega = Mat::from_fn(d, d, |a, b| t.omega_eval(&pvecs[a], &pvecs[b]));
    let p_idx: Vec<usize> = (nk..m).collect();
    let triple = SymmetricTriple::from_adapted(sub, &p_idx, omega)?;
    let emb = Mat::from_cols(n, &frame.basis)?;
    Ok((triple, emb))
}

/// `{x ∈ P : Ω(x, s) = 0 for all s ∈ S}`, in algebra coordinates.
fn omega_perp(t: &SymmetricTriple, s: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let d = t.dim_p();
    let mut rows = Subspace::zero(d);
    for v in s {
        let c = t.p_coords(v);
        rows.insert(t.omega().mul_vec(&c)?)?;
    }
    Ok(annihilator(&rows)
        .basis()
        .iter()
        .map(|c| t.p().vector_from_coords(c))
        .collect())
}

/// Splits off the flat factor: `t ≅ t₀ ⊕ t₁` with `t₀` flat and `Z(G₁)`
/// isotropic. The assembly has columns `[basis of t₀ | basis of t₁]`.
pub fn flat_split(t: &SymmetricTriple) -> Result<(SymmetricTriple, SymmetricTriple, Mat)> {
    let report = t.validate();
    if !report.passed() {
        return Err(Error::InvalidTriple(format!(
            "input fails {}",
            report
                .failures()
                .iter()
                .map(|c| c.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let z = t.alg().center();
    if !z.is_subspace_of(t.p()) {
        return Err(Error::Internal("center of G is not inside P".into()));
    }
    // symplectic Gram–Schmidt on Z(G): peel off hyperbolic pairs, the
    // remainder is the radical Z₀
    let mut rest: Vec<Vec<Scalar>> = z.basis().to_vec();
    let mut p0: Vec<Vec<Scalar>> = Vec::new();
    loop {
        let mut pair = None;
        'search: for a in 0..rest.len() {
            for b in a + 1..rest.len() {
                let w = t.omega_eval(&rest[a], &rest[b]);
                if !w.is_zero() {
                    pair = Some((a, b, w));
                    break 'search;
                }
            }
        }
        let Some((a, b, w)) = pair else { break };
        let u = rest[a].clone();
        let v: Vec<Scalar> = rest[b].iter().map(|x| x / &w).collect();
        rest = rest
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != a && i != b)
            .map(|(_, x)| {
                let (wu, wv) = (t.omega_eval(&x, &u), t.omega_eval(&x, &v));
                x.iter()
                    .zip(&u)
                    .zip(&v)
                    .map(|((xi, ui), vi)| xi - &wv * ui + &wu * vi)
                    .collect()
            })
            .collect();
        p0.push(u);
        p0.push(v);
    }
    let p1 = omega_perp(t, &p0)?;
    let (t0, e0) = sub_triple(t, &[], &p0)?;
    let kvecs = t.k().basis().to_vec();
    let (t1, e1) = sub_triple(t, &kvecs, &p1)?;
    let z1 = t1.alg().center();
    let isotropic = z1
        .basis()
        .iter()
        .all(|x| z1.basis().iter().all(|y| t1.omega_eval(x, y).is_zero()));
    if !isotropic {
        return Err(Error::Internal("center of the non-flat part is not isotropic".into()));
    }
    let n = t.dim();
    let cols: Vec<Vec<Scalar>> = (0..e0.cols())
        .map(|j| e0.col(j))
        .chain((0..e1.cols()).map(|j| e1.col(j)))
        .collect();
    let assembly = Mat::from_cols(n, &cols)?;
    Ok((t0, t1, assembly))
}

/// Basis of `{f : P → P | f ∘ ad(k) = ad(k) ∘ f for all k ∈ K}`, as matrices
/// in the echelon basis of `P`.
pub fn commutant(t: &SymmetricTriple) -> Result<Vec<Mat>> {
    let mats: Vec<Mat> = t
        .k()
        .basis()
        .iter()
        .map(|k| t.ad_on_p(k))
        .collect::<Result<_>>()?;
    commuting_space(t.dim_p(), &mats)
}

/// Matrices commuting with every matrix in `gens`.
fn commuting_space(d: usize, gens: &[Mat]) -> Result<Vec<Mat>> {
    commuting_block_space(&[d], gens)
}

/// Block-diagonal matrices (block sizes `sizes`) commuting with every matrix
/// in `gens`.
fn commuting_block_space(sizes: &[usize], gens: &[Mat]) -> Result<Vec<Mat>> {
    let d: usize = sizes.iter().sum();
    // var[r][s] is the unknown for entry (r, s) when both lie in one block
    let mut block = Vec::with_capacity(d);
    for (b, &sz) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat(b).take(sz));
    }
    let mut var = vec![vec![None; d]; d];
    let mut nvars = 0;
    for r in 0..d {
        for s in 0..d {
            if block[r] == block[s] {
                var[r][s] = Some(nvars);
                nvars += 1;
            }
        }
    }
    // (fA - Af)[r][c] = Σ_s f[r][s]A[s][c] - A[r][s]f[s][c]
    let mut rows = Subspace::zero(nvars);
    for a in gens {
        for r in 0..d {
            for c in 0..d {
                if rows.dim() == nvars {
                    break;
                }
                let mut eq = vec![Scalar::zero(); nvars];
                for s in 0..d {
                    if let Some(i) = var[r][s] {
                        eq[i] += &a[(s, c)];
                    }
                    if let Some(i) = var[s][c] {
                        eq[i] -= &a[(r, s)];
                    }
                }
                if !is_zero_vec(&eq) {
                    rows.insert(eq)?;
                }
            }
        }
    }
    Ok(annihilator(&rows)
        .basis()
        .iter()
        .map(|v| {
            Mat::from_fn(d, d, |r, c| match var[r][c] {
                Some(i) => v[i].clone(),
                None => Scalar::zero(),
            })
        })
        .collect())
}

/// Endomorphisms of `G` commuting with σ and with every `ad x`.
fn equivariant_centroid(t: &SymmetricTriple) -> Result<Vec<Mat>> {
    // solve in the basis [K | P], where σ-equivariance means block diagonal
    let alg = t.alg();
    let n = t.dim();
    let cols: Vec<Vec<Scalar>> = t.k().basis().iter().chain(t.p().basis()).cloned().collect();
    let adapted = Mat::from_cols(n, &cols)?;
    let back = adapted.inverse()?;
    // a generating set suffices; P generates G whenever P + [P, P] = G
    let pp = alg.bracket_subspaces(t.p(), t.p())?.sum(t.p())?;
    let gen_vecs: Vec<Vec<Scalar>> = if pp.dim() == n {
        t.p().basis().to_vec()
    } else {
        cols.clone()
    };
    let gens: Vec<Mat> = gen_vecs
        .iter()
        .map(|x| back.mul(&alg.ad(x)?)?.mul(&adapted))
        .collect::<Result<_>>()?;
    commuting_block_space(&[t.dim_k(), t.dim_p()], &gens)?
        .iter()
        .map(|f| adapted.mul(f)?.mul(&back))
        .collect()
}

/// Primary idempotents of `x`: one per irreducible factor of its minimal
/// polynomial, as polynomials in `x`.
fn primary_idempotents(x: &Mat) -> Result<Vec<Mat>> {
    let mu = minimal_polynomial(x)?;
    let parts: Vec<Poly> = mu.factor().into_iter().map(|(f, m)| f.pow(m)).collect();
    if parts.len() < 2 || parts.len() > MAX_PRIMARY_PARTS {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(parts.len());
    for (i, qi) in parts.iter().enumerate() {
        let others = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Poly::one(), |acc, (_, p)| acc.mul(p));
        // s·others + u·qi = 1, so s·others is 1 mod qi and 0 mod the rest
        let (g, s, _) = others.ext_gcd(qi);
        if g != Poly::one() {
            return Err(Error::Internal("primary parts are not coprime".into()));
        }
        let e = s.mul(&others).rem(&mu);
        out.push(e.eval_mat(x)?);
    }
    Ok(out)
}

/// Image of `e` restricted to `P`, in algebra coordinates.
fn p_image(t: &SymmetricTriple, e: &Mat) -> Result<Subspace> {
    let mut s = Subspace::zero(t.dim());
    for v in t.p().basis() {
        s.insert(e.mul_vec(v)?)?;
    }
    Ok(s)
}

/// Checks the splitting conditions for `P = A ⊕ B`.
fn admissible_split(t: &SymmetricTriple, a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.is_zero() || b.is_zero() || a.dim() + b.dim() != t.dim_p() {
        return Ok(false);
    }
    for x in a.basis() {
        for y in b.basis() {
            if !t.omega_eval(x, y).is_zero() {
                return Ok(false);
            }
        }
    }
    let alg = t.alg();
    if !alg.bracket_subspaces(a, b)?.is_zero() {
        return Ok(false);
    }
    for s in [a, b] {
        let g = alg.bracket_subspaces(s, s)?.sum(s)?;
        if !alg.is_subalgebra(&g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One admissible splitting `P = A ⊕ B`, if the search finds any.
fn find_split(t: &SymmetricTriple) -> Result<Option<(Subspace, Subspace)>> {
    let cent = equivariant_centroid(t)?;
    if cent.len() <= 1 {
        return Ok(None);
    }
    let n = t.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    let mut candidates: Vec<Mat> = cent.clone();
    for _ in 0..RANDOM_TRIES {
        let mut acc = Mat::zeros(n, n);
        for c in &cent {
            let k: i64 = rng.gen_range(-3..=3);
            if k != 0 {
                acc = acc.add(&c.scale(&Scalar::from_integer(k.into())))?;
            }
        }
        candidates.push(acc);
    }
    for x in &candidates {
        let idem = primary_idempotents(x)?;
        let r = idem.len();
        if r < 2 {
            continue;
        }
        // subsets containing the last part are complements of the others
        for mask in 1u32..(1 << (r - 1)) {
            let mut e = Mat::zeros(n, n);
            for (i, m) in idem.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    e = e.add(m)?;
                }
            }
            let f = Mat::identity(n).sub(&e)?;
            let a = p_image(t, &e)?;
            let b = p_image(t, &f)?;
            if admissible_split(t, &a, &b)? {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

struct Piece {
    triple: SymmetricTriple,
    /// Columns: the piece's basis in the coordinates of the original input.
    embedding: Mat,
}

fn split_recursive(t: SymmetricTriple, embedding: Mat, out: &mut Vec<Piece>) -> Result<()> {
    if t.dim() == 0 {
        return Ok(());
    }
    match find_split(&t)? {
        None => out.push(Piece {
            triple: t,
            embedding,
        }),
        Some((a, b)) => {
            for side in [a, b] {
                let ks = t.alg().bracket_subspaces(&side, &side)?;
                let (sub, emb) = sub_triple(&t, ks.basis(), side.basis())?;
                split_recursive(sub, embedding.mul(&emb)?, out)?;
            }
        }
    }
    Ok(())
}

/// Decomposes a valid triple into its flat factor and non-flat factors,
/// each indecomposable-by-search, and certifies the reassembly.
pub fn decompose(t: &SymmetricTriple) -> Result<Decomposition> {
    let (t0, t1, split) = flat_split(t)?;
    let n = t.dim();
    let d0 = t0.dim();
    let e1 = Mat::from_fn(n, t1.dim(), |r, c| split[(r, d0 + c)].clone());
    let mut pieces = Vec::new();
    split_recursive(t1, e1, &mut pieces)?;
    let mut keyed: Vec<(TripleFingerprint, Piece)> = pieces
        .into_iter()
        .map(|p| (p.triple.fingerprint(), p))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let mut cols: Vec<Vec<Scalar>> = (0..d0).map(|j| split.col(j)).collect();
    let mut factors = Vec::with_capacity(keyed.len());
    for (_, p) in keyed {
        cols.extend((0..p.embedding.cols()).map(|j| p.embedding.col(j)));
        factors.push(p.triple);
    }
    let d = Decomposition {
        flat_factor: t0,
        factors,
        assembly: Mat::from_cols(n, &cols)?,
    };
    if !d.reassembles(t)? {
        return Err(Error::Internal("decomposition does not reassemble".into()));
    }
    for f in &d.factors {
        if !f.validate().passed() {
            return Err(Error::Internal("a factor fails validation".into()));
        }
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub matched: bool,
    pub flat_dims: (usize, usize),
    pub left: Vec<TripleFingerprint>,
    pub right: Vec<TripleFingerprint>,
    pub reason: Option<String>,
}

/// Compares two decompositions by flat dimension and the multiset of factor
/// fingerprints. A match is necessary for isomorphic inputs, not sufficient.
pub fn verify_uniqueness_pair(d1: &Decomposition, d2: &Decomposition) -> MatchReport {
    let left = d1.factor_fingerprints();
    let right = d2.factor_fingerprints();
    let flat_dims = (d1.flat_dim(), d2.flat_dim());
    let reason = if flat_dims.0 != flat_dims.1 {
        Some(format!(
            "flat factors have dimensions {} and {}",
            flat_dims.0, flat_dims.1
        ))
    } else if left.len() != right.len() {
        Some(format!("{} factors against {}", left.len(), right.len()))
    } else if left != right {
        Some("factor fingerprints differ".into())
    } else {
        None
    };
    MatchReport {
        matched: reason.is_none(),
        flat_dims,
        left,
        right,
        reason,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtriple::samples::t2;

    #[test]
    fn flat_part_of_sum_with_plane() {
        let t = direct_sum_triples(&t2(1), &SymmetricTriple::flat_standard(1)).unwrap();
        let (t0, t1, m) = flat_split(&t).unwrap();
        assert_eq!(t0.dim(), 2);
        assert!(t0.is_flat());
        assert_eq!(t1.fingerprint(), t2(1).fingerprint());
        assert!(!m.det().is_zero());
    }

    #[test]
    fn flat_input() {
        let t = SymmetricTriple::flat_standard(2);
        let (t0, t1, _) = flat_split(&t).unwrap();
        assert_eq!((t0.dim(), t1.dim()), (4, 0));
        let d = decompose(&t).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.flat_dim(), 4);
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant(&SymmetricTriple::flat_standard(1)).unwrap().len(), 4);
        // ad(U) = [[0,1],[0,0]] on (e, f): commutant is {aI + bN}
        let c = commutant(&t2(1)).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn sum_of_two_planes_splits() {
        for (a, b) in [(1, 1), (1, -1), (-1, -1)] {
            let t = direct_sum_triples(&t2(a), &t2(b)).unwrap();
            let d = decompose(&t).unwrap();
            assert_eq!(d.factors.len(), 2);
            assert_eq!(d.flat_dim(), 0);
            let mut want = vec![t2(a).fingerprint(), t2(b).fingerprint()];
            want.sort();
            assert_eq!(d.factor_fingerprints(), want);
        }
    }

    #[test]
    fn single_factor_stays() {
        let d = decompose(&t2(-1)).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert!(d.reassembles(&t2(-1)).unwrap());
    }

    #[test]
    fn invalid_input_rejected() {
        let bad = SymmetricTriple::from_adapted(
            t2(1).alg().clone(),
            &[1, 2],
            Mat::zeros(2, 2),
        )
        .unwrap();
        assert!(matches!(decompose(&bad), Err(Error::InvalidTriple(_))));
    }

    #[test]
    fn match_report() {
        let a = decompose(&direct_sum_triples(&t2(1), &t2(-1)).unwrap()).unwrap();
        let b = decompose(&t2(1)).unwrap();
        assert!(verify_uniqueness_pair(&a, &a).matched);
        let r = verify_uniqueness_pair(&a, &b);
        assert!(!r.matched);
        assert!(r.reason.is_some());
    }
}
