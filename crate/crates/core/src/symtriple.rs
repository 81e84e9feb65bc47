//! Symplectic symmetric triples `(G, σ, Ω)`.
//!
//! `σ` is kept as a full matrix, so a triple may be presented in any basis.
//! `K` and `P` are the `+1` and `-1` eigenspaces, each stored in canonical
//! echelon form, and `Ω` is indexed by the echelon basis of `P` in pivot
//! order.
//!
//! Cochain convention: `(δξ)(x, y) = -ξ([x, y])`. A triple is exact when
//! the extension `Ω̲` of `Ω` by zero on `K` equals `δξ` for some covector
//! `ξ`. For the Heisenberg extension this gives `ξ = -E*`, where `E*` is
//! the coordinate function of the new central element.

use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{annihilator, LieAlgebra};
use crate::linalg::{
    dot, frac, inertia, is_zero_vec, q, scale_vec, unit, zero_vec, Inertia, Mat, Scalar,
    Subspace,
};

/// Antisymmetric bilinear form on the whole algebra, as a matrix in the
/// algebra's basis.
pub type TwoCochain = Mat;

/// Linear form on the algebra, as its values on the basis.
pub type Covector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTriple {
    alg: LieAlgebra,
    sigma: Mat,
    omega: Mat,
    k: Subspace,
    p: Subspace,
}

/// `(ker(σ - 1), ker(σ + 1))`, after checking `σ² = 1`.
pub fn split_sigma(sigma: &Mat) -> Result<(Subspace, Subspace)> {
    if !sigma.is_square() {
        return Err(Error::DimensionMismatch {
            expected: sigma.rows(),
            found: sigma.cols(),
        });
    }
    let n = sigma.rows();
    if !sigma.mul(sigma)?.is_identity() {
        return Err(Error::NotInvolution);
    }
    let id = Mat::identity(n);
    let k = Subspace::from_spanning(n, sigma.sub(&id)?.kernel())?;
    let p = Subspace::from_spanning(n, sigma.add(&id)?.kernel())?;
    if k.dim() + p.dim() != n || !k.intersection(&p)?.is_zero() {
        return Err(Error::InvalidTriple(
            "eigenspaces of sigma do not span the algebra".into(),
        ));
    }
    Ok((k, p))
}

/// One pass/fail line of a validation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &str) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &str, witness: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Jacobi identity for the underlying table.
    pub jacobi: CheckOutcome,
    /// `σ` is an involutive automorphism.
    pub automorphism: CheckOutcome,
    /// `[P, P] = K`.
    pub pp_spans_k: CheckOutcome,
    /// No nonzero `k ∈ K` with `[k, P] = 0`.
    pub faithful: CheckOutcome,
    /// `Ω` is nondegenerate.
    pub nondegenerate: CheckOutcome,
    /// `Ω([k, p], p') + Ω(p, [k, p']) = 0`.
    pub k_invariant: CheckOutcome,
}

impl ValidationReport {
    pub fn checks(&self) -> [&CheckOutcome; 6] {
        [
            &self.jacobi,
            &self.automorphism,
            &self.pp_spans_k,
            &self.faithful,
            &self.nondegenerate,
            &self.k_invariant,
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed)
    }

    /// Every check except faithfulness: the axioms of an exact triple, which
    /// is what a Heisenberg extension produces (its central `E` lies in `K`
    /// and acts trivially on `P`).
    pub fn passed_except_faithfulness(&self) -> bool {
        self.checks()
            .iter()
            .filter(|c| c.name != "faithful")
            .all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.checks().into_iter().filter(|c| !c.passed).collect()
    }
}

/// Invariants that any isomorphism of triples preserves. Two triples with
/// different fingerprints are not isomorphic; equal fingerprints prove
/// nothing.
#[derive(
    Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct TripleFingerprint {
    pub dim_g: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub dim_center_g: usize,
    pub dim_center_k: usize,
    pub killing: Inertia,
    pub killing_on_k: Inertia,
    pub exact: bool,
    pub dim_p_radical: usize,
    pub ad_k_nilpotent_on_p: bool,
}

/// `P ∩ rad(G)` together with the dimension bound that holds when `G` is
/// neither solvable nor semisimple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalPart {
    pub p_r: Subspace,
    /// `None` when `G` is solvable or semisimple and the bound does not apply.
    pub bound_ok: Option<bool>,
    pub isotropic: bool,
}

impl SymmetricTriple {
    /// Assembles a triple, checking only the shapes, `σ² = 1` and the
    /// antisymmetry of `Ω`. The remaining axioms are checked by
    /// [`SymmetricTriple::validate`].
    pub fn new(alg: LieAlgebra, sigma: Mat, omega: Mat) -> Result<Self> {
        if sigma.rows() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: sigma.rows(),
            });
        }
        let (k, p) = split_sigma(&sigma)?;
        if omega.rows() != p.dim() || omega.cols() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: omega.rows(),
            });
        }
        if !omega.is_antisymmetric() {
            return Err(Error::InvalidTriple("omega is not antisymmetric".into()));
        }
        Ok(Self {
            alg,
            sigma,
            omega,
            k,
            p,
        })
    }

    /// Triple in a basis adapted to `σ`: the listed indices span `P`, the
    /// rest span `K`. `omega` is indexed by `p_indices` sorted ascending.
    pub fn from_adapted(alg: LieAlgebra, p_indices: &[usize], omega: Mat) -> Result<Self> {
        let n = alg.dim();
        let mut diag = vec![Scalar::one(); n];
        for &i in p_indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, dim: n });
            }
            diag[i] = -Scalar::one();
        }
        Self::new(alg, Mat::diag(&diag), omega)
    }

    /// Flat triple: abelian algebra, `σ = -1`.
    pub fn flat(omega: Mat) -> Result<Self> {
        let n = omega.rows();
        let labels = (0..n).map(|i| format!("p{i}")).collect();
        Self::from_adapted(
            LieAlgebra::abelian_with_labels(labels),
            &(0..n).collect::<Vec<_>>(),
            omega,
        )
    }

    /// Standard flat triple of dimension `2m` with `Ω = [[0, I], [-I, 0]]`.
    pub fn flat_standard(m: usize) -> Self {
        Self::flat(standard_symplectic(m)).expect("standard form is valid")
    }

    /// The zero-dimensional triple.
    pub fn point() -> Self {
        Self::flat(Mat::zeros(0, 0)).expect("empty triple")
    }

    pub fn alg(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn sigma(&self) -> &Mat {
        &self.sigma
    }

    pub fn omega(&self) -> &Mat {
        &self.omega
    }

    pub fn k(&self) -> &Subspace {
        &self.k
    }

    pub fn p(&self) -> &Subspace {
        &self.p
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }

    pub fn dim_p(&self) -> usize {
        self.p.dim()
    }

    pub fn is_flat(&self) -> bool {
        self.k.is_zero()
    }

    /// `(x + σx) / 2`
    pub fn k_component(&self, x: &[Scalar]) -> Vec<Scalar> {
        let sx = self.sigma.mul_vec(x).expect("dimension checked");
        x.iter().zip(&sx).map(|(a, b)| (a + b) * frac(1, 2)).collect()
    }

    /// `(x - σx) / 2`
    pub fn p_component(&self, x: &[Scalar]) -> Vec<Scalar> {
        let sx = self.sigma.mul_vec(x).expect("dimension checked");
        x.iter().zip(&sx).map(|(a, b)| (a - b) * frac(1, 2)).collect()
    }

    /// Coordinates of the `P`-component of `x` in the echelon basis of `P`.
    pub fn p_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        let v = self.p_component(x);
        self.p.pivots().iter().map(|&i| v[i].clone()).collect()
    }

    /// Coordinates of the `K`-component of `x` in the echelon basis of `K`.
    pub fn k_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        let v = self.k_component(x);
        self.k.pivots().iter().map(|&i| v[i].clone()).collect()
    }

    /// `Ω(x, y)` for `x, y ∈ P` given in algebra coordinates.
    pub fn omega_eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.omega.bilinear(&self.p_coords(x), &self.p_coords(y))
    }

    /// Matrix of `ad(k)` restricted to `P`, in the echelon basis of `P`.
    /// Fails if `[k, P] ⊄ P`.
    pub fn ad_on_p(&self, k: &[Scalar]) -> Result<Mat> {
        let d = self.dim_p();
        let mut m = Mat::zeros(d, d);
        for (b, pb) in self.p.basis().iter().enumerate() {
            let v = self.alg.bracket(k, pb)?;
            let c = self.p.coordinates(&v).ok_or(Error::NotAutomorphism)?;
            for (a, x) in c.into_iter().enumerate() {
                m[(a, b)] = x;
            }
        }
        Ok(m)
    }

    pub fn validate(&self) -> ValidationReport {
        validate_tss(self)
    }

    /// Ω extended by zero on `K`, in the algebra's basis.
    pub fn extend_omega(&self) -> TwoCochain {
        let n = self.dim();
        let proj = Mat::from_fn(self.dim_p(), n, |_, _| Scalar::zero());
        let mut proj = proj;
        for i in 0..n {
            let c = self.p_coords(&unit(n, i));
            for (a, x) in c.into_iter().enumerate() {
                proj[(a, i)] = x;
            }
        }
        proj.congruence(&self.omega).expect("shapes agree")
    }

    /// A covector `ξ` with `δξ = Ω̲` and `ξ(P) = 0`, if one exists. Free
    /// parameters of the solution are set to zero, which puts the zeros in
    /// the highest-index coordinates of `K`.
    pub fn exactness(&self) -> Option<Covector> {
        let n = self.dim();
        let dk = self.dim_k();
        let adapted: Vec<&Vec<Scalar>> = self.k.basis().iter().chain(self.p.basis()).collect();
        // unknowns η_a = ξ(k_a); equation rows [-kc([u,v]) | Ω̲(u,v)]
        let mut rows = Subspace::zero(dk + 1);
        for a in 0..n {
            for b in a + 1..n {
                let br = self.alg.bracket_unchecked(adapted[a], adapted[b]);
                let kc = self.k_coords(&br);
                let rhs = if a >= dk && b >= dk {
                    self.omega[(a - dk, b - dk)].clone()
                } else {
                    Scalar::zero()
                };
                if is_zero_vec(&kc) && rhs.is_zero() {
                    continue;
                }
                let mut row: Vec<Scalar> = kc.into_iter().map(|x| -x).collect();
                row.push(rhs);
                rows.insert(row).expect("length dk + 1");
            }
        }
        if rows.pivots().last() == Some(&dk) {
            return None;
        }
        let mut eta = zero_vec(dk);
        for (r, &piv) in rows.basis().iter().zip(rows.pivots()) {
            eta[piv] = r[dk].clone();
        }
        let xi: Covector = (0..n)
            .map(|i| dot(&eta, &self.k_coords(&unit(n, i))))
            .collect();
        debug_assert_eq!(coboundary(&self.alg, &xi), self.extend_omega());
        Some(xi)
    }

    pub fn is_exact(&self) -> bool {
        self.exactness().is_some()
    }

    /// `ℝE ⊕ G` with `[X, Y] = Ω̲(X, Y) E + [X, Y]_G`, `σ(E) = E` and the same
    /// `Ω` on `P`. Always exact, with `ξ = -E*`.
    pub fn heisenberg_extension(&self) -> Result<SymmetricTriple> {
        let c = self.extend_omega();
        let alg = self.alg.central_extension(&c, "E")?;
        let sigma = Mat::block_diag(&Mat::identity(1), &self.sigma);
        let h = SymmetricTriple::new(alg, sigma, self.omega.clone())?;
        let mut xi = zero_vec(h.dim());
        xi[0] = -Scalar::one();
        if coboundary(&h.alg, &xi) != h.extend_omega() {
            return Err(Error::Internal(
                "Heisenberg extension is not exact with xi = -E*".into(),
            ));
        }
        Ok(h)
    }

    /// `R(X, Y) Z = -[[X, Y], Z]` for `X, Y, Z ∈ P`.
    pub fn curvature(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y, z] {
            if !self.p.contains(v) {
                return Err(Error::Precondition("curvature arguments must lie in P".into()));
            }
        }
        let xy = self.alg.bracket(x, y)?;
        let r = scale_vec(&q(-1), &self.alg.bracket(&xy, z)?);
        if !self.p.contains(&r) {
            return Err(Error::NotAutomorphism);
        }
        Ok(r)
    }

    /// Transport along `M` (columns: new basis in old coordinates).
    pub fn transport(&self, m: &Mat) -> Result<SymmetricTriple> {
        let alg = self.alg.change_of_basis(m)?;
        let inv = m.inverse()?;
        let sigma = inv.mul(&self.sigma)?.mul(m)?;
        let (_, p_new) = split_sigma(&sigma)?;
        let d = self.dim_p();
        let mut c = Mat::zeros(d, d);
        for (a, v) in p_new.basis().iter().enumerate() {
            let old = m.mul_vec(v)?;
            let co = self.p.coordinates(&old).ok_or(Error::Internal(
                "transported P leaves P".into(),
            ))?;
            for (r, x) in co.into_iter().enumerate() {
                c[(r, a)] = x;
            }
        }
        let omega = c.congruence(&self.omega)?;
        SymmetricTriple::new(alg, sigma, omega)
    }

    /// A random rational change of basis and the transported triple.
    pub fn scramble<R: Rng>(&self, rng: &mut R) -> Result<(SymmetricTriple, Mat)> {
        let m = random_invertible(self.dim(), rng);
        Ok((self.transport(&m)?, m))
    }

    pub fn center_of_k(&self) -> Subspace {
        center_of_k(self)
    }

    pub fn fingerprint(&self) -> TripleFingerprint {
        fingerprint(self)
    }

    /// `ad(k)|_P` is nilpotent for every `k ∈ K`.
    pub fn ad_k_nilpotent_on_p(&self) -> bool {
        let mats: Vec<Mat> = match self
            .k
            .basis()
            .iter()
            .map(|k| self.ad_on_p(k))
            .collect::<Result<_>>()
        {
            Ok(m) => m,
            Err(_) => return false,
        };
        // V₀ = P, V_{i+1} = Σ A V_i; every element of the span is nilpotent
        // iff this reaches 0.
        let d = self.dim_p();
        let mut cur = Subspace::full(d);
        for _ in 0..=d {
            if cur.is_zero() {
                return true;
            }
            let mut next = Subspace::zero(d);
            for a in &mats {
                for v in cur.basis() {
                    next.insert(a.mul_vec(v).expect("square")).expect("dim d");
                }
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
        cur.is_zero()
    }
}

/// `[[0, I], [-I, 0]]` of size `2m`.
pub fn standard_symplectic(m: usize) -> Mat {
    Mat::from_fn(2 * m, 2 * m, |i, j| {
        if j == i + m {
            q(1)
        } else if i == j + m {
            q(-1)
        } else {
            q(0)
        }
    })
}

/// Random invertible matrix with entries in `{0, ±1/2, ±1, ±2}`.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> Mat {
    let choices = [q(0), q(1), q(-1), q(2), q(-2), frac(1, 2), frac(-1, 2)];
    loop {
        let m = Mat::from_fn(n, n, |_, _| choices[rng.gen_range(0..choices.len())].clone());
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn validate_tss(t: &SymmetricTriple) -> ValidationReport {
    let alg = &t.alg;
    let jac = alg.jacobi_check();
    let jacobi = if jac.passed {
        CheckOutcome::pass("jacobi")
    } else {
        let (i, j, k) = jac.violations[0];
        let l = alg.labels();
        CheckOutcome::fail(
            "jacobi",
            format!("Jacobiator of ({}, {}, {}) is nonzero", l[i], l[j], l[k]),
        )
    };

    // σ² = 1 holds by construction; with G = K ⊕ P, σ is an automorphism
    // iff [K,K] ⊆ K, [K,P] ⊆ P and [P,P] ⊆ K.
    let mut automorphism = CheckOutcome::pass("automorphism");
    let kb = t.k.basis();
    let pb = t.p.basis();
    'outer: for (xs, ys, target, what) in [
        (kb, kb, &t.k, "[K,K] not in K"),
        (kb, pb, &t.p, "[K,P] not in P"),
        (pb, pb, &t.k, "[P,P] not in K"),
    ] {
        for x in xs {
            for y in ys {
                let v = alg.bracket_unchecked(x, y);
                if !target.contains(&v) {
                    automorphism = CheckOutcome::fail(
                        "automorphism",
                        format!("{what}: [{}, {}]", alg.describe(x), alg.describe(y)),
                    );
                    break 'outer;
                }
            }
        }
    }

    let pp = alg.bracket_subspaces(&t.p, &t.p).expect("same ambient");
    let pp_spans_k = if pp == t.k {
        CheckOutcome::pass("pp_spans_k")
    } else {
        CheckOutcome::fail(
            "pp_spans_k",
            format!("dim [P,P] = {}, dim K = {}, equal = false", pp.dim(), t.dim_k()),
        )
    };

    // kernel of k ↦ ad(k)|_P in K-coordinates
    let dk = t.dim_k();
    let mut rows = Subspace::zero(dk);
    let images: Vec<Vec<Vec<Scalar>>> = kb
        .iter()
        .map(|k| pb.iter().map(|p| alg.bracket_unchecked(k, p)).collect())
        .collect();
    'rows: for b in 0..pb.len() {
        for i in 0..t.dim() {
            let row: Vec<Scalar> = (0..dk).map(|a| images[a][b][i].clone()).collect();
            if !is_zero_vec(&row) {
                rows.insert(row).expect("length dk");
                if rows.dim() == dk {
                    break 'rows;
                }
            }
        }
    }
    let kernel = annihilator(&rows);
    let faithful = if kernel.is_zero() {
        CheckOutcome::pass("faithful")
    } else {
        let v = t.k.vector_from_coords(&kernel.basis()[0]);
        CheckOutcome::fail(
            "faithful",
            format!("{} acts trivially on P", alg.describe(&v)),
        )
    };

    let rank = t.omega.rank();
    let nondegenerate = if rank == t.dim_p() {
        CheckOutcome::pass("nondegenerate")
    } else {
        CheckOutcome::fail(
            "nondegenerate",
            format!("rank of omega is {rank} < dim P = {}", t.dim_p()),
        )
    };

    let mut k_invariant = CheckOutcome::pass("k_invariant");
    'kinv: for k in kb {
        let a = match t.ad_on_p(k) {
            Ok(a) => a,
            Err(_) => {
                k_invariant = CheckOutcome::fail(
                    "k_invariant",
                    format!("ad({}) does not preserve P", alg.describe(k)),
                );
                break;
            }
        };
        let lhs = a
            .transpose()
            .mul(&t.omega)
            .and_then(|x| x.add(&t.omega.mul(&a)?))
            .expect("square");
        for i in 0..t.dim_p() {
            for j in 0..t.dim_p() {
                if !lhs[(i, j)].is_zero() {
                    k_invariant = CheckOutcome::fail(
                        "k_invariant",
                        format!(
                            "Omega([k,p],p') + Omega(p,[k,p']) = {} for k = {}, p = {}, p' = {}",
                            lhs[(i, j)],
                            alg.describe(k),
                            alg.describe(&pb[i]),
                            alg.describe(&pb[j])
                        ),
                    );
                    break 'kinv;
                }
            }
        }
    }

    ValidationReport {
        jacobi,
        automorphism,
        pp_spans_k,
        faithful,
        nondegenerate,
        k_invariant,
    }
}

/// `(δξ)(b_i, b_j) = -ξ([b_i, b_j])`.
pub fn coboundary(alg: &LieAlgebra, xi: &[Scalar]) -> TwoCochain {
    let n = alg.dim();
    let mut c = Mat::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = Scalar::zero();
            for (k, x) in alg.basis_bracket(i, j) {
                v -= x * &xi[*k];
            }
            c[(j, i)] = -v.clone();
            c[(i, j)] = v;
        }
    }
    c
}

/// `c([x,y],z) + c([y,z],x) + c([z,x],y) = 0` on every basis triple.
pub fn cocycle_check(alg: &LieAlgebra, c: &TwoCochain) -> bool {
    let n = alg.dim();
    if c.rows() != n || !c.is_antisymmetric() {
        return false;
    }
    let eval = |i: usize, j: usize, k: usize| -> Scalar {
        let mut s = Scalar::zero();
        for (l, x) in alg.basis_bracket(i, j) {
            s += x * &c[(*l, k)];
        }
        s
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !(eval(i, j, k) + eval(j, k, i) + eval(k, i, j)).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// `t₁ ⊕ t₂`: block algebra, block `σ`, block `Ω`.
pub fn direct_sum_triples(a: &SymmetricTriple, b: &SymmetricTriple) -> Result<SymmetricTriple> {
    let alg = a.alg.direct_sum(&b.alg);
    let sigma = Mat::block_diag(&a.sigma, &b.sigma);
    // The echelon basis of P₁ ⊕ P₂ is the first basis followed by the
    // shifted second one, so Ω is block diagonal in that order.
    let omega = Mat::block_diag(&a.omega, &b.omega);
    SymmetricTriple::new(alg, sigma, omega)
}

/// Center of the subalgebra `K`, as a subspace of `G`.
pub fn center_of_k(t: &SymmetricTriple) -> Subspace {
    let n = t.dim();
    match t.alg.restrict(&t.k) {
        Ok(kalg) => {
            let z = kalg.center();
            Subspace::from_spanning(n, z.basis().iter().map(|c| t.k.vector_from_coords(c)))
                .expect("ambient n")
        }
        Err(_) => Subspace::zero(n),
    }
}

pub fn radical_part(t: &SymmetricTriple) -> Result<RadicalPart> {
    let rad = t.alg.radical()?;
    let p_r = t.p.intersection(&rad)?;
    let solvable = rad.dim() == t.dim();
    let semisimple = rad.is_zero();
    let bound_ok = if solvable || semisimple {
        None
    } else {
        Some(2 <= p_r.dim() && p_r.dim() + 2 <= t.dim_p())
    };
    let isotropic = p_r
        .basis()
        .iter()
        .all(|x| p_r.basis().iter().all(|y| t.omega_eval(x, y).is_zero()));
    Ok(RadicalPart {
        p_r,
        bound_ok,
        isotropic,
    })
}

pub fn fingerprint(t: &SymmetricTriple) -> TripleFingerprint {
    let alg = &t.alg;
    let beta = alg.killing_form();
    let kb = t.k.basis_matrix();
    let beta_k = kb.congruence(&beta).expect("shapes agree");
    let dim_p_radical = radical_part(t).map(|r| r.p_r.dim()).unwrap_or(0);
    TripleFingerprint {
        dim_g: t.dim(),
        dim_k: t.dim_k(),
        dim_p: t.dim_p(),
        derived_series: alg.derived_series().iter().map(Subspace::dim).collect(),
        lower_central_series: alg
            .lower_central_series()
            .iter()
            .map(Subspace::dim)
            .collect(),
        dim_center_g: alg.center().dim(),
        dim_center_k: center_of_k(t).dim(),
        killing: inertia(&beta),
        killing_on_k: inertia(&beta_k),
        exact: t.is_exact(),
        dim_p_radical,
        ad_k_nilpotent_on_p: t.ad_k_nilpotent_on_p(),
    }
}

#[cfg(test)]
pub(crate) mod samples {
    use super::*;
    use crate::liealg::samples::labels;

    /// t²_ε on (U, e, f): [U, f] = e, [e, f] = εU, Ω(e, f) = 1.
    pub fn t2(eps: i64) -> SymmetricTriple {
        let alg = LieAlgebra::from_sparse(
            labels(&["U", "e", "f"]),
            vec![(0, 2, vec![(1, q(1))]), (1, 2, vec![(0, q(eps))])],
        )
        .unwrap();
        SymmetricTriple::from_adapted(alg, &[1, 2], standard_symplectic(1)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::samples::t2;
    use super::*;
    use crate::liealg::samples::sl2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_of_t2() {
        let t = t2(1);
        assert_eq!(*t.k(), Subspace::coordinate(3, &[0]));
        assert_eq!(*t.p(), Subspace::coordinate(3, &[1, 2]));
        let (k, p) = split_sigma(&Mat::identity(3).scale(&q(-1))).unwrap();
        assert!(k.is_zero());
        assert_eq!(p.dim(), 3);
        let bad = Mat::from_i64(&[&[1, 1], &[0, -1]]);
        assert!(split_sigma(&bad).is_ok());
        let not_inv = Mat::from_i64(&[&[1, 1], &[0, 1]]);
        assert!(matches!(split_sigma(&not_inv), Err(Error::NotInvolution)));
    }

    #[test]
    fn t2_validates_and_fails_without_omega() {
        for eps in [1, -1] {
            let t = t2(eps);
            let r = t.validate();
            assert!(r.passed(), "{r:?}");
            let zero = SymmetricTriple::new(t.alg().clone(), t.sigma().clone(), Mat::zeros(2, 2))
                .unwrap();
            let r = zero.validate();
            assert!(!r.nondegenerate.passed);
            assert!(r.jacobi.passed && r.automorphism.passed && r.k_invariant.passed);
        }
    }

    #[test]
    fn omega_extension_and_exactness() {
        let t = t2(1);
        let ext = t.extend_omega();
        assert_eq!(ext, Mat::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]));
        assert!(cocycle_check(t.alg(), &ext));
        let xi = t.exactness().unwrap();
        // -ξ([e,f]) = -ξ(U) = 1
        assert_eq!(xi, vec![q(-1), q(0), q(0)]);
        assert_eq!(coboundary(t.alg(), &xi), ext);
        let flat = SymmetricTriple::flat_standard(1);
        assert!(flat.exactness().is_none());
    }

    #[test]
    fn sl2_coboundary_of_killing_dual() {
        let g = sl2();
        let beta = g.killing_form();
        let xi = beta.mul_vec(&unit(3, 0)).unwrap();
        let c = coboundary(&g, &xi);
        assert_eq!(c[(1, 2)], q(-8));
        assert!(cocycle_check(&g, &c));
        assert!(cocycle_check(&LieAlgebra::abelian(3), &coboundary(&LieAlgebra::abelian(3), &xi)));
    }

    #[test]
    fn random_cochain_on_sl2_is_a_cocycle() {
        // every 2-cochain on a 3-dimensional algebra is closed: one basis
        // triple and the cyclic sum of c([x,y],z) over it
        let g = sl2();
        let c = Mat::from_i64(&[&[0, 0, 1], &[0, 0, 1], &[-1, -1, 0]]);
        // c([h,e],f) + c([e,f],h) + c([f,h],e) = 2c(e,f) + c(h,h) + 2c(f,e) = 0
        assert!(cocycle_check(&g, &c));
    }

    #[test]
    fn heisenberg_of_flat_plane() {
        let h = SymmetricTriple::flat_standard(1)
            .heisenberg_extension()
            .unwrap();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.alg().basis_bracket_dense(1, 2), vec![q(1), q(0), q(0)]);
        assert!(h.is_exact());
        let r = h.validate();
        assert!(r.passed_except_faithfulness());
        assert!(!r.faithful.passed);
        assert_eq!(*h.k(), Subspace::coordinate(3, &[0]));
        assert_eq!(h.alg().center(), Subspace::coordinate(3, &[0]));
    }

    #[test]
    fn curvature_of_t2() {
        let t = t2(-1);
        let e = unit(3, 1);
        let f = unit(3, 2);
        // R(e,f)e = -[[e,f],e] = -ε[U,e] = 0 since [U,e] = 0
        assert!(is_zero_vec(&t.curvature(&e, &f, &e).unwrap()));
        // R(e,f)f = -ε[U,f] = -εe
        assert_eq!(t.curvature(&e, &f, &f).unwrap(), vec![q(0), q(1), q(0)]);
        assert_eq!(
            t.curvature(&f, &e, &f).unwrap(),
            vec![q(0), q(-1), q(0)]
        );
        assert!(t.curvature(&unit(3, 0), &e, &f).is_err());
    }

    #[test]
    fn direct_sum_and_fingerprint() {
        let s = direct_sum_triples(&t2(1), &t2(-1)).unwrap();
        assert!(s.validate().passed());
        let f = s.fingerprint();
        assert_eq!((f.dim_g, f.dim_k, f.dim_p), (6, 2, 4));
        let p = direct_sum_triples(&t2(1), &SymmetricTriple::point()).unwrap();
        assert_eq!(p, t2(1));
    }

    #[test]
    fn fingerprint_survives_transport() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = direct_sum_triples(&t2(1), &SymmetricTriple::flat_standard(1)).unwrap();
        let (s, _) = t.scramble(&mut rng).unwrap();
        assert!(s.validate().passed());
        assert_eq!(s.fingerprint(), t.fingerprint());
        assert_eq!(s.is_exact(), t.is_exact());
    }

    #[test]
    fn center_of_k_and_radical_part() {
        let t = t2(1);
        assert_eq!(t.center_of_k().dim(), 1);
        let r = radical_part(&t).unwrap();
        assert_eq!(r.bound_ok, None);
        assert_eq!(SymmetricTriple::flat_standard(2).center_of_k().dim(), 0);
    }
}
