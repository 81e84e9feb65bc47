//! Finite-dimensional Lie algebras given by structure constants.
//!
//! The bracket table is stored sparsely: `[b_i, b_j]` is a list of
//! `(index, coefficient)` pairs sorted by index. Antisymmetry is enforced
//! when the table is built; the Jacobi identity is checked, never assumed.
//!
//! Basis transport convention: if the columns of `M` express a new basis in
//! terms of the old one, the new constants satisfy
//! `[u, v]' = M⁻¹ [M u, M v]`, and bilinear forms transform as `Mᵀ β M`.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, max_abs, unit, zero_vec, Mat, Scalar, Subspace};

/// Sparse vector: `(index, coefficient)` pairs, indices strictly increasing,
/// coefficients nonzero.
pub type SparseVec = Vec<(usize, Scalar)>;

fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn sparse_neg(v: &SparseVec) -> SparseVec {
    v.iter().map(|(i, c)| (*i, -c)).collect()
}

fn add_sparse_into(acc: &mut [Scalar], coeff: &Scalar, v: &SparseVec) {
    for (i, c) in v {
        acc[*i] += coeff * c;
    }
}

/// Result of checking the Jacobi identity on every basis triple `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub passed: bool,
    /// Largest absolute coordinate of any Jacobiator.
    pub max_defect: Scalar,
    /// Basis triples with a nonzero Jacobiator.
    pub violations: Vec<(usize, usize, usize)>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LieAlgebra(dim {}) {{", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = &self.table[i][j];
                if v.is_empty() {
                    continue;
                }
                let terms: Vec<String> = v
                    .iter()
                    .map(|(k, c)| format!("{}*{}", c, self.labels[*k]))
                    .collect();
                writeln!(
                    f,
                    "  [{}, {}] = {}",
                    self.labels[i],
                    self.labels[j],
                    terms.join(" + ")
                )?;
            }
        }
        write!(f, "}}")
    }
}

/// Default labels `b0, b1, ...`.
pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("b{i}")).collect()
}

impl LieAlgebra {
    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        Self::abelian_with_labels(default_labels(dim))
    }

    pub fn abelian_with_labels(labels: Vec<String>) -> Self {
        let dim = labels.len();
        Self {
            dim,
            labels,
            table: vec![vec![Vec::new(); dim]; dim],
        }
    }

    /// Builds an algebra from bracket entries `(i, j, [b_i, b_j])`.
    ///
    /// Unlisted brackets are zero, `[b_j, b_i]` is filled in by
    /// antisymmetry, and an entry that contradicts an earlier one (including
    /// a nonzero `[b_i, b_i]`) is rejected.
    pub fn from_brackets<I>(labels: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        let dim = labels.len();
        let mut dense: Vec<Vec<Option<Vec<Scalar>>>> = vec![vec![None; dim]; dim];
        for (i, j, v) in entries {
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if i == j {
                if !is_zero_vec(&v) {
                    return Err(Error::NotAntisymmetric { i, j });
                }
                continue;
            }
            let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
            match &dense[i][j] {
                Some(old) if *old != v => return Err(Error::NotAntisymmetric { i, j }),
                _ => {}
            }
            dense[i][j] = Some(v);
            dense[j][i] = Some(neg);
        }
        let table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| e.map(|v| sparse_from_dense(&v)).unwrap_or_default())
                    .collect()
            })
            .collect();
        Ok(Self { dim, labels, table })
    }

    /// Builds an algebra from sparse entries with coefficients given as
    /// `(basis index, coefficient)` lists. Convenient for hand-written tables.
    pub fn from_sparse<I>(labels: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, Scalar)>)>,
    {
        let dim = labels.len();
        let mut dense_entries = Vec::new();
        for (i, j, terms) in entries {
            let mut v = zero_vec(dim);
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                v[k] += c;
            }
            dense_entries.push((i, j, v));
        }
        Self::from_brackets(labels, dense_entries)
    }

    /// Full dense table `c[i][j]`. Must be exactly antisymmetric.
    pub fn from_table(labels: Vec<String>, c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = labels.len();
        if c.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: c.len(),
            });
        }
        for i in 0..dim {
            if c[i].len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c[i].len(),
                });
            }
            for j in 0..dim {
                if c[i][j].len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: c[i][j].len(),
                    });
                }
                let anti = c[i][j].iter().zip(&c[j][i]).all(|(a, b)| *a == -b);
                if !anti {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        let table = c
            .iter()
            .map(|row| row.iter().map(|v| sparse_from_dense(v)).collect())
            .collect();
        Ok(Self { dim, labels, table })
    }

    /// The linear span of the given matrices is assumed closed under the
    /// commutator; structure constants are read off by solving in that span.
    pub fn from_matrix_basis(labels: Vec<String>, mats: &[Mat]) -> Result<Self> {
        let dim = mats.len();
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        let flat: Vec<Vec<Scalar>> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let len = flat.first().map_or(0, Vec::len);
        let basis = Mat::from_cols(len, &flat)?;
        if basis.rank() != dim {
            return Err(Error::Precondition(
                "matrices are linearly dependent".into(),
            ));
        }
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let comm = mats[i].mul(&mats[j])?.sub(&mats[j].mul(&mats[i])?)?;
                let coords = basis.solve(comm.entries())?.ok_or_else(|| {
                    Error::Precondition(format!(
                        "commutator [{}, {}] leaves the span",
                        labels[i], labels[j]
                    ))
                })?;
                entries.push((i, j, coords));
            }
        }
        Self::from_brackets(labels, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Index of a basis label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sparse `[b_i, b_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// Dense `[b_i, b_j]`.
    pub fn basis_bracket_dense(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = zero_vec(self.dim);
        add_sparse_into(&mut v, &Scalar::one(), &self.table[i][j]);
        v
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.dim);
        let xs: Vec<usize> = (0..self.dim).filter(|&i| !x[i].is_zero()).collect();
        let ys: Vec<usize> = (0..self.dim).filter(|&j| !y[j].is_zero()).collect();
        for &i in &xs {
            for &j in &ys {
                let t = &self.table[i][j];
                if t.is_empty() {
                    continue;
                }
                let c = &x[i] * &y[j];
                add_sparse_into(&mut out, &c, t);
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Mat> {
        self.check_len(x)?;
        let mut m = Mat::zeros(self.dim, self.dim);
        for i in (0..self.dim).filter(|&i| !x[i].is_zero()) {
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)] += &x[i] * c;
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = zero_vec(self.dim);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (l, coeff) in &self.table[a][b] {
                add_sparse_into(&mut out, coeff, &self.table[*l][c]);
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> JacobiReport {
        let mut max_defect = Scalar::zero();
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let jac = self.jacobiator(i, j, k);
                    if !is_zero_vec(&jac) {
                        let m = max_abs(&jac);
                        if m > max_defect {
                            max_defect = m;
                        }
                        violations.push((i, j, k));
                    }
                }
            }
        }
        JacobiReport {
            passed: violations.is_empty(),
            max_defect,
            violations,
        }
    }

    /// `β(b_i, b_j) = tr(ad b_i ∘ ad b_j)`.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim;
        // ad_i[k][l] = coefficient of b_l in [b_i, b_k]; dense lookup keeps
        // the trace sum cheap.
        let ads: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| (0..n).map(|k| self.basis_bracket_dense(i, k)).collect())
            .collect();
        let mut beta = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad_i ad_j) = Σ_k Σ_l (ad_j)_{l k} (ad_i)_{k l}
                //              = Σ_k Σ_{(l,c) in [b_j, b_k]} c · coeff of b_k in [b_i, b_l]
                let mut acc = Scalar::zero();
                for k in 0..n {
                    for (l, c) in &self.table[j][k] {
                        let d = &ads[i][*l][k];
                        if !d.is_zero() {
                            acc += c * d;
                        }
                    }
                }
                beta[(j, i)] = acc.clone();
                beta[(i, j)] = acc;
            }
        }
        beta
    }

    /// The covector `β(x, ·)`, without forming the whole Killing matrix.
    pub fn killing_with(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let adx = self.ad(x)?;
        let n = self.dim;
        Ok((0..n)
            .map(|j| {
                // tr(ad x ∘ ad b_j) = Σ_k Σ_{(l,c) in [b_j, b_k]} (ad x)_{k l} c
                let mut acc = Scalar::zero();
                for k in 0..n {
                    for (l, c) in &self.table[j][k] {
                        let a = &adx[(k, *l)];
                        if !a.is_zero() {
                            acc += a * c;
                        }
                    }
                }
                acc
            })
            .collect())
    }

    /// `[S, T]` as a subspace.
    pub fn bracket_subspaces(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        let mut out = Subspace::zero(self.dim);
        for x in s.basis() {
            for y in t.basis() {
                out.insert(self.bracket(x, y)?)?;
                if out.dim() == self.dim {
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let mut out = Subspace::zero(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !self.table[i][j].is_empty() {
                    // dimensions agree by construction
                    let _ = out.insert(self.basis_bracket_dense(i, j));
                }
            }
        }
        out
    }

    /// `D⁰ = G`, `D^{k+1} = [D^k, D^k]`, up to and including the first
    /// repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("nonempty");
            let next = if last.dim() == self.dim {
                self.derived_algebra()
            } else {
                self.bracket_subspaces(last, last).expect("same ambient")
            };
            let done = next == *last;
            if done {
                return series;
            }
            let zero = next.is_zero();
            series.push(next);
            if zero {
                return series;
            }
        }
    }

    /// `C⁰ = G`, `C^{k+1} = [G, C^k]`.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = if last.dim() == self.dim {
                self.derived_algebra()
            } else {
                self.bracket_subspaces(&full, last).expect("same ambient")
            };
            if next == *last {
                return series;
            }
            let zero = next.is_zero();
            series.push(next);
            if zero {
                return series;
            }
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(Vec::is_empty))
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Nondegenerate Killing form (Cartan's criterion). The zero algebra
    /// counts as semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient(),
            });
        }
        // x ↦ [x, s] = -ad(s) x; stack the rows of every ad(s).
        let mut rows = Subspace::zero(self.dim);
        for v in s.basis() {
            let ad = self.ad(v)?;
            for r in 0..self.dim {
                if rows.dim() == self.dim {
                    break;
                }
                let row = ad.row(r);
                if !is_zero_vec(row) {
                    rows.insert(row.to_vec())?;
                }
            }
        }
        Ok(annihilator(&rows))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
            .expect("full subspace has matching ambient")
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && self
                .bracket_subspaces(s, s)
                .is_ok_and(|b| b.is_subspace_of(s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && self
                .bracket_subspaces(&Subspace::full(self.dim), s)
                .is_ok_and(|b| b.is_subspace_of(s))
    }

    /// Smallest ideal containing `S`: the fixed point of `S ↦ S + [G, S]`.
    pub fn invariant_closure(&self, s: &Subspace) -> Result<Subspace> {
        let mut cur = s.clone();
        loop {
            let mut next = cur.clone();
            for x in cur.basis() {
                for i in 0..self.dim {
                    next.insert(self.bracket(&unit(self.dim, i), x)?)?;
                }
            }
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Subalgebra on the echelon basis of `S`, with labels `label(i)`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient(),
            });
        }
        let b = s.basis();
        let d = b.len();
        let mut entries = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let v = self.bracket_unchecked(&b[i], &b[j]);
                let c = s.coordinates(&v).ok_or(Error::NotSubalgebra)?;
                entries.push((i, j, c));
            }
        }
        let labels = b.iter().map(|v| self.describe(v)).collect();
        LieAlgebra::from_brackets(labels, entries)
    }

    /// Quotient by an ideal, on the standard basis vectors complementary to
    /// the ideal's pivot columns.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("quotient by a non-ideal".into()));
        }
        let comp = ideal.complement_coordinates();
        let d = comp.len();
        let reduce = |mut v: Vec<Scalar>| -> Vec<Scalar> {
            for (b, &p) in ideal.basis().iter().zip(ideal.pivots()) {
                if !v[p].is_zero() {
                    let c = -v[p].clone();
                    axpy(&mut v, &c, b);
                }
            }
            comp.iter().map(|&c| v[c].clone()).collect()
        };
        let mut entries = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                entries.push((a, b, reduce(self.basis_bracket_dense(comp[a], comp[b]))));
            }
        }
        let labels = comp.iter().map(|&c| self.labels[c].clone()).collect();
        LieAlgebra::from_brackets(labels, entries)
    }

    /// Solvable radical, computed as the Killing-orthogonal of `[G, G]` and
    /// then verified: ideal, solvable, semisimple quotient.
    pub fn radical(&self) -> Result<Subspace> {
        let beta = self.killing_form();
        let derived = self.derived_algebra();
        let mut rows = Subspace::zero(self.dim);
        for d in derived.basis() {
            rows.insert(beta.mul_vec(d)?)?;
        }
        let rad = annihilator(&rows);
        if !self.is_ideal(&rad) {
            return Err(Error::Internal("radical is not an ideal".into()));
        }
        if !self.restrict(&rad)?.is_solvable() {
            return Err(Error::Internal("radical is not solvable".into()));
        }
        if !self.quotient(&rad)?.is_semisimple() {
            return Err(Error::Internal(
                "quotient by the radical is not semisimple".into(),
            ));
        }
        Ok(rad)
    }

    /// Transport along `M`, whose columns are the new basis in old
    /// coordinates: `[u, v]' = M⁻¹ [M u, M v]`.
    pub fn change_of_basis(&self, m: &Mat) -> Result<LieAlgebra> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.rows().max(m.cols()),
            });
        }
        let inv = m.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| m.col(j)).collect();
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_unchecked(&cols[i], &cols[j]);
                entries.push((i, j, inv.mul_vec(&v)?));
            }
        }
        LieAlgebra::from_brackets(default_labels(self.dim), entries)
    }

    /// `A ⊕ B` with `[A, B] = 0`; the basis of `A` comes first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let shift = |v: &SparseVec, s: usize| -> SparseVec {
            v.iter().map(|(i, c)| (i + s, c.clone())).collect()
        };
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i][j] = self.table[i][j].clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                table[self.dim + i][self.dim + j] = shift(&other.table[i][j], self.dim);
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra {
            dim: n,
            labels,
            table,
        }
    }

    /// One-dimensional central extension: basis `[E, b_0, …]` with
    /// `[x, y]' = c(x, y) E + [x, y]`. `c` must be an antisymmetric matrix;
    /// the result is a Lie algebra iff `c` is a 2-cocycle.
    pub fn central_extension(&self, c: &Mat, label: &str) -> Result<LieAlgebra> {
        if !c.is_antisymmetric() || c.rows() != self.dim {
            return Err(Error::Precondition(
                "central extension needs an antisymmetric cochain".into(),
            ));
        }
        let n = self.dim + 1;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut v: SparseVec = Vec::new();
                if !c[(i, j)].is_zero() {
                    v.push((0, c[(i, j)].clone()));
                }
                v.extend(self.table[i][j].iter().map(|(k, x)| (k + 1, x.clone())));
                table[i + 1][j + 1] = v;
            }
        }
        let mut labels = vec![label.to_string()];
        labels.extend(self.labels.iter().cloned());
        Ok(LieAlgebra {
            dim: n,
            labels,
            table,
        })
    }

    /// Human-readable linear combination of basis labels.
    pub fn describe(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else if (-c).is_one() {
                    format!("-{}", self.labels[i])
                } else if c.is_negative() || !c.is_integer() {
                    format!("({}){}", c, self.labels[i])
                } else {
                    format!("{}{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Negated sparse bracket; used where the opposite orientation is needed
    /// without rebuilding a dense vector.
    pub fn basis_bracket_neg(&self, i: usize, j: usize) -> SparseVec {
        sparse_neg(&self.table[i][j])
    }
}

/// `{x : r · x = 0 for every basis row r of S}`.
pub fn annihilator(rows: &Subspace) -> Subspace {
    let n = rows.ambient();
    let free = rows.complement_coordinates();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = zero_vec(n);
        v[f] = Scalar::one();
        for (r, &p) in rows.basis().iter().zip(rows.pivots()) {
            v[p] = -r[f].clone();
        }
        basis.push(v);
    }
    Subspace::from_spanning(n, basis).expect("dimensions agree")
}

#[cfg(test)]
pub(crate) mod samples {
    use super::*;
    use crate::linalg::q;

    pub fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// sl2 on (h, e, f).
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_sparse(
            labels(&["h", "e", "f"]),
            vec![
                (0, 1, vec![(1, q(2))]),
                (0, 2, vec![(2, q(-2))]),
                (1, 2, vec![(0, q(1))]),
            ],
        )
        .unwrap()
    }

    /// Heisenberg algebra on (U, V, E) with [U, V] = E.
    pub fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_sparse(labels(&["U", "V", "E"]), vec![(0, 1, vec![(2, q(1))])]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;
    use crate::linalg::q;

    #[test]
    fn sl2_bracket_and_killing() {
        let g = sl2();
        let e = unit(3, 1);
        let f = unit(3, 2);
        assert_eq!(g.bracket(&e, &f).unwrap(), unit(3, 0));
        assert!(is_zero_vec(&g.bracket(&e, &e).unwrap()));
        assert_eq!(
            g.killing_form(),
            Mat::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])
        );
        assert!(g.jacobi_check().passed);
        assert!(g.center().is_zero());
        assert!(g.radical().unwrap().is_zero());
        assert_eq!(g.derived_series().len(), 1);
    }

    #[test]
    fn broken_sl2_fails_jacobi() {
        let g = LieAlgebra::from_sparse(
            labels(&["h", "e", "f"]),
            vec![
                (0, 1, vec![(1, q(2))]),
                (0, 2, vec![(2, q(-2))]),
                (1, 2, vec![(1, q(1))]),
            ],
        )
        .unwrap();
        let r = g.jacobi_check();
        assert!(!r.passed);
        assert_eq!(r.violations, vec![(0, 1, 2)]);
        assert!(r.max_defect > q(0));
    }

    #[test]
    fn conflicting_entries_rejected() {
        let r = LieAlgebra::from_sparse(
            labels(&["a", "b"]),
            vec![(0, 1, vec![(0, q(1))]), (1, 0, vec![(0, q(1))])],
        );
        assert!(matches!(r, Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn heisenberg_series_and_center() {
        let g = heisenberg();
        let ds = g.derived_series();
        assert_eq!(ds.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);
        assert_eq!(g.center(), Subspace::coordinate(3, &[2]));
        assert_eq!(g.radical().unwrap().dim(), 3);
        assert!(g.killing_form().is_zero());
        let e = Subspace::coordinate(3, &[2]);
        assert_eq!(g.invariant_closure(&e).unwrap(), e);
    }

    #[test]
    fn sl2_plus_abelian_radical() {
        let g = sl2().direct_sum(&LieAlgebra::abelian(2));
        assert_eq!(g.radical().unwrap(), Subspace::coordinate(5, &[3, 4]));
        assert_eq!(g.center(), Subspace::coordinate(5, &[3, 4]));
        let e = Subspace::coordinate(5, &[1]);
        assert_eq!(
            g.invariant_closure(&e).unwrap(),
            Subspace::coordinate(5, &[0, 1, 2])
        );
    }

    #[test]
    fn scaling_halves_constants() {
        let g = sl2();
        let m = Mat::diag(&[q(2), q(2), q(2)]);
        let h = g.change_of_basis(&m).unwrap();
        // [2e, 2f] = 4h = 2·(2h)
        assert_eq!(h.basis_bracket_dense(1, 2), vec![q(2), q(0), q(0)]);
        let beta = g.killing_form();
        assert_eq!(h.killing_form(), m.congruence(&beta).unwrap());
    }

    #[test]
    fn matrix_basis_recovers_sl2() {
        let h = Mat::from_i64(&[&[1, 0], &[0, -1]]);
        let e = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Mat::from_i64(&[&[0, 0], &[1, 0]]);
        let g = LieAlgebra::from_matrix_basis(labels(&["h", "e", "f"]), &[h, e, f]).unwrap();
        assert_eq!(g, sl2());
    }
}
