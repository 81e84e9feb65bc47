//! Root systems, Chevalley bases and the simple complex triples.
//!
//! Cartan matrices follow the convention `A[i][j] = α_j(h_i) = ⟨α_j, α_i^∨⟩`
//! and Bourbaki's numbering of the Dynkin diagram. Public node numbers are
//! 1-based, as in the tables.
//!
//! Chevalley structure constants `N_{α,β}` are produced by the
//! extraspecial-pair algorithm: positive roots are totally ordered by height,
//! each extraspecial pair gets `N = +(p + 1)`, and every other constant
//! follows from the standard relations. The result is then checked against
//! the Jacobi identity; a failure is reported as an internal error.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{q, unit, Mat, Scalar, Subspace};
use crate::symtriple::SymmetricTriple;

/// Rank cap used by the command line and the sweeps.
pub const DEFAULT_RANK_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            "E" => Ok(Self::E),
            "F" => Ok(Self::F),
            "G" => Ok(Self::G),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }

    /// Ranks for which the type exists (with the usual low-rank overlaps
    /// excluded: B and C from 2, D from 4).
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Self::A => rank >= 1,
            Self::B | Self::C => rank >= 2,
            Self::D => rank >= 4,
            Self::E => (6..=8).contains(&rank),
            Self::F => rank == 4,
            Self::G => rank == 2,
        }
    }

    pub const ALL: [CartanType; 7] = [
        Self::A,
        Self::B,
        Self::C,
        Self::D,
        Self::E,
        Self::F,
        Self::G,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    name: String,
    kind: Option<(CartanType, usize)>,
    a: Vec<Vec<i64>>,
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl CartanMatrix {
    pub fn of_type(ty: CartanType, rank: usize) -> Result<Self> {
        if !ty.valid_rank(rank) {
            return Err(Error::UnknownType(format!("{}{}", ty.letter(), rank)));
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match ty {
            CartanType::A | CartanType::B | CartanType::C => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E => {
                // 1-3-4-5-…-n with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::G => link(0, 1),
        }
        match ty {
            // α_n short: its row carries the -2
            CartanType::B => a[n - 1][n - 2] = -2,
            // α_n long
            CartanType::C => a[n - 2][n - 1] = -2,
            // α_1, α_2 long; α_3, α_4 short
            CartanType::F => a[2][1] = -2,
            // α_1 short, α_2 long
            CartanType::G => a[0][1] = -3,
            _ => {}
        }
        let m = Self {
            name: format!("{}{}", ty.letter(), rank),
            kind: Some((ty, rank)),
            a,
        };
        m.check()?;
        Ok(m)
    }

    /// Raw integer matrix; checked for the Cartan axioms and finite type.
    pub fn from_matrix(a: Vec<Vec<i64>>) -> Result<Self> {
        let m = Self {
            name: "custom".into(),
            kind: None,
            a,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let n = self.a.len();
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row[i] != 2 {
                return Err(Error::NotFiniteType(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j {
                    if row[j] > 0 {
                        return Err(Error::NotFiniteType(format!(
                            "positive off-diagonal entry at ({i}, {j})"
                        )));
                    }
                    if (row[j] == 0) != (self.a[j][i] == 0) {
                        return Err(Error::NotFiniteType(format!(
                            "zero pattern not symmetric at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        let d = self.symmetrizer()?;
        let b = self.symmetrized_with(&d);
        // positive definite iff every leading principal minor is positive
        for k in 1..=n {
            let minor = Mat::from_fn(k, k, |i, j| b[(i, j)].clone());
            if !minor.det().is_positive() {
                return Err(Error::NotFiniteType(format!(
                    "symmetrized form is not positive definite ({}x{} minor)",
                    k, k
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Option<(CartanType, usize)> {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn is_connected(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if self.a[i][j] != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `d_i = (α_i, α_i) / 2`, scaled so that the shortest simple roots in
    /// each component have `d = 1`.
    fn symmetrizer(&self) -> Result<Vec<Scalar>> {
        let n = self.rank();
        let mut d: Vec<Option<Scalar>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            let mut comp = vec![start];
            d[start] = Some(Scalar::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if i == j || self.a[i][j] == 0 {
                        continue;
                    }
                    // d_i A_ij = d_j A_ji
                    let di = d[i].clone().expect("visited");
                    let dj = di * q(self.a[i][j]) / q(self.a[j][i]);
                    match &d[j] {
                        Some(old) if *old != dj => {
                            return Err(Error::NotFiniteType("not symmetrizable".into()))
                        }
                        Some(_) => {}
                        None => {
                            d[j] = Some(dj);
                            comp.push(j);
                            stack.push(j);
                        }
                    }
                }
            }
            let min = comp
                .iter()
                .map(|&i| d[i].clone().expect("visited"))
                .min()
                .expect("nonempty");
            for &i in &comp {
                let v = d[i].take().expect("visited") / &min;
                d[i] = Some(v);
            }
        }
        Ok(d.into_iter().map(|x| x.expect("all visited")).collect())
    }

    fn symmetrized_with(&self, d: &[Scalar]) -> Mat {
        let n = self.rank();
        Mat::from_fn(n, n, |i, j| &d[i] * q(self.a[i][j]))
    }

    /// `(α_i, α_j)` with the shortest roots of squared length 2.
    pub fn symmetrized(&self) -> Mat {
        let d = self.symmetrizer().expect("checked at construction");
        self.symmetrized_with(&d).scale(&q(2))
    }
}

/// Positive roots in the simple-root basis, ordered by height and then
/// by reverse lexicographic order (simple roots come in node order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    highest: Option<usize>,
    /// `(α_i, α_j)`
    form: Mat,
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Index of a positive root.
    pub fn position(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// `+1` / `-1` for a positive / negative root together with the index
    /// of `±root`; `None` when `root` is not a root.
    pub fn signed_position(&self, root: &[i64]) -> Option<(i64, usize)> {
        if let Some(i) = self.position(root) {
            return Some((1, i));
        }
        let neg: Vec<i64> = root.iter().map(|c| -c).collect();
        self.position(&neg).map(|i| (-1, i))
    }

    pub fn is_root(&self, root: &[i64]) -> bool {
        self.signed_position(root).is_some()
    }

    /// `⟨β, α_i^∨⟩ = Σ_j c_j A[i][j]`.
    pub fn pairing(&self, root: &[i64], i: usize) -> i64 {
        root.iter()
            .enumerate()
            .map(|(j, c)| c * self.cartan.a[i][j])
            .sum()
    }

    /// `(β, γ)` with shortest roots of squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Scalar {
        let av: Vec<Scalar> = a.iter().map(|&c| q(c)).collect();
        let bv: Vec<Scalar> = b.iter().map(|&c| q(c)).collect();
        self.form.bilinear(&av, &bv)
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn highest_root(&self) -> Result<&[i64]> {
        self.highest
            .map(|i| self.positive[i].as_slice())
            .ok_or_else(|| Error::Precondition("root system is reducible".into()))
    }
}

/// All positive roots by root-string arithmetic: for a root `β` and simple
/// root `α_i`, with `p` the largest integer such that `β - pα_i` is a root,
/// `β + α_i` is a root iff `p - ⟨β, α_i^∨⟩ > 0`.
pub fn roots_from_cartan(c: &CartanMatrix) -> RootSystem {
    let n = c.rank();
    let mut positive: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut index: HashMap<Vec<i64>, usize> =
        positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut layer: Vec<Vec<i64>> = positive.clone();
    let pairing = |r: &[i64], i: usize| -> i64 {
        r.iter().enumerate().map(|(j, x)| x * c.a[i][j]).sum()
    };
    while !layer.is_empty() {
        let mut next: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if index.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up, ());
                }
            }
        }
        layer = next.into_keys().collect();
        for r in &layer {
            index.insert(r.clone(), 0);
        }
        positive.extend(layer.iter().cloned());
    }
    positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    let index: HashMap<Vec<i64>, usize> =
        positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let highest = if c.is_connected() {
        let top = positive.len() - 1;
        let dominates = positive
            .iter()
            .all(|r| r.iter().zip(&positive[top]).all(|(a, b)| a <= b));
        dominates.then_some(top)
    } else {
        None
    };
    let form = c.symmetrized();
    RootSystem {
        cartan: c.clone(),
        positive,
        index,
        highest,
        form,
    }
}

/// Classical count of positive roots, for cross-checking the enumeration.
pub fn expected_positive_roots(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        CartanType::F => 24,
        CartanType::G => 6,
    }
}

pub fn highest_root(r: &RootSystem) -> Result<Vec<i64>> {
    r.highest_root().map(<[i64]>::to_vec)
}

/// 1-based nodes whose coefficient in the highest root is 1.
pub fn admissible_nodes(r: &RootSystem) -> Result<Vec<usize>> {
    let mu = r.highest_root()?;
    Ok(mu
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 1)
        .map(|(i, _)| i + 1)
        .collect())
}

/// A base together with a simple root of coefficient 1 in the highest root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSystem {
    roots: RootSystem,
    node: usize,
    h: Vec<Scalar>,
    omega_weight: Vec<Scalar>,
}

impl AdmissibleSystem {
    /// `node` is 1-based.
    pub fn new(roots: &RootSystem, node: usize) -> Result<Self> {
        let n = roots.rank();
        if node == 0 || node > n {
            return Err(Error::IndexOutOfRange {
                index: node,
                dim: n,
            });
        }
        let mu = roots.highest_root()?;
        if mu[node - 1] != 1 {
            return Err(Error::NotAdmissible {
                ty: roots.cartan.name.clone(),
                node,
            });
        }
        let h = solve_dual(roots.cartan(), node - 1)?;
        Ok(Self {
            roots: roots.clone(),
            node,
            h,
            omega_weight: unit(n, node - 1),
        })
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn node(&self) -> usize {
        self.node
    }

    /// The Cartan element with `α_node(h) = 1` and `α_j(h) = 0` otherwise,
    /// in coroot coordinates.
    pub fn h(&self) -> &[Scalar] {
        &self.h
    }

    /// The fundamental weight of the node, in the basis of fundamental
    /// weights.
    pub fn omega_weight(&self) -> &[Scalar] {
        &self.omega_weight
    }
}

/// Solves `α_j(Σ x_k h_k) = Σ_k x_k A[k][j] = δ_{ij}`.
fn solve_dual(c: &CartanMatrix, i: usize) -> Result<Vec<Scalar>> {
    let n = c.rank();
    let at = Mat::from_fn(n, n, |j, k| q(c.a[k][j]));
    at.solve(&unit(n, i))?
        .ok_or_else(|| Error::Internal("Cartan matrix is singular".into()))
}

pub fn dual_element(a: &AdmissibleSystem) -> Vec<Scalar> {
    a.h.clone()
}

/// A Chevalley basis `h_1, …, h_ℓ, e_β (β > 0), f_β = e_{-β}` with integer
/// structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    alg: LieAlgebra,
    /// `N_{α,β}` for ordered pairs of positive roots with `α + β` a root,
    /// as `(index of α, index of β, N)`.
    n_table: Vec<(usize, usize, i64)>,
}

impl ChevalleyAlgebra {
    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn alg(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn n_table(&self) -> &[(usize, usize, i64)] {
        &self.n_table
    }

    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    pub fn e_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    pub fn f_index(&self, root: usize) -> usize {
        self.rank() + self.roots.num_positive() + root
    }

    /// The root attached to a basis vector, `None` for the Cartan part.
    pub fn root_of(&self, basis: usize) -> Option<Vec<i64>> {
        let l = self.rank();
        let m = self.roots.num_positive();
        if basis < l {
            None
        } else if basis < l + m {
            Some(self.roots.positive[basis - l].clone())
        } else {
            Some(self.roots.positive[basis - l - m].iter().map(|c| -c).collect())
        }
    }
}

fn root_label(prefix: char, r: &[i64]) -> String {
    let digits: String = r.iter().map(|c| c.to_string()).collect();
    format!("{prefix}_{digits}")
}

struct StructureConstants<'a> {
    roots: &'a RootSystem,
    /// N for ordered pairs of positive roots.
    pos: HashMap<(usize, usize), i64>,
}

impl StructureConstants<'_> {
    fn len2(&self, r: &[i64]) -> Scalar {
        self.roots.inner(r, r)
    }

    /// `N_{r,s}` for arbitrary signed roots `r`, `s`.
    fn n(&self, r: &[i64], s: &[i64]) -> Result<i64> {
        let sum: Vec<i64> = r.iter().zip(s).map(|(a, b)| a + b).collect();
        if sum.iter().all(|&c| c == 0) || !self.roots.is_root(&sum) {
            return Ok(0);
        }
        let (sr, ir) = self.roots.signed_position(r).ok_or_else(not_root)?;
        let (ss, is) = self.roots.signed_position(s).ok_or_else(not_root)?;
        if sr > 0 && ss > 0 {
            return self
                .pos
                .get(&(ir, is))
                .copied()
                .ok_or_else(|| Error::Internal("missing structure constant".into()));
        }
        let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|c| -c).collect() };
        if sr < 0 && ss < 0 {
            return Ok(-self.n(&neg(r), &neg(s))?);
        }
        // r + s + t = 0 with N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s);
        // rewrite through the pair that shares a sign.
        let t = neg(&sum);
        let (st, _) = self.roots.signed_position(&t).ok_or_else(not_root)?;
        let val = if st == sr {
            // (t, r) same sign
            self.len2(&t) / self.len2(s) * q(self.n(&t, r)?)
        } else {
            // (s, t) same sign
            self.len2(&t) / self.len2(r) * q(self.n(s, &t)?)
        };
        if !val.is_integer() {
            return Err(Error::Internal("non-integral structure constant".into()));
        }
        val.to_integer()
            .to_i64()
            .ok_or_else(|| Error::Internal("structure constant overflow".into()))
    }
}

fn not_root() -> Error {
    Error::Internal("expected a root".into())
}

/// Builds the Chevalley basis algebra and verifies the Jacobi identity.
pub fn chevalley_algebra(c: &CartanMatrix) -> Result<ChevalleyAlgebra> {
    let roots = roots_from_cartan(c);
    let l = roots.rank();
    let m = roots.num_positive();
    let pos_roots = roots.positive.clone();
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let sub = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let neg = |a: &[i64]| -> Vec<i64> { a.iter().map(|x| -x).collect() };
    // p = largest integer with β - pα a root
    let string_p = |alpha: &[i64], beta: &[i64]| -> i64 {
        let mut p = 0;
        let mut cur = beta.to_vec();
        loop {
            cur = sub(&cur, alpha);
            if roots.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    };

    let mut sc = StructureConstants {
        roots: &roots,
        pos: HashMap::new(),
    };
    // process sums ξ in increasing order (height order is the list order)
    for (xi_idx, xi) in pos_roots.iter().enumerate() {
        let mut special: Vec<(usize, usize)> = Vec::new();
        for a_idx in 0..xi_idx {
            let b = sub(xi, &pos_roots[a_idx]);
            if let Some(b_idx) = roots.position(&b) {
                if a_idx < b_idx {
                    special.push((a_idx, b_idx));
                }
            }
        }
        let Some(&(ea, eb)) = special.first() else {
            continue;
        };
        let (ap, bp) = (&pos_roots[ea], &pos_roots[eb]);
        let n_extra = string_p(ap, bp) + 1;
        sc.pos.insert((ea, eb), n_extra);
        sc.pos.insert((eb, ea), -n_extra);
        for &(ai, bi) in &special[1..] {
            let (a, b) = (&pos_roots[ai], &pos_roots[bi]);
            let mut acc = Scalar::zero();
            let b_minus = sub(b, ap);
            if roots.is_root(&b_minus) {
                let num = sc.n(b, &neg(ap))? * sc.n(a, &neg(bp))?;
                acc += q(num) / roots.inner(&b_minus, &b_minus);
            }
            let a_minus = sub(a, ap);
            if roots.is_root(&a_minus) {
                let num = sc.n(&neg(ap), a)? * sc.n(b, &neg(bp))?;
                acc += q(num) / roots.inner(&a_minus, &a_minus);
            }
            let val = roots.inner(xi, xi) / q(n_extra) * acc;
            if !val.is_integer() {
                return Err(Error::Internal(format!(
                    "non-integral N for {:?} + {:?}",
                    a, b
                )));
            }
            let v = val
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Internal("overflow".into()))?;
            let expected = string_p(a, b) + 1;
            if v.abs() != expected {
                return Err(Error::Internal(format!(
                    "|N| = {} but p + 1 = {} for {:?} + {:?}",
                    v.abs(),
                    expected,
                    a,
                    b
                )));
            }
            sc.pos.insert((ai, bi), v);
            sc.pos.insert((bi, ai), -v);
        }
    }

    // assemble the table
    let dim = l + 2 * m;
    let mut labels: Vec<String> = (1..=l).map(|i| format!("h_{i}")).collect();
    labels.extend(pos_roots.iter().map(|r| root_label('e', r)));
    labels.extend(pos_roots.iter().map(|r| root_label('f', r)));
    // signed root for each non-Cartan basis vector
    let signed: Vec<Vec<i64>> = pos_roots
        .iter()
        .cloned()
        .chain(pos_roots.iter().map(|r| neg(r)))
        .collect();
    let basis_of = |r: &[i64]| -> usize {
        match roots.signed_position(r) {
            Some((1, i)) => l + i,
            Some((_, i)) => l + m + i,
            None => unreachable!("only called on roots"),
        }
    };
    // coroot of a positive root in terms of h_i: β^∨ = Σ c_i (d_i / d_β) α_i^∨
    let coroot = |r: &[i64]| -> Vec<(usize, Scalar)> {
        let lr = roots.inner(r, r);
        (0..l)
            .filter(|&i| r[i] != 0)
            .map(|i| {
                let li = roots.form[(i, i)].clone();
                (i, q(r[i]) * li / &lr)
            })
            .collect()
    };
    let mut entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for i in 0..l {
        for (k, r) in signed.iter().enumerate() {
            let v = roots.pairing(r, i);
            if v != 0 {
                entries.push((i, l + k, vec![(l + k, q(v))]));
            }
        }
    }
    for a in 0..2 * m {
        for b in a + 1..2 * m {
            let (r, s) = (&signed[a], &signed[b]);
            let sum = add(r, s);
            if sum.iter().all(|&x| x == 0) {
                // a < b, so r is positive and s = -r: [e_r, e_{-r}] = h_r
                entries.push((l + a, l + b, coroot(r)));
            } else if roots.is_root(&sum) {
                let nv = sc.n(r, s)?;
                entries.push((l + a, l + b, vec![(basis_of(&sum), q(nv))]));
            }
        }
    }
    let alg = LieAlgebra::from_sparse(labels, entries)?;
    debug_assert_eq!(alg.dim(), dim);
    let report = alg.jacobi_check();
    if !report.passed {
        let (i, j, k) = report.violations[0];
        return Err(Error::Internal(format!(
            "Chevalley basis for {} fails Jacobi at ({}, {}, {})",
            c.name,
            alg.labels()[i],
            alg.labels()[j],
            alg.labels()[k]
        )));
    }
    let mut n_table: Vec<(usize, usize, i64)> =
        sc.pos.iter().map(|(&(a, b), &v)| (a, b, v)).collect();
    n_table.sort_unstable();
    Ok(ChevalleyAlgebra {
        roots,
        alg,
        n_table,
    })
}

/// `σ = exp(πi ad h)`: `+1` on the Cartan part, `(-1)^{n_i(β)}` on `e_β` and
/// `f_β`, where `n_i(β)` is the coefficient of the (1-based) node. Checked
/// to be an automorphism.
pub fn involution_from_node(ca: &ChevalleyAlgebra, node: usize) -> Result<Mat> {
    let signs = node_signs(ca, node)?;
    let alg = &ca.alg;
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            for (k, _) in alg.basis_bracket(i, j) {
                if signs[i] * signs[j] != signs[*k] {
                    return Err(Error::NotAutomorphism);
                }
            }
        }
    }
    Ok(Mat::diag(&signs.iter().map(|&s| q(s)).collect::<Vec<_>>()))
}

fn node_signs(ca: &ChevalleyAlgebra, node: usize) -> Result<Vec<i64>> {
    let l = ca.rank();
    if node == 0 || node > l {
        return Err(Error::IndexOutOfRange {
            index: node,
            dim: l,
        });
    }
    Ok((0..ca.alg.dim())
        .map(|b| match ca.root_of(b) {
            None => 1,
            Some(r) => {
                if r[node - 1].rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        })
        .collect())
}

/// `Z(K)` for the involution of a node, admissible or not.
pub fn center_of_k_for_node(ca: &ChevalleyAlgebra, node: usize) -> Result<Subspace> {
    let signs = node_signs(ca, node)?;
    let k_idx: Vec<usize> = (0..signs.len()).filter(|&i| signs[i] == 1).collect();
    let k = Subspace::coordinate(ca.alg.dim(), &k_idx);
    let kalg = ca.alg.restrict(&k)?;
    let z = kalg.center();
    Subspace::from_spanning(
        ca.alg.dim(),
        z.basis().iter().map(|c| k.vector_from_coords(c)),
    )
}

/// The simple complex triple of an admissible node:
/// `Ω(p, p') = -λ β(h, [p, p'])` on `P`.
pub fn build_simple_tss(
    ca: &ChevalleyAlgebra,
    adm: &AdmissibleSystem,
    lambda: &Scalar,
) -> Result<SymmetricTriple> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if adm.roots.cartan != ca.roots.cartan {
        return Err(Error::Precondition(
            "admissible system belongs to another root system".into(),
        ));
    }
    let sigma = involution_from_node(ca, adm.node)?;
    let alg = &ca.alg;
    let n = alg.dim();
    let mut hvec = vec![Scalar::zero(); n];
    for (i, x) in adm.h.iter().enumerate() {
        hvec[ca.h_index(i)] = x.clone();
    }
    let beta_h = alg.killing_with(&hvec)?;
    let p_idx: Vec<usize> = (0..n).filter(|&i| sigma[(i, i)].is_negative()).collect();
    let d = p_idx.len();
    let mut omega = Mat::zeros(d, d);
    for a in 0..d {
        for b in a + 1..d {
            let mut v = Scalar::zero();
            for (k, c) in alg.basis_bracket(p_idx[a], p_idx[b]) {
                v += c * &beta_h[*k];
            }
            let w = -(lambda * v);
            omega[(b, a)] = -w.clone();
            omega[(a, b)] = w;
        }
    }
    if omega.rank() != d {
        return Err(Error::InvalidTriple(format!(
            "omega is degenerate for {} node {}",
            ca.roots.cartan.name, adm.node
        )));
    }
    SymmetricTriple::new(alg.clone(), sigma, omega)
}

/// `P⁺`: span of the `e_β` with `n_node(β) = 1`.
pub fn p_plus(ca: &ChevalleyAlgebra, node: usize) -> Subspace {
    let idx: Vec<usize> = (0..ca.roots.num_positive())
        .filter(|&r| ca.roots.positive[r][node - 1] == 1)
        .map(|r| ca.e_index(r))
        .collect();
    Subspace::coordinate(ca.alg.dim(), &idx)
}

/// Diagram automorphisms: permutations preserving the Cartan matrix.
pub fn diagram_automorphisms(c: &CartanMatrix) -> Vec<Vec<usize>> {
    fn extend(c: &CartanMatrix, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = c.rank();
        let i = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            let ok = (0..i).all(|k| c.a[i][k] == c.a[j][perm[k]] && c.a[k][i] == c.a[perm[k]][j]);
            if ok {
                used[j] = true;
                perm.push(j);
                extend(c, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(c, &mut Vec::new(), &mut vec![false; c.rank()], &mut out);
    out
}

/// Orbits of the admissible nodes (1-based) under the diagram automorphisms.
pub fn aut_phi_orbits(r: &RootSystem) -> Result<Vec<Vec<usize>>> {
    let nodes = admissible_nodes(r)?;
    let auts = diagram_automorphisms(r.cartan());
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for &n in &nodes {
        if orbits.iter().any(|o| o.contains(&n)) {
            continue;
        }
        let mut orbit: Vec<usize> = auts.iter().map(|p| p[n - 1] + 1).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// One row of the compact simple skeleton table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonRow {
    pub cartan: String,
    pub node: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    pub dim_center_k: usize,
    /// The compact pair `g | k` of the table this row instantiates.
    pub compact_pair: String,
    /// `dim k` of that compact pair.
    pub expected_dim_k: usize,
}

impl SkeletonRow {
    pub fn matches(&self) -> bool {
        self.dim_k == self.expected_dim_k && self.dim_center_k == 1
    }
}

fn compact_pair(ty: CartanType, n: usize, node: usize) -> Option<(String, usize)> {
    let so = |m: usize| m * (m.saturating_sub(1)) / 2;
    match ty {
        CartanType::A => {
            let (p, qq) = (node, n + 1 - node);
            Some((
                format!("su({}) | su({p}) + su({qq}) + so(2)", n + 1),
                (p * p - 1) + (qq * qq - 1) + 1,
            ))
        }
        CartanType::B if node == 1 => Some((
            format!("so({}) | so({}) + so(2)", 2 * n + 1, 2 * n - 1),
            so(2 * n - 1) + 1,
        )),
        CartanType::C if node == n => Some((format!("sp({n}) | su({n}) + so(2)"), n * n)),
        CartanType::D if node == 1 => Some((
            format!("so({}) | so({}) + so(2)", 2 * n, 2 * n - 2),
            so(2 * n - 2) + 1,
        )),
        CartanType::D if node + 1 >= n => {
            Some((format!("so({}) | su({n}) + so(2)", 2 * n), n * n))
        }
        CartanType::E if n == 6 => Some(("e6 | so(10) + so(2)".into(), 46)),
        CartanType::E if n == 7 => Some(("e7 | e6 + so(2)".into(), 79)),
        _ => None,
    }
}

/// Dimensions for every admissible node of the classical types up to
/// `max_rank` and of E6, E7, computed from the root partition by the
/// coefficient of the node.
pub fn table_c_skeleton(max_rank: usize) -> Result<Vec<SkeletonRow>> {
    let mut types: Vec<(CartanType, usize)> = Vec::new();
    for ty in [CartanType::A, CartanType::B, CartanType::C, CartanType::D] {
        for n in 1..=max_rank {
            if ty.valid_rank(n) {
                types.push((ty, n));
            }
        }
    }
    types.push((CartanType::E, 6));
    types.push((CartanType::E, 7));
    let mut rows = Vec::new();
    for (ty, n) in types {
        let c = CartanMatrix::of_type(ty, n)?;
        let r = roots_from_cartan(&c);
        for node in admissible_nodes(&r)? {
            let i = node - 1;
            let zero = r.positive.iter().filter(|x| x[i] == 0).count();
            let one = r.positive.iter().filter(|x| x[i] == 1).count();
            // K is spanned by the Cartan part and the roots with even
            // coefficient; Z(K) is the part of the Cartan subalgebra killed
            // by all of those roots.
            let even: Vec<Vec<Scalar>> = r
                .positive
                .iter()
                .filter(|x| x[i] % 2 == 0)
                .map(|x| x.iter().map(|&c| q(c)).collect())
                .collect();
            let span = Subspace::from_spanning(n, even)?;
            let (compact, expected) =
                compact_pair(ty, n, node).unwrap_or_else(|| ("?".into(), usize::MAX));
            rows.push(SkeletonRow {
                cartan: c.name.clone(),
                node,
                dim_k: n + 2 * zero,
                dim_p: 2 * one,
                dim_center_k: n - span.dim(),
                compact_pair: compact,
                expected_dim_k: expected,
            });
        }
    }
    Ok(rows)
}

/// Every irreducible type of rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<(CartanType, usize)> {
    let mut out = Vec::new();
    for ty in CartanType::ALL {
        for n in 1..=max_rank {
            if ty.valid_rank(n) {
                out.push((ty, n));
            }
        }
    }
    out
}

/// Rank cap from `SYMSYM_RANK_CAP`, falling back to the default.
pub fn rank_cap_from_env() -> usize {
    std::env::var("SYMSYM_RANK_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
}

/// Checks a rank against a cap.
pub fn check_rank(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        Err(Error::RankTooLarge { rank, cap })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn rs(ty: CartanType, n: usize) -> RootSystem {
        roots_from_cartan(&CartanMatrix::of_type(ty, n).unwrap())
    }

    #[test]
    fn small_root_systems() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(
            a2.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(highest_root(&a2).unwrap(), vec![1, 1]);
        assert_eq!(rs(CartanType::A, 1).positive_roots(), &[vec![1]]);
        assert_eq!(rs(CartanType::G, 2).num_positive(), 6);
        assert_eq!(highest_root(&rs(CartanType::G, 2)).unwrap(), vec![3, 2]);
        assert_eq!(highest_root(&rs(CartanType::C, 3)).unwrap(), vec![2, 2, 1]);
        assert_eq!(highest_root(&rs(CartanType::B, 3)).unwrap(), vec![1, 2, 2]);
        assert_eq!(
            highest_root(&rs(CartanType::F, 4)).unwrap(),
            vec![2, 3, 4, 2]
        );
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_nodes(&rs(CartanType::B, 3)).unwrap(), vec![1]);
        assert_eq!(admissible_nodes(&rs(CartanType::C, 3)).unwrap(), vec![3]);
        assert_eq!(admissible_nodes(&rs(CartanType::D, 4)).unwrap(), vec![1, 3, 4]);
        assert!(admissible_nodes(&rs(CartanType::G, 2)).unwrap().is_empty());
    }

    #[test]
    fn non_finite_matrix_rejected() {
        // affine A1
        assert!(matches!(
            CartanMatrix::from_matrix(vec![vec![2, -2], vec![-2, 2]]),
            Err(Error::NotFiniteType(_))
        ));
        assert!(CartanMatrix::from_matrix(vec![vec![2, -1], vec![-1, 2]]).is_ok());
    }

    #[test]
    fn sl2_from_a1() {
        let ca = chevalley_algebra(&CartanMatrix::of_type(CartanType::A, 1).unwrap()).unwrap();
        let g = ca.alg();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.basis_bracket_dense(1, 2), vec![q(1), q(0), q(0)]);
        assert_eq!(g.basis_bracket_dense(0, 1), vec![q(0), q(2), q(0)]);
        let adm = AdmissibleSystem::new(ca.roots(), 1).unwrap();
        assert_eq!(dual_element(&adm), vec![frac(1, 2)]);
        assert_eq!(
            involution_from_node(&ca, 1).unwrap(),
            Mat::diag(&[q(1), q(-1), q(-1)])
        );
    }

    #[test]
    fn a2_dual_element_evaluates_to_delta() {
        let r = rs(CartanType::A, 2);
        for node in 1..=2 {
            let adm = AdmissibleSystem::new(&r, node).unwrap();
            for j in 0..2 {
                let v: Scalar = (0..2)
                    .map(|k| &adm.h()[k] * q(r.cartan().entry(k, j)))
                    .sum();
                assert_eq!(v, if j + 1 == node { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn small_chevalley_dims() {
        for (ty, n, dim) in [(CartanType::A, 2, 8), (CartanType::B, 2, 10), (CartanType::G, 2, 14)] {
            let ca = chevalley_algebra(&CartanMatrix::of_type(ty, n).unwrap()).unwrap();
            assert_eq!(ca.alg().dim(), dim);
        }
    }

    #[test]
    fn a2_simple_triple() {
        let ca = chevalley_algebra(&CartanMatrix::of_type(CartanType::A, 2).unwrap()).unwrap();
        let adm = AdmissibleSystem::new(ca.roots(), 1).unwrap();
        let t = build_simple_tss(&ca, &adm, &q(1)).unwrap();
        assert!(t.validate().passed());
        assert_eq!((t.dim_k(), t.dim_p()), (4, 4));
        assert_eq!(t.center_of_k().dim(), 1);
        assert!(t.is_exact());
    }

    #[test]
    fn b3_node_2_rejected() {
        let r = rs(CartanType::B, 3);
        assert!(matches!(
            AdmissibleSystem::new(&r, 2),
            Err(Error::NotAdmissible { node: 2, .. })
        ));
        let ca = chevalley_algebra(r.cartan()).unwrap();
        assert!(center_of_k_for_node(&ca, 2).unwrap().is_zero());
    }

    #[test]
    fn c2_node_2_involution_is_automorphism() {
        let ca = chevalley_algebra(&CartanMatrix::of_type(CartanType::C, 2).unwrap()).unwrap();
        let s = involution_from_node(&ca, 2).unwrap();
        assert!(s.mul(&s).unwrap().is_identity());
    }

    #[test]
    fn orbits() {
        assert_eq!(
            aut_phi_orbits(&rs(CartanType::A, 3)).unwrap(),
            vec![vec![1, 3], vec![2]]
        );
        assert_eq!(
            aut_phi_orbits(&rs(CartanType::E, 6)).unwrap(),
            vec![vec![1, 6]]
        );
        assert_eq!(aut_phi_orbits(&rs(CartanType::B, 3)).unwrap(), vec![vec![1]]);
        // D4 has the triality symmetry
        assert_eq!(
            aut_phi_orbits(&rs(CartanType::D, 4)).unwrap(),
            vec![vec![1, 3, 4]]
        );
    }

    #[test]
    fn skeleton_rows() {
        let rows = table_c_skeleton(4).unwrap();
        let a2 = rows.iter().find(|r| r.cartan == "A2" && r.node == 1).unwrap();
        assert_eq!((a2.dim_k, a2.dim_p, a2.dim_center_k), (4, 4, 1));
        let e7 = rows.iter().find(|r| r.cartan == "E7").unwrap();
        assert_eq!((e7.node, e7.dim_k), (7, 79));
        let d4 = rows.iter().find(|r| r.cartan == "D4" && r.node == 1).unwrap();
        // so(6) + so(2)
        assert_eq!(d4.dim_k, 16);
        assert!(rows.iter().all(SkeletonRow::matches));
    }
}
