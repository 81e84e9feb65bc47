//! The low-dimensional classification as constructible data.
//!
//! Every family is a builder from a parameter record to a triple, written
//! out in a basis adapted to σ (`K` first, then `P`) with the brackets and
//! form of the published tables. Family ids follow the published notation:
//! `t4_2_eps_epsp_a_x(2)` is `t⁴_{2,ε,ε′,a,x}(2)`, and so on.
//!
//! Parameters are named rationals. Each carries a domain and a flag saying
//! whether it enters the brackets or only the form; the flag is what the
//! count of underlying symmetric pairs is taken over.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::liealg::{annihilator, LieAlgebra};
use crate::linalg::{frac, q, Inertia, Mat, Scalar, Subspace};
use crate::symtriple::{
    coboundary, direct_sum_triples, radical_part, SymmetricTriple, TripleFingerprint,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    /// `±1`
    Sign,
    /// A finite set of integers.
    Choice(&'static [i64]),
    /// Any rational.
    Rational,
    /// Any nonzero rational.
    NonzeroRational,
}

impl Domain {
    pub fn contains(&self, v: &Scalar) -> bool {
        match self {
            Domain::Sign => v.is_one() || (-v).is_one(),
            Domain::Choice(c) => c.iter().any(|&x| q(x) == *v),
            Domain::Rational => true,
            Domain::NonzeroRational => !v.is_zero(),
        }
    }

    /// Sample points: every value of a finite domain, the default rational
    /// grid `{-1, 0, 1, 1/2}` otherwise, intersected with the domain.
    pub fn grid(&self) -> Vec<Scalar> {
        match self {
            Domain::Sign => vec![q(1), q(-1)],
            Domain::Choice(c) => c.iter().map(|&x| q(x)).collect(),
            Domain::Rational | Domain::NonzeroRational => default_grid()
                .into_iter()
                .filter(|v| self.contains(v))
                .collect(),
        }
    }

    fn default_value(&self) -> Scalar {
        match self {
            Domain::Sign | Domain::NonzeroRational => q(1),
            Domain::Choice(c) => q(c[0]),
            Domain::Rational => q(0),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Sign => f.write_str("{-1, 1}"),
            Domain::Choice(c) => {
                let s: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", s.join(", "))
            }
            Domain::Rational => f.write_str("Q"),
            Domain::NonzeroRational => f.write_str("Q \\ {0}"),
        }
    }
}

pub fn default_grid() -> Vec<Scalar> {
    vec![q(-1), q(0), q(1), frac(1, 2)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
    /// `false` when the parameter only enters Ω.
    pub in_brackets: bool,
}

const fn sign(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        domain: Domain::Sign,
        in_brackets: true,
    }
}

const fn form_param(name: &'static str, domain: Domain) -> ParamSpec {
    ParamSpec {
        name,
        domain,
        in_brackets: false,
    }
}

/// Named parameter values.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<String, Scalar>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, v: Scalar) -> Self {
        self.0.insert(name.to_string(), v);
        self
    }

    pub fn set(&mut self, name: &str, v: Scalar) {
        self.0.insert(name.to_string(), v);
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Scalar)> {
        self.0.iter()
    }

    fn val(&self, name: &str) -> Scalar {
        self.0.get(name).cloned().expect("resolved parameters are complete")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    Flat,
    Solvable,
    /// Neither solvable nor semisimple.
    Mixed,
    Simple,
}

#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub id: &'static str,
    pub dim_p: usize,
    pub kind: Kind,
    pub params: &'static [ParamSpec],
    pub description: &'static str,
    /// Complex type whose split real form is built by the root-system
    /// module, where one exists.
    pub complexification: Option<&'static str>,
    builder: fn(&Params) -> Result<SymmetricTriple>,
}

impl Family {
    /// Fills in defaults and checks every value against its domain.
    pub fn resolve(&self, given: &Params) -> Result<Params> {
        for (k, _) in given.iter() {
            if !self.params.iter().any(|p| p.name == k) {
                return Err(Error::InvalidParameters {
                    family: self.id.into(),
                    reason: format!("unknown parameter '{k}'"),
                });
            }
        }
        let mut out = Params::new();
        for p in self.params {
            let v = given
                .get(p.name)
                .cloned()
                .unwrap_or_else(|| p.domain.default_value());
            if !p.domain.contains(&v) {
                return Err(Error::InvalidParameters {
                    family: self.id.into(),
                    reason: format!("{} = {} is outside {}", p.name, v, p.domain),
                });
            }
            out.set(p.name, v);
        }
        Ok(out)
    }

    pub fn build(&self, params: &Params) -> Result<SymmetricTriple> {
        let p = self.resolve(params)?;
        (self.builder)(&p)
    }

    /// Cartesian product of the parameter grids, at most `max` points.
    pub fn grid(&self, max: usize) -> Vec<Params> {
        let mut acc = vec![Params::new()];
        for p in self.params {
            let mut next = Vec::new();
            for base in &acc {
                for v in p.domain.grid() {
                    next.push(base.clone().with(p.name, v));
                }
            }
            acc = next;
        }
        acc.truncate(max);
        acc
    }

    /// Values of the bracket parameters only.
    fn pair_grid(&self) -> Vec<Params> {
        let mut acc = vec![Params::new()];
        for p in self.params.iter().filter(|p| p.in_brackets) {
            let mut next = Vec::new();
            for base in &acc {
                for v in p.domain.grid() {
                    next.push(base.clone().with(p.name, v));
                }
            }
            acc = next;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// table helpers

type Term<'a> = (Scalar, &'a str);

/// A triple from labelled brackets `[a, b] = Σ c·label` and form entries
/// `Ω(a, b) = w` over the `P` labels.
fn table(
    k: &[&str],
    p: &[&str],
    brackets: &[(&str, &str, Vec<Term<'_>>)],
    omega: &[(&str, &str, Scalar)],
) -> Result<SymmetricTriple> {
    let labels: Vec<String> = k.iter().chain(p).map(|s| s.to_string()).collect();
    let idx = |s: &str| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::Internal(format!("unknown label {s}")))
    };
    let mut entries = Vec::new();
    for (a, b, terms) in brackets {
        let v = terms
            .iter()
            .map(|(c, l)| Ok((idx(l)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        entries.push((idx(a)?, idx(b)?, v));
    }
    let alg = LieAlgebra::from_sparse(labels.clone(), entries)?;
    let d = p.len();
    let mut om = Mat::zeros(d, d);
    let pidx = |s: &str| -> Result<usize> {
        p.iter()
            .position(|l| *l == s)
            .ok_or_else(|| Error::Internal(format!("{s} is not in P")))
    };
    for (a, b, w) in omega {
        let (i, j) = (pidx(a)?, pidx(b)?);
        om[(i, j)] += w;
        om[(j, i)] -= w;
    }
    let p_idx: Vec<usize> = (k.len()..k.len() + d).collect();
    SymmetricTriple::from_adapted(alg, &p_idx, om)
}

fn t(c: i64, l: &str) -> Term<'_> {
    (q(c), l)
}

fn ts<'a>(c: &Scalar, l: &'a str) -> Term<'a> {
    (c.clone(), l)
}

/// Restriction to `P` of `δξ`, as a matrix over the echelon basis of `P`.
fn coboundary_on_p(tr: &SymmetricTriple, xi: &[Scalar]) -> Mat {
    let c = coboundary(tr.alg(), xi);
    let pb = tr.p().basis_matrix();
    pb.congruence(&c).expect("shapes agree")
}

fn with_omega(tr: &SymmetricTriple, omega: Mat) -> Result<SymmetricTriple> {
    SymmetricTriple::new(tr.alg().clone(), tr.sigma().clone(), omega)
}

/// `Ω(p, p') = -β(z, [p, p'])`.
fn omega_from_center(tr: &SymmetricTriple, z: &[Scalar]) -> Result<SymmetricTriple> {
    let beta_z = tr.alg().killing_with(z)?;
    let pb = tr.p().basis().to_vec();
    let d = pb.len();
    let mut om = Mat::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            let br = tr.alg().bracket(&pb[a], &pb[b])?;
            let v: Scalar = br.iter().zip(&beta_z).map(|(x, y)| x * y).sum();
            om[(a, b)] = -v;
        }
    }
    with_omega(tr, om)
}

// ---------------------------------------------------------------------------
// dimension 2

fn t2_flat(_: &Params) -> Result<SymmetricTriple> {
    table(&[], &["e", "f"], &[], &[("e", "f", q(1))])
}

fn t2_eps(p: &Params) -> Result<SymmetricTriple> {
    let eps = p.val("eps");
    table(
        &["U"],
        &["e", "f"],
        &[("U", "f", vec![t(1, "e")]), ("e", "f", vec![ts(&eps, "U")])],
        &[("e", "f", q(1))],
    )
}

/// `su(2)`, rotation generator `k`.
fn t_s2(_: &Params) -> Result<SymmetricTriple> {
    table(
        &["k"],
        &["s0", "s1"],
        &[
            ("k", "s0", vec![t(1, "s1")]),
            ("k", "s1", vec![t(-1, "s0")]),
            ("s0", "s1", vec![t(1, "k")]),
        ],
        &[("s0", "s1", q(1))],
    )
}

/// `su(1,1)` with compact `K`.
fn t_d(_: &Params) -> Result<SymmetricTriple> {
    table(
        &["k"],
        &["s0", "s1"],
        &[
            ("k", "s0", vec![t(-1, "s1")]),
            ("k", "s1", vec![t(1, "s0")]),
            ("s0", "s1", vec![t(1, "k")]),
        ],
        &[("s0", "s1", q(1))],
    )
}

/// `su(1,1)` with hyperbolic `K`.
fn t_h1(_: &Params) -> Result<SymmetricTriple> {
    table(
        &["k"],
        &["s0", "s1"],
        &[
            ("k", "s0", vec![t(-2, "s0")]),
            ("k", "s1", vec![t(2, "s1")]),
            ("s0", "s1", vec![t(1, "k")]),
        ],
        &[("s0", "s1", q(1))],
    )
}

// ---------------------------------------------------------------------------
// dimension 4, solvable

fn t4_flat(_: &Params) -> Result<SymmetricTriple> {
    table(
        &[],
        &["e1", "e2", "f1", "f2"],
        &[],
        &[("e1", "f1", q(1)), ("e2", "f2", q(1))],
    )
}

fn mat2(a: [[i64; 2]; 2]) -> [[Scalar; 2]; 2] {
    a.map(|r| r.map(q))
}

fn mul2(a: &[[Scalar; 2]; 2], b: &[[Scalar; 2]; 2]) -> [[Scalar; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

/// The first series on `k1, k2 | e1, e2, f1, f2`:
/// `[f1, k_j] = e_j`, `[f2, k_j] = Σ U_ij e_i`, `[f1, e_j] = Σ Y_ij k_i`,
/// `[f2, e_j] = Σ (UY)_ij k_i`, with the form `Ω_x`.
fn first_series(u: [[Scalar; 2]; 2], y: [[Scalar; 2]; 2], x: &Scalar) -> Result<SymmetricTriple> {
    let uy = mul2(&u, &y);
    let ks = ["k1", "k2"];
    let es = ["e1", "e2"];
    let mut br: Vec<(&str, &str, Vec<Term<'_>>)> = Vec::new();
    for j in 0..2 {
        br.push(("f1", ks[j], vec![t(1, es[j])]));
        br.push(("f2", ks[j], (0..2).map(|i| ts(&u[i][j], es[i])).collect()));
        br.push(("f1", es[j], (0..2).map(|i| ts(&y[i][j], ks[i])).collect()));
        br.push(("f2", es[j], (0..2).map(|i| ts(&uy[i][j], ks[i])).collect()));
    }
    table(
        &ks,
        &["e1", "e2", "f1", "f2"],
        &br,
        &[("e1", "f1", q(1)), ("e2", "f2", q(1)), ("f1", "f2", x.clone())],
    )
}

fn scaled2(m: [[i64; 2]; 2], c: &Scalar) -> [[Scalar; 2]; 2] {
    mat2(m).map(|r| r.map(|v| v * c))
}

const U1: [[i64; 2]; 2] = [[0, 1], [0, 0]];
const U2: [[i64; 2]; 2] = [[0, 1], [1, 0]];
const U3: [[i64; 2]; 2] = [[0, 1], [-1, 0]];
const I2: [[i64; 2]; 2] = [[1, 0], [0, 1]];

fn t4_1_eps_x_1(p: &Params) -> Result<SymmetricTriple> {
    first_series(mat2(U1), scaled2(I2, &p.val("eps")), &p.val("x"))
}

fn t4_2_eps_0_x_1(p: &Params) -> Result<SymmetricTriple> {
    first_series(mat2(U2), scaled2(I2, &p.val("eps")), &p.val("x"))
}

fn t4_2_0_eps_x_1(p: &Params) -> Result<SymmetricTriple> {
    first_series(mat2(U2), scaled2(U2, &p.val("eps")), &p.val("x"))
}

fn t4_3_eps_x_1(p: &Params) -> Result<SymmetricTriple> {
    first_series(mat2(U3), scaled2(U3, &p.val("eps")), &p.val("x"))
}

fn second_series_form(a: &Scalar, x: &Scalar) -> Vec<(&'static str, &'static str, Scalar)> {
    vec![
        ("e1", "f1", a.clone()),
        ("e2", "f2", a.clone()),
        ("f1", "f2", a * x),
    ]
}

fn t4_1_a_x_2(p: &Params) -> Result<SymmetricTriple> {
    table(
        &["k1", "k2"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("f1", "k1", vec![t(1, "e1")]),
            ("f1", "k2", vec![t(1, "e2")]),
            ("f2", "k2", vec![t(1, "e1")]),
            ("f1", "e2", vec![t(1, "k1")]),
            ("f1", "f2", vec![t(1, "k2")]),
        ],
        &second_series_form(&p.val("a"), &p.val("x")),
    )
}

fn t4_2_eps_epsp_a_x_2(p: &Params) -> Result<SymmetricTriple> {
    let (e, ep) = (p.val("eps"), p.val("epsp"));
    table(
        &["k1", "k2"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("f1", "k1", vec![t(1, "e1")]),
            ("f1", "k2", vec![t(1, "e2")]),
            ("f2", "k1", vec![t(1, "e2")]),
            ("f2", "k2", vec![t(1, "e1")]),
            ("f1", "e1", vec![ts(&e, "k1"), ts(&ep, "k2")]),
            ("f1", "e2", vec![ts(&ep, "k1"), ts(&e, "k2")]),
            ("f2", "e1", vec![ts(&ep, "k1"), ts(&e, "k2")]),
            ("f2", "e2", vec![ts(&e, "k1"), ts(&ep, "k2")]),
            ("f1", "f2", vec![ts(&e, "k1"), ts(&(-&ep), "k2")]),
        ],
        &second_series_form(&p.val("a"), &p.val("x")),
    )
}

fn t4_3_eps_epsp_eta(p: &Params) -> Result<SymmetricTriple> {
    let (e, ep, eta) = (p.val("eps"), p.val("epsp"), p.val("eta"));
    table(
        &["U", "V", "E"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("U", "V", vec![t(1, "E")]),
            ("U", "e2", vec![t(1, "e1")]),
            ("U", "f1", vec![t(-1, "f2")]),
            ("V", "f1", vec![t(1, "e2")]),
            ("V", "f2", vec![t(1, "e1")]),
            ("E", "f1", vec![t(2, "e1")]),
            ("e1", "f1", vec![ts(&(q(2) * &e), "E")]),
            ("e2", "f1", vec![ts(&e, "V")]),
            ("e2", "f2", vec![ts(&e, "E")]),
            ("f1", "f2", vec![ts(&e, "U")]),
        ],
        &[("e1", "f1", ep.clone()), ("e2", "f2", ep), ("f1", "f2", eta)],
    )
}

/// `K = ⟨U, X⟩`, `Ω = δ(a X* + b U*)` on `P`.
fn t4_4_eps_alpha(p: &Params) -> Result<SymmetricTriple> {
    let e = p.val("eps");
    let skeleton = table(
        &["U", "X"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("U", "e2", vec![t(1, "e1")]),
            ("U", "f1", vec![ts(&(-&e), "f2")]),
            ("U", "f2", vec![t(1, "e2")]),
            ("X", "f1", vec![t(1, "e1")]),
            ("e1", "f1", vec![ts(&e, "X")]),
            ("e2", "f2", vec![t(1, "X")]),
            ("f1", "f2", vec![t(1, "U")]),
        ],
        &[],
    )?;
    let mut xi = vec![Scalar::zero(); 6];
    xi[0] = p.val("b");
    xi[1] = p.val("a");
    let om = coboundary_on_p(&skeleton, &xi);
    with_omega(&skeleton, om)
}

/// `K = ⟨U, X⟩`, `Ω = δ(X* + u U*)` on `P` plus `η e2* ∧ f1*`.
fn t4_5_eps_alpha_eta(p: &Params) -> Result<SymmetricTriple> {
    let e = p.val("eps");
    let skeleton = table(
        &["U", "X"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("U", "e2", vec![t(1, "e1")]),
            ("U", "f1", vec![t(-1, "f2")]),
            ("X", "f1", vec![t(1, "e1")]),
            ("e1", "f1", vec![ts(&e, "X")]),
            ("e2", "f2", vec![ts(&e, "X")]),
            ("f1", "f2", vec![ts(&e, "U")]),
        ],
        &[],
    )?;
    let mut xi = vec![Scalar::zero(); 6];
    xi[0] = p.val("u");
    xi[1] = q(1);
    let mut om = coboundary_on_p(&skeleton, &xi);
    // P basis order: e1, e2, f1, f2
    let eta = p.val("eta");
    om[(1, 2)] += &eta;
    om[(2, 1)] -= &eta;
    with_omega(&skeleton, om)
}

fn t4_6_eps(p: &Params) -> Result<SymmetricTriple> {
    let e = p.val("eps");
    table(
        &["U", "X"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("U", "e2", vec![t(1, "e1")]),
            ("U", "f1", vec![t(-1, "f2")]),
            ("X", "f1", vec![t(1, "e1")]),
            ("f1", "f2", vec![t(1, "X")]),
            ("e2", "f1", vec![t(1, "U")]),
        ],
        &[("e1", "f1", e.clone()), ("e2", "f2", e)],
    )
}

fn t4_7_eps(p: &Params) -> Result<SymmetricTriple> {
    table(
        &["U"],
        &["e1", "e2", "f1", "f2"],
        &[
            ("U", "e2", vec![t(1, "e1")]),
            ("U", "f1", vec![t(1, "f2")]),
            ("e2", "f1", vec![t(1, "U")]),
        ],
        &[("e1", "e2", q(1)), ("f2", "f1", p.val("eps"))],
    )
}

fn t4_8(_: &Params) -> Result<SymmetricTriple> {
    table(
        &["U"],
        &["e1", "e2", "f1", "f2"],
        &[("U", "f2", vec![t(1, "e2")]), ("e1", "f2", vec![t(1, "U")])],
        &[("e1", "f1", q(1)), ("e2", "f2", q(1))],
    )
}

fn t2_flat_plus_t2_eps(p: &Params) -> Result<SymmetricTriple> {
    direct_sum_triples(&t2_flat(p)?, &t2_eps(p)?)
}

// ---------------------------------------------------------------------------
// dimension 4, neither solvable nor semisimple

fn t2_flat_plus(simple: fn(&Params) -> Result<SymmetricTriple>) -> Result<SymmetricTriple> {
    direct_sum_triples(&t2_flat(&Params::new())?, &simple(&Params::new())?)
}

fn t2_0_s2(_: &Params) -> Result<SymmetricTriple> {
    t2_flat_plus(t_s2)
}

fn t2_0_h1(_: &Params) -> Result<SymmetricTriple> {
    t2_flat_plus(t_h1)
}

fn t2_0_d(_: &Params) -> Result<SymmetricTriple> {
    t2_flat_plus(t_d)
}

fn cotangent_form(a: &Scalar) -> Vec<(&'static str, &'static str, Scalar)> {
    vec![("s0", "s1", a.clone()), ("s0", "r0", q(1)), ("s1", "r1", q(1))]
}

/// Cotangent bundle of `S²` (`ε = 1`) or of the disc (`ε = -1`) on
/// `k, x | s0, s1, r0, r1`.
fn cotangent_rotation(eps: i64, a: &Scalar) -> Result<SymmetricTriple> {
    table(
        &["k", "x"],
        &["s0", "s1", "r0", "r1"],
        &[
            ("k", "s0", vec![t(eps, "s1")]),
            ("k", "s1", vec![t(-eps, "s0")]),
            ("s0", "s1", vec![t(1, "k")]),
            ("k", "r0", vec![t(eps, "r1")]),
            ("k", "r1", vec![t(-eps, "r0")]),
            ("x", "s0", vec![t(-eps, "r0")]),
            ("x", "s1", vec![t(-eps, "r1")]),
            ("r0", "s0", vec![t(1, "x")]),
            ("r1", "s1", vec![t(1, "x")]),
        ],
        &cotangent_form(a),
    )
}

fn cotangent_s2(p: &Params) -> Result<SymmetricTriple> {
    cotangent_rotation(1, &p.val("a"))
}

fn cotangent_d(p: &Params) -> Result<SymmetricTriple> {
    cotangent_rotation(-1, &p.val("a"))
}

fn cotangent_h1(p: &Params) -> Result<SymmetricTriple> {
    table(
        &["k", "x"],
        &["s0", "s1", "r0", "r1"],
        &[
            ("k", "s0", vec![t(-2, "s0")]),
            ("k", "s1", vec![t(2, "s1")]),
            ("s0", "s1", vec![t(1, "k")]),
            ("k", "r0", vec![t(2, "r0")]),
            ("k", "r1", vec![t(-2, "r1")]),
            ("x", "s0", vec![t(2, "r1")]),
            ("x", "s1", vec![t(2, "r0")]),
            ("r0", "s0", vec![t(-1, "x")]),
            ("r1", "s1", vec![t(-1, "x")]),
        ],
        &cotangent_form(&p.val("a")),
    )
}

// ---------------------------------------------------------------------------
// dimension 4, simple
//
// Built from matrix bases. Complex matrices are realified as
// `[[Re, -Im], [Im, Re]]`, σ is conjugation by a diagonal sign matrix and
// Ω comes from a central element of K through the Killing form.

struct CMat {
    re: Mat,
    im: Mat,
}

impl CMat {
    fn zero(n: usize) -> Self {
        Self {
            re: Mat::zeros(n, n),
            im: Mat::zeros(n, n),
        }
    }

    fn realify(&self) -> Mat {
        let n = self.re.rows();
        Mat::from_fn(2 * n, 2 * n, |i, j| {
            let (bi, bj) = (i / n, j / n);
            let (r, c) = (i % n, j % n);
            match (bi, bj) {
                (0, 0) | (1, 1) => self.re[(r, c)].clone(),
                (0, 1) => -self.im[(r, c)].clone(),
                _ => self.im[(r, c)].clone(),
            }
        })
    }
}

/// `su(p, q)` for the Hermitian form `diag(j)`, with σ = Ad(diag(d)).
/// Returns the labelled matrices and whether each lies in `P`.
fn unitary_basis(j: &[i64], d: &[i64]) -> Vec<(String, Mat, bool)> {
    let n = j.len();
    let mut out = Vec::new();
    for a in 0..n - 1 {
        let mut m = CMat::zero(n);
        m.im[(a, a)] = q(1);
        m.im[(a + 1, a + 1)] = q(-1);
        out.push((format!("h{}", a + 1), m.realify(), false));
    }
    for a in 0..n {
        for b in a + 1..n {
            let s = j[a] * j[b];
            let in_p = d[a] * d[b] < 0;
            // X = z E_ab - s z̄ E_ba
            let mut x = CMat::zero(n);
            x.re[(a, b)] = q(1);
            x.re[(b, a)] = q(-s);
            let mut y = CMat::zero(n);
            y.im[(a, b)] = q(1);
            y.im[(b, a)] = q(s);
            out.push((format!("x{}{}", a + 1, b + 1), x.realify(), in_p));
            out.push((format!("y{}{}", a + 1, b + 1), y.realify(), in_p));
        }
    }
    out
}

fn from_matrices(basis: Vec<(String, Mat, bool)>) -> Result<SymmetricTriple> {
    // K first, then P
    let (k, p): (Vec<_>, Vec<_>) = basis.into_iter().partition(|b| !b.2);
    let nk = k.len();
    let all: Vec<(String, Mat, bool)> = k.into_iter().chain(p).collect();
    let labels: Vec<String> = all.iter().map(|b| b.0.clone()).collect();
    let mats: Vec<Mat> = all.iter().map(|b| b.1.clone()).collect();
    let alg = LieAlgebra::from_matrix_basis(labels, &mats)?;
    let d = all.len() - nk;
    let p_idx: Vec<usize> = (nk..nk + d).collect();
    SymmetricTriple::from_adapted(alg, &p_idx, Mat::zeros(d, d))
}

fn with_central_form(tr: SymmetricTriple) -> Result<SymmetricTriple> {
    let z = tr.center_of_k();
    let v = z
        .basis()
        .first()
        .ok_or_else(|| Error::Internal("K has trivial center".into()))?
        .clone();
    omega_from_center(&tr, &v)
}

fn su3(_: &Params) -> Result<SymmetricTriple> {
    with_central_form(from_matrices(unitary_basis(&[1, 1, 1], &[1, 1, -1]))?)
}

fn su12_compact_k(_: &Params) -> Result<SymmetricTriple> {
    with_central_form(from_matrices(unitary_basis(&[1, 1, -1], &[1, 1, -1]))?)
}

fn su12_noncompact_k(_: &Params) -> Result<SymmetricTriple> {
    with_central_form(from_matrices(unitary_basis(&[1, 1, -1], &[-1, 1, 1]))?)
}

fn sl3r(_: &Params) -> Result<SymmetricTriple> {
    let e = |a: usize, b: usize| -> Mat {
        let mut m = Mat::zeros(3, 3);
        m[(a, b)] = q(1);
        m
    };
    let d = [1i64, 1, -1];
    let mut basis = vec![
        ("h1".to_string(), Mat::diag(&[q(1), q(-1), q(0)]), false),
        ("h2".to_string(), Mat::diag(&[q(1), q(1), q(-2)]), false),
    ];
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                basis.push((format!("e{}{}", a + 1, b + 1), e(a, b), d[a] * d[b] < 0));
            }
        }
    }
    with_central_form(from_matrices(basis)?)
}

fn sl2c(_: &Params) -> Result<SymmetricTriple> {
    let unit = |r: usize, c: usize, v: i64, imag: bool| -> Mat {
        let mut m = CMat::zero(2);
        if imag {
            m.im[(r, c)] = q(v);
        } else {
            m.re[(r, c)] = q(v);
        }
        m.realify()
    };
    let h = unit(0, 0, 1, false).add(&unit(1, 1, -1, false))?;
    let ih = unit(0, 0, 1, true).add(&unit(1, 1, -1, true))?;
    let basis = vec![
        ("h".to_string(), h, false),
        ("ih".to_string(), ih, false),
        ("e".to_string(), unit(0, 1, 1, false), true),
        ("ie".to_string(), unit(0, 1, 1, true), true),
        ("f".to_string(), unit(1, 0, 1, false), true),
        ("if".to_string(), unit(1, 0, 1, true), true),
    ];
    let tr = from_matrices(basis)?;
    let mut z = vec![Scalar::zero(); 6];
    z[0] = q(1);
    omega_from_center(&tr, &z)
}

// ---------------------------------------------------------------------------
// registry

const EPS: ParamSpec = sign("eps");
const EPSP: ParamSpec = sign("epsp");
const X: ParamSpec = form_param("x", Domain::Rational);
const A_NZ: ParamSpec = form_param("a", Domain::NonzeroRational);

macro_rules! family {
    ($id:expr, $dim:expr, $kind:expr, $params:expr, $desc:expr, $cx:expr, $b:expr) => {
        Family {
            id: $id,
            dim_p: $dim,
            kind: $kind,
            params: $params,
            description: $desc,
            complexification: $cx,
            builder: $b,
        }
    };
}

static FAMILIES: &[Family] = &[
    family!("t2_0", 2, Kind::Flat, &[], "flat plane", None, t2_flat),
    family!("t2_eps", 2, Kind::Solvable, &[EPS], "[U,f] = e, [e,f] = eps U", None, t2_eps),
    family!("t_D", 2, Kind::Simple, &[], "SU(1,1)/SO(2), the disc", Some("A1"), t_d),
    family!("t_H1", 2, Kind::Simple, &[], "SU(1,1)/R, the one-sheeted hyperboloid", Some("A1"), t_h1),
    family!("t_S2", 2, Kind::Simple, &[], "SU(2)/SO(2), the sphere", Some("A1"), t_s2),
    family!("t4_0", 4, Kind::Flat, &[], "flat, dimension 4", None, t4_flat),
    family!(
        "t4_1_eps_x(1)",
        4,
        Kind::Solvable,
        &[EPS, X],
        "first series, U = [[0,1],[0,0]], Y = eps I",
        None,
        t4_1_eps_x_1
    ),
    family!(
        "t4_2_eps_0_x(1)",
        4,
        Kind::Solvable,
        &[EPS, X],
        "first series, U = [[0,1],[1,0]], Y = eps I",
        None,
        t4_2_eps_0_x_1
    ),
    family!(
        "t4_2_0_eps_x(1)",
        4,
        Kind::Solvable,
        &[EPS, X],
        "first series, U = [[0,1],[1,0]], Y = eps U",
        None,
        t4_2_0_eps_x_1
    ),
    family!(
        "t4_3_eps_x(1)",
        4,
        Kind::Solvable,
        &[EPS, X],
        "first series, U = [[0,1],[-1,0]], Y = eps U",
        None,
        t4_3_eps_x_1
    ),
    family!(
        "t4_1_a_x(2)",
        4,
        Kind::Solvable,
        &[A_NZ, X],
        "second series, nilpotent type",
        None,
        t4_1_a_x_2
    ),
    family!(
        "t4_2_eps_epsp_a_x(2)",
        4,
        Kind::Solvable,
        &[EPS, EPSP, A_NZ, X],
        "second series, signed type",
        None,
        t4_2_eps_epsp_a_x_2
    ),
    family!(
        "t4_3_eps_epsp_eta",
        4,
        Kind::Solvable,
        &[EPS, form_param("epsp", Domain::Sign), form_param("eta", Domain::Choice(&[0, 1]))],
        "three-dimensional K, not exact, trivial center",
        None,
        t4_3_eps_epsp_eta
    ),
    family!(
        "t4_4_eps_alpha",
        4,
        Kind::Solvable,
        &[EPS, A_NZ, form_param("b", Domain::Rational)],
        "Omega = d(a X* + b U*)",
        None,
        t4_4_eps_alpha
    ),
    family!(
        "t4_5_eps_alpha_eta",
        4,
        Kind::Solvable,
        &[EPS, form_param("u", Domain::Rational), form_param("eta", Domain::Choice(&[-1, 0, 1]))],
        "Omega = d(X* + u U*) + eta e2* ^ f1*",
        None,
        t4_5_eps_alpha_eta
    ),
    family!(
        "t4_6_eps",
        4,
        Kind::Solvable,
        &[form_param("eps", Domain::Sign)],
        "K = <U, X>, Omega = eps [[0,I],[-I,0]]",
        None,
        t4_6_eps
    ),
    family!(
        "t4_7_eps",
        4,
        Kind::Solvable,
        &[form_param("eps", Domain::Sign)],
        "K = <U>, Omega(e1,e2) = 1, Omega(f2,f1) = eps",
        None,
        t4_7_eps
    ),
    family!("t4_8", 4, Kind::Solvable, &[], "K = <U>, [U,f2] = e2, [e1,f2] = U", None, t4_8),
    family!(
        "t2_0+t2_eps",
        4,
        Kind::Solvable,
        &[EPS],
        "flat plane plus t2_eps",
        None,
        t2_flat_plus_t2_eps
    ),
    family!("t2_0+t_S2", 4, Kind::Mixed, &[], "flat plane plus t_S2", None, t2_0_s2),
    family!("t2_0+t_H1", 4, Kind::Mixed, &[], "flat plane plus t_H1", None, t2_0_h1),
    family!("t2_0+t_D", 4, Kind::Mixed, &[], "flat plane plus t_D", None, t2_0_d),
    family!(
        "cotangent_S2",
        4,
        Kind::Mixed,
        &[form_param("a", Domain::Rational)],
        "cotangent bundle of the sphere",
        None,
        cotangent_s2
    ),
    family!(
        "cotangent_H1",
        4,
        Kind::Mixed,
        &[form_param("a", Domain::Rational)],
        "cotangent bundle of the one-sheeted hyperboloid",
        None,
        cotangent_h1
    ),
    family!(
        "cotangent_D",
        4,
        Kind::Mixed,
        &[form_param("a", Domain::Rational)],
        "cotangent bundle of the disc",
        None,
        cotangent_d
    ),
    family!("su3", 4, Kind::Simple, &[], "su(3) | su(2) + so(2)", Some("A2"), su3),
    family!(
        "su12_compact",
        4,
        Kind::Simple,
        &[],
        "su(1,2) | su(2) + so(2)",
        Some("A2"),
        su12_compact_k
    ),
    family!(
        "su12_noncompact",
        4,
        Kind::Simple,
        &[],
        "su(1,2) | su(1,1) + so(2)",
        Some("A2"),
        su12_noncompact_k
    ),
    family!("sl3r", 4, Kind::Simple, &[], "sl(3,R) | sl(2,R) + R", Some("A2"), sl3r),
    family!("sl2c", 4, Kind::Simple, &[], "sl(2,C) | C", Some("A1xA1"), sl2c),
];

pub fn families() -> &'static [Family] {
    FAMILIES
}

/// Short names accepted in place of full ids.
pub const ALIASES: &[(&str, &str)] = &[
    ("t4_3", "t4_3_eps_epsp_eta"),
    ("t4_4", "t4_4_eps_alpha"),
    ("t4_5", "t4_5_eps_alpha_eta"),
    ("t4_6", "t4_6_eps"),
    ("t4_7", "t4_7_eps"),
    ("t2", "t2_eps"),
    ("p5", "t4_5_eps_alpha_eta"),
];

/// The first series as a whole: `"t4_1"` with signs `eps`, `epsp` picks
/// the member whose `x = 0` degeneration is `t2_eps ⊕ t2_epsp`.
pub const FIRST_SERIES: &str = "t4_1";

pub fn family(id: &str) -> Result<&'static Family> {
    let target = ALIASES
        .iter()
        .find(|(a, _)| *a == id)
        .map_or(id, |(_, full)| *full);
    FAMILIES.iter().find(|f| f.id == target).ok_or_else(|| {
        let mut ids: Vec<&str> = FAMILIES.iter().map(|f| f.id).collect();
        ids.push(FIRST_SERIES);
        ids.extend(ALIASES.iter().map(|(a, _)| *a));
        Error::UnknownFamily(format!("{id} (known: {})", ids.join(", ")))
    })
}

/// Member of the first series and its parameters for the sign pair
/// `(eps, epsp)`.
pub fn first_series_member(params: &Params) -> Result<(&'static Family, Params)> {
    let get = |k: &str| params.get(k).cloned().unwrap_or_else(|| q(1));
    let (e, ep) = (get("eps"), get("epsp"));
    let x = params.get("x").cloned().unwrap_or_else(|| q(0));
    for (k, _) in params.iter() {
        if !["eps", "epsp", "x"].contains(&k.as_str()) {
            return Err(Error::InvalidParameters {
                family: FIRST_SERIES.into(),
                reason: format!("unknown parameter '{k}'"),
            });
        }
    }
    for v in [&e, &ep] {
        if !Domain::Sign.contains(v) {
            return Err(Error::InvalidParameters {
                family: FIRST_SERIES.into(),
                reason: format!("sign {v} is not ±1"),
            });
        }
    }
    let (id, eps) = if e == ep {
        ("t4_2_eps_0_x(1)", e)
    } else {
        ("t4_2_0_eps_x(1)", q(1))
    };
    Ok((family(id)?, Params::new().with("eps", eps).with("x", x)))
}

pub fn build(id: &str, params: &Params) -> Result<SymmetricTriple> {
    if id == FIRST_SERIES {
        let (f, p) = first_series_member(params)?;
        return f.build(&p);
    }
    family(id)?.build(params)
}

// ---------------------------------------------------------------------------
// nilpotent action and stable Lagrangians

/// A `K`-stable Lagrangian of `P` (in `P` coordinates), found greedily:
/// inside `L^⊥`, take a vector that `K` maps into `L`. Exists whenever
/// `ad(K)|_P` is a nilpotent family.
pub fn k_stable_lagrangian(t: &SymmetricTriple) -> Result<Option<Subspace>> {
    let d = t.dim_p();
    let mats: Vec<Mat> = t
        .k()
        .basis()
        .iter()
        .map(|k| t.ad_on_p(k))
        .collect::<Result<_>>()?;
    let om = t.omega();
    let mut l = Subspace::zero(d);
    while 2 * l.dim() < d {
        // W = L^⊥
        let mut rows = Subspace::zero(d);
        for v in l.basis() {
            rows.insert(om.mul_vec(v)?)?;
        }
        let w = annihilator(&rows);
        // functionals vanishing on L
        let l_ann = {
            let mut r = Subspace::zero(d);
            for v in l.basis() {
                r.insert(v.clone())?;
            }
            annihilator(&r)
        };
        // c ↦ φ(A W c) for every φ ∈ ann(L), every A
        let wm = w.basis_matrix();
        let m = w.dim();
        let mut eqs = Subspace::zero(m);
        for a in &mats {
            let aw = a.mul(&wm)?;
            for phi in l_ann.basis() {
                let row: Vec<Scalar> = (0..m)
                    .map(|c| (0..d).map(|r| &phi[r] * &aw[(r, c)]).sum())
                    .collect();
                eqs.insert(row)?;
            }
        }
        let sol = annihilator(&eqs);
        let next = sol
            .basis()
            .iter()
            .map(|c| wm.mul_vec(c).expect("shapes agree"))
            .find(|v| !l.contains(v));
        match next {
            Some(v) => {
                l.insert(v)?;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(l))
}

/// For solvable `G`: every `ad(k)|_P` is nilpotent and some Lagrangian of
/// `P` is `K`-stable.
pub fn nilpotent_k_check(t: &SymmetricTriple) -> Result<bool> {
    if !t.alg().is_solvable() {
        return Err(Error::Precondition("the algebra is not solvable".into()));
    }
    if !t.ad_k_nilpotent_on_p() {
        return Ok(false);
    }
    let Some(l) = k_stable_lagrangian(t)? else {
        return Ok(false);
    };
    let om = t.omega();
    let isotropic = l
        .basis()
        .iter()
        .all(|x| l.basis().iter().all(|y| om.bilinear(x, y).is_zero()));
    Ok(isotropic && 2 * l.dim() == t.dim_p())
}

// ---------------------------------------------------------------------------
// sweeps, distinction, enumeration

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub family: String,
    pub params: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub fingerprint: Option<TripleFingerprint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> Vec<&EntryReport> {
        self.entries.iter().filter(|e| !e.passed).collect()
    }
}

/// Structural checks beyond validation, per family.
fn structural_checks(f: &Family, p: &Params, tr: &SymmetricTriple) -> Result<(Vec<String>, Vec<String>)> {
    let mut fails = Vec::new();
    let mut notes = Vec::new();
    let alg = tr.alg();
    match f.kind {
        Kind::Flat => {
            if !tr.is_flat() {
                fails.push("flat entry has nonzero K".into());
            }
        }
        Kind::Solvable => {
            if !nilpotent_k_check(tr)? {
                fails.push("no nilpotent action with a stable Lagrangian".into());
            }
        }
        Kind::Mixed => {
            if alg.is_solvable() || alg.is_semisimple() {
                fails.push("expected neither solvable nor semisimple".into());
            }
            let rp = radical_part(tr)?;
            if rp.bound_ok != Some(true) {
                fails.push(format!("dim P_R = {} violates 2 <= dim P_R <= dim P - 2", rp.p_r.dim()));
            }
            if f.id.starts_with("cotangent") && !(rp.isotropic && rp.p_r.dim() == 2) {
                fails.push("P_R is not a 2-dimensional isotropic subspace".into());
            }
        }
        Kind::Simple => {
            if !alg.is_semisimple() {
                fails.push("expected a semisimple algebra".into());
            }
            // a complex simple algebra viewed as real has K ⊇ ℂ·z
            let expected = if f.complexification.is_some_and(|c| c.contains('x')) { 2 } else { 1 };
            let got = tr.center_of_k().dim();
            if got != expected {
                fails.push(format!("dim Z(K) = {got}, expected {expected}"));
            }
        }
    }
    if f.id == "t4_3_eps_epsp_eta" {
        if tr.is_exact() {
            fails.push("expected a non-exact triple".into());
        }
        if !alg.center().is_zero() {
            fails.push("expected Z(G) = 0".into());
        }
        if !tr.heisenberg_extension()?.is_exact() {
            fails.push("Heisenberg extension is not exact".into());
        }
    }
    let x_zero = p.get("x").is_some_and(Zero::is_zero);
    if f.id.ends_with("(1)") && x_zero {
        let d = decompose(tr)?;
        let two_planes = d.factors.len() == 2 && d.factors.iter().all(|g| g.dim_p() == 2);
        let must_split = matches!(f.id, "t4_2_eps_0_x(1)" | "t4_2_0_eps_x(1)");
        if must_split && !two_planes {
            fails.push("x = 0 member does not split into two planes".into());
        } else if !must_split {
            notes.push(format!(
                "x = 0: {} factor(s), indecomposable-by-search",
                d.factors.len()
            ));
        }
    }
    Ok((fails, notes))
}

fn check_entry(f: &Family, p: &Params) -> EntryReport {
    let mut report = EntryReport {
        family: f.id.to_string(),
        params: p.to_string(),
        passed: false,
        failures: Vec::new(),
        notes: Vec::new(),
        fingerprint: None,
    };
    let tr = match f.build(p) {
        Ok(t) => t,
        Err(e) => {
            report.failures.push(format!("build failed: {e}"));
            return report;
        }
    };
    if tr.dim_p() != f.dim_p {
        report.failures.push(format!("dim P = {} (expected {})", tr.dim_p(), f.dim_p));
    }
    let v = tr.validate();
    report
        .failures
        .extend(v.failures().iter().map(|c| format!("{} failed", c.name)));
    if v.passed() {
        match structural_checks(f, p, &tr) {
            Ok((fails, notes)) => {
                report.failures.extend(fails);
                report.notes.extend(notes);
            }
            Err(e) => report.failures.push(format!("structural check error: {e}")),
        }
        report.fingerprint = Some(tr.fingerprint());
    }
    report.passed = report.failures.is_empty();
    report
}

/// Builds and checks every family over its grid, at most
/// `max_params_per_family` points each.
pub fn verify_all(max_params_per_family: usize) -> CatalogReport {
    let mut entries = Vec::new();
    for f in FAMILIES {
        for p in f.grid(max_params_per_family) {
            entries.push(check_entry(f, &p));
        }
    }
    CatalogReport { entries }
}

/// Builds and checks a single entry.
pub fn verify_entry(id: &str, params: &Params) -> Result<EntryReport> {
    if id == FIRST_SERIES {
        let (f, p) = first_series_member(params)?;
        let p = f.resolve(&p)?;
        return Ok(check_entry(f, &p));
    }
    let f = family(id)?;
    let p = f.resolve(params)?;
    Ok(check_entry(f, &p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Distinction {
    /// The named invariant differs, so the triples are not isomorphic.
    Certificate {
        invariant: String,
        left: String,
        right: String,
    },
    /// All recorded invariants agree; nothing is claimed.
    Inconclusive,
}

/// Fingerprint entries as display-ready `(name, value)` pairs.
pub fn fingerprint_fields(f: &TripleFingerprint) -> Vec<(&'static str, String)> {
    let inertia = |i: &Inertia| format!("(+{}, -{}, 0x{})", i.pos, i.neg, i.zero);
    vec![
        ("dim G", f.dim_g.to_string()),
        ("dim K", f.dim_k.to_string()),
        ("dim P", f.dim_p.to_string()),
        ("derived series", format!("{:?}", f.derived_series)),
        ("lower central series", format!("{:?}", f.lower_central_series)),
        ("dim Z(G)", f.dim_center_g.to_string()),
        ("dim Z(K)", f.dim_center_k.to_string()),
        ("Killing signature", inertia(&f.killing)),
        ("Killing signature on K", inertia(&f.killing_on_k)),
        ("exactness", f.exact.to_string()),
        ("dim P_R", f.dim_p_radical.to_string()),
        ("ad(K)|P nilpotent", f.ad_k_nilpotent_on_p.to_string()),
    ]
}

pub fn distinguish_triples(a: &SymmetricTriple, b: &SymmetricTriple) -> Distinction {
    let (fa, fb) = (a.fingerprint(), b.fingerprint());
    for ((name, l), (_, r)) in fingerprint_fields(&fa).into_iter().zip(fingerprint_fields(&fb)) {
        if l != r {
            return Distinction::Certificate {
                invariant: name.into(),
                left: l,
                right: r,
            };
        }
    }
    Distinction::Inconclusive
}

pub fn distinguish(fa: &str, pa: &Params, fb: &str, pb: &Params) -> Result<Distinction> {
    let (a, b) = (build(fa, pa)?, build(fb, pb)?);
    for t in [&a, &b] {
        if !t.validate().passed() {
            return Err(Error::InvalidTriple("distinguish needs valid triples".into()));
        }
    }
    Ok(distinguish_triples(&a, &b))
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub family: String,
    pub dim_p: usize,
    pub kind: Kind,
    pub domain: Vec<(String, String)>,
    /// Number of members up to the form, i.e. the grid over bracket
    /// parameters.
    pub pair_classes: usize,
    pub description: String,
    pub complexification: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub rows: Vec<CatalogRow>,
    /// Entries of the dimension-2 list, signs expanded.
    pub dim2_entries: usize,
    pub dim4_simple_entries: usize,
    /// Solvable dimension-4 families (the list's bullets count the first
    /// series and the second series as one bullet each).
    pub dim4_solvable_families: usize,
    /// Solvable dimension-4 symmetric pairs, counted as distinct
    /// (family, bracket parameters); not an isomorphism count.
    pub dim4_solvable_pairs: usize,
    /// Distinct Ω-free fingerprints among those pairs: a lower bound for
    /// the number of isomorphism classes.
    pub dim4_solvable_pair_fingerprints: usize,
    /// The published count.
    pub published_pair_count: usize,
}

/// Ω-free invariants of the underlying symmetric pair.
fn pair_key(t: &SymmetricTriple) -> (Vec<usize>, Vec<usize>, usize, usize, Inertia, Inertia, bool) {
    let f = t.fingerprint();
    (
        f.derived_series,
        f.lower_central_series,
        f.dim_center_g,
        f.dim_center_k,
        f.killing,
        f.killing_on_k,
        f.ad_k_nilpotent_on_p,
    )
}

pub fn enumerate_catalog() -> Result<Enumeration> {
    let mut rows = Vec::new();
    let mut dim2 = 0;
    let mut simple4 = 0;
    let mut solv4 = 0;
    let mut pairs = 0;
    let mut keys = BTreeSet::new();
    for f in FAMILIES {
        let pg = f.pair_grid();
        rows.push(CatalogRow {
            family: f.id.into(),
            dim_p: f.dim_p,
            kind: f.kind,
            domain: f
                .params
                .iter()
                .map(|p| (p.name.to_string(), p.domain.to_string()))
                .collect(),
            pair_classes: pg.len(),
            description: f.description.into(),
            complexification: f.complexification.map(Into::into),
        });
        if f.dim_p == 2 {
            dim2 += pg.len();
        }
        if f.dim_p == 4 && f.kind == Kind::Simple {
            simple4 += 1;
        }
        if f.dim_p == 4 && matches!(f.kind, Kind::Solvable | Kind::Flat) {
            solv4 += 1;
            pairs += pg.len();
            for p in pg {
                let tr = f.build(&p)?;
                keys.insert((tr.dim_k(), pair_key(&tr)));
            }
        }
    }
    Ok(Enumeration {
        rows,
        dim2_entries: dim2,
        dim4_simple_entries: simple4,
        dim4_solvable_families: solv4,
        dim4_solvable_pairs: pairs,
        dim4_solvable_pair_fingerprints: keys.len(),
        published_pair_count: 25,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(&str, Scalar)]) -> Params {
        pairs
            .iter()
            .fold(Params::new(), |acc, (k, v)| acc.with(k, v.clone()))
    }

    #[test]
    fn t2_plus_is_valid() {
        let t = build("t2_eps", &p(&[("eps", q(1))])).unwrap();
        assert_eq!((t.dim(), t.dim_k()), (3, 1));
        assert!(t.validate().passed());
    }

    #[test]
    fn out_of_domain_rejected() {
        let r = build("t4_1_a_x(2)", &p(&[("a", q(0))]));
        assert!(matches!(r, Err(Error::InvalidParameters { .. })));
        let r = build("t2_eps", &p(&[("eps", q(2))]));
        assert!(matches!(r, Err(Error::InvalidParameters { .. })));
        let r = build("t2_eps", &p(&[("zeta", q(1))]));
        assert!(matches!(r, Err(Error::InvalidParameters { .. })));
        assert!(matches!(build("t9", &Params::new()), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn t4_3_not_exact() {
        let t = build("t4_3", &p(&[("eps", q(1)), ("epsp", q(1)), ("eta", q(0))])).unwrap();
        assert!(t.validate().passed());
        assert!(!t.is_exact());
        assert!(t.alg().center().is_zero());
    }

    #[test]
    fn cotangent_radical() {
        for id in ["cotangent_S2", "cotangent_H1", "cotangent_D"] {
            let t = build(id, &Params::new()).unwrap();
            assert!(t.validate().passed(), "{id}");
            let rp = radical_part(&t).unwrap();
            assert_eq!(rp.p_r.dim(), 2);
            assert!(rp.isotropic);
        }
    }

    #[test]
    fn simple_entries() {
        for id in ["su3", "su12_compact", "su12_noncompact", "sl3r", "sl2c"] {
            let t = build(id, &Params::new()).unwrap();
            assert!(t.validate().passed(), "{id}: {:?}", t.validate().failures());
            assert_eq!(t.dim_p(), 4);
        }
        // compact K: Killing form negative definite on K
        let f = build("su3", &Params::new()).unwrap().fingerprint();
        assert_eq!(f.killing.neg, 8);
        let f = build("su12_compact", &Params::new()).unwrap().fingerprint();
        assert_eq!((f.killing_on_k.neg, f.killing.pos), (4, 4));
    }

    #[test]
    fn killing_sign_of_fifth_family() {
        for eps in [1, -1] {
            let t = build("t4_5", &p(&[("eps", q(eps))])).unwrap();
            let k = t.fingerprint().killing;
            if eps > 0 {
                assert_eq!((k.pos, k.neg), (1, 0));
            } else {
                assert_eq!((k.pos, k.neg), (0, 1));
            }
        }
    }

    #[test]
    fn flat_lagrangian() {
        let t = build("t4_0", &Params::new()).unwrap();
        assert!(nilpotent_k_check(&t).unwrap());
        let s = build("t_S2", &Params::new()).unwrap();
        assert!(matches!(nilpotent_k_check(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn distinction() {
        let plus = p(&[("eps", q(1))]);
        let minus = p(&[("eps", q(-1))]);
        match distinguish("t4_5", &plus, "t4_5", &minus).unwrap() {
            Distinction::Certificate { invariant, .. } => assert_eq!(invariant, "Killing signature"),
            Distinction::Inconclusive => panic!("expected a certificate"),
        }
        assert_eq!(
            distinguish("t2_eps", &plus, "t2_eps", &plus).unwrap(),
            Distinction::Inconclusive
        );
    }

    #[test]
    fn counts() {
        let e = enumerate_catalog().unwrap();
        assert_eq!(e.dim2_entries, 6);
        assert_eq!(e.dim4_simple_entries, 5);
        assert_eq!(e.dim4_solvable_pairs, 25);
    }
}
