//! Univariate polynomials over ℚ: arithmetic, minimal polynomials of
//! matrices and factorisation into irreducibles.
//!
//! Factorisation takes out rational roots first and then looks for
//! higher-degree factors with Kronecker's interpolation method. That is
//! exponential in the degree, but the matrices it is used on are small.

use std::collections::BTreeSet;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::linalg::{Mat, Scalar, Subspace};

/// Polynomial with coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Scalar>);

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Scalar::one()])
    }

    /// `x - r`
    pub fn linear(r: Scalar) -> Self {
        Poly(vec![-r, Scalar::one()])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| Scalar::from_integer(x.into())).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        Poly(self.0.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        let Some(n) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if n < dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.lead().recip();
        let mut quot = vec![Scalar::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.0.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            quot[k] = c;
        }
        (Poly::new(quot), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_mat(&self, a: &Mat) -> Result<Mat> {
        let n = a.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(a)?.add(&Mat::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&qt.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&qt.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lead().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    /// Integer primitive polynomial with positive leading coefficient,
    /// proportional to `self`.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Irreducible monic factors with multiplicities, in a deterministic
    /// order (by degree, then coefficients).
    pub fn factor(&self) -> Vec<(Poly, u32)> {
        let mut out: Vec<(Poly, u32)> = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut rest = self.monic();
        // peel squarefree parts: each irreducible of the squarefree kernel,
        // divided out repeatedly
        while rest.degree().unwrap_or(0) > 0 {
            let sqf = rest.div_rem(&rest.gcd(&rest.derivative())).0.monic();
            for f in factor_squarefree(&sqf) {
                let mut mult = 0;
                loop {
                    let (qt, r) = rest.div_rem(&f);
                    if !r.is_zero() {
                        break;
                    }
                    rest = qt;
                    mult += 1;
                }
                if let Some(e) = out.iter_mut().find(|(g, _)| *g == f) {
                    e.1 += mult;
                } else {
                    out.push((f, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
        });
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            let other = &n / &i;
            if other != i {
                out.push(other);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Rational roots via the rational root theorem.
pub fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let ints = p.primitive_integer();
    let mut roots = BTreeSet::new();
    if ints.is_empty() {
        return Vec::new();
    }
    // zero root
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.insert(Scalar::zero());
    }
    let a0 = &ints[low];
    let an = ints.last().expect("nonzero");
    let pp = Poly::new(ints.iter().map(|c| Scalar::from_integer(c.clone())).collect());
    for num in divisors(a0) {
        for den in divisors(an) {
            for s in [1, -1] {
                let r = Scalar::new(&num * s, den.clone());
                if pp.eval(&r).is_zero() {
                    roots.insert(r);
                }
            }
        }
    }
    roots.into_iter().collect()
}

fn factor_squarefree(p: &Poly) -> Vec<Poly> {
    let mut rest = p.monic();
    let mut out = Vec::new();
    for r in rational_roots(&rest) {
        let f = Poly::linear(r);
        rest = rest.div_rem(&f).0;
        out.push(f);
    }
    while let Some(f) = kronecker_factor(&rest) {
        rest = rest.div_rem(&f).0.monic();
        out.push(f);
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

/// Lagrange interpolation through `(x_i, y_i)`.
fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Poly::one();
        let mut denom = Scalar::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly::linear(xj.clone()));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// A monic factor of degree in `2..=deg/2`, if one exists. Assumes `p` has no
/// rational roots.
fn kronecker_factor(p: &Poly) -> Option<Poly> {
    let n = p.degree()?;
    if n < 4 {
        return None;
    }
    let ints = p.primitive_integer();
    let pz = Poly::new(ints.iter().map(|c| Scalar::from_integer(c.clone())).collect());
    for d in 2..=n / 2 {
        // evaluation points 0, 1, -1, 2, -2, ...
        let xs: Vec<Scalar> = (0..=d as i64)
            .map(|k| {
                let v = if k % 2 == 1 { k / 2 + 1 } else { -(k / 2) };
                Scalar::from_integer(v.into())
            })
            .collect();
        let vals: Vec<BigInt> = xs.iter().map(|x| pz.eval(x).to_integer()).collect();
        if vals.iter().any(Zero::is_zero) {
            continue;
        }
        let divs: Vec<Vec<BigInt>> = vals.iter().map(divisors).collect();
        let mut choice = vec![0usize; d + 1];
        loop {
            // sign of the first value fixed to +1, others ±
            let sign_combos = 1u32 << d;
            for signs in 0..sign_combos {
                let ys: Vec<Scalar> = (0..=d)
                    .map(|k| {
                        let mut v = divs[k][choice[k]].clone();
                        if k > 0 && (signs >> (k - 1)) & 1 == 1 {
                            v = -v;
                        }
                        Scalar::from_integer(v)
                    })
                    .collect();
                let cand = interpolate(&xs, &ys);
                if cand.degree() != Some(d) || !cand.coeffs().iter().all(|c| c.is_integer()) {
                    continue;
                }
                let (qt, r) = pz.div_rem(&cand);
                if r.is_zero() && qt.degree().unwrap_or(0) > 0 {
                    return Some(cand.monic());
                }
            }
            // next divisor choice
            let mut k = 0;
            loop {
                if k > d {
                    break;
                }
                choice[k] += 1;
                if choice[k] < divs[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k > d {
                break;
            }
        }
    }
    None
}

/// Minimal polynomial of a square matrix (monic), from the first linear
/// dependency among `I, A, A², …`.
pub fn minimal_polynomial(a: &Mat) -> Result<Poly> {
    let n = a.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Mat::identity(n).entries().to_vec()];
    let mut span = Subspace::zero(n * n);
    span.insert(powers[0].clone())?;
    let mut cur = Mat::identity(n);
    loop {
        cur = cur.mul(a)?;
        let v = cur.entries().to_vec();
        if span.contains(&v) {
            let basis = Mat::from_cols(n * n, &powers)?;
            let c = basis
                .solve(&v)?
                .expect("vector in span has a solution");
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Ok(Poly::new(coeffs));
        }
        span.insert(v.clone())?;
        powers.push(v);
    }
}

/// Small integer coefficients of a polynomial, for display.
pub fn display(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        let coef = if c.is_one() && i > 0 {
            String::new()
        } else if c.to_integer().to_i64() == Some(-1) && c.is_integer() && i > 0 {
            "-".into()
        } else {
            c.to_string()
        };
        terms.push(format!("{coef}{mono}"));
    }
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn gcd_and_bezout() {
        let a = Poly::from_i64(&[-1, 0, 1]); // x²-1
        let b = Poly::from_i64(&[-1, 1]); // x-1
        assert_eq!(a.gcd(&b), b);
        let c = Poly::from_i64(&[1, 0, 1]); // x²+1
        let (g, s, t) = a.ext_gcd(&c);
        assert_eq!(g, Poly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&c)), Poly::one());
    }

    #[test]
    fn factor_mixed() {
        // (x-1)²(x+2)(x²+1)(x²-2)
        let p = Poly::from_i64(&[-1, 1])
            .pow(2)
            .mul(&Poly::from_i64(&[2, 1]))
            .mul(&Poly::from_i64(&[1, 0, 1]))
            .mul(&Poly::from_i64(&[-2, 0, 1]));
        let f = p.factor();
        assert_eq!(
            f,
            vec![
                (Poly::from_i64(&[-1, 1]), 2),
                (Poly::from_i64(&[2, 1]), 1),
                (Poly::from_i64(&[-2, 0, 1]), 1),
                (Poly::from_i64(&[1, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn quartic_splitting_into_quadratics() {
        // (x²+1)(x²+x+3) has no rational roots
        let p = Poly::from_i64(&[1, 0, 1]).mul(&Poly::from_i64(&[3, 1, 1]));
        let f = p.factor();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, m)| g.degree() == Some(2) && *m == 1));
        // x⁴+1 is irreducible over ℚ
        assert_eq!(Poly::from_i64(&[1, 0, 0, 0, 1]).factor().len(), 1);
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let a = Mat::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        let m = minimal_polynomial(&a).unwrap();
        assert_eq!(m, Poly::from_i64(&[4, -4, 1]));
        assert!(m.eval_mat(&a).unwrap().is_zero());
        assert_eq!(rational_roots(&m), vec![q(2)]);
    }
}
