//! The `TripleFile` text format.
//!
//! Line oriented, UTF-8, `#` starts a comment. Statements:
//!
//! ```text
//! basis U e f              # labels, exactly once
//! [U, f] = e               # bracket entries; unlisted brackets are zero
//! [e, f] = U
//! k U                      # sigma given as a K/P partition of the labels
//! p e f
//! omega e f = 1            # Ω on the P basis
//! ```
//!
//! Instead of `k`/`p`, sigma may be given as a full matrix, one
//! `sigma <row>` line per basis element. `omega` indices then refer to the
//! echelon basis of `P` (`@0`, `@1`, ...). Everywhere a label is expected,
//! `@i` names the `i`-th element (0-based) of the relevant basis.
//!
//! A bracket value is `0` or a sum of terms `c*label`, `c label` or `label`,
//! e.g. `2*e - 1/2 f + U`. Coefficients are exact rationals written `p/q` or
//! as integers.
//! `[y, x]` is filled in by antisymmetry; a second entry for the same pair
//! must agree with the first. Statements may come in any order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{One, Signed, Zero};
use symsym_core::{LieAlgebra, Mat, Scalar, SymmetricTriple};
use thiserror::Error;

/// A parse failure, with the 1-based line number and the offending field.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {field}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub field: String,
    pub message: String,
}

fn perr(line: usize, field: &str, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaSpec {
    /// Indices of the basis elements spanning `P`; the rest span `K`.
    Adapted { p: Vec<usize> },
    Matrix(Mat),
}

/// A parsed triple definition, not yet validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleFile {
    pub labels: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<Scalar>)>,
    pub sigma: SigmaSpec,
    /// `(a, b, value)` over the `P` basis, upper triangle.
    pub omega: Vec<(usize, usize, Scalar)>,
}

pub fn is_valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse_rational(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    let valid = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '-' || c == '+');
    if !valid {
        return Err(format!("'{s}' is not a rational number"));
    }
    s.parse::<Scalar>()
        .map_err(|e| format!("'{s}' is not a rational number ({e})"))
}

/// Resolves a label or `@i` reference against `names`.
fn resolve(token: &str, names: &[String], line: usize, field: &str) -> Result<usize, ParseError> {
    let token = token.trim();
    if let Some(idx) = token.strip_prefix('@') {
        let i: usize = idx
            .parse()
            .map_err(|_| perr(line, field, format!("bad index reference '{token}'")))?;
        if i >= names.len() {
            return Err(perr(
                line,
                field,
                format!("index {i} out of range (basis has {})", names.len()),
            ));
        }
        return Ok(i);
    }
    names
        .iter()
        .position(|n| n == token)
        .ok_or_else(|| perr(line, field, format!("unknown label '{token}'")))
}

/// Parses `2*e - 1/2*f + U`, or `0`, into a coefficient vector.
fn parse_combination(
    text: &str,
    labels: &[String],
    line: usize,
) -> Result<Vec<Scalar>, ParseError> {
    let field = "bracket value";
    let mut v = vec![Scalar::zero(); labels.len()];
    let text = text.trim();
    if text == "0" {
        return Ok(v);
    }
    if text.is_empty() {
        return Err(perr(line, field, "missing right-hand side"));
    }
    // split into signed terms at top-level '+' / '-', keeping '/' inside
    // coefficients intact
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            if !cur.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(perr(line, field, format!("dangling sign in '{text}'")));
    }
    terms.push((negative, cur));
    for (neg, body) in terms {
        let body = body.trim();
        let (coef, target) = match body.split_once('*') {
            Some((c, t)) => (
                parse_rational(c).map_err(|m| perr(line, field, m))?,
                t.trim(),
            ),
            None => match body.split_once(char::is_whitespace) {
                Some((c, t)) => (
                    parse_rational(c).map_err(|m| perr(line, field, m))?,
                    t.trim(),
                ),
                None => (Scalar::one(), body),
            },
        };
        let i = resolve(target, labels, line, field)?;
        if neg {
            v[i] -= coef;
        } else {
            v[i] += coef;
        }
    }
    Ok(v)
}

fn parse_bracket_lhs<'a>(lhs: &'a str, line: usize) -> Result<(&'a str, &'a str), ParseError> {
    let inner = lhs
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| perr(line, "bracket", "expected '[x, y] = ...'"))?;
    inner
        .split_once(',')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| perr(line, "bracket", "expected two comma-separated elements"))
}

impl TripleFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut labels: Option<Vec<String>> = None;
        let mut raw_brackets: Vec<(usize, String, String, String)> = Vec::new();
        let mut k_list: Option<(usize, Vec<String>)> = None;
        let mut p_list: Option<(usize, Vec<String>)> = None;
        let mut sigma_rows: Vec<(usize, Vec<Scalar>)> = Vec::new();
        let mut raw_omega: Vec<(usize, String, String, String)> = Vec::new();

        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if content.starts_with('[') {
                let (lhs, rhs) = content
                    .split_once('=')
                    .ok_or_else(|| perr(line, "bracket", "missing '='"))?;
                let (a, b) = parse_bracket_lhs(lhs, line)?;
                raw_brackets.push((line, a.into(), b.into(), rhs.trim().into()));
                continue;
            }
            let (keyword, rest) = content
                .split_once(char::is_whitespace)
                .map(|(k, r)| (k, r.trim()))
                .unwrap_or((content, ""));
            let words = || rest.split_whitespace().map(String::from).collect::<Vec<_>>();
            match keyword {
                "basis" => {
                    if labels.is_some() {
                        return Err(perr(line, "basis", "basis given twice"));
                    }
                    let ls = words();
                    for (i, l) in ls.iter().enumerate() {
                        if !is_valid_label(l) {
                            return Err(perr(line, "basis", format!("invalid label '{l}'")));
                        }
                        if ls[..i].contains(l) {
                            return Err(perr(line, "basis", format!("duplicate label '{l}'")));
                        }
                    }
                    labels = Some(ls);
                }
                "k" | "p" => {
                    let slot = if keyword == "k" { &mut k_list } else { &mut p_list };
                    if slot.is_some() {
                        return Err(perr(line, keyword, format!("'{keyword}' given twice")));
                    }
                    *slot = Some((line, words()));
                }
                "sigma" => {
                    let row = rest
                        .split_whitespace()
                        .map(parse_rational)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|m| perr(line, "sigma", m))?;
                    sigma_rows.push((line, row));
                }
                "omega" => {
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| perr(line, "omega", "expected 'omega a b = value'"))?;
                    let ab: Vec<&str> = lhs.split_whitespace().collect();
                    if ab.len() != 2 {
                        return Err(perr(line, "omega", "expected two P elements"));
                    }
                    raw_omega.push((line, ab[0].into(), ab[1].into(), rhs.trim().into()));
                }
                other => {
                    return Err(perr(line, "statement", format!("unknown keyword '{other}'")));
                }
            }
        }

        let labels = labels.ok_or_else(|| perr(0, "basis", "no 'basis' line"))?;
        let n = labels.len();

        let mut pairs: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (line, a, b, rhs) in &raw_brackets {
            let i = resolve(a, &labels, *line, "bracket")?;
            let j = resolve(b, &labels, *line, "bracket")?;
            let mut v = parse_combination(rhs, &labels, *line)?;
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(perr(*line, "bracket", "[x, x] must be zero"));
                }
                continue;
            }
            let key = if i < j {
                (i, j)
            } else {
                v = v.iter().map(|x| -x).collect();
                (j, i)
            };
            match pairs.get(&key) {
                Some(old) if *old != v => {
                    return Err(perr(
                        *line,
                        "bracket",
                        format!(
                            "[{}, {}] conflicts with an earlier entry",
                            labels[key.0], labels[key.1]
                        ),
                    ))
                }
                _ => {
                    pairs.insert(key, v);
                }
            }
        }
        let brackets = pairs
            .into_iter()
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|((i, j), v)| (i, j, v))
            .collect();

        let adapted = k_list.is_some() || p_list.is_some();
        if adapted && !sigma_rows.is_empty() {
            return Err(perr(
                sigma_rows[0].0,
                "sigma",
                "give either a k/p partition or sigma rows, not both",
            ));
        }
        let (sigma, p_names) = if adapted {
            let mut in_p = vec![None::<bool>; n];
            for (list, is_p) in [(&k_list, false), (&p_list, true)] {
                if let Some((line, names)) = list {
                    let field = if is_p { "p" } else { "k" };
                    for name in names {
                        let i = resolve(name, &labels, *line, field)?;
                        if in_p[i].is_some() {
                            return Err(perr(
                                *line,
                                field,
                                format!("'{}' listed twice", labels[i]),
                            ));
                        }
                        in_p[i] = Some(is_p);
                    }
                }
            }
            // an omitted list is the complement of the given one
            let default_p = k_list.is_some() && p_list.is_none();
            let missing = in_p.iter().position(Option::is_none);
            if let (Some(i), true) = (missing, k_list.is_some() && p_list.is_some()) {
                let line = p_list.as_ref().map_or(0, |(l, _)| *l);
                return Err(perr(line, "p", format!("'{}' is in neither k nor p", labels[i])));
            }
            let p: Vec<usize> = (0..n)
                .filter(|&i| in_p[i].unwrap_or(default_p))
                .collect();
            let names: Vec<String> = p.iter().map(|&i| labels[i].clone()).collect();
            (SigmaSpec::Adapted { p }, Some(names))
        } else if !sigma_rows.is_empty() {
            if sigma_rows.len() != n {
                return Err(perr(
                    sigma_rows[sigma_rows.len() - 1].0,
                    "sigma",
                    format!("{} rows for a basis of {n}", sigma_rows.len()),
                ));
            }
            for (line, row) in &sigma_rows {
                if row.len() != n {
                    return Err(perr(*line, "sigma", format!("row has {} entries, expected {n}", row.len())));
                }
            }
            let m = Mat::from_rows(sigma_rows.into_iter().map(|(_, r)| r).collect())
                .map_err(|e| perr(0, "sigma", e.to_string()))?;
            (SigmaSpec::Matrix(m), None)
        } else {
            return Err(perr(0, "sigma", "no 'k'/'p' partition and no sigma rows"));
        };

        let mut omega: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (line, a, b, rhs) in &raw_omega {
            let refs = |tok: &str| -> Result<usize, ParseError> {
                match &p_names {
                    Some(names) => resolve(tok, names, *line, "omega"),
                    None if tok.starts_with('@') => {
                        // bound checked once P is known
                        tok[1..]
                            .parse()
                            .map_err(|_| perr(*line, "omega", format!("bad index reference '{tok}'")))
                    }
                    None => Err(perr(
                        *line,
                        "omega",
                        format!("with an explicit sigma, P elements are '@i', not '{tok}'"),
                    )),
                }
            };
            let (i, j) = (refs(a)?, refs(b)?);
            let mut v = parse_rational(rhs).map_err(|m| perr(*line, "omega", m))?;
            if i == j {
                if !v.is_zero() {
                    return Err(perr(*line, "omega", "omega(x, x) must be zero"));
                }
                continue;
            }
            let key = if i < j {
                (i, j)
            } else {
                v = -v;
                (j, i)
            };
            match omega.get(&key) {
                Some(old) if *old != v => {
                    return Err(perr(*line, "omega", "conflicts with an earlier entry"))
                }
                _ => {
                    omega.insert(key, v);
                }
            }
        }
        Ok(TripleFile {
            labels,
            brackets,
            sigma,
            omega: omega
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|((i, j), v)| (i, j, v))
                .collect(),
        })
    }

    /// Assembles the triple (shape checks only; axioms are checked by
    /// validation).
    pub fn build(&self) -> Result<SymmetricTriple, symsym_core::Error> {
        let alg = LieAlgebra::from_brackets(self.labels.clone(), self.brackets.clone())?;
        let n = self.labels.len();
        let dim_p = match &self.sigma {
            SigmaSpec::Adapted { p } => p.len(),
            SigmaSpec::Matrix(m) => {
                let minus = m.add(&Mat::identity(n))?;
                n - minus.rank()
            }
        };
        let mut omega = Mat::zeros(dim_p, dim_p);
        for (i, j, v) in &self.omega {
            if *i >= dim_p || *j >= dim_p {
                return Err(symsym_core::Error::IndexOutOfRange {
                    index: (*i).max(*j),
                    dim: dim_p,
                });
            }
            omega[(*i, *j)] = v.clone();
            omega[(*j, *i)] = -v;
        }
        match &self.sigma {
            SigmaSpec::Adapted { p } => SymmetricTriple::from_adapted(alg, p, omega),
            SigmaSpec::Matrix(m) => SymmetricTriple::new(alg, m.clone(), omega),
        }
    }

    /// Canonical description of a triple. Labels that are not valid
    /// identifiers, or repeat, are replaced by `b0, b1, ...`.
    pub fn from_triple(t: &SymmetricTriple) -> Self {
        let n = t.dim();
        let given = t.alg().labels();
        let usable = given.iter().all(|l| is_valid_label(l))
            && (0..n).all(|i| !given[..i].contains(&given[i]));
        let labels: Vec<String> = if usable {
            given.to_vec()
        } else {
            (0..n).map(|i| format!("b{i}")).collect()
        };
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = t.alg().basis_bracket_dense(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    brackets.push((i, j, v));
                }
            }
        }
        let sigma = t.sigma();
        let diagonal = (0..n).all(|i| {
            (0..n).all(|j| {
                let x = &sigma[(i, j)];
                if i == j {
                    x.abs().is_one()
                } else {
                    x.is_zero()
                }
            })
        });
        let sigma = if diagonal {
            SigmaSpec::Adapted {
                p: (0..n).filter(|&i| sigma[(i, i)].is_negative()).collect(),
            }
        } else {
            SigmaSpec::Matrix(sigma.clone())
        };
        let w = t.omega();
        let d = w.rows();
        let mut omega = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if !w[(i, j)].is_zero() {
                    omega.push((i, j, w[(i, j)].clone()));
                }
            }
        }
        TripleFile {
            labels,
            brackets,
            sigma,
            omega,
        }
    }

    /// Canonical text: brackets in index order, adapted sigma when `σ` is
    /// diagonal, Ω upper triangle.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "basis {}", self.labels.join(" "));
        for (i, j, v) in &self.brackets {
            let _ = writeln!(
                s,
                "[{}, {}] = {}",
                self.labels[*i],
                self.labels[*j],
                combination(v, &self.labels)
            );
        }
        let p_names: Option<Vec<&str>> = match &self.sigma {
            SigmaSpec::Adapted { p } => {
                let k: Vec<&str> = (0..self.labels.len())
                    .filter(|i| !p.contains(i))
                    .map(|i| self.labels[i].as_str())
                    .collect();
                let pn: Vec<&str> = p.iter().map(|&i| self.labels[i].as_str()).collect();
                let _ = writeln!(s, "k {}", k.join(" ").trim_end());
                let _ = writeln!(s, "p {}", pn.join(" ").trim_end());
                Some(pn)
            }
            SigmaSpec::Matrix(m) => {
                for r in 0..m.rows() {
                    let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(s, "sigma {}", row.join(" "));
                }
                None
            }
        };
        for (i, j, v) in &self.omega {
            let name = |a: usize| match &p_names {
                Some(names) => names[a].to_string(),
                None => format!("@{a}"),
            };
            let _ = writeln!(s, "omega {} {} = {}", name(*i), name(*j), v);
        }
        // "k " / "p " with an empty list would carry trailing whitespace
        s.lines()
            .map(str::trim_end)
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }
}

/// `2*e - 1/2*f + U`.
pub fn combination(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let term = if mag.is_one() {
            labels[i].clone()
        } else {
            format!("{mag}*{}", labels[i])
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn parse_triple(text: &str) -> Result<TripleFile, ParseError> {
    TripleFile::parse(text)
}

pub fn serialize_triple(t: &SymmetricTriple) -> String {
    TripleFile::from_triple(t).to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use symsym_core::catalog::{self, Params};
    use symsym_core::q;

    const T2: &str = "\
# the plane with eps = 1
basis U e f
[U, f] = e
[e, f] = U
k U
p e f
omega e f = 1
";

    #[test]
    fn parses_and_builds() {
        let f = TripleFile::parse(T2).unwrap();
        assert_eq!(f.labels, ["U", "e", "f"]);
        let t = f.build().unwrap();
        assert!(t.validate().passed());
        let want = catalog::build("t2_eps", &Params::new().with("eps", q(1))).unwrap();
        assert_eq!(t.fingerprint(), want.fingerprint());
    }

    #[test]
    fn antisymmetry_completed_and_conflicts_caught() {
        let f = TripleFile::parse("basis a b\n[b, a] = -a\nk\np a b\n").unwrap();
        assert_eq!(f.brackets, vec![(0, 1, vec![q(1), q(0)])]);
        let err = TripleFile::parse("basis a b\n[a, b] = a\n[b, a] = a\np a b\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.field, "bracket");
    }

    #[test]
    fn combination_forms() {
        let l: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let v = parse_combination("2*x - 1/2 y + @2 - z", &l, 1).unwrap();
        assert_eq!(v, vec![q(2), symsym_core::frac(-1, 2), q(0)]);
        assert_eq!(combination(&v, &l), "2*x - 1/2*y");
        assert_eq!(combination(&[q(-1), q(0), q(3)], &l), "-x + 3*z");
        assert!(parse_combination("2*", &l, 1).is_err());
        assert!(parse_combination("x +", &l, 1).is_err());
    }

    #[test]
    fn bad_rational_reports_line() {
        let err = TripleFile::parse("basis a b\np a b\nomega a b = 1/0\n").unwrap_err();
        assert_eq!((err.line, err.field.as_str()), (3, "omega"));
        assert!(TripleFile::parse("basis a b\np a b\nomega a b = 0.5\n").is_err());
    }

    fn same_table(a: &LieAlgebra, b: &LieAlgebra) -> bool {
        a.dim() == b.dim()
            && (0..a.dim()).all(|i| {
                (0..a.dim()).all(|j| a.basis_bracket_dense(i, j) == b.basis_bracket_dense(i, j))
            })
    }

    #[test]
    fn canonical_round_trip() {
        for f in catalog::families() {
            let p = &f.grid(1)[0];
            let t = f.build(p).unwrap();
            let text = serialize_triple(&t);
            let back = parse_triple(&text).unwrap().build().unwrap();
            assert!(same_table(back.alg(), t.alg()), "{}", f.id);
            assert_eq!(back.sigma(), t.sigma());
            assert_eq!(back.omega(), t.omega());
            assert_eq!(serialize_triple(&back), text);
        }
    }

    #[test]
    fn matrix_sigma_round_trip() {
        let t = catalog::build("t2_eps", &Params::new().with("eps", q(-1))).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        let (s, _) = t.scramble(&mut rng).unwrap();
        let text = serialize_triple(&s);
        assert!(text.contains("sigma "));
        let back = parse_triple(&text).unwrap().build().unwrap();
        assert_eq!(back.sigma(), s.sigma());
        assert_eq!(back.omega(), s.omega());
        assert!(same_table(back.alg(), s.alg()));
    }
}
