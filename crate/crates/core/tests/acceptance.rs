//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any
//! criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symsym_core::catalog::{self, families, nilpotent_k_check, verify_all, Kind, Params};
use symsym_core::decompose::decompose;
use symsym_core::rootsys::{
    admissible_nodes, all_types, build_simple_tss, center_of_k_for_node, chevalley_algebra,
    expected_positive_roots, p_plus, roots_from_cartan, AdmissibleSystem, CartanMatrix,
    CartanType,
};
use symsym_core::symtriple::{coboundary, direct_sum_triples, radical_part};
use symsym_core::{q, Result, SymmetricTriple, TripleFingerprint};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok: true,
        detail: detail.into(),
    })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok: false,
        detail: detail.into(),
    })
}

fn expected_nodes(ty: CartanType, n: usize) -> Vec<usize> {
    match ty {
        CartanType::A => (1..=n).collect(),
        CartanType::B => vec![1],
        CartanType::C => vec![n],
        CartanType::D => vec![1, n - 1, n],
        CartanType::E if n == 6 => vec![1, 6],
        CartanType::E if n == 7 => vec![7],
        _ => vec![],
    }
}

fn admissible_atlas() -> Result<Outcome> {
    for (ty, n) in all_types(8) {
        let r = roots_from_cartan(&CartanMatrix::of_type(ty, n)?);
        let got = admissible_nodes(&r)?;
        if got != expected_nodes(ty, n) {
            return fail(format!("{ty:?}{n}: got {got:?}"));
        }
    }
    pass(format!("{} types", all_types(8).len()))
}

fn simple_types() -> Vec<(CartanType, usize)> {
    let mut v = Vec::new();
    for n in 1..=4 {
        v.push((CartanType::A, n));
    }
    for n in 2..=4 {
        v.push((CartanType::B, n));
    }
    for n in 2..=4 {
        v.push((CartanType::C, n));
    }
    v.push((CartanType::D, 4));
    v.push((CartanType::E, 6));
    v
}

/// Builds every admissible triple of the listed types; shared with the
/// trivial-center criterion.
fn simple_triples() -> Result<Vec<(String, SymmetricTriple)>> {
    let mut out = Vec::new();
    for (ty, n) in simple_types() {
        let ca = chevalley_algebra(&CartanMatrix::of_type(ty, n)?)?;
        for node in admissible_nodes(ca.roots())? {
            let adm = AdmissibleSystem::new(ca.roots(), node)?;
            out.push((format!("{ty:?}{n}/{node}"), build_simple_tss(&ca, &adm, &q(1))?));
        }
    }
    Ok(out)
}

fn simple_construction() -> Result<Outcome> {
    let mut count = 0;
    for (ty, n) in simple_types() {
        let ca = chevalley_algebra(&CartanMatrix::of_type(ty, n)?)?;
        let adm_nodes = admissible_nodes(ca.roots())?;
        for node in 1..=n {
            if !adm_nodes.contains(&node) {
                if !center_of_k_for_node(&ca, node)?.is_zero() {
                    return fail(format!("{ty:?}{n} node {node}: Z(K) != 0"));
                }
                continue;
            }
            let adm = AdmissibleSystem::new(ca.roots(), node)?;
            let t = build_simple_tss(&ca, &adm, &q(1))?;
            let tag = format!("{ty:?}{n} node {node}");
            let v = t.validate();
            if !v.passed() {
                return fail(format!("{tag}: {:?}", v.failures()));
            }
            if t.center_of_k().dim() != 1 {
                return fail(format!("{tag}: dim Z(K) = {}", t.center_of_k().dim()));
            }
            let Some(xi) = t.exactness() else {
                return fail(format!("{tag}: not exact"));
            };
            if coboundary(t.alg(), &xi) != t.extend_omega() {
                return fail(format!("{tag}: coboundary differs from the extended form"));
            }
            let pp = p_plus(&ca, node);
            if !t.alg().bracket_subspaces(&pp, &pp)?.is_zero() {
                return fail(format!("{tag}: [P+, P+] != 0"));
            }
            count += 1;
        }
    }
    pass(format!("{count} admissible triples"))
}

fn catalogue_sweep() -> Result<Outcome> {
    let report = verify_all(usize::MAX);
    if let Some(e) = report.failures().first() {
        return fail(format!("{} [{}]: {}", e.family, e.params, e.failures.join("; ")));
    }
    let mut solvable = 0;
    for f in families().iter().filter(|f| f.dim_p == 4 && matches!(f.kind, Kind::Solvable | Kind::Flat)) {
        for p in f.grid(usize::MAX) {
            let t = f.build(&p)?;
            if !nilpotent_k_check(&t)? {
                return fail(format!("{} [{p}]: nilpotent check", f.id));
            }
            solvable += 1;
        }
    }
    pass(format!("{} entries valid, {solvable} solvable dim-4 entries", report.entries.len()))
}

fn killing_signature() -> Result<Outcome> {
    let f = catalog::family("t4_5_eps_alpha_eta")?;
    for p in f.grid(usize::MAX) {
        let eps = p.get("eps").cloned().unwrap_or_else(|| q(1));
        let k = f.build(&p)?.fingerprint().killing;
        let ok = if eps == q(1) {
            k.pos >= 1 && k.neg == 0
        } else {
            k.neg >= 1 && k.pos == 0
        };
        if !ok {
            return fail(format!("[{p}]: Killing inertia {k:?}"));
        }
    }
    pass("nonzero part definite of sign eps")
}

fn counterexample() -> Result<Outcome> {
    let f = catalog::family("t4_3")?;
    let mut n = 0;
    for p in f.grid(usize::MAX) {
        let t = f.build(&p)?;
        if t.is_exact() || !t.alg().center().is_zero() {
            return fail(format!("[{p}]: exact or Z(G) != 0"));
        }
        if !t.heisenberg_extension()?.is_exact() {
            return fail(format!("[{p}]: Heisenberg extension not exact"));
        }
        n += 1;
    }
    pass(format!("{n} grid points"))
}

fn sorted(mut v: Vec<TripleFingerprint>) -> Vec<TripleFingerprint> {
    v.sort();
    v
}

fn decomposition_recovery() -> Result<Outcome> {
    let t2 = |e: i64| catalog::build("t2_eps", &Params::new().with("eps", q(e)));
    let flat = catalog::build("t2_0", &Params::new())?;
    let mut cases: Vec<(SymmetricTriple, Vec<TripleFingerprint>, usize)> = Vec::new();
    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let (ta, tb) = (t2(a)?, t2(b)?);
        let want = sorted(vec![ta.fingerprint(), tb.fingerprint()]);
        cases.push((direct_sum_triples(&ta, &tb)?, want, 0));
    }
    for e in [1, -1] {
        let ta = t2(e)?;
        let want = vec![ta.fingerprint()];
        cases.push((direct_sum_triples(&ta, &flat)?, want, 2));
    }
    let mut runs = 0;
    for (ci, (t, want, flat_dim)) in cases.iter().enumerate() {
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * ci as u64 + seed);
            let (s, _) = t.scramble(&mut rng)?;
            let d = decompose(&s)?;
            if d.flat_dim() != *flat_dim || d.factor_fingerprints() != *want {
                return fail(format!("case {ci} seed {seed}: flat {} factors {}", d.flat_dim(), d.factors.len()));
            }
            runs += 1;
        }
    }
    pass(format!("{runs} scrambled decompositions"))
}

fn degeneration() -> Result<Outcome> {
    let t2 = |e: i64| catalog::build("t2_eps", &Params::new().with("eps", q(e)));
    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let p = Params::new().with("eps", q(a)).with("epsp", q(b)).with("x", q(0));
        let d = decompose(&catalog::build(catalog::FIRST_SERIES, &p)?)?;
        let want = sorted(vec![t2(a)?.fingerprint(), t2(b)?.fingerprint()]);
        if d.factors.len() != 2 || d.factor_fingerprints() != want {
            return fail(format!("({a}, {b}): {} factors", d.factors.len()));
        }
    }
    pass("all four sign pairs split into t2_eps + t2_epsp")
}

fn literal_first_member_note() -> Result<String> {
    let mut parts = Vec::new();
    for id in ["t4_1_eps_x(1)", "t4_3_eps_x(1)"] {
        for e in [1, -1] {
            let p = Params::new().with("eps", q(e)).with("x", q(0));
            let d = decompose(&catalog::build(id, &p)?)?;
            parts.push(format!("{id} eps={e}: {} factor(s)", d.factors.len()));
        }
    }
    Ok(parts.join(", "))
}

fn radical_bound() -> Result<Outcome> {
    for id in ["cotangent_S2", "cotangent_H1", "cotangent_D"] {
        let f = catalog::family(id)?;
        for p in f.grid(usize::MAX) {
            let t = f.build(&p)?;
            let rp = radical_part(&t)?;
            if rp.p_r.dim() != 2 || t.dim_p() - 2 != 2 || !rp.isotropic {
                return fail(format!("{id} [{p}]: dim P_R = {}", rp.p_r.dim()));
            }
        }
    }
    pass("dim P_R = 2 = dim P - 2, isotropic")
}

fn exact_center() -> Result<Outcome> {
    let mut exact = 0;
    for f in families() {
        for p in f.grid(usize::MAX) {
            let t = f.build(&p)?;
            if t.is_exact() {
                exact += 1;
                if !t.alg().center().is_zero() {
                    return fail(format!("{} [{p}]: exact with Z(G) != 0", f.id));
                }
            }
        }
    }
    let simple = simple_triples()?;
    for (tag, t) in &simple {
        if !t.is_exact() || !t.alg().center().is_zero() {
            return fail(format!("{tag}: exactness or center"));
        }
    }
    pass(format!("{exact} exact catalogue entries, {} root-system triples", simple.len()))
}

fn chevalley_check() -> Result<Outcome> {
    let mut types = all_types(6);
    types.push((CartanType::E, 6));
    types.dedup();
    for (ty, n) in &types {
        let ca = chevalley_algebra(&CartanMatrix::of_type(*ty, *n)?)?;
        let count = ca.roots().num_positive();
        if count != expected_positive_roots(*ty, *n) {
            return fail(format!("{ty:?}{n}: {count} positive roots"));
        }
        let rep = ca.alg().jacobi_check();
        if !rep.passed || !rep.max_defect.is_zero() {
            return fail(format!("{ty:?}{n}: Jacobi defect {}", rep.max_defect));
        }
    }
    pass(format!("{} types", types.len()))
}

use num::Zero;

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, fn() -> Result<Outcome>)> = vec![
        ("admissible-node atlas", 1, admissible_atlas),
        ("simple-triple construction", 30, simple_construction),
        ("catalogue validity sweep", 10, catalogue_sweep),
        ("Killing signature of the fifth family", 5, killing_signature),
        ("non-exact counterexample and its extension", 5, counterexample),
        ("decomposition recovery", 5, decomposition_recovery),
        ("x = 0 degeneration of the first series", 5, degeneration),
        ("radical bound on cotangent triples", 5, radical_bound),
        ("exact triples have trivial center", 30, exact_center),
        ("Chevalley self-check", 60, chevalley_check),
    ];
    let mut all_ok = true;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(budget);
        let (ok, detail) = match out {
            Ok(o) => (o.ok && within, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all_ok &= ok;
        println!(
            "{} {:>2} {name}: {detail} ({:.2?}, budget {budget}s{})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed,
            if within { "" } else { ", over budget" }
        );
    }
    match literal_first_member_note() {
        Ok(s) => println!("INFO  7 literal first-series members at x = 0: {s}"),
        Err(e) => println!("INFO  7 literal first-series members at x = 0: error {e}"),
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
