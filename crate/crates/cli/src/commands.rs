use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symsym_core::catalog::{self, Params};
use symsym_core::rootsys::{
    admissible_nodes, aut_phi_orbits, build_simple_tss, chevalley_algebra, check_rank,
    highest_root, rank_cap_from_env, roots_from_cartan, AdmissibleSystem, CartanMatrix,
    CartanType,
};
use symsym_core::{decompose, q, Error, Inertia, Scalar, SymmetricTriple, TripleFingerprint, ValidationReport};
use thiserror::Error as ThisError;

use crate::format::{parse_rational, serialize_triple, ParseError, TripleFile};
use crate::report::{matrix, Fields, Format, Report, Status, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MATH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "symsym", version, about = "Exact computations with symplectic symmetric triples")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a triple.
    Check(SourceArgs),
    /// Split a triple into a flat factor and indecomposable factors.
    Decompose {
        #[command(flatten)]
        source: SourceArgs,
        /// Re-present the input by a random change of basis drawn from
        /// this seed before decomposing.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Admissible nodes of a root system, or the simple triple of one node.
    Simple(SimpleArgs),
    /// Sweep the catalogue, or build and check one entry.
    Catalog {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// Write the entry as a triple file.
        #[arg(long, requires = "family")]
        out: Option<PathBuf>,
    },
    /// Print the isomorphism invariants of a triple.
    Invariants(SourceArgs),
}

/// A triple file, or a catalogue entry.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Triple file to read.
    #[arg(required_unless_present = "family")]
    pub path: Option<PathBuf>,
    /// Catalogue family to build instead of reading a file.
    #[arg(long, conflicts_with = "path")]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
}

fn scalar_arg(s: &str) -> Result<Scalar, String> {
    parse_rational(s)
}

#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub eps: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub epsp: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub x: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub a: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub b: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub u: Option<Scalar>,
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    pub eta: Option<Scalar>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Params {
        let mut p = Params::new();
        for (name, v) in [
            ("eps", &self.eps),
            ("epsp", &self.epsp),
            ("x", &self.x),
            ("a", &self.a),
            ("b", &self.b),
            ("u", &self.u),
            ("eta", &self.eta),
        ] {
            if let Some(v) = v {
                p.set(name, v.clone());
            }
        }
        p
    }
}

#[derive(Debug, Args)]
pub struct SimpleArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub rank: usize,
    /// 1-based node of the Dynkin diagram.
    #[arg(long)]
    pub node: Option<usize>,
    /// Scale of the symplectic form (nonzero).
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true, requires = "node")]
    pub lambda: Option<Scalar>,
    /// Write the triple as a triple file.
    #[arg(long, requires = "node")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// Input errors exit with 2, mathematical failures with 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } => EXIT_INPUT,
            CliError::Core(e) => match e {
                Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. }
                | Error::NotAntisymmetric { .. }
                | Error::UnknownType(_)
                | Error::NotFiniteType(_)
                | Error::RankTooLarge { .. }
                | Error::ZeroLambda
                | Error::UnknownFamily(_)
                | Error::InvalidParameters { .. } => EXIT_INPUT,
                _ => EXIT_MATH,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// The finished command: report plus exit code.
pub struct Outcome {
    pub report: Report,
    pub code: u8,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        let code = match report.status {
            Status::Pass => EXIT_OK,
            Status::Fail => EXIT_MATH,
        };
        Outcome { report, code }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let report = match &cli.command {
        Command::Check(src) => cmd_check(src)?,
        Command::Decompose { source, seed } => cmd_decompose(source, *seed)?,
        Command::Simple(args) => cmd_simple(args)?,
        Command::Catalog {
            family,
            params,
            out,
        } => cmd_catalog(family.as_deref(), &params.to_params(), out.as_deref())?,
        Command::Invariants(src) => cmd_invariants(src)?,
    };
    Ok(report.into())
}

// ---------------------------------------------------------------------------

fn read_triple(path: &Path) -> CliResult<SymmetricTriple> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    let file = TripleFile::parse(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })?;
    Ok(file.build()?)
}

fn build_entry(id: &str, params: &Params) -> CliResult<SymmetricTriple> {
    Ok(catalog::build(id, params)?)
}

fn load(src: &SourceArgs) -> CliResult<(String, SymmetricTriple)> {
    match (&src.path, &src.family) {
        (Some(p), _) => Ok((p.display().to_string(), read_triple(p)?)),
        (None, Some(id)) => {
            let params = src.params.to_params();
            let t = build_entry(id, &params)?;
            let shown = if params.iter().next().is_some() {
                format!("{id}({params})")
            } else {
                id.clone()
            };
            Ok((shown, t))
        }
        (None, None) => Err(CliError::Core(Error::Precondition(
            "no triple file or --family given".into(),
        ))),
    }
}

fn checks_value(r: &ValidationReport) -> Value {
    let mut f = Fields::new();
    for c in r.checks() {
        let v = match (&c.witness, c.passed) {
            (_, true) => "pass".to_string(),
            (Some(w), false) => format!("fail: {w}"),
            (None, false) => "fail".to_string(),
        };
        f.push(&c.name, v);
    }
    Value::Map(f)
}

fn fingerprint_value(f: &TripleFingerprint) -> Value {
    let inertia = |i: &Inertia| format!("(+{}, -{}, 0x{})", i.pos, i.neg, i.zero);
    Value::Map(
        Fields::new()
            .with("dim G", f.dim_g)
            .with("dim K", f.dim_k)
            .with("dim P", f.dim_p)
            .with("derived series", f.derived_series.clone())
            .with("lower central series", f.lower_central_series.clone())
            .with("dim Z(G)", f.dim_center_g)
            .with("dim Z(K)", f.dim_center_k)
            .with("Killing signature", inertia(&f.killing))
            .with("Killing signature on K", inertia(&f.killing_on_k))
            .with("exactness", f.exact)
            .with("dim P_R", f.dim_p_radical)
            .with("ad(K)|P nilpotent", f.ad_k_nilpotent_on_p),
    )
}

fn dims(t: &SymmetricTriple) -> Fields {
    Fields::new()
        .with("dim G", t.dim())
        .with("dim K", t.dim_k())
        .with("dim P", t.dim_p())
}

/// Report for an input that fails validation.
fn invalid(command: &str, source: &str, r: &ValidationReport) -> Report {
    let mut f = Fields::new().with("source", source);
    f.push("validation", "fail");
    f.push("checks", checks_value(r));
    f.push("message", "input is not a valid symplectic symmetric triple");
    Report::new(command, Status::Fail, f)
}

pub fn cmd_check(src: &SourceArgs) -> CliResult<Report> {
    let (source, t) = load(src)?;
    let r = t.validate();
    let mut f = Fields::new().with("source", source);
    for (k, v) in dims(&t).iter() {
        f.push(k, v.clone());
    }
    f.push("checks", checks_value(&r));
    Ok(Report::new("check", Status::from_bool(r.passed()), f))
}

pub fn cmd_invariants(src: &SourceArgs) -> CliResult<Report> {
    let (source, t) = load(src)?;
    let r = t.validate();
    if !r.passed() {
        return Ok(invalid("invariants", &source, &r));
    }
    let fp = t.fingerprint();
    let mut f = Fields::new().with("source", source);
    f.push("fingerprint", fingerprint_value(&fp));
    if let Some(xi) = t.exactness() {
        f.push("exactness witness", xi.iter().map(Value::from).collect::<Vec<_>>());
    }
    Ok(Report::new("invariants", Status::Pass, f))
}

pub fn cmd_decompose(src: &SourceArgs, seed: Option<u64>) -> CliResult<Report> {
    let (source, mut t) = load(src)?;
    let r = t.validate();
    if !r.passed() {
        return Ok(invalid("decompose", &source, &r));
    }
    let mut f = Fields::new().with("source", source);
    if let Some(s) = seed {
        let (moved, _) = t.scramble(&mut ChaCha8Rng::seed_from_u64(s))?;
        t = moved;
        f.push("seed", s as i64);
    }
    let d = decompose(&t)?;
    f.push("dim P", t.dim_p());
    f.push("flat dim", d.flat_dim());
    f.push("factor count", d.factors.len());
    let factors: Vec<Value> = d
        .factors
        .iter()
        .map(|x| {
            Value::Map(
                dims(x)
                    .with("basis", x.alg().labels().to_vec())
                    .with("fingerprint", fingerprint_value(&x.fingerprint())),
            )
        })
        .collect();
    f.push("factors", factors);
    f.push("reassembles", d.reassembles(&t)?);
    f.push("assembly", matrix(&d.assembly));
    Ok(Report::new("decompose", Status::Pass, f))
}

fn cartan(ty: &str, rank: usize) -> CliResult<CartanMatrix> {
    let ty = CartanType::parse(ty)?;
    check_rank(rank, rank_cap_from_env())?;
    Ok(CartanMatrix::of_type(ty, rank)?)
}

pub fn cmd_simple(args: &SimpleArgs) -> CliResult<Report> {
    let c = cartan(&args.ty, args.rank)?;
    let roots = roots_from_cartan(&c);
    let nodes = admissible_nodes(&roots)?;
    let mut f = Fields::new()
        .with("type", c.name())
        .with("rank", c.rank())
        .with("dim G", c.rank() + 2 * roots.num_positive())
        .with("highest root", highest_root(&roots)?)
        .with("admissible nodes", nodes.clone());
    let Some(node) = args.node else {
        let orbits: Vec<Value> = aut_phi_orbits(&roots)?.into_iter().map(Value::from).collect();
        f.push("orbits", orbits);
        return Ok(Report::new("simple", Status::Pass, f));
    };
    f.push("node", node);
    if node == 0 || node > c.rank() {
        return Err(Error::IndexOutOfRange {
            index: node,
            dim: c.rank(),
        }
        .into());
    }
    if !nodes.contains(&node) {
        f.push("message", format!("node {node} is not admissible for {}", c.name()));
        return Ok(Report::new("simple", Status::Fail, f));
    }
    let lambda = args.lambda.clone().unwrap_or_else(|| q(1));
    f.push("lambda", &lambda);
    let adm = AdmissibleSystem::new(&roots, node)?;
    let ca = chevalley_algebra(&c)?;
    let t = build_simple_tss(&ca, &adm, &lambda)?;
    let r = t.validate();
    f.push("dim K", t.dim_k());
    f.push("dim P", t.dim_p());
    f.push("h", adm.h().iter().map(Value::from).collect::<Vec<_>>());
    f.push("dim Z(K)", t.center_of_k().dim());
    f.push("checks", checks_value(&r));
    f.push("exact", t.exactness().is_some());
    if let Some(path) = &args.out {
        write_triple(path, &t)?;
        f.push("written", path.display().to_string());
    }
    Ok(Report::new("simple", Status::from_bool(r.passed()), f))
}

fn write_triple(path: &Path, t: &SymmetricTriple) -> CliResult<()> {
    std::fs::write(path, serialize_triple(t)).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn cmd_catalog(family: Option<&str>, params: &Params, out: Option<&Path>) -> CliResult<Report> {
    let Some(id) = family else {
        if params.iter().next().is_some() {
            return Err(Error::Precondition("parameters need --family".into()).into());
        }
        return catalog_sweep();
    };
    let (fam, resolved) = if id == catalog::FIRST_SERIES {
        catalog::first_series_member(params)?
    } else {
        let fam = catalog::family(id)?;
        (fam, fam.resolve(params)?)
    };
    let entry = catalog::verify_entry(fam.id, &resolved)?;
    let mut f = Fields::new()
        .with("family", fam.id)
        .with("params", resolved.to_string())
        .with("kind", format!("{:?}", fam.kind))
        .with("description", fam.description)
        .with("failures", entry.failures.clone())
        .with("notes", entry.notes.clone());
    if let Some(fp) = &entry.fingerprint {
        f.push("fingerprint", fingerprint_value(fp));
    }
    if let Some(path) = out {
        write_triple(path, &fam.build(&resolved)?)?;
        f.push("written", path.display().to_string());
    }
    Ok(Report::new("catalog", Status::from_bool(entry.passed), f))
}

fn catalog_sweep() -> CliResult<Report> {
    let report = catalog::verify_all(usize::MAX);
    let e = catalog::enumerate_catalog()?;
    let entries: Vec<String> = report
        .entries
        .iter()
        .map(|x| {
            let status = if x.passed { "pass" } else { "FAIL" };
            if x.params.is_empty() {
                format!("{status} {}", x.family)
            } else {
                format!("{status} {}({})", x.family, x.params)
            }
        })
        .collect();
    let failures: Vec<Value> = report
        .failures()
        .iter()
        .map(|x| {
            Value::Map(
                Fields::new()
                    .with("family", x.family.as_str())
                    .with("params", x.params.as_str())
                    .with("failures", x.failures.clone()),
            )
        })
        .collect();
    let counts = Fields::new()
        .with("dim-2 entries", e.dim2_entries)
        .with("dim-4 simple entries", e.dim4_simple_entries)
        .with("dim-4 solvable families", e.dim4_solvable_families)
        .with("dim-4 solvable pairs", e.dim4_solvable_pairs)
        .with("distinct pair fingerprints", e.dim4_solvable_pair_fingerprints)
        .with("published pair count", e.published_pair_count);
    let f = Fields::new()
        .with("entries checked", report.entries.len())
        .with("entries passed", report.entries.len() - failures.len())
        .with("counts", counts)
        .with("failures", failures)
        .with("entries", entries);
    Ok(Report::new("catalog", Status::from_bool(report.passed()), f))
}
