use std::path::Path;
use std::process::{Command, Output};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use symsym_cli::serialize_triple;
use symsym_core::catalog::{self, Params};
use symsym_core::symtriple::direct_sum_triples;
use symsym_core::{q, SymmetricTriple};
use tempfile::TempDir;

fn symsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsym"))
        .args(args)
        .env_remove("SYMSYM_RANK_CAP")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn write_triple(dir: &TempDir, name: &str, t: &SymmetricTriple) -> String {
    write(dir, name, &serialize_triple(t))
}

fn t2(eps: i64) -> SymmetricTriple {
    catalog::build("t2_eps", &Params::new().with("eps", q(eps))).unwrap()
}

const T2_PLUS: &str = "\
# eps = +1
basis U e f
[U, f] = e
[e, f] = U
k U
p e f
omega e f = 1
";

#[test]
fn check_valid_file() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t2.txt", T2_PLUS);
    let o = symsym(&["check", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("status: pass"));
}

#[test]
fn check_zero_form_is_a_math_failure() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "w0.txt", &T2_PLUS.replace("omega e f = 1\n", ""));
    let o = symsym(&["--format", "json", "check", &path]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert_eq!(r["status"], "fail");
    assert!(r["checks"]["nondegenerate"].as_str().unwrap().starts_with("fail"));
    assert_eq!(r["checks"]["jacobi"], "pass");
}

#[test]
fn malformed_rational_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.txt", &T2_PLUS.replace("= 1\n", "= 1/0\n"));
    let o = symsym(&["check", &path]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 7"), "{}", stderr(&o));
    let missing = symsym(&["check", "/nonexistent/file.txt"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn unknown_keyword_reports_line_and_field() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "kw.txt", "basis a b\nfrobnicate a\n");
    let o = symsym(&["check", &path]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2: statement"), "{}", stderr(&o));
}

#[test]
fn decompose_scrambled_sum() {
    let dir = TempDir::new().unwrap();
    let sum = direct_sum_triples(&t2(1), &t2(-1)).unwrap();
    let (s, _) = sum.scramble(&mut ChaCha8Rng::seed_from_u64(11)).unwrap();
    let path = write_triple(&dir, "sum.txt", &s);
    assert!(std::fs::read_to_string(&path).unwrap().contains("sigma "));
    let o = symsym(&["--format", "json", "decompose", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["factor count"], 2);
    assert_eq!(r["flat dim"], 0);
    assert_eq!(r["reassembles"], true);
    let mut signs: Vec<String> = r["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["fingerprint"]["Killing signature"].as_str().unwrap().to_string())
        .collect();
    signs.sort();
    assert_eq!(signs, ["(+0, -1, 0x2)", "(+1, -0, 0x2)"]);
}

#[test]
fn decompose_flat_file() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "flat.txt", "basis a b c d\np a b c d\nomega a c = 1\nomega b d = 1\n");
    let r = json(&symsym(&["--format", "json", "decompose", &path]));
    assert_eq!(r["flat dim"], 4);
    assert_eq!(r["factor count"], 0);
}

#[test]
fn decompose_first_series_at_zero() {
    let o = symsym(&[
        "--format", "json", "decompose", "--family", "t4_1", "--eps", "1", "--epsp", "-1", "--x", "0",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["factor count"], 2);
}

#[test]
fn decompose_blocked_by_invalid_input() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "w0.txt", &T2_PLUS.replace("omega e f = 1\n", ""));
    let o = symsym(&["decompose", &path]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("validation: fail"));
}

#[test]
fn seeded_decompose_is_reproducible() {
    let args = ["--format", "json", "decompose", "--family", "t2_0+t2_eps", "--seed", "9"];
    let (a, b) = (symsym(&args), symsym(&args));
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["seed"], 9);
    assert_eq!(r["flat dim"], 2);
    assert_eq!(r["factor count"], 1);
}

#[test]
fn simple_e8_has_no_admissible_nodes() {
    let o = symsym(&["--format", "json", "simple", "--type", "E", "--rank", "8"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["admissible nodes"], serde_json::json!([]));
    assert_eq!(r["dim G"], 248);
}

#[test]
fn simple_a2_writes_a_valid_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("a2.txt");
    let out_s = out.to_str().unwrap();
    let o = symsym(&[
        "simple", "--type", "A", "--rank", "2", "--node", "1", "--lambda", "1", "--out", out_s,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(Path::new(&out).exists());
    let c = symsym(&["check", out_s]);
    assert_eq!(code(&c), 0, "{}", stdout(&c));
    let inv = json(&symsym(&["--format", "json", "invariants", out_s]));
    assert_eq!(inv["fingerprint"]["dim Z(K)"], 1);
    assert_eq!(inv["fingerprint"]["exactness"], true);
    assert_eq!(inv["fingerprint"]["dim P_R"], 0);
}

#[test]
fn simple_rejects_non_admissible_node() {
    let o = symsym(&["simple", "--type", "B", "--rank", "3", "--node", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not admissible"));
    let orbits = json(&symsym(&["--format", "json", "simple", "--type", "D", "--rank", "4"]));
    assert_eq!(orbits["orbits"], serde_json::json!([[1, 3, 4]]));
}

#[test]
fn rank_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_symsym"))
        .args(["simple", "--type", "A", "--rank", "4"])
        .env("SYMSYM_RANK_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("exceeds the cap"));
    assert_eq!(code(&symsym(&["simple", "--type", "A", "--rank", "4"])), 0);
}

#[test]
fn catalog_sweep_passes() {
    let o = symsym(&["--format", "json", "catalog"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["entries passed"], r["entries checked"]);
    assert_eq!(r["counts"]["dim-4 solvable pairs"], 25);
}

#[test]
fn catalog_counterexample_entry() {
    let o = symsym(&["--format", "json", "catalog", "--family", "t4_3", "--eta", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["fingerprint"]["exactness"], false);
    assert_eq!(r["fingerprint"]["dim Z(G)"], 0);
}

#[test]
fn catalog_input_errors() {
    let o = symsym(&["catalog", "--family", "no_such_family"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("t4_5_eps_alpha_eta"), "{}", stderr(&o));
    let bad = symsym(&["catalog", "--family", "t2", "--eps", "2"]);
    assert_eq!(code(&bad), 2);
    let junk = symsym(&["catalog", "--family", "t2", "--eps", "x"]);
    assert_eq!(code(&junk), 2);
}

#[test]
fn catalog_out_round_trips_through_check() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("entry.txt");
    let out_s = out.to_str().unwrap();
    let o = symsym(&["catalog", "--family", "cotangent_H1", "--a", "1/2", "--out", out_s]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(code(&symsym(&["check", out_s])), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let again = serialize_triple(&symsym_cli::parse_triple(&text).unwrap().build().unwrap());
    assert_eq!(again, text);
}

#[test]
fn invariants_of_the_fifth_family() {
    for (eps, want) in [("1", "(+1, -0, 0x5)"), ("-1", "(+0, -1, 0x5)")] {
        let o = symsym(&["--format", "json", "invariants", "--family", "p5", "--eps", eps]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(json(&o)["fingerprint"]["Killing signature"], want);
    }
}

#[test]
fn invariants_flat_and_semisimple() {
    let flat = json(&symsym(&["--format", "json", "invariants", "--family", "t2_0"]));
    assert_eq!(flat["fingerprint"]["dim K"], 0);
    assert_eq!(flat["fingerprint"]["dim Z(G)"], 2);
    let su3 = json(&symsym(&["--format", "json", "invariants", "--family", "su3"]));
    assert_eq!(su3["fingerprint"]["dim P_R"], 0);
    assert!(su3.get("exactness witness").is_some());
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [
        vec!["catalog"],
        vec!["--format", "json", "simple", "--type", "C", "--rank", "3", "--node", "3"],
        vec!["invariants", "--family", "t4_4", "--a", "1/2", "--b", "-1"],
    ] {
        assert_eq!(symsym(&args).stdout, symsym(&args).stdout);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&symsym(&["frobnicate"])), 2);
    assert_eq!(code(&symsym(&["check"])), 2);
    assert_eq!(code(&symsym(&["--help"])), 0);
}
