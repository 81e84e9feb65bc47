use std::time::Instant;

use symsym_core::catalog::{enumerate_catalog, verify_all};

#[test]
fn every_family_passes_over_its_grid() {
    let start = Instant::now();
    let report = verify_all(usize::MAX);
    for e in &report.entries {
        if !e.notes.is_empty() {
            eprintln!("{} [{}]: {}", e.family, e.params, e.notes.join("; "));
        }
    }
    for e in report.failures() {
        eprintln!("FAIL {} [{}]: {}", e.family, e.params, e.failures.join("; "));
    }
    eprintln!("{} entries in {:?}", report.entries.len(), start.elapsed());
    assert!(report.passed());
}

#[test]
fn enumeration_counts() {
    let e = enumerate_catalog().unwrap();
    assert_eq!(e.dim2_entries, 6);
    assert_eq!(e.dim4_simple_entries, 5);
    assert_eq!(e.dim4_solvable_pairs, e.published_pair_count);
    assert!(e.dim4_solvable_pair_fingerprints <= e.dim4_solvable_pairs);
    eprintln!("pair fingerprints: {}", e.dim4_solvable_pair_fingerprints);
}
