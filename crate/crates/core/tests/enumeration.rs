mod common;

use std::collections::{BTreeSet, HashSet};

use common::{brute_canonical, labelled, permutations};
use graph_energy::enumerate::{canonical_form, generate_all, ingest_graph6, scan_order, ScanOptions};
use graph_energy::graph::{paw, to_graph6};

/// Isomorphism classes of labelled graphs on `n` vertices, as brute-force
/// canonical codes.
fn oracle_classes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let edges = n * (n - 1) / 2;
    (0..1u64 << edges).map(|bits| brute_canonical(&labelled(n, bits), &perms)).collect()
}

#[test]
fn generator_matches_brute_force_classes() {
    for n in 1..=6 {
        let perms = permutations(n);
        let generated: Vec<u64> = generate_all(n).unwrap().map(|g| brute_canonical(&g, &perms)).collect();
        let distinct: BTreeSet<u64> = generated.iter().copied().collect();
        assert_eq!(distinct.len(), generated.len(), "duplicate class at n = {n}");
        assert_eq!(distinct, oracle_classes(n), "n = {n}");
    }
}

#[test]
fn every_labelled_graph_has_its_form_emitted() {
    for n in 1..=5 {
        let emitted: HashSet<_> = generate_all(n).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
        for bits in 0..1u64 << (n * (n - 1) / 2) {
            assert!(emitted.contains(&canonical_form(&labelled(n, bits)).unwrap()), "n = {n}, bits = {bits:b}");
        }
    }
}

#[test]
fn canonical_form_agrees_with_brute_force_partition() {
    // two labelled graphs share a canonical form exactly when their
    // brute-force codes agree
    let n = 5;
    let perms = permutations(n);
    let mut seen = std::collections::HashMap::new();
    for bits in 0..1u64 << 10 {
        let g = labelled(n, bits);
        let form = canonical_form(&g).unwrap();
        let code = brute_canonical(&g, &perms);
        assert_eq!(*seen.entry(form).or_insert(code), code);
    }
    assert_eq!(seen.len(), 34);
}

#[test]
fn paw_labellings_share_one_form() {
    let forms: HashSet<_> = permutations(4).iter().map(|p| canonical_form(&paw().relabel(p)).unwrap()).collect();
    assert_eq!(forms.len(), 1);
}

#[test]
fn larger_counts() {
    assert_eq!(generate_all(7).unwrap().count(), 1044);
    assert_eq!(generate_all(8).unwrap().count(), 12346);
}

#[test]
fn generated_graphs_round_trip_through_corpus() {
    let text: String = generate_all(6).unwrap().map(|g| to_graph6(&g).unwrap() + "\n").collect();
    let back: Vec<_> = ingest_graph6(text.as_bytes(), true).map(|r| r.unwrap()).collect();
    assert_eq!(back.len(), 156);
    let forms: HashSet<_> = back.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), 156);
}

#[test]
fn scans_below_nine() {
    let opts = ScanOptions { workers: 2, strict: false };
    for n in 5..=8 {
        let s = scan_order(n, &opts).unwrap();
        assert!(s.conjecture2_violations.is_empty(), "n = {n}");
        assert!(s.unexpected_violations().is_empty());
    }
    let s = scan_order(4, &opts).unwrap();
    assert!(s.conjecture2_violations.iter().all(|v| v.reverify().unwrap()));
}
