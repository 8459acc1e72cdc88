//! Acceptance gate: nine criteria combining closed-form certificates,
//! exhaustive small-scale oracles, and property suites. Each test prints
//! one pass line with its runtime; stated runtime caps are asserted.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use specturan::{
    are_isomorphic, canonical_key, char_poly_radius_oracle, decompose, eigen_identity_check,
    enumerate_graphs, eq4_slack, eta, extremal_search_report, spectral_radius, verify_balister,
    verify_corollary, verify_dominating, verify_eta_table, verify_theorem1, CanonKey, EnumOptions,
    EnumSpec, FamilySpec, ForbiddenPattern, Graph, VerifyMode, CERT_TOL, DEFAULT_TOL, SLACK_TOL,
};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn report_pass(criterion: u32, label: &str, start: Instant, cap: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < cap,
        "criterion {criterion} exceeded its {:?} runtime cap: {:?}",
        cap,
        elapsed
    );
    println!(
        "criterion {criterion} ({label}): PASS in {:.2}s",
        elapsed.as_secs_f64()
    );
}

fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.edge_count() >= 1 && g.is_connected() {
            return g;
        }
    }
}

/// Every class of connected graphs with exactly `m` edges and at most
/// `n_max` vertices, through the public enumeration surface.
fn connected_classes(m: usize, n_max: usize) -> Vec<Graph> {
    let spec = EnumSpec::new(m).vertex_range(2, n_max);
    let mut opts = EnumOptions::serial();
    opts.allow_large = true;
    let mut out = Vec::new();
    enumerate_graphs(&spec, &opts, &mut |g| out.push(*g)).unwrap();
    out
}

#[test]
fn criterion_1_certificate_suite() {
    let start = Instant::now();
    for m in (27..=300).step_by(3) {
        let radius = verify_theorem1(m, VerifyMode::Certificate).unwrap();
        assert!(radius.pass, "radius certificate failed at m = {m}");
        let cycles = verify_corollary(m, VerifyMode::Certificate).unwrap();
        assert!(cycles.pass, "cycle certificate failed at m = {m}");
    }
    report_pass(1, "certificate suite m = 27..300", start, Duration::from_secs(10));
}

#[test]
fn criterion_2_oracle_agreement() {
    let start = Instant::now();
    let mut per_n: BTreeMap<usize, u64> = BTreeMap::new();
    per_n.insert(1, 1);
    let k1 = Graph::empty(1).unwrap();
    assert_eq!(spectral_radius(&k1, DEFAULT_TOL).unwrap(), 0.0);
    assert!(char_poly_radius_oracle(&k1).unwrap().abs() <= 1e-8);
    for m in 1..=21 {
        for g in connected_classes(m, 7) {
            *per_n.entry(g.vertex_count()).or_insert(0) += 1;
            let fast = spectral_radius(&g, DEFAULT_TOL).unwrap();
            let oracle = char_poly_radius_oracle(&g).unwrap();
            assert!(
                (fast - oracle).abs() <= 1e-8,
                "radius mismatch {fast} vs {oracle}"
            );
        }
    }
    let counts: Vec<(usize, u64)> = per_n.into_iter().collect();
    assert_eq!(
        counts,
        vec![(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)]
    );
    report_pass(2, "eigensolver vs charpoly oracle, n <= 7", start, Duration::from_secs(60));
}

#[test]
fn criterion_3_path_free_edge_maxima() {
    let start = Instant::now();
    for k in 3..=5usize {
        for n in (k + 1)..=8 {
            let r = verify_balister(n, k).unwrap();
            assert!(r.pass, "path-free edge maximum failed at n = {n}, k = {k}");
        }
    }
    report_pass(3, "path-free edge maxima, k in 3..5, n <= 8", start, Duration::from_secs(300));
}

#[test]
fn criterion_4_domination_characterization() {
    let start = Instant::now();
    let r = verify_dominating(8).unwrap();
    assert!(r.pass);
    report_pass(4, "domination certificate vs induced P_6, n <= 8", start, Duration::from_secs(600));
}

#[test]
fn criterion_5_eta_table() {
    let start = Instant::now();
    let r = verify_eta_table(8).unwrap();
    assert!(r.pass);
    report_pass(5, "edge-count table for path-free min-degree-2 graphs", start, Duration::from_secs(300));
}

#[test]
fn criterion_6_join_family_equalities() {
    let start = Instant::now();
    for s in 8..=20usize {
        let g = FamilySpec::JoinCliqueIndep { k: 3, s }.construct().unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.n0, 0, "s = {s}");
        assert_eq!(d.w, 0, "s = {s}");
        assert_eq!(d.components_h.len(), 1, "s = {s}");
        let (h, _) = g.induced(d.components_h[0]);
        let named = FamilySpec::JoinCliqueIndep { k: 2, s }.construct().unwrap();
        assert!(are_isomorphic(&h, &named), "s = {s}");
        let v = eta(&g, &d, d.components_h[0]).unwrap();
        assert!((v.value + 3.0).abs() <= CERT_TOL, "eta = {} at s = {s}", v.value);
        let slack = eq4_slack(&g).unwrap();
        assert!(slack.abs() <= SLACK_TOL, "slack = {slack} at s = {s}");
    }
    report_pass(6, "join-family eta and slack equalities, s in 8..20", start, Duration::from_secs(60));
}

#[test]
fn criterion_7_eigen_identities() {
    let start = Instant::now();
    let mut hosts = vec![
        FamilySpec::Cycle { t: 6 }.construct().unwrap(),
        FamilySpec::CompleteBipartite { s: 1, t: 5 }.construct().unwrap(),
        FamilySpec::JoinCliqueIndep { k: 3, s: 8 }.construct().unwrap(),
    ];
    let mut rng = StdRng::seed_from_u64(0x51ec7);
    for _ in 0..100 {
        let n = rng.random_range(2..=12);
        hosts.push(random_connected(&mut rng, n, 0.4));
    }
    for g in &hosts {
        for v in 0..g.vertex_count() {
            let (first, second) = eigen_identity_check(g, v, DEFAULT_TOL).unwrap();
            assert!(first <= 1e-8, "first-order residual {first}");
            assert!(second <= 1e-8, "second-order residual {second}");
        }
    }
    report_pass(7, "eigenvector identities on 103 hosts", start, Duration::from_secs(60));
}

/// Canonical keys of every connected graph with exactly `m` edges, by brute
/// force over labeled edge subsets of each complete graph, deduplicated.
fn naive_connected_classes(m: usize) -> BTreeSet<CanonKey> {
    let mut out = BTreeSet::new();
    for n in 2..=(m + 1) {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        if slots.len() < m {
            continue;
        }
        let mut mask: u64 = (1u64 << m) - 1;
        let limit: u64 = 1u64 << slots.len();
        while mask < limit {
            let mut g = Graph::empty(n).unwrap();
            for (i, &(u, v)) in slots.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    g.add_edge(u, v);
                }
            }
            if !g.has_isolated_vertex() && g.is_connected() {
                out.insert(canonical_key(&g));
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    out
}

#[test]
fn criterion_8_enumerator_soundness() {
    let start = Instant::now();
    for m in 1..=7usize {
        let enumerated: BTreeSet<CanonKey> = connected_classes(m, m + 1)
            .iter()
            .map(canonical_key)
            .collect();
        assert_eq!(enumerated, naive_connected_classes(m), "class set mismatch at m = {m}");
    }
    let patterns = [
        ForbiddenPattern::CtTriangle(6),
        ForbiddenPattern::Cycle(4),
        ForbiddenPattern::Path(6),
    ];
    for m in 1..=8usize {
        let all = connected_classes(m, m + 1);
        for pat in &patterns {
            let spec = EnumSpec::new(m).forbid(pat.clone());
            let mut pruned: Vec<CanonKey> = Vec::new();
            enumerate_graphs(&spec, &EnumOptions::serial(), &mut |g| {
                pruned.push(canonical_key(g));
            })
            .unwrap();
            let filtered: Vec<CanonKey> = all
                .iter()
                .filter(|g| !pat.contained_in(g).unwrap())
                .map(canonical_key)
                .collect();
            assert_eq!(pruned, filtered, "pruning mismatch at m = {m}, pattern {pat}");
        }
    }
    report_pass(8, "enumerator vs labeled brute force and filter-after", start, Duration::from_secs(300));
}

#[test]
fn criterion_9_deterministic_extremal_reports() {
    let start = Instant::now();
    for m in 3..=11usize {
        let spec = EnumSpec::new(m)
            .forbid(ForbiddenPattern::CtTriangle(6))
            .with_block_reduction();
        let serial = extremal_search_report(&spec, &EnumOptions::serial()).unwrap();
        let mut opts = EnumOptions::serial();
        opts.jobs = 8;
        let parallel = extremal_search_report(&spec, &opts).unwrap();
        let json = serial.to_json();
        assert_eq!(json, parallel.to_json(), "report bytes differ at m = {m}");
        assert!(json.contains("\"lambda_max\":"), "missing radius record at m = {m}");
        assert!(json.contains("\"reference_line\":"), "missing reference at m = {m}");
        assert!(serial.runtime_ms.is_none());
    }
    report_pass(9, "byte-identical extremal reports, m in 3..11", start, Duration::from_secs(300));
}
