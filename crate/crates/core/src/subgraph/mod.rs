//! Containment deciders: backtracking pattern embedding with bitset pruning,
//! fixed-length cycle search, the apexed-cycle test, longest path order by
//! subset dynamic programming, and the dominating-structure certificate.

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_key, CanonKey};
use crate::graph::{bit, low_mask, Bits, Graph};
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchMode {
    /// Pattern edges must map to host edges.
    Subgraph,
    /// Pattern edges and non-edges must both be respected.
    Induced,
}

/// An embedding: pattern vertex i maps to host vertex mapping[i].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub mapping: Vec<usize>,
    pub mode: MatchMode,
}

impl Witness {
    /// Re-check the embedding from scratch.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.mapping.len() != pattern.vertex_count() {
            return false;
        }
        let mut seen = 0u64;
        for &h in &self.mapping {
            if h >= host.vertex_count() || seen & bit(h) != 0 {
                return false;
            }
            seen |= bit(h);
        }
        for i in 0..pattern.vertex_count() {
            for j in i + 1..pattern.vertex_count() {
                let pe = pattern.has_edge(i, j);
                let he = host.has_edge(self.mapping[i], self.mapping[j]);
                let ok = match self.mode {
                    MatchMode::Subgraph => !pe || he,
                    MatchMode::Induced => pe == he,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// First embedding of `pattern` into `host` in lexicographic order of the
/// mapping vector (pattern vertices assigned in index order, candidates
/// tried ascending), or none.
pub fn contains_subgraph(host: &Graph, pattern: &Graph, mode: MatchMode) -> Option<Witness> {
    let pn = pattern.vertex_count();
    if pn > host.vertex_count() {
        return None;
    }
    if pn == 0 {
        return Some(Witness {
            mapping: Vec::new(),
            mode,
        });
    }
    if mode == MatchMode::Subgraph && pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut mapping = vec![usize::MAX; pn];
    if embed(host, pattern, mode, 0, &mut mapping, 0) {
        Some(Witness { mapping, mode })
    } else {
        None
    }
}

fn embed(
    host: &Graph,
    pattern: &Graph,
    mode: MatchMode,
    p: usize,
    mapping: &mut [usize],
    used: u64,
) -> bool {
    if p == pattern.vertex_count() {
        return true;
    }
    let mut cand = host.vertices() & !used;
    for q in 0..p {
        if pattern.has_edge(q, p) {
            cand &= host.row(mapping[q]);
        } else if mode == MatchMode::Induced {
            cand &= !host.row(mapping[q]);
        }
    }
    let want = pattern.degree(p);
    for h in Bits(cand) {
        if host.degree(h) < want {
            continue;
        }
        mapping[p] = h;
        if embed(host, pattern, mode, p + 1, mapping, used | bit(h)) {
            return true;
        }
    }
    mapping[p] = usize::MAX;
    false
}

/// Walk every t-cycle of g (each once up to rotation and reflection: the
/// smallest vertex starts, and its smaller neighbor comes second). The
/// visitor gets the vertex sequence and its mask; returning true stops the
/// walk. Returns whether the walk was stopped.
fn for_each_cycle(g: &Graph, t: usize, f: &mut dyn FnMut(&[usize], u64) -> bool) -> bool {
    let n = g.vertex_count();
    if t > n {
        return false;
    }
    let mut path = Vec::with_capacity(t);
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        // only vertices above the start may continue the cycle
        let allowed = g.vertices() & !low_mask(s + 1);
        if extend_cycle(g, s, t, allowed, bit(s), &mut path, f) {
            return true;
        }
    }
    false
}

fn extend_cycle(
    g: &Graph,
    s: usize,
    t: usize,
    allowed: u64,
    visited: u64,
    path: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize], u64) -> bool,
) -> bool {
    let cur = *path.last().unwrap();
    if path.len() == t {
        // close the cycle; direction canonical: second vertex below last
        if g.has_edge(cur, s) && path[1] < path[t - 1] && f(path, visited) {
            return true;
        }
        return false;
    }
    for nxt in Bits(g.row(cur) & allowed & !visited) {
        path.push(nxt);
        if extend_cycle(g, s, t, allowed, visited | bit(nxt), path, f) {
            return true;
        }
        path.pop();
    }
    false
}

/// Does g contain the cycle C_t as a subgraph?
pub fn has_cycle(g: &Graph, t: usize) -> Result<bool> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 3, got {t}"
        )));
    }
    Ok(for_each_cycle(g, t, &mut |_, _| true))
}

/// Does g contain C_t plus an apex adjacent to two consecutive cycle
/// vertices (a t-cycle with a triangle hung on one edge)?
pub fn has_c_triangle(g: &Graph, t: usize) -> Result<bool> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 3, got {t}"
        )));
    }
    if t + 1 > g.vertex_count() {
        return Ok(false);
    }
    Ok(for_each_cycle(g, t, &mut |path, mask| {
        for i in 0..t {
            let u = path[i];
            let v = path[(i + 1) % t];
            if g.row(u) & g.row(v) & !mask != 0 {
                return true;
            }
        }
        false
    }))
}

/// Vertex capacity for the subset-DP operations.
pub const PATH_DP_MAX_VERTICES: usize = 16;

/// Number of vertices on a longest simple path. Subset DP over endpoint
/// sets; exact.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > PATH_DP_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "path-search vertices",
            got: n,
            limit: PATH_DP_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let full = 1usize << n;
    // reach[S] = endpoints v such that some simple path covers exactly S and ends at v
    let mut reach = vec![0u16; full];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut best = 1usize;
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for v in Bits(ends as u64) {
            for u in Bits(g.row(v) & !(mask as u64)) {
                reach[mask | (1 << u)] |= 1 << u;
            }
        }
    }
    Ok(best)
}

/// Certificate that a structure dominating all of V(G) exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationCertificate {
    /// Six vertices inducing a cycle, in cycle order.
    InducedC6 { vertices: [usize; 6] },
    /// Sides of a complete bipartite subgraph: every cross pair adjacent
    /// (sides need not be independent). side_b is empty only in the
    /// degenerate single-vertex graph.
    CompleteBipartite {
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    },
}

impl DominationCertificate {
    /// Vertex set of the certificate.
    pub fn mask(&self) -> u64 {
        match self {
            DominationCertificate::InducedC6 { vertices } => {
                vertices.iter().fold(0, |m, &v| m | bit(v))
            }
            DominationCertificate::CompleteBipartite { side_a, side_b } => side_a
                .iter()
                .chain(side_b)
                .fold(0, |m, &v| m | bit(v)),
        }
    }

    /// Re-check structure and domination from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let mask = self.mask();
        if mask & !g.vertices() != 0 {
            return false;
        }
        if !dominates(g, mask) {
            return false;
        }
        match self {
            DominationCertificate::InducedC6 { vertices } => {
                if mask.count_ones() != 6 {
                    return false;
                }
                for i in 0..6 {
                    for j in i + 1..6 {
                        let consecutive = (j - i) == 1 || (i, j) == (0, 5);
                        if g.has_edge(vertices[i], vertices[j]) != consecutive {
                            return false;
                        }
                    }
                }
                true
            }
            DominationCertificate::CompleteBipartite { side_a, side_b } => {
                if side_a.is_empty() {
                    return false;
                }
                if side_b.is_empty() {
                    return g.vertex_count() == 1;
                }
                let bmask = side_b.iter().fold(0u64, |m, &v| m | bit(v));
                if side_a.iter().any(|&u| bmask & bit(u) != 0) {
                    return false;
                }
                side_a
                    .iter()
                    .all(|&u| side_b.iter().all(|&v| g.has_edge(u, v)))
            }
        }
    }
}

fn dominates(g: &Graph, x: u64) -> bool {
    let mut covered = x;
    for v in Bits(x) {
        covered |= g.row(v);
    }
    covered == g.vertices()
}

/// Subsets of `universe` masks with exactly `size` bits, lexicographic by
/// the underlying combination (Gosper's hack on the compacted universe).
fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
    if size == 0 || size > n {
        return false;
    }
    let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut x = bit(size) - 1;
    while x <= full {
        if f(x) {
            return true;
        }
        // Gosper: next mask with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        if r == 0 {
            break;
        }
        x = (((x ^ r) >> 2) / c) | r;
    }
    false
}

/// A dominating complete bipartite structure spanning mask `x`, if any: the
/// sides must partition x with all cross pairs adjacent, which happens
/// exactly when the complement graph restricted to x is disconnected.
fn spanning_bipartition(g: &Graph, x: u64) -> Option<(u64, u64)> {
    let first = x.trailing_zeros() as usize;
    // BFS in the complement, restricted to x
    let mut seen = bit(first);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= !g.row(v) & x & !bit(v);
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    if seen == x {
        None
    } else {
        Some((seen, x & !seen))
    }
}

/// Whole-graph certificate search: dominating complete bipartite subgraphs
/// by increasing total size (subsets lexicographic), then dominating induced
/// six-cycles. `g` connected.
fn whole_certificate(g: &Graph) -> Option<DominationCertificate> {
    let n = g.vertex_count();
    if n == 1 {
        return Some(DominationCertificate::CompleteBipartite {
            side_a: vec![0],
            side_b: Vec::new(),
        });
    }
    let mut found: Option<DominationCertificate> = None;
    for size in 2..=n {
        for_each_subset(n, size, &mut |x| {
            if !dominates(g, x) {
                return false;
            }
            if let Some((a, b)) = spanning_bipartition(g, x) {
                found = Some(DominationCertificate::CompleteBipartite {
                    side_a: Bits(a).collect(),
                    side_b: Bits(b).collect(),
                });
                return true;
            }
            false
        });
        if found.is_some() {
            return found;
        }
    }
    if n >= 6 {
        for_each_subset(n, 6, &mut |x| {
            if !dominates(g, x) {
                return false;
            }
            if let Some(cycle) = induced_c6_order(g, x) {
                found = Some(DominationCertificate::InducedC6 { vertices: cycle });
                return true;
            }
            false
        });
    }
    found
}

/// If mask `x` (six bits) induces a 6-cycle, return it in cycle order.
fn induced_c6_order(g: &Graph, x: u64) -> Option<[usize; 6]> {
    debug_assert_eq!(x.count_ones(), 6);
    for v in Bits(x) {
        if (g.row(v) & x).count_ones() != 2 {
            return None;
        }
    }
    // 2-regular on six vertices: a 6-cycle iff connected
    let start = x.trailing_zeros() as usize;
    let mut order = [0usize; 6];
    order[0] = start;
    let mut prev = start;
    let mut cur = (g.row(start) & x).trailing_zeros() as usize;
    for slot in 1..6 {
        order[slot] = cur;
        let next_mask = g.row(cur) & x & !bit(prev);
        prev = cur;
        cur = next_mask.trailing_zeros() as usize;
    }
    // closed walk must return to start having covered all six
    if cur == start && order.iter().fold(0u64, |m, &v| m | bit(v)) == x {
        Some(order)
    } else {
        None
    }
}

/// The small-graph characterization check: succeeds (with g's own
/// certificate) exactly when every connected induced subgraph of g contains
/// a dominating induced C_6 or a dominating complete bipartite subgraph.
/// Single-vertex subgraphs count as trivially certified. The whole-graph
/// certificate alone would be weaker: a graph can carry a dominating star
/// and still contain an induced P_6 (join K_1 to P_6), and the
/// characterization needs the hereditary quantifier to rule that out.
pub fn dominating_structure(g: &Graph) -> Result<Option<DominationCertificate>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n > PATH_DP_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "domination-search vertices",
            got: n,
            limit: PATH_DP_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let mut memo: HashMap<CanonKey, bool> = HashMap::new();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let first = mask.trailing_zeros() as usize;
        if g.component_of(first, mask) != mask {
            continue;
        }
        let (h, _) = g.induced(mask);
        let key = canonical_key(&h);
        let certified = *memo
            .entry(key)
            .or_insert_with(|| whole_certificate(&h).is_some());
        if !certified {
            return Ok(None);
        }
    }
    Ok(whole_certificate(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::{join, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    #[test]
    fn containment_modes() {
        let k4 = fam(FamilySpec::Complete { n: 4 });
        let c4 = fam(FamilySpec::Cycle { t: 4 });
        let w = contains_subgraph(&k4, &c4, MatchMode::Subgraph).unwrap();
        assert!(w.verify(&k4, &c4));
        assert!(contains_subgraph(&k4, &c4, MatchMode::Induced).is_none());

        // lex-least witness: P_3 into C_5 is [0, 1, 2]
        let c5 = fam(FamilySpec::Cycle { t: 5 });
        let p3 = fam(FamilySpec::Path { n: 3 });
        let w = contains_subgraph(&c5, &p3, MatchMode::Subgraph).unwrap();
        assert_eq!(w.mapping, vec![0, 1, 2]);

        // empty pattern embeds anywhere
        let empty = Graph::empty(0).unwrap();
        assert!(contains_subgraph(&c5, &empty, MatchMode::Induced).is_some());
        // too many vertices cannot embed
        assert!(contains_subgraph(&p3, &c5, MatchMode::Subgraph).is_none());
    }

    #[test]
    fn induced_requires_nonedges() {
        // P_4 is induced in C_5 but C_4 is not
        let c5 = fam(FamilySpec::Cycle { t: 5 });
        let p4 = fam(FamilySpec::Path { n: 4 });
        let c4 = fam(FamilySpec::Cycle { t: 4 });
        assert!(contains_subgraph(&c5, &p4, MatchMode::Induced).is_some());
        assert!(contains_subgraph(&c5, &c4, MatchMode::Subgraph).is_none());
        let w = contains_subgraph(&c5, &p4, MatchMode::Induced).unwrap();
        assert!(w.verify(&c5, &p4));
        assert!(!Witness { mapping: vec![0, 1, 2, 3], mode: MatchMode::Induced }
            .verify(&c5, &c4));
    }

    #[test]
    fn cycles_in_named_graphs() {
        let g = fam(FamilySpec::JoinCliqueIndep { k: 3, s: 8 });
        for t in 3..=6 {
            assert!(has_cycle(&g, t).unwrap(), "C_{t}");
        }
        assert!(!has_cycle(&g, 7).unwrap());
        assert!(!has_cycle(&g, 8).unwrap());

        let c6 = fam(FamilySpec::Cycle { t: 6 });
        for t in 3..=6 {
            assert_eq!(has_cycle(&c6, t).unwrap(), t == 6);
        }

        // the apexed hexagon contains C_3, C_6, C_7 and nothing else
        let g = fam(FamilySpec::CycleTriangle { t: 6 });
        let expected = [true, false, false, true, true];
        for (t, &want) in (3..=7).zip(&expected) {
            assert_eq!(has_cycle(&g, t).unwrap(), want, "t = {t}");
        }
        assert!(has_cycle(&g, 2).is_err());
    }

    #[test]
    fn apexed_cycle_detection() {
        // K_5 has an apexed C_4
        let k5 = fam(FamilySpec::Complete { n: 5 });
        assert!(has_c_triangle(&k5, 4).unwrap());
        // join graphs dodge the apexed hexagon at every s
        for s in 3..=20 {
            let g = fam(FamilySpec::JoinCliqueIndep { k: 3, s });
            assert!(!has_c_triangle(&g, 6).unwrap(), "s = {s}");
        }
        // C_7 alone has no room for the apex
        let c7 = fam(FamilySpec::Cycle { t: 7 });
        assert!(!has_c_triangle(&c7, 6).unwrap());
        assert!(!has_c_triangle(&c7, 7).unwrap());
        // the construction itself obviously contains it
        let g = fam(FamilySpec::CycleTriangle { t: 6 });
        assert!(has_c_triangle(&g, 6).unwrap());
        // C_6 with a pendant is NOT an apexed C_6: the apex needs both ends
        let mut h = fam(FamilySpec::Cycle { t: 6 });
        let mut g = Graph::empty(7).unwrap();
        for (u, v) in h.edges() {
            g.add_edge(u, v);
        }
        g.add_edge(0, 6);
        assert!(!has_c_triangle(&g, 6).unwrap());
        h.add_edge(0, 2); // chord builds a triangle on the cycle, still no apex off-cycle
        assert!(!has_c_triangle(&h, 6).unwrap());
    }

    #[test]
    fn apexed_matches_generic_embedding() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for trial in 0..150 {
            let n = rng.random_range(4usize..=9);
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.45) {
                        g.add_edge(i, j);
                    }
                }
            }
            for t in 3..n {
                let pattern = fam(FamilySpec::CycleTriangle { t });
                let direct = has_c_triangle(&g, t).unwrap();
                let generic = contains_subgraph(&g, &pattern, MatchMode::Subgraph).is_some();
                assert_eq!(direct, generic, "trial {trial}, t = {t}, {g:?}");
            }
        }
    }

    #[test]
    fn cycle_matches_generic_embedding() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(32);
        for _ in 0..150 {
            let n = rng.random_range(3usize..=9);
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(i, j);
                    }
                }
            }
            for t in 3..=n {
                let pattern = fam(FamilySpec::Cycle { t });
                assert_eq!(
                    has_cycle(&g, t).unwrap(),
                    contains_subgraph(&g, &pattern, MatchMode::Subgraph).is_some(),
                    "t = {t}, {g:?}"
                );
            }
        }
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_path_order(&fam(FamilySpec::Path { n: 6 })).unwrap(), 6);
        assert_eq!(longest_path_order(&fam(FamilySpec::Cycle { t: 6 })).unwrap(), 6);
        // K_2 ∇ 6K_1: independent vertices cannot be consecutive; max is 5
        let g = join(
            &fam(FamilySpec::Complete { n: 2 }),
            &Graph::empty(6).unwrap(),
        )
        .unwrap();
        assert_eq!(longest_path_order(&g).unwrap(), 5);
        // G_{10,5,2}: joined K_2 plus inner K_1 gives a 5-vertex path at best
        let g = fam(FamilySpec::Gnks { n: 10, k: 5, s: 2 });
        assert_eq!(longest_path_order(&g).unwrap(), 5);
        assert_eq!(longest_path_order(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(longest_path_order(&Graph::empty(3).unwrap()).unwrap(), 1);
        assert!(longest_path_order(&Graph::empty(17).unwrap()).is_err());
        // stars cap at 3 vertices
        assert_eq!(
            longest_path_order(&fam(FamilySpec::CompleteBipartite { s: 1, t: 7 })).unwrap(),
            3
        );
    }

    #[test]
    fn longest_path_matches_embedding_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(33);
        for _ in 0..100 {
            let n = rng.random_range(2usize..=8);
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(i, j);
                    }
                }
            }
            let order = longest_path_order(&g).unwrap();
            for k in 1..=n {
                let p = fam(FamilySpec::Path { n: k });
                let has = contains_subgraph(&g, &p, MatchMode::Subgraph).is_some();
                assert_eq!(has, k <= order, "k = {k}, order = {order}, {g:?}");
            }
        }
    }

    #[test]
    fn domination_certificates() {
        // star: certified by a complete bipartite structure
        let star = fam(FamilySpec::CompleteBipartite { s: 1, t: 5 });
        let cert = dominating_structure(&star).unwrap().unwrap();
        assert!(cert.verify(&star));
        assert!(matches!(cert, DominationCertificate::CompleteBipartite { .. }));

        // C_6: no complete bipartite structure dominates; the cycle itself does
        let c6 = fam(FamilySpec::Cycle { t: 6 });
        let cert = dominating_structure(&c6).unwrap().unwrap();
        assert!(cert.verify(&c6));
        assert!(matches!(cert, DominationCertificate::InducedC6 { .. }));

        // P_6 contains itself: no certificate
        let p6 = fam(FamilySpec::Path { n: 6 });
        assert!(dominating_structure(&p6).unwrap().is_none());
        assert!(contains_subgraph(&p6, &p6, MatchMode::Induced).is_some());

        // single vertex: trivially certified
        let k1 = fam(FamilySpec::Complete { n: 1 });
        let cert = dominating_structure(&k1).unwrap().unwrap();
        assert!(cert.verify(&k1));

        // joins are P_6-free
        let g = fam(FamilySpec::JoinCliqueIndep { k: 3, s: 8 });
        let cert = dominating_structure(&g).unwrap().unwrap();
        assert!(cert.verify(&g));

        // disconnected input is an error
        let two = Graph::empty(2).unwrap();
        assert!(dominating_structure(&two).is_err());
    }

    #[test]
    fn hereditary_quantifier_matters() {
        // K_1 ∇ P_6 carries a dominating star, yet contains an induced P_6;
        // the whole-graph certificate alone would wrongly accept it.
        let g = join(
            &fam(FamilySpec::Complete { n: 1 }),
            &fam(FamilySpec::Path { n: 6 }),
        )
        .unwrap();
        assert!(whole_certificate(&g).is_some());
        let p6 = fam(FamilySpec::Path { n: 6 });
        assert!(contains_subgraph(&g, &p6, MatchMode::Induced).is_some());
        assert!(dominating_structure(&g).unwrap().is_none());
    }

    #[test]
    fn freeness_is_hereditary() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(34);
        let pattern = fam(FamilySpec::CycleTriangle { t: 4 });
        let mut tested = 0;
        while tested < 40 {
            let n = rng.random_range(5usize..=9);
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.35) {
                        g.add_edge(i, j);
                    }
                }
            }
            if contains_subgraph(&g, &pattern, MatchMode::Subgraph).is_some() {
                continue;
            }
            tested += 1;
            // deleting any edge keeps the host pattern-free
            for (u, v) in g.edges() {
                let mut h = g;
                h.remove_edge(u, v);
                assert!(contains_subgraph(&h, &pattern, MatchMode::Subgraph).is_none());
            }
        }
    }
}
