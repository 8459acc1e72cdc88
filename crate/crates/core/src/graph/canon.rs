//! Canonical labeling: equitable degree refinement plus individualization
//! with twin skipping. Exact for any order the capacity admits; tuned for
//! the n <= 16 range the enumeration lives in.

use super::{bit, Bits, Graph};
use std::collections::{BTreeMap, VecDeque};

/// Order-independent fingerprint of an isomorphism class: the vertex count
/// and the canonically relabeled upper triangle packed big-endian, so `Ord`
/// compares adjacency matrices lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonKey {
    n: u8,
    words: Vec<u64>,
}

impl CanonKey {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }
}

/// Refine `cells` (ordered partition as bit masks) to the coarsest equitable
/// partition. Buckets are ordered by neighbor count, so the outcome is
/// label-equivariant.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut queue: VecDeque<u64> = cells.iter().copied().collect();
    while let Some(s) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c.count_ones() <= 1 {
                i += 1;
                continue;
            }
            let mut buckets: BTreeMap<u32, u64> = BTreeMap::new();
            for v in Bits(c) {
                let cnt = (g.row(v) & s).count_ones();
                *buckets.entry(cnt).or_insert(0) |= bit(v);
            }
            if buckets.len() > 1 {
                let parts: Vec<u64> = buckets.into_values().collect();
                let added = parts.len();
                cells.splice(i..=i, parts.iter().copied());
                queue.extend(parts);
                i += added;
            } else {
                i += 1;
            }
        }
    }
}

fn initial_partition(g: &Graph) -> Vec<u64> {
    let mut by_degree: BTreeMap<usize, u64> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *by_degree.entry(g.degree(v)).or_insert(0) |= bit(v);
    }
    by_degree.into_values().collect()
}

/// N(u) \ {v} == N(v) \ {u}: swapping u and v is an automorphism fixing the
/// rest, so only one of them needs to be individualized.
#[inline]
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.row(u) & !bit(v) == g.row(v) & !bit(u)
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl<'a> Canonizer<'a> {
    fn run(g: &'a Graph) -> (Vec<u64>, Vec<usize>) {
        let mut c = Canonizer {
            g,
            n: g.vertex_count(),
            best: None,
            best_perm: Vec::new(),
        };
        let mut cells = initial_partition(g);
        c.search(&mut cells);
        (c.best.unwrap_or_default(), c.best_perm)
    }

    fn search(&mut self, cells: &mut Vec<u64>) {
        refine(self.g, cells);
        let mut target: Option<usize> = None;
        let mut smallest = u32::MAX;
        for (i, &c) in cells.iter().enumerate() {
            let sz = c.count_ones();
            if sz > 1 && sz < smallest {
                smallest = sz;
                target = Some(i);
            }
        }
        let Some(i) = target else {
            self.leaf(cells);
            return;
        };
        let cell = cells[i];
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if tried.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..i]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[i + 1..]);
            self.search(&mut child);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut perm = vec![0usize; self.n];
        for (pos, &c) in cells.iter().enumerate() {
            debug_assert_eq!(c.count_ones(), 1);
            perm[c.trailing_zeros() as usize] = pos;
        }
        let key = packed_triangle(self.g, &perm);
        if self.best.as_ref().is_none_or(|b| key < *b) {
            self.best = Some(key);
            self.best_perm = perm;
        }
    }
}

/// Upper triangle of the relabeled adjacency matrix, row-major, packed
/// big-endian so `Vec<u64>` lexicographic order equals bit-string order.
fn packed_triangle(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.vertex_count();
    let h = g.relabeled(perm);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut t = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if h.has_edge(i, j) {
                words[t / 64] |= 1 << (63 - t % 64);
            }
            t += 1;
        }
    }
    words
}

/// Relabeling that takes `g` to its canonical form: vertex v becomes
/// `perm[v]`.
pub fn canonical_perm(g: &Graph) -> Vec<usize> {
    Canonizer::run(g).1
}

/// Canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.vertex_count() == 0 {
        return *g;
    }
    g.relabeled(&canonical_perm(g))
}

/// Class fingerprint; equal keys if and only if isomorphic.
pub fn canonical_key(g: &Graph) -> CanonKey {
    CanonKey {
        n: g.vertex_count() as u8,
        words: Canonizer::run(g).0,
    }
}

/// Canonical form and its key from a single labeling search.
pub fn canonical_pair(g: &Graph) -> (Graph, CanonKey) {
    if g.vertex_count() == 0 {
        return (
            *g,
            CanonKey {
                n: 0,
                words: Vec::new(),
            },
        );
    }
    let (words, perm) = Canonizer::run(g);
    (
        g.relabeled(&perm),
        CanonKey {
            n: g.vertex_count() as u8,
            words,
        },
    )
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    canonical_key(a) == canonical_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::FamilySpec;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c4_two_labelings() -> (Graph, Graph) {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        (a, b)
    }

    #[test]
    fn relabelings_collide() {
        let (a, b) = c4_two_labelings();
        assert_ne!(a, b);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert!(are_isomorphic(&a, &b));
    }

    #[test]
    fn distinguishes_same_degree_profile() {
        // K_{1,3} and P_4 share order and size; C_4 vs K_3 + K_1 share both too
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!are_isomorphic(&star, &p4));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k3k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!are_isomorphic(&c4, &k3k1));
    }

    #[test]
    fn idempotent() {
        for spec in [
            FamilySpec::Cycle { t: 7 },
            FamilySpec::CompleteBipartite { s: 2, t: 4 },
            FamilySpec::JoinCliqueIndep { k: 3, s: 5 },
            FamilySpec::CycleTriangle { t: 6 },
            FamilySpec::F3 { pendants: 3 },
        ] {
            let g = spec.construct().unwrap();
            let c = canonical_form(&g);
            assert_eq!(canonical_form(&c), c, "{}", spec.describe());
            assert_eq!(canonical_key(&c), canonical_key(&g));
        }
    }

    #[test]
    fn counts_all_classes_on_four_and_five_vertices() {
        // 11 graphs on 4 vertices, 34 on 5: enumerate every labeled graph
        // and count distinct keys.
        for (n, expected) in [(4usize, 11usize), (5, 34)] {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            let mut keys = std::collections::HashSet::new();
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = Graph::empty(n).unwrap();
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        g.add_edge(i, j);
                    }
                }
                keys.insert(canonical_key(&g));
            }
            assert_eq!(keys.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn permutation_invariance_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let graphs: Vec<Graph> = vec![
            FamilySpec::Cycle { t: 9 }.construct().unwrap(),
            FamilySpec::JoinCliqueIndep { k: 3, s: 7 }.construct().unwrap(),
            FamilySpec::Gnks { n: 9, k: 5, s: 2 }.construct().unwrap(),
            FamilySpec::CycleTriangle { t: 8 }.construct().unwrap(),
            Graph::from_edges(10, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]).unwrap(), // Petersen
        ];
        for g in &graphs {
            let reference = canonical_key(g);
            let n = g.vertex_count();
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let h = g.relabeled(&perm);
                assert_eq!(canonical_key(&h), reference);
            }
        }
    }

    #[test]
    fn key_orders_by_vertex_count_first() {
        let k1 = canonical_key(&Graph::empty(1).unwrap());
        let k2 = canonical_key(&Graph::empty(2).unwrap());
        assert!(k1 < k2);
        assert_eq!(k1.vertex_count(), 1);
    }

    #[test]
    fn empty_graph_edge_cases() {
        let g0 = Graph::empty(0).unwrap();
        assert_eq!(canonical_form(&g0), g0);
        assert_eq!(canonical_key(&g0), canonical_key(&g0));
    }
}
