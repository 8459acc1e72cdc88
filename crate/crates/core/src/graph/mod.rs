//! Simple undirected graphs on at most 64 vertices, one `u64` adjacency row
//! per vertex. Everything downstream (enumeration, containment, spectra)
//! leans on word-level operations over these rows.

pub mod canon;
pub mod family;
pub mod graph6;
pub mod large;

use crate::error::{Error, Result};

/// Hard capacity: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Bits 0..k set.
#[inline]
pub(crate) const fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterator over set bit positions, ascending.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Labeled simple graph. Rows are symmetric and loop-free by construction;
/// bits at positions `>= n` are always zero, so derived equality is labeled
/// graph equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0u64; MAX_VERTICES],
        })
    }

    /// Copy with one extra isolated vertex appended at index `n`.
    pub fn with_vertex(&self) -> Result<Self> {
        if self.n == MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: self.n + 1,
                limit: MAX_VERTICES,
            });
        }
        let mut h = *self;
        h.n += 1;
        Ok(h)
    }

    /// Graph on `n` vertices with the given edges. Rejects loops and
    /// out-of-range endpoints; duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let mut twice = 0u32;
        for v in 0..self.n {
            twice += self.adj[v].count_ones();
        }
        (twice / 2) as usize
    }

    /// Low `n` bits set.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v] == 0)
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertices at distance exactly 2 from `v`, as a mask.
    pub fn second_neighborhood(&self, v: usize) -> u64 {
        let mut reach = 0u64;
        for u in Bits(self.adj[v]) {
            reach |= self.adj[u];
        }
        reach & !self.adj[v] & !bit(v)
    }

    /// Connected component containing `v`, restricted to `allowed`, as a mask.
    /// `v` must be in `allowed`.
    pub fn component_of(&self, v: usize, allowed: u64) -> u64 {
        debug_assert!(allowed & bit(v) != 0);
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as masks, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced on `allowed`.
    pub fn components_within(&self, allowed: u64) -> Vec<u64> {
        let mut left = allowed;
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.component_of(v, allowed);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.components().len();
        let mut out = Vec::new();
        for v in 0..self.n {
            let rest = self.vertices() & !bit(v);
            if self.components_within(rest).len() > base {
                out.push(v);
            }
        }
        out
    }

    /// True if connected, on at least 3 vertices, with no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Subgraph induced on the vertices of `mask`, relabeled to 0..k in
    /// ascending original order. Returns the graph and the original labels.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        debug_assert_eq!(mask & !self.vertices(), 0);
        let verts: Vec<usize> = Bits(mask).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: [0u64; MAX_VERTICES],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        (g, verts)
    }

    /// Relabel: vertex `v` of `self` becomes `perm[v]`. `perm` must be a
    /// permutation of 0..n.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [0u64; MAX_VERTICES],
        };
        for u in 0..self.n {
            for v in Bits(self.adj[u]) {
                g.adj[perm[u]] |= bit(perm[v]);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = *self;
        g.n = n;
        for u in 0..other.n {
            g.adj[self.n + u] = other.adj[u] << self.n;
        }
        Ok(g)
    }

    /// Parse whitespace-separated "u v" pairs, one edge per line. Lines that
    /// are empty or start with '#' are skipped. Vertex count is one past the
    /// largest label unless a leading "n <count>" line fixes it.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut fixed_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_label = 0usize;
        let mut saw_vertex = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let a = it.next().unwrap();
            if a == "n" {
                let b = it.next().ok_or(Error::EdgeList {
                    line: lineno,
                    reason: "expected vertex count after `n`".into(),
                })?;
                let n: usize = b.parse().map_err(|_| Error::EdgeList {
                    line: lineno,
                    reason: format!("bad vertex count `{b}`"),
                })?;
                fixed_n = Some(n);
                continue;
            }
            let b = it.next().ok_or(Error::EdgeList {
                line: lineno,
                reason: "expected two endpoints".into(),
            })?;
            if it.next().is_some() {
                return Err(Error::EdgeList {
                    line: lineno,
                    reason: "expected exactly two endpoints".into(),
                });
            }
            let u: usize = a.parse().map_err(|_| Error::EdgeList {
                line: lineno,
                reason: format!("bad endpoint `{a}`"),
            })?;
            let v: usize = b.parse().map_err(|_| Error::EdgeList {
                line: lineno,
                reason: format!("bad endpoint `{v}`", v = b),
            })?;
            if u == v {
                return Err(Error::EdgeList {
                    line: lineno,
                    reason: format!("loop at vertex {u}"),
                });
            }
            saw_vertex = true;
            max_label = max_label.max(u).max(v);
            edges.push((u, v));
        }
        let n = match fixed_n {
            Some(n) => n,
            None if saw_vertex => max_label + 1,
            None => 0,
        };
        Graph::from_edges(n, &edges)
    }

    /// Internal consistency: symmetry, no loops, no bits past `n`.
    pub fn check_invariants(&self) -> bool {
        let verts = self.vertices();
        for v in 0..MAX_VERTICES {
            if v >= self.n {
                if self.adj[v] != 0 {
                    return false;
                }
                continue;
            }
            if self.adj[v] & bit(v) != 0 || self.adj[v] & !verts != 0 {
                return false;
            }
            for u in Bits(self.adj[v]) {
                if self.adj[u] & bit(v) == 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; {:?})", self.n, self.edge_count(), self.edges())
    }
}
