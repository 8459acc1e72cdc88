//! Named parameterized graph families and the join operation.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parameterized constructions used throughout the extremal arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// K_n.
    Complete { n: usize },
    /// Cycle C_t, t >= 3.
    Cycle { t: usize },
    /// Path P_n on n vertices.
    Path { n: usize },
    /// K_{s,t}.
    CompleteBipartite { s: usize, t: usize },
    /// K_k joined to s independent vertices: every clique vertex adjacent to
    /// every independent vertex.
    JoinCliqueIndep { k: usize, s: usize },
    /// C_t plus one apex adjacent to the endpoints of one cycle edge;
    /// t + 1 vertices, t + 2 edges.
    CycleTriangle { t: usize },
    /// (K_{k-2s} union (n-k+s)K_1) joined to K_s; the path-free extremal
    /// family. Requires k >= 3, 1 <= s <= (k-1)/2, n >= k.
    Gnks { n: usize, k: usize, s: usize },
    /// K_4 with `pendants` extra degree-1 vertices attached to one fixed
    /// clique vertex (vertex 0).
    F3 { pendants: usize },
}

impl FamilySpec {
    /// Number of vertices the construction will have.
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Complete { n } => n,
            FamilySpec::Cycle { t } => t,
            FamilySpec::Path { n } => n,
            FamilySpec::CompleteBipartite { s, t } => s + t,
            FamilySpec::JoinCliqueIndep { k, s } => k + s,
            FamilySpec::CycleTriangle { t } => t + 1,
            FamilySpec::Gnks { n, .. } => n,
            FamilySpec::F3 { pendants } => 4 + pendants,
        }
    }

    /// Number of edges the construction will have.
    pub fn edge_count(&self) -> usize {
        fn c2(x: usize) -> usize {
            x * x.saturating_sub(1) / 2
        }
        match *self {
            FamilySpec::Complete { n } => c2(n),
            FamilySpec::Cycle { t } => t,
            FamilySpec::Path { n } => n.saturating_sub(1),
            FamilySpec::CompleteBipartite { s, t } => s * t,
            FamilySpec::JoinCliqueIndep { k, s } => c2(k) + k * s,
            FamilySpec::CycleTriangle { t } => t + 2,
            FamilySpec::Gnks { n, k, s } => c2(k - 2 * s) + c2(s) + s * (n - s),
            FamilySpec::F3 { pendants } => 6 + pendants,
        }
    }

    /// Canonical textual form, e.g. `cycle(6)`.
    pub fn describe(&self) -> String {
        match *self {
            FamilySpec::Complete { n } => format!("complete({n})"),
            FamilySpec::Cycle { t } => format!("cycle({t})"),
            FamilySpec::Path { n } => format!("path({n})"),
            FamilySpec::CompleteBipartite { s, t } => format!("complete-bipartite({s},{t})"),
            FamilySpec::JoinCliqueIndep { k, s } => format!("join-clique-indep({k},{s})"),
            FamilySpec::CycleTriangle { t } => format!("cycle-triangle({t})"),
            FamilySpec::Gnks { n, k, s } => format!("gnks({n},{k},{s})"),
            FamilySpec::F3 { pendants } => format!("f3({pendants})"),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::Complete { n } if n < 1 => bad("complete: need n >= 1".into()),
            FamilySpec::Cycle { t } if t < 3 => bad(format!("cycle: need t >= 3, got {t}")),
            FamilySpec::Path { n } if n < 1 => bad("path: need n >= 1".into()),
            FamilySpec::CompleteBipartite { s, t } if s < 1 || t < 1 => {
                bad(format!("complete-bipartite: need s, t >= 1, got ({s},{t})"))
            }
            FamilySpec::JoinCliqueIndep { k, s } if k < 1 || s < 1 => {
                bad(format!("join-clique-indep: need k, s >= 1, got ({k},{s})"))
            }
            FamilySpec::CycleTriangle { t } if t < 3 => {
                bad(format!("cycle-triangle: need t >= 3, got {t}"))
            }
            FamilySpec::Gnks { n, k, s } => {
                if k < 3 || s < 1 || 2 * s > k - 1 || n < k {
                    bad(format!(
                        "gnks: need k >= 3, 1 <= s <= (k-1)/2, n >= k, got ({n},{k},{s})"
                    ))
                } else {
                    Ok(())
                }
            }
            FamilySpec::F3 { pendants } if pendants < 1 => {
                bad("f3: need at least one pendant".into())
            }
            _ => Ok(()),
        }
    }

    /// Emit every edge of the construction. Vertex layout is fixed per
    /// family so tests can address specific vertices; see the match arms.
    pub(crate) fn emit_edges(&self, add: &mut dyn FnMut(usize, usize)) {
        match *self {
            FamilySpec::Complete { n } => {
                for u in 0..n {
                    for v in u + 1..n {
                        add(u, v);
                    }
                }
            }
            FamilySpec::Cycle { t } => {
                for v in 0..t {
                    add(v, (v + 1) % t);
                }
            }
            FamilySpec::Path { n } => {
                for v in 0..n.saturating_sub(1) {
                    add(v, v + 1);
                }
            }
            // Side A is 0..s, side B is s..s+t.
            FamilySpec::CompleteBipartite { s, t } => {
                for u in 0..s {
                    for v in s..s + t {
                        add(u, v);
                    }
                }
            }
            // Clique is 0..k, independent set is k..k+s.
            FamilySpec::JoinCliqueIndep { k, s } => {
                for u in 0..k {
                    for v in u + 1..k {
                        add(u, v);
                    }
                    for v in k..k + s {
                        add(u, v);
                    }
                }
            }
            // Cycle is 0..t, apex t is adjacent to cycle vertices 0 and 1.
            FamilySpec::CycleTriangle { t } => {
                for v in 0..t {
                    add(v, (v + 1) % t);
                }
                add(t, 0);
                add(t, 1);
            }
            // Inner clique K_{k-2s} is 0..k-2s, isolated part follows, and the
            // joined K_s occupies the last s labels.
            FamilySpec::Gnks { n, k, s } => {
                let a = k - 2 * s;
                for u in 0..a {
                    for v in u + 1..a {
                        add(u, v);
                    }
                }
                for u in n - s..n {
                    for v in u + 1..n {
                        add(u, v);
                    }
                    for w in 0..n - s {
                        add(u, w);
                    }
                }
            }
            // K_4 on 0..4, pendants 4..4+k all attached to vertex 0.
            FamilySpec::F3 { pendants } => {
                for u in 0..4 {
                    for v in u + 1..4 {
                        add(u, v);
                    }
                }
                for p in 4..4 + pendants {
                    add(0, p);
                }
            }
        }
    }

    /// Build the graph.
    pub fn construct(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n)?;
        self.emit_edges(&mut |u, v| g.add_edge(u, v));
        debug_assert!(g.check_invariants());
        debug_assert_eq!(g.edge_count(), self.edge_count());
        Ok(g)
    }

    pub(crate) fn validated(&self) -> Result<()> {
        self.validate()
    }
}

/// Join of two graphs: disjoint union plus every cross edge.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = a.disjoint_union(b)?;
    let an = a.vertex_count();
    for u in 0..an {
        for v in an..g.vertex_count() {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}
