//! Wide-row graphs (capacity 128) for the certificate drivers only: the
//! equality witnesses K_3∇((m−3)/3)K_1 outgrow the 64-vertex engine once
//! m > 186. Spectra are computed directly on this representation; pattern
//! checks go through a containment-preserving twin reduction back into the
//! bitset engine.

use super::family::FamilySpec;
use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::spectral::{power_iteration, SpectralResult};

pub const LARGE_MAX_VERTICES: usize = 128;

#[inline]
fn wbit(v: usize) -> u128 {
    1u128 << v
}

/// Iterator over set bit positions of a wide row, ascending.
struct WideBits(u128);

impl Iterator for WideBits {
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

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LargeGraph {
    n: usize,
    rows: Vec<u128>,
}

impl LargeGraph {
    pub fn from_family(spec: &FamilySpec) -> Result<Self> {
        spec.validated()?;
        let n = spec.vertex_count();
        if n > LARGE_MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: n,
                limit: LARGE_MAX_VERTICES,
            });
        }
        let mut rows = vec![0u128; n];
        spec.emit_edges(&mut |u, v| {
            rows[u] |= wbit(v);
            rows[v] |= wbit(u);
        });
        Ok(LargeGraph { n, rows })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        LargeGraph {
            n,
            rows: (0..n).map(|v| g.row(v) as u128).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|r| r.count_ones()).sum();
        (twice / 2) as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 128 {
            u128::MAX
        } else {
            wbit(self.n) - 1
        };
        let mut seen = wbit(0);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u128;
            for v in WideBits(frontier) {
                next |= self.rows[v];
            }
            next &= all & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    /// Perron eigenpair; connected input with at least one edge.
    pub fn perron(&self, tol: f64) -> Result<SpectralResult> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.edge_count() == 0 {
            return Err(Error::InvalidParameter(
                "Perron vector needs at least one edge".into(),
            ));
        }
        power_iteration(
            self.n,
            &|x, out| {
                for v in 0..self.n {
                    let mut acc = 0.0;
                    for u in WideBits(self.rows[v]) {
                        acc += x[u];
                    }
                    out[v] = acc;
                }
            },
            tol,
        )
    }

    /// Keep at most `keep` representatives (lowest labels) of every twin
    /// class, repeating until stable. Two vertices are twins when their
    /// neighborhoods agree outside the pair; a p-vertex pattern embeds in the
    /// original iff it embeds in the reduction whenever keep >= p, because an
    /// embedding touches at most p members of any class and members are
    /// interchangeable.
    pub fn twin_reduced(&self, keep: usize) -> LargeGraph {
        let mut g = self.clone();
        loop {
            let before = g.n;
            g = g.trim_twins_once(keep);
            if g.n == before {
                return g;
            }
        }
    }

    fn trim_twins_once(&self, keep: usize) -> LargeGraph {
        use std::collections::HashMap;
        let mut drop = vec![false; self.n];
        // open twins share a row; closed twins share row | self
        for closed in [false, true] {
            let mut classes: HashMap<u128, usize> = HashMap::new();
            for v in 0..self.n {
                if drop[v] {
                    continue;
                }
                let key = if closed {
                    self.rows[v] | wbit(v)
                } else {
                    self.rows[v]
                };
                let cnt = classes.entry(key).or_insert(0);
                *cnt += 1;
                if *cnt > keep {
                    drop[v] = true;
                }
            }
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        if kept.len() == self.n {
            return self.clone();
        }
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let mut rows = vec![0u128; kept.len()];
        for (i, &v) in kept.iter().enumerate() {
            for u in WideBits(self.rows[v]) {
                if !drop[u] {
                    rows[i] |= wbit(new_label[u]);
                }
            }
        }
        LargeGraph {
            n: kept.len(),
            rows,
        }
    }

    /// Convert into the bitset engine when small enough.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: self.n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(self.n)?;
        for v in 0..self.n {
            for u in WideBits(self.rows[v]) {
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }
}
