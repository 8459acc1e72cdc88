//! Spectral radius and Perron vector via power iteration, with closed forms
//! for join graphs and the eigen-identities the extremal arguments lean on.

pub mod charpoly;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Default residual target for the eigensolver.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Iteration cap before reporting non-convergence.
pub const MAX_ITERATIONS: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SpectralResult {
    /// Rayleigh-quotient estimate of the dominant eigenvalue.
    pub lambda: f64,
    /// Unit eigenvector estimate, entrywise positive for connected inputs.
    pub vector: Vec<f64>,
    /// Final max-norm residual of A·x − λ·x.
    pub residual: f64,
    pub iterations: u64,
}

/// Power iteration on A + I (the shift kills ±λ oscillation on bipartite
/// graphs) for a symmetric nonnegative operator given as `matvec` computing
/// y = A·x. Converges when the max-norm residual of the unshifted problem
/// drops to `tol`. The Rayleigh value is variationally accurate to about
/// residual² while the vector carries the full residual.
pub(crate) fn power_iteration(
    n: usize,
    matvec: &dyn Fn(&[f64], &mut [f64]),
    tol: f64,
) -> Result<SpectralResult> {
    debug_assert!(n > 0);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut iterations = 0u64;
    loop {
        matvec(&x, &mut ax);
        let lambda: f64 = x.iter().zip(&ax).map(|(xi, yi)| xi * yi).sum();
        let residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, yi)| (yi - lambda * xi).abs())
            .fold(0.0_f64, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                lambda,
                vector: x,
                residual,
                iterations,
            });
        }
        iterations += 1;
        if iterations >= MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                tol,
                residual,
                iterations,
            });
        }
        let mut norm = 0.0;
        for v in 0..n {
            ax[v] += x[v];
            norm += ax[v] * ax[v];
        }
        let norm = norm.sqrt();
        for v in 0..n {
            x[v] = ax[v] / norm;
        }
    }
}

fn graph_matvec(g: &Graph, x: &[f64], out: &mut [f64]) {
    for v in 0..g.vertex_count() {
        let mut acc = 0.0;
        for u in Bits(g.row(v)) {
            acc += x[u];
        }
        out[v] = acc;
    }
}

/// Perron eigenpair of a connected graph with at least one edge.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "Perron vector needs at least one edge".into(),
        ));
    }
    power_iteration(g.vertex_count(), &|x, out| graph_matvec(g, x, out), tol)
}

/// Spectral radius of any graph: the maximum over connected components.
/// Isolated vertices and the empty graph contribute 0.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    let mut best = 0.0_f64;
    for comp in g.components() {
        if comp.count_ones() < 2 {
            continue;
        }
        let (h, _) = g.induced(comp);
        let r = power_iteration(h.vertex_count(), &|x, out| graph_matvec(&h, x, out), tol)?;
        best = best.max(r.lambda);
    }
    Ok(best)
}

/// Extremal vertex: index of the largest Perron entry, lowest index among
/// entries within 1e-9 of the maximum.
pub fn extremal_vertex(perron: &SpectralResult) -> usize {
    let max = perron.vector.iter().cloned().fold(f64::MIN, f64::max);
    perron
        .vector
        .iter()
        .position(|&x| x >= max - 1e-9)
        .expect("nonempty vector")
}

/// Dominant eigenvalue of K_k joined to s independent vertices: the largest
/// root of λ² − (k−1)λ − ks.
pub fn join_lambda_closed_form(k: usize, s: usize) -> f64 {
    let k = k as f64;
    let s = s as f64;
    ((k - 1.0) + ((k - 1.0) * (k - 1.0) + 4.0 * k * s).sqrt()) / 2.0
}

/// Residuals of the two Perron identities at vertex `v`:
/// first order, |λx_v − Σ_{u∈N(v)} x_u|; second order,
/// |λ²x_v − (d(v)x_v + Σ_{u∈N(v)} d_{N(v)}(u)x_u + Σ_{w∈N²(v)} d_{N(v)}(w)x_w)|
/// where d_{N(v)}(w) counts neighbors of w inside N(v). (The second-order
/// sum over N(v) only picks up vertices with a neighbor inside N(v).)
pub fn eigen_identity_check(g: &Graph, v: usize, tol: f64) -> Result<(f64, f64)> {
    if v >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} out of range for order {}",
            g.vertex_count()
        )));
    }
    let p = perron_vector(g, tol)?;
    let x = &p.vector;
    let lambda = p.lambda;
    let nv = g.row(v);

    let sum1: f64 = Bits(nv).map(|u| x[u]).sum();
    let r1 = (lambda * x[v] - sum1).abs();

    let mut rhs = g.degree(v) as f64 * x[v];
    for u in Bits(nv) {
        let codeg = (g.row(u) & nv).count_ones() as f64;
        rhs += codeg * x[u];
    }
    for w in Bits(g.second_neighborhood(v)) {
        let codeg = (g.row(w) & nv).count_ones() as f64;
        rhs += codeg * x[w];
    }
    let r2 = (lambda * lambda * x[v] - rhs).abs();
    Ok((r1, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::{join, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=8 {
            let g = family(FamilySpec::Complete { n });
            let r = perron_vector(&g, DEFAULT_TOL).unwrap();
            assert!((r.lambda - (n as f64 - 1.0)).abs() < 1e-10, "K_{n}");
            // uniform start is already exact on regular graphs
            assert!(r.residual <= DEFAULT_TOL);
        }
    }

    #[test]
    fn cycles_have_radius_two() {
        for t in 3..=12 {
            let g = family(FamilySpec::Cycle { t });
            let r = perron_vector(&g, DEFAULT_TOL).unwrap();
            assert!((r.lambda - 2.0).abs() < 1e-10, "C_{t}");
        }
    }

    #[test]
    fn complete_bipartite_radius_is_sqrt_st() {
        for (s, t) in [(1, 4), (2, 3), (3, 3), (2, 7)] {
            let g = family(FamilySpec::CompleteBipartite { s, t });
            let r = perron_vector(&g, DEFAULT_TOL).unwrap();
            assert!(
                (r.lambda - ((s * t) as f64).sqrt()).abs() < 1e-10,
                "K_{s},{t}"
            );
        }
    }

    #[test]
    fn join_closed_form_matches_eigensolver() {
        for (k, s) in [(1, 5), (2, 5), (3, 8), (3, 20), (4, 7)] {
            let g = family(FamilySpec::JoinCliqueIndep { k, s });
            let r = perron_vector(&g, DEFAULT_TOL).unwrap();
            let cf = join_lambda_closed_form(k, s);
            assert!((r.lambda - cf).abs() < 1e-10, "({k},{s})");
            // the closed form is a root of λ² − (k−1)λ − ks
            let k_f = k as f64;
            let s_f = s as f64;
            assert!((cf * cf - (k_f - 1.0) * cf - k_f * s_f).abs() < 1e-9);
        }
        // K_1 join is the star: λ = √s
        assert!((join_lambda_closed_form(1, 9) - 3.0).abs() < 1e-12);
        // the m = 27 extremal graph: λ = 6 exactly
        assert!((join_lambda_closed_form(3, 8) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn perron_vector_structure_of_join() {
        // equitable ratios: clique entries equal, independent entries equal,
        // clique/independent ratio = λ/k
        let g = family(FamilySpec::JoinCliqueIndep { k: 3, s: 8 });
        let r = perron_vector(&g, DEFAULT_TOL).unwrap();
        let x = &r.vector;
        for v in 1..3 {
            assert!((x[v] - x[0]).abs() < 1e-9);
        }
        for v in 4..11 {
            assert!((x[v] - x[3]).abs() < 1e-9);
        }
        assert!((x[0] / x[3] - 2.0).abs() < 1e-8);
        assert!(x.iter().all(|&e| e > 0.0));
        let norm: f64 = x.iter().map(|e| e * e).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_perron_ratio() {
        let g = family(FamilySpec::CompleteBipartite { s: 1, t: 4 });
        let r = perron_vector(&g, DEFAULT_TOL).unwrap();
        // center-to-leaf ratio is λ = 2
        assert!((r.vector[0] / r.vector[1] - 2.0).abs() < 1e-9);
        assert_eq!(extremal_vertex(&r), 0);
    }

    #[test]
    fn disconnected_inputs() {
        let g = family(FamilySpec::Complete { n: 3 })
            .disjoint_union(&family(FamilySpec::Cycle { t: 4 }))
            .unwrap();
        assert!(matches!(perron_vector(&g, DEFAULT_TOL), Err(Error::Disconnected)));
        // max over components: λ(K_3) = 2 = λ(C_4)
        assert!((spectral_radius(&g, DEFAULT_TOL).unwrap() - 2.0).abs() < 1e-10);

        let lonely = Graph::empty(5).unwrap();
        assert_eq!(spectral_radius(&lonely, DEFAULT_TOL).unwrap(), 0.0);
        assert_eq!(
            spectral_radius(&Graph::empty(0).unwrap(), DEFAULT_TOL).unwrap(),
            0.0
        );
        assert!(perron_vector(&Graph::empty(1).unwrap(), DEFAULT_TOL).is_err());
    }

    #[test]
    fn radius_monotone_under_edge_addition() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let n = rng.random_range(3usize..10);
            let mut g = Graph::empty(n).unwrap();
            // random graph, then add one absent edge
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(i, j);
                    }
                }
            }
            let before = spectral_radius(&g, DEFAULT_TOL).unwrap();
            let absent: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !g.has_edge(i, j))
                .collect();
            if absent.is_empty() {
                continue;
            }
            let (i, j) = absent[rng.random_range(0..absent.len())];
            let mut h = g;
            h.add_edge(i, j);
            let after = spectral_radius(&h, DEFAULT_TOL).unwrap();
            assert!(after >= before - 1e-9);
        }
    }

    #[test]
    fn eigen_identities_exact_cases() {
        // C_6 at any vertex: both identities exact
        let c6 = family(FamilySpec::Cycle { t: 6 });
        for v in 0..6 {
            let (r1, r2) = eigen_identity_check(&c6, v, DEFAULT_TOL).unwrap();
            assert!(r1 < 1e-10 && r2 < 1e-10);
        }
        // star and join
        let star = family(FamilySpec::CompleteBipartite { s: 1, t: 5 });
        for v in 0..6 {
            let (r1, r2) = eigen_identity_check(&star, v, DEFAULT_TOL).unwrap();
            assert!(r1 < 1e-9 && r2 < 1e-9);
        }
        let g = family(FamilySpec::JoinCliqueIndep { k: 3, s: 8 });
        for v in 0..g.vertex_count() {
            let (r1, r2) = eigen_identity_check(&g, v, DEFAULT_TOL).unwrap();
            assert!(r1 < 1e-9 && r2 < 1e-9, "vertex {v}");
        }
        assert!(eigen_identity_check(&g, 99, DEFAULT_TOL).is_err());
    }

    #[test]
    fn wheel_join_lambda() {
        // C_5 ∇ K_1: the rim/hub quotient gives λ² − 2λ − 5 = 0, λ = 1 + √6
        let wheel = join(
            &family(FamilySpec::Cycle { t: 5 }),
            &family(FamilySpec::Complete { n: 1 }),
        )
        .unwrap();
        let r = perron_vector(&wheel, DEFAULT_TOL).unwrap();
        assert!((r.lambda - (1.0 + 6.0_f64.sqrt())).abs() < 1e-9);
    }
}
