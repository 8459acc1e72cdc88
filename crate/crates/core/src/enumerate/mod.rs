//! Isomorph-free generation of graphs with a prescribed edge count under
//! hereditary forbidden-pattern pruning, and the extremal searches built on
//! top of it.
//!
//! Connected graphs grow level by level: every connected graph with m edges
//! and no isolated vertex arises from one with m-1 edges by adding an edge
//! between existing vertices or hanging a pendant vertex (delete a cycle
//! edge or a leaf to see the converse). Each level is deduplicated by
//! canonical form, so every class is visited exactly once. Containment of a
//! fixed pattern is monotone under both growth moves, which makes pruning
//! at intermediate levels sound. Disconnected families are assembled
//! afterwards from connected pieces, one multiset of components per class.

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_key, canonical_pair, CanonKey};
use crate::graph::family::FamilySpec;
use crate::graph::graph6::{from_graph6, to_graph6};
use crate::graph::{Graph, MAX_VERTICES};
use crate::spectral::{spectral_radius, DEFAULT_TOL};
use crate::subgraph::{
    contains_subgraph, has_c_triangle, has_cycle, longest_path_order, MatchMode,
    PATH_DP_MAX_VERTICES,
};
use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

/// Edge-count ceiling for exhaustive runs without an explicit override.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 12;

/// A pattern whose appearance as a subgraph disqualifies a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenPattern {
    /// Cycle on t vertices.
    Cycle(usize),
    /// Path on p vertices.
    Path(usize),
    /// Cycle on t vertices plus an apex joined to two consecutive cycle
    /// vertices.
    CtTriangle(usize),
    /// Complete bipartite graph with the given side sizes.
    CompleteBipartite(usize, usize),
    /// Arbitrary pattern graph.
    Custom(Graph),
}

impl ForbiddenPattern {
    /// Parse the textual form used by the command line and checkpoint
    /// headers: `cycle:6`, `path:6`, `c-triangle:6`,
    /// `complete-bipartite:2,3`, `g6:<graph6>`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognized pattern `{s}`"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |a: &str| {
            a.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad pattern size in `{s}`")))
        };
        let pat = match kind {
            "cycle" => ForbiddenPattern::Cycle(num(arg)?),
            "path" => ForbiddenPattern::Path(num(arg)?),
            "c-triangle" => ForbiddenPattern::CtTriangle(num(arg)?),
            "complete-bipartite" => {
                let (a, b) = arg.split_once(',').ok_or_else(bad)?;
                ForbiddenPattern::CompleteBipartite(num(a)?, num(b)?)
            }
            "g6" => ForbiddenPattern::Custom(from_graph6(arg)?),
            _ => return Err(bad()),
        };
        pat.validate()?;
        Ok(pat)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ForbiddenPattern::Cycle(t) | ForbiddenPattern::CtTriangle(t) => {
                if t < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "cycle length must be at least 3, got {t}"
                    )));
                }
            }
            ForbiddenPattern::Path(p) => {
                if p < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "forbidden path needs at least 2 vertices, got {p}"
                    )));
                }
            }
            ForbiddenPattern::CompleteBipartite(s, t) => {
                if s < 1 || t < 1 {
                    return Err(Error::InvalidParameter(format!(
                        "complete bipartite sides must be positive, got ({s}, {t})"
                    )));
                }
            }
            ForbiddenPattern::Custom(ref g) => {
                if g.vertex_count() == 0 {
                    return Err(Error::InvalidParameter(
                        "custom pattern must have at least one vertex".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The pattern as an explicit graph.
    pub fn pattern_graph(&self) -> Result<Graph> {
        match *self {
            ForbiddenPattern::Cycle(t) => FamilySpec::Cycle { t }.construct(),
            ForbiddenPattern::Path(p) => FamilySpec::Path { n: p }.construct(),
            ForbiddenPattern::CtTriangle(t) => FamilySpec::CycleTriangle { t }.construct(),
            ForbiddenPattern::CompleteBipartite(s, t) => {
                FamilySpec::CompleteBipartite { s, t }.construct()
            }
            ForbiddenPattern::Custom(ref g) => Ok(*g),
        }
    }

    /// Does `g` contain this pattern as a subgraph? Cycle variants go
    /// through the dedicated detectors; this is the pruner's hot path.
    pub fn contained_in(&self, g: &Graph) -> Result<bool> {
        match *self {
            ForbiddenPattern::Cycle(t) => has_cycle(g, t),
            ForbiddenPattern::CtTriangle(t) => has_c_triangle(g, t),
            ForbiddenPattern::Path(p) => {
                if p > g.vertex_count() {
                    Ok(false)
                } else if g.vertex_count() <= PATH_DP_MAX_VERTICES {
                    Ok(longest_path_order(g)? >= p)
                } else {
                    let pat = self.pattern_graph()?;
                    Ok(contains_subgraph(g, &pat, MatchMode::Subgraph).is_some())
                }
            }
            _ => {
                let pat = self.pattern_graph()?;
                Ok(contains_subgraph(g, &pat, MatchMode::Subgraph).is_some())
            }
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ForbiddenPattern::Cycle(t) => write!(f, "cycle:{t}"),
            ForbiddenPattern::Path(p) => write!(f, "path:{p}"),
            ForbiddenPattern::CtTriangle(t) => write!(f, "c-triangle:{t}"),
            ForbiddenPattern::CompleteBipartite(s, t) => write!(f, "complete-bipartite:{s},{t}"),
            ForbiddenPattern::Custom(ref g) => write!(f, "g6:{}", to_graph6(g)),
        }
    }
}

/// What to enumerate: all graphs with `m` edges and no isolated vertices,
/// avoiding every forbidden pattern, vertex counts within `n_range`.
#[derive(Clone, Debug)]
pub struct EnumSpec {
    pub m: usize,
    /// Inclusive vertex-count range; `None` means 2..=m+1 for connected
    /// runs and 2..=2m when disconnected graphs are included.
    pub n_range: Option<(usize, usize)>,
    pub forbidden: Vec<ForbiddenPattern>,
    /// Restrict to connected graphs (the default).
    pub connected_only: bool,
    /// Declare that the run relies on the block argument to stand in for
    /// all graphs without isolated vertices; every forbidden pattern must
    /// then be 2-connected (a 2-connected pattern lies inside one block,
    /// so gluing components at a vertex preserves freeness).
    pub block_reduction: bool,
}

impl EnumSpec {
    pub fn new(m: usize) -> Self {
        EnumSpec {
            m,
            n_range: None,
            forbidden: Vec::new(),
            connected_only: true,
            block_reduction: false,
        }
    }

    pub fn forbid(mut self, pattern: ForbiddenPattern) -> Self {
        self.forbidden.push(pattern);
        self
    }

    pub fn vertex_range(mut self, lo: usize, hi: usize) -> Self {
        self.n_range = Some((lo, hi));
        self
    }

    pub fn include_disconnected(mut self) -> Self {
        self.connected_only = false;
        self
    }

    pub fn with_block_reduction(mut self) -> Self {
        self.block_reduction = true;
        self
    }

    pub fn resolved_n_range(&self) -> (usize, usize) {
        self.n_range.unwrap_or(if self.connected_only {
            (2, self.m + 1)
        } else {
            (2, 2 * self.m)
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::InvalidParameter(
                "edge count must be at least 1".into(),
            ));
        }
        let (lo, hi) = self.resolved_n_range();
        if lo < 1 || lo > hi {
            return Err(Error::InvalidParameter(format!(
                "bad vertex range {lo}..{hi}"
            )));
        }
        if hi > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertices",
                got: hi,
                limit: MAX_VERTICES,
            });
        }
        for pat in &self.forbidden {
            pat.validate()?;
        }
        if self.block_reduction {
            if !self.connected_only {
                return Err(Error::InvalidParameter(
                    "block reduction only applies to connected-only runs".into(),
                ));
            }
            for pat in &self.forbidden {
                if !pat.pattern_graph()?.is_biconnected() {
                    return Err(Error::NotBiconnected(pat.to_string()));
                }
            }
        }
        Ok(())
    }

    /// One-line parameter fingerprint, also the checkpoint header.
    pub fn describe(&self) -> String {
        let (lo, hi) = self.resolved_n_range();
        let pats: Vec<String> = self.forbidden.iter().map(|p| p.to_string()).collect();
        format!(
            "m={} n={}..{} connected={} block={} forbidden={}",
            self.m,
            lo,
            hi,
            self.connected_only,
            self.block_reduction,
            if pats.is_empty() {
                "-".to_string()
            } else {
                pats.join(";")
            }
        )
    }
}

/// Execution knobs, orthogonal to what is being enumerated.
#[derive(Clone, Debug, Default)]
pub struct EnumOptions {
    /// Worker threads for level expansion: 1 runs serially (the default
    /// via `Default`), 0 lets the runtime pick, anything else is exact.
    /// Output is identical regardless.
    pub jobs: usize,
    /// Level-granular resume file; on restart with identical parameters the
    /// completed levels are skipped. Connected-only runs.
    pub checkpoint: Option<PathBuf>,
    /// Permit m beyond EXHAUSTIVE_EDGE_LIMIT.
    pub allow_large: bool,
}

impl EnumOptions {
    pub fn serial() -> Self {
        EnumOptions::default()
    }
}

/// Outcome of an extremal search over an enumerated family.
#[derive(Clone, Debug)]
pub struct ExtremalRecord {
    /// Canonical form of the spectral-radius maximizer (smallest canonical
    /// key among exact ties).
    pub best: Graph,
    pub best_lambda: f64,
    /// Every class within 1e-9 of the maximum, canonical, sorted.
    pub ties: Vec<Graph>,
    /// Isomorphism classes examined.
    pub examined: u64,
    /// Classes per vertex count, ascending.
    pub per_n: Vec<(usize, u64)>,
}

const TIE_WINDOW: f64 = 1e-9;

fn contains_any(g: &Graph, pats: &[ForbiddenPattern]) -> Result<bool> {
    for p in pats {
        if p.contained_in(g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All admissible one-edge extensions of `g`, canonized.
fn children_of(
    g: &Graph,
    n_max: usize,
    forbidden: &[ForbiddenPattern],
) -> Result<Vec<(CanonKey, Graph)>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let push = |h: Graph, out: &mut Vec<(CanonKey, Graph)>| -> Result<()> {
        if !contains_any(&h, forbidden)? {
            let (form, key) = canonical_pair(&h);
            out.push((key, form));
        }
        Ok(())
    };
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                let mut h = *g;
                h.add_edge(u, v);
                push(h, &mut out)?;
            }
        }
    }
    if n < n_max {
        for u in 0..n {
            let mut h = g.with_vertex()?;
            h.add_edge(u, n);
            push(h, &mut out)?;
        }
    }
    Ok(out)
}

fn sort_dedup(mut v: Vec<(CanonKey, Graph)>) -> Vec<(CanonKey, Graph)> {
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    v.dedup_by(|a, b| a.0 == b.0);
    v
}

fn expand_level(
    frontier: &[(CanonKey, Graph)],
    n_max: usize,
    forbidden: &[ForbiddenPattern],
    pool: Option<&rayon::ThreadPool>,
) -> Result<Vec<(CanonKey, Graph)>> {
    let nested: Vec<Vec<(CanonKey, Graph)>> = match pool {
        None => {
            let mut all = Vec::with_capacity(frontier.len());
            for (_, g) in frontier {
                all.push(children_of(g, n_max, forbidden)?);
            }
            all
        }
        Some(pool) => pool.install(|| {
            use rayon::prelude::*;
            frontier
                .par_iter()
                .map(|(_, g)| children_of(g, n_max, forbidden))
                .collect::<Result<Vec<_>>>()
        })?,
    };
    Ok(sort_dedup(nested.into_iter().flatten().collect()))
}

const CHECKPOINT_MAGIC: &str = "specturan checkpoint v1";

fn write_checkpoint(
    path: &Path,
    header: &str,
    level: usize,
    frontier: &[(CanonKey, Graph)],
) -> Result<()> {
    let mut text = format!("{CHECKPOINT_MAGIC}\n{header}\nlevel={level}\n");
    for (_, g) in frontier {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn read_checkpoint(path: &Path, header: &str) -> Result<Option<(usize, Vec<(CanonKey, Graph)>)>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    if lines.next() != Some(CHECKPOINT_MAGIC) {
        return Err(Error::Checkpoint(format!(
            "{} is not a checkpoint file",
            path.display()
        )));
    }
    let found = lines.next().unwrap_or_default();
    if found != header {
        return Err(Error::Checkpoint(format!(
            "parameter mismatch: checkpoint has `{found}`, run wants `{header}`"
        )));
    }
    let level_line = lines.next().unwrap_or_default();
    let level: usize = level_line
        .strip_prefix("level=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Checkpoint(format!("bad level line `{level_line}`")))?;
    let mut frontier = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let g = from_graph6(line)?;
        frontier.push((canonical_key(&g), g));
    }
    Ok(Some((level, frontier)))
}

/// Grow connected classes level by level up to `m` edges. Returns the
/// frontier of every level 1..=m (sorted, canonical). Levels are empty once
/// the forbidden patterns exhaust the family.
fn grow_levels(
    spec: &EnumSpec,
    opts: &EnumOptions,
    pool: Option<&rayon::ThreadPool>,
) -> Result<Vec<Vec<(CanonKey, Graph)>>> {
    let (_, hi) = spec.resolved_n_range();
    let mut levels: Vec<Vec<(CanonKey, Graph)>> = vec![Vec::new(); spec.m + 1];
    let k2 = Graph::from_edges(2, &[(0, 1)])?;
    if hi >= 2 && !contains_any(&k2, &spec.forbidden)? {
        levels[1] = vec![(canonical_key(&k2), k2)];
    }
    let mut start = 1;
    // a checkpoint replaces the frontier at its recorded level; earlier
    // levels stay empty, so only connected-only runs may resume
    if spec.connected_only {
        if let Some(path) = &opts.checkpoint {
            if let Some((level, frontier)) = read_checkpoint(path, &spec.describe())? {
                if level > spec.m {
                    return Err(Error::Checkpoint(format!(
                        "checkpoint level {level} exceeds target edge count {}",
                        spec.m
                    )));
                }
                levels[level] = frontier;
                start = level;
            }
        }
    }
    for i in start..spec.m {
        levels[i + 1] = expand_level(&levels[i], hi, &spec.forbidden, pool)?;
        if spec.connected_only {
            if let Some(path) = &opts.checkpoint {
                write_checkpoint(path, &spec.describe(), i + 1, &levels[i + 1])?;
            }
        }
        if levels[i + 1].is_empty() {
            break;
        }
    }
    Ok(levels)
}

fn make_pool(jobs: usize) -> Result<Option<rayon::ThreadPool>> {
    if jobs == 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map(Some)
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// Assemble disconnected classes: multisets of at least two connected
/// components with edge counts summing to m. Each class corresponds to
/// exactly one multiset, so no global deduplication is needed. Patterns
/// that are themselves connected cannot straddle components, hence only
/// disconnected patterns get re-checked on the assembled graph.
fn compose_disconnected(
    levels: &[Vec<(CanonKey, Graph)>],
    spec: &EnumSpec,
    out: &mut Vec<(CanonKey, Graph)>,
) -> Result<()> {
    let (lo, hi) = spec.resolved_n_range();
    let mut cross_checks = Vec::new();
    for pat in &spec.forbidden {
        if !pat.pattern_graph()?.is_connected() {
            cross_checks.push(pat.clone());
        }
    }
    // choose components in nonincreasing (edge count, class index) order
    fn rec(
        levels: &[Vec<(CanonKey, Graph)>],
        remaining: usize,
        bound_e: usize,
        bound_idx: usize,
        acc: &mut Vec<Graph>,
        n_acc: usize,
        lo: usize,
        hi: usize,
        cross_checks: &[ForbiddenPattern],
        out: &mut Vec<(CanonKey, Graph)>,
    ) -> Result<()> {
        if remaining == 0 {
            if acc.len() >= 2 && n_acc >= lo {
                let mut g = acc[0];
                for piece in &acc[1..] {
                    g = g.disjoint_union(piece)?;
                }
                if !contains_any(&g, cross_checks)? {
                    let (form, key) = canonical_pair(&g);
                    out.push((key, form));
                }
            }
            return Ok(());
        }
        for e in (1..=remaining.min(bound_e)).rev() {
            let idx_cap = if e == bound_e {
                bound_idx
            } else {
                levels[e].len()
            };
            for idx in 0..idx_cap {
                let piece = &levels[e][idx].1;
                let n_next = n_acc + piece.vertex_count();
                if n_next > hi {
                    continue;
                }
                acc.push(*piece);
                rec(
                    levels,
                    remaining - e,
                    e,
                    idx + 1,
                    acc,
                    n_next,
                    lo,
                    hi,
                    cross_checks,
                    out,
                )?;
                acc.pop();
            }
        }
        Ok(())
    }
    let mut acc = Vec::new();
    let first_e = spec.m.saturating_sub(1);
    let first_idx = levels.get(first_e).map_or(0, |l| l.len());
    rec(
        levels, spec.m, first_e, first_idx, &mut acc, 0, lo, hi, &cross_checks, out,
    )
}

/// Visit the canonical form of every isomorphism class matching `spec`,
/// in ascending canonical-key order. Returns the class count.
pub fn enumerate_graphs(
    spec: &EnumSpec,
    opts: &EnumOptions,
    visitor: &mut dyn FnMut(&Graph),
) -> Result<u64> {
    spec.validate()?;
    if spec.m > EXHAUSTIVE_EDGE_LIMIT && !opts.allow_large {
        return Err(Error::CapacityExceeded {
            what: "edge count for exhaustive enumeration",
            got: spec.m,
            limit: EXHAUSTIVE_EDGE_LIMIT,
        });
    }
    let pool = make_pool(opts.jobs)?;
    let levels = grow_levels(spec, opts, pool.as_ref())?;
    let (lo, hi) = spec.resolved_n_range();
    let mut finals: Vec<(CanonKey, Graph)> = levels[spec.m]
        .iter()
        .filter(|(_, g)| {
            let n = g.vertex_count();
            n >= lo && n <= hi
        })
        .cloned()
        .collect();
    if !spec.connected_only {
        compose_disconnected(&levels, spec, &mut finals)?;
        finals = sort_dedup(finals);
    }
    for (_, g) in &finals {
        visitor(g);
    }
    Ok(finals.len() as u64)
}

/// Argmax of the spectral radius over the enumerated family.
pub fn max_spectral_radius(spec: &EnumSpec, opts: &EnumOptions) -> Result<ExtremalRecord> {
    let mut best_lambda = f64::NEG_INFINITY;
    let mut pool: Vec<(f64, CanonKey, Graph)> = Vec::new();
    let mut examined = 0u64;
    let mut per_n: BTreeMap<usize, u64> = BTreeMap::new();
    let mut first_err: Option<Error> = None;
    enumerate_graphs(spec, opts, &mut |g| {
        if first_err.is_some() {
            return;
        }
        examined += 1;
        *per_n.entry(g.vertex_count()).or_insert(0) += 1;
        match spectral_radius(g, DEFAULT_TOL) {
            Ok(lambda) => {
                if lambda > best_lambda {
                    best_lambda = lambda;
                    pool.retain(|(l, _, _)| *l >= best_lambda - TIE_WINDOW);
                }
                if lambda >= best_lambda - TIE_WINDOW {
                    pool.push((lambda, canonical_key(g), *g));
                }
            }
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    if pool.is_empty() {
        return Err(Error::EmptyFamily(spec.describe()));
    }
    pool.sort_by(|a, b| a.1.cmp(&b.1));
    let best = pool
        .iter()
        .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(b.1.cmp(&a.1)))
        .expect("nonempty");
    Ok(ExtremalRecord {
        best: best.2,
        best_lambda: best.0,
        ties: pool.iter().map(|(_, _, g)| *g).collect(),
        examined,
        per_n: per_n.into_iter().collect(),
    })
}

/// Largest x(x-1)/2 helper for the path-free edge bound.
fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Closed-form ceiling for edges of a connected graph on n vertices with no
/// path on k+1 vertices.
pub fn balister_bound(n: usize, k: usize) -> usize {
    let a = choose2(k - 1) + (n - k + 1);
    let c = (k + 1).div_ceil(2);
    let b = choose2(c) + (k - 1) / 2 * (n - c);
    a.max(b)
}

/// Grow connected classes under pruning until no class survives; the
/// family must be finite (the forbidden patterns together with `n_max`
/// bound the edge count). Returns one sorted level per edge count, last
/// level nonempty.
pub(crate) fn grow_until_empty(
    n_max: usize,
    forbidden: &[ForbiddenPattern],
) -> Result<Vec<Vec<(CanonKey, Graph)>>> {
    let mut levels: Vec<Vec<(CanonKey, Graph)>> = vec![Vec::new()];
    let k2 = Graph::from_edges(2, &[(0, 1)])?;
    if n_max < 2 || contains_any(&k2, forbidden)? {
        return Ok(levels);
    }
    levels.push(vec![(canonical_key(&k2), k2)]);
    loop {
        let next = expand_level(levels.last().unwrap(), n_max, forbidden, None)?;
        if next.is_empty() {
            return Ok(levels);
        }
        levels.push(next);
    }
}

/// Exhaustive maximum edge count over connected graphs on exactly n
/// vertices containing no path on k+1 vertices, with every extremal class.
pub fn balister_extremal(n: usize, k: usize) -> Result<(usize, Vec<Graph>)> {
    if k < 3 || n <= k || n > 9 {
        return Err(Error::InvalidParameter(format!(
            "supported range is 3 <= k < n <= 9, got n = {n}, k = {k}"
        )));
    }
    let levels = grow_until_empty(n, &[ForbiddenPattern::Path(k + 1)])?;
    let mut best: Option<(usize, Vec<Graph>)> = None;
    for (level, frontier) in levels.iter().enumerate() {
        let exact: Vec<Graph> = frontier
            .iter()
            .filter(|(_, g)| g.vertex_count() == n)
            .map(|(_, g)| *g)
            .collect();
        if !exact.is_empty() {
            best = Some((level, exact));
        }
    }
    best.ok_or_else(|| {
        Error::EmptyFamily(format!(
            "no connected graph on {n} vertices avoids the path on {} vertices",
            k + 1
        ))
    })
}
