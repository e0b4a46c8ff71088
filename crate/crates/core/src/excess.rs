//! Degree-capped spanning trees and m-tree-connected spanning subgraphs.
//!
//! The search keeps `H`, an independent set of the union of `m` graphic
//! matroids, with `d_H(v) ≤ b(v)` for a cap `b`, and grows it until it has
//! `m(n−1)` edges. When no edge fits directly, tight vertices are released by
//! swaps `H − f + a` that keep `H` independent, and chains of such swaps are
//! tried. The tight vertices that cannot be released are the candidate
//! certificate; it is evaluated exactly and only returned when it refutes the
//! hypothesis.

use crate::error::{Error, Result};
use crate::gen::rng;
use crate::graph::{Multigraph, SpanningSubgraph};
use crate::oracle::{check_hypothesis, Hypothesis, Verdict, HYPOTHESIS_CAP};
use crate::outcome::Outcome;
use crate::packing::{check_m, m_components, m_critical_reduce, pack_trees, ForestUnion, PackResult};
use crate::parity::ConnectivityKind;
use crate::ratio::{self, ceil_i64, frac, int, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

/// Integer degree target `h`, one entry per vertex.
pub type ExcessTarget = Vec<i64>;

fn check_len(g: &Multigraph, len: usize) -> Result<()> {
    let n = g.vertex_count();
    if len != n {
        return Err(Error::InvalidParameter(format!("expected {n} per-vertex values, got {len}")));
    }
    Ok(())
}

/// te(H, h) = Σ max{0, d_H(v) − h(v)}.
pub fn total_excess(g: &Multigraph, h: &SpanningSubgraph, target: &[i64]) -> Result<u64> {
    h.validate(g)?;
    check_len(g, target.len())?;
    Ok(h.degrees(g)
        .iter()
        .zip(target)
        .map(|(&d, &t)| (d as i64 - t).max(0) as u64)
        .sum())
}

/// How the forced subgraph enters the degree bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForestMode {
    /// `+ max{0, d_F(v) − m}`
    #[default]
    Plain,
    /// `+ d_F(v) − m`
    ForestException,
}

/// Target set, real degree function and slope of a degree-bound problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSpec {
    pub x: Vec<usize>,
    /// Indexed by vertex; entries outside `x` are ignored.
    #[serde(with = "ratio::serde_vec")]
    pub eta: Vec<Rational>,
    #[serde(with = "ratio::serde_str")]
    pub lambda: Rational,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forest: Option<SpanningSubgraph>,
}

impl DegreeSpec {
    /// Constant `eta` on every vertex.
    pub fn uniform(n: usize, eta: Rational, lambda: Rational, m: usize) -> Self {
        DegreeSpec { x: (0..n).collect(), eta: vec![eta; n], lambda, m, forest: None }
    }

    pub fn with_forest(mut self, f: SpanningSubgraph) -> Self {
        self.forest = Some(f);
        self
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        check_m(self.m)?;
        check_len(g, self.eta.len())?;
        let m = self.m as i64;
        if self.lambda < Rational::zero() || self.lambda > frac(1, m) {
            return Err(Error::InvalidParameter(format!(
                "lambda {} outside [0, 1/{m}]",
                ratio::format(&self.lambda)
            )));
        }
        let floor = int(m) * self.lambda + frac(m - 1, m);
        for &v in &self.x {
            g.check_vertex(v)?;
            if self.eta[v] <= floor {
                return Err(Error::InvalidParameter(format!(
                    "eta({v}) = {} must exceed {}",
                    ratio::format(&self.eta[v]),
                    ratio::format(&floor)
                )));
            }
        }
        if let Some(f) = &self.forest {
            f.validate(g)?;
        }
        Ok(())
    }

    fn in_x(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.x {
            mask[v] = true;
        }
        mask
    }

    /// ⌈mη(v) − m²λ⌉
    fn base(&self, v: usize) -> i64 {
        let m = int(self.m as i64);
        ceil_i64(&(m * self.eta[v] - m * m * self.lambda))
    }

    /// The target `h` for a forced subgraph with degrees `fdeg`.
    pub fn targets(&self, g: &Multigraph, mode: ForestMode, fdeg: &[usize]) -> ExcessTarget {
        let n = g.vertex_count();
        let inx = self.in_x(n);
        let m = self.m as i64;
        (0..n)
            .map(|v| {
                if !inx[v] {
                    return g.degree(v) as i64 + 1;
                }
                match mode {
                    ForestMode::Plain => self.base(v) - m.min(fdeg[v] as i64),
                    ForestMode::ForestException => self.base(v) - m,
                }
            })
            .collect()
    }

    /// Final per-vertex degree bound; `None` outside `x`.
    pub fn bounds(&self, g: &Multigraph, mode: ForestMode) -> Vec<Option<i64>> {
        let n = g.vertex_count();
        let inx = self.in_x(n);
        let fdeg = self.forest.as_ref().map(|f| f.degrees(g)).unwrap_or_else(|| vec![0; n]);
        let m = self.m as i64;
        (0..n)
            .map(|v| {
                inx[v].then(|| {
                    let d = fdeg[v] as i64;
                    match mode {
                        ForestMode::Plain => self.base(v) + (d - m).max(0),
                        ForestMode::ForestException => self.base(v) + d - m,
                    }
                })
            })
            .collect()
    }

    /// Whether `h` meets [`DegreeSpec::bounds`].
    pub fn meets_bounds(&self, g: &Multigraph, mode: ForestMode, h: &SpanningSubgraph) -> bool {
        let deg = h.degrees(g);
        self.bounds(g, mode)
            .iter()
            .zip(&deg)
            .all(|(b, &d)| b.is_none_or(|b| d as i64 <= b))
    }

    /// The inequality a certificate for this spec must refute.
    pub fn hypothesis(&self, tree: bool, mode: ForestMode) -> Hypothesis {
        let eta = self.eta.clone();
        let lambda = self.lambda;
        let forest = self.forest.clone().unwrap_or_default();
        match (tree, mode) {
            (true, ForestMode::Plain) => Hypothesis::OmegaGS { eta, lambda },
            (true, ForestMode::ForestException) => Hypothesis::OmegaGSF { eta, lambda, forest },
            (false, ForestMode::Plain) => Hypothesis::Sufficient { m: self.m, eta, lambda },
            (false, ForestMode::ForestException) => Hypothesis::FirstGen { m: self.m, eta, lambda, forest },
        }
    }
}

/// Budgets for the capped search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Extra runs with shuffled edge orders after the first.
    pub restarts: usize,
    /// Largest vertex count for the exhaustive fallback.
    pub exhaustive_vertices: usize,
    /// Node limit of the exhaustive fallback.
    pub node_budget: u64,
    /// Largest domain scanned for a violating set when the search stalls.
    pub certificate_domain: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 12,
            exhaustive_vertices: 12,
            node_budget: 2_000_000,
            certificate_domain: 16,
            seed: 0x5eed,
        }
    }
}

struct Stuck {
    edges: Vec<usize>,
    blocked: Vec<usize>,
}

enum Run {
    Full(Vec<usize>),
    Stuck(Stuck),
}

#[derive(PartialEq, Eq)]
enum Search {
    Found,
    Exhausted,
    Budget,
}

type Grown<'a> = (Vec<bool>, Vec<i64>, ForestUnion<'a>);

struct Capped<'a> {
    g: &'a Multigraph,
    m: usize,
    caps: Vec<i64>,
    forced: Vec<bool>,
    goal: usize,
}

impl<'a> Capped<'a> {
    fn new(g: &'a Multigraph, m: usize, forced: &SpanningSubgraph, caps: Vec<i64>) -> Result<Self> {
        let mut mask = vec![false; g.edge_count()];
        for &e in forced.edges() {
            mask[e] = true;
        }
        let goal = m * g.vertex_count().saturating_sub(1);
        let engine = Capped { g, m, caps, forced: mask, goal };
        if engine.union_of(forced.edges().iter().copied()).is_none() {
            return Err(Error::InvalidParameter("forced edges do not fit in m forests".into()));
        }
        Ok(engine)
    }

    fn union_of(&self, edges: impl Iterator<Item = usize>) -> Option<ForestUnion<'a>> {
        let mut fu = ForestUnion::new(self.g, self.m);
        for e in edges {
            fu.try_insert(e).ok()?;
        }
        Some(fu)
    }

    fn start(&self) -> (Vec<bool>, Vec<i64>, ForestUnion<'a>) {
        let g = self.g;
        let mut deg = vec![0i64; g.vertex_count()];
        for e in (0..g.edge_count()).filter(|&e| self.forced[e]) {
            let (u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        let fu = self
            .union_of((0..g.edge_count()).filter(|&e| self.forced[e]))
            .expect("checked in new");
        (self.forced.clone(), deg, fu)
    }

    fn run(&self, order: &[usize]) -> Run {
        let g = self.g;
        let n = g.vertex_count();
        let (mut in_h, mut deg, mut fu) = self.start();
        loop {
            for &e in order {
                if in_h[e] {
                    continue;
                }
                let (u, v) = g.edge(e);
                if deg[u] < self.caps[u] && deg[v] < self.caps[v] && fu.try_insert(e).is_ok() {
                    in_h[e] = true;
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            if fu.size() >= self.goal {
                return Run::Full(fu.edges());
            }
            let circuits: Vec<Option<Vec<usize>>> = (0..g.edge_count())
                .map(|e| if in_h[e] { None } else { fu.circuit(e) })
                .collect();
            let mut blocked: Vec<bool> = (0..n).map(|v| deg[v] >= self.caps[v]).collect();
            let mut pending: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut changed = true;
            while changed {
                changed = false;
                for &a in order {
                    let (x, y) = g.edge(a);
                    if in_h[a] || blocked[x] || blocked[y] {
                        continue;
                    }
                    let Some(c) = &circuits[a] else { continue };
                    for &f in c {
                        if self.forced[f] {
                            continue;
                        }
                        let (p, q) = g.edge(f);
                        for z in [p, q] {
                            if blocked[z] {
                                blocked[z] = false;
                                pending[z] = Some((f, a));
                                changed = true;
                            }
                        }
                    }
                }
            }
            let grown = order.iter().find_map(|&a| {
                let (x, y) = g.edge(a);
                if in_h[a] || circuits[a].is_some() || blocked[x] || blocked[y] {
                    return None;
                }
                self.chain(a, &in_h, &deg, &pending)
            });
            match grown {
                Some((h2, d2, fu2)) => {
                    in_h = h2;
                    deg = d2;
                    fu = fu2;
                }
                None => {
                    return Run::Stuck(Stuck {
                        edges: fu.edges(),
                        blocked: (0..n).filter(|&v| blocked[v]).collect(),
                    })
                }
            }
        }
    }

    /// Adds `a` and repairs overfull vertices with their release swaps.
    fn chain(&self, a: usize, in_h: &[bool], deg: &[i64], pending: &[Option<(usize, usize)>]) -> Option<Grown<'a>> {
        let g = self.g;
        let n = g.vertex_count();
        let mut h = in_h.to_vec();
        let mut d = deg.to_vec();
        let flip = |h: &mut Vec<bool>, d: &mut Vec<i64>, e: usize, add: bool| {
            let (u, v) = g.edge(e);
            let delta = if add { 1 } else { -1 };
            h[e] = add;
            d[u] += delta;
            d[v] += delta;
        };
        flip(&mut h, &mut d, a, true);
        let mut used = vec![false; n];
        while let Some(v) = (0..n).find(|&v| d[v] > self.caps[v]) {
            if used[v] {
                return None;
            }
            used[v] = true;
            let (f, b) = pending[v]?;
            if !h[f] || h[b] {
                return None;
            }
            flip(&mut h, &mut d, f, false);
            flip(&mut h, &mut d, b, true);
        }
        let fu = self.union_of((0..g.edge_count()).filter(|&e| h[e]))?;
        Some((h, d, fu))
    }

    /// `Some(Some(edges))` when found, `Some(None)` when none exists,
    /// `None` when the node budget runs out.
    fn exhaustive(&self, budget: u64) -> Option<Option<Vec<usize>>> {
        let g = self.g;
        let (_, mut deg, mut fu) = self.start();
        if (0..g.vertex_count()).any(|v| deg[v] > self.caps[v]) {
            return Some(None);
        }
        let free: Vec<usize> = (0..g.edge_count()).filter(|&e| !self.forced[e]).collect();
        let mut remaining = vec![0i64; g.vertex_count()];
        for &e in &free {
            let (u, v) = g.edge(e);
            remaining[u] += 1;
            remaining[v] += 1;
        }
        let mut nodes = 0u64;
        match self.backtrack(&free, 0, &mut fu, &mut deg, &mut remaining, &mut nodes, budget) {
            Search::Found => Some(Some(fu.edges())),
            Search::Exhausted => Some(None),
            Search::Budget => None,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        &self,
        free: &[usize],
        i: usize,
        fu: &mut ForestUnion<'a>,
        deg: &mut [i64],
        remaining: &mut [i64],
        nodes: &mut u64,
        budget: u64,
    ) -> Search {
        if fu.size() >= self.goal {
            return Search::Found;
        }
        *nodes += 1;
        if *nodes > budget {
            return Search::Budget;
        }
        if fu.size() + (free.len() - i) < self.goal {
            return Search::Exhausted;
        }
        if (0..deg.len()).any(|v| deg[v] + remaining[v] < self.m as i64) {
            return Search::Exhausted;
        }
        let e = free[i];
        let (u, v) = self.g.edge(e);
        remaining[u] -= 1;
        remaining[v] -= 1;
        if deg[u] < self.caps[u] && deg[v] < self.caps[v] && fu.try_insert(e).is_ok() {
            deg[u] += 1;
            deg[v] += 1;
            let r = self.backtrack(free, i + 1, fu, deg, remaining, nodes, budget);
            if r != Search::Exhausted {
                return r;
            }
            deg[u] -= 1;
            deg[v] -= 1;
            fu.remove(e);
        }
        let r = self.backtrack(free, i + 1, fu, deg, remaining, nodes, budget);
        remaining[u] += 1;
        remaining[v] += 1;
        r
    }
}

fn edge_orders<'a>(g: &'a Multigraph, cfg: &SearchConfig) -> impl Iterator<Item = Vec<usize>> + 'a {
    let mut r = rng(cfg.seed);
    (0..=cfg.restarts).map(move |i| {
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        if i > 0 {
            order.shuffle(&mut r);
        }
        order
    })
}

/// Capped basis containing `forced`, a refuting set for `hyp`, or neither.
pub(crate) fn capped_search(
    g: &Multigraph,
    m: usize,
    forced: &SpanningSubgraph,
    caps: Vec<i64>,
    hyp: Option<(&Hypothesis, &[usize])>,
    cfg: &SearchConfig,
) -> Result<Outcome<SpanningSubgraph>> {
    let engine = Capped::new(g, m, forced, caps)?;
    for order in edge_orders(g, cfg) {
        match engine.run(&order) {
            Run::Full(edges) => return Ok(Outcome::Solution(SpanningSubgraph::from_ids(edges))),
            Run::Stuck(stuck) => {
                if let Some((h, _)) = hyp {
                    let cert = h.evaluate(g, &stuck.blocked)?;
                    if cert.is_violation() {
                        return Ok(Outcome::Certificate(cert));
                    }
                }
            }
        }
    }
    let mut proven_absent = false;
    if g.vertex_count() <= cfg.exhaustive_vertices {
        match engine.exhaustive(cfg.node_budget) {
            Some(Some(edges)) => return Ok(Outcome::Solution(SpanningSubgraph::from_ids(edges))),
            Some(None) => proven_absent = true,
            None => {}
        }
    }
    if let Some((h, domain)) = hyp {
        let limit = if proven_absent { HYPOTHESIS_CAP } else { cfg.certificate_domain };
        if domain.len() <= limit {
            if let Verdict::Violated(cert) = check_hypothesis(g, h, domain)? {
                return Ok(Outcome::Certificate(cert));
            }
        }
    }
    if proven_absent {
        Ok(Outcome::Inconclusive("no subgraph meets the caps and no refuting set was found".into()))
    } else {
        Ok(Outcome::Inconclusive("search budget exhausted".into()))
    }
}

fn bounded_core(
    g: &Multigraph,
    spec: &DegreeSpec,
    mode: ForestMode,
    tree: bool,
    cfg: &SearchConfig,
) -> Result<Outcome<SpanningSubgraph>> {
    let f = spec.forest.clone().unwrap_or_default();
    let reduced = m_critical_reduce(g, &f, spec.m)?;
    let fdeg = reduced.degrees(g);
    let caps: Vec<i64> = spec
        .targets(g, mode, &fdeg)
        .iter()
        .zip(&fdeg)
        .map(|(&h, &d)| h + d as i64)
        .collect();
    let hyp = spec.hypothesis(tree, mode);
    let out = capped_search(g, spec.m, &reduced, caps, Some((&hyp, &spec.x)), cfg)?;
    let out = out.map(|h| h.union(&f));
    if let Outcome::Solution(h) = &out {
        debug_assert!(spec.meets_bounds(g, mode, h));
    }
    Ok(out)
}

/// Spanning tree containing `spec.forest` within the per-vertex bound of
/// `mode`, or a set refuting the corresponding hypothesis.
pub fn bounded_spanning_tree(g: &Multigraph, spec: &DegreeSpec, mode: ForestMode) -> Result<Outcome<SpanningSubgraph>> {
    bounded_spanning_tree_with(g, spec, mode, &SearchConfig::default())
}

pub fn bounded_spanning_tree_with(
    g: &Multigraph,
    spec: &DegreeSpec,
    mode: ForestMode,
    cfg: &SearchConfig,
) -> Result<Outcome<SpanningSubgraph>> {
    if spec.m != 1 {
        return Err(Error::InvalidParameter("spanning trees need m = 1".into()));
    }
    spec.validate(g)?;
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(f) = &spec.forest {
        if !f.is_forest(g) {
            return Err(Error::NotForest);
        }
    }
    bounded_core(g, spec, mode, true, cfg)
}

/// m-tree-connected spanning subgraph containing `spec.forest` within the
/// bound of `mode`, a refuting set, or a deficient partition of `g`.
pub fn bounded_m_subgraph(g: &Multigraph, spec: &DegreeSpec, mode: ForestMode) -> Result<Outcome<SpanningSubgraph>> {
    bounded_m_subgraph_with(g, spec, mode, &SearchConfig::default())
}

pub fn bounded_m_subgraph_with(
    g: &Multigraph,
    spec: &DegreeSpec,
    mode: ForestMode,
    cfg: &SearchConfig,
) -> Result<Outcome<SpanningSubgraph>> {
    spec.validate(g)?;
    if let PackResult::Deficient(d) = pack_trees(g, spec.m)? {
        return Ok(Outcome::Deficient(d));
    }
    bounded_core(g, spec, mode, false, cfg)
}

/// m-tree-connected spanning subgraph `H ⊇ F` with `d_H ≤ ⌈mη⌉ + d_F`.
pub fn tough_enough_subgraph(
    g: &Multigraph,
    m: usize,
    c: i64,
    eta: &[Rational],
    f: &SpanningSubgraph,
) -> Result<Outcome<SpanningSubgraph>> {
    check_m(m)?;
    check_len(g, eta.len())?;
    if c < 2 {
        return Err(Error::InvalidParameter("c must be at least 2".into()));
    }
    if eta.iter().any(|e| *e < Rational::zero()) {
        return Err(Error::InvalidParameter("eta must be nonnegative".into()));
    }
    f.validate(g)?;
    if let PackResult::Deficient(d) = pack_trees(g, m)? {
        return Ok(Outcome::Deficient(d));
    }
    let reduced = m_critical_reduce(g, f, m)?;
    let fdeg = reduced.degrees(g);
    let mm = int(m as i64);
    let caps: Vec<i64> = (0..g.vertex_count()).map(|v| ceil_i64(&(mm * eta[v])) + fdeg[v] as i64).collect();
    let hyp = Hypothesis::ToughEnough { m, c, eta: eta.to_vec() };
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let out = capped_search(g, m, &reduced, caps, Some((&hyp, &all)), &SearchConfig::default())?;
    Ok(out.map(|h| h.union(f)))
}

/// A locally optimal subgraph with its excess and a set meeting the
/// structural conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinExcess {
    pub subgraph: SpanningSubgraph,
    pub excess: u64,
    #[serde(rename = "S")]
    pub set: Vec<usize>,
}

fn omega_after(g: &Multigraph, keep: impl Iterator<Item = usize>, m: usize) -> Result<Rational> {
    let ids: Vec<usize> = keep.collect();
    let sub = g.edge_subgraph(&ids)?;
    if m == 1 {
        Ok(int(sub.graph.component_count() as i64))
    } else {
        Ok(m_components(&sub.graph, m)?.omega)
    }
}

/// Checks the three conditions on `s` for `h ⊇ f` against `target`
/// (which already includes `d_F`):
/// Ω_m(G∖[S,F]) = Ω_m(H∖[S,F]); every overfull vertex is in `s`;
/// `d_H ≥ target` on `s`.
pub fn excess_conditions_hold(
    g: &Multigraph,
    m: usize,
    h: &SpanningSubgraph,
    f: &SpanningSubgraph,
    target: &[i64],
    s: &[usize],
) -> Result<bool> {
    check_m(m)?;
    check_len(g, target.len())?;
    h.validate(g)?;
    f.validate(g)?;
    let mask = g.vertex_mask(s)?;
    let deg = h.degrees(g);
    for v in 0..g.vertex_count() {
        let d = deg[v] as i64;
        if (d > target[v] && !mask[v]) || (mask[v] && d < target[v]) {
            return Ok(false);
        }
    }
    let keeps = |e: usize| {
        let (u, v) = g.edge(e);
        f.contains(e) || (!mask[u] && !mask[v])
    };
    let lhs = omega_after(g, (0..g.edge_count()).filter(|&e| keeps(e)), m)?;
    let rhs = omega_after(g, h.edges().iter().copied().filter(|&e| keeps(e)), m)?;
    Ok(lhs == rhs)
}

fn te_of(deg: &[i64], target: &[i64]) -> i64 {
    deg.iter().zip(target).map(|(&d, &t)| (d - t).max(0)).sum()
}

/// Minimally m-tree-connected `H ⊇ F` that no single exchange improves,
/// with `te(H, h + d_F)` and a set satisfying [`excess_conditions_hold`].
pub fn min_excess_m_subgraph(
    g: &Multigraph,
    m: usize,
    h: &[i64],
    f: Option<&SpanningSubgraph>,
) -> Result<Outcome<MinExcess>> {
    check_m(m)?;
    check_len(g, h.len())?;
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    let f = f.cloned().unwrap_or_default();
    f.validate(g)?;
    if let PackResult::Deficient(d) = pack_trees(g, m)? {
        return Ok(Outcome::Deficient(d));
    }
    let reduced = m_critical_reduce(g, &f, m)?;
    let fdeg = reduced.degrees(g);
    let target: Vec<i64> = h.iter().zip(&fdeg).map(|(&t, &d)| t + d as i64).collect();
    let cfg = SearchConfig::default();
    let engine = Capped::new(g, m, &reduced, target.clone())?;
    let mut best: Option<Vec<usize>> = None;
    for order in edge_orders(g, &cfg) {
        match engine.run(&order) {
            Run::Full(edges) => {
                best = Some(edges);
                break;
            }
            Run::Stuck(stuck) => {
                if best.as_ref().is_none_or(|b| b.len() < stuck.edges.len()) {
                    best = Some(stuck.edges);
                }
            }
        }
    }
    let start = best.unwrap_or_default();
    let mut fu = engine.union_of(start.iter().copied()).expect("engine output is independent");
    for e in 0..g.edge_count() {
        if fu.size() >= engine.goal {
            break;
        }
        let _ = fu.try_insert(e);
    }
    let mut in_h = vec![false; g.edge_count()];
    let mut deg = vec![0i64; g.vertex_count()];
    for e in fu.edges() {
        let (u, v) = g.edge(e);
        in_h[e] = true;
        deg[u] += 1;
        deg[v] += 1;
    }
    loop {
        let current = te_of(&deg, &target);
        if current == 0 {
            break;
        }
        let mut best_move: Option<(i64, usize, usize)> = None;
        for a in (0..g.edge_count()).filter(|&a| !in_h[a]) {
            let Some(circuit) = fu.circuit(a) else { continue };
            let (x, y) = g.edge(a);
            for &r in circuit.iter().filter(|&&r| !reduced.contains(r)) {
                let (p, q) = g.edge(r);
                let mut d = deg.clone();
                d[x] += 1;
                d[y] += 1;
                d[p] -= 1;
                d[q] -= 1;
                let t = te_of(&d, &target);
                if t < current && best_move.is_none_or(|(b, _, _)| t < b) {
                    best_move = Some((t, a, r));
                }
            }
        }
        let Some((_, a, r)) = best_move else { break };
        let (x, y) = g.edge(a);
        let (p, q) = g.edge(r);
        fu.remove(r);
        in_h[r] = false;
        fu.try_insert(a).expect("exchange keeps independence");
        in_h[a] = true;
        deg[x] += 1;
        deg[y] += 1;
        deg[p] -= 1;
        deg[q] -= 1;
    }
    let sub = SpanningSubgraph::from_ids(fu.edges());
    let excess = te_of(&deg, &target) as u64;
    let n = g.vertex_count();
    let over: Vec<usize> = (0..n).filter(|&v| deg[v] > target[v]).collect();
    let tight: Vec<usize> = (0..n).filter(|&v| deg[v] == target[v]).collect();
    if tight.len() > HYPOTHESIS_CAP {
        return Ok(Outcome::Inconclusive("too many tight vertices to search for a set".into()));
    }
    for mask in 0u64..(1 << tight.len()) {
        let mut s = over.clone();
        s.extend((0..tight.len()).filter(|&i| mask >> i & 1 == 1).map(|i| tight[i]));
        s.sort_unstable();
        if excess_conditions_hold(g, m, &sub, &reduced, &target, &s)? {
            return Ok(Outcome::Solution(MinExcess { subgraph: sub.union(&f), excess, set: s }));
        }
    }
    Ok(Outcome::Inconclusive("local optimum without a certifying set".into()))
}

/// Spanning tree `T ⊇ F` that no single exchange improves, with
/// `te(T, h + d_F)` and a set satisfying the structural conditions.
pub fn min_excess_spanning_tree(g: &Multigraph, f: &SpanningSubgraph, h: &[i64]) -> Result<Outcome<MinExcess>> {
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    f.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !f.is_forest(g) {
        return Err(Error::NotForest);
    }
    min_excess_m_subgraph(g, 1, h, Some(f))
}

/// Graph class whose standard degree bound [`derive_spec`] produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpecKind {
    KEdgeConnected { k: usize, m: usize, u: Option<usize> },
    KTreeConnected { k: usize, m: usize, u: Option<usize> },
    IndependentX { k: usize, m: usize, connectivity: ConnectivityKind, x: Vec<usize>, u: Option<usize> },
    /// `Ω_m(G∖S) ≤ (n/m)|S| + 2`; gives Δ(H) ≤ 2m + n.
    Toughness { n: usize, m: usize },
}

/// The `(η, λ, X)` behind the standard degree bounds of highly connected graphs.
///
/// Connectivity of `g` is assumed, not checked.
pub fn derive_spec(g: &Multigraph, kind: &SpecKind) -> Result<DegreeSpec> {
    let n = g.vertex_count();
    let d = |v: usize| int(g.degree(v) as i64);
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(what.to_string()))
        }
    };
    let spec = match kind {
        SpecKind::KEdgeConnected { k, m, u } => {
            need(*m >= 1 && *k >= 2 * m, "edge-connected route needs k >= 2m")?;
            let (k, m) = (*k as i64, *m as i64);
            let mut eta: Vec<Rational> = (0..n).map(|v| d(v) / k + int(2)).collect();
            if let Some(u) = *u {
                g.check_vertex(u)?;
                eta[u] = (d(u) + int(2 * m)) / k - frac(k - 1, k * m);
            }
            DegreeSpec { x: (0..n).collect(), eta, lambda: frac(2, k), m: m as usize, forest: None }
        }
        SpecKind::KTreeConnected { k, m, u } => {
            need(*m >= 1 && *k >= *m, "tree-connected route needs k >= m")?;
            let (k, m) = (*k as i64, *m as i64);
            let mut eta: Vec<Rational> = (0..n).map(|v| d(v) / k + int(1)).collect();
            if let Some(u) = *u {
                g.check_vertex(u)?;
                eta[u] = (d(u) + int(m)) / k - frac(k - 1, k * m);
            }
            DegreeSpec { x: (0..n).collect(), eta, lambda: frac(1, k), m: m as usize, forest: None }
        }
        SpecKind::IndependentX { k, m, connectivity, x, u } => {
            match connectivity {
                ConnectivityKind::EdgeConnected => need(*m >= 1 && *k >= 2 * m, "edge-connected route needs k >= 2m")?,
                ConnectivityKind::TreeConnected => need(*m >= 1 && *k >= *m, "tree-connected route needs k >= m")?,
            }
            let mask = g.vertex_mask(x)?;
            if g.edges().iter().any(|&(a, b)| mask[a] && mask[b]) {
                return Err(Error::NotIndependent);
            }
            let (k, m) = (*k as i64, *m as i64);
            let shift = match connectivity {
                ConnectivityKind::EdgeConnected => int(1),
                ConnectivityKind::TreeConnected => int(0),
            };
            let mut eta: Vec<Rational> = (0..n).map(|v| d(v) / k + shift + int(1)).collect();
            if let Some(u) = *u {
                g.check_vertex(u)?;
                eta[u] = d(u) / k - frac(k - 1, k * m) + int(1);
            }
            let mut x = x.clone();
            x.sort_unstable();
            x.dedup();
            DegreeSpec { x, eta, lambda: frac(1, m), m: m as usize, forest: None }
        }
        SpecKind::Toughness { n: t, m } => {
            need(*m >= 1 && *t >= 1, "toughness route needs n >= 1 and m >= 1")?;
            let eta = int(2) + frac(*t as i64, *m as i64);
            DegreeSpec::uniform(n, eta, Rational::zero(), *m)
        }
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{circulant, complete, cycle, star};
    use crate::packing::is_m_tree_connected;

    fn unwrap_solution<T: std::fmt::Debug>(o: Outcome<T>) -> T {
        match o {
            Outcome::Solution(t) => t,
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn excess_examples() {
        let k13 = star(3);
        let all = SpanningSubgraph::full(&k13);
        assert_eq!(total_excess(&k13, &all, &[1; 4]).unwrap(), 2);
        assert_eq!(total_excess(&k13, &all, &[3; 4]).unwrap(), 0);
        let c4 = cycle(4);
        assert_eq!(total_excess(&c4, &SpanningSubgraph::full(&c4), &[2; 4]).unwrap(), 0);
    }

    #[test]
    fn min_excess_trees() {
        let k13 = star(3);
        let r = unwrap_solution(min_excess_spanning_tree(&k13, &SpanningSubgraph::empty(), &[2; 4]).unwrap());
        assert_eq!(r.excess, 1);
        assert_eq!(r.set, vec![0]);
        assert_eq!(r.subgraph, SpanningSubgraph::full(&k13));
        let c4 = cycle(4);
        let r = unwrap_solution(min_excess_spanning_tree(&c4, &SpanningSubgraph::empty(), &[2; 4]).unwrap());
        assert_eq!(r.excess, 0);
        assert!(r.set.is_empty());
        assert!(r.subgraph.is_spanning_tree(&c4));
    }

    #[test]
    fn min_excess_tree_rejects_bad_input() {
        let disconnected = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            min_excess_spanning_tree(&disconnected, &SpanningSubgraph::empty(), &[1; 4]),
            Err(Error::Disconnected)
        ));
        let k3 = complete(3);
        assert!(matches!(
            min_excess_spanning_tree(&k3, &SpanningSubgraph::full(&k3), &[1; 3]),
            Err(Error::NotForest)
        ));
    }

    #[test]
    fn min_excess_m_examples() {
        let k4 = complete(4);
        let r = unwrap_solution(min_excess_m_subgraph(&k4, 2, &[3; 4], None).unwrap());
        assert_eq!(r.subgraph, SpanningSubgraph::full(&k4));
        assert_eq!(r.excess, 0);
        assert!(r.set.is_empty());

        let dc4 = cycle(4).doubled();
        let r = unwrap_solution(min_excess_m_subgraph(&dc4, 2, &[2; 4], None).unwrap());
        assert_eq!(r.excess, 4);
        assert!(is_m_tree_connected(&r.subgraph.to_graph(&dc4).graph, 2));
        let all: Vec<usize> = (0..4).collect();
        assert!(excess_conditions_hold(&dc4, 2, &r.subgraph, &SpanningSubgraph::empty(), &[2; 4], &all).unwrap());
        assert!(excess_conditions_hold(&dc4, 2, &r.subgraph, &SpanningSubgraph::empty(), &[2; 4], &r.set).unwrap());
    }

    #[test]
    fn bounded_tree_examples() {
        let k13 = star(3);
        let spec = DegreeSpec::uniform(4, int(3), int(0), 1);
        let t = unwrap_solution(bounded_spanning_tree(&k13, &spec, ForestMode::Plain).unwrap());
        assert_eq!(t, SpanningSubgraph::full(&k13));

        let spec = DegreeSpec::uniform(4, int(2), int(0), 1);
        match bounded_spanning_tree(&k13, &spec, ForestMode::Plain).unwrap() {
            Outcome::Certificate(c) => {
                assert_eq!(c.set, vec![0]);
                assert_eq!(c.lhs, int(3));
                assert!(c.is_violation());
            }
            other => panic!("expected a certificate, got {other:?}"),
        }

        let c4 = cycle(4);
        let spec = DegreeSpec::uniform(4, int(2), int(1), 1);
        match bounded_spanning_tree(&c4, &spec, ForestMode::Plain).unwrap() {
            Outcome::Certificate(c) => {
                assert!(c.is_violation());
                let again = spec.hypothesis(true, ForestMode::Plain).evaluate(&c4, &c.set).unwrap();
                assert_eq!(again, c);
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn bounded_tree_keeps_forest() {
        let k5 = complete(5);
        let f = SpanningSubgraph::new(&k5, [0, 9]).unwrap();
        let spec = DegreeSpec::uniform(5, int(2), int(0), 1).with_forest(f.clone());
        for mode in [ForestMode::Plain, ForestMode::ForestException] {
            let t = unwrap_solution(bounded_spanning_tree(&k5, &spec, mode).unwrap());
            assert!(t.is_spanning_tree(&k5));
            assert!(f.is_subset_of(&t));
            assert!(spec.meets_bounds(&k5, mode, &t));
        }
    }

    #[test]
    fn bounded_m_examples() {
        let k4 = complete(4);
        let spec = DegreeSpec::uniform(4, frac(5, 2), int(0), 2);
        let h = unwrap_solution(bounded_m_subgraph(&k4, &spec, ForestMode::Plain).unwrap());
        assert_eq!(h, SpanningSubgraph::full(&k4));

        let c8 = circulant(8, &[1, 2]);
        let spec = derive_spec(&c8, &SpecKind::KEdgeConnected { k: 4, m: 2, u: None }).unwrap();
        let h = unwrap_solution(bounded_m_subgraph(&c8, &spec, ForestMode::Plain).unwrap());
        let hg = h.to_graph(&c8).graph;
        assert!(is_m_tree_connected(&hg, 2));
        assert!(hg.max_degree() <= 4);

        let spec = derive_spec(&c8, &SpecKind::KEdgeConnected { k: 4, m: 2, u: Some(3) }).unwrap();
        let h = unwrap_solution(bounded_m_subgraph(&c8, &spec, ForestMode::Plain).unwrap());
        assert!(is_m_tree_connected(&h.to_graph(&c8).graph, 2));
        assert_eq!(h.degree(&c8, 3), 2);
    }

    #[test]
    fn bounded_m_deficient() {
        let c5 = cycle(5);
        let spec = DegreeSpec::uniform(5, int(3), int(0), 2);
        assert!(matches!(bounded_m_subgraph(&c5, &spec, ForestMode::Plain).unwrap(), Outcome::Deficient(_)));
    }

    #[test]
    fn derive_spec_examples() {
        let g = complete(4);
        let s = derive_spec(&g, &SpecKind::KEdgeConnected { k: 3, m: 1, u: None }).unwrap();
        assert_eq!(s.lambda, frac(2, 3));
        assert!(s.eta.iter().all(|e| *e == int(3) / 3 + int(2)));

        let s = derive_spec(&g, &SpecKind::KTreeConnected { k: 2, m: 2, u: None }).unwrap();
        assert_eq!(s.lambda, frac(1, 2));
        assert!(s.eta.iter().all(|e| *e == frac(3, 2) + int(1)));

        for m in 1..4 {
            let s = derive_spec(&g, &SpecKind::Toughness { n: 1, m }).unwrap();
            assert_eq!(s.lambda, int(0));
            assert!(s.eta.iter().all(|e| *e == int(2) + frac(1, m as i64)));
        }
        assert!(derive_spec(&g, &SpecKind::KEdgeConnected { k: 3, m: 2, u: None }).is_err());
    }

    #[test]
    fn derived_bounds_match_closed_forms() {
        let g = circulant(9, &[1, 2, 3]);
        for (k, m) in [(2, 1), (4, 2), (6, 3), (3, 1)] {
            let s = derive_spec(&g, &SpecKind::KEdgeConnected { k, m, u: Some(0) }).unwrap();
            let b = s.bounds(&g, ForestMode::Plain);
            let (k, m) = (k as i64, m as i64);
            let d = 6i64;
            assert_eq!(b[0], Some(m * d / k));
            assert_eq!(b[1], Some((m * (d - 2 * m) + k - 1).div_euclid(k) + 2 * m));
        }
        let x = vec![0, 4];
        let s = derive_spec(
            &g,
            &SpecKind::IndependentX { k: 3, m: 1, connectivity: ConnectivityKind::TreeConnected, x: x.clone(), u: None },
        )
        .unwrap();
        assert!(s.bounds(&g, ForestMode::Plain).iter().enumerate().all(|(v, b)| {
            if x.contains(&v) {
                *b == Some(2)
            } else {
                b.is_none()
            }
        }));
    }
}
