//! Connected factors built from trees, factors and parity forests.

use crate::error::{Error, Result};
use crate::excess::{bounded_m_subgraph, bounded_spanning_tree, derive_spec, tough_enough_subgraph, DegreeSpec, ForestMode, SpecKind};
use crate::graph::{label_components, Multigraph, SpanningSubgraph};
use crate::oracle::{check_hypothesis, Hypothesis, Verdict};
use crate::outcome::Outcome;
use crate::packing::{is_m_tree_connected, m_components, pack_trees, PackResult};
use crate::parity::{bounded_parity_forest, ConnectivityKind};
use crate::ratio::{frac, int, Rational};
use crate::walks::f_trail;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Degree window of a factor: `lower ≤ d ≤ upper` pointwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl FactorSpec {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidParameter("bounds differ in length".into()));
        }
        if lower.iter().zip(&upper).any(|(&l, &u)| l < 0 || u < 1 || l > u) {
            return Err(Error::InvalidParameter("need 0 <= lower <= upper and upper >= 1".into()));
        }
        Ok(FactorSpec { lower, upper })
    }

    /// `{r, r+width}` on `n` vertices.
    pub fn interval(n: usize, r: i64, width: i64) -> Result<Self> {
        Self::new(vec![r; n], vec![r + width; n])
    }

    pub fn admits(&self, g: &Multigraph, h: &SpanningSubgraph) -> bool {
        let deg = h.degrees(g);
        deg.len() == self.lower.len()
            && deg.iter().enumerate().all(|(v, &d)| self.lower[v] <= d as i64 && d as i64 <= self.upper[v])
    }
}

/// Connected subgraph of `T ∪ F` and the matching of `F` it was built around.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorExtension {
    pub subgraph: SpanningSubgraph,
    pub matching: SpanningSubgraph,
}

/// Cut vertices of the multigraph `(n, edges)`.
pub fn cut_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut clock = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0;
        // (vertex, edge used to enter it, next adjacency index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, via, ref mut next)) = stack.last_mut() {
            if let Some(&(w, e)) = adj[v].get(*next) {
                *next += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        cut[root] = root_children > 1;
    }
    cut
}

/// One edge per non-trivial component of `f`, at its lowest-id non-cut vertex.
pub fn component_matching(g: &Multigraph, f: &SpanningSubgraph) -> Result<SpanningSubgraph> {
    f.validate(g)?;
    let n = g.vertex_count();
    let items: Vec<(usize, usize)> = f.edges().iter().map(|&e| g.edge(e)).collect();
    let cut = cut_vertices(n, &items);
    let (labels, k) = label_components(n, items.iter().copied());
    let mut chosen: Vec<Option<usize>> = vec![None; k];
    let mut anchor: Vec<Option<usize>> = vec![None; k];
    let deg = f.degrees(g);
    for v in 0..n {
        if deg[v] > 0 && !cut[v] && anchor[labels[v]].is_none() {
            anchor[labels[v]] = Some(v);
        }
    }
    for &e in f.edges() {
        let (a, b) = g.edge(e);
        let c = labels[a];
        if chosen[c].is_none() && (anchor[c] == Some(a) || anchor[c] == Some(b)) {
            chosen[c] = Some(e);
        }
    }
    Ok(SpanningSubgraph::from_ids(chosen.into_iter().flatten()))
}

/// Checks `E(F)∖M ⊆ H`, connectivity, and `d_F ≤ d_H ≤ d_T + max(0, d_F − 1)`.
pub fn validate_extension(
    g: &Multigraph,
    f: &SpanningSubgraph,
    t: &SpanningSubgraph,
    m: &SpanningSubgraph,
    h: &SpanningSubgraph,
) -> Vec<String> {
    let mut out = Vec::new();
    if h.validate(g).is_err() {
        out.push("unknown edge".into());
        return out;
    }
    if !h.is_connected_spanning(g) {
        out.push("not connected".into());
    }
    if !f.difference(m).is_subset_of(h) {
        out.push("misses an edge of F outside M".into());
    }
    let (df, dt, dh) = (f.degrees(g), t.degrees(g), h.degrees(g));
    for v in 0..g.vertex_count() {
        let hi = dt[v] + df[v].saturating_sub(1);
        if dh[v] < df[v] || dh[v] > hi {
            out.push(format!("vertex {v}: degree {} outside [{}, {hi}]", dh[v], df[v]));
        }
    }
    out
}

struct Extender<'a> {
    g: &'a Multigraph,
    in_f: Vec<bool>,
    h: Vec<bool>,
    tree: Vec<bool>,
    dt: Vec<usize>,
    df: Vec<usize>,
    dh: Vec<usize>,
    /// `(x, y, edge)` per matching edge; `x` is not a cut vertex of F.
    pairs: Vec<(usize, usize, usize)>,
    comp: Vec<usize>,
}

impl Extender<'_> {
    fn full(&self, v: usize) -> bool {
        self.dh[v] == self.dt[v] + self.df[v]
    }

    fn drop_edge(&mut self, e: usize) {
        self.h[e] = false;
        self.tree[e] = false;
        let (a, b) = self.g.edge(e);
        self.dh[a] -= 1;
        self.dh[b] -= 1;
    }

    fn add_edge(&mut self, e: usize) {
        self.h[e] = true;
        let (a, b) = self.g.edge(e);
        self.dh[a] += 1;
        self.dh[b] += 1;
    }

    /// Edge ids along a path from `from` to `to` using edges accepted by `ok`.
    fn path(&self, from: usize, to: usize, ok: impl Fn(usize) -> bool, avoid: Option<usize>) -> Option<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut prev = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(w, e) in self.g.incident(v) {
                if ok(e) && !seen[w] && Some(w) != avoid {
                    seen[w] = true;
                    prev[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut edges = Vec::new();
        let mut v = to;
        while v != from {
            let e = prev[v]?;
            edges.push(e);
            v = self.g.other_end(e, v);
        }
        edges.reverse();
        Some(edges)
    }

    /// First edge of the tree path from `b` to `a`.
    fn tree_edge_towards(&self, b: usize, a: usize) -> Option<usize> {
        self.path(b, a, |e| self.tree[e], None)?.first().copied()
    }

    /// Removes edges until no vertex with `d_F > 0` is full.
    fn shrink(&mut self) -> Option<()> {
        let n = self.g.vertex_count();
        while let Some(u) = (0..n).find(|&v| self.df[v] > 0 && self.full(v)) {
            let c = self.comp[u];
            let &(x, y, xy) = self.pairs.iter().find(|p| self.comp[p.0] == c)?;
            let members: Vec<usize> = (0..n).filter(|&v| self.comp[v] == c).collect();
            let Some(&free) = members.iter().find(|&&v| !self.full(v)) else {
                if self.tree[xy] || !self.h[xy] {
                    return None;
                }
                self.drop_edge(xy);
                continue;
            };
            let (start, avoid) = if self.h[xy] { (free, None) } else { (y, Some(x)) };
            let route = self.path(start, u, |e| self.in_f[e], avoid)?;
            let mut v = start;
            let mut step = None;
            for &e in &route {
                let w = self.g.other_end(e, v);
                if !self.full(v) && self.full(w) {
                    step = Some((v, w, e));
                    break;
                }
                v = w;
            }
            let (a, b, ab) = step?;
            if self.tree[ab] || !self.h[ab] {
                return None;
            }
            let bc = self.tree_edge_towards(b, a)?;
            if self.in_f[bc] {
                return None;
            }
            self.drop_edge(bc);
            self.tree[ab] = true;
        }
        Some(())
    }

    /// Swaps matching edges back in while their far end is short.
    fn restore(&mut self) -> Option<()> {
        loop {
            let Some(&(x, y, xy)) = self.pairs.iter().find(|&&(_, y, e)| !self.h[e] && self.dh[y] < self.df[y]) else {
                return Some(());
            };
            let xz = self.tree_edge_towards(x, y)?;
            if self.in_f[xz] || self.g.other_end(xz, x) == x {
                return None;
            }
            self.drop_edge(xz);
            self.add_edge(xy);
            self.tree[xy] = true;
        }
    }
}

pub(crate) fn exhaustive_extension(
    g: &Multigraph,
    f: &SpanningSubgraph,
    t: &SpanningSubgraph,
    m: &SpanningSubgraph,
) -> Option<SpanningSubgraph> {
    let fixed = f.difference(m);
    let free: Vec<usize> = t.union(f).difference(&fixed).edges().to_vec();
    if free.len() > 22 {
        return None;
    }
    (0u64..1 << free.len()).find_map(|mask| {
        let h = fixed.union(&SpanningSubgraph::from_ids(
            free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        ));
        validate_extension(g, f, t, m, &h).is_empty().then_some(h)
    })
}

/// Extension using the matching `m` of `f`; the caller guarantees that each
/// edge of `m` has an end that is not a cut vertex of its component.
fn extend_with(
    g: &Multigraph,
    f: &SpanningSubgraph,
    t: &SpanningSubgraph,
    m: &SpanningSubgraph,
) -> Result<Outcome<SpanningSubgraph>> {
    let n = g.vertex_count();
    let items: Vec<(usize, usize)> = f.edges().iter().map(|&e| g.edge(e)).collect();
    let cut = cut_vertices(n, &items);
    let (comp, _) = label_components(n, items.iter().copied());
    let pairs = m
        .edges()
        .iter()
        .map(|&e| {
            let (a, b) = g.edge(e);
            if !cut[a] { (a, b, e) } else { (b, a, e) }
        })
        .collect();
    let mut in_f = vec![false; g.edge_count()];
    for &e in f.edges() {
        in_f[e] = true;
    }
    let host = t.union(f);
    let mut h = vec![false; g.edge_count()];
    for &e in host.edges() {
        h[e] = true;
    }
    let mut tree = vec![false; g.edge_count()];
    for &e in t.edges() {
        tree[e] = true;
    }
    let mut ext = Extender {
        g,
        in_f,
        h,
        tree,
        dt: t.degrees(g),
        df: f.degrees(g),
        dh: host.degrees(g),
        pairs,
        comp,
    };
    let local = ext.shrink().and_then(|()| ext.restore()).map(|()| {
        SpanningSubgraph::from_ids((0..g.edge_count()).filter(|&e| ext.h[e]))
    });
    if let Some(h) = local.filter(|h| validate_extension(g, f, t, m, h).is_empty()) {
        return Ok(Outcome::Solution(h));
    }
    if n <= 10 {
        if let Some(h) = exhaustive_extension(g, f, t, m) {
            return Ok(Outcome::Solution(h));
        }
    }
    Ok(Outcome::Inconclusive("local search left the degree window".into()))
}

/// Connected `H ⊆ T ∪ F` containing `E(F)∖M` with
/// `d_F(v) ≤ d_H(v) ≤ d_T(v) + max(0, d_F(v) − 1)`.
pub fn extend_factor_to_connected(
    g: &Multigraph,
    f: &SpanningSubgraph,
    t: &SpanningSubgraph,
) -> Result<Outcome<FactorExtension>> {
    t.validate(g)?;
    if !t.is_spanning_tree(g) {
        return Err(Error::NotSpanningTree);
    }
    let m = component_matching(g, f)?;
    Ok(extend_with(g, f, t, &m)?.map(|subgraph| FactorExtension { subgraph, matching: m }))
}

/// Connected factor `H ⊇ F` with `d_F ≤ d_H ≤ d_F + f − 1`, via a spanning
/// f-tree through the component matching of `F`.
pub fn connected_factor_from_condition(
    g: &Multigraph,
    factor: Option<&SpanningSubgraph>,
    f: &[i64],
) -> Result<Outcome<SpanningSubgraph>> {
    let factor = factor.ok_or_else(|| Error::InvalidParameter("no factor supplied".into()))?;
    factor.validate(g)?;
    let n = g.vertex_count();
    if f.len() != n || f.iter().any(|&x| x < 1) {
        return Err(Error::InvalidParameter("f must be a positive value per vertex".into()));
    }
    let m = component_matching(g, factor)?;
    let spec = DegreeSpec {
        x: (0..n).collect(),
        eta: f.iter().map(|&x| int(x)).collect(),
        lambda: int(0),
        m: 1,
        forest: Some(m.clone()),
    };
    let t = match bounded_spanning_tree(g, &spec, ForestMode::Plain)? {
        Outcome::Solution(t) => t,
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
    };
    Ok(extend_with(g, factor, &t, &m)?.map(|h| h.union(&m)))
}

/// m-tree-connected `H ⊇ F` with `d_H ≤ d_F + 1` and `d_H(u) = d_F(u)`.
pub fn plus_one_extension(
    g: &Multigraph,
    f: &SpanningSubgraph,
    m: usize,
    c: i64,
    u: usize,
) -> Result<Outcome<SpanningSubgraph>> {
    g.check_vertex(u)?;
    f.validate(g)?;
    if c < 2 * m as i64 + 1 {
        return Err(Error::InvalidParameter("c must be at least 2m+1".into()));
    }
    let fg = f.to_graph(g);
    let parts = m_components(&fg.graph, m)?;
    let idx = parts.partition.part_index(g.vertex_count());
    for (i, part) in parts.partition.parts().iter().enumerate() {
        let leaving = f.edges().iter().filter(|&&e| {
            let (a, b) = g.edge(e);
            (idx[a] == i) != (idx[b] == i)
        });
        let need = int(c) - frac(c - 1, 2 * m as i64) * int(leaving.count() as i64);
        if int(part.len() as i64) < need {
            return Err(Error::InvalidParameter(format!(
                "component {part:?} of F has fewer than {need} vertices"
            )));
        }
    }
    if g.vertex_count() == 1 {
        return Ok(Outcome::Solution(f.clone()));
    }
    let n = g.vertex_count();
    let ecount = g.edge_count();
    let eta: Vec<Rational> = (0..n).map(|v| if v == u { int(0) } else { frac(1, m as i64) }).collect();
    let hyp = Hypothesis::PlusOne { m, c };
    let copies = g.copies(m);
    let mut out = tough_enough_subgraph(&copies, m, c, &eta, f)?;
    if let Outcome::Solution(h) = &out {
        let back = SpanningSubgraph::from_ids(h.edges().iter().map(|&e| e % ecount));
        debug_assert!(
            back.difference(f).len() == h.difference(f).len(),
            "no parallel copies outside F"
        );
        if back.len() == h.len() && is_m_tree_connected(&back.to_graph(g).graph, m) {
            return Ok(Outcome::Solution(back));
        }
        out = Outcome::Inconclusive("extension reused a copy of an edge of F".into());
    }
    match out {
        Outcome::Certificate(cert) => {
            let c2 = hyp.evaluate(g, &cert.set)?;
            if c2.is_violation() {
                return Ok(Outcome::Certificate(c2));
            }
            if n <= 16 {
                let all: Vec<usize> = (0..n).collect();
                if let Verdict::Violated(c3) = check_hypothesis(g, &hyp, &all)? {
                    return Ok(Outcome::Certificate(c3));
                }
            }
            Ok(Outcome::Inconclusive("certificate on the copied graph does not refute the hypothesis".into()))
        }
        Outcome::Deficient(_) => {
            let all: Vec<usize> = (0..n).collect();
            match check_hypothesis(g, &hyp, &all)? {
                Verdict::Violated(c3) => Ok(Outcome::Certificate(c3)),
                Verdict::Holds => Ok(Outcome::Inconclusive("copied graph is not m-tree-connected".into())),
            }
        }
        other => Ok(other),
    }
}

/// m-tree-connected `H` with `d_H(v)` odd exactly on `q` and
/// `d_H ≥ d_G − ⌈(d_G−m)/k⌉` (tree-connected) or `d_G − ⌈d_G/2k⌉ − 1`
/// (edge-connected).
pub fn large_degree_parity_subgraph(
    g: &Multigraph,
    m: usize,
    k: usize,
    kind: ConnectivityKind,
    q: &[usize],
) -> Result<Outcome<SpanningSubgraph>> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameter("m and k must be positive".into()));
    }
    let n = g.vertex_count();
    let qmask = g.vertex_mask(q)?;
    if q.len() % 2 == 1 {
        return Err(Error::OddParitySet);
    }
    let host = match kind {
        ConnectivityKind::TreeConnected => SpanningSubgraph::full(g),
        ConnectivityKind::EdgeConnected => {
            if !crate::gen::is_k_edge_connected(g, 2 * (k + m)) {
                return Err(Error::InvalidParameter(format!("graph is not {}-edge-connected", 2 * (k + m))));
            }
            let spec = derive_spec(g, &SpecKind::KEdgeConnected { k: 2 * (k + m), m: k + m, u: None })?;
            match bounded_m_subgraph(g, &spec, ForestMode::Plain)? {
                Outcome::Solution(h) => h,
                Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
                Outcome::Certificate(c) => {
                    return Ok(Outcome::Inconclusive(format!("degree-bounded subgraph refused at {:?}", c.set)))
                }
                Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
            }
        }
    };
    let hg = host.to_graph(g);
    let trees = match pack_trees(&hg.graph, k + m)? {
        PackResult::Packing(p) => p.trees,
        PackResult::Deficient(d) => return Ok(Outcome::Deficient(d)),
    };
    let keep = SpanningSubgraph::from_ids(trees[..m].iter().flat_map(|t| t.edges().iter().map(|&e| hg.edge_map[e])));
    let rest = host.difference(&keep);
    let rg = rest.to_graph(g);
    let odd_g = g.degrees();
    let qprime: Vec<usize> = (0..n).filter(|&v| (odd_g[v] % 2 == 1) != qmask[v]).collect();
    let forest = match bounded_parity_forest(&rg.graph, k, ConnectivityKind::TreeConnected, &qprime)? {
        Outcome::Solution(fr) => SpanningSubgraph::from_ids(fr.edges().iter().map(|&e| rg.edge_map[e])),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
        _ => return Ok(Outcome::Inconclusive("remainder admits no bounded parity forest".into())),
    };
    Ok(Outcome::Solution(SpanningSubgraph::full(g).difference(&forest)))
}

/// Degree floor promised by [`large_degree_parity_subgraph`].
pub fn large_degree_floor(g: &Multigraph, m: usize, k: usize, kind: ConnectivityKind) -> Vec<i64> {
    g.degrees()
        .iter()
        .map(|&d| {
            let d = d as i64;
            match kind {
                ConnectivityKind::TreeConnected => d - ((d - m as i64).max(0) as u64).div_ceil(k as u64) as i64,
                ConnectivityKind::EdgeConnected => d - (d as u64).div_ceil(2 * k as u64) as i64 - 1,
            }
        })
        .collect()
}

/// Backtracking search for a connected spanning subgraph with degrees in {2, 4}.
fn search_24(g: &Multigraph, budget: usize) -> Option<SpanningSubgraph> {
    let n = g.vertex_count();
    let mut last = vec![0usize; n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        last[a] = e;
        last[b] = e;
    }
    struct St<'a> {
        g: &'a Multigraph,
        last: Vec<usize>,
        deg: Vec<usize>,
        chosen: Vec<usize>,
        nodes: usize,
        budget: usize,
    }
    fn closes(st: &St, v: usize, e: usize) -> bool {
        st.last[v] != e || st.deg[v] == 2 || st.deg[v] == 4
    }
    fn go(st: &mut St, e: usize) -> Option<bool> {
        st.nodes += 1;
        if st.nodes > st.budget {
            return None;
        }
        if e == st.g.edge_count() {
            let h = SpanningSubgraph::from_ids(st.chosen.iter().copied());
            return Some(h.is_connected_spanning(st.g));
        }
        let (a, b) = st.g.edge(e);
        if st.deg[a] < 4 && st.deg[b] < 4 {
            st.deg[a] += 1;
            st.deg[b] += 1;
            st.chosen.push(e);
            if closes(st, a, e) && closes(st, b, e) && go(st, e + 1)? {
                return Some(true);
            }
            st.chosen.pop();
            st.deg[a] -= 1;
            st.deg[b] -= 1;
        }
        if closes(st, a, e) && closes(st, b, e) {
            return go(st, e + 1);
        }
        Some(false)
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut st = St { g, last, deg: vec![0; n], chosen: Vec::new(), nodes: 0, budget };
    match go(&mut st, 0) {
        Some(true) => Some(SpanningSubgraph::from_ids(st.chosen)),
        _ => None,
    }
}

/// Connected spanning subgraph whose degrees all lie in {2, 4}.
pub fn connected_24_factor(g: &Multigraph) -> Result<Outcome<SpanningSubgraph>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidParameter("need at least two vertices".into()));
    }
    if let PackResult::Deficient(d) = pack_trees(g, 2)? {
        return Ok(Outcome::Deficient(d));
    }
    let inconclusive = match f_trail(g, &vec![2; n], int(0))? {
        Outcome::Solution(t) => return Ok(Outcome::Solution(t.support())),
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Certificate(_) => "trail search refused".to_string(),
        Outcome::Inconclusive(s) => s,
    };
    if n <= 12 {
        if let Some(h) = search_24(g, 2_000_000) {
            return Ok(Outcome::Solution(h));
        }
        let all: Vec<usize> = (0..n).collect();
        if let Verdict::Violated(c) = check_hypothesis(g, &Hypothesis::Factor24, &all)? {
            return Ok(Outcome::Certificate(c));
        }
    }
    Ok(Outcome::Inconclusive(inconclusive))
}

/// Whether `h` is a connected spanning subgraph with degrees in {2, 4}.
pub fn is_connected_24_factor(g: &Multigraph, h: &SpanningSubgraph) -> bool {
    h.validate(g).is_ok() && h.is_connected_spanning(g) && h.degrees(g).iter().all(|&d| d == 2 || d == 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle, path};

    fn solved<T: std::fmt::Debug>(o: Outcome<T>) -> T {
        match o {
            Outcome::Solution(t) => t,
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn cut_vertex_examples() {
        let p = path(4);
        assert_eq!(cut_vertices(4, p.edges()), vec![false, true, true, false]);
        let c = cycle(5);
        assert!(cut_vertices(5, c.edges()).iter().all(|&x| !x));
        let bt = crate::gen::bowtie();
        assert_eq!(cut_vertices(5, bt.edges()).iter().filter(|&&x| x).count(), 1);
        let double = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(cut_vertices(3, double.edges()), vec![false, true, false]);
    }

    #[test]
    fn trivial_factor_gives_tree() {
        let k4 = complete(4);
        let t = SpanningSubgraph::new(&k4, [0, 1, 2]).unwrap();
        let ext = solved(extend_factor_to_connected(&k4, &SpanningSubgraph::empty(), &t).unwrap());
        assert_eq!(ext.subgraph, t);
        assert!(ext.matching.is_empty());
    }

    #[test]
    fn c4_matching_factor() {
        let c4 = cycle(4);
        // edges: 0=(0,1), 1=(1,2), 2=(2,3), 3=(3,0)
        let f = SpanningSubgraph::new(&c4, [0, 2]).unwrap();
        let t = SpanningSubgraph::new(&c4, [0, 1, 2]).unwrap();
        let ext = solved(extend_factor_to_connected(&c4, &f, &t).unwrap());
        assert!(validate_extension(&c4, &f, &t, &ext.matching, &ext.subgraph).is_empty());
        assert_eq!(ext.matching.len(), 2);
    }

    #[test]
    fn hamiltonian_factor_of_k4() {
        let k4 = complete(4);
        let ham: Vec<usize> = (0..k4.edge_count())
            .filter(|&e| matches!(k4.edge(e), (0, 1) | (1, 2) | (2, 3) | (0, 3)))
            .collect();
        let f = SpanningSubgraph::new(&k4, ham).unwrap();
        for tree in [[0usize, 1, 2], [0, 3, 5], [1, 3, 4]] {
            let t = SpanningSubgraph::new(&k4, tree).unwrap();
            if !t.is_spanning_tree(&k4) {
                continue;
            }
            let ext = solved(extend_factor_to_connected(&k4, &f, &t).unwrap());
            assert!(validate_extension(&k4, &f, &t, &ext.matching, &ext.subgraph).is_empty());
        }
        let bad = SpanningSubgraph::new(&k4, [0, 1]).unwrap();
        assert!(matches!(extend_factor_to_connected(&k4, &f, &bad), Err(Error::NotSpanningTree)));
    }

    #[test]
    fn connected_factor_examples() {
        let k5 = complete(5);
        let ham: Vec<usize> = (0..k5.edge_count())
            .filter(|&e| {
                let (a, b) = k5.edge(e);
                b == a + 1 || (a, b) == (0, 4)
            })
            .collect();
        let f = SpanningSubgraph::new(&k5, ham).unwrap();
        let h = solved(connected_factor_from_condition(&k5, Some(&f), &[2; 5]).unwrap());
        assert!(f.is_subset_of(&h));
        assert!(h.degrees(&k5).iter().all(|&d| d <= 3));
        assert!(h.is_connected_spanning(&k5));
        assert!(connected_factor_from_condition(&k5, None, &[2; 5]).is_err());
    }

    #[test]
    fn plus_one_examples() {
        let k5 = complete(5);
        let full = SpanningSubgraph::full(&k5);
        assert_eq!(solved(plus_one_extension(&k5, &full, 1, 3, 0).unwrap()), full);

        let k6 = complete(6);
        let ham: Vec<usize> = (0..k6.edge_count())
            .filter(|&e| {
                let (a, b) = k6.edge(e);
                b == a + 1 || (a, b) == (0, 5)
            })
            .collect();
        let f = SpanningSubgraph::new(&k6, ham).unwrap();
        let h = solved(plus_one_extension(&k6, &f, 1, 3, 2).unwrap());
        let (dh, df) = (h.degrees(&k6), f.degrees(&k6));
        assert!(f.is_subset_of(&h));
        assert_eq!(dh[2], df[2]);
        assert!((0..6).all(|v| dh[v] <= df[v] + 1));
    }

    #[test]
    fn large_degree_examples() {
        let k6 = complete(6);
        let h = solved(large_degree_parity_subgraph(&k6, 1, 2, ConnectivityKind::TreeConnected, &[]).unwrap());
        let deg = h.degrees(&k6);
        assert!(deg.iter().all(|&d| d % 2 == 0));
        let floor = large_degree_floor(&k6, 1, 2, ConnectivityKind::TreeConnected);
        assert!((0..6).all(|v| deg[v] as i64 >= floor[v]));
        assert!(is_m_tree_connected(&h.to_graph(&k6).graph, 1));
        assert!(matches!(
            large_degree_parity_subgraph(&k6, 1, 2, ConnectivityKind::TreeConnected, &[0]),
            Err(Error::OddParitySet)
        ));
    }

    #[test]
    fn factor_24_examples() {
        let k5 = complete(5);
        let h = solved(connected_24_factor(&k5).unwrap());
        assert!(is_connected_24_factor(&k5, &h));
        let k4 = complete(4);
        let h = solved(connected_24_factor(&k4).unwrap());
        assert!(is_connected_24_factor(&k4, &h));
        assert!(matches!(connected_24_factor(&cycle(6)).unwrap(), Outcome::Deficient(_)));
    }
}
