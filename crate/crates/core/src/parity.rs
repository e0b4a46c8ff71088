//! Spanning forests with degree caps and prescribed degree parities.
//!
//! Existence is decided exactly: a capped parity subgraph is found as a
//! perfect matching in a vertex gadget graph, then cycles are peeled off
//! (removing a cycle keeps every parity and lowers degrees).

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SpanningSubgraph};
use crate::oracle::{check_hypothesis, Hypothesis, Verdict, HYPOTHESIS_CAP};
use crate::outcome::Outcome;
use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Caps and parities for a parity forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum ParitySpec {
    /// `d_F(v) ≤ f(v)` and `d_F(v) ≡ f(v) (mod 2)`.
    FParity { f: Vec<i64> },
    /// `d_F(v) ≤ f(v)` and `d_F(v)` odd exactly on `q`.
    Prescribed { f: Vec<i64>, q: Vec<usize> },
}

impl ParitySpec {
    /// The equivalent f-parity form: caps lowered by one where parity disagrees.
    pub fn effective_caps(&self, n: usize) -> Result<Vec<i64>> {
        match self {
            ParitySpec::FParity { f } => {
                if f.len() != n || f.iter().any(|&x| x < 0) {
                    return Err(Error::InvalidParameter("f must be a nonnegative value per vertex".into()));
                }
                Ok(f.clone())
            }
            ParitySpec::Prescribed { f, q } => {
                if f.len() != n {
                    return Err(Error::InvalidParameter("f must have one value per vertex".into()));
                }
                let mut in_q = vec![false; n];
                for &v in q {
                    if v >= n {
                        return Err(Error::UnknownVertex(v));
                    }
                    in_q[v] = !in_q[v];
                }
                if in_q.iter().filter(|&&b| b).count() % 2 == 1 {
                    return Err(Error::OddParitySet);
                }
                let caps: Vec<i64> = (0..n)
                    .map(|v| if (f[v].rem_euclid(2) == 1) == in_q[v] { f[v] } else { f[v] - 1 })
                    .collect();
                if caps.iter().any(|&c| c < 0) {
                    return Err(Error::InvalidParameter("a vertex of Q has cap 0".into()));
                }
                Ok(caps)
            }
        }
    }
}

/// odd_f(G∖S): components of G∖S holding an odd number of odd-f vertices.
pub fn odd_f_count(g: &Multigraph, f: &[i64], s: &[usize]) -> Result<usize> {
    if f.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("f must have one value per vertex".into()));
    }
    let r = g.remove_vertices(s)?;
    let (labels, k) = r.graph.component_labels();
    let mut odd = vec![false; k];
    for (new, &old) in r.vertex_map.iter().enumerate() {
        if f[old].rem_euclid(2) == 1 {
            odd[labels[new]] = !odd[labels[new]];
        }
    }
    Ok(odd.iter().filter(|&&b| b).count())
}

/// The unique `F ⊆ E(T)` whose odd-degree set is `q`, for a forest `T`.
pub fn tree_parity_subforest(g: &Multigraph, t: &SpanningSubgraph, q: &[usize]) -> Result<SpanningSubgraph> {
    t.validate(g)?;
    if !t.is_forest(g) {
        return Err(Error::NotForest);
    }
    let n = g.vertex_count();
    let mut need = vec![false; n];
    for &v in q {
        g.check_vertex(v)?;
        need[v] = !need[v];
    }
    if need.iter().filter(|&&b| b).count() % 2 == 1 {
        return Err(Error::OddParitySet);
    }
    let mut adj = vec![Vec::new(); n];
    for &e in t.edges() {
        let (u, v) = g.edge(e);
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut parent_edge = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut chosen = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent_edge[y] = e;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        for &v in order.iter().rev() {
            if v == root {
                if need[v] {
                    return Err(Error::OddParitySet);
                }
            } else if need[v] {
                let e = parent_edge[v];
                chosen.push(e);
                need[v] = false;
                let p = g.other_end(e, v);
                need[p] = !need[p];
            }
        }
    }
    Ok(SpanningSubgraph::from_ids(chosen))
}

/// Checks acyclicity, caps and the parity rule `d_F ≡ caps`.
pub fn is_parity_forest(g: &Multigraph, f: &SpanningSubgraph, caps: &[i64]) -> bool {
    f.validate(g).is_ok()
        && f.is_forest(g)
        && f.degrees(g)
            .iter()
            .zip(caps)
            .all(|(&d, &c)| d as i64 <= c && (d as i64 - c).rem_euclid(2) == 0)
}

/// Subgraph `J` with `d_J ≤ caps` and `d_J ≡ caps (mod 2)`, via perfect matching.
fn parity_subgraph(g: &Multigraph, caps: &[i64]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut gadget: UnGraph<(), ()> = UnGraph::new_undirected();
    // outer node of edge e at its first / second endpoint
    let mut outer = vec![[NodeIndex::new(0); 2]; g.edge_count()];
    for v in 0..n {
        let d = g.degree(v) as i64;
        let p = caps[v].rem_euclid(2);
        let mut top = caps[v].min(d);
        if top.rem_euclid(2) != p {
            top -= 1;
        }
        if top < p {
            return None;
        }
        let nodes: Vec<NodeIndex> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| {
                let node = gadget.add_node(());
                let side = if g.edge(e).0 == v { 0 } else { 1 };
                outer[e][side] = node;
                node
            })
            .collect();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                gadget.add_edge(nodes[i], nodes[j], ());
            }
        }
        for _ in 0..(d - top) {
            let inner = gadget.add_node(());
            for &o in &nodes {
                gadget.add_edge(inner, o, ());
            }
        }
    }
    for slot in &outer {
        gadget.add_edge(slot[0], slot[1], ());
    }
    let matching = maximum_matching(&gadget);
    if !matching.is_perfect() {
        return None;
    }
    Some((0..g.edge_count()).filter(|&e| matching.mate(outer[e][0]) == Some(outer[e][1])).collect())
}

/// Removes whole cycles until the edge set is a forest.
fn strip_cycles(g: &Multigraph, mut edges: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        let mut uf = UnionFind::<usize>::new(g.vertex_count());
        let mut forest: Vec<usize> = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            let (u, v) = g.edge(e);
            if !uf.union(u, v) {
                let f = SpanningSubgraph::from_ids(forest.iter().copied());
                let cycle = forest_path(g, &f, u, v);
                let remove: std::collections::HashSet<usize> =
                    cycle.into_iter().chain(std::iter::once(e)).collect();
                let mut rest: Vec<usize> = edges[..i].iter().copied().filter(|x| !remove.contains(x)).collect();
                rest.extend(edges[i + 1..].iter().copied());
                edges = rest;
                continue 'outer;
            }
            forest.push(e);
        }
        edges.sort_unstable();
        return edges;
    }
}

/// Edge ids on the path between `u` and `v` in forest `f`.
pub(crate) fn forest_path(g: &Multigraph, f: &SpanningSubgraph, u: usize, v: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &e in f.edges() {
        let (a, b) = g.edge(e);
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut via = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(y, e) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = e;
                queue.push_back(y);
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = v;
    while cur != u {
        let e = via[cur];
        assert!(e != usize::MAX, "vertices are not connected in the forest");
        out.push(e);
        cur = g.other_end(e, cur);
    }
    out
}

/// BFS spanning forest of `g`, smallest edge ids first.
pub(crate) fn bfs_forest(g: &Multigraph) -> SpanningSubgraph {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut edges = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in g.incident(x) {
                if !seen[y] {
                    seen[y] = true;
                    edges.push(e);
                    queue.push_back(y);
                }
            }
        }
    }
    SpanningSubgraph::from_ids(edges)
}

/// Parity forest with caps `caps` (f-parity form), trying `seeds` first.
pub(crate) fn parity_forest_with_seeds(
    g: &Multigraph,
    caps: &[i64],
    seeds: &[&SpanningSubgraph],
) -> Result<Outcome<SpanningSubgraph>> {
    let odd: Vec<usize> = (0..g.vertex_count()).filter(|&v| caps[v].rem_euclid(2) == 1).collect();
    for seed in seeds {
        if let Ok(f) = tree_parity_subforest(g, seed, &odd) {
            if is_parity_forest(g, &f, caps) {
                return Ok(Outcome::Solution(f));
            }
        }
    }
    if let Some(j) = parity_subgraph(g, caps) {
        let f = SpanningSubgraph::from_ids(strip_cycles(g, j));
        debug_assert!(is_parity_forest(g, &f, caps));
        return Ok(Outcome::Solution(f));
    }
    if g.vertex_count() > HYPOTHESIS_CAP {
        return Ok(Outcome::Inconclusive("no parity forest; too many vertices to search for a certificate".into()));
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    match check_hypothesis(g, &Hypothesis::Parity { f: caps.to_vec() }, &all)? {
        Verdict::Violated(c) => Ok(Outcome::Certificate(c)),
        Verdict::Holds => Ok(Outcome::Inconclusive("no parity forest and no violating set".into())),
    }
}

/// Spanning forest meeting `spec`, or a set `S` with odd_f(G∖S) > Σ_S f.
pub fn parity_forest(g: &Multigraph, spec: &ParitySpec) -> Result<Outcome<SpanningSubgraph>> {
    let caps = spec.effective_caps(g.vertex_count())?;
    let bfs = bfs_forest(g);
    parity_forest_with_seeds(g, &caps, &[&bfs])
}

/// Connectivity assumption behind the caps of [`bounded_parity_forest`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectivityKind {
    EdgeConnected,
    TreeConnected,
}

/// Parity forest with caps `⌈d/k⌉+1` (edge-connected) or `⌈d/k⌉` (tree-connected).
pub fn bounded_parity_forest(
    g: &Multigraph,
    k: usize,
    kind: ConnectivityKind,
    q: &[usize],
) -> Result<Outcome<SpanningSubgraph>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let caps: Vec<i64> = g
        .degrees()
        .iter()
        .map(|&d| {
            let c = d.div_ceil(k) as i64;
            match kind {
                ConnectivityKind::EdgeConnected => c + 1,
                ConnectivityKind::TreeConnected => c,
            }
        })
        .collect();
    parity_forest(g, &ParitySpec::Prescribed { f: caps, q: q.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle, path, star};

    #[test]
    fn odd_f_examples() {
        let c4 = cycle(4);
        assert_eq!(odd_f_count(&c4, &[2; 4], &[]).unwrap(), 0);
        assert_eq!(odd_f_count(&path(2), &[1, 1], &[]).unwrap(), 0);
        assert_eq!(odd_f_count(&path(3), &[1, 1, 1], &[1]).unwrap(), 2);
    }

    #[test]
    fn parity_forest_examples() {
        let c4 = cycle(4);
        let out = parity_forest(&c4, &ParitySpec::FParity { f: vec![2; 4] }).unwrap();
        assert_eq!(out, Outcome::Solution(SpanningSubgraph::empty()));
        let k2 = path(2);
        let out = parity_forest(&k2, &ParitySpec::Prescribed { f: vec![1, 1], q: vec![0, 1] }).unwrap();
        assert_eq!(out, Outcome::Solution(SpanningSubgraph::full(&k2)));
        let claw = star(3);
        let spec = ParitySpec::Prescribed { f: vec![1; 4], q: vec![0, 1, 2, 3] };
        match parity_forest(&claw, &spec).unwrap() {
            Outcome::Certificate(c) => {
                assert_eq!(c.set, vec![0]);
                assert!(c.is_violation());
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
        let bad = ParitySpec::Prescribed { f: vec![1, 1], q: vec![0] };
        assert_eq!(parity_forest(&k2, &bad), Err(Error::OddParitySet));
    }

    #[test]
    fn tree_parity_examples() {
        let p3 = path(3);
        let t = SpanningSubgraph::full(&p3);
        assert!(tree_parity_subforest(&p3, &t, &[]).unwrap().is_empty());
        assert_eq!(tree_parity_subforest(&p3, &t, &[0, 2]).unwrap(), t);
        let claw = star(3);
        let t = SpanningSubgraph::full(&claw);
        assert_eq!(tree_parity_subforest(&claw, &t, &[1, 2]).unwrap().edges(), &[0, 1]);
        assert_eq!(tree_parity_subforest(&claw, &t, &[1]), Err(Error::OddParitySet));
    }

    #[test]
    fn bounded_parity_examples() {
        let c4 = cycle(4);
        let out = bounded_parity_forest(&c4, 1, ConnectivityKind::TreeConnected, &[]).unwrap();
        assert_eq!(out, Outcome::Solution(SpanningSubgraph::empty()));
        let out = bounded_parity_forest(&c4, 1, ConnectivityKind::TreeConnected, &[0, 2]).unwrap();
        let f = out.solution().unwrap();
        let d = f.degrees(&c4);
        assert_eq!((d[0], d[2], f.len()), (1, 1, 2));
        assert!(d[1] + d[3] == 2 && f.is_forest(&c4));
        let k4 = complete(4);
        let f = bounded_parity_forest(&k4, 3, ConnectivityKind::EdgeConnected, &[0, 1, 2, 3])
            .unwrap()
            .solution()
            .unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.degrees(&k4).iter().all(|&d| d == 1));
    }
}
