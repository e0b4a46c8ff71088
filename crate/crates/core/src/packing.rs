//! Edge-disjoint spanning tree packing, tree-connected components and Ω_m.
//!
//! Everything rests on [`ForestUnion`], a partition of an edge set into `m`
//! forests maintained by shortest augmenting paths over the exchange graph.
//! A failed augmentation yields the fundamental circuit, and the vertex set
//! spanned by that circuit induces an m-tree-connected subgraph.

use crate::error::{Error, Result};
use crate::graph::{label_components, Multigraph, SpanningSubgraph, VertexPartition};
use crate::ratio::{frac, int, Rational};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Result of one augmenting search.
pub(crate) enum Explore {
    /// `(edge, forest)` reassignments that insert the searched edge.
    Augment(Vec<(usize, usize)>),
    /// Edges of the fundamental circuit, excluding the searched edge.
    Circuit(Vec<usize>),
}

/// `m` edge-disjoint forests over a host graph.
#[derive(Clone)]
pub(crate) struct ForestUnion<'a> {
    g: &'a Multigraph,
    m: usize,
    owner: Vec<Option<usize>>,
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    size: usize,
}

impl<'a> ForestUnion<'a> {
    pub fn new(g: &'a Multigraph, m: usize) -> Self {
        ForestUnion {
            g,
            m,
            owner: vec![None; g.edge_count()],
            adj: vec![vec![Vec::new(); g.vertex_count()]; m],
            size: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> Vec<usize> {
        (0..self.owner.len()).filter(|&e| self.owner[e].is_some()).collect()
    }

    pub fn forest(&self, i: usize) -> Vec<usize> {
        (0..self.owner.len()).filter(|&e| self.owner[e] == Some(i)).collect()
    }

    fn attach(&mut self, e: usize, i: usize) {
        let (u, v) = self.g.edge(e);
        self.adj[i][u].push((v, e));
        self.adj[i][v].push((u, e));
        self.owner[e] = Some(i);
    }

    fn detach(&mut self, e: usize) {
        if let Some(i) = self.owner[e].take() {
            let (u, v) = self.g.edge(e);
            self.adj[i][u].retain(|&(_, f)| f != e);
            self.adj[i][v].retain(|&(_, f)| f != e);
        }
    }

    /// Edge ids on the path from `u` to `v` in forest `i`, if connected.
    fn path(&self, i: usize, u: usize, v: usize) -> Option<Vec<usize>> {
        if u == v {
            return Some(Vec::new());
        }
        let n = self.g.vertex_count();
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adj[i][x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    if y == v {
                        let mut out = Vec::new();
                        let mut cur = v;
                        while cur != u {
                            let f = via[cur];
                            out.push(f);
                            cur = self.g.other_end(f, cur);
                        }
                        return Some(out);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Shortest augmenting path search for an edge not in the union.
    pub fn explore(&self, e: usize) -> Explore {
        debug_assert!(self.owner[e].is_none());
        let mut label: Vec<Option<(usize, usize)>> = vec![None; self.owner.len()];
        let mut reached = vec![false; self.owner.len()];
        reached[e] = true;
        let mut order = Vec::new();
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let (u, v) = self.g.edge(x);
            for i in 0..self.m {
                if self.owner[x] == Some(i) {
                    continue;
                }
                match self.path(i, u, v) {
                    None => {
                        let mut moves = vec![(x, i)];
                        let mut cur = x;
                        while let Some((p, j)) = label[cur] {
                            moves.push((p, j));
                            cur = p;
                        }
                        return Explore::Augment(moves);
                    }
                    Some(p) => {
                        for y in p {
                            if !reached[y] {
                                reached[y] = true;
                                label[y] = Some((x, i));
                                order.push(y);
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        order.sort_unstable();
        Explore::Circuit(order)
    }

    pub fn apply(&mut self, moves: &[(usize, usize)]) {
        if let Some(&(first, _)) = moves.last() {
            if self.owner[first].is_none() {
                self.size += 1;
            }
        }
        for &(x, _) in moves {
            self.detach(x);
        }
        for &(x, i) in moves {
            self.attach(x, i);
        }
    }

    /// Inserts `e` or returns its fundamental circuit.
    pub fn try_insert(&mut self, e: usize) -> std::result::Result<(), Vec<usize>> {
        if self.owner[e].is_some() {
            return Ok(());
        }
        match self.explore(e) {
            Explore::Augment(moves) => {
                self.apply(&moves);
                Ok(())
            }
            Explore::Circuit(c) => Err(c),
        }
    }

    pub fn remove(&mut self, e: usize) {
        if self.owner[e].is_some() {
            self.detach(e);
            self.size -= 1;
        }
    }

    /// Whether `e` could be added without exceeding independence.
    pub fn circuit(&self, e: usize) -> Option<Vec<usize>> {
        match self.explore(e) {
            Explore::Augment(_) => None,
            Explore::Circuit(c) => Some(c),
        }
    }
}

/// `m` pairwise edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePacking {
    pub trees: Vec<SpanningSubgraph>,
}

impl TreePacking {
    /// Checks disjointness and that every member is a spanning tree of `g`.
    pub fn validate(&self, g: &Multigraph) -> bool {
        let mut used = vec![false; g.edge_count()];
        self.trees.iter().all(|t| {
            t.validate(g).is_ok()
                && t.is_spanning_tree(g)
                && t.edges().iter().all(|&e| !std::mem::replace(&mut used[e], true))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.trees.iter().map(|t| t.edges().to_vec()).collect::<Vec<_>>())
    }
}

/// Partition witnessing that no `m` disjoint spanning trees exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficientPartition {
    pub partition: VertexPartition,
    pub crossing: usize,
    pub m: usize,
}

impl DeficientPartition {
    pub fn validate(&self, g: &Multigraph) -> bool {
        let p = self.partition.len();
        p >= 2
            && self.partition.ground_size() == g.vertex_count()
            && self.partition.crossing_edges(g) == self.crossing
            && self.crossing < self.m * (p - 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.partition.parts())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackResult {
    Packing(TreePacking),
    Deficient(DeficientPartition),
}

/// Maximal m-tree-connected vertex sets and the resulting Ω_m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDecomposition {
    pub partition: VertexPartition,
    #[serde(with = "crate::ratio::serde_str")]
    pub omega: Rational,
}

pub(crate) fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidParameter("m must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Packs `m` edge-disjoint spanning trees or returns a deficient partition.
pub fn pack_trees(g: &Multigraph, m: usize) -> Result<PackResult> {
    check_m(m)?;
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    let mut fu = ForestUnion::new(g, m);
    for e in 0..g.edge_count() {
        let _ = fu.try_insert(e);
        if fu.size() == m * (g.vertex_count() - 1) {
            break;
        }
    }
    if fu.size() == m * (g.vertex_count() - 1) {
        let trees = (0..m).map(|i| SpanningSubgraph::from_ids(fu.forest(i))).collect();
        return Ok(PackResult::Packing(TreePacking { trees }));
    }
    let partition = m_components(g, m)?.partition;
    let crossing = partition.crossing_edges(g);
    Ok(PackResult::Deficient(DeficientPartition { partition, crossing, m }))
}

pub fn is_m_tree_connected(g: &Multigraph, m: usize) -> bool {
    if m == 0 {
        return true;
    }
    matches!(pack_trees(g, m), Ok(PackResult::Packing(_)))
}

/// Maximum number of edge-disjoint spanning trees.
pub fn packing_number(g: &Multigraph) -> usize {
    if g.vertex_count() <= 1 {
        return usize::MAX;
    }
    let mut k = 0;
    while (k + 1) * (g.vertex_count() - 1) <= g.edge_count() && is_m_tree_connected(g, k + 1) {
        k += 1;
    }
    k
}

/// Partition of `V(g)` into maximal m-tree-connected sets.
pub fn m_components(g: &Multigraph, m: usize) -> Result<ComponentDecomposition> {
    check_m(m)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ComponentDecomposition {
            partition: VertexPartition::from_parts_unchecked(Vec::new()),
            omega: int(0),
        });
    }
    // supernode label per original vertex
    let mut label: Vec<usize> = (0..n).collect();
    let mut count = n;
    loop {
        let part = VertexPartition::from_labels(&label);
        let contracted = g.contract_partition(&part)?.graph;
        let mut fu = ForestUnion::new(&contracted, m);
        let mut uf = UnionFind::<usize>::new(count);
        let mut merged = false;
        for e in 0..contracted.edge_count() {
            if let Err(circuit) = fu.try_insert(e) {
                let (a, b) = contracted.edge(e);
                merged |= uf.union(a, b);
                for f in circuit {
                    let (x, y) = contracted.edge(f);
                    merged |= uf.union(a, x);
                    merged |= uf.union(a, y);
                }
            }
        }
        if merged {
            let (relabel, k) = crate::graph::normalize_labels(count, |v| uf.find_mut(v));
            for l in label.iter_mut() {
                *l = relabel[*l];
            }
            count = k;
            continue;
        }
        // independent: refine by the forests until every class is spanned by each
        let forests: Vec<Vec<usize>> = (0..m).map(|i| fu.forest(i)).collect();
        let mut cls = vec![0usize; count];
        loop {
            let mut key: Vec<Vec<usize>> = (0..count).map(|v| vec![cls[v]]).collect();
            for forest in &forests {
                let (lab, _) = label_components(
                    count,
                    forest
                        .iter()
                        .map(|&e| contracted.edge(e))
                        .filter(|&(a, b)| cls[a] == cls[b]),
                );
                for v in 0..count {
                    key[v].push(lab[v]);
                }
            }
            let mut sorted: Vec<&Vec<usize>> = key.iter().collect();
            sorted.sort();
            sorted.dedup();
            let next: Vec<usize> = key.iter().map(|k| sorted.binary_search(&k).unwrap()).collect();
            let stable = sorted.len() == cls.iter().collect::<std::collections::BTreeSet<_>>().len();
            cls = next;
            if stable {
                break;
            }
        }
        let final_labels: Vec<usize> = label.iter().map(|&l| cls[l]).collect();
        let partition = VertexPartition::from_labels(&final_labels);
        let omega = omega_of_partition(g, &partition, m);
        return Ok(ComponentDecomposition { partition, omega });
    }
}

pub(crate) fn omega_of_partition(g: &Multigraph, p: &VertexPartition, m: usize) -> Rational {
    int(p.len() as i64) - frac(p.crossing_edges(g) as i64, m as i64)
}

/// Ω_m(G); zero for the null graph.
pub fn omega_m(g: &Multigraph, m: usize) -> Result<Rational> {
    Ok(m_components(g, m)?.omega)
}

/// Keeps `m` disjoint spanning trees inside each m-tree-connected component
/// of `f` and drops the remaining internal edges.
pub fn m_critical_reduce(g: &Multigraph, f: &SpanningSubgraph, m: usize) -> Result<SpanningSubgraph> {
    check_m(m)?;
    f.validate(g)?;
    let fg = f.to_graph(g);
    let comps = m_components(&fg.graph, m)?;
    let idx = comps.partition.part_index(g.vertex_count());
    let mut keep: Vec<usize> = Vec::new();
    for (local, &host) in fg.edge_map.iter().enumerate() {
        let (u, v) = fg.graph.edge(local);
        if idx[u] != idx[v] {
            keep.push(host);
        }
    }
    for part in comps.partition.parts() {
        if part.len() < 2 {
            continue;
        }
        let sub = fg.graph.induced(part)?;
        match pack_trees(&sub.graph, m)? {
            PackResult::Packing(p) => {
                for t in &p.trees {
                    keep.extend(t.edges().iter().map(|&e| fg.edge_map[sub.edge_map[e]]));
                }
            }
            PackResult::Deficient(_) => unreachable!("component is m-tree-connected"),
        }
    }
    Ok(SpanningSubgraph::from_ids(keep))
}

/// Finds `e ∈ M` such that `H − e + e′` is m-tree-connected.
pub fn exchange_edge(
    g: &Multigraph,
    h: &SpanningSubgraph,
    m: usize,
    mset: &[usize],
    e_new: usize,
) -> Result<usize> {
    check_m(m)?;
    h.validate(g)?;
    g.check_edge(e_new)?;
    let hg = h.to_graph(g);
    if !is_m_tree_connected(&hg.graph, m) {
        return Err(Error::HostNotTreeConnected(m));
    }
    if mset.is_empty() {
        return Err(Error::InvalidParameter("M must be nonempty".into()));
    }
    for &e in mset {
        if !h.contains(e) {
            return Err(Error::InvalidParameter(format!("edge {e} of M is not in H")));
        }
    }
    if h.contains(e_new) {
        return Err(Error::EdgeInSubgraph(e_new));
    }
    let rest = h.difference(&SpanningSubgraph::from_ids(mset.iter().copied()));
    let comps = m_components(&rest.to_graph(g).graph, m)?;
    let idx = comps.partition.part_index(g.vertex_count());
    let (a, b) = g.edge(e_new);
    if idx[a] == idx[b] {
        return Err(Error::EdgeNotCrossing(e_new));
    }
    let mut sorted = mset.to_vec();
    sorted.sort_unstable();
    for e in sorted {
        let cand = SpanningSubgraph::from_ids(
            h.edges().iter().copied().filter(|&x| x != e).chain(std::iter::once(e_new)),
        );
        if is_m_tree_connected(&cand.to_graph(g).graph, m) {
            return Ok(e);
        }
    }
    Err(Error::InvalidParameter("no exchange edge found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle, path};
    use crate::ratio::frac;

    fn two_k4_bridge() -> Multigraph {
        let mut edges = Vec::new();
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.push((3, 4));
        Multigraph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn pack_examples() {
        let single = Multigraph::empty(1);
        match pack_trees(&single, 3).unwrap() {
            PackResult::Packing(p) => {
                assert_eq!(p.trees.len(), 3);
                assert!(p.trees.iter().all(|t| t.is_empty()));
            }
            _ => panic!("single vertex packs"),
        }
        let k4 = complete(4);
        match pack_trees(&k4, 2).unwrap() {
            PackResult::Packing(p) => {
                assert!(p.validate(&k4));
                assert_eq!(p.trees[0].len() + p.trees[1].len(), 6);
            }
            _ => panic!("K4 is 2-tree-connected"),
        }
        match pack_trees(&cycle(5), 2).unwrap() {
            PackResult::Deficient(d) => {
                assert_eq!(d.partition, VertexPartition::singletons(5));
                assert_eq!(d.crossing, 5);
                assert!(d.validate(&cycle(5)));
            }
            _ => panic!("C5 has too few edges"),
        }
        assert!(pack_trees(&k4, 0).is_err());
        assert!(is_m_tree_connected(&k4, 2));
        assert!(!is_m_tree_connected(&cycle(5), 2));
        assert!(is_m_tree_connected(&cycle(5), 1));
    }

    #[test]
    fn component_examples() {
        let g = Multigraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let d = m_components(&g, 1).unwrap();
        assert_eq!(d.partition.parts(), &[vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(d.omega, int(3));
        assert_eq!(omega_m(&cycle(5), 2).unwrap(), frac(5, 2));
        let d = m_components(&two_k4_bridge(), 2).unwrap();
        assert_eq!(d.partition.parts(), &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert_eq!(d.omega, frac(3, 2));
        assert_eq!(omega_m(&Multigraph::null(), 2).unwrap(), int(0));
    }

    #[test]
    fn critical_reduce_examples() {
        let p = path(4);
        let all = SpanningSubgraph::full(&p);
        assert_eq!(m_critical_reduce(&p, &all, 1).unwrap(), all);
        let k4 = complete(4);
        let all = SpanningSubgraph::full(&k4);
        assert_eq!(m_critical_reduce(&k4, &all, 2).unwrap(), all);
        let mut edges = k4.edges().to_vec();
        edges.push((0, 1));
        let k4p = Multigraph::from_edges(4, &edges).unwrap();
        let r = m_critical_reduce(&k4p, &SpanningSubgraph::full(&k4p), 2).unwrap();
        assert_eq!(r.len(), 6);
        assert!(is_m_tree_connected(&r.to_graph(&k4p).graph, 2));
    }

    #[test]
    fn exchange_examples() {
        // path a-b-c plus chord ac as edge 2
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = SpanningSubgraph::new(&g, [0, 1]).unwrap();
        assert_eq!(exchange_edge(&g, &h, 1, &[0], 2).unwrap(), 0);

        let k4 = complete(4);
        let tree = SpanningSubgraph::new(&k4, [0, 1, 2]).unwrap();
        for chord in 3..6 {
            let e = exchange_edge(&k4, &tree, 1, tree.edges(), chord).unwrap();
            let swapped = SpanningSubgraph::from_ids(
                tree.edges().iter().copied().filter(|&x| x != e).chain([chord]),
            );
            assert!(swapped.is_spanning_tree(&k4));
        }

        let mut edges = k4.edges().to_vec();
        edges.push(k4.edge(0));
        let host = Multigraph::from_edges(4, &edges).unwrap();
        let h = SpanningSubgraph::new(&host, 0..6).unwrap();
        assert_eq!(exchange_edge(&host, &h, 2, &[0], 6).unwrap(), 0);

        let bad = SpanningSubgraph::new(&host, 0..5).unwrap();
        assert_eq!(exchange_edge(&host, &bad, 2, &[0], 6), Err(Error::HostNotTreeConnected(2)));

        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let h = SpanningSubgraph::new(&g, [0, 1]).unwrap();
        assert_eq!(exchange_edge(&g, &h, 1, &[0], 2), Err(Error::EdgeNotCrossing(2)));
        assert_eq!(exchange_edge(&g, &h, 1, &[0], 1), Err(Error::EdgeInSubgraph(1)));
    }
}
