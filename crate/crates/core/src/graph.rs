//! Loopless multigraphs with stable vertex and edge ids, plus the derived
//! graphs and counting functions used throughout the crate.

use crate::error::{Error, Result};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Loopless multigraph. Edge `i` is `edges[i]`; parallel edges are distinct ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// A derived graph together with maps back to the host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Multigraph,
    /// `vertex_map[new] = old` (for contractions: the part index).
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old`.
    pub edge_map: Vec<usize>,
}

impl Multigraph {
    /// The null graph, kept only so `omega_m(K_0) = 0` can be expressed.
    pub fn null() -> Self {
        Multigraph { n: 0, edges: Vec::new(), adj: Vec::new() }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbour, edge id)` pairs, in insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub(crate) fn vertex_mask(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Component label per vertex, numbered by smallest member.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        label_components(self.n, self.edges.iter().copied())
    }

    /// ω(G).
    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.component_count() == 1
    }

    /// Vertex sets of the components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (labels, k) = self.component_labels();
        let mut parts = vec![Vec::new(); k];
        for v in 0..self.n {
            parts[labels[v]].push(v);
        }
        parts
    }

    /// Spanning subgraph on the listed edges; new edge `i` is `ids[i]`.
    pub fn edge_subgraph(&self, ids: &[usize]) -> Result<Relabeled> {
        let mut g = Self::empty(self.n);
        for &e in ids {
            self.check_edge(e)?;
            let (u, v) = self.edges[e];
            g.push_edge(u, v)?;
        }
        Ok(Relabeled { graph: g, vertex_map: (0..self.n).collect(), edge_map: ids.to_vec() })
    }

    /// Induced subgraph on `keep` (any order; result is sorted by old id).
    pub fn induced(&self, keep: &[usize]) -> Result<Relabeled> {
        let mask = self.vertex_mask(keep)?;
        let mut new_id = vec![usize::MAX; self.n];
        let mut vertex_map = Vec::new();
        for v in 0..self.n {
            if mask[v] {
                new_id[v] = vertex_map.len();
                vertex_map.push(v);
            }
        }
        let mut g = Self::empty(vertex_map.len());
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if mask[u] && mask[v] {
                g.push_edge(new_id[u], new_id[v])?;
                edge_map.push(e);
            }
        }
        Ok(Relabeled { graph: g, vertex_map, edge_map })
    }

    /// G∖S: delete the vertices of `s` and their incident edges.
    pub fn remove_vertices(&self, s: &[usize]) -> Result<Relabeled> {
        let mask = self.vertex_mask(s)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| !mask[v]).collect();
        self.induced(&keep)
    }

    /// G∖[S,F]: drop every edge meeting `s` unless it belongs to `f`.
    pub fn remove_incident_except(&self, s: &[usize], f: &SpanningSubgraph) -> Result<Relabeled> {
        let mask = self.vertex_mask(s)?;
        f.validate(self)?;
        let keep: Vec<usize> = (0..self.edges.len())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                f.contains(e) || (!mask[u] && !mask[v])
            })
            .collect();
        self.edge_subgraph(&keep)
    }

    /// e_G(S): edges with both ends in `s`.
    pub fn count_internal_edges(&self, s: &[usize]) -> Result<usize> {
        let mask = self.vertex_mask(s)?;
        Ok(self.edges.iter().filter(|&&(u, v)| mask[u] && mask[v]).count())
    }

    /// e_G(S,F): edges with both ends in `s` joining different components of `f`.
    pub fn count_forest_crossing(&self, s: &[usize], f: &SpanningSubgraph) -> Result<usize> {
        let mask = self.vertex_mask(s)?;
        let labels = f.component_labels(self)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mask[u] && mask[v] && labels[u] != labels[v])
            .count())
    }

    /// d_G(v,F): edges at `v` whose ends lie in different components of `f`.
    pub fn crossing_degree(&self, v: usize, f: &SpanningSubgraph) -> Result<usize> {
        self.check_vertex(v)?;
        let labels = f.component_labels(self)?;
        Ok(self.adj[v].iter().filter(|&&(w, _)| labels[w] != labels[v]).count())
    }

    /// G/P: one vertex per part, crossing edges kept as parallel edges.
    pub fn contract_partition(&self, p: &VertexPartition) -> Result<Relabeled> {
        if p.ground_size() != self.n {
            return Err(Error::InvalidPartition("partition does not cover V(G)".into()));
        }
        let part = p.part_index(self.n);
        let mut g = Self::empty(p.len());
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if part[u] != part[v] {
                g.push_edge(part[u], part[v])?;
                edge_map.push(e);
            }
        }
        Ok(Relabeled { graph: g, vertex_map: (0..p.len()).collect(), edge_map })
    }

    /// Union of `k` copies; copy `j` of edge `e` gets id `e + j·|E|`.
    pub fn copies(&self, k: usize) -> Multigraph {
        let mut g = Self::empty(self.n);
        for _ in 0..k {
            for &(u, v) in &self.edges {
                g.push_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    /// Every edge duplicated.
    pub fn doubled(&self) -> Multigraph {
        self.copies(2)
    }

    /// Neighbourhood bitmasks; only for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(), class: None }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(j.n, &edges)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }

    /// DOT text; `highlight` edges are drawn bold.
    pub fn to_dot(&self, highlight: Option<&SpanningSubgraph>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let bold = highlight.is_some_and(|h| h.contains(e));
            if bold {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\", penwidth=3];");
            } else {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Canonical JSON form: edge order defines edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<serde_json::Value>,
}

/// Components of the graph on `0..n` with the given edges.
pub fn label_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::<usize>::new(n);
    for (u, v) in edges {
        uf.union(u, v);
    }
    normalize_labels(n, |v| uf.find_mut(v))
}

pub(crate) fn normalize_labels(n: usize, mut root: impl FnMut(usize) -> usize) -> (Vec<usize>, usize) {
    let mut map = vec![usize::MAX; n];
    let mut labels = vec![0; n];
    let mut k = 0;
    for v in 0..n {
        let r = root(v);
        if map[r] == usize::MAX {
            map[r] = k;
            k += 1;
        }
        labels[v] = map[r];
    }
    (labels, k)
}

/// Partition of a vertex ground set into disjoint nonempty parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates disjointness, nonemptiness and coverage of `ground`.
    pub fn new(ground: &[usize], parts: Vec<Vec<usize>>) -> Result<Self> {
        let ground_set: BTreeSet<usize> = ground.iter().copied().collect();
        let mut seen = BTreeSet::new();
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &v in part {
                if !ground_set.contains(&v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} outside ground set")));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two parts")));
                }
            }
        }
        if seen.len() != ground_set.len() {
            return Err(Error::InvalidPartition("parts do not cover the ground set".into()));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Partition of `0..n` from a label per vertex.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            parts[l].push(v);
        }
        parts.retain(|p| !p.is_empty());
        Self::from_parts_unchecked(parts)
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<Vec<usize>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort_by_key(|p| p[0]);
        VertexPartition { parts }
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_parts_unchecked((0..n).map(|v| vec![v]).collect())
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Part index per vertex of `0..n`; `usize::MAX` outside the ground set.
    pub fn part_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v < n {
                    idx[v] = i;
                }
            }
        }
        idx
    }

    /// e_G(P): edges of `g` whose ends lie in different parts.
    pub fn crossing_edges(&self, g: &Multigraph) -> usize {
        let idx = self.part_index(g.vertex_count());
        g.edges()
            .iter()
            .filter(|&&(u, v)| idx[u] != usize::MAX && idx[v] != usize::MAX && idx[u] != idx[v])
            .count()
    }
}

/// An edge-id subset of a host graph, viewed as a spanning subgraph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpanningSubgraph {
    edges: Vec<usize>,
}

impl SpanningSubgraph {
    /// Validated constructor: ids are sorted and deduplicated.
    pub fn new(g: &Multigraph, edges: impl IntoIterator<Item = usize>) -> Result<Self> {
        let s = Self::from_ids(edges);
        s.validate(g)?;
        Ok(s)
    }

    pub fn from_ids(edges: impl IntoIterator<Item = usize>) -> Self {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        SpanningSubgraph { edges }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(g: &Multigraph) -> Self {
        SpanningSubgraph { edges: (0..g.edge_count()).collect() }
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        match self.edges.last() {
            Some(&e) if e >= g.edge_count() => Err(Error::UnknownEdge(e)),
            _ => Ok(()),
        }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self, g: &Multigraph) -> Vec<usize> {
        let mut d = vec![0; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.edge(e);
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn degree(&self, g: &Multigraph, v: usize) -> usize {
        g.incident(v).iter().filter(|&&(_, e)| self.contains(e)).count()
    }

    pub fn component_labels(&self, g: &Multigraph) -> Result<Vec<usize>> {
        self.validate(g)?;
        Ok(label_components(g.vertex_count(), self.edges.iter().map(|&e| g.edge(e))).0)
    }

    pub fn component_count(&self, g: &Multigraph) -> usize {
        label_components(g.vertex_count(), self.edges.iter().map(|&e| g.edge(e))).1
    }

    pub fn to_graph(&self, g: &Multigraph) -> Relabeled {
        g.edge_subgraph(&self.edges).expect("validated edge ids")
    }

    pub fn is_forest(&self, g: &Multigraph) -> bool {
        let mut uf = UnionFind::<usize>::new(g.vertex_count());
        self.edges.iter().all(|&e| {
            let (u, v) = g.edge(e);
            uf.union(u, v)
        })
    }

    pub fn is_spanning_tree(&self, g: &Multigraph) -> bool {
        g.vertex_count() >= 1 && self.edges.len() + 1 == g.vertex_count() && self.is_forest(g)
    }

    pub fn is_connected_spanning(&self, g: &Multigraph) -> bool {
        g.vertex_count() >= 1 && self.component_count(g) == 1
    }

    pub fn union(&self, other: &SpanningSubgraph) -> SpanningSubgraph {
        Self::from_ids(self.edges.iter().chain(other.edges.iter()).copied())
    }

    pub fn difference(&self, other: &SpanningSubgraph) -> SpanningSubgraph {
        Self::from_ids(self.edges.iter().copied().filter(|&e| !other.contains(e)))
    }

    pub fn is_subset_of(&self, other: &SpanningSubgraph) -> bool {
        self.edges.iter().all(|&e| other.contains(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle, path};

    #[test]
    fn remove_vertices_examples() {
        let k4 = complete(4);
        assert_eq!(k4.remove_vertices(&[]).unwrap().graph, k4);
        let r = k4.remove_vertices(&[0]).unwrap();
        assert_eq!(r.graph.vertex_count(), 3);
        assert_eq!(r.graph.edge_count(), 3);
        assert_eq!(r.vertex_map, vec![1, 2, 3]);
        let c5 = cycle(5);
        let r = c5.remove_vertices(&[0, 1]).unwrap();
        assert_eq!(r.graph.edge_count(), 2);
        assert_eq!(r.graph.component_count(), 1);
        assert!(c5.remove_vertices(&[7]).is_err());
    }

    #[test]
    fn remove_incident_except_forest_examples() {
        let k4 = complete(4);
        let empty = SpanningSubgraph::empty();
        let r = k4.remove_incident_except(&[], &empty).unwrap();
        assert_eq!(r.graph.edge_count(), 6);
        let r = k4.remove_incident_except(&[0], &empty).unwrap();
        assert_eq!(r.graph.component_count(), 2);
        let without = k4.remove_vertices(&[0]).unwrap().graph.component_count();
        assert_eq!(r.graph.component_count(), without + 1);
        let p3 = path(3);
        let f = SpanningSubgraph::new(&p3, [0]).unwrap();
        let r = p3.remove_incident_except(&[1], &f).unwrap();
        assert_eq!(r.edge_map, vec![0]);
        assert_eq!(r.graph.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn counting_examples() {
        let k4 = complete(4);
        assert_eq!(k4.count_internal_edges(&[]).unwrap(), 0);
        assert_eq!(k4.count_internal_edges(&[0, 1]).unwrap(), 1);
        // star at 0 connects everything, so no edge crosses its components
        let star: Vec<usize> = (0..6).filter(|&e| k4.edge(e).0 == 0).collect();
        let star = SpanningSubgraph::new(&k4, star).unwrap();
        assert_eq!(k4.count_forest_crossing(&[1, 2], &star).unwrap(), 0);
        let trivial = SpanningSubgraph::empty();
        assert_eq!(k4.count_forest_crossing(&[1, 2], &trivial).unwrap(), 1);
        assert_eq!(k4.crossing_degree(0, &trivial).unwrap(), 3);
        assert_eq!(k4.crossing_degree(0, &star).unwrap(), 0);
    }

    #[test]
    fn contraction_examples() {
        let c4 = cycle(4);
        let single = VertexPartition::singletons(4);
        let r = c4.contract_partition(&single).unwrap();
        assert_eq!(r.graph.edges(), c4.edges());
        let p = VertexPartition::new(&[0, 1, 2, 3], vec![vec![0, 2], vec![1, 3]]).unwrap();
        let r = c4.contract_partition(&p).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (2, 4));
        let k4 = complete(4);
        let p = VertexPartition::new(&[0, 1, 2, 3], vec![vec![0, 1], vec![2, 3]]).unwrap();
        let r = k4.contract_partition(&p).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (2, 4));
        assert_eq!(p.crossing_edges(&k4), 4);
        assert!(VertexPartition::new(&[0, 1], vec![vec![0], vec![0, 1]]).is_err());
        assert!(VertexPartition::new(&[0, 1], vec![vec![0]]).is_err());
    }

    #[test]
    fn json_round_trip_and_loops() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let s = g.to_json_string();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[0,1],[1,2]]}"#);
        assert_eq!(Multigraph::from_json_str(&s).unwrap(), g);
        assert!(!g.is_simple());
        assert_eq!(Multigraph::from_edges(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert!(g.to_dot(None).contains("0 -- 1"));
    }
}
