//! Spanning closed walks and trails with per-vertex visit caps.

use crate::error::{Error, Result};
use crate::excess::{bounded_m_subgraph, bounded_spanning_tree, min_excess_m_subgraph, DegreeSpec, ForestMode};
use crate::graph::{Multigraph, SpanningSubgraph, VertexPartition};
use crate::oracle::{check_hypothesis, Hypothesis, Verdict};
use crate::outcome::Outcome;
use crate::packing::{m_components, pack_trees, PackResult};
use crate::parity::{parity_forest_with_seeds, tree_parity_subforest, ParitySpec};
use crate::ratio::{frac, int, Rational};
use serde::{Deserialize, Serialize};

/// Cyclic vertex sequence; `edges[i]` joins `vertices[i]` and `vertices[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl ClosedWalk {
    pub fn visits(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &v in &self.vertices {
            c[v] += 1;
        }
        c
    }
}

/// Closed walk whose edge ids are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedTrail {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl ClosedTrail {
    pub fn visits(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &v in &self.vertices {
            c[v] += 1;
        }
        c
    }

    pub fn as_walk(&self) -> ClosedWalk {
        ClosedWalk { vertices: self.vertices.clone(), edges: self.edges.clone() }
    }

    pub fn support(&self) -> SpanningSubgraph {
        SpanningSubgraph::from_ids(self.edges.iter().copied())
    }
}

/// Hierholzer on a list of `(u, v)` items; returns `(vertices, item ids)`.
fn euler_tour(n: usize, items: &[(usize, usize)], start: usize) -> (Vec<usize>, Vec<usize>) {
    if items.is_empty() {
        return (vec![start], Vec::new());
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in items.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut used = vec![false; items.len()];
    let mut ptr = vec![0usize; n];
    let mut stack = vec![(start, usize::MAX)];
    let mut out = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].1] {
            ptr[v] += 1;
        }
        if let Some(&(w, i)) = adj[v].get(ptr[v]) {
            used[i] = true;
            stack.push((w, i));
        } else {
            out.push(stack.pop().expect("nonempty"));
        }
    }
    out.reverse();
    let vertices = out[..out.len() - 1].iter().map(|&(v, _)| v).collect();
    let ids = out[1..].iter().map(|&(_, i)| i).collect();
    (vertices, ids)
}

fn check_eulerian(n: usize, items: &[(usize, usize)]) -> Result<()> {
    let mut deg = vec![0usize; n];
    for &(u, v) in items {
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = (0..n).find(|&v| deg[v] % 2 == 1) {
        return Err(Error::NotEulerian(format!("vertex {v} has odd degree {}", deg[v])));
    }
    let (_, k) = crate::graph::label_components(n, items.iter().copied());
    if k > 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Circuit through every edge of a connected even multigraph.
pub fn eulerian_circuit(g: &Multigraph) -> Result<ClosedTrail> {
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    check_eulerian(g.vertex_count(), g.edges())?;
    let (vertices, edges) = euler_tour(g.vertex_count(), g.edges(), 0);
    Ok(ClosedTrail { edges, vertices })
}

/// Circuit of the spanning subgraph `h` of `g`, in host ids.
fn circuit_of(g: &Multigraph, h: &SpanningSubgraph) -> Result<ClosedTrail> {
    let items: Vec<(usize, usize)> = h.edges().iter().map(|&e| g.edge(e)).collect();
    check_eulerian(g.vertex_count(), &items)?;
    let (vertices, ids) = euler_tour(g.vertex_count(), &items, 0);
    Ok(ClosedTrail { edges: ids.iter().map(|&i| h.edges()[i]).collect(), vertices })
}

fn spanning_eulerian_edges(g: &Multigraph, t1: &SpanningSubgraph, t2: &SpanningSubgraph) -> Result<SpanningSubgraph> {
    let odd: Vec<usize> = t1.degrees(g).iter().enumerate().filter(|(_, &d)| d % 2 == 1).map(|(v, _)| v).collect();
    let fix = tree_parity_subforest(g, t2, &odd)?;
    Ok(t1.union(&fix))
}

/// Spanning connected even subgraph of a 2-tree-connected graph, as a circuit.
pub fn spanning_eulerian_of_2tc(g: &Multigraph) -> Result<Outcome<ClosedTrail>> {
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph);
    }
    match pack_trees(g, 2)? {
        PackResult::Deficient(d) => Ok(Outcome::Deficient(d)),
        PackResult::Packing(p) => {
            let l = spanning_eulerian_edges(g, &p.trees[0], &p.trees[1])?;
            Ok(Outcome::Solution(circuit_of(g, &l)?))
        }
    }
}

/// Turns a certificate found for a weaker inequality into one for `hyp`.
fn refute<T>(g: &Multigraph, hyp: &Hypothesis, set: &[usize]) -> Result<Outcome<T>> {
    let cert = hyp.evaluate(g, set)?;
    if cert.is_violation() {
        return Ok(Outcome::Certificate(cert));
    }
    if g.vertex_count() <= 16 {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        if let Verdict::Violated(c) = check_hypothesis(g, hyp, &all)? {
            return Ok(Outcome::Certificate(c));
        }
    }
    Ok(Outcome::Inconclusive("certificate of the intermediate step does not refute the hypothesis".into()))
}

fn check_caps(g: &Multigraph, f: &[i64]) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("f must have one value per vertex".into()));
    }
    if let Some(v) = f.iter().position(|&x| x < 1) {
        return Err(Error::InvalidParameter(format!("f({v}) must be positive")));
    }
    Ok(())
}

fn check_matching(g: &Multigraph, m: &SpanningSubgraph) -> Result<()> {
    m.validate(g)?;
    let deg = m.degrees(g);
    if deg.iter().any(|&d| d > 1) {
        return Err(Error::NotMatching);
    }
    Ok(())
}

/// Closed walk visiting each `v` at most `f(v)` times and using every edge
/// of the matching `m`, or a set refuting `ω(G∖S) ≤ Σ(f−1) + 1`.
pub fn f_walk(g: &Multigraph, f: &[i64], m: &SpanningSubgraph) -> Result<Outcome<ClosedWalk>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NullGraph);
    }
    check_caps(g, f)?;
    check_matching(g, m)?;
    let hyp = Hypothesis::Walk { f: f.to_vec() };
    if !g.is_connected() {
        return refute(g, &hyp, &[]);
    }
    if n == 1 {
        return Ok(Outcome::Solution(ClosedWalk { vertices: vec![0], edges: Vec::new() }));
    }
    let eta: Vec<Rational> = f.iter().map(|&x| int(x + 1)).collect();
    let spec = DegreeSpec { x: (0..n).collect(), eta, lambda: int(0), m: 1, forest: Some(m.clone()) };
    let tree = match bounded_spanning_tree(g, &spec, ForestMode::Plain)? {
        Outcome::Solution(t) => t,
        Outcome::Certificate(c) => return refute(g, &hyp, &c.set),
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
    };
    let odd: Vec<usize> = tree.degrees(g).iter().enumerate().filter(|(_, &d)| d % 2 == 1).map(|(v, _)| v).collect();
    let caps = ParitySpec::Prescribed { f: f.to_vec(), q: odd }.effective_caps(n)?;
    let forest = match parity_forest_with_seeds(g, &caps, &[&tree])? {
        Outcome::Solution(fr) => fr,
        Outcome::Certificate(c) => return refute(g, &hyp, &c.set),
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
    };
    let ids: Vec<usize> = tree.edges().iter().chain(forest.edges()).copied().collect();
    let items: Vec<(usize, usize)> = ids.iter().map(|&e| g.edge(e)).collect();
    let (vertices, order) = euler_tour(n, &items, 0);
    Ok(Outcome::Solution(ClosedWalk { vertices, edges: order.iter().map(|&i| ids[i]).collect() }))
}

/// Closed trail visiting each `v` at most `f(v)` times, or a set refuting
/// `Ω_2(G∖S) < Σ(f+2λ−3/2) + 5/2 − λ(e_G(S)+2)`.
pub fn f_trail(g: &Multigraph, f: &[i64], lambda: Rational) -> Result<Outcome<ClosedTrail>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NullGraph);
    }
    check_caps(g, f)?;
    if lambda < int(0) || lambda > frac(1, 2) {
        return Err(Error::InvalidParameter("lambda must lie in [0, 1/2]".into()));
    }
    if n == 1 {
        return Ok(Outcome::Solution(ClosedTrail { edges: Vec::new(), vertices: vec![0] }));
    }
    let eta: Vec<Rational> = f.iter().map(|&x| int(x) + frac(1, 2) + int(2) * lambda).collect();
    let spec = DegreeSpec { x: (0..n).collect(), eta, lambda, m: 2, forest: None };
    let h = match bounded_m_subgraph(g, &spec, ForestMode::Plain)? {
        Outcome::Solution(h) => h,
        Outcome::Certificate(c) => {
            return refute(g, &Hypothesis::Trail { f: f.to_vec(), lambda }, &c.set);
        }
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
    };
    let sub = h.to_graph(g);
    let PackResult::Packing(p) = pack_trees(&sub.graph, 2)? else {
        unreachable!("bounded subgraph is 2-tree-connected")
    };
    let local = spanning_eulerian_edges(&sub.graph, &p.trees[0], &p.trees[1])?;
    let l = SpanningSubgraph::from_ids(local.edges().iter().map(|&e| sub.edge_map[e]));
    Ok(Outcome::Solution(circuit_of(g, &l)?))
}

/// Two edge-disjoint spanning trees of `h` whose restrictions to every part
/// of `parts` are connected; parts must induce 2-tree-connected subgraphs.
fn aligned_trees(
    g: &Multigraph,
    h: &SpanningSubgraph,
    parts: &VertexPartition,
) -> Result<Option<(SpanningSubgraph, SpanningSubgraph)>> {
    let hg = h.to_graph(g);
    let mut t = [Vec::new(), Vec::new()];
    for part in parts.parts() {
        if part.len() < 2 {
            continue;
        }
        let sub = hg.graph.induced(part)?;
        let PackResult::Packing(p) = pack_trees(&sub.graph, 2)? else { return Ok(None) };
        for i in 0..2 {
            t[i].extend(p.trees[i].edges().iter().map(|&e| hg.edge_map[sub.edge_map[e]]));
        }
    }
    let contracted = hg.graph.contract_partition(parts)?;
    let PackResult::Packing(p) = pack_trees(&contracted.graph, 2)? else { return Ok(None) };
    for i in 0..2 {
        t[i].extend(p.trees[i].edges().iter().map(|&e| hg.edge_map[contracted.edge_map[e]]));
    }
    let [a, b] = t;
    Ok(Some((SpanningSubgraph::from_ids(a), SpanningSubgraph::from_ids(b))))
}

/// Closed trail meeting each `v ∈ x` at most `f(v)` times.
///
/// `fallback(S)` may supply a spanning closed trail meeting each `v ∈ S` at
/// most `f(v)` times; it is consulted when the optimized subgraph stalls on a
/// set `S` that violates `Ω_2(G∖S) ≤ Σ(f−1/2) + 1`.
pub fn f_trail_on_independent_set(
    g: &Multigraph,
    x: &[usize],
    f: &[i64],
    fallback: impl Fn(&[usize]) -> Option<ClosedTrail>,
) -> Result<Outcome<ClosedTrail>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NullGraph);
    }
    if f.len() != n {
        return Err(Error::InvalidParameter("f must have one value per vertex".into()));
    }
    let mask = g.vertex_mask(x)?;
    if g.edges().iter().any(|&(a, b)| mask[a] && mask[b]) {
        return Err(Error::NotIndependent);
    }
    if let Some(&v) = x.iter().find(|&&v| f[v] < 1) {
        return Err(Error::InvalidParameter(format!("f({v}) must be positive")));
    }
    if n == 1 {
        return Ok(Outcome::Solution(ClosedTrail { edges: Vec::new(), vertices: vec![0] }));
    }
    let h_target: Vec<i64> =
        (0..n).map(|v| if mask[v] { 2 * f[v] + 1 } else { g.degree(v) as i64 + 1 }).collect();
    let best = match min_excess_m_subgraph(g, 2, &h_target, None)? {
        Outcome::Solution(b) => b,
        Outcome::Deficient(d) => return Ok(Outcome::Deficient(d)),
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
        Outcome::Inconclusive(s) => return Ok(Outcome::Inconclusive(s)),
    };
    let h = best.subgraph;
    let trail = if best.excess == 0 {
        let sub = h.to_graph(g);
        let PackResult::Packing(p) = pack_trees(&sub.graph, 2)? else { unreachable!("H is 2-tree-connected") };
        let local = spanning_eulerian_edges(&sub.graph, &p.trees[0], &p.trees[1])?;
        circuit_of(g, &SpanningSubgraph::from_ids(local.edges().iter().map(|&e| sub.edge_map[e])))?
    } else {
        let s = best.set;
        let hyp = Hypothesis::IndependentTrail { f: f.to_vec() };
        let Some(l) = fallback(&s) else {
            return refute(g, &hyp, &s);
        };
        let smask = g.vertex_mask(&s)?;
        let rest: Vec<usize> = (0..n).filter(|&v| !smask[v]).collect();
        let h_minus = SpanningSubgraph::from_ids(h.edges().iter().copied().filter(|&e| {
            let (a, b) = g.edge(e);
            !smask[a] && !smask[b]
        }));
        let inner = h_minus.to_graph(g).graph.induced(&rest)?;
        let comps = m_components(&inner.graph, 2)?;
        let mut parts: Vec<Vec<usize>> =
            comps.partition.parts().iter().map(|p| p.iter().map(|&i| inner.vertex_map[i]).collect()).collect();
        parts.extend(s.iter().map(|&v| vec![v]));
        let partition = VertexPartition::new(&(0..n).collect::<Vec<_>>(), parts)?;
        let Some((t1, t2)) = aligned_trees(g, &h, &partition)? else {
            return Ok(Outcome::Inconclusive("could not align the tree packing with the components".into()));
        };
        let idx = partition.part_index(n);
        let internal = |e: usize| {
            let (a, b) = g.edge(e);
            idx[a] == idx[b]
        };
        let l1 = SpanningSubgraph::from_ids(
            l.edges.iter().copied().filter(|&e| !internal(e)).chain(t1.edges().iter().copied().filter(|&e| internal(e))),
        );
        let odd: Vec<usize> = l1.degrees(g).iter().enumerate().filter(|(_, &d)| d % 2 == 1).map(|(v, _)| v).collect();
        let t2_inside = SpanningSubgraph::from_ids(t2.edges().iter().copied().filter(|&e| internal(e)));
        let fix = tree_parity_subforest(g, &t2_inside, &odd)?;
        circuit_of(g, &l1.union(&fix))?
    };
    let caps: Vec<i64> = (0..n).map(|v| if mask[v] { f[v] } else { i64::MAX }).collect();
    let report = validate_trail(g, &trail, &caps);
    if report.ok() {
        Ok(Outcome::Solution(trail))
    } else {
        Ok(Outcome::Inconclusive(format!("surgery produced an invalid trail: {}", report.violations.join("; "))))
    }
}

/// Violations found by [`validate_walk`] or [`validate_trail`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WalkReport {
    pub violations: Vec<String>,
}

impl WalkReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_sequence(g: &Multigraph, vertices: &[usize], edges: &[usize], f: &[i64], out: &mut Vec<String>) {
    let n = g.vertex_count();
    if f.len() != n {
        out.push("f must have one value per vertex".into());
        return;
    }
    if vertices.is_empty() {
        out.push("empty walk".into());
        return;
    }
    if vertices.iter().any(|&v| v >= n) {
        out.push("unknown vertex".into());
        return;
    }
    if edges.is_empty() {
        if vertices.len() != 1 {
            out.push("walk without edges must be a single vertex".into());
        }
    } else if edges.len() != vertices.len() {
        out.push("vertex and edge sequences differ in length".into());
        return;
    } else {
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.edge_count() {
                out.push(format!("unknown edge {e}"));
                continue;
            }
            let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            let (u, v) = g.edge(e);
            if !((u, v) == (a, b) || (u, v) == (b, a)) {
                out.push(format!("edge {e} does not join {a} and {b}"));
            }
        }
    }
    let mut visits = vec![0i64; n];
    for &v in vertices {
        visits[v] += 1;
    }
    if visits.contains(&0) {
        out.push("not spanning".into());
    }
    for v in 0..n {
        if visits[v] > f[v] {
            out.push(format!("vertex {v} visited {} > {} times", visits[v], f[v]));
        }
    }
}

/// Checks adjacency, spanning, visit caps and coverage of `m`.
pub fn validate_walk(g: &Multigraph, walk: &ClosedWalk, f: &[i64], m: &SpanningSubgraph) -> WalkReport {
    let mut violations = Vec::new();
    check_sequence(g, &walk.vertices, &walk.edges, f, &mut violations);
    for &e in m.edges() {
        if !walk.edges.contains(&e) {
            violations.push(format!("matching edge {e} not traversed"));
        }
    }
    WalkReport { violations }
}

/// As [`validate_walk`] plus edge-distinctness.
pub fn validate_trail(g: &Multigraph, trail: &ClosedTrail, f: &[i64]) -> WalkReport {
    let mut violations = Vec::new();
    check_sequence(g, &trail.vertices, &trail.edges, f, &mut violations);
    let mut seen = std::collections::HashSet::new();
    for &e in &trail.edges {
        if !seen.insert(e) {
            violations.push(format!("edge {e} repeated"));
        }
    }
    WalkReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{bowtie, complete, cycle, path, star};

    fn solved<T: std::fmt::Debug>(o: Outcome<T>) -> T {
        match o {
            Outcome::Solution(t) => t,
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn circuits() {
        let c3 = complete(3);
        let t = eulerian_circuit(&c3).unwrap();
        assert_eq!(t.edges.len(), 3);
        assert!(validate_trail(&c3, &t, &[1; 3]).ok());

        let double = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let t = eulerian_circuit(&double).unwrap();
        assert_eq!(t.vertices, vec![0, 1]);

        let bt = bowtie();
        let t = eulerian_circuit(&bt).unwrap();
        assert_eq!(t.edges.len(), 6);
        let visits = t.visits(5);
        assert_eq!(visits.iter().filter(|&&c| c == 2).count(), 1);
        assert!(validate_trail(&bt, &t, &[2; 5]).ok());

        assert!(matches!(eulerian_circuit(&path(3)), Err(Error::NotEulerian(_))));
        let two = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(eulerian_circuit(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn spanning_eulerian_examples() {
        for g in [cycle(4).doubled(), complete(4), complete(5)] {
            let t = solved(spanning_eulerian_of_2tc(&g).unwrap());
            let n = g.vertex_count();
            assert!(validate_trail(&g, &t, &vec![n as i64; n]).ok());
        }
        let k5 = complete(5);
        assert_eq!(solved(spanning_eulerian_of_2tc(&k5).unwrap()).edges.len() % 2, 0);
        assert!(matches!(spanning_eulerian_of_2tc(&cycle(5)).unwrap(), Outcome::Deficient(_)));
    }

    #[test]
    fn walk_examples() {
        let c4 = cycle(4);
        let w = solved(f_walk(&c4, &[2; 4], &SpanningSubgraph::empty()).unwrap());
        assert!(validate_walk(&c4, &w, &[2; 4], &SpanningSubgraph::empty()).ok());

        let p3 = path(3);
        let m = SpanningSubgraph::new(&p3, [0]).unwrap();
        let w = solved(f_walk(&p3, &[2; 3], &m).unwrap());
        assert!(validate_walk(&p3, &w, &[2; 3], &m).ok());
        assert_eq!(w.visits(3), vec![1, 2, 1]);

        let k14 = star(4);
        match f_walk(&k14, &[2; 5], &SpanningSubgraph::empty()).unwrap() {
            Outcome::Certificate(c) => {
                assert_eq!(c.set, vec![0]);
                assert_eq!(c.lhs, int(4));
                assert_eq!(c.rhs, int(2));
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
        let bad = SpanningSubgraph::new(&p3, [0, 1]).unwrap();
        assert!(matches!(f_walk(&p3, &[2; 3], &bad), Err(Error::NotMatching)));
    }

    #[test]
    fn trail_examples() {
        let dc4 = cycle(4).doubled();
        let t = solved(f_trail(&dc4, &[1; 4], int(0)).unwrap());
        assert!(validate_trail(&dc4, &t, &[1; 4]).ok());
        assert_eq!(t.edges.len(), 4);

        let k5 = complete(5);
        let t = solved(f_trail(&k5, &[2; 5], frac(1, 2)).unwrap());
        assert!(validate_trail(&k5, &t, &[2; 5]).ok());

        assert!(matches!(f_trail(&cycle(5), &[1; 5], int(0)).unwrap(), Outcome::Deficient(_)));
    }

    #[test]
    fn independent_set_trails() {
        let none = |_: &[usize]| None;
        let k4 = complete(4);
        let t = solved(f_trail_on_independent_set(&k4, &[], &[1; 4], none).unwrap());
        assert!(validate_trail(&k4, &t, &[4; 4]).ok());

        let dc4 = cycle(4).doubled();
        let t = solved(f_trail_on_independent_set(&dc4, &[0, 2], &[1; 4], none).unwrap());
        assert!(validate_trail(&dc4, &t, &[1, 4, 1, 4]).ok());

        let dk4 = complete(4).doubled();
        let t = solved(f_trail_on_independent_set(&dk4, &[0], &[1; 4], none).unwrap());
        assert_eq!(t.visits(4)[0], 1);
        assert!(validate_trail(&dk4, &t, &[1, 9, 9, 9]).ok());
    }

    #[test]
    fn validator_reports() {
        let c4 = cycle(4);
        let ok = ClosedTrail { vertices: vec![0, 1, 2, 3], edges: vec![0, 1, 2, 3] };
        assert!(validate_trail(&c4, &ok, &[1; 4]).ok());
        let short = ClosedWalk { vertices: vec![0, 1], edges: vec![0, 0] };
        let r = validate_walk(&c4, &short, &[2; 4], &SpanningSubgraph::empty());
        assert!(r.violations.iter().any(|v| v == "not spanning"));
        let rep = ClosedTrail { vertices: vec![0, 1], edges: vec![0, 0] };
        assert!(validate_trail(&c4, &rep, &[2; 4]).violations.iter().any(|v| v.contains("repeated")));
    }
}
