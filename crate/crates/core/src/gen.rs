//! Seeded instance generators, exhaustive small-graph pools and the
//! `{r, r+1}`-factor fixture.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SpanningSubgraph};
use crate::packing::is_m_tree_connected;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edges(n, &edges).expect("valid")
}

pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::from_edges(n.max(1), &edges).expect("valid")
}

/// K_{1,k} with centre 0.
pub fn star(k: usize) -> Multigraph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Multigraph::from_edges(k + 1, &edges).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Multigraph::from_edges(a + b, &edges).expect("valid")
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Multigraph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

/// Circulant C_n(offsets); offsets in `1..=n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Multigraph {
    let mut edges = Vec::new();
    for &d in offsets {
        assert!(d >= 1 && 2 * d <= n);
        let count = if 2 * d == n { n / 2 } else { n };
        for i in 0..count {
            edges.push((i, (i + d) % n));
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Multigraph {
    Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).expect("valid")
}

pub fn complement(g: &Multigraph) -> Multigraph {
    let n = g.vertex_count();
    let masks = g.adjacency_masks();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if masks[u] >> v & 1 == 0 {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

/// Line graph; always claw-free.
pub fn line_graph(g: &Multigraph) -> Multigraph {
    let m = g.edge_count();
    let mut edges = Vec::new();
    for a in 0..m {
        let (u, v) = g.edge(a);
        for b in a + 1..m {
            let (x, y) = g.edge(b);
            if u == x || u == y || v == x || v == y {
                edges.push((a, b));
            }
        }
    }
    Multigraph::from_edges(m, &edges).expect("valid")
}

/// Uniform random labelled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, r: &mut impl Rng) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| r.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &s in &seq {
        let leaf = *leaves.iter().next().expect("leaf exists");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Connected simple graph: random tree plus each other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, r: &mut impl Rng) -> Multigraph {
    let tree = random_tree(n, r);
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &tree {
        present[u][v] = true;
        present[v][u] = true;
    }
    let mut edges = tree;
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

/// Simple graph where each pair is present with probability `p`.
pub fn random_gnp(n: usize, p: f64, r: &mut impl Rng) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

/// Random simple r-regular graph: points are paired one valid pair at a time,
/// restarting when the remaining points admit no valid pair.
pub fn random_regular(n: usize, r: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if n * r % 2 == 1 || r >= n {
        return Err(Error::InvalidParameter(format!("no simple {r}-regular graph on {n} vertices")));
    }
    'attempt: for _ in 0..1000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(points.len() / 2);
        while !points.is_empty() {
            let mut chosen = None;
            for _ in 0..100 {
                let i = rng.random_range(0..points.len());
                let j = rng.random_range(0..points.len());
                let (u, v) = (points[i].min(points[j]), points[i].max(points[j]));
                if u != v && !seen.contains(&(u, v)) {
                    chosen = Some((i.max(j), i.min(j), u, v));
                    break;
                }
            }
            let Some((hi, lo, u, v)) = chosen else { continue 'attempt };
            points.swap_remove(hi);
            points.swap_remove(lo);
            seen.insert((u, v));
            edges.push((u, v));
        }
        return Multigraph::from_edges(n, &edges);
    }
    Err(Error::InvalidParameter("pairing model retry cap reached".into()))
}

/// Edge connectivity by unit-capacity max flow from vertex 0.
pub fn edge_connectivity(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return usize::MAX;
    }
    (1..n).map(|t| max_flow(g, 0, t, usize::MAX)).min().unwrap_or(0)
}

/// Whether every cut has at least `k` edges.
pub fn is_k_edge_connected(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    n >= 1 && (1..n).all(|t| max_flow(g, 0, t, k) >= k)
}

fn max_flow(g: &Multigraph, s: usize, t: usize, limit: usize) -> usize {
    let m = g.edge_count();
    // residual capacity per arc: arc 2e runs u->v, arc 2e+1 runs v->u
    let mut res = vec![1i32; 2 * m];
    let mut flow = 0;
    let n = g.vertex_count();
    while flow < limit {
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &(y, e) in g.incident(x) {
                let arc = if g.edge(e).0 == x { 2 * e } else { 2 * e + 1 };
                if !seen[y] && res[arc] > 0 {
                    seen[y] = true;
                    via[y] = arc;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut cur = t;
        while cur != s {
            let arc = via[cur];
            res[arc] -= 1;
            res[arc ^ 1] += 1;
            let (u, v) = g.edge(arc / 2);
            cur = if arc % 2 == 0 { u } else { v };
        }
        flow += 1;
    }
    flow
}

/// Whether no vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &Multigraph) -> Result<bool> {
    if !g.is_simple() {
        return Err(Error::InvalidParameter("claw-freeness is checked on simple graphs only".into()));
    }
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    for c in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&v| adj[c][v]).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    let (a, b, d) = (nb[i], nb[j], nb[k]);
                    if !adj[a][b] && !adj[a][d] && !adj[b][d] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Generator kinds; every emitted instance is verified against its class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GenKind {
    /// Random `k`-regular graph whose edge connectivity is at least `k`.
    KEdgeConnected { n: usize, k: usize },
    /// Union of `k` random spanning trees plus `extra` random edges.
    KTreeConnected { n: usize, k: usize, extra: usize },
    /// Every edge of a random connected graph duplicated.
    Doubled { n: usize },
    Circulant { n: usize, offsets: Vec<usize> },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Line graph of a random connected graph on `n` vertices.
    ClawFree { n: usize },
    /// Random connected simple graph with edge probability `p_percent`/100.
    Connected { n: usize, p_percent: u32 },
}

/// A generated graph with its class metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Multigraph,
    pub kind: GenKind,
    pub seed: u64,
    pub simple: bool,
}

impl Instance {
    pub fn to_json(&self) -> serde_json::Value {
        let mut j = self.graph.to_json();
        j.class = Some(serde_json::json!({
            "generator": self.kind,
            "seed": self.seed,
            "simple": self.simple,
        }));
        serde_json::to_value(j).expect("serializable")
    }

    /// Re-checks the class claim.
    pub fn verify(&self) -> bool {
        let g = &self.graph;
        let class_ok = match &self.kind {
            GenKind::KEdgeConnected { k, .. } => is_k_edge_connected(g, *k),
            GenKind::KTreeConnected { k, .. } => is_m_tree_connected(g, *k),
            GenKind::Doubled { .. } => is_m_tree_connected(g, 2),
            GenKind::ClawFree { .. } => g.is_connected() && is_claw_free(g).unwrap_or(false),
            _ => g.is_connected(),
        };
        class_ok && g.is_simple() == self.simple
    }
}

/// Deterministic per `(kind, seed)`.
pub fn gen(kind: &GenKind, seed: u64) -> Result<Instance> {
    let mut r = rng(seed);
    for _ in 0..1000 {
        let graph = match kind {
            GenKind::KEdgeConnected { n, k } => random_regular(*n, *k, &mut r)?,
            GenKind::KTreeConnected { n, k, extra } => {
                if *n == 0 || *k == 0 {
                    return Err(Error::InvalidParameter("n and k must be positive".into()));
                }
                let mut edges = Vec::new();
                for _ in 0..*k {
                    edges.extend(random_tree(*n, &mut r));
                }
                if *n >= 2 {
                    for _ in 0..*extra {
                        let u = r.random_range(0..*n);
                        let mut v = r.random_range(0..*n - 1);
                        if v >= u {
                            v += 1;
                        }
                        edges.push((u, v));
                    }
                }
                Multigraph::from_edges(*n, &edges)?
            }
            GenKind::Doubled { n } => random_connected(*n, 0.3, &mut r).doubled(),
            GenKind::Circulant { n, offsets } => {
                if offsets.iter().any(|&d| d == 0 || 2 * d > *n) {
                    return Err(Error::InvalidParameter("circulant offsets must lie in 1..=n/2".into()));
                }
                circulant(*n, offsets)
            }
            GenKind::Complete { n } => complete(*n),
            GenKind::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            GenKind::ClawFree { n } => line_graph(&random_connected(*n, 0.3, &mut r)),
            GenKind::Connected { n, p_percent } => {
                random_connected(*n, f64::from(*p_percent).min(100.0) / 100.0, &mut r)
            }
        };
        let inst = Instance { simple: graph.is_simple(), graph, kind: kind.clone(), seed };
        if inst.verify() {
            return Ok(inst);
        }
        if matches!(kind, GenKind::Circulant { .. } | GenKind::Complete { .. } | GenKind::CompleteBipartite { .. }) {
            break;
        }
    }
    Err(Error::InvalidParameter(format!("could not generate a verified {kind:?} instance")))
}

/// Spanning subgraph with every degree in `{r, r+1}`, preferring an r-factor.
pub fn factor_fixture(g: &Multigraph, r: usize) -> Result<Option<SpanningSubgraph>> {
    const CAP: usize = 12;
    if g.vertex_count() > CAP {
        return Err(Error::CapExceeded { size: g.vertex_count(), cap: CAP });
    }
    for hi in [r, r + 1] {
        let mut chosen = Vec::new();
        let mut deg = vec![0usize; g.vertex_count()];
        let mut remaining = g.degrees();
        if factor_search(g, r, hi, 0, &mut deg, &mut remaining, &mut chosen) {
            return Ok(Some(SpanningSubgraph::from_ids(chosen)));
        }
    }
    Ok(None)
}

fn factor_search(
    g: &Multigraph,
    lo: usize,
    hi: usize,
    e: usize,
    deg: &mut [usize],
    remaining: &mut [usize],
    chosen: &mut Vec<usize>,
) -> bool {
    if e == g.edge_count() {
        return deg.iter().all(|&d| d >= lo && d <= hi);
    }
    let (u, v) = g.edge(e);
    remaining[u] -= 1;
    remaining[v] -= 1;
    let mut found = false;
    if deg[u] < hi && deg[v] < hi {
        deg[u] += 1;
        deg[v] += 1;
        chosen.push(e);
        found = factor_search(g, lo, hi, e + 1, deg, remaining, chosen);
        if !found {
            chosen.pop();
        }
        deg[u] -= 1;
        deg[v] -= 1;
    }
    if !found && deg[u] + remaining[u] >= lo && deg[v] + remaining[v] >= lo {
        found = factor_search(g, lo, hi, e + 1, deg, remaining, chosen);
    }
    remaining[u] += 1;
    remaining[v] += 1;
    found
}

/// All connected simple graphs on `n` vertices up to isomorphism.
pub fn exhaustive_connected(n: usize) -> Vec<Multigraph> {
    assert!((1..=10).contains(&n), "exhaustive pool supports 1..=10 vertices");
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for k in 2..=n {
        let mut classes: HashMap<u64, Vec<(Vec<u16>, Vec<u64>)>> = HashMap::new();
        let mut next = Vec::new();
        for masks in &level {
            for sub in 1u16..(1 << (k - 1)) {
                let mut cand = masks.clone();
                for (v, m) in cand.iter_mut().enumerate() {
                    if sub >> v & 1 == 1 {
                        *m |= 1 << (k - 1);
                    }
                }
                cand.push(sub);
                let colors = refine_colors(&cand);
                let key = graph_key(&colors, &cand);
                let bucket = classes.entry(key).or_default();
                if bucket.iter().any(|(other, oc)| isomorphic(&cand, &colors, other, oc)) {
                    continue;
                }
                bucket.push((cand.clone(), colors));
                next.push(cand);
            }
        }
        level = next;
    }
    level.iter().map(|masks| masks_to_graph(masks)).collect()
}

/// All connected simple graphs with `1..=n` vertices.
pub fn exhaustive_connected_up_to(n: usize) -> Vec<Multigraph> {
    (1..=n).flat_map(exhaustive_connected).collect()
}

fn masks_to_graph(masks: &[u16]) -> Multigraph {
    let n = masks.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if masks[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid")
}

fn mix(mut x: u64) -> u64 {
    x ^= x >> 33;
    x = x.wrapping_mul(0xff51_afd7_ed55_8ccd);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
    x ^ (x >> 33)
}

/// Colour refinement seeded by degree and triangle count.
fn refine_colors(masks: &[u16]) -> Vec<u64> {
    let n = masks.len();
    let mut colors: Vec<u64> = (0..n)
        .map(|v| {
            let deg = masks[v].count_ones() as u64;
            let mut tri = 0u64;
            let mut rest = masks[v];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                tri += (masks[w] & masks[v]).count_ones() as u64;
            }
            mix(deg << 32 | tri)
        })
        .collect();
    for _ in 0..n.min(4) {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = Vec::new();
                let mut rest = masks[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    nb.push(colors[w]);
                }
                nb.sort_unstable();
                nb.iter().fold(mix(colors[v]), |acc, &c| mix(acc ^ c.wrapping_add(0x9e37)))
            })
            .collect();
        colors = next;
    }
    colors
}

fn graph_key(colors: &[u64], masks: &[u16]) -> u64 {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    let edges: u64 = masks.iter().map(|m| m.count_ones() as u64).sum();
    sorted.iter().fold(mix(edges), |acc, &c| mix(acc ^ c))
}

/// Backtracking isomorphism test constrained by refined colours.
fn isomorphic(a: &[u16], ac: &[u64], b: &[u16], bc: &[u64]) -> bool {
    let n = a.len();
    let mut order: Vec<usize> = (0..n).collect();
    // rarest colours first, then BFS-ish by adjacency to earlier vertices
    let freq = |c: u64| ac.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (freq(ac[v]), v));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u16;
    fn go(
        i: usize,
        order: &[usize],
        a: &[u16],
        ac: &[u64],
        b: &[u16],
        bc: &[u64],
        map: &mut [usize],
        used: &mut u16,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.len() {
            if *used >> w & 1 == 1 || bc[w] != ac[v] {
                continue;
            }
            let ok = order[..i].iter().all(|&x| (a[v] >> x & 1) == (b[w] >> map[x] & 1));
            if ok {
                map[v] = w;
                *used |= 1 << w;
                if go(i + 1, order, a, ac, b, bc, map, used) {
                    return true;
                }
                *used &= !(1 << w);
                map[v] = usize::MAX;
            }
        }
        false
    }
    go(0, &order, a, ac, b, bc, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_match_known_sequence() {
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &c) in expected.iter().enumerate() {
            let pool = exhaustive_connected(i + 1);
            assert_eq!(pool.len(), c, "n = {}", i + 1);
            assert!(pool.iter().all(|g| g.is_connected() && g.is_simple()));
        }
    }

    #[test]
    fn generator_examples() {
        let inst = gen(&GenKind::KTreeConnected { n: 6, k: 2, extra: 0 }, 1).unwrap();
        assert!(is_m_tree_connected(&inst.graph, 2));
        assert!(is_m_tree_connected(&cycle(4).doubled(), 2));
        let c8 = circulant(8, &[1, 2]);
        assert!(c8.degrees().iter().all(|&d| d == 4));
        assert_eq!(edge_connectivity(&c8), 4);
        let inst = gen(&GenKind::KEdgeConnected { n: 10, k: 3 }, 7).unwrap();
        assert!(inst.graph.degrees().iter().all(|&d| d == 3));
        assert!(edge_connectivity(&inst.graph) >= 3);
        assert_eq!(gen(&GenKind::ClawFree { n: 6 }, 3).unwrap(), gen(&GenKind::ClawFree { n: 6 }, 3).unwrap());
        assert!(!is_claw_free(&star(3)).unwrap());
        assert!(is_claw_free(&line_graph(&complete(5))).unwrap());
    }

    #[test]
    fn factor_fixture_examples() {
        let c4 = cycle(4);
        assert_eq!(factor_fixture(&c4, 2).unwrap(), Some(SpanningSubgraph::full(&c4)));
        let k4 = complete(4);
        let f = factor_fixture(&k4, 2).unwrap().unwrap();
        assert!(f.degrees(&k4).iter().all(|&d| d == 2));
        assert!(f.is_connected_spanning(&k4));
        assert_eq!(factor_fixture(&star(3), 2).unwrap(), None);
    }
}
