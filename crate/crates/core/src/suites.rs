//! Property suites shared by the acceptance test and `treeconn verify`.
//!
//! Each suite draws its instances from explicit seeds, runs the constructive
//! algorithm, and checks every output against an independent brute-force
//! computation.

use crate::error::{Error, Result};
use crate::excess::{bounded_m_subgraph, bounded_spanning_tree, derive_spec, DegreeSpec, ForestMode, SpecKind};
use crate::factors::{connected_24_factor, exhaustive_extension, extend_factor_to_connected, is_connected_24_factor, validate_extension};
use crate::gen::{
    complement, complete, complete_multipartite, cycle, exhaustive_connected, exhaustive_connected_up_to, gen,
    is_k_edge_connected, random_connected, random_gnp, random_regular, rng, GenKind,
};
use crate::graph::{label_components, Multigraph, SpanningSubgraph, VertexPartition};
use crate::oracle::{
    check_hypothesis, components_oracle, omega_without, partition_strength, strong_toughness, toughness, Hypothesis,
    Verdict,
};
use crate::outcome::Outcome;
use crate::packing::{is_m_tree_connected, m_components, omega_m, pack_trees, PackResult};
use crate::parity::{is_parity_forest, parity_forest, ParitySpec};
use crate::ratio::{frac, int, Rational};
use crate::walks::{f_trail, f_walk, validate_trail, validate_walk};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use std::ops::Range;

/// Tally of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: usize,
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub inconclusive: usize,
    /// Outcomes that are valid but forbidden by the suite, e.g. certificates
    /// where the hypothesis is known to hold.
    pub unexpected: usize,
    pub max_inconclusive_rate: f64,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(id: usize, name: &'static str) -> Self {
        SuiteReport {
            id,
            name,
            checked: 0,
            failures: 0,
            inconclusive: 0,
            unexpected: 0,
            max_inconclusive_rate: 0.0,
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, note: String) {
        self.failures += 1;
        if self.notes.len() < 10 {
            self.notes.push(note);
        }
    }

    fn forbid(&mut self, note: String) {
        self.unexpected += 1;
        if self.notes.len() < 10 {
            self.notes.push(note);
        }
    }

    fn undecided(&mut self, note: String) {
        self.inconclusive += 1;
        if self.notes.len() < 10 {
            self.notes.push(note);
        }
    }

    pub fn inconclusive_rate(&self) -> f64 {
        if self.checked == 0 {
            0.0
        } else {
            self.inconclusive as f64 / self.checked as f64
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
            && self.unexpected == 0
            && self.inconclusive_rate() <= self.max_inconclusive_rate
            && (self.inconclusive == 0 || self.max_inconclusive_rate > 0.0)
    }

    /// One summary line: `PASS [n] name: ...`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: checked={} failures={} unexpected={} inconclusive={} ({:.1}%)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failures,
            self.unexpected,
            self.inconclusive,
            100.0 * self.inconclusive_rate()
        )
    }
}

/// Default seed range of suite `id`.
pub fn default_seeds(id: usize) -> Range<u64> {
    match id {
        2 => 0..500,
        3 => 0..200,
        4 | 5 | 11 => 0..200,
        7 => 0..300,
        8 => 0..100,
        _ => 0..1,
    }
}

pub const SUITE_COUNT: usize = 11;

/// Short names accepted by `suite_id`, in suite order.
pub const SUITE_NAMES: [&str; SUITE_COUNT] = [
    "packing-duality",
    "component-oracle",
    "accounting-identities",
    "degree-bounded-trees",
    "half-degree-subgraphs",
    "tough-walks",
    "parity-forests",
    "tough-trails",
    "connected-24-factors",
    "toughness-bridge",
    "factor-extension",
];

/// Suite id from a short name or a number.
pub fn suite_id(name: &str) -> Option<usize> {
    if let Ok(id) = name.parse::<usize>() {
        return (1..=SUITE_COUNT).contains(&id).then_some(id);
    }
    SUITE_NAMES.iter().position(|&s| s == name).map(|i| i + 1)
}

/// Runs suite `id` (1-based) over `seeds`.
pub fn run_suite(id: usize, seeds: Range<u64>) -> Result<SuiteReport> {
    match id {
        1 => packing_duality(seeds),
        2 => component_oracle(seeds),
        3 => accounting_identities(seeds),
        4 => degree_bounded_trees(seeds),
        5 => half_degree_subgraphs(seeds),
        6 => tough_walks(seeds),
        7 => parity_forests(seeds),
        8 => tough_trails(seeds),
        9 => factors_24(seeds),
        10 => toughness_bridge(seeds),
        11 => factor_extension(seeds),
        _ => Err(Error::InvalidParameter(format!("unknown suite {id}; expected 1..={SUITE_COUNT}"))),
    }
}

fn regular_k_edge_connected(n: usize, r: usize, k: usize, extra: usize, seed: u64) -> Result<Multigraph> {
    let mut rg = rng(seed);
    for _ in 0..200 {
        let mut g = random_regular(n, r, &mut rg)?;
        for _ in 0..extra {
            let u = rg.random_range(0..n);
            let v = (u + rg.random_range(1..n)) % n;
            g.push_edge(u, v)?;
        }
        if is_k_edge_connected(&g, k) {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!("no {k}-edge-connected {r}-regular graph on {n} vertices")))
}

fn degree_violations(g: &Multigraph, deg: &[usize], bound: impl Fn(usize) -> usize) -> Option<String> {
    (0..g.vertex_count())
        .find(|&v| deg[v] > bound(v))
        .map(|v| format!("vertex {v} has degree {} > {}", deg[v], bound(v)))
}

fn degree_bounded_trees(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(4, "degree-bounded spanning trees of highly connected graphs");
    rep.max_inconclusive_rate = 0.05;
    for seed in seeds {
        let mut r = rng(seed ^ 0x4444);
        let edge_route = seed % 2 == 0;
        let (g, k) = if edge_route {
            let k = [2usize, 3, 4][(seed / 2 % 3) as usize];
            let mut n = r.random_range(k + 3..=30);
            let deg = k + r.random_range(0..3);
            if n * deg % 2 == 1 {
                n -= 1;
            }
            let extra = if seed % 3 == 0 { n / 3 } else { 0 };
            (regular_k_edge_connected(n, deg, k, extra, seed)?, k)
        } else {
            let k = 1 + (seed / 2 % 3) as usize;
            let n = r.random_range(4..=30);
            let extra = r.random_range(0..=n);
            (gen(&GenKind::KTreeConnected { n, k, extra }, seed)?.graph, k)
        };
        let n = g.vertex_count();
        for u in [None, Some(r.random_range(0..n))] {
            let kind = if edge_route {
                SpecKind::KEdgeConnected { k, m: 1, u }
            } else {
                SpecKind::KTreeConnected { k, m: 1, u }
            };
            let spec = derive_spec(&g, &kind)?;
            rep.checked += 1;
            let tag = format!("seed {seed} ({kind:?}, n={n})");
            match bounded_spanning_tree(&g, &spec, ForestMode::Plain)? {
                Outcome::Solution(t) => {
                    if !t.is_spanning_tree(&g) {
                        rep.fail(format!("{tag}: output is not a spanning tree"));
                        continue;
                    }
                    let deg = t.degrees(&g);
                    let bound = |v: usize| {
                        let d = g.degree(v);
                        if Some(v) == u {
                            d / k
                        } else if edge_route {
                            (d - 2).div_ceil(k) + 2
                        } else {
                            (d - 1).div_ceil(k) + 1
                        }
                    };
                    if let Some(msg) = degree_violations(&g, &deg, bound) {
                        rep.fail(format!("{tag}: {msg}"));
                    }
                }
                Outcome::Certificate(c) => rep.forbid(format!("{tag}: certificate {:?}", c.set)),
                Outcome::Deficient(_) => rep.fail(format!("{tag}: reported deficient")),
                Outcome::Inconclusive(why) => rep.undecided(format!("{tag}: {why}")),
            }
        }
    }
    Ok(rep)
}

fn half_degree_subgraphs(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(5, "m-tree-connected subgraphs within half the degree");
    for seed in seeds {
        let mut r = rng(seed ^ 0x5555);
        let m = 1 + (seed % 2) as usize;
        let deg = 2 * m + r.random_range(0..3);
        let mut n = r.random_range(deg + 2..=24);
        if n * deg % 2 == 1 {
            n -= 1;
        }
        let extra = if seed % 3 == 0 { n / 3 } else { 0 };
        let g = regular_k_edge_connected(n, deg, 2 * m, extra, seed)?;
        let u = r.random_range(0..n);
        let spec = derive_spec(&g, &SpecKind::KEdgeConnected { k: 2 * m, m, u: Some(u) })?;
        rep.checked += 1;
        let tag = format!("seed {seed} (m={m}, n={n}, r={deg})");
        match bounded_m_subgraph(&g, &spec, ForestMode::Plain)? {
            Outcome::Solution(h) => {
                if !is_m_tree_connected(&h.to_graph(&g).graph, m) {
                    rep.fail(format!("{tag}: output is not {m}-tree-connected"));
                    continue;
                }
                let degs = h.degrees(&g);
                let bound = |v: usize| {
                    let d = g.degree(v);
                    if v == u {
                        d / 2
                    } else {
                        d.div_ceil(2) + m
                    }
                };
                if let Some(msg) = degree_violations(&g, &degs, bound) {
                    rep.fail(format!("{tag}: {msg}"));
                }
            }
            Outcome::Certificate(c) => rep.fail(format!("{tag}: certificate {:?}", c.set)),
            Outcome::Deficient(_) => rep.fail(format!("{tag}: reported deficient")),
            Outcome::Inconclusive(why) => rep.fail(format!("{tag}: inconclusive: {why}")),
        }
    }
    Ok(rep)
}

fn packing_duality(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(1, "tree packing agrees with partition enumeration");
    let pool = exhaustive_connected_up_to(7);
    for _ in seeds {
        for g in &pool {
            let strength = partition_strength(g)?;
            for m in 1..=3 {
                rep.checked += 1;
                let expect = strength.is_none_or(|s| s >= m);
                let tag = format!("n={} edges={:?} m={m}", g.vertex_count(), g.edges());
                match pack_trees(g, m)? {
                    PackResult::Packing(p) => {
                        if !expect {
                            rep.fail(format!("{tag}: packed but strength is {strength:?}"));
                        } else if !p.validate(g) {
                            rep.fail(format!("{tag}: invalid packing"));
                        }
                    }
                    PackResult::Deficient(d) => {
                        if expect {
                            rep.fail(format!("{tag}: deficient but strength is {strength:?}"));
                        } else if !d.validate(g) {
                            rep.fail(format!("{tag}: invalid deficient partition"));
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn same_partition(n: usize, a: &VertexPartition, b: &VertexPartition) -> bool {
    let (ia, ib) = (a.part_index(n), b.part_index(n));
    (0..n).all(|u| (0..n).all(|v| (ia[u] == ia[v]) == (ib[u] == ib[v])))
}

fn component_oracle(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(2, "m-tree-connected components match subset enumeration");
    for seed in seeds {
        let mut r = rng(seed ^ 0x2222);
        let n = r.random_range(1..=10);
        let p = r.random_range(0.15..0.9);
        let g = match seed % 3 {
            0 => random_gnp(n, p, &mut r),
            1 => random_connected(n, p, &mut r),
            _ => random_gnp(n, p / 2.0, &mut r).doubled(),
        };
        let tag = format!("seed {seed} (n={n})");
        let mut chain = Vec::new();
        for m in 1..=3 {
            rep.checked += 1;
            let fast = m_components(&g, m)?;
            let (oracle_parts, oracle_omega) = components_oracle(&g, m)?;
            if !same_partition(n, &fast.partition, &oracle_parts) {
                rep.fail(format!("{tag}: components differ for m={m}"));
            }
            let omega = omega_m(&g, m)?;
            if omega != oracle_omega || fast.omega != oracle_omega {
                rep.fail(format!("{tag}: omega_{m} = {omega} but the oracle gives {oracle_omega}"));
            }
            chain.push(omega);
        }
        if !(chain[0] <= chain[1] && chain[1] <= chain[2] && chain[2] <= int(n as i64)) {
            rep.fail(format!("{tag}: chain {chain:?} is not monotone up to n"));
        }
    }
    Ok(rep)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

fn random_subforest(g: &Multigraph, keep: f64, r: &mut impl Rng) -> SpanningSubgraph {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(r);
    let mut uf = petgraph::unionfind::UnionFind::<usize>::new(g.vertex_count());
    SpanningSubgraph::from_ids(order.into_iter().filter(|&e| {
        let (a, b) = g.edge(e);
        r.random_bool(keep) && uf.union(a, b)
    }))
}

/// `Σ_S d_{T−F} = ω(T∖[S,F]) − ω(T) + e_{T−F}(S)` for every `S`.
fn tree_identity(g: &Multigraph, t: &SpanningSubgraph, f: &SpanningSubgraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let loose = t.difference(f);
    let dl = loose.degrees(g);
    let omega_t = t.component_count(g) as i64;
    subsets(n).find(|s| {
        let mut ins = vec![false; n];
        for &v in s {
            ins[v] = true;
        }
        let kept = t.edges().iter().map(|&e| (e, g.edge(e))).filter(|&(e, (a, b))| f.contains(e) || (!ins[a] && !ins[b]));
        let (_, omega) = label_components(n, kept.map(|(_, ab)| ab));
        let inside = loose.edges().iter().filter(|&&e| {
            let (a, b) = g.edge(e);
            ins[a] && ins[b]
        });
        let lhs: i64 = s.iter().map(|&v| dl[v] as i64).sum();
        lhs != omega as i64 - omega_t + inside.count() as i64
    })
}

/// `Ω_m(H∖S) = Σ_S (d_H/m − 1) + 1 − e_H(S)/m` for every `S`.
fn minimal_identity(h: &Multigraph, m: usize) -> Result<Option<Vec<usize>>> {
    let n = h.vertex_count();
    let mm = int(m as i64);
    for s in subsets(n) {
        let lhs = omega_without(h, &s, m)?;
        let deg: Rational = s.iter().map(|&v| int(h.degree(v) as i64) / mm - int(1)).sum();
        let rhs = deg + int(1) - int(h.count_internal_edges(&s)? as i64) / mm;
        if lhs != rhs {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn accounting_identities(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(3, "forest accounting identities on produced trees and subgraphs");
    for seed in seeds {
        let mut r = rng(seed ^ 0x3333);
        let n = r.random_range(2..=10);
        let g = random_connected(n, r.random_range(0.2..0.8), &mut r);
        let f = random_subforest(&g, 0.3, &mut r);
        let eta = int(r.random_range(2..=5));
        let mode = if r.random_bool(0.5) { ForestMode::Plain } else { ForestMode::ForestException };
        let spec = DegreeSpec::uniform(n, eta, int(0), 1).with_forest(f.clone());
        let tag = format!("seed {seed} (n={n})");
        if let Outcome::Solution(t) = bounded_spanning_tree(&g, &spec, mode)? {
            rep.checked += 1;
            if !f.is_subset_of(&t) {
                rep.fail(format!("{tag}: tree misses the forest"));
            } else if let Some(s) = tree_identity(&g, &t, &f) {
                rep.fail(format!("{tag}: tree identity fails at S={s:?}"));
            }
        }
        let m = r.random_range(2..=3);
        let gm = gen(&GenKind::KTreeConnected { n, k: m, extra: r.random_range(0..=n) }, seed)?.graph;
        let spec = DegreeSpec::uniform(n, int(r.random_range(3..=6)), int(0), m);
        let host = match bounded_m_subgraph(&gm, &spec, ForestMode::Plain)? {
            Outcome::Solution(h) => h,
            _ => SpanningSubgraph::full(&gm),
        };
        let hg = host.to_graph(&gm);
        if let PackResult::Packing(p) = pack_trees(&hg.graph, m)? {
            rep.checked += 1;
            let basis = p.trees.iter().fold(SpanningSubgraph::empty(), |a, t| a.union(t));
            let minimal = basis.to_graph(&hg.graph).graph;
            if let Some(s) = minimal_identity(&minimal, m)? {
                rep.fail(format!("{tag}: m={m} identity fails at S={s:?}"));
            }
        } else {
            rep.fail(format!("{tag}: produced subgraph is not {m}-tree-connected"));
        }
    }
    Ok(rep)
}

fn tough_walks(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(6, "tough graphs have w-walks");
    let none = SpanningSubgraph::empty();
    for _ in seeds {
        for n in 1..=9 {
            for g in exhaustive_connected(n) {
                let t = toughness(&g)?;
                for w in 2..=4i64 {
                    if !t.at_least(&frac(1, w - 1)) {
                        continue;
                    }
                    rep.checked += 1;
                    let f = vec![w; n];
                    let tag = format!("w={w} edges={:?}", g.edges());
                    match f_walk(&g, &f, &none)? {
                        Outcome::Solution(walk) => {
                            let report = validate_walk(&g, &walk, &f, &none);
                            if !report.ok() {
                                rep.fail(format!("{tag}: {:?}", report.violations));
                            }
                        }
                        Outcome::Certificate(c) => rep.forbid(format!("{tag}: certificate {:?}", c.set)),
                        Outcome::Deficient(_) => rep.fail(format!("{tag}: deficient")),
                        Outcome::Inconclusive(why) => rep.undecided(format!("{tag}: {why}")),
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Whether some forest meets the caps and parities, by backtracking.
fn parity_forest_exists(g: &Multigraph, caps: &[i64], odd: &[bool]) -> bool {
    let n = g.vertex_count();
    let mut last = vec![None; n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        last[a] = Some(e);
        last[b] = Some(e);
    }
    if (0..n).any(|v| last[v].is_none() && odd[v]) {
        return false;
    }
    fn root(p: &[usize], mut v: usize) -> usize {
        while p[v] != v {
            v = p[v];
        }
        v
    }
    fn go(g: &Multigraph, e: usize, caps: &[i64], odd: &[bool], last: &[Option<usize>], deg: &mut [i64], p: &mut Vec<usize>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (a, b) = g.edge(e);
        let settled = |deg: &[i64], v: usize| last[v] != Some(e) || (deg[v] % 2 == 1) == odd[v];
        let (ra, rb) = (root(p, a), root(p, b));
        if ra != rb && deg[a] < caps[a] && deg[b] < caps[b] {
            deg[a] += 1;
            deg[b] += 1;
            p[ra] = rb;
            if settled(deg, a) && settled(deg, b) && go(g, e + 1, caps, odd, last, deg, p) {
                return true;
            }
            p[ra] = ra;
            deg[a] -= 1;
            deg[b] -= 1;
        }
        settled(deg, a) && settled(deg, b) && go(g, e + 1, caps, odd, last, deg, p)
    }
    let mut parent: Vec<usize> = (0..n).collect();
    go(g, 0, caps, odd, &last, &mut vec![0; n], &mut parent)
}

fn parity_forests(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(7, "parity forests agree with exhaustive search");
    for seed in seeds {
        let mut r = rng(seed ^ 0x7777);
        let n = r.random_range(1..=8);
        let g = random_gnp(n, r.random_range(0.2..0.7), &mut r);
        let f: Vec<i64> = (0..n).map(|_| r.random_range(0..=3)).collect();
        let spec = if seed % 2 == 0 {
            ParitySpec::FParity { f: f.clone() }
        } else {
            let mut q: Vec<usize> = (0..n).filter(|_| r.random_bool(0.5)).collect();
            if q.len() % 2 == 1 {
                q.pop();
            }
            let f: Vec<i64> = f.iter().enumerate().map(|(v, &x)| if q.contains(&v) { x.max(1) } else { x }).collect();
            ParitySpec::Prescribed { f, q }
        };
        let caps = spec.effective_caps(n)?;
        let odd: Vec<bool> = caps.iter().map(|c| c % 2 == 1).collect();
        let exists = parity_forest_exists(&g, &caps, &odd);
        rep.checked += 1;
        let tag = format!("seed {seed} (n={n}, {spec:?})");
        match parity_forest(&g, &spec)? {
            Outcome::Solution(fr) => {
                if !is_parity_forest(&g, &fr, &caps) {
                    rep.fail(format!("{tag}: output fails cap or parity"));
                }
                if !exists {
                    rep.fail(format!("{tag}: exhaustive search finds no forest"));
                }
            }
            Outcome::Certificate(c) => {
                if exists {
                    rep.fail(format!("{tag}: certificate {:?} but a forest exists", c.set));
                } else if !c.is_violation() {
                    rep.fail(format!("{tag}: certificate does not violate"));
                }
            }
            Outcome::Deficient(_) => rep.fail(format!("{tag}: deficient")),
            Outcome::Inconclusive(why) => rep.fail(format!("{tag}: inconclusive: {why}")),
        }
    }
    Ok(rep)
}

fn trail_instance(seed: u64, attempt: u64) -> Result<(Multigraph, Vec<i64>, Rational)> {
    let mut r = rng(seed.wrapping_mul(1000).wrapping_add(attempt) ^ 0x8888);
    let n = r.random_range(3..=12);
    let g = match attempt % 3 {
        0 => gen(&GenKind::KTreeConnected { n, k: 2, extra: r.random_range(n..=3 * n) }, seed + attempt)?.graph,
        1 => random_connected(n, r.random_range(0.4..0.9), &mut r).doubled(),
        _ => random_connected(n, r.random_range(0.6..1.0), &mut r),
    };
    let f = (0..n).map(|_| r.random_range(1..=3)).collect();
    let lambda = frac(r.random_range(0..=2), 4);
    Ok((g, f, lambda))
}

fn tough_trails(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(8, "f-trails under the trail hypothesis");
    for (g, f, lambda, what) in [
        (cycle(4).doubled(), vec![1; 4], int(0), "doubled C4"),
        (complete(5), vec![2; 5], frac(1, 2), "K5"),
    ] {
        rep.checked += 1;
        match f_trail(&g, &f, lambda)? {
            Outcome::Solution(t) => {
                let report = validate_trail(&g, &t, &f);
                if !report.ok() || (what == "doubled C4" && t.edges.len() != 4) {
                    rep.fail(format!("{what}: {:?}", report.violations));
                }
            }
            other => rep.fail(format!("{what}: {}", other.status())),
        }
    }
    for seed in seeds {
        let found = (0..300).find_map(|attempt| {
            let inst = trail_instance(seed, attempt);
            match inst {
                Ok((g, _, _)) if !is_m_tree_connected(&g, 2) => None,
                Ok((g, f, lambda)) => {
                    let all: Vec<usize> = (0..g.vertex_count()).collect();
                    let hyp = Hypothesis::Trail { f: f.clone(), lambda };
                    match check_hypothesis(&g, &hyp, &all) {
                        Ok(Verdict::Holds) => Some(Ok((g, f, lambda))),
                        Ok(Verdict::Violated(_)) => None,
                        Err(e) => Some(Err(e)),
                    }
                }
                Err(e) => Some(Err(e)),
            }
        });
        let Some(inst) = found else {
            rep.fail(format!("seed {seed}: no instance satisfies the hypothesis"));
            continue;
        };
        let (g, f, lambda) = inst?;
        rep.checked += 1;
        let tag = format!("seed {seed} (n={}, f={f:?}, lambda={lambda})", g.vertex_count());
        match f_trail(&g, &f, lambda)? {
            Outcome::Solution(t) => {
                let report = validate_trail(&g, &t, &f);
                if !report.ok() {
                    rep.fail(format!("{tag}: {:?}", report.violations));
                }
            }
            Outcome::Certificate(c) => rep.forbid(format!("{tag}: certificate {:?}", c.set)),
            other => rep.fail(format!("{tag}: {}", other.status())),
        }
    }
    Ok(rep)
}

fn factors_24(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(9, "connected {2,4}-factors of tough graphs");
    let hyp = Hypothesis::Factor24;
    for seed in seeds {
        let mut pool = exhaustive_connected_up_to(8);
        let mut r = rng(seed ^ 0x9999);
        for _ in 0..400 {
            let n = r.random_range(9..=10);
            pool.push(complement(&random_gnp(n, r.random_range(0.05..0.3), &mut r)));
        }
        for g in pool {
            let n = g.vertex_count();
            if n < 2 || !is_m_tree_connected(&g, 2) {
                continue;
            }
            let all: Vec<usize> = (0..n).collect();
            if let Verdict::Violated(_) = check_hypothesis(&g, &hyp, &all)? {
                continue;
            }
            rep.checked += 1;
            let tag = format!("edges={:?}", g.edges());
            match connected_24_factor(&g)? {
                Outcome::Solution(h) => {
                    if !is_connected_24_factor(&g, &h) {
                        rep.fail(format!("{tag}: output degrees {:?}", h.degrees(&g)));
                    }
                }
                other => rep.fail(format!("{tag}: {}", other.status())),
            }
        }
    }
    Ok(rep)
}

fn toughness_bridge(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(10, "toughness bounds strong toughness");
    let m = 2usize;
    let need = int((m * m + m - 1) as i64);
    let min_order = (m * m + 3 * m + 2) / 2;
    for seed in seeds {
        let mut r = rng(seed ^ 0xaaaa);
        let mut pool: Vec<Multigraph> = (min_order..=12).map(complete).collect();
        for n in min_order..=12 {
            for _ in 0..40 {
                pool.push(complement(&random_gnp(n, r.random_range(0.02..0.2), &mut r)));
            }
            for parts in 3..=n {
                let mut sizes = vec![n / parts; parts];
                for s in sizes.iter_mut().take(n % parts) {
                    *s += 1;
                }
                pool.push(complete_multipartite(&sizes));
            }
        }
        for g in pool {
            if g.vertex_count() < min_order || !toughness(&g)?.at_least(&need) {
                continue;
            }
            rep.checked += 1;
            let st = strong_toughness(&g, m)?;
            if !st.at_least(&int(m as i64)) {
                rep.fail(format!("edges={:?}: strong toughness {:?} at {:?}", g.edges(), st.value, st.witness));
            }
        }
    }
    Ok(rep)
}

fn factor_extension(seeds: Range<u64>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(11, "factor extension meets the degree sandwich");
    for seed in seeds {
        let mut r = rng(seed ^ 0xbbbb);
        let n = r.random_range(2..=10);
        let g = random_connected(n, r.random_range(0.2..0.9), &mut r);
        let f = SpanningSubgraph::from_ids((0..g.edge_count()).filter(|_| r.random_bool(0.4)));
        let t = random_subforest(&g, 1.0, &mut r);
        rep.checked += 1;
        let tag = format!("seed {seed} (n={n})");
        match extend_factor_to_connected(&g, &f, &t)? {
            Outcome::Solution(ext) => {
                let v = validate_extension(&g, &f, &t, &ext.matching, &ext.subgraph);
                if !v.is_empty() {
                    rep.fail(format!("{tag}: {v:?}"));
                }
                if exhaustive_extension(&g, &f, &t, &ext.matching).is_none() {
                    rep.fail(format!("{tag}: exhaustive search finds no extension"));
                }
            }
            other => rep.fail(format!("{tag}: {}", other.status())),
        }
    }
    Ok(rep)
}
