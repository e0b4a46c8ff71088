//! Exhaustive evaluation of toughness and of every hypothesis family.
//!
//! Subsets are visited in increasing bitmask order (bit `i` is the `i`-th
//! domain vertex), so the first violator found is the minimum one.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SpanningSubgraph, VertexPartition};
use crate::outcome::{Certificate, Family};
use crate::packing::{m_components, omega_of_partition};
use crate::parity::odd_f_count;
use crate::ratio::{frac, int, Rational};
use num_traits::Zero;
use petgraph::unionfind::UnionFind;
use serde::{Serialize, Serializer};

/// Default vertex cap for 2^n enumerations.
pub const DEFAULT_CAP: usize = 14;
/// Cap on the size of a hypothesis domain.
pub const HYPOTHESIS_CAP: usize = 20;

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// ω of the subgraph induced on `alive`, using neighbourhood bitmasks.
pub fn components_in(masks: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = masks[v] & rest & !comp;
            comp |= nb;
            frontier |= nb;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "variant")]
pub enum ToughnessVariant {
    Classic,
    Strong { m: usize },
}

/// Exact toughness; `value = None` encodes +∞ (no disconnecting set).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessReport {
    #[serde(serialize_with = "ser_toughness")]
    pub value: Option<Rational>,
    pub witness: Vec<usize>,
    #[serde(flatten)]
    pub variant: ToughnessVariant,
}

fn ser_toughness<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&crate::ratio::format(r)),
        None => s.serialize_str("inf"),
    }
}

impl ToughnessReport {
    /// Whether the graph is `t`-tough.
    pub fn at_least(&self, t: &Rational) -> bool {
        self.value.as_ref().is_none_or(|v| v >= t)
    }
}

pub fn toughness(g: &Multigraph) -> Result<ToughnessReport> {
    toughness_with_cap(g, DEFAULT_CAP)
}

pub fn toughness_with_cap(g: &Multigraph, cap: usize) -> Result<ToughnessReport> {
    let n = g.vertex_count();
    check_cap(n, cap.min(63))?;
    let masks = g.adjacency_masks();
    let full = (1u64 << n) - 1;
    let mut best: Option<(u64, u64, u64)> = None; // (|S|, ω, mask)
    for s in 0..=full {
        let w = components_in(&masks, full & !s) as u64;
        if w < 2 {
            continue;
        }
        let k = s.count_ones() as u64;
        if best.is_none_or(|(bk, bw, _)| k * bw < bk * w) {
            best = Some((k, w, s));
        }
    }
    Ok(match best {
        Some((k, w, s)) => ToughnessReport {
            value: Some(frac(k as i64, w as i64)),
            witness: mask_to_set(s),
            variant: ToughnessVariant::Classic,
        },
        None => ToughnessReport { value: None, witness: Vec::new(), variant: ToughnessVariant::Classic },
    })
}

/// Minimum of `|S| / Ω_m(G∖S)` over sets with `Ω_m(G∖S) > 1`.
pub fn strong_toughness(g: &Multigraph, m: usize) -> Result<ToughnessReport> {
    let n = g.vertex_count();
    check_cap(n, DEFAULT_CAP)?;
    let mut best: Option<(Rational, u64)> = None;
    for s in 0..(1u64 << n) {
        let set = mask_to_set(s);
        let omega = omega_without(g, &set, m)?;
        if omega <= int(1) {
            continue;
        }
        let ratio = int(set.len() as i64) / omega;
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, s));
        }
    }
    Ok(match best {
        Some((v, s)) => ToughnessReport {
            value: Some(v),
            witness: mask_to_set(s),
            variant: ToughnessVariant::Strong { m },
        },
        None => ToughnessReport { value: None, witness: Vec::new(), variant: ToughnessVariant::Strong { m } },
    })
}

/// Ω_m(G∖S).
pub fn omega_without(g: &Multigraph, s: &[usize], m: usize) -> Result<Rational> {
    let r = g.remove_vertices(s)?;
    if m == 1 {
        return Ok(int(r.graph.component_count() as i64));
    }
    Ok(m_components(&r.graph, m)?.omega)
}

/// e^m_G(S,F): non-F edges inside `s` joining different m-tree-connected
/// components of G∖[S,F].
pub fn count_m_crossing(g: &Multigraph, s: &[usize], f: &SpanningSubgraph, m: usize) -> Result<usize> {
    let mask = g.vertex_mask(s)?;
    let r = g.remove_incident_except(s, f)?;
    let comps = m_components(&r.graph, m)?;
    let idx = comps.partition.part_index(g.vertex_count());
    Ok((0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            !f.contains(e) && mask[u] && mask[v] && idx[u] != idx[v]
        })
        .count())
}

/// A hypothesis instance: an inequality required for every `S` in a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// ω(G∖S) ≤ Σ(η−2) + 2 − λ(e_G(S)+1)
    Improvement { eta: Vec<Rational>, lambda: Rational },
    /// ω(G∖S) < 1 + Σ(η−2) + 2 − λ(e_G(S)+1)
    OmegaGS { eta: Vec<Rational>, lambda: Rational },
    /// ω(G∖[S,F]) < 1 + Σ(η−2) + 2 − λ(e_G(S,F)+1)
    OmegaGSF { eta: Vec<Rational>, lambda: Rational, forest: SpanningSubgraph },
    /// Ω_m(G∖S) < 1/m + Σ(η−2) + 2 − λ(e_G(S)+m)
    Sufficient { m: usize, eta: Vec<Rational>, lambda: Rational },
    /// Ω_m(G∖[S,F]) < 1/m + Σ(η−2) + 2 − λ(e^m_G(S,F)+m)
    FirstGen { m: usize, eta: Vec<Rational>, lambda: Rational, forest: SpanningSubgraph },
    /// ω(G∖S) ≤ Σ(f−1) + 1
    Walk { f: Vec<i64> },
    /// Ω_2(G∖S) < Σ(f+2λ−3/2) + 5/2 − λ(e_G(S)+2)
    Trail { f: Vec<i64>, lambda: Rational },
    /// Ω_m(G∖S) < 1/m + Σ(c/(2c−2)·η − 1/(c−1)) + c/(c−1)
    ToughEnough { m: usize, c: i64, eta: Vec<Rational> },
    /// ω(G∖S) ≤ (c−2m)/(2m(c−1))·|S| + 1
    PlusOne { m: usize, c: i64 },
    /// ω(G∖S) ≤ 2|S|/7 + 9/7
    Factor24,
    /// ω(G∖[S,F]) ≤ Σh + 1
    NecSuff { h: Vec<i64>, forest: SpanningSubgraph },
    /// Ω_2(G∖S) ≤ Σ(f−1/2) + 1
    IndependentTrail { f: Vec<i64> },
    /// odd_f(G∖S) ≤ Σf
    Parity { f: Vec<i64> },
}

impl Hypothesis {
    pub fn family(&self) -> Family {
        match self {
            Hypothesis::Improvement { .. } => Family::Improvement,
            Hypothesis::OmegaGS { .. } => Family::OmegaGS,
            Hypothesis::OmegaGSF { .. } => Family::OmegaGSF,
            Hypothesis::Sufficient { .. } => Family::Sufficient,
            Hypothesis::FirstGen { .. } => Family::FirstGen,
            Hypothesis::Walk { .. } => Family::Walk,
            Hypothesis::Trail { .. } => Family::Trail,
            Hypothesis::ToughEnough { .. } => Family::ToughEnough,
            Hypothesis::PlusOne { .. } => Family::PlusOne,
            Hypothesis::Factor24 => Family::Factor24,
            Hypothesis::NecSuff { .. } => Family::NecSuff,
            Hypothesis::IndependentTrail { .. } => Family::IndependentTrail,
            Hypothesis::Parity { .. } => Family::Parity,
        }
    }

    /// Both sides for one set `s`; `is_violation` tells whether it refutes.
    pub fn evaluate(&self, g: &Multigraph, s: &[usize]) -> Result<Certificate> {
        let k = int(s.len() as i64);
        let sum = |vals: &[Rational], shift: Rational| -> Rational {
            s.iter().map(|&v| vals[v] - shift).fold(Rational::zero(), |a, b| a + b)
        };
        let sum_int = |vals: &[i64], shift: Rational| -> Rational {
            s.iter().map(|&v| int(vals[v]) - shift).fold(Rational::zero(), |a, b| a + b)
        };
        let e_s = || g.count_internal_edges(s).map(|e| int(e as i64));
        let omega1 = || omega_without(g, s, 1);
        let (lhs, rhs, strict) = match self {
            Hypothesis::Improvement { eta, lambda } => {
                (omega1()?, sum(eta, int(2)) + int(2) - *lambda * (e_s()? + int(1)), false)
            }
            Hypothesis::OmegaGS { eta, lambda } => {
                (omega1()?, int(3) + sum(eta, int(2)) - *lambda * (e_s()? + int(1)), true)
            }
            Hypothesis::OmegaGSF { eta, lambda, forest } => {
                let lhs = int(g.remove_incident_except(s, forest)?.graph.component_count() as i64);
                let e = int(g.count_forest_crossing(s, forest)? as i64);
                (lhs, int(3) + sum(eta, int(2)) - *lambda * (e + int(1)), true)
            }
            Hypothesis::Sufficient { m, eta, lambda } => {
                let mm = int(*m as i64);
                let rhs = frac(1, *m as i64) + sum(eta, int(2)) + int(2) - *lambda * (e_s()? + mm);
                (omega_without(g, s, *m)?, rhs, true)
            }
            Hypothesis::FirstGen { m, eta, lambda, forest } => {
                let mm = int(*m as i64);
                let r = g.remove_incident_except(s, forest)?;
                let lhs = m_components(&r.graph, *m)?.omega;
                let e = int(count_m_crossing(g, s, forest, *m)? as i64);
                (lhs, frac(1, *m as i64) + sum(eta, int(2)) + int(2) - *lambda * (e + mm), true)
            }
            Hypothesis::Walk { f } => (omega1()?, sum_int(f, int(1)) + int(1), false),
            Hypothesis::Trail { f, lambda } => {
                let shift = frac(3, 2) - int(2) * *lambda;
                let rhs = sum_int(f, shift) + frac(5, 2) - *lambda * (e_s()? + int(2));
                (omega_without(g, s, 2)?, rhs, true)
            }
            Hypothesis::ToughEnough { m, c, eta } => {
                let scaled: Vec<Rational> = eta.iter().map(|&x| frac(*c, 2 * c - 2) * x).collect();
                let rhs = frac(1, *m as i64) + sum(&scaled, frac(1, c - 1)) + frac(*c, c - 1);
                (omega_without(g, s, *m)?, rhs, true)
            }
            Hypothesis::PlusOne { m, c } => {
                let m = *m as i64;
                (omega1()?, frac(c - 2 * m, 2 * m * (c - 1)) * k + int(1), false)
            }
            Hypothesis::Factor24 => (omega1()?, frac(2, 7) * k + frac(9, 7), false),
            Hypothesis::NecSuff { h, forest } => {
                let lhs = int(g.remove_incident_except(s, forest)?.graph.component_count() as i64);
                (lhs, sum_int(h, int(0)) + int(1), false)
            }
            Hypothesis::IndependentTrail { f } => {
                (omega_without(g, s, 2)?, sum_int(f, frac(1, 2)) + int(1), false)
            }
            Hypothesis::Parity { f } => {
                (int(odd_f_count(g, f, s)? as i64), sum_int(f, int(0)), false)
            }
        };
        Ok(Certificate { set: s.to_vec(), lhs, rhs, family: self.family(), strict })
    }
}

/// Verdict of an exhaustive hypothesis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated(Certificate),
}

/// Checks the hypothesis for every subset of `domain`; first violator wins.
pub fn check_hypothesis(g: &Multigraph, hyp: &Hypothesis, domain: &[usize]) -> Result<Verdict> {
    check_cap(domain.len(), HYPOTHESIS_CAP)?;
    let mut dom = domain.to_vec();
    dom.sort_unstable();
    dom.dedup();
    for &v in &dom {
        g.check_vertex(v)?;
    }
    for mask in 0u64..(1 << dom.len()) {
        let s: Vec<usize> = (0..dom.len()).filter(|&i| mask >> i & 1 == 1).map(|i| dom[i]).collect();
        let cert = hyp.evaluate(g, &s)?;
        if cert.is_violation() {
            return Ok(Verdict::Violated(cert));
        }
    }
    Ok(Verdict::Holds)
}

/// Maximiser of `Ω_m(G∖S) − |S|/m` with maximal `|S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub set: Vec<usize>,
    #[serde(with = "crate::ratio::serde_str")]
    pub value: Rational,
    /// Every component of G∖S is m-tree-connected or has maximum degree ≤ m.
    pub structure_holds: bool,
}

pub fn extremal_set(g: &Multigraph, m: usize) -> Result<ExtremalReport> {
    let n = g.vertex_count();
    check_cap(n, DEFAULT_CAP)?;
    let mut best: Option<(Rational, usize, u64)> = None;
    for s in 0..(1u64 << n) {
        let set = mask_to_set(s);
        let value = omega_without(g, &set, m)? - frac(set.len() as i64, m as i64);
        let better = match &best {
            None => true,
            Some((bv, bk, _)) => value > *bv || (value == *bv && set.len() > *bk),
        };
        if better {
            best = Some((value, set.len(), s));
        }
    }
    let (value, _, s) = best.expect("at least the empty set");
    let set = mask_to_set(s);
    let rest = g.remove_vertices(&set)?;
    let structure_holds = rest.graph.components().iter().all(|comp| {
        let c = rest.graph.induced(comp).expect("valid component").graph;
        c.max_degree() <= m || crate::packing::is_m_tree_connected(&c, m)
    });
    Ok(ExtremalReport { set, value, structure_holds })
}

/// `ok[mask]` tells whether `G[mask]` is m-tree-connected, via the
/// partition-sum recursion `max_P Σ_{A∈P} (e(A)+m) ≤ e(X)+m`.
pub fn tree_connected_subsets(g: &Multigraph, m: usize) -> Result<Vec<bool>> {
    let n = g.vertex_count();
    check_cap(n, DEFAULT_CAP)?;
    let size = 1usize << n;
    let mut e = vec![0i64; size];
    for (mask, slot) in e.iter_mut().enumerate() {
        *slot = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as i64;
    }
    let m = m as i64;
    let mut best = vec![0i64; size];
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // A ranges over subsets of `mask` containing its lowest vertex
        let mut sub = rest;
        let mut top = i64::MIN;
        loop {
            let a = sub | low;
            let val = e[a] + m + best[mask ^ a];
            top = top.max(val);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[mask] = top;
    }
    Ok((0..size).map(|mask| mask != 0 && best[mask] <= e[mask] + m).collect())
}

/// Maximal m-tree-connected sets by subset enumeration, with Ω_m.
pub fn components_oracle(g: &Multigraph, m: usize) -> Result<(VertexPartition, Rational)> {
    let n = g.vertex_count();
    let ok = tree_connected_subsets(g, m)?;
    let mut uf = UnionFind::<usize>::new(n);
    for (mask, &good) in ok.iter().enumerate() {
        if good {
            let first = mask.trailing_zeros() as usize;
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    uf.union(first, v);
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|v| uf.find_mut(v)).collect();
    let p = VertexPartition::from_labels(&crate::graph::normalize_labels(n, |v| labels[v]).0);
    let omega = omega_of_partition(g, &p, m);
    Ok((p, omega))
}

/// Every set partition of `0..n` as restricted growth label vectors.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            rec(i + 1, max.max(l), labels, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, 0, &mut labels, &mut out);
    out
}

/// `min ⌊e_G(P)/(|P|−1)⌋` over partitions with at least two parts.
pub fn partition_strength(g: &Multigraph) -> Result<Option<usize>> {
    check_cap(g.vertex_count(), 10)?;
    let mut best: Option<usize> = None;
    for labels in set_partitions(g.vertex_count()) {
        let parts = labels.iter().max().map_or(0, |&x| x + 1);
        if parts < 2 {
            continue;
        }
        let crossing = g.edges().iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
        let val = crossing / (parts - 1);
        best = Some(best.map_or(val, |b| b.min(val)));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle, star};

    #[test]
    fn toughness_examples() {
        let t = toughness(&cycle(4)).unwrap();
        assert_eq!(t.value, Some(int(1)));
        assert_eq!(t.witness, vec![0, 2]);
        let t = toughness(&star(3)).unwrap();
        assert_eq!(t.value, Some(frac(1, 3)));
        assert_eq!(t.witness, vec![0]);
        assert_eq!(toughness(&complete(5)).unwrap().value, None);
        assert!(toughness(&complete(15)).is_err());
    }

    #[test]
    fn hypothesis_examples() {
        let walk = Hypothesis::Walk { f: vec![2; 4] };
        match check_hypothesis(&star(3), &walk, &[0, 1, 2, 3]).unwrap() {
            Verdict::Violated(c) => {
                assert_eq!(c.set, vec![0]);
                assert_eq!((c.lhs, c.rhs), (int(3), int(2)));
            }
            Verdict::Holds => panic!("claw violates the walk bound"),
        }
        assert_eq!(check_hypothesis(&cycle(4), &walk, &[0, 1, 2, 3]).unwrap(), Verdict::Holds);
        // with S = ∅ the bound reads ω(G) ≤ 1
        let split = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match check_hypothesis(&split, &walk, &[0, 1, 2, 3]).unwrap() {
            Verdict::Violated(c) => assert!(c.set.is_empty()),
            Verdict::Holds => panic!("disconnected graph"),
        }
    }

    #[test]
    fn extremal_examples() {
        let r = extremal_set(&complete(4), 2).unwrap();
        assert_eq!(r.value, int(1));
        assert!(r.structure_holds);
        let r = extremal_set(&cycle(5), 2).unwrap();
        assert!(r.set.is_empty());
        assert_eq!(r.value, frac(5, 2));
        let r = extremal_set(&Multigraph::empty(1), 3).unwrap();
        assert_eq!((r.set.clone(), r.value), (vec![], int(1)));
    }

    #[test]
    fn subset_oracle_agrees_on_small_cases() {
        let ok = tree_connected_subsets(&complete(4), 2).unwrap();
        assert!(ok[0b1111]);
        assert!(!ok[0b0111]);
        assert_eq!(set_partitions(4).len(), 15);
        assert_eq!(partition_strength(&complete(4)).unwrap(), Some(2));
        assert_eq!(partition_strength(&cycle(5)).unwrap(), Some(1));
    }
}
