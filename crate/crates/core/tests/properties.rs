use proptest::prelude::*;
use treeconn::gen::{random_connected, random_gnp, rng};
use treeconn::oracle::{check_hypothesis, components_oracle, Hypothesis, Verdict};
use treeconn::parity::{is_parity_forest, parity_forest, ParitySpec};
use treeconn::ratio::{frac, int};
use treeconn::*;

fn connected(seed: u64, n: usize, p: f64) -> Multigraph {
    random_connected(n, p, &mut rng(seed))
}

fn any_graph(seed: u64, n: usize, p: f64, doubled: bool) -> Multigraph {
    let g = random_gnp(n, p, &mut rng(seed));
    if doubled {
        g.doubled()
    } else {
        g
    }
}

fn check_certificate(g: &Multigraph, hyp: &Hypothesis, c: &Certificate) {
    assert!(c.is_violation(), "certificate does not violate: {c:?}");
    assert_eq!(&hyp.evaluate(g, &c.set).unwrap(), c);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn packing_or_partition_is_valid(seed in any::<u64>(), n in 1usize..9, p in 0.1f64..1.0, doubled: bool, m in 1usize..4) {
        let g = any_graph(seed, n, p, doubled);
        match pack_trees(&g, m).unwrap() {
            PackResult::Packing(t) => {
                prop_assert!(t.validate(&g));
                prop_assert!(is_m_tree_connected(&g, m));
            }
            PackResult::Deficient(d) => {
                prop_assert!(d.validate(&g));
                prop_assert!(!is_m_tree_connected(&g, m));
            }
        }
    }

    #[test]
    fn omega_chain_and_oracle(seed in any::<u64>(), n in 1usize..9, p in 0.1f64..1.0, doubled: bool) {
        let g = any_graph(seed, n, p, doubled);
        let mut prev = int(0);
        for m in 1..=3 {
            let omega = omega_m(&g, m).unwrap();
            prop_assert_eq!(omega, components_oracle(&g, m).unwrap().1);
            prop_assert!(prev <= omega && omega <= int(n as i64));
            prop_assert!(omega <= int(m_components(&g, m).unwrap().partition.len() as i64));
            prev = omega;
        }
    }

    #[test]
    fn bounded_tree_solution_or_violation(seed in any::<u64>(), n in 2usize..10, p in 0.2f64..1.0, eta in 2i64..5, lam in 0i64..2) {
        let g = connected(seed, n, p);
        let spec = DegreeSpec::uniform(n, int(eta), frac(lam, 2), 1);
        match bounded_spanning_tree(&g, &spec, ForestMode::Plain).unwrap() {
            Outcome::Solution(t) => {
                prop_assert!(t.is_spanning_tree(&g));
                prop_assert!(spec.meets_bounds(&g, ForestMode::Plain, &t));
            }
            Outcome::Certificate(c) => check_certificate(&g, &spec.hypothesis(true, ForestMode::Plain), &c),
            Outcome::Deficient(_) => prop_assert!(false, "connected input reported deficient"),
            Outcome::Inconclusive(_) => {}
        }
    }

    #[test]
    fn bounded_tree_keeps_forest(seed in any::<u64>(), n in 2usize..10, p in 0.3f64..1.0) {
        let g = connected(seed, n, p);
        let first = SpanningSubgraph::new(&g, [0]).unwrap();
        let spec = DegreeSpec::uniform(n, int(3), int(0), 1).with_forest(first.clone());
        if let Outcome::Solution(t) = bounded_spanning_tree(&g, &spec, ForestMode::Plain).unwrap() {
            prop_assert!(first.is_subset_of(&t));
        }
    }

    #[test]
    fn parity_forest_is_valid(seed in any::<u64>(), n in 1usize..10, p in 0.1f64..0.9, f in prop::collection::vec(0i64..4, 10)) {
        let g = any_graph(seed, n, p, false);
        let f = f[..n].to_vec();
        match parity_forest(&g, &ParitySpec::FParity { f: f.clone() }).unwrap() {
            Outcome::Solution(fr) => prop_assert!(is_parity_forest(&g, &fr, &f)),
            Outcome::Certificate(c) => check_certificate(&g, &Hypothesis::Parity { f }, &c),
            other => prop_assert!(false, "unexpected {}", other.status()),
        }
    }

    #[test]
    fn doubled_graphs_are_eulerian(seed in any::<u64>(), n in 1usize..10, p in 0.1f64..1.0) {
        let g = connected(seed, n, p).doubled();
        let t = eulerian_circuit(&g).unwrap();
        prop_assert_eq!(t.edges.len(), g.edge_count());
        prop_assert!(validate_trail(&g, &t, &vec![g.edge_count().max(1) as i64; n]).ok());
    }

    #[test]
    fn walks_validate(seed in any::<u64>(), n in 1usize..10, p in 0.1f64..1.0, w in 1i64..4) {
        let g = connected(seed, n, p);
        let none = SpanningSubgraph::empty();
        let f = vec![w; n];
        match f_walk(&g, &f, &none).unwrap() {
            Outcome::Solution(walk) => {
                prop_assert!(validate_walk(&g, &walk, &f, &none).ok());
                let support = SpanningSubgraph::from_ids(walk.edges.iter().copied());
                prop_assert!(support.is_connected_spanning(&g));
            }
            Outcome::Certificate(c) => check_certificate(&g, &Hypothesis::Walk { f }, &c),
            other => prop_assert!(false, "unexpected {}", other.status()),
        }
    }

    #[test]
    fn trails_validate(seed in any::<u64>(), n in 2usize..9, p in 0.3f64..1.0, w in 1i64..4) {
        let g = connected(seed, n, p).doubled();
        let f = vec![w; n];
        match f_trail(&g, &f, int(0)).unwrap() {
            Outcome::Solution(t) => prop_assert!(validate_trail(&g, &t, &f).ok()),
            Outcome::Certificate(c) => check_certificate(&g, &Hypothesis::Trail { f, lambda: int(0) }, &c),
            Outcome::Deficient(_) => prop_assert!(false, "doubled graph reported deficient"),
            Outcome::Inconclusive(_) => {}
        }
    }

    #[test]
    fn walk_hypothesis_implies_walk(seed in any::<u64>(), n in 1usize..9, p in 0.2f64..1.0) {
        let g = connected(seed, n, p);
        let f = vec![2; n];
        let all: Vec<usize> = (0..n).collect();
        if check_hypothesis(&g, &Hypothesis::Walk { f: f.clone() }, &all).unwrap() == Verdict::Holds {
            prop_assert!(f_walk(&g, &f, &SpanningSubgraph::empty()).unwrap().is_solution());
        }
    }

    #[test]
    fn extension_sandwich(seed in any::<u64>(), n in 2usize..10, p in 0.2f64..1.0, keep in 0.0f64..1.0) {
        use rand::Rng;
        let g = connected(seed, n, p);
        let mut r = rng(seed ^ 1);
        let f = SpanningSubgraph::from_ids((0..g.edge_count()).filter(|_| r.random_bool(keep)));
        let t = match pack_trees(&g, 1).unwrap() {
            PackResult::Packing(p) => p.trees[0].clone(),
            PackResult::Deficient(_) => unreachable!("connected"),
        };
        let ext = extend_factor_to_connected(&g, &f, &t).unwrap().solution().expect("extension");
        prop_assert!(treeconn::factors::validate_extension(&g, &f, &t, &ext.matching, &ext.subgraph).is_empty());
    }

    #[test]
    fn graph_json_round_trip(seed in any::<u64>(), n in 0usize..12, p in 0.0f64..1.0, doubled: bool) {
        let g = any_graph(seed, n, p, doubled);
        let back = Multigraph::from_json_str(&g.to_json_string()).unwrap();
        prop_assert_eq!(back, g);
    }
}
