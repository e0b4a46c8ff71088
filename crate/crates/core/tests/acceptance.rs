//! One test per acceptance criterion, each over the suite's default seeds.
//!
//! Every test prints a `PASS [id] ...` or `FAIL [id] ...` line; run with
//! `--nocapture` to see them for passing criteria too.

use treeconn::suites::{default_seeds, run_suite};

fn criterion(id: usize) {
    let start = std::time::Instant::now();
    let report = run_suite(id, default_seeds(id)).unwrap_or_else(|e| panic!("suite {id} errored: {e}"));
    println!("{} in {:.1}s", report.line(), start.elapsed().as_secs_f64());
    for note in &report.notes {
        println!("    {note}");
    }
    assert!(report.passed(), "{}", report.line());
}

#[test]
fn criterion_01_packing_duality() {
    criterion(1);
}

#[test]
fn criterion_02_component_oracle() {
    criterion(2);
}

#[test]
fn criterion_03_accounting_identities() {
    criterion(3);
}

#[test]
fn criterion_04_degree_bounded_trees() {
    criterion(4);
}

#[test]
fn criterion_05_half_degree_subgraphs() {
    criterion(5);
}

#[test]
fn criterion_06_tough_walks() {
    criterion(6);
}

#[test]
fn criterion_07_parity_forests() {
    criterion(7);
}

#[test]
fn criterion_08_tough_trails() {
    criterion(8);
}

#[test]
fn criterion_09_connected_24_factors() {
    criterion(9);
}

#[test]
fn criterion_10_toughness_bridge() {
    criterion(10);
}

#[test]
fn criterion_11_factor_extension() {
    criterion(11);
}
