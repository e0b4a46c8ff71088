//! Shared fixtures for the benchmarks.

use treeconn::gen::{circulant, random_connected, rng};
use treeconn::Multigraph;

/// Dense random connected graph on `n` vertices.
pub fn dense(n: usize, seed: u64) -> Multigraph {
    random_connected(n, 0.5, &mut rng(seed))
}

/// 4-regular circulant, which is 2-tree-connected.
pub fn ring(n: usize) -> Multigraph {
    circulant(n, &[1, 2])
}
