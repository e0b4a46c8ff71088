//! Degree-bounded spanning trees, tree-connected spanning subgraphs, parity
//! forests and spanning closed walks and trails, with exact brute-force
//! checkers for every hypothesis involved.

pub mod error;
pub mod factors;
pub mod excess;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod outcome;
pub mod packing;
pub mod parity;
pub mod ratio;
pub mod suites;
pub mod walks;

pub use error::{Error, Result};
pub use factors::{
    connected_24_factor, connected_factor_from_condition, extend_factor_to_connected, large_degree_parity_subgraph,
    plus_one_extension, FactorExtension, FactorSpec,
};
pub use excess::{
    bounded_m_subgraph, bounded_spanning_tree, derive_spec, min_excess_m_subgraph, min_excess_spanning_tree,
    total_excess, DegreeSpec, ExcessTarget, ForestMode, MinExcess, SearchConfig, SpecKind,
};
pub use graph::{Multigraph, Relabeled, SpanningSubgraph, VertexPartition};
pub use packing::{
    exchange_edge, is_m_tree_connected, m_components, m_critical_reduce, omega_m, pack_trees,
    ComponentDecomposition, DeficientPartition, PackResult, TreePacking,
};
pub use ratio::Rational;
pub use outcome::{Certificate, Family, Outcome};
pub use walks::{
    eulerian_circuit, f_trail, f_trail_on_independent_set, f_walk, spanning_eulerian_of_2tc, validate_trail,
    validate_walk, ClosedTrail, ClosedWalk, WalkReport,
};
