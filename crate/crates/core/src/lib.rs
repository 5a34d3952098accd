//! Defect groups and complexity bounds of flow semigroups of finite graphs
//! and digraphs.
//!
//! The flow semigroup of a digraph is generated by the elementary collapsings
//! `e_uv` (send `u` to `v`, fix everything else), one per edge; an undirected
//! edge gives both directions. Its maximal subgroups, the defect `k` groups,
//! are computed structurally in [`structure`] and by brute force in
//! [`oracle`], and [`check`] compares the two.

pub mod check;
pub mod complexity;
pub mod decompose;
pub mod descriptor;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod structure;
pub mod transform;
pub mod witness;

pub use complexity::{complexity_bounds, complexity_bounds_digraph, ComplexityBounds};
pub use descriptor::{identify_concrete, matches, sharply_3_transitive, FactorKind, GroupDescriptor, GroupFactor};
pub use error::{Error, ParseError, Result};
pub use graph::{parse_graph, Digraph, Graph, ParsedGraph};
pub use oracle::{collapsing_membership, defect_group_oracle, FlowSemigroup, DEFAULT_ORACLE_CAP};
pub use perm::{ConcreteGroup, Permutation};
pub use structure::{
    defect1_structure, defect_structure, defectk_structure, digraph_structure, maximal_k_subgraphs,
    smallest_k_full_symmetric, DefectAnalysis,
};
pub use transform::{CollapsingWord, Transformation};

/// Exact group orders.
pub type GroupOrder = num_bigint::BigUint;
