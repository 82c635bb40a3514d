//! Exact clustering coefficients of small graphs, the extremal graph families
//! for regular and subcubic graphs, and exhaustive verification of the
//! corresponding bounds.

pub mod canon;
pub mod clustering;
pub mod enumeration;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod rational;
pub mod structure;

pub use canon::{canonical_form, CanonicalForm};
pub use clustering::{
    cc_sum, edge_add_delta, family_b_cc, graph_cc, local_cc, theorem1_bound, theorem2_bound,
    theorem4_bound,
};
pub use enumeration::{count, enumerate, DegreeConstraint, DegreeMode};
pub use error::{Error, Result};
pub use generators::{BSkeleton, EndMark, GraphType};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use rational::Rational;
pub use structure::{blocks, classify_block, graph_type, BlockDecomposition, BlockKind};
