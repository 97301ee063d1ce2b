//! Independence polynomials of trees and forests.
//!
//! The [`dp_engine`] computes `I(T; x)` by a single post-order pass over a
//! rooted tree. [`oracle`] holds independent reference computations used to
//! check it, [`generators`] builds test and benchmark corpora.

pub mod dp_engine;
pub mod generators;
pub mod oracle;
pub mod polynomial;
pub mod tree_model;

pub use dp_engine::{
    alpha, find_inner_vertex, fip, fip_forest, fip_forest_with_stats, fip_in, fipr, fipr_in, EngineError,
    ModularEvaluation, PolynomialAlgebra, StateMap, StatsSummary, SubtreeAlgebra, TraversalStats, VertexState,
};
pub use polynomial::Polynomial;
pub use tree_model::{
    prufer_decode, prufer_encode, split_components, validate_tree, Forest, Graph, GraphError, PruferError,
    PruferSequence, Tree, TreeError,
};
