//! Exact computation of domination, total domination and neighborhood total
//! domination (NTD) numbers, plus the machinery used to study trees whose NTD
//! number is as large as possible: non-isomorphic tree enumeration, the
//! extremal family of trees with recognition certificates, and an exhaustive
//! verification harness.

pub mod canonical;
pub mod edge_list;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod harness;
pub mod solve;
pub mod vertex_set;

pub use canonical::{canonical_labeling, canonical_tree_code, NotATree};
pub use edge_list::{parse_edge_list, to_edge_list, EdgeListDocument, ParseError};
pub use enumerate::{enumerate_trees, prufer_oracle_count, TreeStream};
pub use graph::{Graph, GraphError};
pub use solve::{
    is_dominating_set, is_ntd_set, is_total_dominating_set, ntd_number_tree_dp, solve_exact,
    Method, ParamKind, SolveError, SolveResult,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};
