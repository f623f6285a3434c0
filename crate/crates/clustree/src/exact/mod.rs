//! Exact solvers and the brute-force oracles that validate them.
//!
//! * [`enumerate`] — exhaustive search over edge subsets and simple paths;
//!   slow but independently trustworthy, used as ground truth.
//! * [`convolution`] — min-sum subset convolution, in a naive and a
//!   ranked-transform variant.
//! * [`subset_dp`] — a fixed-parameter dynamic program over cluster
//!   subsets driven by subset convolution.
//! * [`root_enum`] — a fixed-parameter enumeration of per-cluster root
//!   vectors.
//! * [`contiguous`] — a label-set Dijkstra for the cluster-contiguous
//!   path problem.

pub mod contiguous;
pub mod convolution;
pub mod enumerate;
pub mod root_enum;
pub mod subset_dp;

pub use contiguous::{
    contiguous_path_by_enumeration, shortest_contiguous_path, ContiguousOptions, ContiguousResult,
    DEFAULT_CLUSTER_BIT_BUDGET, DEFAULT_STATE_BUDGET, PATH_ORACLE_VERTEX_LIMIT,
};
pub use convolution::{min_sum_convolution_naive, min_sum_convolution_ranked, RANKED_CAP_LIMIT};
pub use enumerate::{
    count_feasible_trees, min_cost_tree_by_enumeration, min_weight_tree_by_enumeration,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use root_enum::{root_vector_count, root_vector_solve, RootEnumOptions};
pub use subset_dp::{cluster_subset_solve, SubsetDpOptions};
