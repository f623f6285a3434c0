//! Clustered shortest-path trees and paths.
//!
//! This crate works with undirected graphs whose vertices are partitioned
//! into clusters. Three problems are covered:
//!
//! * **Clustered broadcast tree, unit weights** — find a spanning tree in
//!   which every cluster induces a connected subtree, minimizing the sum
//!   of tree distances from a source vertex.
//! * **Clustered broadcast tree, weighted** — the same objective with
//!   nonnegative integer edge weights.
//! * **Cluster-contiguous path** — find a cheapest source-to-target path
//!   that visits each cluster's vertices consecutively.
//!
//! The spanning-tree problems are NP-hard, and [`reductions`] builds the
//! gadget instances witnessing that, together with machine-checkable
//! certificates. [`exact`] provides two fixed-parameter solvers (one a
//! subset-convolution dynamic program over clusters, one an enumeration of
//! per-cluster root vectors) plus brute-force oracles used to validate
//! them. [`approx`] implements the cluster-diameter approximation for the
//! unit-weight problem and a spanning-tree-weight heuristic for the
//! weighted one.
//!
//! Instances travel as JSON ([`instance::ClusteredInstance`]), solutions as
//! JSON ([`solution::TreeSolution`], [`solution::PathSolution`]), and both
//! render to Graphviz via [`dot`]. The `clustree` binary wires these pieces
//! into `gen`, `solve`, `verify`, `bench`, and `export-dot` commands; the
//! `examples/` directory shows the library API on worked instances.

pub mod approx;
pub mod cli;
pub mod cost;
pub mod dot;
pub mod error;
pub mod exact;
pub mod graph;
pub mod instance;
pub mod reductions;
pub mod solution;
pub mod verify;

pub use cost::{Cost, INFINITY};
pub use error::{Error, Result};
pub use instance::ClusteredInstance;
pub use solution::{PathSolution, TreeSolution};
