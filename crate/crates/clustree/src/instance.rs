//! Clustered graph instances: the shared input type for every solver.
//!
//! An instance is an undirected graph with nonnegative integer edge weights,
//! a partition of the vertices into clusters, and a distinguished source
//! vertex. Unweighted problems are modelled by `weighted == false`, in which
//! case every edge must carry weight 1.

use serde::Serialize;
use serde_json::Value;
use std::fmt;

use crate::cost::Cost;
use crate::error::{Error, Result};

/// A clustered graph instance.
///
/// Vertices are `0..n`. Edges are undirected and stored as `(u, v, w)`
/// triples; [`ClusteredInstance::normalize`] orients them `u < v` and sorts
/// everything into a canonical order, which the JSON export relies on for
/// byte-stable output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusteredInstance {
    /// Number of vertices.
    pub n: usize,
    /// Whether edge weights are meaningful. When false, all weights are 1.
    pub weighted: bool,
    /// Undirected edges as `(u, v, w)` triples.
    pub edges: Vec<(usize, usize, Cost)>,
    /// Partition of `0..n` into nonempty clusters.
    pub clusters: Vec<Vec<usize>>,
    /// Source vertex for tree and path problems.
    pub source: usize,
}

/// One structural problem found by [`ClusteredInstance::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The instance has no vertices.
    EmptyGraph,
    /// The source id is not a vertex.
    SourceOutOfRange { source: usize, n: usize },
    /// An edge endpoint is not a vertex.
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { index: usize, v: usize },
    /// Two edges join the same unordered pair of vertices.
    DuplicateEdge { index: usize, u: usize, v: usize },
    /// The instance is declared unweighted but an edge weight differs from 1.
    NonUnitWeight { index: usize, w: Cost },
    /// A cluster contains no vertices.
    EmptyCluster { index: usize },
    /// A cluster names an id that is not a vertex.
    VertexOutOfRange { cluster: usize, v: usize, n: usize },
    /// A vertex appears in no cluster.
    MissingVertex { v: usize },
    /// A vertex appears in more than one cluster (or twice in one).
    RepeatedVertex { v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EmptyGraph => write!(f, "instance has no vertices"),
            Violation::SourceOutOfRange { source, n } => {
                write!(f, "source {source} out of range (n = {n})")
            }
            Violation::EndpointOutOfRange { index, u, v, n } => {
                write!(f, "edge {index} = ({u}, {v}) has an endpoint out of range (n = {n})")
            }
            Violation::SelfLoop { index, v } => {
                write!(f, "edge {index} is a self-loop at {v}")
            }
            Violation::DuplicateEdge { index, u, v } => {
                write!(f, "edge {index} duplicates the pair ({u}, {v})")
            }
            Violation::NonUnitWeight { index, w } => {
                write!(f, "edge {index} has weight {w} in an unweighted instance")
            }
            Violation::EmptyCluster { index } => write!(f, "cluster {index} is empty"),
            Violation::VertexOutOfRange { cluster, v, n } => {
                write!(f, "cluster {cluster} contains {v}, out of range (n = {n})")
            }
            Violation::MissingVertex { v } => {
                write!(f, "vertex {v} belongs to no cluster")
            }
            Violation::RepeatedVertex { v } => {
                write!(f, "vertex {v} appears in more than one cluster slot")
            }
        }
    }
}

impl ClusteredInstance {
    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of clusters.
    pub fn k(&self) -> usize {
        self.clusters.len()
    }

    /// Checks every structural invariant and returns all violations found.
    ///
    /// An empty result means the instance is a well-formed clustered graph:
    /// ids in range, no self-loops or parallel edges, unit weights when
    /// declared unweighted, and the clusters a partition of the vertex set.
    /// Whether each cluster induces a connected subgraph is deliberately
    /// not part of validity: it decides feasibility for the spanning-tree
    /// problems only (the path problems stay well posed without it), so
    /// the tree solvers check it themselves and report it as infeasible.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.n;
        if n == 0 {
            out.push(Violation::EmptyGraph);
            return out;
        }
        if self.source >= n {
            out.push(Violation::SourceOutOfRange { source: self.source, n });
        }

        let mut seen_pairs = std::collections::HashSet::new();
        for (index, &(u, v, w)) in self.edges.iter().enumerate() {
            if u >= n || v >= n {
                out.push(Violation::EndpointOutOfRange { index, u, v, n });
                continue;
            }
            if u == v {
                out.push(Violation::SelfLoop { index, v });
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !seen_pairs.insert(key) {
                out.push(Violation::DuplicateEdge { index, u: key.0, v: key.1 });
            }
            if !self.weighted && w != 1 {
                out.push(Violation::NonUnitWeight { index, w });
            }
        }

        let mut slot = vec![0usize; n];
        for (ci, cluster) in self.clusters.iter().enumerate() {
            if cluster.is_empty() {
                out.push(Violation::EmptyCluster { index: ci });
            }
            for &v in cluster {
                if v >= n {
                    out.push(Violation::VertexOutOfRange { cluster: ci, v, n });
                } else {
                    slot[v] += 1;
                }
            }
        }
        for v in 0..n {
            match slot[v] {
                0 => out.push(Violation::MissingVertex { v }),
                1 => {}
                _ => out.push(Violation::RepeatedVertex { v }),
            }
        }
        out
    }

    /// Like [`validate`](Self::validate) but folds violations into an error.
    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            let msg = violations
                .iter()
                .map(Violation::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            Err(Error::InvalidInstance(msg))
        }
    }

    /// Maps each vertex to the index of its cluster.
    ///
    /// Assumes the clusters pass validation; vertices outside every cluster
    /// map to `usize::MAX`.
    pub fn cluster_assignment(&self) -> Vec<usize> {
        let mut assignment = vec![usize::MAX; self.n];
        for (ci, cluster) in self.clusters.iter().enumerate() {
            for &v in cluster {
                if v < self.n {
                    assignment[v] = ci;
                }
            }
        }
        assignment
    }

    /// Index of the cluster containing the source vertex.
    pub fn source_cluster(&self) -> usize {
        self.cluster_assignment()[self.source]
    }

    /// Rewrites the instance into canonical order without changing the graph.
    ///
    /// Edges are oriented `u < v` and sorted by endpoint pair; each cluster
    /// is sorted ascending and the cluster list is ordered by smallest
    /// member. All serialization goes through this, so equal instances
    /// produce identical bytes.
    pub fn normalize(&mut self) {
        for e in &mut self.edges {
            if e.0 > e.1 {
                std::mem::swap(&mut e.0, &mut e.1);
            }
        }
        self.edges.sort();
        for cluster in &mut self.clusters {
            cluster.sort_unstable();
        }
        self.clusters.sort_by_key(|c| c.first().copied().unwrap_or(usize::MAX));
    }

    /// Serializes to the canonical JSON form (normalized, pretty-printed,
    /// trailing newline).
    pub fn to_canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.normalize();
        let mut s = serde_json::to_string_pretty(&copy).expect("instance serialization");
        s.push('\n');
        s
    }

    /// Parses an instance from its JSON form.
    ///
    /// The object must carry exactly the keys `n`, `weighted`, `edges`,
    /// `clusters`, and `source`. Errors name the offending field; in
    /// particular a negative edge weight is called out as such rather than
    /// surfacing as a generic integer-conversion failure.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("instance must be a JSON object".into()))?;

        for key in obj.keys() {
            if !matches!(key.as_str(), "n" | "weighted" | "edges" | "clusters" | "source") {
                return Err(Error::Parse(format!("unexpected key `{key}`")));
            }
        }
        let field = |key: &str| -> Result<&Value> {
            obj.get(key)
                .ok_or_else(|| Error::Parse(format!("missing key `{key}`")))
        };

        let n = field("n")?
            .as_u64()
            .ok_or_else(|| Error::Parse("`n` must be a nonnegative integer".into()))?
            as usize;
        let weighted = field("weighted")?
            .as_bool()
            .ok_or_else(|| Error::Parse("`weighted` must be a boolean".into()))?;

        let raw_edges = field("edges")?
            .as_array()
            .ok_or_else(|| Error::Parse("`edges` must be an array".into()))?;
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (i, e) in raw_edges.iter().enumerate() {
            let triple = e
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Parse(format!("edge {i} must be a [u, v, w] triple")))?;
            let u = triple[0]
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("edge {i}: endpoint must be a vertex id")))?
                as usize;
            let v = triple[1]
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("edge {i}: endpoint must be a vertex id")))?
                as usize;
            let w = match triple[2].as_u64() {
                Some(w) => w,
                None => {
                    if triple[2].as_i64().is_some_and(|x| x < 0) {
                        return Err(Error::Parse(format!(
                            "edge {i}: negative weight {}",
                            triple[2]
                        )));
                    }
                    return Err(Error::Parse(format!(
                        "edge {i}: weight must be a nonnegative integer"
                    )));
                }
            };
            edges.push((u, v, w));
        }

        let raw_clusters = field("clusters")?
            .as_array()
            .ok_or_else(|| Error::Parse("`clusters` must be an array".into()))?;
        let mut clusters = Vec::with_capacity(raw_clusters.len());
        for (i, c) in raw_clusters.iter().enumerate() {
            let members = c
                .as_array()
                .ok_or_else(|| Error::Parse(format!("cluster {i} must be an array")))?;
            let mut ids = Vec::with_capacity(members.len());
            for v in members {
                let id = v.as_u64().ok_or_else(|| {
                    Error::Parse(format!("cluster {i}: members must be vertex ids"))
                })? as usize;
                ids.push(id);
            }
            clusters.push(ids);
        }

        let source = field("source")?
            .as_u64()
            .ok_or_else(|| Error::Parse("`source` must be a vertex id".into()))?
            as usize;

        Ok(ClusteredInstance { n, weighted, edges, clusters, source })
    }

    /// Parses, validates, and normalizes in one step. This is the entry
    /// point used for files coming from outside the crate.
    pub fn from_json_checked(text: &str) -> Result<Self> {
        let mut inst = Self::from_json_str(text)?;
        inst.ensure_valid()?;
        inst.normalize();
        Ok(inst)
    }

    /// Weight of the edge between `u` and `v`, if one exists.
    pub fn edge_weight(&self, u: usize, v: usize) -> Option<Cost> {
        let key = (u.min(v), u.max(v));
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a.min(b), a.max(b)) == key)
            .map(|&(_, _, w)| w)
    }
}

/// Small hand-checked instances used throughout the tests and examples.
pub mod fixtures {
    use super::ClusteredInstance;

    /// Two unit triangles `{0,1,2}` and `{3,4,5}` bridged by the edge
    /// `(2,3)`, source 0, one cluster per triangle.
    ///
    /// The optimal clustered broadcast cost is 10, attained by the tree
    /// `{(0,1), (0,2), (2,3), (3,4), (3,5)}`. The plain (unclustered)
    /// shortest-path tree reaches distances `0,1,1,2,3,3`.
    pub fn twin_triangles() -> ClusteredInstance {
        ClusteredInstance {
            n: 6,
            weighted: false,
            edges: vec![
                (0, 1, 1),
                (0, 2, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 1),
            ],
            clusters: vec![vec![0, 1, 2], vec![3, 4, 5]],
            source: 0,
        }
    }

    /// The path `0 - 1 - 2 - 3` with clusters `{0,1}` and `{2,3}`,
    /// source 0.
    ///
    /// The graph is its own unique spanning tree, which happens to respect
    /// the clusters; the optimal cost is `0 + 1 + 2 + 3 = 6`.
    pub fn split_path() -> ClusteredInstance {
        ClusteredInstance {
            n: 4,
            weighted: false,
            edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1)],
            clusters: vec![vec![0, 1], vec![2, 3]],
            source: 0,
        }
    }
}
