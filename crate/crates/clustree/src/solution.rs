//! Solution representations and their verifiers.
//!
//! A [`TreeSolution`] is a rooted spanning tree answering the broadcast
//! problems; a [`PathSolution`] answers the cluster-contiguous path
//! problem. Both carry enough data to be re-checked from scratch, and the
//! checkers recompute everything rather than trusting stored values.

use serde::Serialize;
use serde_json::Value;

use crate::cost::{add, Cost};
use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::instance::ClusteredInstance;

/// A spanning tree rooted at the instance source.
///
/// `parent[source] == source`; every other vertex points at its tree
/// parent. `dist` holds tree distances from the source, `cost` their sum,
/// and `feasible` records whether every cluster induces a connected
/// subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSolution {
    pub parent: Vec<usize>,
    pub dist: Vec<Cost>,
    pub cost: Cost,
    pub feasible: bool,
}

impl TreeSolution {
    /// Builds a solution from parent pointers, recomputing distances, the
    /// total cost, and the feasibility flag.
    ///
    /// Fails if the pointers do not describe a spanning tree of the
    /// instance graph rooted at the source.
    pub fn from_parent(inst: &ClusteredInstance, parent: Vec<usize>) -> Result<Self> {
        let n = inst.n;
        if parent.len() != n {
            return Err(Error::InvalidSolution(format!(
                "parent vector has length {}, expected {n}",
                parent.len()
            )));
        }
        let s = inst.source;
        if parent[s] != s {
            return Err(Error::InvalidSolution(format!(
                "source {s} must be its own parent, found {}",
                parent[s]
            )));
        }

        let mut weight = std::collections::HashMap::new();
        for &(u, v, w) in &inst.edges {
            weight.insert((u.min(v), u.max(v)), w);
        }

        let mut children = vec![Vec::new(); n];
        for v in 0..n {
            if v == s {
                continue;
            }
            let p = parent[v];
            if p >= n {
                return Err(Error::InvalidSolution(format!(
                    "vertex {v} has parent {p}, out of range"
                )));
            }
            if p == v {
                return Err(Error::InvalidSolution(format!(
                    "vertex {v} is its own parent but is not the source"
                )));
            }
            if !weight.contains_key(&(p.min(v), p.max(v))) {
                return Err(Error::InvalidSolution(format!(
                    "({p}, {v}) is not an edge of the graph"
                )));
            }
            children[p].push(v);
        }

        let mut dist = vec![0 as Cost; n];
        let mut seen = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        let mut reached = 0usize;
        while let Some(u) = stack.pop() {
            reached += 1;
            for &v in &children[u] {
                if seen[v] {
                    return Err(Error::InvalidSolution(format!(
                        "vertex {v} is reached twice; parent pointers are not a tree"
                    )));
                }
                seen[v] = true;
                dist[v] = add(dist[u], weight[&(u.min(v), u.max(v))]);
                stack.push(v);
            }
        }
        if reached != n {
            return Err(Error::InvalidSolution(
                "parent pointers contain a cycle detached from the source".into(),
            ));
        }

        let cost = dist.iter().fold(0 as Cost, |acc, &d| add(acc, d));
        let feasible = clusters_form_subtrees(inst, &parent);
        Ok(TreeSolution { parent, dist, cost, feasible })
    }

    /// Builds a solution from a set of edge indices that must form a
    /// spanning tree.
    pub fn from_edge_labels(inst: &ClusteredInstance, labels: &[usize]) -> Result<Self> {
        let n = inst.n;
        if labels.len() + 1 != n {
            return Err(Error::InvalidSolution(format!(
                "{} edges cannot span {n} vertices",
                labels.len()
            )));
        }
        let mut parent = vec![usize::MAX; n];
        parent[inst.source] = inst.source;
        let lists = crate::graph::Adjacency::from_labeled_edges(
            n,
            labels.iter().map(|&id| {
                let (u, v, w) = inst.edges[id];
                (u, v, w, id)
            }),
        );
        let sp = lists.spt(inst.source);
        if !sp.all_reached() {
            return Err(Error::InvalidSolution(
                "edge set does not span the graph".into(),
            ));
        }
        for v in 0..n {
            if v != inst.source {
                parent[v] = sp.parent[v];
            }
        }
        Self::from_parent(inst, parent)
    }

    /// The tree edges as normalized `(min, max)` vertex pairs, sorted.
    pub fn tree_pairs(&self, inst: &ClusteredInstance) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..inst.n)
            .filter(|&v| v != inst.source)
            .map(|v| {
                let p = self.parent[v];
                (p.min(v), p.max(v))
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Total weight of the tree edges (not the broadcast cost).
    pub fn tree_weight(&self, inst: &ClusteredInstance) -> Cost {
        let mut total: Cost = 0;
        for (u, v) in self.tree_pairs(inst) {
            total = add(total, inst.edge_weight(u, v).unwrap_or(0));
        }
        total
    }

    /// Re-derives every stored field from the parent pointers and fails on
    /// any mismatch or on a cluster-infeasible tree.
    pub fn check_against(&self, inst: &ClusteredInstance) -> Result<()> {
        let rebuilt = Self::from_parent(inst, self.parent.clone())?;
        if rebuilt.dist != self.dist {
            return Err(Error::InvalidSolution(
                "stored distances disagree with the tree".into(),
            ));
        }
        if rebuilt.cost != self.cost {
            return Err(Error::InvalidSolution(format!(
                "stored cost {} disagrees with recomputed cost {}",
                self.cost, rebuilt.cost
            )));
        }
        if rebuilt.feasible != self.feasible {
            return Err(Error::InvalidSolution(
                "stored feasibility flag disagrees with the tree".into(),
            ));
        }
        if !rebuilt.feasible {
            return Err(Error::InvalidSolution(
                "tree does not keep every cluster connected".into(),
            ));
        }
        Ok(())
    }

    /// Canonical JSON form (pretty-printed, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solution serialization");
        s.push('\n');
        s
    }

    /// Parses the JSON form produced by [`TreeSolution::to_json`].
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("solution must be a JSON object".into()))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "parent" | "dist" | "cost" | "feasible") {
                return Err(Error::Parse(format!("unexpected key `{key}`")));
            }
        }
        let ids = |key: &str| -> Result<Vec<usize>> {
            obj.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("`{key}` must be an array")))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::Parse(format!("`{key}` entries must be integers")))
                })
                .collect()
        };
        let parent = ids("parent")?;
        let dist = ids("dist")?.into_iter().map(|d| d as Cost).collect();
        let cost = obj
            .get("cost")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("`cost` must be a nonnegative integer".into()))?;
        let feasible = obj
            .get("feasible")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Parse("`feasible` must be a boolean".into()))?;
        Ok(TreeSolution { parent, dist, cost, feasible })
    }
}

/// True when every cluster induces a connected subtree of the given tree.
pub fn clusters_form_subtrees(inst: &ClusteredInstance, parent: &[usize]) -> bool {
    let assignment = inst.cluster_assignment();
    let mut uf = UnionFind::new(inst.n);
    for v in 0..inst.n {
        if v == inst.source {
            continue;
        }
        let p = parent[v];
        if p < inst.n && assignment[p] == assignment[v] {
            uf.union(p, v);
        }
    }
    for cluster in &inst.clusters {
        let root = uf.find(cluster[0]);
        if cluster.iter().any(|&v| uf.find(v) != root) {
            return false;
        }
    }
    true
}

/// Convenience wrapper: distances-from-source sum of an arbitrary parent
/// vector, verifying tree shape along the way.
pub fn broadcast_cost(inst: &ClusteredInstance, parent: &[usize]) -> Result<Cost> {
    Ok(TreeSolution::from_parent(inst, parent.to_vec())?.cost)
}

/// A source-to-target path whose visit order keeps each cluster's vertices
/// consecutive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSolution {
    pub reachable: bool,
    pub cost: Option<Cost>,
    pub path: Vec<usize>,
}

impl PathSolution {
    pub fn found(cost: Cost, path: Vec<usize>) -> Self {
        PathSolution { reachable: true, cost: Some(cost), path }
    }

    pub fn unreachable() -> Self {
        PathSolution { reachable: false, cost: None, path: Vec::new() }
    }

    /// Canonical JSON form (pretty-printed, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("path serialization");
        s.push('\n');
        s
    }

    /// Parses the JSON form produced by [`PathSolution::to_json`].
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("path solution must be a JSON object".into()))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "reachable" | "cost" | "path") {
                return Err(Error::Parse(format!("unexpected key `{key}`")));
            }
        }
        let reachable = obj
            .get("reachable")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Parse("`reachable` must be a boolean".into()))?;
        let cost = match obj.get("cost") {
            Some(Value::Null) | None => None,
            Some(v) => Some(
                v.as_u64()
                    .ok_or_else(|| Error::Parse("`cost` must be an integer or null".into()))?,
            ),
        };
        let path = obj
            .get("path")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("`path` must be an array".into()))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse("`path` entries must be vertex ids".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(PathSolution { reachable, cost, path })
    }

    /// Checks the path against the instance: simple, edge-connected, cost
    /// consistent, endpoints right, and cluster visits consecutive.
    pub fn check_against(
        &self,
        inst: &ClusteredInstance,
        source: usize,
        target: usize,
    ) -> Result<()> {
        if !self.reachable {
            if self.cost.is_some() || !self.path.is_empty() {
                return Err(Error::InvalidSolution(
                    "unreachable verdict must carry no path or cost".into(),
                ));
            }
            return Ok(());
        }
        let path = &self.path;
        if path.first() != Some(&source) || path.last() != Some(&target) {
            return Err(Error::InvalidSolution(format!(
                "path must run from {source} to {target}"
            )));
        }
        let mut seen = vec![false; inst.n];
        for &v in path {
            if v >= inst.n {
                return Err(Error::InvalidSolution(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidSolution(format!(
                    "vertex {v} repeats; path is not simple"
                )));
            }
            seen[v] = true;
        }
        let mut total: Cost = 0;
        for pair in path.windows(2) {
            match inst.edge_weight(pair[0], pair[1]) {
                Some(w) => total = add(total, w),
                None => {
                    return Err(Error::InvalidSolution(format!(
                        "({}, {}) is not an edge of the graph",
                        pair[0], pair[1]
                    )))
                }
            }
        }
        if Some(total) != self.cost {
            return Err(Error::InvalidSolution(format!(
                "stored cost {:?} disagrees with recomputed cost {total}",
                self.cost
            )));
        }
        let assignment = inst.cluster_assignment();
        if !visits_clusters_consecutively(&assignment, path) {
            return Err(Error::InvalidSolution(
                "path leaves a cluster and returns to it later".into(),
            ));
        }
        Ok(())
    }
}

/// True when every cluster's vertices appear consecutively along the
/// sequence: once a cluster is left, it is never entered again.
pub fn visits_clusters_consecutively(assignment: &[usize], path: &[usize]) -> bool {
    let mut departed = std::collections::HashSet::new();
    let mut current = usize::MAX;
    for &v in path {
        let c = assignment[v];
        if c != current {
            if current != usize::MAX {
                departed.insert(current);
            }
            if departed.contains(&c) {
                return false;
            }
            current = c;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures::{split_path, twin_triangles};

    fn diamond() -> ClusteredInstance {
        ClusteredInstance {
            n: 4,
            weighted: false,
            edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
            clusters: vec![vec![0, 1], vec![2, 3]],
            source: 0,
        }
    }

    #[test]
    fn optimal_twin_triangle_tree() {
        let inst = twin_triangles();
        let sol = TreeSolution::from_parent(&inst, vec![0, 0, 0, 2, 3, 3]).unwrap();
        assert_eq!(sol.dist, vec![0, 1, 1, 2, 3, 3]);
        assert_eq!(sol.cost, 10);
        assert!(sol.feasible);
        assert_eq!(sol.tree_weight(&inst), 5);
        sol.check_against(&inst).unwrap();
    }

    #[test]
    fn unique_split_path_tree() {
        let inst = split_path();
        let sol = TreeSolution::from_parent(&inst, vec![0, 0, 1, 2]).unwrap();
        assert_eq!(sol.cost, 6);
        assert!(sol.feasible);
    }

    #[test]
    fn from_edge_labels_matches_from_parent() {
        let inst = twin_triangles();
        // Edges 0 (0,1), 1 (0,2), 3 (2,3), 4 (3,4), 5 (3,5).
        let sol = TreeSolution::from_edge_labels(&inst, &[0, 1, 3, 4, 5]).unwrap();
        assert_eq!(sol.parent, vec![0, 0, 0, 2, 3, 3]);
        assert_eq!(sol.cost, 10);
    }

    #[test]
    fn infeasible_tree_is_flagged() {
        let inst = diamond();
        // Spanning tree (0,1), (1,2), (0,3): cluster {2,3} gets split.
        let sol = TreeSolution::from_parent(&inst, vec![0, 0, 1, 0]).unwrap();
        assert!(!sol.feasible);
        assert!(sol.check_against(&inst).is_err());
    }

    #[test]
    fn malformed_parent_vectors_are_rejected() {
        let inst = split_path();
        assert!(TreeSolution::from_parent(&inst, vec![0, 0, 1]).is_err());
        assert!(TreeSolution::from_parent(&inst, vec![1, 0, 1, 2]).is_err());
        assert!(TreeSolution::from_parent(&inst, vec![0, 0, 0, 2]).is_err());
        assert!(TreeSolution::from_parent(&inst, vec![0, 2, 1, 2]).is_err());
    }

    #[test]
    fn corrupted_fields_fail_the_check() {
        let inst = split_path();
        let good = TreeSolution::from_parent(&inst, vec![0, 0, 1, 2]).unwrap();

        let mut bad = good.clone();
        bad.cost += 1;
        assert!(bad.check_against(&inst).is_err());

        let mut bad = good.clone();
        bad.dist[3] = 9;
        assert!(bad.check_against(&inst).is_err());

        let mut bad = good;
        bad.feasible = false;
        assert!(bad.check_against(&inst).is_err());
    }

    #[test]
    fn tree_json_round_trip() {
        let inst = twin_triangles();
        let sol = TreeSolution::from_parent(&inst, vec![0, 0, 0, 2, 3, 3]).unwrap();
        let text = sol.to_json();
        assert_eq!(TreeSolution::from_json_str(&text).unwrap(), sol);
    }

    #[test]
    fn contiguity_check() {
        let assignment = vec![0, 0, 1, 1, 2];
        assert!(visits_clusters_consecutively(&assignment, &[0, 1, 2, 3, 4]));
        assert!(visits_clusters_consecutively(&assignment, &[2, 3, 0, 1, 4]));
        // Leaves cluster 0, then comes back.
        assert!(!visits_clusters_consecutively(&assignment, &[0, 2, 1]));
        assert!(!visits_clusters_consecutively(&assignment, &[0, 2, 3, 1]));
    }

    #[test]
    fn path_solution_checks() {
        let inst = diamond();
        let ok = PathSolution::found(2, vec![0, 1, 2]);
        ok.check_against(&inst, 0, 2).unwrap();

        // Cluster {0, 1} is left after vertex 1 and re-entered at vertex 0.
        let wrap = PathSolution::found(3, vec![1, 2, 3, 0]);
        assert!(wrap.check_against(&inst, 1, 0).is_err());

        let wrong_cost = PathSolution::found(5, vec![0, 1, 2]);
        assert!(wrong_cost.check_against(&inst, 0, 2).is_err());

        let not_edge = PathSolution::found(2, vec![0, 2]);
        assert!(not_edge.check_against(&inst, 0, 2).is_err());

        let unreachable = PathSolution::unreachable();
        unreachable.check_against(&inst, 0, 2).unwrap();
    }

    #[test]
    fn path_json_round_trip() {
        let sol = PathSolution::found(4, vec![0, 1, 3]);
        assert_eq!(PathSolution::from_json_str(&sol.to_json()).unwrap(), sol);
        let none = PathSolution::unreachable();
        assert_eq!(PathSolution::from_json_str(&none.to_json()).unwrap(), none);
    }
}
