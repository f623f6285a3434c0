//! Brute-force spanning-tree oracles.
//!
//! These walk every `(n-1)`-edge subset of the graph, keep the ones that
//! are cluster-respecting spanning trees, and optimize the requested
//! objective. Exponential, deliberately simple, and independent of the
//! real solvers: the test suite uses them as ground truth on small
//! instances.

use itertools::Itertools;

use crate::cost::{add, Cost};
use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::instance::ClusteredInstance;
use crate::solution::TreeSolution;

/// Default cap on the number of edge subsets an enumeration may examine.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Calls `visit` for every cluster-respecting spanning tree, passed as an
/// ascending list of edge indices. Returns how many feasible trees exist.
fn for_each_feasible_tree(
    inst: &ClusteredInstance,
    budget: u64,
    mut visit: impl FnMut(&[usize]) -> Result<()>,
) -> Result<u64> {
    let n = inst.n;
    let m = inst.m();
    if n == 0 || m + 1 < n {
        return Err(Error::Infeasible(
            "fewer edges than a spanning tree needs".into(),
        ));
    }
    let subsets = binomial(m as u64, (n - 1) as u64);
    if subsets > budget as u128 {
        return Err(Error::Budget(format!(
            "enumeration would examine {subsets} edge subsets, budget is {budget}"
        )));
    }

    let assignment = inst.cluster_assignment();
    let mut feasible = 0u64;
    for combo in (0..m).combinations(n - 1) {
        let mut uf = UnionFind::new(n);
        let mut spanning = true;
        for &id in &combo {
            let (u, v, _) = inst.edges[id];
            if !uf.union(u, v) {
                spanning = false;
                break;
            }
        }
        if !spanning {
            continue;
        }

        let mut cluster_ok = true;
        'clusters: for (ci, cluster) in inst.clusters.iter().enumerate() {
            let mut cf = UnionFind::new(n);
            for &id in &combo {
                let (u, v, _) = inst.edges[id];
                if assignment[u] == ci && assignment[v] == ci {
                    cf.union(u, v);
                }
            }
            let root = cf.find(cluster[0]);
            for &v in cluster {
                if cf.find(v) != root {
                    cluster_ok = false;
                    break 'clusters;
                }
            }
        }
        if !cluster_ok {
            continue;
        }

        feasible += 1;
        visit(&combo)?;
    }
    Ok(feasible)
}

/// Exhaustive minimum of the broadcast objective (sum of tree distances
/// from the source) over all cluster-respecting spanning trees.
///
/// The returned tree is the first optimum in lexicographic edge-subset
/// order, so repeated runs agree exactly.
pub fn min_cost_tree_by_enumeration(
    inst: &ClusteredInstance,
    budget: u64,
) -> Result<TreeSolution> {
    let mut best: Option<TreeSolution> = None;
    let found = for_each_feasible_tree(inst, budget, |labels| {
        let sol = TreeSolution::from_edge_labels(inst, labels)?;
        if best.as_ref().map_or(true, |b| sol.cost < b.cost) {
            best = Some(sol);
        }
        Ok(())
    })?;
    match best {
        Some(sol) => Ok(sol),
        None => Err(Error::Infeasible(format!(
            "no cluster-respecting spanning tree exists ({found} candidates)"
        ))),
    }
}

/// Exhaustive minimum of total edge weight over all cluster-respecting
/// spanning trees. Returns the weight and the edge indices.
pub fn min_weight_tree_by_enumeration(
    inst: &ClusteredInstance,
    budget: u64,
) -> Result<(Cost, Vec<usize>)> {
    let mut best: Option<(Cost, Vec<usize>)> = None;
    for_each_feasible_tree(inst, budget, |labels| {
        let weight = labels
            .iter()
            .fold(0 as Cost, |acc, &id| add(acc, inst.edges[id].2));
        if best.as_ref().map_or(true, |(bw, _)| weight < *bw) {
            best = Some((weight, labels.to_vec()));
        }
        Ok(())
    })?;
    best.ok_or_else(|| {
        Error::Infeasible("no cluster-respecting spanning tree exists".into())
    })
}

/// Counts cluster-respecting spanning trees.
pub fn count_feasible_trees(inst: &ClusteredInstance, budget: u64) -> Result<u64> {
    for_each_feasible_tree(inst, budget, |_| Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures::{split_path, twin_triangles};

    #[test]
    fn twin_triangles_optimum_is_ten() {
        let inst = twin_triangles();
        let sol = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(sol.cost, 10);
        assert!(sol.feasible);
        assert_eq!(
            sol.tree_pairs(&inst),
            vec![(0, 1), (0, 2), (2, 3), (3, 4), (3, 5)]
        );
    }

    #[test]
    fn split_path_optimum_is_six() {
        let inst = split_path();
        let sol = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(sol.cost, 6);
        assert_eq!(sol.parent, vec![0, 0, 1, 2]);
    }

    #[test]
    fn feasible_tree_counts() {
        // Each triangle independently contributes 3 spanning trees and the
        // bridge is forced: 9 in total. The path has exactly one.
        assert_eq!(
            count_feasible_trees(&twin_triangles(), DEFAULT_ENUMERATION_BUDGET).unwrap(),
            9
        );
        assert_eq!(
            count_feasible_trees(&split_path(), DEFAULT_ENUMERATION_BUDGET).unwrap(),
            1
        );
    }

    #[test]
    fn min_weight_differs_from_min_cost_tree() {
        // Diamond with one heavy side: both objectives force the two
        // intra-cluster edges, then pick the cheap bridge.
        let inst = ClusteredInstance {
            n: 4,
            weighted: true,
            edges: vec![(0, 1, 1), (1, 2, 5), (2, 3, 1), (0, 3, 2)],
            clusters: vec![vec![0, 1], vec![2, 3]],
            source: 0,
        };
        let (w, labels) = min_weight_tree_by_enumeration(&inst, 100).unwrap();
        assert_eq!(w, 4);
        assert_eq!(labels, vec![0, 2, 3]);
        let sol = min_cost_tree_by_enumeration(&inst, 100).unwrap();
        assert_eq!(sol.cost, 6);
    }

    #[test]
    fn budget_is_enforced() {
        let err = min_cost_tree_by_enumeration(&twin_triangles(), 1).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn infeasible_partition_is_reported() {
        let inst = ClusteredInstance {
            n: 4,
            weighted: false,
            edges: vec![(0, 1, 1), (1, 2, 1), (1, 3, 1), (0, 2, 1)],
            clusters: vec![vec![0, 1], vec![2, 3]],
            source: 0,
        };
        let err = min_cost_tree_by_enumeration(&inst, 100).unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }
}
