//! Approximation algorithms for the clustered broadcast problems.
//!
//! For unit weights, [`broadcast_approx`] stitches per-cluster search
//! trees together along a breadth-first tree of the cluster quotient. Its
//! guarantee is governed by the largest cluster diameter `gamma`: the cost
//! is at most `2 * gamma` times optimal, and also within the finer
//! [`approximation_ratio`] factor and the additive bound
//! `gamma * OPT + gamma * n`. For weighted instances,
//! [`clustered_minimum_weight_tree`] solves the minimum-weight relaxation
//! exactly, which rooted at the source is an `n`-approximation of the
//! broadcast optimum.

use num::rational::Ratio;

use crate::cost::{Cost, INFINITY};
use crate::error::{Error, Result};
use crate::graph::{
    ensure_tree_feasible, induced_subgraph, max_cluster_diameter, minimum_spanning_tree,
    quotient_edges, Adjacency,
};
use crate::instance::ClusteredInstance;
use crate::solution::TreeSolution;

/// Output of [`broadcast_approx`]: the tree plus the parameters behind its
/// guarantee.
#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub solution: TreeSolution,
    /// Largest cluster diameter.
    pub gamma: Cost,
    /// Multiplicative guarantee as an exact rational; `None` when every
    /// cluster is a singleton, in which case the tree is exactly optimal.
    pub ratio: Option<Ratio<u128>>,
    /// Sum of unconstrained shortest-path distances from the source: a
    /// lower bound on the clustered optimum.
    pub spt_lower_bound: Cost,
}

/// The guarantee factor `min { 4nk/gamma, 4n^2/gamma^2, 2 gamma }`, exact.
///
/// Returns `None` when `gamma == 0` (all clusters singletons): the
/// construction is then exactly optimal and no factor is needed.
pub fn approximation_ratio(n: usize, k: usize, gamma: Cost) -> Option<Ratio<u128>> {
    if gamma == 0 {
        return None;
    }
    let n = n as u128;
    let k = k as u128;
    let g = gamma as u128;
    let a = Ratio::new(4 * n * k, g);
    let b = Ratio::new(4 * n * n, g * g);
    let c = Ratio::from_integer(2 * g);
    Some(a.min(b).min(c))
}

/// Cost ratio that some family of instances actually forces on any
/// algorithm of this kind: `gamma(gamma + 2) / 4` for even `gamma`,
/// `(gamma + 1)^2 / 4` for odd. Grows quadratically, matching the
/// `2 gamma` guarantee up to a constant.
pub fn worst_case_ratio_lower_bound(gamma: Cost) -> Ratio<u128> {
    let g = gamma as u128;
    if g % 2 == 0 {
        Ratio::new(g * (g + 2), 4)
    } else {
        Ratio::new((g + 1) * (g + 1), 4)
    }
}

/// Unit-weight clustered broadcast approximation.
///
/// Builds a breadth-first tree inside the source's cluster, a
/// breadth-first tree of the cluster quotient, and for every quotient tree
/// edge adds one connecting graph edge plus a breadth-first tree of the
/// child cluster rooted where that edge lands. Deterministic: the
/// connecting edge for a cluster pair is the one with the
/// lexicographically smallest endpoint pair.
pub fn broadcast_approx(inst: &ClusteredInstance) -> Result<ApproxResult> {
    if inst.weighted {
        return Err(Error::Usage(
            "the broadcast approximation requires an unweighted instance".into(),
        ));
    }
    inst.ensure_valid()?;
    ensure_tree_feasible(inst)?;

    let assignment = inst.cluster_assignment();
    let k = inst.k();
    let source_cluster = assignment[inst.source];

    // One representative edge per adjacent cluster pair.
    let mut representative: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    for (ca, cb, id) in quotient_edges(inst) {
        let (u, v, _) = inst.edges[id];
        let key = (u.min(v), u.max(v));
        representative
            .entry((ca, cb))
            .and_modify(|cur| {
                let (cu, cv, _) = inst.edges[*cur];
                if key < (cu.min(cv), cu.max(cv)) {
                    *cur = id;
                }
            })
            .or_insert(id);
    }

    let quotient_adj = Adjacency::from_labeled_edges(
        k,
        representative
            .iter()
            .map(|(&(ca, cb), &id)| (ca, cb, 1, id)),
    );
    let quotient_tree = quotient_adj.spt(source_cluster);

    let mut labels: Vec<usize> = Vec::new();

    // Root of each cluster's internal tree: the source for its own
    // cluster, otherwise the endpoint of the connecting edge.
    let mut root = vec![usize::MAX; k];
    root[source_cluster] = inst.source;
    // Children clusters in breadth-first order so the parent's root is
    // known when the connecting edge is oriented.
    for &cj in &quotient_tree.order {
        if cj == source_cluster {
            continue;
        }
        let rep = quotient_tree.parent_edge[cj];
        let (u, v, _) = inst.edges[rep];
        let landing = if assignment[u] == cj { u } else { v };
        root[cj] = landing;
        labels.push(rep);
    }

    for (ci, cluster) in inst.clusters.iter().enumerate() {
        let sub = induced_subgraph(inst, cluster);
        let sp = sub.adj.spt(sub.local[root[ci]]);
        labels.extend(sp.tree_edge_labels());
    }

    labels.sort_unstable();
    let solution = TreeSolution::from_edge_labels(inst, &labels)?;
    debug_assert!(solution.feasible);

    let gamma = max_cluster_diameter(inst)?;
    let ratio = approximation_ratio(inst.n, k, gamma);
    let spt = Adjacency::from_instance(inst).spt(inst.source);
    let spt_lower_bound = spt
        .dist
        .iter()
        .fold(0 as Cost, |acc, &d| if d == INFINITY { acc } else { acc + d });

    Ok(ApproxResult { solution, gamma, ratio, spt_lower_bound })
}

/// Exact minimum-weight cluster-respecting spanning tree.
///
/// Any such tree decomposes into one spanning tree per cluster plus `k-1`
/// inter-cluster edges forming a spanning tree of the quotient, so
/// per-cluster minimum spanning trees plus a minimum spanning tree over
/// the lightest edge of each cluster pair is optimal. The result is
/// returned rooted at the source; its `cost` field is the broadcast
/// objective of this tree, which is within a factor `n` of the broadcast
/// optimum.
pub fn clustered_minimum_weight_tree(inst: &ClusteredInstance) -> Result<TreeSolution> {
    inst.ensure_valid()?;
    ensure_tree_feasible(inst)?;

    let mut labels: Vec<usize> = Vec::new();
    for cluster in &inst.clusters {
        let sub = induced_subgraph(inst, cluster);
        let local_edges: Vec<(usize, usize, Cost, usize)> = sub
            .adj
            .lists
            .iter()
            .enumerate()
            .flat_map(|(u, arcs)| {
                arcs.iter()
                    .filter(move |a| u < a.to)
                    .map(move |a| (u, a.to, a.weight, a.edge))
            })
            .collect();
        let (_, chosen) = minimum_spanning_tree(sub.n(), &local_edges)
            .expect("validated cluster must be internally connected");
        labels.extend(chosen);
    }

    let mut lightest: std::collections::HashMap<(usize, usize), (Cost, usize)> =
        std::collections::HashMap::new();
    for (ca, cb, id) in quotient_edges(inst) {
        let w = inst.edges[id].2;
        lightest
            .entry((ca, cb))
            .and_modify(|cur| {
                if (w, id) < *cur {
                    *cur = (w, id);
                }
            })
            .or_insert((w, id));
    }
    let quotient: Vec<(usize, usize, Cost, usize)> = lightest
        .iter()
        .map(|(&(ca, cb), &(w, id))| (ca, cb, w, id))
        .collect();
    let (_, chosen) = minimum_spanning_tree(inst.k(), &quotient)
        .expect("quotient connectivity was checked");
    labels.extend(chosen);

    labels.sort_unstable();
    let solution = TreeSolution::from_edge_labels(inst, &labels)?;
    debug_assert!(solution.feasible);
    Ok(solution)
}
