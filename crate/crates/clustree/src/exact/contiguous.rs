//! Cluster-contiguous shortest paths.
//!
//! A path is admissible when every cluster's vertices appear consecutively
//! along it: once the walk leaves a cluster it may never return. The exact
//! solver runs Dijkstra over `(vertex, departed-clusters)` states; the
//! departed set only needs bits for clusters of size at least two, since a
//! singleton cluster can only be "re-entered" by revisiting its vertex,
//! which a shortest path never has to do.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::cost::{add, Cost};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Arc};
use crate::instance::ClusteredInstance;
use crate::solution::{visits_clusters_consecutively, PathSolution};

/// Default limit on clusters of size two or more (each costs one state
/// bit, so the state space is exponential in this count).
pub const DEFAULT_CLUSTER_BIT_BUDGET: u32 = 25;

/// Default limit on settled `(vertex, departed-set)` states.
pub const DEFAULT_STATE_BUDGET: u64 = 20_000_000;

/// Largest instance the exhaustive path oracle accepts.
pub const PATH_ORACLE_VERTEX_LIMIT: usize = 12;

/// Tuning knobs for [`shortest_contiguous_path`].
#[derive(Clone, Copy, Debug)]
pub struct ContiguousOptions {
    /// When set, search only for paths of cost strictly below this value;
    /// exhausting the search then certifies that none exists.
    pub cutoff: Option<Cost>,
    /// Abort with a budget error after settling this many states.
    pub state_budget: u64,
    /// Abort with a budget error when more than this many clusters need a
    /// state bit. Hard-capped at 64.
    pub cluster_bit_budget: u32,
}

impl Default for ContiguousOptions {
    fn default() -> Self {
        ContiguousOptions {
            cutoff: None,
            state_budget: DEFAULT_STATE_BUDGET,
            cluster_bit_budget: DEFAULT_CLUSTER_BIT_BUDGET,
        }
    }
}

/// Outcome of a contiguous-path search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContiguousResult {
    /// A cheapest admissible path.
    Found(PathSolution),
    /// A cutoff was set and no admissible path costs less than it. (The
    /// target may also be outright unreachable; the search does not look
    /// past the cutoff to tell the two apart.)
    NoneBelowCutoff { cutoff: Cost },
    /// No admissible path exists at all.
    Unreachable,
}

/// Exact cluster-contiguous shortest path from `source` to `target`.
///
/// Dijkstra over `(vertex, departed-set)` states: crossing out of a
/// cluster marks it departed, and arcs into a departed cluster are
/// forbidden. States are kept sparsely, so only the reachable part of the
/// space is ever materialized. Deterministic: the heap is keyed by
/// `(dist, vertex, departed-set)`.
pub fn shortest_contiguous_path(
    inst: &ClusteredInstance,
    source: usize,
    target: usize,
    opts: &ContiguousOptions,
) -> Result<ContiguousResult> {
    if source >= inst.n || target >= inst.n {
        return Err(Error::Usage(format!(
            "path endpoints {source}, {target} must be vertices (n = {})",
            inst.n
        )));
    }
    let assignment = inst.cluster_assignment();

    let bit_budget = opts.cluster_bit_budget.min(64);
    let mut bit: Vec<Option<u8>> = vec![None; inst.k()];
    let mut bits_used: u32 = 0;
    for (ci, cluster) in inst.clusters.iter().enumerate() {
        if cluster.len() >= 2 {
            if bits_used >= bit_budget {
                return Err(Error::Budget(format!(
                    "instance has more than {bit_budget} clusters of size >= 2"
                )));
            }
            bit[ci] = Some(bits_used as u8);
            bits_used += 1;
        }
    }

    let adj = Adjacency::from_instance(inst);
    let mut dist: HashMap<(usize, u64), Cost> = HashMap::new();
    let mut parent: HashMap<(usize, u64), (usize, u64)> = HashMap::new();
    let mut settled: std::collections::HashSet<(usize, u64)> = Default::default();
    let mut heap: BinaryHeap<Reverse<(Cost, usize, u64)>> = BinaryHeap::new();

    dist.insert((source, 0), 0);
    heap.push(Reverse((0, source, 0)));
    let mut settle_count: u64 = 0;

    while let Some(Reverse((d, u, mask))) = heap.pop() {
        if opts.cutoff.is_some_and(|c| d >= c) {
            // Heap is distance-ordered; nothing cheaper is left.
            break;
        }
        if !settled.insert((u, mask)) {
            continue;
        }
        settle_count += 1;
        if settle_count > opts.state_budget {
            return Err(Error::Budget(format!(
                "contiguous path search exceeded {} settled states",
                opts.state_budget
            )));
        }
        if u == target {
            let path = reconstruct(&parent, source, target, mask);
            let sol = PathSolution::found(d, path);
            sol.check_against(inst, source, target)
                .expect("reconstructed contiguous path failed verification");
            return Ok(ContiguousResult::Found(sol));
        }

        let (cu, du) = (assignment[u], d);
        for &Arc { to: v, weight, .. } in &adj.lists[u] {
            let cv = assignment[v];
            let next_mask = if cu == cv {
                mask
            } else {
                let mut nm = mask;
                if let Some(b) = bit[cu] {
                    nm |= 1u64 << b;
                }
                if let Some(b) = bit[cv] {
                    if nm & (1u64 << b) != 0 {
                        continue;
                    }
                }
                nm
            };
            let nd = add(du, weight);
            if opts.cutoff.is_some_and(|c| nd >= c) {
                continue;
            }
            let key = (v, next_mask);
            if settled.contains(&key) {
                continue;
            }
            let better = dist.get(&key).map_or(true, |&old| nd < old);
            if better {
                dist.insert(key, nd);
                parent.insert(key, (u, mask));
                heap.push(Reverse((nd, v, next_mask)));
            }
        }
    }

    match opts.cutoff {
        Some(cutoff) => Ok(ContiguousResult::NoneBelowCutoff { cutoff }),
        None => Ok(ContiguousResult::Unreachable),
    }
}

/// Follows parent pointers back to the source and removes any zero-cost
/// excursions that revisit a singleton-cluster vertex, leaving a simple
/// path.
fn reconstruct(
    parent: &HashMap<(usize, u64), (usize, u64)>,
    source: usize,
    target: usize,
    final_mask: u64,
) -> Vec<usize> {
    let mut walk = vec![target];
    let mut state = (target, final_mask);
    while state.0 != source || parent.contains_key(&state) {
        match parent.get(&state) {
            Some(&prev) => {
                walk.push(prev.0);
                state = prev;
            }
            None => break,
        }
    }
    walk.reverse();
    shortcut_to_simple(walk)
}

/// Cuts cycles out of a walk: whenever a vertex reappears, the portion
/// since its first occurrence is dropped.
fn shortcut_to_simple(walk: Vec<usize>) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(walk.len());
    let mut position: HashMap<usize, usize> = HashMap::new();
    for v in walk {
        if let Some(&p) = position.get(&v) {
            for &gone in &path[p + 1..] {
                position.remove(&gone);
            }
            path.truncate(p + 1);
        } else {
            position.insert(v, path.len());
            path.push(v);
        }
    }
    path
}

/// Exhaustive oracle: enumerates every simple `source`-`target` path,
/// filters by the contiguity rule on the raw vertex sequence, and returns
/// the cheapest. Refuses instances with more than
/// [`PATH_ORACLE_VERTEX_LIMIT`] vertices.
pub fn contiguous_path_by_enumeration(
    inst: &ClusteredInstance,
    source: usize,
    target: usize,
) -> Result<ContiguousResult> {
    if inst.n > PATH_ORACLE_VERTEX_LIMIT {
        return Err(Error::Budget(format!(
            "path enumeration is limited to {PATH_ORACLE_VERTEX_LIMIT} vertices, instance has {}",
            inst.n
        )));
    }
    if source >= inst.n || target >= inst.n {
        return Err(Error::Usage(format!(
            "path endpoints {source}, {target} must be vertices (n = {})",
            inst.n
        )));
    }
    let assignment = inst.cluster_assignment();
    let adj = Adjacency::from_instance(inst);

    struct Search<'a> {
        adj: &'a Adjacency,
        assignment: &'a [usize],
        target: usize,
        stack: Vec<usize>,
        visited: u32,
        best: Option<(Cost, Vec<usize>)>,
    }

    impl Search<'_> {
        fn dfs(&mut self, u: usize, cost: Cost) {
            if u == self.target {
                if visits_clusters_consecutively(self.assignment, &self.stack)
                    && self.best.as_ref().map_or(true, |(bc, _)| cost < *bc)
                {
                    self.best = Some((cost, self.stack.clone()));
                }
                return;
            }
            for i in 0..self.adj.lists[u].len() {
                let Arc { to, weight, .. } = self.adj.lists[u][i];
                if self.visited & (1 << to) != 0 {
                    continue;
                }
                self.visited |= 1 << to;
                self.stack.push(to);
                self.dfs(to, add(cost, weight));
                self.stack.pop();
                self.visited &= !(1 << to);
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        assignment: &assignment,
        target,
        stack: vec![source],
        visited: 1 << source,
        best: None,
    };
    search.dfs(source, 0);

    match search.best {
        Some((cost, path)) => Ok(ContiguousResult::Found(PathSolution::found(cost, path))),
        None => Ok(ContiguousResult::Unreachable),
    }
}
