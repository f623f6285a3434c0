//! Exact solver parameterized by cluster sizes: enumeration of root
//! vectors.
//!
//! In an optimal clustered tree, all paths from the source into a cluster
//! enter it at one vertex (the tree restricted to the cluster is a single
//! subtree, so it attaches toward the source exactly once). Rerooting the
//! cluster's interior to a shortest-path tree from that entry vertex never
//! increases any distance. It therefore suffices to try every choice of
//! one entry vertex per cluster: fix the vector, keep only the arcs each
//! choice allows (shortest-path-tree arcs inside each cluster, and
//! inter-cluster edges directed at the chosen entry vertices), and run
//! Dijkstra from the source. Every non-entry vertex has a unique incoming
//! arc, so the resulting parent tree automatically keeps clusters
//! connected, and its distance sum is the best cost for that vector.
//!
//! The source must be its own cluster's entry. For the others only
//! boundary vertices (endpoints of inter-cluster edges) can ever be
//! entered, so the enumeration is restricted to those unless
//! `full_roots` asks for every member. Runtime is the product of the
//! candidate counts times a Dijkstra, parallelizable over the vector
//! space with bit-identical results.

use crate::cost::{add, Cost, INFINITY};
use crate::error::{Error, Result};
use crate::graph::{ensure_tree_feasible, induced_subgraph, shortest_path_tree, Arc};
use crate::instance::ClusteredInstance;
use crate::solution::TreeSolution;

/// Options for [`root_vector_solve`].
#[derive(Clone, Debug)]
pub struct RootEnumOptions {
    /// Consider every cluster member as a potential entry vertex instead
    /// of only the boundary vertices. Slower; useful as a cross-check.
    pub full_roots: bool,
    /// Worker threads to spread the vector space over.
    pub threads: usize,
}

impl Default for RootEnumOptions {
    fn default() -> Self {
        RootEnumOptions { full_roots: false, threads: 1 }
    }
}

/// Entry-vertex candidates per cluster, ascending; the source cluster is
/// pinned to the source.
fn candidate_roots(inst: &ClusteredInstance, full_roots: bool) -> Vec<Vec<usize>> {
    let assignment = inst.cluster_assignment();
    let mut boundary = vec![false; inst.n];
    for &(a, b, _) in &inst.edges {
        if assignment[a] != assignment[b] {
            boundary[a] = true;
            boundary[b] = true;
        }
    }
    let source_cluster = assignment[inst.source];
    inst.clusters
        .iter()
        .enumerate()
        .map(|(j, members)| {
            let mut list: Vec<usize> = if j == source_cluster {
                vec![inst.source]
            } else if full_roots {
                members.clone()
            } else {
                members.iter().copied().filter(|&v| boundary[v]).collect()
            };
            list.sort_unstable();
            list
        })
        .collect()
}

/// Number of root vectors [`root_vector_solve`] would examine.
pub fn root_vector_count(inst: &ClusteredInstance, opts: &RootEnumOptions) -> Result<u128> {
    inst.ensure_valid()?;
    ensure_tree_feasible(inst)?;
    Ok(candidate_roots(inst, opts.full_roots)
        .iter()
        .map(|c| c.len() as u128)
        .product())
}

struct Evaluator {
    n: usize,
    k: usize,
    source: usize,
    /// `intra[j][c]`: directed shortest-path-tree arcs (parent, child,
    /// weight, edge label) of cluster `j` rooted at its `c`-th candidate.
    intra: Vec<Vec<Vec<(usize, usize, Cost, usize)>>>,
    /// Inter-cluster edges as (endpoint, endpoint, weight, label, cluster
    /// of first, cluster of second).
    inter: Vec<(usize, usize, Cost, usize, usize, usize)>,
    candidates: Vec<Vec<usize>>,
}

impl Evaluator {
    fn vector_count(&self) -> u128 {
        self.candidates.iter().map(|c| c.len() as u128).product()
    }

    /// Mixed-radix decode of a linear index, last cluster fastest, so
    /// linear order equals lexicographic order over the vectors.
    fn decode(&self, mut index: u64, out: &mut [usize]) {
        for j in (0..self.k).rev() {
            let len = self.candidates[j].len() as u64;
            out[j] = (index % len) as usize;
            index /= len;
        }
    }

    fn build_lists(&self, choice: &[usize], lists: &mut [Vec<Arc>]) {
        for list in lists.iter_mut() {
            list.clear();
        }
        for j in 0..self.k {
            for &(p, v, w, id) in &self.intra[j][choice[j]] {
                lists[p].push(Arc { to: v, weight: w, edge: id });
            }
        }
        for &(a, b, w, id, ca, cb) in &self.inter {
            if b == self.candidates[cb][choice[cb]] {
                lists[a].push(Arc { to: b, weight: w, edge: id });
            }
            if a == self.candidates[ca][choice[ca]] {
                lists[b].push(Arc { to: a, weight: w, edge: id });
            }
        }
        for list in lists.iter_mut() {
            list.sort_by_key(|arc| (arc.to, arc.edge));
        }
    }

    /// Cost of the best tree for this vector, or `None` if some vertex is
    /// unreachable under it.
    fn evaluate(&self, choice: &[usize], lists: &mut [Vec<Arc>]) -> Option<Cost> {
        self.build_lists(choice, lists);
        let sp = shortest_path_tree(lists, self.source);
        let mut total: Cost = 0;
        for &d in &sp.dist {
            if d == INFINITY {
                return None;
            }
            total = add(total, d);
        }
        Some(total)
    }

    /// Best `(cost, index)` over `lo..hi`, scanning in index order.
    fn scan(&self, lo: u64, hi: u64) -> Option<(Cost, u64)> {
        let mut choice = vec![0usize; self.k];
        let mut lists: Vec<Vec<Arc>> = vec![Vec::new(); self.n];
        let mut best: Option<(Cost, u64)> = None;
        for index in lo..hi {
            self.decode(index, &mut choice);
            if let Some(cost) = self.evaluate(&choice, &mut lists) {
                if best.map_or(true, |(bc, _)| cost < bc) {
                    best = Some((cost, index));
                }
            }
        }
        best
    }
}

/// Exact clustered broadcast tree via entry-vertex enumeration.
///
/// Works for unit and general nonnegative integer weights. The practical
/// limit is the product of cluster boundary sizes, making this the solver
/// of choice when clusters are small or sparsely interconnected, even if
/// there are many of them.
pub fn root_vector_solve(
    inst: &ClusteredInstance,
    opts: &RootEnumOptions,
) -> Result<TreeSolution> {
    inst.ensure_valid()?;
    ensure_tree_feasible(inst)?;

    let assignment = inst.cluster_assignment();
    let candidates = candidate_roots(inst, opts.full_roots);
    let intra: Vec<Vec<Vec<(usize, usize, Cost, usize)>>> = inst
        .clusters
        .iter()
        .enumerate()
        .map(|(j, members)| {
            let sub = induced_subgraph(inst, members);
            candidates[j]
                .iter()
                .map(|&root| {
                    let sp = sub.adj.spt(sub.local[root]);
                    (0..sub.n())
                        .filter(|&v| v != sub.local[root])
                        .map(|v| {
                            let p = sp.parent[v];
                            let w = sp.dist[v] - sp.dist[p];
                            (sub.vertices[p], sub.vertices[v], w, sp.parent_edge[v])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let inter: Vec<(usize, usize, Cost, usize, usize, usize)> = inst
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, b, _))| assignment[a] != assignment[b])
        .map(|(id, &(a, b, w))| (a, b, w, id, assignment[a], assignment[b]))
        .collect();

    let eval = Evaluator {
        n: inst.n,
        k: inst.k(),
        source: inst.source,
        intra,
        inter,
        candidates,
    };

    let total = eval.vector_count();
    debug_assert!(total > 0, "feasibility check guarantees candidates");
    let total = u64::try_from(total).map_err(|_| {
        Error::Budget(format!("root vector space has {total} elements"))
    })?;

    let threads = opts.threads.max(1).min(total.max(1) as usize);
    let best = if threads <= 1 {
        eval.scan(0, total)
    } else {
        let chunk = total.div_ceil(threads as u64);
        let results: Vec<Option<(Cost, u64)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(total);
                    let eval = &eval;
                    scope.spawn(move || eval.scan(lo, hi.max(lo)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        results.into_iter().flatten().min()
    };

    let (cost, index) = best.ok_or_else(|| {
        Error::Infeasible("no entry-vertex choice reaches every vertex".into())
    })?;

    let mut choice = vec![0usize; eval.k];
    eval.decode(index, &mut choice);
    let mut lists: Vec<Vec<Arc>> = vec![Vec::new(); eval.n];
    eval.build_lists(&choice, &mut lists);
    let sp = shortest_path_tree(&lists, inst.source);
    let solution = TreeSolution::from_parent(inst, sp.parent)?;
    assert_eq!(solution.cost, cost, "winning vector must reproduce its cost");
    assert!(solution.feasible, "entry-vertex trees keep clusters connected");
    Ok(solution)
}
