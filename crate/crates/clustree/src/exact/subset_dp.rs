//! Exact solver parameterized by the number of clusters: dynamic
//! programming over cluster subsets driven by min-sum subset convolution.
//!
//! `table[v][i][C]` is (an upper bound on, exact once `i >= |C|`) the
//! cheapest tree that spans the clusters in `C`, keeps each of them
//! connected, and is rooted at `v`, with every value capped at the current
//! search bound `M`. Level 1 holds one shortest-path tree per cluster per
//! root. A level-`i` entry either carries the level-`i-1` value forward or
//! splits `C`: a part `Z` is solved at level `i-1` rooted at some vertex
//! `v'` inside it and hung below `v` through the cheapest hop leaving
//! `v`'s cluster, which adds the hop length once per vertex of `Z`; the
//! remainder stays rooted at `v` at level `i-1`. Minimizing over all
//! splits of all `C` at once is exactly a min-sum subset convolution over
//! the cluster ground set, after the part root `v'` is minimized out of
//! the hop term first. The outer loop doubles `M` until the full-mask
//! entry drops below it, at which point the value is exact and a matching
//! tree is rebuilt from the table.
//!
//! Capping keeps every intermediate value in `0..=M`, which is what lets
//! the ranked convolution work in a small truncated polynomial ring; the
//! `fast_convolution` option switches to it, changing nothing observable.

use std::path::PathBuf;

use crate::approx::clustered_minimum_weight_tree;
use crate::cost::{add, mul, Cost, INFINITY};
use crate::error::{Error, Result};
use crate::exact::convolution::{min_sum_convolution_naive, min_sum_convolution_ranked};
use crate::graph::{ensure_tree_feasible, induced_subgraph};
use crate::instance::ClusteredInstance;
use crate::solution::TreeSolution;

/// Cap on `n * (k+1) * 2^k` table entries before the solver refuses.
const TABLE_ENTRY_LIMIT: u64 = 1 << 27;

/// Options for [`cluster_subset_solve`].
#[derive(Clone, Debug, Default)]
pub struct SubsetDpOptions {
    /// Evaluate the subset convolutions with the ranked transform instead
    /// of the direct submask walk. Same results; only the constant factors
    /// differ, and not necessarily in the ranked variant's favor on small
    /// cluster counts.
    pub fast_convolution: bool,
    /// Dump every finite table entry of the final search round to this
    /// file as CSV (`vertex,level,cluster_mask,value`).
    pub trace_path: Option<PathBuf>,
}

struct ClusterData {
    members: Vec<usize>,
    /// Local index of each member's vertex id.
    local: Vec<usize>,
    /// Pairwise distances inside the cluster, `[root][vertex]`, local ids.
    dist: Vec<Vec<Cost>>,
    /// Shortest-path-tree edge labels per local root.
    tree_labels: Vec<Vec<usize>>,
    /// Sum of distances from each local root.
    root_cost: Vec<Cost>,
}

/// Exact clustered broadcast tree via the cluster-subset dynamic program.
///
/// Works for unit and general nonnegative integer weights. Runtime and
/// memory are exponential in the number of clusters `k` and polynomial in
/// everything else, so this is the solver of choice when `k` is small.
pub fn cluster_subset_solve(
    inst: &ClusteredInstance,
    opts: &SubsetDpOptions,
) -> Result<TreeSolution> {
    inst.ensure_valid()?;
    ensure_tree_feasible(inst)?;

    let n = inst.n;
    let k = inst.k();
    let entries = (n as u64)
        .saturating_mul(k as u64 + 1)
        .saturating_mul(1u64 << k.min(63));
    if k >= 26 || entries > TABLE_ENTRY_LIMIT {
        return Err(Error::Budget(format!(
            "cluster-subset table would need {entries} entries for k = {k}"
        )));
    }
    let size = 1usize << k;
    let full = size - 1;
    let assignment = inst.cluster_assignment();

    let clusters: Vec<ClusterData> = inst
        .clusters
        .iter()
        .map(|members| {
            let sub = induced_subgraph(inst, members);
            let mut dist = Vec::with_capacity(sub.n());
            let mut tree_labels = Vec::with_capacity(sub.n());
            let mut root_cost = Vec::with_capacity(sub.n());
            for root in 0..sub.n() {
                let sp = sub.adj.spt(root);
                root_cost.push(sp.dist.iter().fold(0, |acc, &d| add(acc, d)));
                tree_labels.push(sp.tree_edge_labels());
                dist.push(sp.dist);
            }
            ClusterData {
                members: sub.vertices.clone(),
                local: sub.local.clone(),
                dist,
                tree_labels,
                root_cost,
            }
        })
        .collect();

    // hop[v][v'] is the cheapest way to leave v's cluster and land on v':
    // walk inside the cluster to some member x, then take an edge (x, v').
    // hop_edge remembers which edge, for reconstruction.
    let mut hop = vec![INFINITY; n * n];
    let mut hop_via = vec![usize::MAX; n * n];
    let mut hop_edge = vec![usize::MAX; n * n];
    for (id, &(a, b, w)) in inst.edges.iter().enumerate() {
        let (ca, cb) = (assignment[a], assignment[b]);
        if ca == cb {
            continue;
        }
        let mut relax = |side: usize, exit: usize, land: usize| {
            let data = &clusters[side];
            let exit_local = data.local[exit];
            for (vl, &v) in data.members.iter().enumerate() {
                let cand = add(data.dist[vl][exit_local], w);
                let slot = v * n + land;
                if (cand, exit, id) < (hop[slot], hop_via[slot], hop_edge[slot]) {
                    hop[slot] = cand;
                    hop_via[slot] = exit;
                    hop_edge[slot] = id;
                }
            }
        };
        relax(ca, a, b);
        relax(cb, b, a);
    }

    // Vertex count of each cluster subset.
    let mut eta = vec![0 as Cost; size];
    for c in 1..size {
        let low = c.trailing_zeros() as usize;
        eta[c] = add(eta[c & (c - 1)], inst.clusters[low].len() as Cost);
    }

    let idx = |v: usize, i: usize, c: usize| (v * (k + 1) + i) * size + c;

    let attempt = |m: Cost| -> Vec<Cost> {
        let mut table = vec![m; n * (k + 1) * size];
        for v in 0..n {
            let ci = assignment[v];
            let base = clusters[ci].root_cost[clusters[ci].local[v]];
            table[idx(v, 1, 1 << ci)] = base.min(m);
        }
        for i in 2..=k {
            for v in 0..n {
                let mut fprime = vec![INFINITY; size];
                for (zc, slot) in fprime.iter_mut().enumerate().skip(1) {
                    let load_factor = eta[zc];
                    let mut best = INFINITY;
                    let mut bits = zc;
                    while bits != 0 {
                        let ci = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        for &vp in &clusters[ci].members {
                            let l = hop[v * n + vp];
                            if l == INFINITY {
                                continue;
                            }
                            let load = mul(l, load_factor).min(m);
                            let cand = add(load, table[idx(vp, i - 1, zc)]);
                            if cand < best {
                                best = cand;
                            }
                        }
                    }
                    *slot = best;
                }
                let gprime = table[idx(v, i - 1, 0)..=idx(v, i - 1, full)].to_vec();
                let h = if opts.fast_convolution {
                    min_sum_convolution_ranked(k as u32, m, &fprime, &gprime)
                } else {
                    min_sum_convolution_naive(k as u32, m, &fprime, &gprime)
                };
                for (c, &hc) in h.iter().enumerate() {
                    table[idx(v, i, c)] = hc.min(table[idx(v, i - 1, c)]);
                }
            }
        }
        table
    };

    let upper_bound = if inst.weighted {
        clustered_minimum_weight_tree(inst)?.cost.max(1)
    } else {
        (n as Cost).saturating_mul(n as Cost)
    };

    let mut m: Cost = 1;
    let (m, table) = loop {
        let table = attempt(m);
        if table[idx(inst.source, k, full)] < m {
            break (m, table);
        }
        if m > upper_bound {
            return Err(Error::Infeasible(
                "no clustered spanning tree found within the cost bound".into(),
            ));
        }
        m = m.saturating_mul(2);
    };

    if let Some(path) = &opts.trace_path {
        let mut text = String::from("vertex,level,cluster_mask,value\n");
        for v in 0..n {
            for i in 1..=k {
                for c in 0..size {
                    let val = table[idx(v, i, c)];
                    if val < m {
                        text.push_str(&format!("{v},{i},{c},{val}\n"));
                    }
                }
            }
        }
        std::fs::write(path, text)?;
    }

    // Rebuild a tree matching the optimal value by retracing the choices.
    struct Rebuild<'a> {
        table: &'a [Cost],
        clusters: &'a [ClusterData],
        assignment: &'a [usize],
        hop: &'a [Cost],
        hop_edge: &'a [usize],
        eta: &'a [Cost],
        n: usize,
        k: usize,
        size: usize,
        m: Cost,
        labels: Vec<usize>,
    }

    impl Rebuild<'_> {
        fn idx(&self, v: usize, i: usize, c: usize) -> usize {
            (v * (self.k + 1) + i) * self.size + c
        }

        fn run(&mut self, v: usize, i: usize, c: usize) {
            let val = self.table[self.idx(v, i, c)];
            debug_assert!(val < self.m);
            if i == 1 {
                let ci = self.assignment[v];
                debug_assert_eq!(c, 1 << ci);
                let data = &self.clusters[ci];
                self.labels.extend(&data.tree_labels[data.local[v]]);
                return;
            }
            if self.table[self.idx(v, i - 1, c)] == val {
                return self.run(v, i - 1, c);
            }
            let mut zc = c;
            loop {
                if zc != 0 && zc != c {
                    let rest = c & !zc;
                    let tail = self.table[self.idx(v, i - 1, rest)];
                    if tail < self.m {
                        let load_factor = self.eta[zc];
                        let mut bits = zc;
                        while bits != 0 {
                            let ci = bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            for &vp in &self.clusters[ci].members {
                                let l = self.hop[v * self.n + vp];
                                if l == INFINITY {
                                    continue;
                                }
                                let load = mul(l, load_factor).min(self.m);
                                let part = self.table[self.idx(vp, i - 1, zc)];
                                if add(load, add(part, tail)) == val {
                                    self.labels.push(self.hop_edge[v * self.n + vp]);
                                    self.run(vp, i - 1, zc);
                                    self.run(v, i - 1, rest);
                                    return;
                                }
                            }
                        }
                    }
                }
                if zc == 0 {
                    break;
                }
                zc = (zc - 1) & c;
            }
            unreachable!("table value {val} at (v={v}, i={i}, c={c:#b}) has no decomposition");
        }
    }

    let optimum = table[idx(inst.source, k, full)];
    let mut rebuild = Rebuild {
        table: &table,
        clusters: &clusters,
        assignment: &assignment,
        hop: &hop,
        hop_edge: &hop_edge,
        eta: &eta,
        n,
        k,
        size,
        m,
        labels: Vec::with_capacity(n.saturating_sub(1)),
    };
    rebuild.run(inst.source, k, full);
    let mut labels = rebuild.labels;
    labels.sort_unstable();
    let solution = TreeSolution::from_edge_labels(inst, &labels)?;
    assert_eq!(
        solution.cost, optimum,
        "rebuilt tree must realize the table optimum"
    );
    assert!(solution.feasible, "rebuilt tree must respect the clusters");
    Ok(solution)
}
