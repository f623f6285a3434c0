//! Graph primitives: adjacency, shortest-path trees, spanning trees,
//! induced subgraphs, cluster quotients, and the cluster-diameter measure.
//!
//! Everything here is deterministic. Ties in shortest paths are broken
//! toward the smaller `(parent, edge)` pair, ties in spanning trees toward
//! the smaller edge label, so repeated runs and different thread counts
//! produce identical structures.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::cost::{add, Cost, INFINITY};
use crate::error::{Error, Result};
use crate::instance::ClusteredInstance;

/// Disjoint-set forest with union by rank and path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets containing `a` and `b`; returns false if they were
    /// already together.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// One directed arc in an adjacency list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    /// Head vertex.
    pub to: usize,
    /// Arc weight.
    pub weight: Cost,
    /// Label tying the arc back to its originating edge (usually the index
    /// into [`ClusteredInstance::edges`]).
    pub edge: usize,
}

/// Undirected adjacency structure over vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Adjacency {
    pub lists: Vec<Vec<Arc>>,
}

impl Adjacency {
    /// Builds adjacency lists for the whole instance. Arc labels are the
    /// indices into `inst.edges`.
    pub fn from_instance(inst: &ClusteredInstance) -> Self {
        Self::from_labeled_edges(
            inst.n,
            inst.edges.iter().enumerate().map(|(id, &(u, v, w))| (u, v, w, id)),
        )
    }

    /// Builds adjacency lists from `(u, v, w, label)` edges, inserting both
    /// directions and sorting each list for deterministic traversal.
    pub fn from_labeled_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Cost, usize)>,
    ) -> Self {
        let mut lists = vec![Vec::new(); n];
        for (u, v, w, label) in edges {
            lists[u].push(Arc { to: v, weight: w, edge: label });
            lists[v].push(Arc { to: u, weight: w, edge: label });
        }
        for list in &mut lists {
            list.sort_by_key(|a| (a.to, a.edge));
        }
        Adjacency { lists }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    /// Shortest-path tree from `root`; see [`shortest_path_tree`].
    pub fn spt(&self, root: usize) -> ShortestPaths {
        shortest_path_tree(&self.lists, root)
    }
}

/// Result of a single-source shortest-path computation.
///
/// Unreachable vertices keep `dist == INFINITY` and `parent == usize::MAX`;
/// the root is its own parent with no parent edge.
#[derive(Clone, Debug)]
pub struct ShortestPaths {
    pub root: usize,
    pub dist: Vec<Cost>,
    pub parent: Vec<usize>,
    /// Label of the arc used to reach each vertex (`usize::MAX` for the
    /// root and for unreachable vertices).
    pub parent_edge: Vec<usize>,
    /// Vertices in the order they were settled.
    pub order: Vec<usize>,
}

impl ShortestPaths {
    pub fn reached(&self, v: usize) -> bool {
        self.dist[v] != INFINITY
    }

    pub fn all_reached(&self) -> bool {
        self.dist.iter().all(|&d| d != INFINITY)
    }

    /// Labels of the tree arcs, i.e. the parent edge of every reached
    /// non-root vertex, sorted.
    pub fn tree_edge_labels(&self) -> Vec<usize> {
        let mut labels: Vec<usize> = (0..self.dist.len())
            .filter(|&v| v != self.root && self.reached(v))
            .map(|v| self.parent_edge[v])
            .collect();
        labels.sort_unstable();
        labels
    }
}

/// Dijkstra over explicit adjacency lists (directed or undirected).
///
/// Works unchanged for unit weights, where it degenerates to breadth-first
/// search. The heap is keyed by `(dist, vertex)` and an equal-distance
/// relaxation replaces the stored parent only when its `(parent, edge)`
/// pair is smaller, so the returned tree is canonical.
pub fn shortest_path_tree(lists: &[Vec<Arc>], root: usize) -> ShortestPaths {
    let n = lists.len();
    let mut dist = vec![INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut settled = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();

    dist[root] = 0;
    parent[root] = root;
    heap.push(Reverse((0, root)));

    while let Some(Reverse((d, u))) = heap.pop() {
        if settled[u] || d > dist[u] {
            continue;
        }
        settled[u] = true;
        order.push(u);
        for &Arc { to, weight, edge } in &lists[u] {
            if settled[to] {
                continue;
            }
            let nd = add(d, weight);
            if nd < dist[to] {
                dist[to] = nd;
                parent[to] = u;
                parent_edge[to] = edge;
                heap.push(Reverse((nd, to)));
            } else if nd == dist[to] && (u, edge) < (parent[to], parent_edge[to]) {
                parent[to] = u;
                parent_edge[to] = edge;
            }
        }
    }

    ShortestPaths { root, dist, parent, parent_edge, order }
}

/// A vertex-induced subgraph with its relabeling maps.
#[derive(Clone, Debug)]
pub struct Induced {
    /// Original id of each local vertex, ascending.
    pub vertices: Vec<usize>,
    /// Original id to local id; `usize::MAX` outside the subgraph.
    pub local: Vec<usize>,
    /// Adjacency over local ids; arc labels are original edge indices.
    pub adj: Adjacency,
}

impl Induced {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }
}

/// Restricts the instance graph to `members`, keeping original edge indices
/// as arc labels.
pub fn induced_subgraph(inst: &ClusteredInstance, members: &[usize]) -> Induced {
    let mut vertices: Vec<usize> = members.to_vec();
    vertices.sort_unstable();
    let mut local = vec![usize::MAX; inst.n];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    let edges = inst.edges.iter().enumerate().filter_map(|(id, &(u, v, w))| {
        if local[u] != usize::MAX && local[v] != usize::MAX {
            Some((local[u], local[v], w, id))
        } else {
            None
        }
    });
    let adj = Adjacency::from_labeled_edges(vertices.len(), edges);
    Induced { vertices, local, adj }
}

/// Kruskal's algorithm over labeled edges.
///
/// Returns the total weight together with the chosen labels, or `None`
/// when the edges do not connect all `n` vertices. Ties are broken by
/// label, so callers that pass globally unique labels (such as original
/// edge indices) get a canonical tree.
pub fn minimum_spanning_tree(
    n: usize,
    edges: &[(usize, usize, Cost, usize)],
) -> Option<(Cost, Vec<usize>)> {
    if n == 0 {
        return None;
    }
    let mut sorted: Vec<&(usize, usize, Cost, usize)> = edges.iter().collect();
    sorted.sort_by_key(|&&(_, _, w, label)| (w, label));
    let mut uf = UnionFind::new(n);
    let mut total: Cost = 0;
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    for &&(u, v, w, label) in &sorted {
        if uf.union(u, v) {
            total = add(total, w);
            chosen.push(label);
            if chosen.len() == n - 1 {
                break;
            }
        }
    }
    if chosen.len() == n - 1 {
        chosen.sort_unstable();
        Some((total, chosen))
    } else {
        None
    }
}

/// All inter-cluster edges lifted to cluster pairs: `(ca, cb, edge index)`
/// with `ca < cb`, sorted by pair then edge index.
pub fn quotient_edges(inst: &ClusteredInstance) -> Vec<(usize, usize, usize)> {
    let assignment = inst.cluster_assignment();
    let mut out = Vec::new();
    for (id, &(u, v, _)) in inst.edges.iter().enumerate() {
        let (ca, cb) = (assignment[u], assignment[v]);
        if ca != cb {
            out.push((ca.min(cb), ca.max(cb), id));
        }
    }
    out.sort_unstable();
    out
}

/// Whether contracting every cluster leaves a connected graph.
pub fn quotient_is_connected(inst: &ClusteredInstance) -> bool {
    let k = inst.k();
    if k == 0 {
        return false;
    }
    let mut uf = UnionFind::new(k);
    let mut parts = k;
    for (ca, cb, _) in quotient_edges(inst) {
        if uf.union(ca, cb) {
            parts -= 1;
        }
    }
    parts == 1
}

/// Checks that cluster-respecting spanning trees exist at all: every
/// cluster must induce a connected subgraph and the cluster quotient must
/// be connected. Together these also force the whole graph connected.
pub fn ensure_tree_feasible(inst: &ClusteredInstance) -> Result<()> {
    let assignment = inst.cluster_assignment();
    for (ci, cluster) in inst.clusters.iter().enumerate() {
        let mut uf = UnionFind::new(inst.n);
        for &(u, v, _) in &inst.edges {
            if assignment[u] == ci && assignment[v] == ci {
                uf.union(u, v);
            }
        }
        let root = uf.find(cluster[0]);
        if cluster.iter().any(|&v| uf.find(v) != root) {
            return Err(Error::Infeasible(format!(
                "cluster {ci} induces a disconnected subgraph"
            )));
        }
    }
    if !quotient_is_connected(inst) {
        return Err(Error::Infeasible(
            "the cluster quotient graph is disconnected".into(),
        ));
    }
    Ok(())
}

/// Largest diameter of any cluster's induced subgraph.
///
/// This is the locality measure the approximation guarantees are stated
/// in. Unweighted singleton-only instances give 0. Fails if some cluster
/// is internally disconnected, since its diameter would be unbounded.
pub fn max_cluster_diameter(inst: &ClusteredInstance) -> Result<Cost> {
    let mut best: Cost = 0;
    for (ci, cluster) in inst.clusters.iter().enumerate() {
        let sub = induced_subgraph(inst, cluster);
        for local in 0..sub.n() {
            let sp = sub.adj.spt(local);
            for &d in &sp.dist {
                if d == INFINITY {
                    return Err(Error::Infeasible(format!(
                        "cluster {ci} induces a disconnected subgraph"
                    )));
                }
                best = best.max(d);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures::{split_path, twin_triangles};

    #[test]
    fn spt_distances_on_twin_triangles() {
        let inst = twin_triangles();
        let adj = Adjacency::from_instance(&inst);
        let sp = adj.spt(0);
        assert_eq!(sp.dist, vec![0, 1, 1, 2, 3, 3]);
        assert!(sp.all_reached());
        // Canonical parents: 1 and 2 hang off 0, then the chain 2-3 and
        // the fan 3-4, 3-5.
        assert_eq!(sp.parent, vec![0, 0, 0, 2, 3, 3]);
    }

    #[test]
    fn spt_tie_break_prefers_smaller_parent() {
        // A square: both 1 and 2 reach 3 at distance 2; parent must be 1.
        let adj = Adjacency::from_labeled_edges(
            4,
            vec![(0, 1, 1, 0), (0, 2, 1, 1), (1, 3, 1, 2), (2, 3, 1, 3)],
        );
        let sp = adj.spt(0);
        assert_eq!(sp.dist[3], 2);
        assert_eq!(sp.parent[3], 1);
        assert_eq!(sp.parent_edge[3], 2);
    }

    #[test]
    fn spt_flags_unreachable() {
        let adj = Adjacency::from_labeled_edges(3, vec![(0, 1, 1, 0)]);
        let sp = adj.spt(0);
        assert!(!sp.reached(2));
        assert_eq!(sp.parent[2], usize::MAX);
        assert_eq!(sp.order, vec![0, 1]);
    }

    #[test]
    fn mst_picks_light_edges_and_breaks_ties_by_label() {
        let edges = vec![
            (0, 1, 2, 0),
            (1, 2, 2, 1),
            (0, 2, 2, 2),
            (2, 3, 5, 3),
        ];
        let (w, chosen) = minimum_spanning_tree(4, &edges).unwrap();
        assert_eq!(w, 9);
        assert_eq!(chosen, vec![0, 1, 3]);
        assert!(minimum_spanning_tree(5, &edges).is_none());
    }

    #[test]
    fn quotient_of_twin_triangles_is_one_edge() {
        let inst = twin_triangles();
        assert_eq!(quotient_edges(&inst), vec![(0, 1, 3)]);
        assert!(quotient_is_connected(&inst));
        assert!(ensure_tree_feasible(&inst).is_ok());
    }

    #[test]
    fn diameter_of_fixtures() {
        assert_eq!(max_cluster_diameter(&twin_triangles()).unwrap(), 1);
        assert_eq!(max_cluster_diameter(&split_path()).unwrap(), 1);
    }

    #[test]
    fn diameter_fails_on_disconnected_cluster() {
        let inst = crate::instance::ClusteredInstance {
            n: 4,
            weighted: false,
            edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1)],
            clusters: vec![vec![0, 3], vec![1, 2]],
            source: 0,
        };
        assert!(max_cluster_diameter(&inst).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_original_labels() {
        let inst = twin_triangles();
        let sub = induced_subgraph(&inst, &[3, 4, 5]);
        assert_eq!(sub.vertices, vec![3, 4, 5]);
        assert_eq!(sub.local[4], 1);
        // Edges 4, 5, 6 of the instance live inside this cluster.
        let mut labels: Vec<usize> = sub.adj.lists[0].iter().map(|a| a.edge).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![4, 5]);
    }

    #[test]
    fn weighted_spt_uses_weights() {
        let adj = Adjacency::from_labeled_edges(
            3,
            vec![(0, 1, 10, 0), (0, 2, 1, 1), (2, 1, 2, 2)],
        );
        let sp = adj.spt(0);
        assert_eq!(sp.dist, vec![0, 3, 1]);
        assert_eq!(sp.parent[1], 2);
    }
}
