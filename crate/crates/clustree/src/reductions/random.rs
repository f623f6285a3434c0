//! Seeded random clustered instances for property tests and benchmarks.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::ensure_tree_feasible;
use crate::instance::ClusteredInstance;

/// Largest vertex count the generator accepts; it materializes the full
/// pair list to sample absent edges without rejection loops.
const RANDOM_VERTEX_LIMIT: usize = 2048;

/// Generates a random clustered instance, deterministically per seed.
///
/// Vertices `0..k` seed one cluster each and the rest join uniformly
/// random clusters, so all `k` clusters are nonempty. With
/// `ensure_feasible` set, every cluster first receives a random internal
/// spanning tree and the clusters are then linked by a random
/// cluster-level tree, which guarantees that feasible solutions exist;
/// the remaining edge budget is spent on uniformly random absent pairs
/// either way. Weights are uniform in `1..=max_weight`, and
/// `max_weight == 1` produces an unweighted instance. The source is
/// vertex 0.
///
/// Without `ensure_feasible` the instance is returned unvalidated, so
/// clusters may induce disconnected subgraphs; that is the point, as it
/// exercises validation and infeasibility handling downstream.
pub fn gen_random_clustered(
    seed: u64,
    n: usize,
    m: usize,
    k: usize,
    max_weight: Cost,
    ensure_feasible: bool,
) -> Result<ClusteredInstance> {
    if n == 0 {
        return Err(Error::Usage("need at least one vertex".into()));
    }
    if k == 0 || k > n {
        return Err(Error::Usage(format!(
            "cluster count {k} must be between 1 and n = {n}"
        )));
    }
    if max_weight == 0 {
        return Err(Error::Usage("maximum weight must be at least 1".into()));
    }
    let max_edges = n * (n - 1) / 2;
    if m + 1 < n || m > max_edges {
        return Err(Error::Usage(format!(
            "edge count {m} must be between n - 1 = {} and {max_edges}",
            n - 1
        )));
    }
    if n > RANDOM_VERTEX_LIMIT {
        return Err(Error::Budget(format!(
            "random generation handles at most {RANDOM_VERTEX_LIMIT} vertices, got {n}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weighted = max_weight > 1;

    let mut membership = vec![0usize; n];
    for (v, slot) in membership.iter_mut().enumerate() {
        *slot = if v < k { v } else { rng.random_range(0..k) };
    }
    let mut clusters: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, &c) in membership.iter().enumerate() {
        clusters[c].push(v);
    }

    let mut edges: Vec<(usize, usize, Cost)> = Vec::with_capacity(m);
    let mut used: HashSet<(usize, usize)> = HashSet::with_capacity(m);
    let add = |edges: &mut Vec<(usize, usize, Cost)>,
                   used: &mut HashSet<(usize, usize)>,
                   rng: &mut ChaCha8Rng,
                   a: usize,
                   b: usize| {
        let pair = (a.min(b), a.max(b));
        let fresh = used.insert(pair);
        assert!(fresh, "constructed edges never repeat");
        let w = rng.random_range(1..=max_weight);
        edges.push((pair.0, pair.1, w));
    };

    if ensure_feasible {
        for members in &clusters {
            for idx in 1..members.len() {
                let parent = members[rng.random_range(0..idx)];
                add(&mut edges, &mut used, &mut rng, members[idx], parent);
            }
        }
        for c in 1..k {
            let other = rng.random_range(0..c);
            let u = clusters[c][rng.random_range(0..clusters[c].len())];
            let v = clusters[other][rng.random_range(0..clusters[other].len())];
            add(&mut edges, &mut used, &mut rng, u, v);
        }
    }

    if edges.len() < m {
        let mut absent: Vec<(usize, usize)> = Vec::with_capacity(max_edges - edges.len());
        for u in 0..n {
            for v in (u + 1)..n {
                if !used.contains(&(u, v)) {
                    absent.push((u, v));
                }
            }
        }
        let needed = m - edges.len();
        for i in 0..needed {
            let j = rng.random_range(i..absent.len());
            absent.swap(i, j);
            let (u, v) = absent[i];
            add(&mut edges, &mut used, &mut rng, u, v);
        }
    }

    let mut instance = ClusteredInstance {
        n,
        weighted,
        edges,
        clusters,
        source: 0,
    };
    instance.normalize();
    if ensure_feasible {
        instance.ensure_valid()?;
        ensure_tree_feasible(&instance)?;
    }
    Ok(instance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_gives_identical_instances() {
        let a = gen_random_clustered(42, 12, 20, 4, 7, true).unwrap();
        let b = gen_random_clustered(42, 12, 20, 4, 7, true).unwrap();
        assert_eq!(a, b);
        let c = gen_random_clustered(43, 12, 20, 4, 7, true).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn feasible_instances_validate_and_admit_trees() {
        for seed in 0..20 {
            let inst = gen_random_clustered(seed, 10, 16, 3, 5, true).unwrap();
            assert_eq!(inst.n, 10);
            assert_eq!(inst.m(), 16);
            assert_eq!(inst.k(), 3);
            inst.ensure_valid().unwrap();
            ensure_tree_feasible(&inst).unwrap();
        }
    }

    #[test]
    fn singleton_clustering_when_k_equals_n() {
        let inst = gen_random_clustered(7, 6, 9, 6, 1, true).unwrap();
        assert!(inst.clusters.iter().all(|c| c.len() == 1));
        assert!(!inst.weighted);
        assert!(inst.edges.iter().all(|&(_, _, w)| w == 1));
    }

    #[test]
    fn weights_respect_the_bound() {
        let inst = gen_random_clustered(3, 8, 14, 2, 9, true).unwrap();
        assert!(inst.weighted);
        assert!(inst.edges.iter().all(|&(_, _, w)| (1..=9).contains(&w)));
    }

    #[test]
    fn size_constraints_are_enforced() {
        assert!(matches!(
            gen_random_clustered(0, 5, 3, 2, 1, true),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            gen_random_clustered(0, 5, 11, 2, 1, true),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            gen_random_clustered(0, 5, 5, 6, 1, true),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            gen_random_clustered(0, 5, 5, 2, 0, true),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            gen_random_clustered(0, 4096, 8000, 2, 1, true),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn unvalidated_mode_still_returns_well_formed_partitions() {
        let inst = gen_random_clustered(9, 9, 8, 4, 3, false);
        let inst = inst.unwrap();
        let mut seen = vec![false; inst.n];
        for cluster in &inst.clusters {
            for &v in cluster {
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
        assert!(seen.into_iter().all(|x| x));
        assert_eq!(inst.m(), 8);
    }
}
