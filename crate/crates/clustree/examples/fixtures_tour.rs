//! Walks through the two built-in fixtures and solves each one with all
//! three exact solvers: the brute-force enumeration oracle, the dynamic
//! program over cluster subsets, and the root-vector enumeration.
//!
//! Run with `cargo run --example fixtures_tour`.

use clustree::exact::{
    cluster_subset_solve, count_feasible_trees, min_cost_tree_by_enumeration, root_vector_solve,
    RootEnumOptions, SubsetDpOptions, DEFAULT_ENUMERATION_BUDGET,
};
use clustree::instance::fixtures;

fn main() -> clustree::error::Result<()> {
    for (name, inst, expected) in [
        ("twin triangles", fixtures::twin_triangles(), 10),
        ("split path", fixtures::split_path(), 6),
    ] {
        println!("=== {name} ===");
        println!(
            "{} vertices, {} edges, {} clusters, source {}",
            inst.n,
            inst.m(),
            inst.k(),
            inst.source
        );
        for (i, cluster) in inst.clusters.iter().enumerate() {
            println!("  cluster {i}: {cluster:?}");
        }

        let oracle = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET)?;
        let subsets = cluster_subset_solve(&inst, &SubsetDpOptions::default())?;
        let roots = root_vector_solve(&inst, &RootEnumOptions::default())?;
        println!(
            "optimal broadcast cost: oracle={} subset-dp={} root-enum={}",
            oracle.cost, subsets.cost, roots.cost
        );
        assert_eq!(oracle.cost, expected);
        assert_eq!(subsets.cost, expected);
        assert_eq!(roots.cost, expected);

        // Every solver's witness tree must survive independent rechecking.
        oracle.check_against(&inst)?;
        subsets.check_against(&inst)?;
        roots.check_against(&inst)?;
        println!("oracle tree parents: {:?}", oracle.parent);
        println!("source distances:    {:?}", oracle.dist);

        let trees = count_feasible_trees(&inst, DEFAULT_ENUMERATION_BUDGET)?;
        println!("feasible spanning trees: {trees}");
        println!();
    }

    // The twin-triangle instance has exactly nine trees in which both
    // triangle clusters stay connected, and the best of them costs 10.
    let twin = fixtures::twin_triangles();
    assert_eq!(count_feasible_trees(&twin, DEFAULT_ENUMERATION_BUDGET)?, 9);
    let best = min_cost_tree_by_enumeration(&twin, DEFAULT_ENUMERATION_BUDGET)?;
    assert_eq!(best.parent, vec![0, 0, 0, 2, 3, 3]);
    assert_eq!(best.dist, vec![0, 1, 1, 2, 3, 3]);
    println!("all asserts passed");
    Ok(())
}
