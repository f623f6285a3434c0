//! Shows how the consecutive-cluster constraint changes shortest paths.
//! A walk may use any subset of the clusters, but once it leaves a
//! cluster it may never come back to it. The dynamic program handles this
//! with one reachability bit per cluster that could be revisited, and a
//! small brute-force enumerator double-checks it here.
//!
//! Run with `cargo run --example contiguous_path_walkthrough`.

use clustree::exact::{
    contiguous_path_by_enumeration, shortest_contiguous_path, ContiguousOptions, ContiguousResult,
};
use clustree::instance::ClusteredInstance;
use clustree::solution::visits_clusters_consecutively;

fn main() -> clustree::error::Result<()> {
    // A square whose opposite corners 0 and 2 share a cluster. Both walks
    // from 0 to 2 leave that cluster at the start and re-enter it at the
    // end, so no contiguous walk exists even though the graph is
    // connected.
    let square = ClusteredInstance {
        n: 4,
        weighted: false,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
        clusters: vec![vec![0, 2], vec![1], vec![3]],
        source: 0,
    };
    let dp = shortest_contiguous_path(&square, 0, 2, &ContiguousOptions::default())?;
    let oracle = contiguous_path_by_enumeration(&square, 0, 2)?;
    println!("square with clustered corners: dp says {dp:?}");
    assert_eq!(dp, ContiguousResult::Unreachable);
    assert_eq!(oracle, ContiguousResult::Unreachable);
    assert!(!visits_clusters_consecutively(
        &square.cluster_assignment(),
        &[0, 1, 2]
    ));

    // Splitting that cluster removes the obstruction.
    let mut relaxed = square.clone();
    relaxed.clusters = vec![vec![0], vec![1], vec![2], vec![3]];
    let dp = shortest_contiguous_path(&relaxed, 0, 2, &ContiguousOptions::default())?;
    let ContiguousResult::Found(path) = dp else {
        panic!("singleton clusters never obstruct");
    };
    println!(
        "after splitting the cluster: cost {:?} via {:?}",
        path.cost, path.path
    );
    assert_eq!(path.cost, Some(2));

    // A weighted line with a detour. The cheap route 0-1-2-3-4 visits
    // the cluster of 1 and 3 twice with vertex 2 in between, so the
    // constraint forces the expensive direct edge instead.
    let line = ClusteredInstance {
        n: 5,
        weighted: true,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 10)],
        clusters: vec![vec![0], vec![1, 3], vec![2], vec![4]],
        source: 0,
    };
    assert!(!visits_clusters_consecutively(
        &line.cluster_assignment(),
        &[0, 1, 2, 3, 4]
    ));
    let dp = shortest_contiguous_path(&line, 0, 4, &ContiguousOptions::default())?;
    let oracle = contiguous_path_by_enumeration(&line, 0, 4)?;
    let ContiguousResult::Found(path) = dp else {
        panic!("the direct edge is a contiguous walk");
    };
    println!(
        "weighted line: unconstrained cost would be 4, contiguous optimum is {:?} via {:?}",
        path.cost, path.path
    );
    assert_eq!(path.cost, Some(10));
    assert_eq!(path.path, vec![0, 4]);
    match oracle {
        ContiguousResult::Found(p) => assert_eq!(p.cost, Some(10)),
        other => panic!("oracle disagrees: {other:?}"),
    }

    // A cutoff turns the search into a decision procedure: asking for a
    // walk cheaper than the only one correctly reports that none exists.
    let capped = shortest_contiguous_path(
        &line,
        0,
        4,
        &ContiguousOptions {
            cutoff: Some(9),
            ..ContiguousOptions::default()
        },
    )?;
    println!("with cutoff 9: {capped:?}");
    assert!(matches!(capped, ContiguousResult::NoneBelowCutoff { .. }));

    println!("all asserts passed");
    Ok(())
}
