//! Demonstrates the two polynomial-time tree constructions and the
//! guarantees they come with.
//!
//! On unit-weight instances the broadcast approximation promises a cost
//! within `2 * gamma` of optimal, where `gamma` is the largest cluster
//! diameter; a sharper factor of `min(4nk/gamma, 4n^2/gamma^2)` kicks in
//! when diameters grow. On weighted instances the clustered
//! minimum-weight tree never weighs more than any feasible tree, and its
//! broadcast cost is within a factor `n` of optimal.
//!
//! Run with `cargo run --example approximation_walkthrough`.

use clustree::approx::{
    broadcast_approx, clustered_minimum_weight_tree, worst_case_ratio_lower_bound,
};
use clustree::cost::Cost;
use clustree::exact::{min_cost_tree_by_enumeration, DEFAULT_ENUMERATION_BUDGET};
use clustree::instance::{fixtures, ClusteredInstance};

fn main() -> clustree::error::Result<()> {
    // Unit weights: the twin-triangle fixture has gamma = 1 (each
    // triangle has diameter one inside its cluster).
    let twin = fixtures::twin_triangles();
    let opt = min_cost_tree_by_enumeration(&twin, DEFAULT_ENUMERATION_BUDGET)?;
    let res = broadcast_approx(&twin)?;
    println!("twin triangles: opt={} approx={}", opt.cost, res.solution.cost);
    println!(
        "  gamma={} guarantee factor={:?} shortest-path-tree lower bound={}",
        res.gamma, res.ratio, res.spt_lower_bound
    );
    assert_eq!(res.gamma, 1);
    assert!(res.solution.cost <= 2 * res.gamma * opt.cost);
    assert!(res.spt_lower_bound <= opt.cost);
    res.solution.check_against(&twin)?;

    // Singleton clusters impose no constraint at all, so the
    // approximation degenerates to an exact shortest-path tree and no
    // multiplicative guarantee is needed.
    let free = ClusteredInstance {
        n: 4,
        weighted: false,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
        clusters: vec![vec![0], vec![1], vec![2], vec![3]],
        source: 0,
    };
    let res = broadcast_approx(&free)?;
    println!(
        "singleton clusters: approx={} equals its own lower bound {}",
        res.solution.cost, res.spt_lower_bound
    );
    assert_eq!(res.gamma, 0);
    assert!(res.ratio.is_none());
    assert_eq!(res.solution.cost, res.spt_lower_bound);

    // Weighted instance: a heavy shortcut makes the cheapest spanning
    // structure differ from the lowest-broadcast one.
    let weighted = ClusteredInstance {
        n: 4,
        weighted: true,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 9)],
        clusters: vec![vec![0, 1], vec![2, 3]],
        source: 0,
    };
    let opt = min_cost_tree_by_enumeration(&weighted, DEFAULT_ENUMERATION_BUDGET)?;
    let light = clustered_minimum_weight_tree(&weighted)?;
    let light_weight = light.tree_weight(&weighted);
    let opt_weight = opt.tree_weight(&weighted);
    println!(
        "weighted diamond: light tree weight={light_weight} cost={} | optimal tree weight={opt_weight} cost={}",
        light.cost, opt.cost
    );
    assert!(light_weight <= opt_weight);
    assert!(light.cost <= weighted.n as Cost * opt.cost);
    light.check_against(&weighted)?;

    // The 2 * gamma guarantee is essentially tight: some instance family
    // forces a cost ratio that grows quadratically in gamma.
    println!("worst-case ratio lower bounds by cluster diameter:");
    for gamma in 1..=6u64 {
        let bound = worst_case_ratio_lower_bound(gamma);
        println!("  gamma={gamma}: {}/{}", bound.numer(), bound.denom());
    }
    assert_eq!(worst_case_ratio_lower_bound(4), num::rational::Ratio::from_integer(6));

    println!("all asserts passed");
    Ok(())
}
