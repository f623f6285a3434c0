//! Compares the two min-sum subset convolution routines: the direct walk
//! over all `3^u` subset splits, and the ranked transform that works in
//! `2^u` times polynomial arithmetic with all values capped. The cap is
//! what the cluster-subset solver exploits: during its binary search it
//! only ever needs convolution values below the current bound.
//!
//! Run with `cargo run --example subset_convolution_demo`.

use std::time::Instant;

use clustree::cost::{Cost, INFINITY};
use clustree::exact::{
    cluster_subset_solve, min_sum_convolution_naive, min_sum_convolution_ranked, SubsetDpOptions,
};
use clustree::instance::fixtures;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> clustree::error::Result<()> {
    // Hand-checked universe {0, 1}: the best split of {0, 1} takes f on
    // {0} (value 1) and g on {1} (value 3).
    let f = vec![7, 1, 50, 90];
    let g = vec![8, 2, 3, 70];
    let h = min_sum_convolution_naive(2, 100, &f, &g);
    println!("h over universe {{0,1}}: {h:?}");
    assert_eq!(h[3], 4);
    assert_eq!(h, min_sum_convolution_ranked(2, 100, &f, &g));

    // Random agreement sweep, including infinite entries.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..20 {
        let bits = 1 + round % 8;
        let cap = 5 + (round as Cost % 13);
        let size = 1usize << bits;
        let sample = |rng: &mut ChaCha8Rng| -> Vec<Cost> {
            (0..size)
                .map(|_| {
                    if rng.random_range(0..6) == 0 {
                        INFINITY
                    } else {
                        rng.random_range(0..3 * cap)
                    }
                })
                .collect()
        };
        let f = sample(&mut rng);
        let g = sample(&mut rng);
        let naive = min_sum_convolution_naive(bits, cap, &f, &g);
        let ranked = min_sum_convolution_ranked(bits, cap, &f, &g);
        assert_eq!(naive, ranked, "round {round}");
    }
    println!("20 random tables: naive and ranked agree");

    // Timing sketch on one larger table. The ranked variant only wins
    // asymptotically; at this size the naive walk is usually still fine.
    let bits = 12;
    let cap = 30;
    let size = 1usize << bits;
    let f: Vec<Cost> = (0..size).map(|_| rng.random_range(0..2 * cap)).collect();
    let g: Vec<Cost> = (0..size).map(|_| rng.random_range(0..2 * cap)).collect();
    let start = Instant::now();
    let naive = min_sum_convolution_naive(bits, cap, &f, &g);
    let naive_time = start.elapsed();
    let start = Instant::now();
    let ranked = min_sum_convolution_ranked(bits, cap, &f, &g);
    let ranked_time = start.elapsed();
    assert_eq!(naive, ranked);
    println!(
        "u={bits} cap={cap}: naive {:.1} ms, ranked {:.1} ms",
        naive_time.as_secs_f64() * 1e3,
        ranked_time.as_secs_f64() * 1e3
    );

    // Both convolution backends drive the cluster-subset solver to the
    // same optimum.
    let inst = fixtures::twin_triangles();
    let slow = cluster_subset_solve(&inst, &SubsetDpOptions::default())?;
    let fast = cluster_subset_solve(
        &inst,
        &SubsetDpOptions {
            fast_convolution: true,
            ..SubsetDpOptions::default()
        },
    )?;
    println!(
        "twin triangles through the solver: naive backend {} vs ranked backend {}",
        slow.cost, fast.cost
    );
    assert_eq!(slow.cost, 10);
    assert_eq!(fast.cost, 10);

    println!("all asserts passed");
    Ok(())
}
