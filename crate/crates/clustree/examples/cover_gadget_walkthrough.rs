//! Builds the contiguous-path hardness gadget from an exact-cover
//! instance: given triples over a ground set of `3 * eta` items, decide
//! whether some `eta` of them partition the items. The gadget strings a
//! chain of checkpoints between a source and a target; a set in the cover
//! is crossed on a short "top" detour through the stars of its three
//! items, a set outside the cover on a two-edge "bottom" hop through a
//! surplus star. Because each item star is one cluster and clusters must
//! be visited consecutively, an item shared by two chosen sets would be
//! entered twice, so cheap walks exist exactly for exact covers.
//!
//! Run with `cargo run --example cover_gadget_walkthrough`.

use clustree::exact::{shortest_contiguous_path, ContiguousOptions, ContiguousResult};
use clustree::reductions::{gen_clusp_from_x3c, x3c_bruteforce, X3cInstance};

fn main() -> clustree::error::Result<()> {
    // One triple covering the whole ground set: trivially solvable.
    let solvable = X3cInstance {
        items: 3,
        sets: vec![[0, 1, 2]],
    };
    let cover = x3c_bruteforce(&solvable)?.expect("the one set is a cover");
    println!("solvable system: cover uses sets {cover:?}");

    let cert = gen_clusp_from_x3c(&solvable, 16)?;
    let target = cert.parameters.target.expect("path gadgets record the target");
    println!(
        "gadget: {} vertices, {} edges, {} clusters, walk from {} to {}",
        cert.instance.n,
        cert.instance.m(),
        cert.instance.k(),
        cert.instance.source,
        target
    );
    assert_eq!(cert.instance.n, 55);

    let result = shortest_contiguous_path(
        &cert.instance,
        cert.instance.source,
        target,
        &ContiguousOptions::default(),
    )?;
    let ContiguousResult::Found(path) = result else {
        panic!("a cover must yield a walk");
    };
    println!(
        "shortest contiguous walk: cost {:?} over {} vertices",
        path.cost,
        path.path.len()
    );
    // Crossing the one set on the top route costs six unit edges, within
    // the solvable threshold of fifteen per set.
    assert_eq!(path.cost, Some(6));
    assert!(path.cost.unwrap() <= cert.sat_threshold);

    // Two overlapping triples over six items: four items each occur once,
    // items 0 and 1 occur twice, and no subset of the sets is an exact
    // cover. Every walk now has to climb through a full padding branch.
    let unsolvable = X3cInstance {
        items: 6,
        sets: vec![[0, 1, 2], [0, 1, 3]],
    };
    assert!(x3c_bruteforce(&unsolvable)?.is_none());

    let cert = gen_clusp_from_x3c(&unsolvable, 40)?;
    let target = cert.parameters.target.expect("path gadgets record the target");
    println!(
        "\nunsolvable system: gadget has {} vertices, thresholds {} / {}",
        cert.instance.n, cert.sat_threshold, cert.unsat_threshold
    );
    let result = shortest_contiguous_path(
        &cert.instance,
        cert.instance.source,
        target,
        &ContiguousOptions::default(),
    )?;
    match result {
        ContiguousResult::Found(path) => {
            let cost = path.cost.expect("found walks carry costs");
            println!("cheapest walk costs {cost}, past the threshold {}", cert.unsat_threshold);
            assert!(cost >= cert.unsat_threshold);
        }
        ContiguousResult::Unreachable => println!("no contiguous walk exists at all"),
        ContiguousResult::NoneBelowCutoff { .. } => unreachable!("no cutoff configured"),
    }

    println!("all asserts passed");
    Ok(())
}
