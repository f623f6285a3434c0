//! Randomized invariants. Each property drives the public API through
//! seeded generators, so every reported counterexample is a plain tuple
//! of integers that reproduces the run.

use clustree::approx::{broadcast_approx, clustered_minimum_weight_tree};
use clustree::cost::{Cost, INFINITY};
use clustree::exact::{
    cluster_subset_solve, min_cost_tree_by_enumeration, min_sum_convolution_naive,
    min_sum_convolution_ranked, min_weight_tree_by_enumeration, root_vector_solve,
    RootEnumOptions, SubsetDpOptions, DEFAULT_ENUMERATION_BUDGET,
};
use clustree::graph::max_cluster_diameter;
use clustree::instance::ClusteredInstance;
use clustree::reductions::{
    gen_clubfs_from_3cnf, gen_clusp_from_x3c, gen_cluspt_from_3cnf, gen_random_clustered,
    random_formula, random_x3c, sat_bruteforce, x3c_bruteforce, CnfFormula,
};
use clustree::solution::{visits_clusters_consecutively, PathSolution, TreeSolution};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Feasible random instance from compact parameters; edge count is
/// interpolated between tree-sparse and a 14-edge cap.
fn instance(seed: u64, n: usize, k: usize, extra: usize, max_weight: Cost) -> ClusteredInstance {
    let max_m = (n * (n - 1) / 2).min(14);
    let m = (n - 1 + extra).min(max_m);
    gen_random_clustered(seed, n, m, k.min(n), max_weight, true).expect("parameters are in range")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_json_round_trips(
        seed in any::<u64>(),
        n in 2usize..=10,
        k in 1usize..=4,
        extra in 0usize..=6,
        max_weight in 1u64..=6,
    ) {
        let inst = instance(seed, n, k, extra, max_weight);
        let text = inst.to_canonical_json();
        let parsed = ClusteredInstance::from_json_checked(&text).unwrap();
        prop_assert_eq!(&parsed, &inst);
        prop_assert_eq!(parsed.to_canonical_json(), text);
    }

    #[test]
    fn normalization_is_idempotent(
        seed in any::<u64>(),
        n in 2usize..=10,
        k in 1usize..=4,
        extra in 0usize..=6,
    ) {
        let inst = instance(seed, n, k, extra, 3);
        let mut once = inst.clone();
        once.normalize();
        prop_assert_eq!(&once, &inst, "generated instances come normalized");
        let mut twice = once.clone();
        twice.normalize();
        prop_assert_eq!(&twice, &once);
    }

    #[test]
    fn oracle_trees_are_internally_consistent(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
        extra in 0usize..=4,
        max_weight in 1u64..=4,
    ) {
        let inst = instance(seed, n, k, extra, max_weight);
        let tree = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        tree.check_against(&inst).unwrap();
        prop_assert_eq!(tree.dist[inst.source], 0);
        prop_assert_eq!(tree.parent[inst.source], inst.source);
        prop_assert_eq!(tree.cost, tree.dist.iter().sum::<Cost>());
        let text = tree.to_json();
        prop_assert_eq!(TreeSolution::from_json_str(&text).unwrap(), tree);
    }

    #[test]
    fn exact_solvers_agree(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
        extra in 0usize..=4,
        max_weight in 1u64..=4,
    ) {
        let inst = instance(seed, n, k, extra, max_weight);
        let oracle = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        let subsets = cluster_subset_solve(&inst, &SubsetDpOptions::default()).unwrap();
        let roots = root_vector_solve(&inst, &RootEnumOptions::default()).unwrap();
        prop_assert_eq!(oracle.cost, subsets.cost);
        prop_assert_eq!(oracle.cost, roots.cost);
    }

    #[test]
    fn convolution_backends_agree_inside_the_solver(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
    ) {
        let inst = instance(seed, n, k, 3, 1);
        let slow = cluster_subset_solve(&inst, &SubsetDpOptions::default()).unwrap();
        let fast = cluster_subset_solve(
            &inst,
            &SubsetDpOptions { fast_convolution: true, ..SubsetDpOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(slow.cost, fast.cost);
    }

    #[test]
    fn full_root_enumeration_matches_the_pruned_one(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
        max_weight in 1u64..=4,
    ) {
        let inst = instance(seed, n, k, 3, max_weight);
        let pruned = root_vector_solve(&inst, &RootEnumOptions::default()).unwrap();
        let full = root_vector_solve(
            &inst,
            &RootEnumOptions { full_roots: true, threads: 1 },
        )
        .unwrap();
        prop_assert_eq!(pruned.cost, full.cost);
    }

    #[test]
    fn approximation_respects_its_guarantee(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
        extra in 0usize..=4,
    ) {
        let inst = instance(seed, n, k, extra, 1);
        let gamma = max_cluster_diameter(&inst).unwrap();
        let opt = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        let res = broadcast_approx(&inst).unwrap();
        res.solution.check_against(&inst).unwrap();
        prop_assert_eq!(res.gamma, gamma);
        prop_assert!(res.spt_lower_bound <= opt.cost);
        if gamma == 0 {
            prop_assert_eq!(res.solution.cost, opt.cost);
        } else {
            prop_assert!(res.solution.cost <= 2 * gamma * opt.cost);
        }
    }

    #[test]
    fn light_trees_weigh_no_more_than_any_feasible_tree(
        seed in any::<u64>(),
        n in 2usize..=8,
        k in 1usize..=4,
        extra in 0usize..=4,
        max_weight in 1u64..=5,
    ) {
        let inst = instance(seed, n, k, extra, max_weight);
        let light = clustered_minimum_weight_tree(&inst).unwrap();
        light.check_against(&inst).unwrap();
        let (oracle_weight, _) =
            min_weight_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(light.tree_weight(&inst), oracle_weight);
    }

    #[test]
    fn dimacs_round_trips_and_witnesses_satisfy(
        seed in any::<u64>(),
        eta in 1usize..=3,
        mu in 1usize..=6,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let formula = random_formula(eta, mu, &mut rng);
        let parsed = CnfFormula::from_dimacs(&formula.to_dimacs()).unwrap();
        prop_assert_eq!(&parsed, &formula);
        if let Some(witness) = sat_bruteforce(&formula).unwrap() {
            prop_assert!(formula.eval(&witness));
        }
    }

    #[test]
    fn exact_cover_witnesses_partition_the_items(
        seed in any::<u64>(),
        eta in 1usize..=3,
        extra_sets in 0usize..=3,
    ) {
        let mu = (eta + extra_sets).min(3 * eta);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x3c = random_x3c(eta, mu, &mut rng).unwrap();
        if let Some(cover) = x3c_bruteforce(&x3c).unwrap() {
            prop_assert_eq!(cover.len(), eta);
            let mut covered = vec![false; x3c.items];
            for &set_index in &cover {
                for &item in &x3c.sets[set_index] {
                    prop_assert!(!covered[item], "cover overlaps at item {}", item);
                    covered[item] = true;
                }
            }
            prop_assert!(covered.into_iter().all(|c| c));
        }
    }

    #[test]
    fn certificates_recheck_and_round_trip(
        seed in any::<u64>(),
        eta in 1usize..=2,
        mu in 1usize..=3,
        padding in 1usize..=8,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let formula = random_formula(eta, mu, &mut rng);
        for cert in [
            gen_clubfs_from_3cnf(&formula).unwrap(),
            gen_cluspt_from_3cnf(&formula, padding).unwrap(),
        ] {
            prop_assert!(cert.sat_threshold < cert.unsat_threshold);
            cert.recheck().unwrap();
            let parsed =
                clustree::reductions::GadgetCertificate::from_json_str(&cert.to_json()).unwrap();
            prop_assert_eq!(&parsed, &cert);
        }
        if mu >= eta {
            let x3c = random_x3c(eta, mu, &mut rng).unwrap();
            let cert = gen_clusp_from_x3c(&x3c, 15 * mu + 1).unwrap();
            prop_assert!(cert.sat_threshold < cert.unsat_threshold);
            cert.recheck().unwrap();
            let parsed =
                clustree::reductions::GadgetCertificate::from_json_str(&cert.to_json()).unwrap();
            prop_assert_eq!(&parsed, &cert);
        }
    }

    #[test]
    fn contiguity_is_reversal_invariant(
        assignment in proptest::collection::vec(0usize..4, 1..=9),
        path in proptest::collection::vec(0usize..9, 1..=9),
    ) {
        let n = assignment.len();
        let path: Vec<usize> = path.into_iter().filter(|&v| v < n).collect();
        let forward = visits_clusters_consecutively(&assignment, &path);
        let reversed: Vec<usize> = path.iter().rev().copied().collect();
        prop_assert_eq!(forward, visits_clusters_consecutively(&assignment, &reversed));
    }

    #[test]
    fn convolution_backends_agree_on_random_tables(
        seed in any::<u64>(),
        bits in 1u32..=8,
        cap in 1u64..=20,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = 1usize << bits;
        let sample = |rng: &mut ChaCha8Rng| -> Vec<Cost> {
            (0..size)
                .map(|_| {
                    if rand::Rng::random_range(rng, 0..6) == 0 {
                        INFINITY
                    } else {
                        rand::Rng::random_range(rng, 0..3 * cap)
                    }
                })
                .collect()
        };
        let f = sample(&mut rng);
        let g = sample(&mut rng);
        prop_assert_eq!(
            min_sum_convolution_naive(bits, cap, &f, &g),
            min_sum_convolution_ranked(bits, cap, &f, &g)
        );
    }

    #[test]
    fn path_solutions_round_trip(
        cost in 0u64..1000,
        path in proptest::collection::vec(0usize..50, 1..=10),
    ) {
        let sol = PathSolution::found(cost, path);
        prop_assert_eq!(PathSolution::from_json_str(&sol.to_json()).unwrap(), sol);
        let none = PathSolution::unreachable();
        prop_assert_eq!(PathSolution::from_json_str(&none.to_json()).unwrap(), none);
    }
}
