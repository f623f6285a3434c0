//! Machine-checkable verification suites.
//!
//! Every suite returns one [`CheckRecord`] per checked fact, with the
//! concrete numbers spelled out in the details, so a report can be read
//! (or diffed) without re-running anything. The command-line `verify`
//! command runs scaled-down defaults; the integration tests run the full
//! configurations. All randomness flows from explicit seeds.

use num::rational::Ratio;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::approx::{broadcast_approx, clustered_minimum_weight_tree};
use crate::cost;
use crate::cost::Cost;
use crate::exact::{
    cluster_subset_solve, contiguous_path_by_enumeration, min_cost_tree_by_enumeration,
    min_weight_tree_by_enumeration, root_vector_solve, shortest_contiguous_path,
    ContiguousOptions, ContiguousResult, RootEnumOptions, SubsetDpOptions,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::graph::max_cluster_diameter;
use crate::instance::ClusteredInstance;
use crate::reductions::{
    forced_unsat_formula, gen_clubfs_from_3cnf, gen_clusp_from_x3c, gen_cluspt_from_3cnf,
    gen_random_clustered, random_formula, random_x3c, sat_bruteforce, x3c_bruteforce, CnfFormula,
    X3cInstance,
};

/// Seed used when the caller does not supply one.
pub const DEFAULT_VERIFY_SEED: u64 = 2024;

/// One verified fact: what was checked, whether it held, and the numbers.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckRecord {
    fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }
}

/// A bundle of check records with an overall verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    /// Wraps records, passing only if every record passed.
    pub fn from_checks(checks: Vec<CheckRecord>) -> Self {
        VerifyReport {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    /// Serializes the report as pretty JSON.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }
}

/// Generates the shared solver-comparison suite: feasible instances with
/// `n <= 10`, `m <= 14`, `k <= 4`, alternating between unit weights and
/// integer weights drawn from `0..=4`.
pub fn agreement_suite_instances(count: usize, seed: u64) -> Vec<ClusteredInstance> {
    (0..count)
        .map(|i| {
            let item_seed = seed.wrapping_add(i as u64);
            let mut meta =
                ChaCha8Rng::seed_from_u64(item_seed.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let n = meta.random_range(4..=10);
            let k = meta.random_range(1..=4);
            let max_m = (n * (n - 1) / 2).min(14);
            let m = meta.random_range((n - 1)..=max_m);
            let weighted = i % 2 == 1;
            let max_weight = if weighted { 5 } else { 1 };
            let mut inst = gen_random_clustered(item_seed, n, m, k, max_weight, true)
                .expect("suite parameters satisfy the generator contract");
            if weighted {
                // Shift the sampled 1..=5 weights down so zero-weight
                // edges appear in the suite.
                for edge in &mut inst.edges {
                    edge.2 -= 1;
                }
            }
            inst
        })
        .collect()
}

/// Checks that the two parameterized exact solvers and the enumeration
/// oracle agree on optimal cost, and that every witness tree survives
/// independent recomputation.
pub fn solver_agreement(count: usize, seed: u64, threads: usize) -> Vec<CheckRecord> {
    let root_opts = RootEnumOptions {
        full_roots: false,
        threads,
    };
    agreement_suite_instances(count, seed)
        .iter()
        .enumerate()
        .map(|(i, inst)| {
            let name = format!("solver-agreement/{i}");
            let oracle = min_cost_tree_by_enumeration(inst, DEFAULT_ENUMERATION_BUDGET);
            let subsets = cluster_subset_solve(inst, &SubsetDpOptions::default());
            let roots = root_vector_solve(inst, &root_opts);
            match (oracle, subsets, roots) {
                (Ok(oracle), Ok(subsets), Ok(roots)) => {
                    let agree = oracle.cost == subsets.cost && oracle.cost == roots.cost;
                    let sound = oracle.check_against(inst).is_ok()
                        && subsets.check_against(inst).is_ok()
                        && roots.check_against(inst).is_ok();
                    CheckRecord::new(
                        name,
                        agree && sound,
                        format!(
                            "n={} m={} k={} weighted={} oracle={} subset-dp={} root-enum={} \
                             witnesses-sound={}",
                            inst.n,
                            inst.m(),
                            inst.k(),
                            inst.weighted,
                            oracle.cost,
                            subsets.cost,
                            roots.cost,
                            sound
                        ),
                    )
                }
                (o, s, r) => CheckRecord::new(
                    name,
                    false,
                    format!(
                        "solver failure: oracle={:?} subset-dp={:?} root-enum={:?}",
                        o.err(),
                        s.err(),
                        r.err()
                    ),
                ),
            }
        })
        .collect()
}

/// Checks the broadcast approximation guarantees on the unweighted half of
/// the suite and the weight/cost guarantees of the clustered
/// minimum-weight tree on the weighted half.
///
/// `corrupt` inflates the approximate cost past its bound before checking;
/// it exists so a negative control can demonstrate that the checks can
/// fail.
pub fn approx_bounds(count: usize, seed: u64, corrupt: bool) -> Vec<CheckRecord> {
    let mut checks = Vec::new();
    for (i, inst) in agreement_suite_instances(count, seed).iter().enumerate() {
        let opt = match min_cost_tree_by_enumeration(inst, DEFAULT_ENUMERATION_BUDGET) {
            Ok(t) => t,
            Err(e) => {
                checks.push(CheckRecord::new(
                    format!("approx-bounds/{i}"),
                    false,
                    format!("oracle failure: {e}"),
                ));
                continue;
            }
        };
        if !inst.weighted {
            let gamma = match max_cluster_diameter(inst) {
                Ok(g) => g,
                Err(e) => {
                    checks.push(CheckRecord::new(
                        format!("approx-bounds/{i}"),
                        false,
                        format!("diameter failure: {e}"),
                    ));
                    continue;
                }
            };
            if gamma == 0 {
                continue;
            }
            match broadcast_approx(inst) {
                Ok(res) => {
                    let mut cost = res.solution.cost;
                    let diameter_bound = cost::mul(2, cost::mul(gamma, opt.cost));
                    if corrupt {
                        cost = cost::add(cost, cost::add(diameter_bound, 1));
                    }
                    let within_diameter = cost <= diameter_bound;
                    checks.push(CheckRecord::new(
                        format!("approx-diameter-bound/{i}"),
                        within_diameter,
                        format!(
                            "n={} gamma={gamma} opt={} approx={cost} bound=2*gamma*opt={}",
                            inst.n, opt.cost, diameter_bound
                        ),
                    ));
                    let ratio = res
                        .ratio
                        .expect("gamma >= 1 always carries a guarantee factor");
                    let within_ratio = Ratio::from_integer(cost as u128)
                        <= ratio * Ratio::from_integer(opt.cost as u128);
                    checks.push(CheckRecord::new(
                        format!("approx-factor-bound/{i}"),
                        within_ratio,
                        format!(
                            "n={} k={} gamma={gamma} opt={} approx={cost} factor={}/{}",
                            inst.n,
                            inst.k(),
                            opt.cost,
                            ratio.numer(),
                            ratio.denom()
                        ),
                    ));
                }
                Err(e) => checks.push(CheckRecord::new(
                    format!("approx-bounds/{i}"),
                    false,
                    format!("approximation failure: {e}"),
                )),
            }
        } else {
            match clustered_minimum_weight_tree(inst) {
                Ok(tree) => {
                    let mut tree_weight = tree.tree_weight(inst);
                    let opt_weight = opt.tree_weight(inst);
                    let mut tree_cost = tree.cost;
                    let cost_bound = cost::mul(inst.n as Cost, opt.cost);
                    if corrupt {
                        tree_weight = cost::add(tree_weight, cost::add(opt_weight, 1));
                        tree_cost = cost::add(tree_cost, cost::add(cost_bound, 1));
                    }
                    checks.push(CheckRecord::new(
                        format!("light-tree-weight-bound/{i}"),
                        tree_weight <= opt_weight,
                        format!(
                            "n={} tree-weight={tree_weight} optimal-tree-weight={opt_weight}",
                            inst.n
                        ),
                    ));
                    checks.push(CheckRecord::new(
                        format!("light-tree-cost-bound/{i}"),
                        tree_cost <= cost_bound,
                        format!(
                            "n={} cost={tree_cost} opt={} bound=n*opt={cost_bound}",
                            inst.n, opt.cost
                        ),
                    ));
                }
                Err(e) => checks.push(CheckRecord::new(
                    format!("approx-bounds/{i}"),
                    false,
                    format!("light-tree failure: {e}"),
                )),
            }
        }
    }
    checks
}

/// Checks the unit-weight gadget dichotomy: the optimum lands at or below
/// the satisfiable threshold exactly when the source formula is
/// satisfiable, and at or above the unsatisfiable threshold otherwise.
/// Also re-checks the gadget size identities.
pub fn formula_dichotomy(
    count: usize,
    max_eta: usize,
    max_mu: usize,
    seed: u64,
    threads: usize,
    include_forced: bool,
) -> Vec<CheckRecord> {
    let mut formulas: Vec<(String, CnfFormula)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let eta = rng.random_range(1..=max_eta);
        let mu = rng.random_range(1..=max_mu);
        formulas.push((
            format!("unit-gadget-dichotomy/random-{i}"),
            random_formula(eta, mu, &mut rng),
        ));
    }
    if include_forced {
        formulas.push((
            "unit-gadget-dichotomy/forced-unsat".into(),
            forced_unsat_formula(),
        ));
    }

    let opts = RootEnumOptions {
        full_roots: false,
        threads,
    };
    formulas
        .into_iter()
        .map(|(name, formula)| match check_formula_gadget(&formula, &opts) {
            Ok(record) => CheckRecord::new(name, record.0, record.1),
            Err(e) => CheckRecord::new(name, false, format!("failure: {e}")),
        })
        .collect()
}

fn check_formula_gadget(
    formula: &CnfFormula,
    opts: &RootEnumOptions,
) -> crate::error::Result<(bool, String)> {
    let eta = formula.variables;
    let mu = formula.clause_count();
    let cert = gen_clubfs_from_3cnf(formula)?;
    let sizes_ok =
        cert.instance.n == 3 * mu + 2 * eta + 1 && cert.instance.m() == 6 * mu + 3 * eta;
    let satisfiable = sat_bruteforce(formula)?.is_some();
    let solved = root_vector_solve(&cert.instance, opts)?;
    let opt = solved.cost;
    let dichotomy_ok = if satisfiable {
        opt <= cert.sat_threshold
    } else {
        opt >= cert.unsat_threshold
    };
    let separated = opt <= cert.sat_threshold || opt >= cert.unsat_threshold;
    Ok((
        sizes_ok && dichotomy_ok && separated,
        format!(
            "eta={eta} mu={mu} n={} m={} satisfiable={satisfiable} opt={opt} \
             thresholds={}..{} sizes-ok={sizes_ok}",
            cert.instance.n,
            cert.instance.m(),
            cert.sat_threshold,
            cert.unsat_threshold
        ),
    ))
}

/// Checks the weighted gadget dichotomy: satisfiable formulas give an
/// optimum of exactly the variable count; unsatisfiable ones are pushed
/// past the padding threshold.
pub fn weighted_dichotomy(
    count: usize,
    max_eta: usize,
    max_mu: usize,
    padding: usize,
    seed: u64,
    threads: usize,
    include_forced: bool,
) -> Vec<CheckRecord> {
    let mut formulas: Vec<(String, CnfFormula)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_0002);
    for i in 0..count {
        let eta = rng.random_range(1..=max_eta);
        let mu = rng.random_range(1..=max_mu);
        formulas.push((
            format!("weighted-gadget-dichotomy/random-{i}"),
            random_formula(eta, mu, &mut rng),
        ));
    }
    if include_forced {
        formulas.push((
            "weighted-gadget-dichotomy/forced-unsat".into(),
            forced_unsat_formula(),
        ));
    }

    let opts = RootEnumOptions {
        full_roots: false,
        threads,
    };
    formulas
        .into_iter()
        .map(|(name, formula)| {
            let outcome = (|| -> crate::error::Result<(bool, String)> {
                let cert = gen_cluspt_from_3cnf(&formula, padding)?;
                let satisfiable = sat_bruteforce(&formula)?.is_some();
                let solved = root_vector_solve(&cert.instance, &opts)?;
                let opt = solved.cost;
                let ok = if satisfiable {
                    opt == cert.sat_threshold
                } else {
                    opt >= cert.unsat_threshold
                };
                Ok((
                    ok,
                    format!(
                        "eta={} mu={} padding={padding} n={} satisfiable={satisfiable} opt={opt} \
                         thresholds={}..{}",
                        formula.variables,
                        formula.clause_count(),
                        cert.instance.n,
                        cert.sat_threshold,
                        cert.unsat_threshold
                    ),
                ))
            })();
            match outcome {
                Ok((passed, details)) => CheckRecord::new(name, passed, details),
                Err(e) => CheckRecord::new(name, false, format!("failure: {e}")),
            }
        })
        .collect()
}

/// Padding length that keeps the path-gadget thresholds separated: at
/// least 40, and always strictly above `15 * mu`.
pub fn separating_padding(mu: usize) -> usize {
    (15 * mu + 1).max(40)
}

fn check_cover_instance(name: String, x3c: &X3cInstance, padding: usize) -> CheckRecord {
    let outcome = (|| -> crate::error::Result<(bool, String)> {
        let cert = gen_clusp_from_x3c(x3c, padding)?;
        let solvable = x3c_bruteforce(x3c)?.is_some();
        let target = cert
            .parameters
            .target
            .expect("path gadgets always record their destination");
        let result = shortest_contiguous_path(
            &cert.instance,
            cert.instance.source,
            target,
            &ContiguousOptions::default(),
        )?;
        let (ok, shown) = match (&result, solvable) {
            (ContiguousResult::Found(path), true) => {
                let c = path.cost.expect("found paths carry costs");
                (c <= cert.sat_threshold, format!("opt={c}"))
            }
            (ContiguousResult::Found(path), false) => {
                let c = path.cost.expect("found paths carry costs");
                (c >= cert.unsat_threshold, format!("opt={c}"))
            }
            (ContiguousResult::Unreachable, false) => (true, "opt=unreachable".into()),
            (ContiguousResult::Unreachable, true) => (false, "opt=unreachable".into()),
            (ContiguousResult::NoneBelowCutoff { .. }, _) => {
                unreachable!("no cutoff was configured")
            }
        };
        Ok((
            ok,
            format!(
                "eta={} mu={} padding={padding} n={} solvable={solvable} {shown} thresholds={}..{}",
                x3c.cover_size(),
                x3c.set_count(),
                cert.instance.n,
                cert.sat_threshold,
                cert.unsat_threshold
            ),
        ))
    })();
    match outcome {
        Ok((passed, details)) => CheckRecord::new(name, passed, details),
        Err(e) => CheckRecord::new(name, false, format!("failure: {e}")),
    }
}

/// Checks the path gadget dichotomy over every set system with cover size
/// up to `max_eta` and collection size up to `max_mu` (at least the cover
/// size, so the construction applies).
pub fn cover_dichotomy_enumerated(max_eta: usize, max_mu: usize) -> Vec<CheckRecord> {
    let mut checks = Vec::new();
    for eta in 1..=max_eta {
        for mu in eta..=max_mu {
            let instances = match crate::reductions::enumerate_x3c_instances(eta, mu) {
                Ok(list) => list,
                Err(e) => {
                    checks.push(CheckRecord::new(
                        format!("path-gadget-dichotomy/enumerated-{eta}-{mu}"),
                        false,
                        format!("enumeration failure: {e}"),
                    ));
                    continue;
                }
            };
            let padding = separating_padding(mu);
            for (i, x3c) in instances.iter().enumerate() {
                checks.push(check_cover_instance(
                    format!("path-gadget-dichotomy/enumerated-{eta}-{mu}/{i}"),
                    x3c,
                    padding,
                ));
            }
        }
    }
    checks
}

/// Checks the path gadget dichotomy on random set systems.
pub fn cover_dichotomy_random(
    count: usize,
    max_eta: usize,
    max_mu: usize,
    seed: u64,
) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_0003);
    (0..count)
        .map(|i| {
            let eta = rng.random_range(1..=max_eta);
            // At most 3 occurrences per item bounds the collection size
            // by three times the ground-set size.
            let mu = rng.random_range(eta..=max_mu.max(eta).min(3 * eta));
            let name = format!("path-gadget-dichotomy/random-{i}");
            match random_x3c(eta, mu, &mut rng) {
                Ok(x3c) => check_cover_instance(name, &x3c, separating_padding(mu)),
                Err(e) => CheckRecord::new(name, false, format!("sampling failure: {e}")),
            }
        })
        .collect()
}

/// Checks that the clustered minimum-weight tree matches the enumeration
/// oracle's minimum weight over feasible trees, on the weighted suite.
pub fn light_tree_agreement(count: usize, seed: u64) -> Vec<CheckRecord> {
    agreement_suite_instances(count, seed)
        .iter()
        .enumerate()
        .map(|(i, inst)| {
            let name = format!("light-tree-agreement/{i}");
            let fast = clustered_minimum_weight_tree(inst);
            let oracle = min_weight_tree_by_enumeration(inst, DEFAULT_ENUMERATION_BUDGET);
            match (fast, oracle) {
                (Ok(tree), Ok((oracle_weight, _))) => {
                    let weight = tree.tree_weight(inst);
                    CheckRecord::new(
                        name,
                        weight == oracle_weight,
                        format!(
                            "n={} m={} weighted={} tree-weight={weight} oracle-weight={oracle_weight}",
                            inst.n,
                            inst.m(),
                            inst.weighted
                        ),
                    )
                }
                (f, o) => CheckRecord::new(
                    name,
                    false,
                    format!("failure: fast={:?} oracle={:?}", f.err(), o.err()),
                ),
            }
        })
        .collect()
}

/// Checks that the contiguous-path dynamic program matches the exhaustive
/// path oracle on random instances small enough to enumerate.
pub fn path_agreement(count: usize, seed: u64) -> Vec<CheckRecord> {
    (0..count)
        .map(|i| {
            let item_seed = seed.wrapping_add(0x1000).wrapping_add(i as u64);
            let mut meta =
                ChaCha8Rng::seed_from_u64(item_seed.wrapping_mul(0xD134_2543_DE82_EF95));
            let n = meta.random_range(2..=12);
            let k = meta.random_range(1..=n);
            let max_m = (n * (n - 1) / 2).min(2 * n);
            let m = meta.random_range((n - 1)..=max_m);
            let name = format!("path-agreement/{i}");
            let inst = match gen_random_clustered(item_seed, n, m, k, 1, true) {
                Ok(inst) => inst,
                Err(e) => {
                    return CheckRecord::new(name, false, format!("generation failure: {e}"))
                }
            };
            let source = inst.source;
            let target = inst.n - 1;
            let dp = shortest_contiguous_path(&inst, source, target, &ContiguousOptions::default());
            let oracle = contiguous_path_by_enumeration(&inst, source, target);
            match (dp, oracle) {
                (Ok(dp), Ok(oracle)) => {
                    let (agree, shown) = match (&dp, &oracle) {
                        (ContiguousResult::Found(a), ContiguousResult::Found(b)) => (
                            a.cost == b.cost,
                            format!("dp={:?} oracle={:?}", a.cost, b.cost),
                        ),
                        (ContiguousResult::Unreachable, ContiguousResult::Unreachable) => {
                            (true, "both-unreachable".into())
                        }
                        (a, b) => (false, format!("dp={a:?} oracle={b:?}")),
                    };
                    CheckRecord::new(
                        name,
                        agree,
                        format!("n={} m={} k={} target={target} {shown}", inst.n, inst.m(), inst.k()),
                    )
                }
                (d, o) => CheckRecord::new(
                    name,
                    false,
                    format!("failure: dp={:?} oracle={:?}", d.err(), o.err()),
                ),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_instances_are_deterministic_and_sized() {
        let a = agreement_suite_instances(6, 99);
        let b = agreement_suite_instances(6, 99);
        assert_eq!(a, b);
        for (i, inst) in a.iter().enumerate() {
            assert!(inst.n <= 10);
            assert!(inst.m() <= 14);
            assert!(inst.k() <= 4);
            assert_eq!(inst.weighted, i % 2 == 1);
            inst.ensure_valid().unwrap();
        }
        assert!(a
            .iter()
            .filter(|inst| inst.weighted)
            .flat_map(|inst| inst.edges.iter())
            .all(|&(_, _, w)| w <= 4));
    }

    #[test]
    fn small_agreement_suite_passes() {
        let checks = solver_agreement(6, DEFAULT_VERIFY_SEED, 1);
        assert_eq!(checks.len(), 6);
        for check in &checks {
            assert!(check.passed, "{}: {}", check.name, check.details);
        }
    }

    #[test]
    fn small_bound_suite_passes_and_corruption_fails_it() {
        let honest = approx_bounds(6, DEFAULT_VERIFY_SEED, false);
        assert!(!honest.is_empty());
        for check in &honest {
            assert!(check.passed, "{}: {}", check.name, check.details);
        }
        let corrupted = approx_bounds(6, DEFAULT_VERIFY_SEED, true);
        assert!(corrupted.iter().any(|c| !c.passed));
    }

    #[test]
    fn small_dichotomy_suites_pass() {
        let unit = formula_dichotomy(4, 3, 4, DEFAULT_VERIFY_SEED, 1, true);
        for check in &unit {
            assert!(check.passed, "{}: {}", check.name, check.details);
        }
        let weighted = weighted_dichotomy(3, 2, 3, 20, DEFAULT_VERIFY_SEED, 1, false);
        for check in &weighted {
            assert!(check.passed, "{}: {}", check.name, check.details);
        }
        let cover = cover_dichotomy_enumerated(1, 1);
        assert_eq!(cover.len(), 1);
        assert!(cover[0].passed, "{}", cover[0].details);
    }

    #[test]
    fn report_aggregates_verdicts() {
        let good = CheckRecord::new("a", true, "fine");
        let bad = CheckRecord::new("b", false, "broken");
        let report = VerifyReport::from_checks(vec![good.clone()]);
        assert!(report.passed);
        let report = VerifyReport::from_checks(vec![good, bad]);
        assert!(!report.passed);
        let parsed: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(parsed["passed"], serde_json::Value::Bool(false));
        assert_eq!(parsed["checks"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn padding_always_separates_the_thresholds() {
        for mu in 1..=10 {
            assert!(separating_padding(mu) > 15 * mu);
            assert!(separating_padding(mu) >= 40);
        }
    }
}
