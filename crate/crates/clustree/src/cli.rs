//! Command-line front end.
//!
//! Five commands cover the workflow: `gen` produces instances (random, or
//! reductions from formula and set-cover inputs, with threshold
//! certificates), `solve` runs a chosen solver, `verify` runs the
//! self-checking suites, `bench` prints a deterministic solver summary
//! with timings on stderr, and `export-dot` renders an instance for
//! Graphviz.
//!
//! Exit codes: 0 on success, 1 for usage and format problems, 2 when the
//! instance is infeasible (or the requested endpoint unreachable), 3 when
//! a resource budget is exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::approx::{broadcast_approx, clustered_minimum_weight_tree};
use crate::cost::Cost;
use crate::dot::{self, Emphasis};
use crate::error::{Error, Result};
use crate::exact::{
    cluster_subset_solve, contiguous_path_by_enumeration, min_cost_tree_by_enumeration,
    root_vector_count, root_vector_solve, shortest_contiguous_path, ContiguousOptions,
    ContiguousResult, RootEnumOptions, SubsetDpOptions, DEFAULT_ENUMERATION_BUDGET,
};
use crate::instance::{fixtures, ClusteredInstance};
use crate::reductions::{
    forced_unsat_formula, gen_clubfs_from_3cnf, gen_clusp_from_x3c, gen_cluspt_from_3cnf,
    gen_random_clustered, CnfFormula, X3cInstance,
};
use crate::solution::{PathSolution, TreeSolution};
use crate::verify::{
    approx_bounds, cover_dichotomy_enumerated, cover_dichotomy_random, formula_dichotomy,
    light_tree_agreement, path_agreement, separating_padding, solver_agreement,
    weighted_dichotomy, VerifyReport, DEFAULT_VERIFY_SEED,
};

#[derive(Parser, Debug)]
#[command(
    name = "clustree",
    version,
    about = "Solvers, generators, and checkers for clustered spanning trees and paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance: random, or a reduction with a certificate.
    Gen(GenArgs),
    /// Solve an instance with a chosen solver.
    Solve(SolveArgs),
    /// Run the self-checking suites and print a JSON report.
    Verify(VerifyArgs),
    /// Time the solvers on fixed inputs; summary on stdout, times on stderr.
    Bench(BenchArgs),
    /// Render an instance (optionally with a solution) as Graphviz DOT.
    ExportDot(ExportDotArgs),
}

/// Problem selector shared by `gen` and `solve`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    /// Minimum-broadcast clustered spanning tree with unit weights.
    Clubfs,
    /// Minimum-broadcast clustered spanning tree with integer weights.
    Cluspt,
    /// Shortest path visiting each used cluster consecutively.
    Clusp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolverArg {
    /// Polynomial approximation (spanning-tree problems only).
    Approx,
    /// Exact dynamic program over cluster subsets.
    Fpt1,
    /// Exact enumeration of per-cluster root vectors.
    Fpt2,
    /// Brute-force enumeration, exponential but independent.
    Oracle,
    /// Exact dynamic program for the contiguous-path problem.
    CluspDp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Exact solvers against the enumeration oracle.
    Solvers,
    /// Approximation guarantees against enumerated optima.
    Bounds,
    /// Unit-weight formula gadgets (satisfiability dichotomy).
    UnitGadgets,
    /// Weighted formula gadgets (satisfiability dichotomy).
    WeightedGadgets,
    /// Set-cover path gadgets (exact-cover dichotomy).
    PathGadgets,
    /// Clustered minimum-weight trees against the enumeration oracle.
    LightTrees,
    /// Contiguous-path dynamic program against the path oracle.
    Paths,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Build a reduction for this problem instead of a random instance.
    #[arg(long, value_enum)]
    problem: Option<ProblemArg>,
    /// Source input: DIMACS CNF for the formula gadgets, set-system JSON
    /// for the path gadget. Unused for random generation.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Instance destination (stdout if omitted; required for reductions,
    /// which also write `<name>.cert.json` next to it).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Padding length for the weighted and path gadgets.
    #[arg(long = "M")]
    padding: Option<usize>,
    /// Random generation: vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Random generation: edge count.
    #[arg(long)]
    m: Option<usize>,
    /// Random generation: cluster count.
    #[arg(long)]
    k: Option<usize>,
    /// Random generation: maximum edge weight (1 gives a unit-weight instance).
    #[arg(long, default_value_t = 1)]
    max_weight: Cost,
    /// Random generation: plant spanning structure so the instance is feasible.
    #[arg(long)]
    ensure_feasible: bool,
    /// Random generation seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Instance JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Solution destination (stdout if omitted).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Solver to run.
    #[arg(long, value_enum)]
    solver: SolverArg,
    /// Problem to solve; inferred from the instance when omitted
    /// (unweighted: clubfs, weighted: cluspt, clusp-dp solver: clusp).
    #[arg(long, value_enum)]
    problem: Option<ProblemArg>,
    /// Worker threads for the root-vector solver.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Edge-subset budget for the enumeration oracle.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    oracle_budget: u64,
    /// Enumerate every root vector instead of pruning to boundary vertices.
    #[arg(long)]
    full_roots: bool,
    /// Use the ranked convolution inside the cluster-subset solver.
    #[arg(long)]
    fast_convolution: bool,
    /// Path problems: start vertex (defaults to the instance source).
    #[arg(long)]
    source: Option<usize>,
    /// Path problems: destination vertex.
    #[arg(long)]
    target: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run a single suite instead of all of them.
    #[arg(long, value_enum)]
    only: Option<SuiteArg>,
    /// Instances or formulas per suite (each suite has its own default).
    #[arg(long)]
    count: Option<usize>,
    /// Cap on variable or cover-size parameters in the gadget suites.
    #[arg(long)]
    eta: Option<usize>,
    /// Cap on clause or set-count parameters in the gadget suites.
    #[arg(long)]
    mu: Option<usize>,
    /// Padding length for the weighted gadget suite.
    #[arg(long = "M")]
    padding: Option<usize>,
    /// Base seed for every randomized suite.
    #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
    seed: u64,
    /// Worker threads for the root-vector solver.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Report destination (stdout if omitted).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Deliberately corrupt the approximation costs before checking, to
    /// demonstrate that the bound checks can fail (test hook).
    #[arg(long, hide = true)]
    corrupt_approx: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Seed for the randomized benchmark instance.
    #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
    seed: u64,
    /// Worker threads for the root-vector solver.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct ExportDotArgs {
    /// Instance JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Optional solution JSON (tree or path); its edges render bold.
    #[arg(long)]
    solution: Option<PathBuf>,
    /// DOT destination (stdout if omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses the process arguments, runs the command, and returns the exit
/// code for the process.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => gen_cmd(args),
        Command::Solve(args) => solve_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Bench(args) => bench_cmd(args),
        Command::ExportDot(args) => export_dot_cmd(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, text)?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn certificate_path(output: &Path) -> PathBuf {
    let name = output
        .file_name()
        .and_then(|s| s.to_str())
        .unwrap_or("instance.json");
    let stem = name.strip_suffix(".json").unwrap_or(name);
    output.with_file_name(format!("{stem}.cert.json"))
}

fn gen_cmd(args: GenArgs) -> Result<u8> {
    let Some(problem) = args.problem else {
        let (Some(n), Some(m), Some(k)) = (args.n, args.m, args.k) else {
            return Err(Error::Usage(
                "random generation needs --n, --m, and --k".into(),
            ));
        };
        if args.input.is_some() || args.padding.is_some() {
            return Err(Error::Usage(
                "--input and --M apply only to reductions (--problem)".into(),
            ));
        }
        let inst = gen_random_clustered(args.seed, n, m, k, args.max_weight, args.ensure_feasible)?;
        emit(args.output.as_deref(), &inst.to_canonical_json())?;
        return Ok(0);
    };

    let Some(input) = args.input.as_deref() else {
        return Err(Error::Usage(
            "reductions need --input (DIMACS CNF or set-system JSON)".into(),
        ));
    };
    let Some(output) = args.output.as_deref() else {
        return Err(Error::Usage(
            "reductions need --output so the certificate has somewhere to go".into(),
        ));
    };
    let text = fs::read_to_string(input)?;
    let cert = match problem {
        ProblemArg::Clubfs => {
            if args.padding.is_some() {
                return Err(Error::Usage(
                    "the unit-weight formula gadget takes no padding length".into(),
                ));
            }
            gen_clubfs_from_3cnf(&CnfFormula::from_dimacs(&text)?)?
        }
        ProblemArg::Cluspt => {
            let formula = CnfFormula::from_dimacs(&text)?;
            gen_cluspt_from_3cnf(&formula, args.padding.unwrap_or(20))?
        }
        ProblemArg::Clusp => {
            let x3c = X3cInstance::from_json_str(&text)?;
            let padding = args
                .padding
                .unwrap_or_else(|| separating_padding(x3c.set_count()));
            gen_clusp_from_x3c(&x3c, padding)?
        }
    };
    emit(Some(output), &cert.instance.to_canonical_json())?;
    emit(Some(&certificate_path(output)), &cert.to_json())?;
    Ok(0)
}

fn approx_document(inst: &ClusteredInstance) -> Result<String> {
    let res = broadcast_approx(inst)?;
    let solution: serde_json::Value = serde_json::from_str(&res.solution.to_json())?;
    let doc = serde_json::json!({
        "solution": solution,
        "gamma": res.gamma,
        "ratio": res.ratio.map(|r| vec![*r.numer(), *r.denom()]),
        "sptLowerBound": res.spt_lower_bound,
    });
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

fn solve_cmd(args: SolveArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.input)?;
    let inst = ClusteredInstance::from_json_checked(&text)?;
    let problem = match args.problem {
        Some(p) => p,
        None => match args.solver {
            SolverArg::CluspDp => ProblemArg::Clusp,
            _ if inst.weighted => ProblemArg::Cluspt,
            _ => ProblemArg::Clubfs,
        },
    };

    if problem == ProblemArg::Clusp {
        let source = args.source.unwrap_or(inst.source);
        let Some(target) = args.target else {
            return Err(Error::Usage(
                "the path problem needs --target (and optionally --source)".into(),
            ));
        };
        let result = match args.solver {
            SolverArg::CluspDp => {
                shortest_contiguous_path(&inst, source, target, &ContiguousOptions::default())?
            }
            SolverArg::Oracle => contiguous_path_by_enumeration(&inst, source, target)?,
            other => {
                return Err(Error::Usage(format!(
                    "solver {other:?} does not apply to the path problem; use clusp-dp or oracle"
                )))
            }
        };
        return match result {
            ContiguousResult::Found(path) => {
                emit(args.output.as_deref(), &path.to_json())?;
                Ok(0)
            }
            ContiguousResult::Unreachable | ContiguousResult::NoneBelowCutoff { .. } => {
                emit(args.output.as_deref(), &PathSolution::unreachable().to_json())?;
                Ok(2)
            }
        };
    }

    if args.source.is_some() || args.target.is_some() {
        return Err(Error::Usage(
            "--source and --target apply only to the path problem".into(),
        ));
    }
    let text = match (problem, args.solver) {
        (ProblemArg::Clubfs, SolverArg::Approx) => approx_document(&inst)?,
        (ProblemArg::Cluspt, SolverArg::Approx) => {
            clustered_minimum_weight_tree(&inst)?.to_json()
        }
        (_, SolverArg::Fpt1) => {
            let opts = SubsetDpOptions {
                fast_convolution: args.fast_convolution,
                ..SubsetDpOptions::default()
            };
            cluster_subset_solve(&inst, &opts)?.to_json()
        }
        (_, SolverArg::Fpt2) => {
            let opts = RootEnumOptions {
                full_roots: args.full_roots,
                threads: args.threads,
            };
            root_vector_solve(&inst, &opts)?.to_json()
        }
        (_, SolverArg::Oracle) => {
            min_cost_tree_by_enumeration(&inst, args.oracle_budget)?.to_json()
        }
        (_, SolverArg::CluspDp) => {
            return Err(Error::Usage(
                "clusp-dp solves the path problem; pass --problem clusp".into(),
            ))
        }
        (ProblemArg::Clusp, _) => unreachable!("handled above"),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(0)
}

fn verify_cmd(args: VerifyArgs) -> Result<u8> {
    let wants = |suite: SuiteArg| args.only.is_none_or(|only| only == suite);
    let mut checks = Vec::new();
    if wants(SuiteArg::Solvers) {
        checks.extend(solver_agreement(
            args.count.unwrap_or(12),
            args.seed,
            args.threads,
        ));
    }
    if wants(SuiteArg::Bounds) {
        checks.extend(approx_bounds(
            args.count.unwrap_or(12),
            args.seed,
            args.corrupt_approx,
        ));
    }
    if wants(SuiteArg::UnitGadgets) {
        checks.extend(formula_dichotomy(
            args.count.unwrap_or(6),
            args.eta.unwrap_or(2),
            args.mu.unwrap_or(4),
            args.seed,
            args.threads,
            true,
        ));
    }
    if wants(SuiteArg::WeightedGadgets) {
        checks.extend(weighted_dichotomy(
            args.count.unwrap_or(4),
            args.eta.unwrap_or(2),
            args.mu.unwrap_or(3),
            args.padding.unwrap_or(20),
            args.seed,
            args.threads,
            true,
        ));
    }
    if wants(SuiteArg::PathGadgets) {
        checks.extend(cover_dichotomy_enumerated(
            args.eta.unwrap_or(1),
            args.mu.unwrap_or(1),
        ));
        checks.extend(cover_dichotomy_random(
            args.count.unwrap_or(5),
            args.eta.unwrap_or(2),
            args.mu.unwrap_or(3),
            args.seed,
        ));
    }
    if wants(SuiteArg::LightTrees) {
        checks.extend(light_tree_agreement(args.count.unwrap_or(12), args.seed));
    }
    if wants(SuiteArg::Paths) {
        checks.extend(path_agreement(args.count.unwrap_or(20), args.seed));
    }
    let report = VerifyReport::from_checks(checks);
    emit(args.output.as_deref(), &report.to_json())?;
    Ok(if report.passed { 0 } else { 1 })
}

fn bench_cmd(args: BenchArgs) -> Result<u8> {
    let root_opts = RootEnumOptions {
        full_roots: false,
        threads: args.threads,
    };
    let mut lines = String::new();
    let mut timed = |name: &str, body: &mut dyn FnMut() -> Result<String>| -> Result<()> {
        let start = Instant::now();
        let summary = body()?;
        eprintln!("{name}: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
        lines.push_str(&format!("{name}: {summary}\n"));
        Ok(())
    };

    for (label, inst) in [
        ("twin-triangles", fixtures::twin_triangles()),
        ("split-path", fixtures::split_path()),
    ] {
        timed(label, &mut || {
            let oracle = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET)?;
            let subsets = cluster_subset_solve(&inst, &SubsetDpOptions::default())?;
            let roots = root_vector_solve(&inst, &root_opts)?;
            Ok(format!(
                "oracle={} subset-dp={} root-enum={}",
                oracle.cost, subsets.cost, roots.cost
            ))
        })?;
    }

    let random = gen_random_clustered(args.seed, 12, 18, 6, 1, true)?;
    timed("random-12-18-6", &mut || {
        let subsets = cluster_subset_solve(&random, &SubsetDpOptions::default())?;
        let roots = root_vector_solve(&random, &root_opts)?;
        Ok(format!("subset-dp={} root-enum={}", subsets.cost, roots.cost))
    })?;

    let gadget = gen_clubfs_from_3cnf(&forced_unsat_formula())?;
    timed("forced-unsat-gadget", &mut || {
        let vectors = root_vector_count(&gadget.instance, &root_opts)?;
        let solved = root_vector_solve(&gadget.instance, &root_opts)?;
        Ok(format!("root-enum={} vectors={vectors}", solved.cost))
    })?;

    print!("{lines}");
    Ok(0)
}

fn export_dot_cmd(args: ExportDotArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.input)?;
    let inst = ClusteredInstance::from_json_checked(&text)?;
    let mut tree = None;
    let mut path = None;
    if let Some(solution_path) = &args.solution {
        let raw = fs::read_to_string(solution_path)?;
        let value: serde_json::Value = serde_json::from_str(&raw)?;
        let body = match value.get("solution") {
            Some(inner) => serde_json::to_string(inner)?,
            None => raw,
        };
        let keys: serde_json::Value = serde_json::from_str(&body)?;
        if keys.get("parent").is_some() {
            let t = TreeSolution::from_json_str(&body)?;
            t.check_against(&inst)?;
            tree = Some(t);
        } else if keys.get("path").is_some() {
            let p = PathSolution::from_json_str(&body)?;
            if let (Some(&first), Some(&last)) = (p.path.first(), p.path.last()) {
                p.check_against(&inst, first, last)?;
            }
            path = Some(p);
        } else {
            return Err(Error::Parse(
                "solution JSON has neither a \"parent\" nor a \"path\" field".into(),
            ));
        }
    }
    let emphasis = if let Some(t) = &tree {
        Emphasis::Tree(t)
    } else if let Some(p) = &path {
        Emphasis::Path(p)
    } else {
        Emphasis::None
    };
    emit(args.output.as_deref(), &dot::render(&inst, emphasis))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn certificate_sits_next_to_the_instance() {
        assert_eq!(
            certificate_path(Path::new("/tmp/out/foo.json")),
            Path::new("/tmp/out/foo.cert.json")
        );
        assert_eq!(
            certificate_path(Path::new("plain")),
            Path::new("plain.cert.json")
        );
    }

    #[test]
    fn solver_names_match_the_interface() {
        for (value, expect) in [
            (SolverArg::Approx, "approx"),
            (SolverArg::Fpt1, "fpt1"),
            (SolverArg::Fpt2, "fpt2"),
            (SolverArg::Oracle, "oracle"),
            (SolverArg::CluspDp, "clusp-dp"),
        ] {
            let possible = value.to_possible_value().unwrap();
            assert_eq!(possible.get_name(), expect);
        }
    }
}
