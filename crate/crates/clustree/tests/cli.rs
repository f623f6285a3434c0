//! End-to-end tests of the command-line binary: exit codes, output
//! determinism, reduction sidecars, and the verify report format.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use clustree::instance::{fixtures, ClusteredInstance};
use clustree::reductions::GadgetCertificate;
use clustree::solution::{PathSolution, TreeSolution};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clustree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn write_twin(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("twin.json");
    fs::write(&path, fixtures::twin_triangles().to_canonical_json()).unwrap();
    path
}

#[test]
fn random_generation_and_all_tree_solvers_agree() {
    let dir = tempfile::tempdir().unwrap();
    let inst_path = dir.path().join("random.json");
    let gen = run(&[
        "gen",
        "--n",
        "8",
        "--m",
        "12",
        "--k",
        "3",
        "--seed",
        "5",
        "--ensure-feasible",
        "--output",
        inst_path.to_str().unwrap(),
    ]);
    assert_eq!(gen.status.code(), Some(0), "{gen:?}");
    ClusteredInstance::from_json_checked(&fs::read_to_string(&inst_path).unwrap()).unwrap();

    let mut costs = Vec::new();
    for solver in ["fpt1", "fpt2", "oracle"] {
        let out = run(&["solve", "--input", inst_path.to_str().unwrap(), "--solver", solver]);
        assert_eq!(out.status.code(), Some(0), "{solver}: {out:?}");
        let tree = TreeSolution::from_json_str(&stdout_of(&out)).unwrap();
        costs.push(tree.cost);
    }
    assert_eq!(costs[0], costs[1]);
    assert_eq!(costs[0], costs[2]);
}

#[test]
fn generation_is_deterministic_per_seed() {
    let args = ["gen", "--n", "9", "--m", "13", "--k", "4", "--seed", "11", "--ensure-feasible"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let other = run(&["gen", "--n", "9", "--m", "13", "--k", "4", "--seed", "12", "--ensure-feasible"]);
    assert_ne!(first.stdout, other.stdout, "a new seed reshuffles the instance");
}

#[test]
fn formula_reduction_writes_instance_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("one_clause.cnf");
    fs::write(&cnf, "p cnf 3 1\n1 2 3 0\n").unwrap();
    let inst_path = dir.path().join("gadget.json");
    let out = run(&[
        "gen",
        "--problem",
        "clubfs",
        "--input",
        cnf.to_str().unwrap(),
        "--output",
        inst_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let cert_path = dir.path().join("gadget.cert.json");
    let cert = GadgetCertificate::from_json_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    cert.recheck().unwrap();
    assert_eq!(cert.sat_threshold, 17);
    assert_eq!(cert.unsat_threshold, 20);

    let solved = run(&["solve", "--input", inst_path.to_str().unwrap(), "--solver", "fpt2"]);
    assert_eq!(solved.status.code(), Some(0));
    let tree = TreeSolution::from_json_str(&stdout_of(&solved)).unwrap();
    assert_eq!(tree.cost, 17);
}

#[test]
fn weighted_reduction_honors_the_padding_flag() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("one_clause.cnf");
    fs::write(&cnf, "p cnf 3 1\n1 2 3 0\n").unwrap();
    let inst_path = dir.path().join("weighted.json");
    let out = run(&[
        "gen",
        "--problem",
        "cluspt",
        "--input",
        cnf.to_str().unwrap(),
        "--M",
        "5",
        "--output",
        inst_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let inst =
        ClusteredInstance::from_json_checked(&fs::read_to_string(&inst_path).unwrap()).unwrap();
    assert_eq!(inst.n, 16);
    assert!(inst.weighted);

    let solved = run(&["solve", "--input", inst_path.to_str().unwrap(), "--solver", "fpt2"]);
    assert_eq!(solved.status.code(), Some(0));
    assert_eq!(TreeSolution::from_json_str(&stdout_of(&solved)).unwrap().cost, 3);
}

#[test]
fn cover_reduction_solves_as_a_path_problem() {
    let dir = tempfile::tempdir().unwrap();
    let sets = dir.path().join("cover.json");
    fs::write(&sets, "{\n  \"items\": 3,\n  \"sets\": [[0, 1, 2]]\n}\n").unwrap();
    let inst_path = dir.path().join("pathgadget.json");
    let out = run(&[
        "gen",
        "--problem",
        "clusp",
        "--input",
        sets.to_str().unwrap(),
        "--M",
        "16",
        "--output",
        inst_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let solved = run(&[
        "solve",
        "--input",
        inst_path.to_str().unwrap(),
        "--solver",
        "clusp-dp",
        "--target",
        "3",
    ]);
    assert_eq!(solved.status.code(), Some(0), "{solved:?}");
    let path = PathSolution::from_json_str(&stdout_of(&solved)).unwrap();
    assert_eq!(path.cost, Some(6));

    let oracle_view = run(&[
        "solve",
        "--input",
        inst_path.to_str().unwrap(),
        "--solver",
        "oracle",
        "--problem",
        "clusp",
        "--target",
        "3",
    ]);
    assert_eq!(oracle_view.status.code(), Some(3), "55 vertices exceed the path oracle limit");
}

#[test]
fn usage_problems_exit_one() {
    let unknown_flag = run(&["solve", "--no-such-flag"]);
    assert_eq!(unknown_flag.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let twin = write_twin(dir.path());

    let missing_target = run(&[
        "solve",
        "--input",
        twin.to_str().unwrap(),
        "--solver",
        "clusp-dp",
    ]);
    assert_eq!(missing_target.status.code(), Some(1));

    let bad_json = dir.path().join("broken.json");
    fs::write(&bad_json, "{\"n\": 2").unwrap();
    let parse = run(&["solve", "--input", bad_json.to_str().unwrap(), "--solver", "fpt1"]);
    assert_eq!(parse.status.code(), Some(1));

    let mut weighted = fixtures::twin_triangles();
    weighted.weighted = true;
    let weighted_path = dir.path().join("weighted.json");
    fs::write(&weighted_path, weighted.to_canonical_json()).unwrap();
    let approx_on_weighted = run(&[
        "solve",
        "--input",
        weighted_path.to_str().unwrap(),
        "--solver",
        "approx",
        "--problem",
        "clubfs",
    ]);
    assert_eq!(approx_on_weighted.status.code(), Some(1));
}

#[test]
fn infeasible_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();

    // The graph is connected but cluster {0, 3} induces no edge, so no
    // feasible spanning tree exists.
    let split_cluster = ClusteredInstance {
        n: 4,
        weighted: false,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1)],
        clusters: vec![vec![0, 3], vec![1], vec![2]],
        source: 0,
    };
    let inst_path = dir.path().join("split.json");
    fs::write(&inst_path, split_cluster.to_canonical_json()).unwrap();
    let out = run(&["solve", "--input", inst_path.to_str().unwrap(), "--solver", "fpt1"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    // Both walks between the clustered corners of a square break
    // contiguity, so the path problem reports unreachable.
    let square = ClusteredInstance {
        n: 4,
        weighted: false,
        edges: vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
        clusters: vec![vec![0, 2], vec![1], vec![3]],
        source: 0,
    };
    let square_path = dir.path().join("square.json");
    fs::write(&square_path, square.to_canonical_json()).unwrap();
    let out = run(&[
        "solve",
        "--input",
        square_path.to_str().unwrap(),
        "--solver",
        "clusp-dp",
        "--target",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let sol = PathSolution::from_json_str(&stdout_of(&out)).unwrap();
    assert!(!sol.reachable);
}

#[test]
fn exhausted_budgets_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let twin = write_twin(dir.path());
    let out = run(&[
        "solve",
        "--input",
        twin.to_str().unwrap(),
        "--solver",
        "oracle",
        "--oracle-budget",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn approx_solve_reports_its_guarantee() {
    let dir = tempfile::tempdir().unwrap();
    let twin = write_twin(dir.path());
    let out = run(&["solve", "--input", twin.to_str().unwrap(), "--solver", "approx"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["gamma"], serde_json::json!(1));
    assert_eq!(doc["ratio"], serde_json::json!([2, 1]));
    assert!(doc["sptLowerBound"].as_u64().unwrap() <= doc["solution"]["cost"].as_u64().unwrap());
    TreeSolution::from_json_str(&doc["solution"].to_string()).unwrap();
}

#[test]
fn solving_is_deterministic_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let twin = write_twin(dir.path());
    let base = run(&["solve", "--input", twin.to_str().unwrap(), "--solver", "fpt2"]);
    let again = run(&["solve", "--input", twin.to_str().unwrap(), "--solver", "fpt2"]);
    let threaded = run(&[
        "solve",
        "--input",
        twin.to_str().unwrap(),
        "--solver",
        "fpt2",
        "--threads",
        "3",
    ]);
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(base.stdout, again.stdout);
    assert_eq!(base.stdout, threaded.stdout);
}

#[test]
fn verify_passes_honestly_and_fails_when_sabotaged() {
    let honest = run(&["verify", "--only", "solvers", "--count", "4"]);
    assert_eq!(honest.status.code(), Some(0), "{honest:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&honest)).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert_eq!(report["checks"].as_array().unwrap().len(), 4);

    let sabotaged = run(&[
        "verify",
        "--only",
        "bounds",
        "--count",
        "4",
        "--corrupt-approx",
    ]);
    assert_eq!(sabotaged.status.code(), Some(1), "{sabotaged:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&sabotaged)).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(false));
    let failing: Vec<&serde_json::Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == serde_json::Value::Bool(false))
        .collect();
    assert!(!failing.is_empty());
    // Each record names the inequality with its concrete numbers.
    assert!(failing[0]["details"].as_str().unwrap().contains("bound"));
}

#[test]
fn export_dot_renders_clusters_and_emphasis() {
    let dir = tempfile::tempdir().unwrap();
    let twin = write_twin(dir.path());
    let solution_path = dir.path().join("tree.json");
    let solved = run(&[
        "solve",
        "--input",
        twin.to_str().unwrap(),
        "--solver",
        "fpt1",
        "--output",
        solution_path.to_str().unwrap(),
    ]);
    assert_eq!(solved.status.code(), Some(0));

    let plain = run(&["export-dot", "--input", twin.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(0));
    let text = stdout_of(&plain);
    assert!(text.contains("subgraph cluster_0"));
    assert!(text.contains("subgraph cluster_1"));
    assert!(!text.contains("style=bold"));

    let emphasized = run(&[
        "export-dot",
        "--input",
        twin.to_str().unwrap(),
        "--solution",
        solution_path.to_str().unwrap(),
    ]);
    assert_eq!(emphasized.status.code(), Some(0));
    let text = stdout_of(&emphasized);
    assert_eq!(text.matches("style=bold").count(), 5);

    let again = run(&[
        "export-dot",
        "--input",
        twin.to_str().unwrap(),
        "--solution",
        solution_path.to_str().unwrap(),
    ]);
    assert_eq!(emphasized.stdout, again.stdout);
}

#[test]
fn bench_summary_is_deterministic() {
    let first = run(&["bench"]);
    assert_eq!(first.status.code(), Some(0), "{first:?}");
    let text = stdout_of(&first);
    assert!(text.contains("twin-triangles: oracle=10 subset-dp=10 root-enum=10"));
    assert!(text.contains("split-path: oracle=6 subset-dp=6 root-enum=6"));
    let second = run(&["bench"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("export-dot"));
}
