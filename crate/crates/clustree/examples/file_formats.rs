//! Tours the interchange formats: canonical instance JSON, DIMACS CNF
//! for formulas, set-system JSON for exact-cover inputs, and Graphviz
//! DOT output with an emphasized solution.
//!
//! Run with `cargo run --example file_formats`.

use clustree::dot::{render, Emphasis};
use clustree::exact::{min_cost_tree_by_enumeration, DEFAULT_ENUMERATION_BUDGET};
use clustree::instance::{fixtures, ClusteredInstance};
use clustree::reductions::{CnfFormula, X3cInstance};

fn main() -> clustree::error::Result<()> {
    // Canonical instance JSON: edges oriented and sorted, clusters
    // sorted, so equal instances serialize to equal bytes.
    let inst = fixtures::twin_triangles();
    let text = inst.to_canonical_json();
    println!("--- instance JSON ---\n{text}");
    let parsed = ClusteredInstance::from_json_checked(&text)?;
    assert_eq!(parsed, inst);
    assert_eq!(parsed.to_canonical_json(), text);

    // DIMACS CNF: comment lines, a `p cnf <vars> <clauses>` header, then
    // zero-terminated three-literal clauses.
    let dimacs = "c sample\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n";
    let formula = CnfFormula::from_dimacs(dimacs)?;
    assert_eq!(formula.variables, 3);
    assert_eq!(formula.clause_count(), 2);
    let emitted = formula.to_dimacs();
    println!("--- DIMACS round trip ---\n{emitted}");
    assert_eq!(CnfFormula::from_dimacs(&emitted)?, formula);

    // Set systems as JSON: a ground set size and a list of triples.
    let x3c = X3cInstance {
        items: 6,
        sets: vec![[0, 1, 2], [3, 4, 5], [1, 2, 3]],
    };
    let json = x3c.to_json();
    println!("--- set-system JSON ---\n{json}");
    assert_eq!(X3cInstance::from_json_str(&json)?, x3c);

    // DOT: one subgraph block per cluster, the source double-circled,
    // and the tree solution's edges drawn bold.
    let tree = min_cost_tree_by_enumeration(&inst, DEFAULT_ENUMERATION_BUDGET)?;
    let dot = render(&inst, Emphasis::Tree(&tree));
    println!("--- DOT with the optimal tree emphasized ---\n{dot}");
    for j in 0..inst.k() {
        assert!(dot.contains(&format!("subgraph cluster_{j}")));
    }
    assert_eq!(dot.matches("style=bold").count(), inst.n - 1);

    println!("all asserts passed");
    Ok(())
}
