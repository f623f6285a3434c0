//! Builds the unit-weight hardness gadget from a 3-CNF formula and shows
//! the threshold dichotomy that makes the construction a reduction: the
//! optimal broadcast cost lands at or below one threshold exactly when
//! the formula is satisfiable, and at or above a strictly larger one when
//! it is not. Nothing in between can occur.
//!
//! Run with `cargo run --example formula_gadget_walkthrough`.

use clustree::exact::{root_vector_count, root_vector_solve, RootEnumOptions};
use clustree::reductions::{
    forced_unsat_formula, gen_clubfs_from_3cnf, sat_bruteforce, CnfFormula,
};

fn main() -> clustree::error::Result<()> {
    // A single clause over three variables, in the DIMACS convention
    // (positive literal i means variable i, negative means its negation).
    let formula = CnfFormula::from_dimacs("c one clause\np cnf 3 1\n1 2 3 0\n")?;
    let cert = gen_clubfs_from_3cnf(&formula)?;
    println!("satisfiable formula with {} variables, {} clauses", formula.variables, formula.clause_count());
    println!(
        "gadget: {} vertices, {} edges, {} clusters",
        cert.instance.n,
        cert.instance.m(),
        cert.instance.k()
    );
    assert_eq!(cert.instance.n, 10);
    assert_eq!(cert.instance.m(), 15);

    // The vertex budget is 3 per variable plus 8 per clause when the
    // formula is satisfiable; one extra hop per clause otherwise.
    println!(
        "thresholds: satisfiable <= {}, unsatisfiable >= {}",
        cert.sat_threshold, cert.unsat_threshold
    );
    assert_eq!(cert.sat_threshold, 3 * 3 + 8 * 1);

    let witness = sat_bruteforce(&formula)?.expect("the single clause is satisfiable");
    println!("satisfying assignment: {witness:?}");
    assert!(formula.eval(&witness));

    let solved = root_vector_solve(&cert.instance, &RootEnumOptions::default())?;
    println!("optimal broadcast cost: {}", solved.cost);
    assert_eq!(solved.cost, 17);
    assert!(solved.cost <= cert.sat_threshold);

    // An unsatisfiable formula: all eight sign patterns over three
    // variables, so every assignment falsifies some clause.
    let unsat = forced_unsat_formula();
    assert!(sat_bruteforce(&unsat)?.is_none());
    let cert = gen_clubfs_from_3cnf(&unsat)?;
    println!(
        "\nunsatisfiable formula: gadget has {} vertices, {} edges",
        cert.instance.n,
        cert.instance.m()
    );
    assert_eq!(cert.instance.n, 31);
    assert_eq!(cert.instance.m(), 57);

    let opts = RootEnumOptions::default();
    let vectors = root_vector_count(&cert.instance, &opts)?;
    println!("root vectors examined by the solver: {vectors}");
    assert_eq!(vectors, 52_488);

    let solved = root_vector_solve(&cert.instance, &opts)?;
    println!(
        "optimal broadcast cost: {} (thresholds {} / {})",
        solved.cost, cert.sat_threshold, cert.unsat_threshold
    );
    assert!(solved.cost >= cert.unsat_threshold);
    assert_eq!(solved.cost, 76);

    // The certificate is self-describing: it can be serialized, parsed
    // back, and regenerated from its embedded source formula.
    let text = cert.to_json();
    let parsed = clustree::reductions::GadgetCertificate::from_json_str(&text)?;
    parsed.recheck()?;
    println!("certificate round trip and recheck: ok");

    println!("all asserts passed");
    Ok(())
}
