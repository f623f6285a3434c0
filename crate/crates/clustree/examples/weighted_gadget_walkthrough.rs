//! Builds the weighted hardness gadget from a 3-CNF formula. Almost every
//! edge has weight zero; only the edge joining a variable's two literal
//! vertices costs one. A satisfiable formula therefore admits a tree of
//! cost exactly the number of variables, while an unsatisfiable one is
//! punished by a padding path of configurable length hanging off each
//! clause.
//!
//! Run with `cargo run --example weighted_gadget_walkthrough`.

use clustree::exact::{root_vector_solve, RootEnumOptions};
use clustree::reductions::{
    forced_unsat_formula, gen_cluspt_from_3cnf, sat_bruteforce, CnfFormula,
};

fn main() -> clustree::error::Result<()> {
    let padding = 20;

    // A two-clause formula, satisfiable by setting variable 1 true and
    // variable 2 false.
    let formula = CnfFormula::from_dimacs("p cnf 3 2\n1 -2 3 0\n1 2 -3 0\n")?;
    let witness = sat_bruteforce(&formula)?.expect("satisfiable");
    assert!(formula.eval(&witness));

    let cert = gen_cluspt_from_3cnf(&formula, padding)?;
    println!(
        "satisfiable formula: gadget has {} vertices, {} edges, {} clusters",
        cert.instance.n,
        cert.instance.m(),
        cert.instance.k()
    );
    println!(
        "thresholds: satisfiable means cost exactly {}, unsatisfiable means >= {}",
        cert.sat_threshold, cert.unsat_threshold
    );
    assert_eq!(cert.sat_threshold, formula.variables as u64);
    assert_eq!(
        cert.unsat_threshold,
        (formula.variables + padding + 4) as u64
    );

    let solved = root_vector_solve(&cert.instance, &RootEnumOptions::default())?;
    println!("optimal cost: {}", solved.cost);
    // Connectivity of each variable cluster forces all the literal edges
    // into every feasible tree, so the optimum cannot dip below the
    // variable count; satisfiability lets it reach that floor exactly.
    assert_eq!(solved.cost, cert.sat_threshold);

    // The all-sign-patterns formula is unsatisfiable, so some clause
    // vertex is forced to route through its padding path.
    let unsat = forced_unsat_formula();
    let cert = gen_cluspt_from_3cnf(&unsat, padding)?;
    println!(
        "\nunsatisfiable formula: gadget has {} vertices, {} edges",
        cert.instance.n,
        cert.instance.m()
    );
    let solved = root_vector_solve(&cert.instance, &RootEnumOptions::default())?;
    println!(
        "optimal cost: {} (needs to clear {})",
        solved.cost, cert.unsat_threshold
    );
    assert!(solved.cost >= cert.unsat_threshold);

    println!("all asserts passed");
    Ok(())
}
