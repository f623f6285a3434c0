//! Hardness gadgets and instance generators.
//!
//! This module maps two classic decision problems, 3-literal CNF
//! satisfiability and exact cover by 3-sets, onto clustered shortest-path
//! instances whose optimal values land on one side or the other of a gap:
//! solvable sources produce instances with optimum at most a low threshold,
//! unsolvable sources push the optimum to a strictly higher one, and no
//! instance falls in between. Each generator returns a
//! [`GadgetCertificate`] that records the construction parameters, both
//! thresholds, and the source problem, so the gap can be checked
//! independently by any exact solver.
//!
//! Brute-force deciders for both source problems and a seeded random
//! instance generator round out the module; they provide the ground truth
//! for dichotomy and property tests.

mod cnf;
mod gadgets;
mod random;
mod x3c;

pub use cnf::{
    forced_unsat_formula, random_formula, sat_bruteforce, CnfFormula,
    SAT_BRUTEFORCE_VARIABLE_LIMIT,
};
pub use gadgets::{
    gen_clubfs_from_3cnf, gen_cluspt_from_3cnf, gen_clusp_from_x3c, GadgetCertificate, GadgetKind,
    GadgetParameters, SourceProblem,
};
pub use random::gen_random_clustered;
pub use x3c::{
    enumerate_x3c_instances, random_x3c, x3c_bruteforce, X3cInstance, X3C_BRUTEFORCE_SET_LIMIT,
};
