//! Runs scaled-down verification suites in process and prints the JSON
//! report the command-line `verify` command would emit. Each record names
//! one checked fact and carries the concrete numbers, so a failing check
//! is diagnosable from the report alone.
//!
//! Run with `cargo run --example verification_report`.

use clustree::verify::{
    approx_bounds, cover_dichotomy_enumerated, path_agreement, solver_agreement, VerifyReport,
    DEFAULT_VERIFY_SEED,
};

fn main() {
    let mut checks = Vec::new();
    checks.extend(solver_agreement(8, DEFAULT_VERIFY_SEED, 1));
    checks.extend(approx_bounds(8, DEFAULT_VERIFY_SEED, false));
    checks.extend(cover_dichotomy_enumerated(1, 1));
    checks.extend(path_agreement(10, DEFAULT_VERIFY_SEED));

    let report = VerifyReport::from_checks(checks);
    print!("{}", report.to_json());
    assert!(report.passed, "every scaled-down suite is expected to pass");

    // The same machinery can demonstrate a failure: corrupting the
    // approximation costs before checking flips the verdict.
    let sabotaged = VerifyReport::from_checks(approx_bounds(4, DEFAULT_VERIFY_SEED, true));
    eprintln!(
        "with deliberately corrupted approximation costs: passed={}",
        sabotaged.passed
    );
    assert!(!sabotaged.passed);

    eprintln!("all asserts passed");
}
