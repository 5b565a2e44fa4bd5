//! Acceptance suite: runs every verification check at the default seed and
//! prints one pass/fail line per criterion. All comparisons are exact; there
//! are no tolerances to configure.

use gencx_core::verify::{verify_all, Status, DEFAULT_SEED};

#[test]
fn acceptance_criteria() {
    let checks = verify_all(DEFAULT_SEED);
    let mut failures = Vec::new();
    for check in &checks {
        let label = match check.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        println!("{label} {} — {}", check.name, check.detail);
        if check.status == Status::Fail {
            failures.push(check.name.clone());
        }
    }
    assert_eq!(checks.len(), 26);
    assert!(checks.iter().filter(|c| c.name.starts_with('c')).count() == 12);
    assert!(failures.is_empty(), "failing checks: {failures:?}");
}
