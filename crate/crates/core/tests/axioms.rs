mod common;

use obskit_core::testkit::axioms::{run, SUITES};

#[test]
fn every_suite_holds_on_random_instances() {
    let mut failed = Vec::new();
    for (k, (name, check)) in SUITES.iter().enumerate() {
        let report = run(name, *check, &mut common::rng(1000 + k as u64), 300);
        if !report.passed() {
            failed.push(format!("{name}: {} of {} ({:?})", report.failures, report.cases, report.first_failure));
        }
    }
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn suite_names_are_distinct() {
    let mut names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
    let total = names.len();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), total);
}
