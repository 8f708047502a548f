//! Acceptance criteria, one test per criterion. Each prints a single
//! `PASS`/`FAIL` line (run with `--nocapture` to see them).

use domgame_core::verify::{run_suite, Suite, SuiteReport, VerifyConfig};

fn criterion(number: u32, suite: Suite) -> SuiteReport {
    let report = run_suite(suite, &VerifyConfig::default());
    println!("criterion {number}: {report}");
    for failure in report.failures.iter().take(10) {
        println!("    {failure}");
    }
    report
}

fn assert_passed(report: &SuiteReport) {
    assert!(report.ok(), "{} failing case(s): {:#?}", report.failed, report.failures);
    assert!(report.passed > 0, "suite ran no cases");
}

#[test]
fn criterion_1_kernel_identities() {
    assert_passed(&criterion(1, Suite::KernelIdentities));
}

#[test]
fn criterion_2_stars() {
    let report = criterion(2, Suite::Stars);
    assert_passed(&report);
}

#[test]
fn criterion_3_bipartite() {
    assert_passed(&criterion(3, Suite::Bipartite));
}

#[test]
fn criterion_4_split_graphs() {
    assert_passed(&criterion(4, Suite::Split));
}

#[test]
fn criterion_5_paths_and_cycles() {
    let report = criterion(5, Suite::PathsCycles);
    assert_passed(&report);
    assert_eq!(report.passed, 12 + 10);
}

#[test]
fn criterion_6_algebraic_laws() {
    let report = criterion(6, Suite::Laws);
    assert_passed(&report);
    assert!(report.passed >= 500);
}

#[test]
fn criterion_7_star_forests() {
    let report = criterion(7, Suite::StarForests);
    assert_passed(&report);
    assert_eq!(report.passed, 100);
}

#[test]
fn criterion_8_nimber_algebra() {
    assert_passed(&criterion(8, Suite::Nimbers));
}
