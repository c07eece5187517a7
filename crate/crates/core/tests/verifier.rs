use bethe_symm::verifier::{run_suite, Profile, RunOptions};

#[test]
fn smoke_suite_passes() {
    let reports = run_suite("*", &RunOptions::new(Profile::Smoke, 1)).unwrap();
    assert_eq!(reports.len(), 21);
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.summary_line(), r.failures.first());
    }
}

#[test]
fn standard_suite_passes() {
    let reports = run_suite("*", &RunOptions::new(Profile::Standard, 1)).unwrap();
    for r in &reports {
        println!("{}", r.summary_line());
    }
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.summary_line(), r.failures.first());
    }
}
