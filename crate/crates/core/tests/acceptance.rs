//! Runs every acceptance criterion and prints one line per criterion.

use raag_core::suite::{run_all, DEFAULT_SEED};

#[test]
fn acceptance() {
    let reports = run_all(DEFAULT_SEED);
    for r in &reports {
        println!("[{}] criterion {:>2}: {} | {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail);
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
