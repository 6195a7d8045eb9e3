//! Runs every acceptance criterion at the full level and prints one line per
//! criterion. Exits nonzero if any criterion fails.

use polar_core::catalog::Catalog;
use polar_core::verify::{check_ids, run_check, Level};

fn main() {
    let catalog = match Catalog::load() {
        Ok(c) => c,
        Err(e) => {
            println!("catalog FAIL: {e}");
            std::process::exit(1);
        }
    };
    let mut failed = Vec::new();
    for id in check_ids().into_iter().filter(|id| id.starts_with('A')) {
        let outcome = run_check(id, Level::Full, &catalog).expect("known id");
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{id:<4} {verdict} [{:.2}s] {}: {}", outcome.seconds, outcome.title, outcome.detail);
        if !outcome.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("all acceptance criteria passed");
    } else {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
