//! Runs verification suites from library code, the same ones `dkring
//! verify` runs, and prints a line per identity.
//!
//!     cargo run --example verify_suites [suite ...]

use dkring::verify::{run_suites, suite_names, SuiteParams};

fn main() -> dkring::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["doldkan", "kequivq", "yangbaxter"].iter().map(|s| s.to_string()).collect();
    }
    println!("available: {}", suite_names().join(", "));
    let params = SuiteParams { seed: 3, ..SuiteParams::default() };
    for c in run_suites(&names, &params)? {
        let status = if c.passed { "pass" } else { "FAIL" };
        println!("{status} {:<14} {} ({})", c.suite, c.check, c.detail);
    }
    Ok(())
}
