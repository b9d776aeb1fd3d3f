//! Runs every structural check exhaustively up to a length and prints a
//! one-line summary per check.
//!
//!     cargo run --release --example verify -- 12 4

use rootwords::run_verification;

fn main() -> rootwords::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_len: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let threads: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_verification(max_len, threads)?;
    for (name, check) in &report.checks {
        let status = if check.passed { "ok" } else { "FAILED" };
        println!("{status:>6}  {name:<28} up to {:>2}, {} words", check.max_len, check.corpus);
        if let Some(cx) = &check.counterexample {
            println!("        counterexample: {cx}");
        }
    }
    println!("complete={} passed={}", report.complete, report.passed);
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}
