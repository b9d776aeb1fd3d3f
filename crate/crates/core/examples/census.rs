//! Per-length census of cyclic words, minimal words and roots.
//!
//!     cargo run --release --example census -- 14 4

use rootwords::census;

fn main() -> rootwords::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_len: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let threads: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    println!("{:>3} {:>10} {:>10} {:>8} {:>8} {:>6}", "n", "words", "minimal", "roots", "classes", "run");
    for r in census(max_len, threads)? {
        println!(
            "{:>3} {:>10} {:>10} {:>8} {:>8} {:>6}",
            r.length,
            r.total_cyclic_words,
            r.minimal_count,
            r.root_count,
            r.root_class_count,
            r.max_run_over_roots
        );
    }
    Ok(())
}
