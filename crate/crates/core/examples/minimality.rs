//! Count-based minimality and root tests, checked against the versions that
//! apply the four one-letter automorphisms directly.
//!
//!     cargo run --example minimality -- abb aabb abAB

use rootwords::{is_minimal, is_minimal_oracle, is_root, is_root_oracle, CyclicWord};

fn main() -> rootwords::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["abb", "aab", "aabb", "abAB", "abaB", "aaaBBAbaB"].map(String::from).to_vec()
    } else {
        args
    };
    println!("{:<12} {:>7} {:>5}  counts (aa,bb,ab,aB)", "word", "minimal", "root");
    for s in inputs {
        let w = CyclicWord::parse(&s)?;
        assert_eq!(is_minimal(&w), is_minimal_oracle(&w));
        assert_eq!(is_root(&w), is_root_oracle(&w));
        let counts = w
            .profile()
            .map(|p| format!("({}, {}, {}, {})", p.n_aa, p.n_bb, p.n_ab, p.n_a_binv))
            .unwrap_or_else(|_| "-".into());
        println!("{:<12} {:>7} {:>5}  {counts}", w, is_minimal(&w), is_root(&w));
    }
    Ok(())
}
