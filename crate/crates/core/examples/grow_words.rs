//! Children and parents: lengthening or shortening one run of a word.
//! Children of a minimal word stay minimal.
//!
//!     cargo run --example grow_words -- aabbAAbb

use rootwords::{children, is_minimal, is_root, parents, CyclicWord};

fn main() -> rootwords::Result<()> {
    let w = CyclicWord::parse(&std::env::args().nth(1).unwrap_or_else(|| "aabbAAbb".into()))?;
    println!("{w}: minimal={} root={}", is_minimal(&w), is_root(&w));
    println!("parents:");
    for p in parents(&w) {
        println!("  {p:<12} minimal={}", is_minimal(&p));
    }
    println!("children:");
    for c in children(&w) {
        println!("  {c:<12} minimal={}", is_minimal(&c));
    }

    // climb from the empty word, always taking the first child
    let mut cur = CyclicWord::empty();
    for _ in 0..8 {
        cur = children(&cur).into_iter().next().unwrap();
        print!("{cur} ");
    }
    println!();
    Ok(())
}
