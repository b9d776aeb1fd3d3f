//! Greedy Whitehead reduction with the full trace, and an equivalence test.
//!
//!     cargo run --example whitehead_minimize -- abbbabbbbb

use rootwords::{are_equivalent, minimize_word, Word};

fn main() -> rootwords::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "abbbabbbbb".into());
    let w = Word::parse(&input)?;
    let (m, trace) = minimize_word(&w);
    println!("start {} (len {})", trace.start, trace.start.len());
    print!("{trace}");
    println!("minimal {m} (len {})", m.len());
    assert!(trace.is_strictly_decreasing());

    let other = Word::parse("aabb")?;
    println!("{input} ~ aabb under Aut(F2): {}", are_equivalent(&w, &other)?);
    Ok(())
}
