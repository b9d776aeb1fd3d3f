//! Free and cyclic reduction, canonical rotation and pair counts.
//!
//!     cargo run --example reduce_words -- ABaBabba aaaBBAbaB

use rootwords::{CyclicWord, Word};

fn main() -> rootwords::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["ABaBabba".to_string(), "aaaBBAbaB".into()] } else { args };
    for s in inputs {
        let w = Word::parse(&s)?;
        let c = CyclicWord::from_word(&w);
        println!("{s}");
        println!("  freely reduced   {w}");
        println!("  cyclic canonical {c} (length {})", c.len());
        if let Ok(p) = c.profile() {
            println!(
                "  (aa)={} (bb)={} (ab)={} (aB)={}  longest run {}",
                p.n_aa,
                p.n_bb,
                p.n_ab,
                p.n_a_binv,
                c.longest_run()
            );
        }
    }
    Ok(())
}
