//! Classes of minimal words under automorphisms, and the partition of root
//! words of a given length into such classes.
//!
//!     cargo run --example root_classes -- 8

use rootwords::enumeration::partition_into_classes;
use rootwords::{minimal_class, CyclicWord, CyclicWords};

fn main() -> rootwords::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);

    for s in ["abAB", "aabb", "a"] {
        let class = minimal_class(&CyclicWord::parse(s)?)?;
        let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
        println!("class of {s}: root={} {:?}", class.is_root_class, members);
    }

    let roots: Vec<CyclicWord> = CyclicWords::new(n).filter(rootwords::is_root).collect();
    let classes = partition_into_classes(&roots)?;
    println!("length {n}: {} roots in {} classes", roots.len(), classes.len());
    for c in &classes {
        println!("  {:<16} {} members", c.representative(), c.members.len());
    }
    Ok(())
}
