// Free trees up to isomorphism, filtered by eccentric sequence.

use ecctree::enumerate::{caterpillars_with_sequence, free_trees, trees_with_sequence, FreeTrees};
use ecctree::EccSequence;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let counts: Vec<usize> = (1..=12)
        .map(|n| FreeTrees::new(n).map(Iterator::count))
        .collect::<Result<_, _>>()?;
    println!("free trees on 1..=12 vertices: {counts:?}");

    for t in free_trees(5)? {
        println!("{}  {}", t.canonical_code(), t.eccentric_sequence());
    }

    let s: EccSequence = "2,3,3,4,4,4,4".parse()?;
    let all = trees_with_sequence(&s)?;
    let cats = caterpillars_with_sequence(&s);
    println!("{s}: {} trees, {} caterpillars", all.len(), cats.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
