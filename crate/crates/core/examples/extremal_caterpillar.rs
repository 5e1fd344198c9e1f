// The caterpillar that minimises W and maximises the number of subtrees
// among all trees with a given eccentric sequence.

use ecctree::extremal::{max_subtrees_printed, min_wiener_printed, order_diameter_spec};
use ecctree::{
    extremal_tree, max_subtrees_value, min_wiener_derivation, subtree_count, wiener,
    CaterpillarSpec, EccSequence,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s: EccSequence = "2,3,3,4,4,4,4".parse()?;
    let spec = CaterpillarSpec::for_sequence(&s)?;
    println!("q = {}, pendant counts {:?}", spec.q(), spec.pendants());

    let t = extremal_tree(&s)?;
    print!("{t}");
    let w = min_wiener_derivation(&s)?;
    let n = max_subtrees_value(&s)?;
    assert_eq!(w, wiener(&t) as i64);
    assert_eq!(n, subtree_count(&t));
    println!("W = {w}, N = {n}");
    println!(
        "printed closed forms give W = {}, N = {}",
        min_wiener_printed(&s)?,
        max_subtrees_printed(&s)?.value
    );

    // fixing only order and diameter
    let od = order_diameter_spec(9, 4)?;
    println!(
        "order 9, diameter 4: q = {}, pendants {:?}",
        od.q(),
        od.pendants()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
