// Distance-based indices of a tree read from the tree file format.

use ecctree::{invariant_report, Tree};

const SPIDER: &str = "# three legs of length two\n7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t: Tree = SPIDER.parse()?;
    println!("eccentric sequence {}", t.eccentric_sequence());
    let r = invariant_report(&t, &[1.0, 2.0, 0.5])?;
    println!(
        "W {}  N {}  W_e {}  W'_e {}  W_ve {}",
        r.wiener, r.subtrees, r.edge_wiener, r.edge_wiener_line, r.vertex_edge_wiener
    );
    println!(
        "Schultz {}  Gutman {}  HW {}",
        r.schultz, r.gutman, r.hyper_wiener
    );
    for (l, v) in &r.wiener_lambda {
        println!("W(T; {l}) = {v}");
    }
    assert!(r.relation_residuals.all_zero());
    println!("{}", serde_json::to_string(&r)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
