// Does the same caterpillar also minimise the hyper-Wiener index and
// W(T; lambda)? Evidence only.

use ecctree::enumerate::{explore_conjecture, Budget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = explore_conjecture(&Budget::new(10, false)?, &[1.0, 1.5, 2.0, 3.0, 0.5, -1.0])?;
    for s in &report.summary {
        println!(
            "{:<8} minimal in {}/{} sequences, unique in {}",
            s.index.to_string(),
            s.construction_minimal,
            s.sequences,
            s.construction_unique
        );
    }
    for c in &report.counterexamples {
        println!(
            "{} on {}: {} beats {}",
            c.index, c.sequence, c.minimizer_value, c.construction_value
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
