// The printed closed forms next to their derivations and brute force.

use ecctree::enumerate::audit_formulas;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = audit_formulas(8)?;
    println!("{report}");
    assert!(report.is_sound());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
