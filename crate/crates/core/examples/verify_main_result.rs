// Exhaustive check that the construction is the unique optimum for every
// sequence up to a given order.

use ecctree::enumerate::{verify_all, verify_order_diameter, Budget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::new(10, false)?;
    let reports = verify_all(&budget)?;
    let confirmed = reports.iter().filter(|r| r.confirms()).count();
    println!(
        "{confirmed} of {} sequences confirmed up to n = 10",
        reports.len()
    );
    if let Some(r) = reports.iter().max_by_key(|r| r.trees_examined) {
        println!("largest class:\n{r}");
    }
    let od = verify_order_diameter(10, 5, &budget)?;
    println!(
        "order 10, diameter 5: {} trees, unique optimum {}",
        od.trees_examined,
        od.confirms()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
