// Which integer sequences are eccentric sequences of trees.

use ecctree::{EccSequence, Validity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "2,3,3,4,4",
        "2^1,3^2,4^4",
        "1,2,2,2",
        "2,3,4,4",
        "3,4,5",
        "1,1",
    ] {
        let s: EccSequence = text.parse()?;
        match s.validate() {
            Validity::Valid => println!(
                "{text:<14} valid, radius {} diameter {}",
                s.radius(),
                s.diameter()
            ),
            Validity::Invalid(r) => println!("{text:<14} invalid ({r})"),
        }
    }
    // the compact form lists b1 and the multiplicities
    let s = EccSequence::from_compact(2, &[1, 2, 4])?;
    assert_eq!(s.to_raw_string(), "2,3,3,4,4,4,4");
    println!("{} = {}", s.to_compact_string(), s.to_raw_string());
    let valid_12 = ecctree::seq::valid_sequences(12).len();
    println!("{valid_12} tree eccentric sequences have 12 terms");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
