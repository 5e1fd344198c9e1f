// Driving the command-line front end in-process.

use ecctree::cli::execute;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for args in [
        vec!["validate", "2,3,4,4"],
        vec!["extremal", "1,2^3"],
        vec!["--format", "json", "count", "2,3,3,4,4,4,4"],
        vec!["--max-n", "7", "verify", "--all"],
    ] {
        let o = execute(std::iter::once("ecctree").chain(args.iter().copied()));
        println!(
            "$ ecctree {}  (exit {})\n{}",
            args.join(" "),
            o.code,
            o.stdout
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
