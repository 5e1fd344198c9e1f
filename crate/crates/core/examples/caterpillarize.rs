// Rewriting a random tree into a caterpillar with the same eccentric
// sequence, one move at a time.

use ecctree::enumerate::random_tree;
use ecctree::transform::{apply_move, off_path_inner_vertices};
use ecctree::{find_move, subtree_count, wiener};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut t = random_tree(30, &mut rng)?;
    let sequence = t.eccentric_sequence();
    println!(
        "sequence {sequence}, {} moves needed",
        off_path_inner_vertices(&t)
    );
    while let Some(m) = find_move(&t) {
        let next = apply_move(&t, &m)?;
        println!(
            "hub {:>2} -> v_{} : W {} -> {} (predicted {:+}), N {} -> {}",
            m.hub,
            m.pivot + 1,
            wiener(&t),
            wiener(&next),
            m.predicted_wiener_delta(&t),
            subtree_count(&t),
            subtree_count(&next)
        );
        t = next;
    }
    assert!(t.is_caterpillar());
    assert_eq!(t.eccentric_sequence(), sequence);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
