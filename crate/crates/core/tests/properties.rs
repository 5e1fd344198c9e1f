mod common;

use ecctree::enumerate::random_tree;
use ecctree::transform::{caterpillarize_traced, off_path_inner_vertices};
use ecctree::{caterpillarize, subtree_count, wiener, EccSequence, Tree};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree(n: usize, seed: u64) -> Tree {
    random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_changes_nothing(n in 1usize..40, seed in any::<u64>()) {
        let t = tree(n, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x9e37));
        let u = t.relabel(&perm).unwrap();
        prop_assert_eq!(t.canonical_code(), u.canonical_code());
        prop_assert_eq!(wiener(&t), wiener(&u));
        prop_assert_eq!(subtree_count(&t), subtree_count(&u));
        prop_assert_eq!(t.eccentric_sequence(), u.eccentric_sequence());
        prop_assert!(t.is_isomorphic(&u));
    }

    #[test]
    fn two_bfs_eccentricities_match_all_pairs(n in 1usize..50, seed in any::<u64>()) {
        let t = tree(n, seed);
        let d = common::dist(&t);
        let ecc: Vec<usize> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
        prop_assert_eq!(t.eccentricities(), ecc.clone());
        prop_assert_eq!(t.diameter(), *ecc.iter().max().unwrap());
        prop_assert_eq!(t.radius(), *ecc.iter().min().unwrap());
        prop_assert_eq!(t.diametral_path().len(), t.diameter() + 1);
    }

    #[test]
    fn caterpillarize_is_monotone_and_idempotent(n in 1usize..45, seed in any::<u64>()) {
        let t = tree(n, seed);
        let (c, moves) = caterpillarize_traced(&t);
        prop_assert!(c.is_caterpillar());
        prop_assert_eq!(c.eccentric_sequence(), t.eccentric_sequence());
        prop_assert_eq!(moves.len(), off_path_inner_vertices(&t));
        prop_assert_eq!(caterpillarize(&c), c.clone());
        if moves.is_empty() {
            prop_assert_eq!(&c, &t);
        } else {
            prop_assert!(wiener(&c) < wiener(&t));
            prop_assert!(subtree_count(&c) > subtree_count(&t));
        }
    }

    #[test]
    fn tree_file_round_trips(n in 1usize..40, seed in any::<u64>()) {
        let t = tree(n, seed);
        let back = Tree::parse(&t.to_tree_file()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn sequence_syntaxes_round_trip(b1 in 1u32..6, mult in prop::collection::vec(1usize..5, 1..6)) {
        let s = EccSequence::from_compact(b1, &mult).unwrap();
        let raw: EccSequence = s.to_raw_string().parse().unwrap();
        let compact: EccSequence = s.to_compact_string().parse().unwrap();
        prop_assert_eq!(&raw, &s);
        prop_assert_eq!(&compact, &s);
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<EccSequence>(&json).unwrap(), s);
    }
}
