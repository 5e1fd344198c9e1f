//! Trees with a prescribed eccentric sequence: validation, the caterpillar
//! that minimises the Wiener index and maximises the number of subtrees,
//! distance-based invariants, and exhaustive checks over small orders.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod extremal;
pub mod invariants;
pub mod seq;
pub mod transform;
pub mod tree;

pub use canon::CanonicalCode;
pub use extremal::{extremal_tree, max_subtrees_value, min_wiener_derivation, CaterpillarSpec};
pub use invariants::{invariant_report, subtree_count, wiener, InvariantReport};
pub use seq::{EccSequence, InvalidReason, Validity};
pub use transform::{caterpillarize, find_move, RewriteMove};
pub use tree::{ParseTreeError, Tree, TreeError};
