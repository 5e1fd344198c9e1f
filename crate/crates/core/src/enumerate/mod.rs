//! Exhaustive generation of free trees and the desk-scale checks built on
//! top of it.
//!
//! Free trees come from the Wright–Richmond–Odlyzko–McKay successor rule
//! on level sequences of centre-rooted trees; every tree on `n` vertices is
//! produced exactly once. Collections handed out by this module are sorted
//! by canonical code so their order never depends on the thread count.

mod audit;
mod explore;
mod verify;

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::extremal::{CaterpillarDecomposition, ExtremalError};
use crate::invariants::InvariantError;
use crate::seq::{EccSequence, InvalidReason, NotTreeSequence, Validity};
use crate::tree::Tree;

pub use audit::{audit_formulas, AuditReport, AuditRow, AuditSummary};
pub use explore::{
    explore_conjecture, ConjectureReport, Counterexample, IndexEvidence, IndexKind,
    SequenceEvidence,
};
pub use verify::{
    verify_all, verify_extremal, verify_order_diameter, ExtremalityReport, Extremum,
    OrderDiameterReport,
};

/// Largest order enumerated unless the extended budget is requested.
pub const DEFAULT_MAX_N: usize = 12;
/// Largest order reachable with the extended budget.
pub const EXTENDED_MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumError {
    #[error("trees need at least one vertex")]
    ZeroOrder,
    #[error("order {n} exceeds the enumeration budget of {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },
    #[error("budget {max_n} outside the supported range {min}..={max}")]
    BadBudget {
        max_n: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Sequence(#[from] NotTreeSequence),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Count-based limit on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Budget {
    /// `max_n` must be at least 3, and at most [`DEFAULT_MAX_N`] unless
    /// `extended` is set, in which case [`EXTENDED_MAX_N`] is the cap.
    pub fn new(max_n: usize, extended: bool) -> Result<Self, EnumError> {
        let max = if extended {
            EXTENDED_MAX_N
        } else {
            DEFAULT_MAX_N
        };
        if !(3..=max).contains(&max_n) {
            return Err(EnumError::BadBudget { max_n, min: 3, max });
        }
        Ok(Budget { max_n })
    }

    pub fn extended() -> Self {
        Budget {
            max_n: EXTENDED_MAX_N,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn check(&self, n: usize) -> Result<(), EnumError> {
        if n > self.max_n {
            return Err(EnumError::BudgetExceeded {
                n,
                max_n: self.max_n,
            });
        }
        Ok(())
    }
}

/// Runs `f` on a dedicated pool of `jobs` threads (`0` picks the default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, EnumError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| EnumError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Lazily yields every free tree on `n` vertices once, in generation order.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    singleton: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<Self, EnumError> {
        match n {
            0 => Err(EnumError::ZeroOrder),
            1 => Ok(FreeTrees {
                layout: None,
                singleton: true,
            }),
            _ => {
                // the path, rooted at its centre
                let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
                Ok(FreeTrees {
                    layout: Some(layout),
                    singleton: false,
                })
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.singleton {
            self.singleton = false;
            return Some(Tree::singleton());
        }
        let layout = next_free(self.layout.take()?)?;
        self.layout = next_rooted(&layout, None);
        Some(layout_to_tree(&layout))
    }
}

/// One step of the rooted-tree successor on level sequences. `p` defaults
/// to the last position with level above 1.
fn next_rooted(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut next = prev.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits a level sequence into the first subtree of the root (re-levelled)
/// and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

/// Accepts `candidate` if it is the canonical centre-rooted form of a free
/// tree, otherwise jumps to the next one that is.
fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequence describes a tree")
}

/// All free trees on `n` vertices with their codes, sorted by code.
pub fn free_trees_with_codes(n: usize) -> Result<Vec<(CanonicalCode, Tree)>, EnumError> {
    let trees: Vec<Tree> = FreeTrees::new(n)?.collect();
    let mut coded: Vec<_> = trees
        .into_par_iter()
        .map(|t| (t.canonical_code(), t))
        .collect();
    coded.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(coded)
}

/// All pairwise nonisomorphic trees on `n` vertices, sorted by canonical
/// code.
pub fn free_trees(n: usize) -> Result<Vec<Tree>, EnumError> {
    Ok(free_trees_with_codes(n)?
        .into_iter()
        .map(|(_, t)| t)
        .collect())
}

/// Uniform labelled random tree on `n` vertices via a random Prüfer code.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tree, EnumError> {
    match n {
        0 => return Err(EnumError::ZeroOrder),
        1 => return Ok(Tree::singleton()),
        2 => return Ok(Tree::path(2).expect("edge")),
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Ok(Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree"))
}

/// Free trees whose eccentric sequence is `s`, sorted by canonical code.
/// Sequences of two or fewer entries are rejected outright.
pub fn trees_with_sequence(s: &EccSequence) -> Result<Vec<Tree>, EnumError> {
    if s.validate() == Validity::Invalid(InvalidReason::TooShort) {
        return Ok(Vec::new());
    }
    let trees = free_trees(s.len())?;
    Ok(trees
        .into_par_iter()
        .filter(|t| &t.eccentric_sequence() == s)
        .collect())
}

/// Nonisomorphic caterpillars with eccentric sequence `s`, built directly
/// from the ways of splitting each pendant class between the two mirror
/// positions of the backbone. Sorted by canonical code.
pub fn caterpillars_with_sequence(s: &EccSequence) -> Vec<Tree> {
    if !s.is_tree_sequence() {
        return Vec::new();
    }
    let q = s.diameter() as usize - 1;
    let l = s.distinct();
    let mut c = vec![0usize; q];
    let mut found: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    if q == 1 {
        c[0] = s.len() - 1;
        emit_caterpillar(&c, s, &mut found);
    } else {
        let sizes: Vec<usize> = (1..l)
            .map(|j| if j == 1 { s.m(l) } else { s.m(l + 1 - j) - 2 })
            .collect();
        split_classes(&sizes, 1, q, &mut c, s, &mut found);
    }
    found.into_values().collect()
}

fn split_classes(
    sizes: &[usize],
    j: usize,
    q: usize,
    c: &mut Vec<usize>,
    s: &EccSequence,
    found: &mut BTreeMap<CanonicalCode, Tree>,
) {
    if j > sizes.len() {
        emit_caterpillar(c, s, found);
        return;
    }
    let size = sizes[j - 1];
    let mirror = q + 1 - j;
    if mirror == j {
        c[j - 1] = size;
        split_classes(sizes, j + 1, q, c, s, found);
        return;
    }
    // both backbone ends carry at least one pendant
    let lo = usize::from(j == 1);
    if size < 2 * lo {
        return;
    }
    for here in lo..=size - lo {
        c[j - 1] = here;
        c[mirror - 1] = size - here;
        split_classes(sizes, j + 1, q, c, s, found);
    }
}

fn emit_caterpillar(c: &[usize], s: &EccSequence, found: &mut BTreeMap<CanonicalCode, Tree>) {
    let dec = CaterpillarDecomposition::new(c.to_vec()).expect("ends carry pendants");
    let t = dec.build();
    debug_assert_eq!(&t.eccentric_sequence(), s);
    found.entry(t.canonical_code()).or_insert(t);
}

pub fn count_caterpillars(s: &EccSequence) -> usize {
    caterpillars_with_sequence(s).len()
}
