use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{free_trees_with_codes, trees_with_sequence, Budget, EnumError};
use crate::canon::CanonicalCode;
use crate::extremal::{extremal_tree, min_wiener_order_diameter};
use crate::invariants::{subtree_count, wiener};
use crate::seq::EccSequence;
use crate::tree::Tree;

pub(crate) fn ser_tree<S: Serializer>(t: &Tree, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_tree_file())
}

pub(crate) fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Best value of an index and every tree attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum<V: fmt::Display> {
    #[serde(serialize_with = "ser_display")]
    pub value: V,
    pub achievers: Vec<CanonicalCode>,
}

impl<V: fmt::Display> Extremum<V> {
    pub fn is_unique(&self) -> bool {
        self.achievers.len() == 1
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.achievers.contains(code)
    }
}

/// Wiener index and subtree count of one tree.
#[derive(Debug, Clone)]
struct Scored {
    code: CanonicalCode,
    wiener: u64,
    subtrees: BigUint,
}

impl Scored {
    fn of(code: CanonicalCode, t: &Tree) -> Self {
        Scored {
            code,
            wiener: wiener(t),
            subtrees: subtree_count(t),
        }
    }
}

/// Records must be sorted by code; achiever lists inherit that order.
fn extrema(records: &[Scored]) -> (Extremum<u64>, Extremum<BigUint>) {
    let min_w = records.iter().map(|r| r.wiener).min().unwrap_or(0);
    let max_n = records
        .iter()
        .map(|r| &r.subtrees)
        .max()
        .cloned()
        .unwrap_or_default();
    let min_wiener = Extremum {
        value: min_w,
        achievers: records
            .iter()
            .filter(|r| r.wiener == min_w)
            .map(|r| r.code.clone())
            .collect(),
    };
    let max_subtrees = Extremum {
        achievers: records
            .iter()
            .filter(|r| r.subtrees == max_n)
            .map(|r| r.code.clone())
            .collect(),
        value: max_n,
    };
    (min_wiener, max_subtrees)
}

/// Outcome of checking the extremal construction against every tree with
/// the same eccentric sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    pub sequence: EccSequence,
    pub n: usize,
    pub trees_examined: usize,
    #[serde(serialize_with = "ser_tree")]
    pub construction: Tree,
    pub construction_code: CanonicalCode,
    pub min_wiener: Extremum<u64>,
    pub max_subtrees: Extremum<BigUint>,
    pub construction_is_min_w: bool,
    pub construction_is_max_n: bool,
    pub unique_min_w: bool,
    pub unique_max_n: bool,
}

impl ExtremalityReport {
    fn build(sequence: EccSequence, records: &[Scored]) -> Result<Self, EnumError> {
        let construction = extremal_tree(&sequence)?;
        let construction_code = construction.canonical_code();
        let (min_wiener, max_subtrees) = extrema(records);
        Ok(ExtremalityReport {
            n: sequence.len(),
            trees_examined: records.len(),
            construction_is_min_w: min_wiener.contains(&construction_code),
            construction_is_max_n: max_subtrees.contains(&construction_code),
            unique_min_w: min_wiener.is_unique(),
            unique_max_n: max_subtrees.is_unique(),
            sequence,
            construction,
            construction_code,
            min_wiener,
            max_subtrees,
        })
    }

    /// The construction is the one and only optimum for both indices.
    pub fn confirms(&self) -> bool {
        self.construction_is_min_w
            && self.construction_is_max_n
            && self.unique_min_w
            && self.unique_max_n
    }
}

impl fmt::Display for ExtremalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "sequence        {}", self.sequence)?;
        writeln!(f, "order           {}", self.n)?;
        writeln!(f, "trees examined  {}", self.trees_examined)?;
        writeln!(
            f,
            "min W           {} ({} achiever(s), construction: {}, unique: {})",
            self.min_wiener.value,
            self.min_wiener.achievers.len(),
            yn(self.construction_is_min_w),
            yn(self.unique_min_w)
        )?;
        writeln!(
            f,
            "max N           {} ({} achiever(s), construction: {}, unique: {})",
            self.max_subtrees.value,
            self.max_subtrees.achievers.len(),
            yn(self.construction_is_max_n),
            yn(self.unique_max_n)
        )?;
        write!(f, "construction\n{}", self.construction)
    }
}

pub fn verify_extremal(s: &EccSequence, budget: &Budget) -> Result<ExtremalityReport, EnumError> {
    s.ensure_valid()?;
    budget.check(s.len())?;
    let records: Vec<Scored> = trees_with_sequence(s)?
        .par_iter()
        .map(|t| Scored::of(t.canonical_code(), t))
        .collect();
    ExtremalityReport::build(s.clone(), &records)
}

/// Verifies every tree eccentric sequence of order `3..=budget.max_n()` in
/// one pass over all free trees. Reports are ordered by order, then by
/// sequence.
pub fn verify_all(budget: &Budget) -> Result<Vec<ExtremalityReport>, EnumError> {
    let mut reports = Vec::new();
    for n in 3..=budget.max_n() {
        let scored: Vec<(EccSequence, Scored)> = free_trees_with_codes(n)?
            .into_par_iter()
            .map(|(code, t)| (t.eccentric_sequence(), Scored::of(code, &t)))
            .collect();
        let mut groups: BTreeMap<EccSequence, Vec<Scored>> = BTreeMap::new();
        for (s, r) in scored {
            groups.entry(s).or_default().push(r);
        }
        for (s, records) in groups {
            reports.push(ExtremalityReport::build(s, &records)?);
        }
    }
    Ok(reports)
}

/// Checks the order-and-diameter extremal caterpillar against every tree
/// of order `n` and diameter `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderDiameterReport {
    pub n: usize,
    pub d: usize,
    pub trees_examined: usize,
    pub construction_code: CanonicalCode,
    pub min_wiener: Extremum<u64>,
    pub max_subtrees: Extremum<BigUint>,
    pub unique_min_w: bool,
    pub unique_max_n: bool,
    pub construction_is_min_w: bool,
    pub construction_is_max_n: bool,
}

impl OrderDiameterReport {
    pub fn confirms(&self) -> bool {
        self.construction_is_min_w
            && self.construction_is_max_n
            && self.unique_min_w
            && self.unique_max_n
    }
}

pub fn verify_order_diameter(
    n: usize,
    d: usize,
    budget: &Budget,
) -> Result<OrderDiameterReport, EnumError> {
    budget.check(n)?;
    let construction = min_wiener_order_diameter(n, d)?;
    let construction_code = construction.canonical_code();
    let records: Vec<Scored> = free_trees_with_codes(n)?
        .into_par_iter()
        .filter(|(_, t)| t.diameter() == d)
        .map(|(code, t)| Scored::of(code, &t))
        .collect();
    let (min_wiener, max_subtrees) = extrema(&records);
    Ok(OrderDiameterReport {
        n,
        d,
        trees_examined: records.len(),
        unique_min_w: min_wiener.is_unique(),
        unique_max_n: max_subtrees.is_unique(),
        construction_is_min_w: min_wiener.contains(&construction_code),
        construction_is_max_n: max_subtrees.contains(&construction_code),
        construction_code,
        min_wiener,
        max_subtrees,
    })
}
