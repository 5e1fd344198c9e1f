//! Evidence for the open question whether the Wiener-extremal caterpillar
//! also minimises the hyper-Wiener index and `W(T; lambda)` for
//! `lambda >= 1`. Nothing here asserts the answer.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::verify::ser_tree;
use super::{free_trees_with_codes, Budget, EnumError};
use crate::canon::CanonicalCode;
use crate::extremal::extremal_tree;
use crate::invariants::{hyper_wiener, lambda_key, wiener, wiener_lambda, LAMBDA_TOLERANCE};
use crate::seq::EccSequence;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexKind {
    HyperWiener,
    Lambda(f64),
}

impl IndexKind {
    fn eval(&self, t: &Tree) -> Result<f64, EnumError> {
        Ok(match *self {
            IndexKind::HyperWiener => hyper_wiener(t) as f64,
            IndexKind::Lambda(l) => wiener_lambda(t, l)?,
        })
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::HyperWiener => write!(f, "HW"),
            IndexKind::Lambda(l) => write!(f, "W({})", lambda_key(*l)),
        }
    }
}

impl Serialize for IndexKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= LAMBDA_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

/// Minimisers of one index over the trees of one sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexEvidence {
    pub index: IndexKind,
    pub min_value: f64,
    pub construction_value: f64,
    /// Every tree within tolerance of the minimum, sorted by code.
    pub minimizers: Vec<CanonicalCode>,
    pub construction_is_minimizer: bool,
    pub unique: bool,
    /// The minimiser set equals the Wiener minimiser set.
    pub matches_wiener: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceEvidence {
    pub sequence: EccSequence,
    pub n: usize,
    pub trees_examined: usize,
    pub construction_code: CanonicalCode,
    pub wiener_minimizers: Vec<CanonicalCode>,
    pub indices: Vec<IndexEvidence>,
}

/// A sequence where the construction is not among the minimisers of an
/// index, with both trees written out.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub sequence: EccSequence,
    pub index: IndexKind,
    #[serde(serialize_with = "ser_tree")]
    pub construction: Tree,
    pub construction_value: f64,
    #[serde(serialize_with = "ser_tree")]
    pub minimizer: Tree,
    pub minimizer_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexSummary {
    pub index: IndexKind,
    pub sequences: usize,
    pub construction_minimal: usize,
    pub construction_unique: usize,
    pub matches_wiener: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub max_n: usize,
    pub lambdas: Vec<f64>,
    pub summary: Vec<IndexSummary>,
    pub sequences: Vec<SequenceEvidence>,
    pub counterexamples: Vec<Counterexample>,
}

struct Scored {
    code: CanonicalCode,
    tree: Tree,
    wiener: u64,
    values: Vec<f64>,
}

/// Explores HW and `W(.; lambda)` for every listed `lambda` over all tree
/// eccentric sequences of order `3..=budget.max_n()`.
pub fn explore_conjecture(budget: &Budget, lambdas: &[f64]) -> Result<ConjectureReport, EnumError> {
    let kinds: Vec<IndexKind> = std::iter::once(IndexKind::HyperWiener)
        .chain(lambdas.iter().map(|&l| IndexKind::Lambda(l)))
        .collect();
    let probe = Tree::path(2).expect("edge");
    for k in &kinds {
        k.eval(&probe)?;
    }

    let mut sequences = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 3..=budget.max_n() {
        let scored = free_trees_with_codes(n)?
            .into_par_iter()
            .map(|(code, tree)| {
                let values = kinds
                    .iter()
                    .map(|k| k.eval(&tree))
                    .collect::<Result<_, _>>()?;
                Ok((
                    tree.eccentric_sequence(),
                    Scored {
                        wiener: wiener(&tree),
                        code,
                        tree,
                        values,
                    },
                ))
            })
            .collect::<Result<Vec<_>, EnumError>>()?;
        let mut groups: BTreeMap<EccSequence, Vec<Scored>> = BTreeMap::new();
        for (s, r) in scored {
            groups.entry(s).or_default().push(r);
        }
        for (s, records) in groups {
            let (ev, cx) = evidence(s, &records, &kinds)?;
            sequences.push(ev);
            counterexamples.extend(cx);
        }
    }

    let summary = kinds
        .iter()
        .enumerate()
        .map(|(i, &index)| {
            let col = || {
                sequences
                    .iter()
                    .map(move |s: &SequenceEvidence| &s.indices[i])
            };
            IndexSummary {
                index,
                sequences: sequences.len(),
                construction_minimal: col().filter(|e| e.construction_is_minimizer).count(),
                construction_unique: col()
                    .filter(|e| e.construction_is_minimizer && e.unique)
                    .count(),
                matches_wiener: col().filter(|e| e.matches_wiener).count(),
            }
        })
        .collect();

    Ok(ConjectureReport {
        max_n: budget.max_n(),
        lambdas: lambdas.to_vec(),
        summary,
        sequences,
        counterexamples,
    })
}

fn evidence(
    sequence: EccSequence,
    records: &[Scored],
    kinds: &[IndexKind],
) -> Result<(SequenceEvidence, Vec<Counterexample>), EnumError> {
    let construction = extremal_tree(&sequence)?;
    let construction_code = construction.canonical_code();
    let at = records
        .iter()
        .position(|r| r.code == construction_code)
        .expect("construction realises its own sequence");
    let min_w = records
        .iter()
        .map(|r| r.wiener)
        .min()
        .expect("nonempty group");
    let wiener_minimizers: Vec<CanonicalCode> = records
        .iter()
        .filter(|r| r.wiener == min_w)
        .map(|r| r.code.clone())
        .collect();

    let mut indices = Vec::with_capacity(kinds.len());
    let mut counterexamples = Vec::new();
    for (i, &index) in kinds.iter().enumerate() {
        let min_value = records
            .iter()
            .map(|r| r.values[i])
            .fold(f64::INFINITY, f64::min);
        let minimizers: Vec<&Scored> = records
            .iter()
            .filter(|r| near(r.values[i], min_value))
            .collect();
        let codes: Vec<CanonicalCode> = minimizers.iter().map(|r| r.code.clone()).collect();
        let construction_value = records[at].values[i];
        let construction_is_minimizer = codes.contains(&construction_code);
        if !construction_is_minimizer {
            let best = minimizers[0];
            counterexamples.push(Counterexample {
                sequence: sequence.clone(),
                index,
                construction: construction.clone(),
                construction_value,
                minimizer: best.tree.clone(),
                minimizer_value: best.values[i],
            });
        }
        indices.push(IndexEvidence {
            index,
            min_value,
            construction_value,
            unique: codes.len() == 1,
            matches_wiener: codes == wiener_minimizers,
            construction_is_minimizer,
            minimizers: codes,
        });
    }

    Ok((
        SequenceEvidence {
            n: sequence.len(),
            trees_examined: records.len(),
            sequence,
            construction_code,
            wiener_minimizers,
            indices,
        },
        counterexamples,
    ))
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // U: construction is the unique minimiser, T: tied minimiser, x: not minimal
        write!(f, "{:<28} {:>6}", "sequence", "trees")?;
        for s in &self.summary {
            write!(f, " {:>8}", s.index.to_string())?;
        }
        writeln!(f)?;
        for ev in &self.sequences {
            write!(
                f,
                "{:<28} {:>6}",
                ev.sequence.to_string(),
                ev.trees_examined
            )?;
            for e in &ev.indices {
                let mark = match (e.construction_is_minimizer, e.unique) {
                    (true, true) => "U",
                    (true, false) => "T",
                    (false, _) => "x",
                };
                write!(f, " {:>8}", mark)?;
            }
            writeln!(f)?;
        }
        for s in &self.summary {
            writeln!(
                f,
                "{}: construction minimal in {}/{} (unique in {}), same minimisers as W in {}",
                s.index,
                s.construction_minimal,
                s.sequences,
                s.construction_unique,
                s.matches_wiener
            )?;
        }
        write!(f, "counterexamples: {}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            write!(
                f,
                "\n{} on {}: construction {} vs minimum {}\nconstruction\n{}minimizer\n{}",
                c.index,
                c.sequence,
                c.construction_value,
                c.minimizer_value,
                c.construction,
                c.minimizer
            )?;
        }
        Ok(())
    }
}
