//! Printed closed forms against the derivation formulas and brute force.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::verify::ser_display;
use super::EnumError;
use crate::extremal::{
    extremal_tree, max_subtrees_printed, max_subtrees_value, min_wiener_derivation,
    min_wiener_printed, printed_wiener_shortfall,
};
use crate::invariants::{subtree_count, wiener_pairwise};
use crate::seq::{valid_sequences, EccSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditDeltas {
    /// `derivation_W - printed_W`
    pub printed_w: i64,
    /// `sum_j j (m_{l+1-j} - 2)`, the predicted value of `printed_w`
    pub printed_w_expected: i64,
    /// `oracle_N - printed_N`
    #[serde(serialize_with = "ser_display")]
    pub printed_n: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFlags {
    /// Values of `p` with an empty inner sum in the printed subtree formula.
    pub empty_inner_sums: Vec<usize>,
    /// Factors of the printed subtree formula indexing below `m_1`.
    pub out_of_range_factors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub sequence: EccSequence,
    #[serde(rename = "oracle_W")]
    pub oracle_w: u64,
    #[serde(rename = "derivation_W")]
    pub derivation_w: i64,
    #[serde(rename = "printed_W")]
    pub printed_w: i64,
    #[serde(rename = "oracle_N", serialize_with = "ser_display")]
    pub oracle_n: BigUint,
    #[serde(rename = "decomposition_N", serialize_with = "ser_display")]
    pub decomposition_n: BigUint,
    #[serde(rename = "printed_N", serialize_with = "ser_display")]
    pub printed_n: BigRational,
    pub deltas: AuditDeltas,
    pub flags: AuditFlags,
}

impl AuditRow {
    pub fn compute(s: &EccSequence) -> Result<Self, EnumError> {
        let t = extremal_tree(s)?;
        let oracle_w = wiener_pairwise(&t);
        let oracle_n = subtree_count(&t);
        let derivation_w = min_wiener_derivation(s)?;
        let printed_w = min_wiener_printed(s)?;
        let decomposition_n = max_subtrees_value(s)?;
        let printed = max_subtrees_printed(s)?;
        let deltas = AuditDeltas {
            printed_w: derivation_w - printed_w,
            printed_w_expected: printed_wiener_shortfall(s),
            printed_n: BigRational::from_integer(BigInt::from(oracle_n.clone())) - &printed.value,
        };
        Ok(AuditRow {
            sequence: s.clone(),
            oracle_w,
            derivation_w,
            printed_w,
            oracle_n,
            decomposition_n,
            printed_n: printed.value,
            deltas,
            flags: AuditFlags {
                empty_inner_sums: printed.empty_inner_sums,
                out_of_range_factors: printed.out_of_range_factors,
            },
        })
    }

    /// Violated hard assertions; empty when the row is sound.
    pub fn hard_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.derivation_w != self.oracle_w as i64 {
            out.push("derivation_W != oracle_W");
        }
        if self.decomposition_n != self.oracle_n {
            out.push("decomposition_N != oracle_N");
        }
        if self.deltas.printed_w != self.deltas.printed_w_expected {
            out.push("printed_W shortfall identity");
        }
        out
    }

    pub fn printed_w_matches(&self) -> bool {
        self.printed_w == self.oracle_w as i64
    }

    pub fn printed_n_matches(&self) -> bool {
        self.deltas.printed_n == BigRational::from_integer(BigInt::from(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub rows: usize,
    pub printed_w_mismatches: usize,
    pub printed_n_mismatches: usize,
    pub hard_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub max_n: usize,
    pub rows: Vec<AuditRow>,
    pub summary: AuditSummary,
}

impl AuditReport {
    pub fn row(&self, s: &EccSequence) -> Option<&AuditRow> {
        self.rows.iter().find(|r| &r.sequence == s)
    }

    pub fn is_sound(&self) -> bool {
        self.summary.hard_failures == 0
    }
}

/// One row per tree eccentric sequence of order `3..=max_n`.
pub fn audit_formulas(max_n: usize) -> Result<AuditReport, EnumError> {
    let sequences: Vec<EccSequence> = (3..=max_n).flat_map(valid_sequences).collect();
    let rows = sequences
        .par_iter()
        .map(AuditRow::compute)
        .collect::<Result<Vec<_>, _>>()?;
    let summary = AuditSummary {
        rows: rows.len(),
        printed_w_mismatches: rows.iter().filter(|r| !r.printed_w_matches()).count(),
        printed_n_mismatches: rows.iter().filter(|r| !r.printed_n_matches()).count(),
        hard_failures: rows
            .iter()
            .filter(|r| !r.hard_failures().is_empty())
            .count(),
    };
    Ok(AuditReport {
        max_n,
        rows,
        summary,
    })
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<28} {:>8} {:>8} {:>8} {:>4} {:>10} {:>10} {:>12}  flags",
            "sequence", "W", "W deriv", "W print", "dW", "N", "N decomp", "N print"
        )?;
        for r in &self.rows {
            let mut flags = Vec::new();
            if !r.flags.empty_inner_sums.is_empty() {
                flags.push(format!("empty-inner{:?}", r.flags.empty_inner_sums));
            }
            if r.flags.out_of_range_factors > 0 {
                flags.push(format!("out-of-range={}", r.flags.out_of_range_factors));
            }
            for h in r.hard_failures() {
                flags.push(format!("FAIL {h}"));
            }
            writeln!(
                f,
                "{:<28} {:>8} {:>8} {:>8} {:>4} {:>10} {:>10} {:>12}  {}",
                r.sequence.to_string(),
                r.oracle_w,
                r.derivation_w,
                r.printed_w,
                r.deltas.printed_w,
                r.oracle_n.to_string(),
                r.decomposition_n.to_string(),
                r.printed_n.to_string(),
                flags.join(" ")
            )?;
        }
        write!(
            f,
            "rows {}  printed W mismatches {}  printed N mismatches {}  hard failures {}",
            self.summary.rows,
            self.summary.printed_w_mismatches,
            self.summary.printed_n_mismatches,
            self.summary.hard_failures
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> EccSequence {
        s.parse().unwrap()
    }

    #[test]
    fn seven_vertex_row() {
        let r = AuditRow::compute(&seq("2,3,3,4,4,4,4")).unwrap();
        assert_eq!(r.oracle_w, 46);
        assert_eq!(r.printed_w, 44);
        assert_eq!(r.deltas.printed_w, 2);
        assert_eq!(r.oracle_n, BigUint::from(41u32));
        assert_eq!(r.printed_n, BigRational::from_integer(25.into()));
        assert!(r.hard_failures().is_empty());
        assert!(!r.printed_w_matches() && !r.printed_n_matches());
    }

    #[test]
    fn star_row_agrees() {
        let r = AuditRow::compute(&seq("1,2,2,2")).unwrap();
        assert!(r.printed_n_matches());
        assert_eq!(r.printed_n, BigRational::from_integer(11.into()));
    }

    #[test]
    fn small_audit_is_sound() {
        let a = audit_formulas(9).unwrap();
        assert!(a.is_sound());
        assert_eq!(a.summary.rows, a.rows.len());
        assert!(a
            .rows
            .iter()
            .all(|r| r.deltas.printed_w == r.deltas.printed_w_expected));
        let j = serde_json::to_value(&a).unwrap();
        assert!(j["rows"][0].get("oracle_W").is_some());
        assert!(a.to_string().lines().count() == a.rows.len() + 2);
    }
}
