//! Eccentric sequences and the tree-realisability test.
//!
//! A sequence is kept both as the raw nondecreasing list and as its
//! run-length view `(b1, m_1..m_l)`, where the distinct values are
//! `b1, b1 + 1, ..., b1 + l - 1`. Two text syntaxes are accepted: a
//! comma list `2,3,3,4,4` and the compact `2^1,3^2,4^2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("not a positive integer: {0:?}")]
    BadToken(String),
    #[error("zero multiplicity for value {0}")]
    ZeroMultiplicity(u32),
    #[error("sequence decreases at position {0}")]
    Decreasing(usize),
    #[error("gap between distinct values {0} and {1}")]
    Gap(u32, u32),
}

/// Why a sequence is not the eccentric sequence of a tree. The variants
/// are listed in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InvalidReason {
    /// Two or fewer entries.
    TooShort,
    /// The radius does not match the diameter with the right centre size.
    CondI,
    /// Some value above the radius occurs fewer than twice.
    CondII,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvalidReason::TooShort => "TooShort",
            InvalidReason::CondI => "CondI",
            InvalidReason::CondII => "CondII",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(InvalidReason),
}

impl Validity {
    pub fn is_valid(self) -> bool {
        self == Validity::Valid
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("not a tree eccentric sequence ({0})")]
pub struct NotTreeSequence(pub InvalidReason);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EccSequence {
    raw: Vec<u32>,
    b1: u32,
    mult: Vec<usize>,
}

impl EccSequence {
    /// Builds from a raw list, checking it is nondecreasing without gaps.
    pub fn from_raw(raw: Vec<u32>) -> Result<Self, SequenceError> {
        if raw.is_empty() {
            return Err(SequenceError::Empty);
        }
        for (i, w) in raw.windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(SequenceError::Decreasing(i + 1));
            }
            if w[1] > w[0] + 1 {
                return Err(SequenceError::Gap(w[0], w[1]));
            }
        }
        Ok(Self::from_sorted_unchecked(raw))
    }

    /// `mult[j]` is the number of entries equal to `b1 + j`.
    pub fn from_compact(b1: u32, mult: &[usize]) -> Result<Self, SequenceError> {
        if mult.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(j) = mult.iter().position(|&m| m == 0) {
            return Err(SequenceError::ZeroMultiplicity(b1 + j as u32));
        }
        let raw = mult
            .iter()
            .enumerate()
            .flat_map(|(j, &m)| std::iter::repeat_n(b1 + j as u32, m))
            .collect();
        Ok(EccSequence {
            raw,
            b1,
            mult: mult.to_vec(),
        })
    }

    /// Caller guarantees a sorted list without gaps.
    pub(crate) fn from_sorted_unchecked(raw: Vec<u32>) -> Self {
        let b1 = raw.first().copied().unwrap_or(0);
        let mut mult: Vec<usize> = Vec::new();
        for &a in &raw {
            let j = (a - b1) as usize;
            if j == mult.len() {
                mult.push(0);
            }
            mult[j] += 1;
        }
        EccSequence { raw, b1, mult }
    }

    /// Accepts the comma list or the compact `value^multiplicity` form.
    /// A bare token in compact form stands for multiplicity one.
    pub fn parse(text: &str) -> Result<Self, SequenceError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(SequenceError::Empty);
        }
        let positive = |tok: &str| -> Result<u32, SequenceError> {
            match tok.trim().parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(SequenceError::BadToken(tok.trim().to_string())),
            }
        };
        let mut raw = Vec::new();
        for tok in text.split(',') {
            match tok.split_once('^') {
                Some((value, count)) => {
                    let value = positive(value)?;
                    let count: usize = count
                        .trim()
                        .parse()
                        .map_err(|_| SequenceError::BadToken(tok.trim().to_string()))?;
                    if count == 0 {
                        return Err(SequenceError::ZeroMultiplicity(value));
                    }
                    raw.extend(std::iter::repeat_n(value, count));
                }
                None => raw.push(positive(tok)?),
            }
        }
        Self::from_raw(raw)
    }

    pub fn raw(&self) -> &[u32] {
        &self.raw
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    /// Radius `b_1`.
    pub fn radius(&self) -> u32 {
        self.b1
    }

    /// Diameter `b_l`.
    pub fn diameter(&self) -> u32 {
        self.b1 + self.mult.len() as u32 - 1
    }

    /// Number of distinct values `l`.
    pub fn distinct(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// 1-based multiplicity `m_j`, for `1 <= j <= l`.
    pub fn m(&self, j: usize) -> usize {
        self.mult[j - 1]
    }

    pub fn validate(&self) -> Validity {
        let a = &self.raw;
        let n = a.len();
        if n <= 2 {
            return Validity::Invalid(InvalidReason::TooShort);
        }
        let (a1, a2, a3, an) = (a[0], a[1], a[2], a[n - 1]);
        let bicentral = a1 == a2 && 2 * a1 == 1 + an && a2 != a3;
        let central = 2 * a1 == an && a1 != a2;
        if !(central || bicentral) {
            return Validity::Invalid(InvalidReason::CondI);
        }
        // every k in (a1, an] sits at some a_j = a_{j+1} with 2 <= j <= n-1
        for k in a1 + 1..=an {
            if !(1..n - 1).any(|j| a[j] == k && a[j + 1] == k) {
                return Validity::Invalid(InvalidReason::CondII);
            }
        }
        Validity::Valid
    }

    pub fn is_tree_sequence(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn ensure_valid(&self) -> Result<(), NotTreeSequence> {
        match self.validate() {
            Validity::Valid => Ok(()),
            Validity::Invalid(r) => Err(NotTreeSequence(r)),
        }
    }

    /// Parameters of the extremal caterpillar: the path parameter
    /// `q = b_l - 1` and pendant counts `t_j = m_{l+1-j} - 2`, `j = 1..l-1`.
    pub fn extremal_params(&self) -> Result<(usize, Vec<usize>), NotTreeSequence> {
        self.ensure_valid()?;
        let l = self.distinct();
        let q = self.diameter() as usize - 1;
        let t = (1..l).map(|j| self.m(l + 1 - j) - 2).collect();
        Ok((q, t))
    }

    pub fn to_raw_string(&self) -> String {
        let parts: Vec<String> = self.raw.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    pub fn to_compact_string(&self) -> String {
        let parts: Vec<String> = self
            .mult
            .iter()
            .enumerate()
            .map(|(j, m)| format!("{}^{}", self.b1 + j as u32, m))
            .collect();
        parts.join(",")
    }
}

/// Every tree eccentric sequence with exactly `n` entries, ordered by
/// diameter and then lexicographically by multiplicities.
pub fn valid_sequences(n: usize) -> Vec<EccSequence> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for diameter in 2..n as u32 {
        let b1 = diameter.div_ceil(2);
        let m1 = if diameter % 2 == 0 { 1 } else { 2 };
        let parts = (diameter - b1) as usize;
        let mut mult = vec![m1];
        compositions(n - m1, parts, 2, &mut mult, &mut |m| {
            out.push(EccSequence::from_compact(b1, m).expect("nonzero multiplicities"));
        });
    }
    out
}

/// Calls `emit` with `prefix` extended by every composition of `total`
/// into `parts` parts, each at least `min`.
fn compositions(
    total: usize,
    parts: usize,
    min: usize,
    prefix: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if parts == 0 {
        if total == 0 {
            emit(prefix);
        }
        return;
    }
    if total < parts * min {
        return;
    }
    for first in min..=total - (parts - 1) * min {
        prefix.push(first);
        compositions(total - first, parts - 1, min, prefix, emit);
        prefix.pop();
    }
}

impl fmt::Display for EccSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Debug for EccSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EccSequence({})", self.to_raw_string())
    }
}

impl FromStr for EccSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EccSequence::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct CompactJson {
    b1: u32,
    mult: Vec<usize>,
}

impl Serialize for EccSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CompactJson {
            b1: self.b1,
            mult: self.mult.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EccSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = CompactJson::deserialize(d)?;
        EccSequence::from_compact(c.b1, &c.mult).map_err(serde::de::Error::custom)
    }
}
