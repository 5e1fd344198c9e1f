//! The caterpillars 𝕋(t_1, ..., t_r), the extremal tree of an eccentric
//! sequence, and closed forms for its Wiener index and subtree count.
//!
//! Two families of closed forms live here. The "derivation" and
//! "decomposition" evaluators follow the partition argument (path, then
//! pendant classes) and are expected to agree with brute force. The
//! "printed" evaluators reproduce the published closed forms term for term and
//! are only ever compared against the others, never trusted.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::seq::{EccSequence, NotTreeSequence};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("path parameter q must be at least 1")]
    ZeroPath,
    #[error("q = {q} needs {expected} pendant counts, got {found}")]
    Arity {
        q: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Sequence(#[from] NotTreeSequence),
    #[error("no tree of order {n} has diameter {d}")]
    OrderDiameter { n: usize, d: usize },
    #[error("invalid decomposition: {0}")]
    Decomposition(&'static str),
    #[error("internal defect: construction for {expected} has eccentric sequence {found}")]
    ConstructionMismatch { expected: String, found: String },
}

/// 𝕋(t_1..t_r): the path `v_0..v_{q+1}` with `t_j` extra pendants on `v_j`,
/// `r = ceil(q / 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    q: usize,
    t: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(q: usize, t: Vec<usize>) -> Result<Self, ExtremalError> {
        if q == 0 {
            return Err(ExtremalError::ZeroPath);
        }
        let expected = q.div_ceil(2);
        if t.len() != expected {
            return Err(ExtremalError::Arity {
                q,
                expected,
                found: t.len(),
            });
        }
        Ok(CaterpillarSpec { q, t })
    }

    pub fn for_sequence(s: &EccSequence) -> Result<Self, ExtremalError> {
        let (q, t) = s.extremal_params()?;
        Self::new(q, t)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn pendants(&self) -> &[usize] {
        &self.t
    }

    pub fn order(&self) -> usize {
        self.q + 2 + self.t.iter().sum::<usize>()
    }

    /// Pendant counts per backbone position, path ends included.
    pub fn decomposition(&self) -> CaterpillarDecomposition {
        let mut c = vec![0; self.q];
        for (i, &tj) in self.t.iter().enumerate() {
            c[i] += tj;
        }
        c[0] += 1;
        c[self.q - 1] += 1;
        CaterpillarDecomposition { c }
    }

    /// Path vertices get ids `0..=q+1` in order; pendants follow in
    /// position order.
    pub fn build(&self) -> Tree {
        let mut edges: Vec<(usize, usize)> = (1..self.q + 2).map(|i| (i - 1, i)).collect();
        let mut next = self.q + 2;
        for (j, &tj) in self.t.iter().enumerate() {
            for _ in 0..tj {
                edges.push((j + 1, next));
                next += 1;
            }
        }
        Tree::from_edges(next, &edges).expect("caterpillar edges form a tree")
    }
}

/// Pendant counts `c_1..c_q` around the backbone of a caterpillar,
/// counting the two ends of a longest path as pendants of positions 1
/// and q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarDecomposition {
    c: Vec<usize>,
}

impl CaterpillarDecomposition {
    pub fn new(c: Vec<usize>) -> Result<Self, ExtremalError> {
        match c.len() {
            0 => return Err(ExtremalError::Decomposition("empty backbone")),
            1 if c[0] < 2 => {
                return Err(ExtremalError::Decomposition(
                    "single backbone vertex needs two pendants",
                ))
            }
            _ => {}
        }
        if c[0] == 0 || c[c.len() - 1] == 0 {
            return Err(ExtremalError::Decomposition("backbone ends need a pendant"));
        }
        Ok(CaterpillarDecomposition { c })
    }

    /// Reads the decomposition off a caterpillar with a nonempty backbone.
    pub fn of_tree(t: &Tree) -> Option<Self> {
        let bb = t.backbone();
        if !bb.is_caterpillar || bb.path.is_empty() || t.order() < 3 {
            return None;
        }
        let c = bb
            .path
            .iter()
            .map(|&v| t.neighbors(v).iter().filter(|&&w| t.is_pendant(w)).count())
            .collect();
        Some(CaterpillarDecomposition { c })
    }

    pub fn counts(&self) -> &[usize] {
        &self.c
    }

    pub fn backbone_len(&self) -> usize {
        self.c.len()
    }

    pub fn order(&self) -> usize {
        self.c.len() + self.c.iter().sum::<usize>()
    }

    /// `|D_j| = c_j + c_{q+1-j}` for `j = 1..ceil(q/2)`, the middle
    /// position counted once.
    pub fn paired_sizes(&self) -> Vec<usize> {
        let q = self.c.len();
        (1..=q.div_ceil(2))
            .map(|j| {
                let mirror = q + 1 - j;
                if mirror == j {
                    self.c[j - 1]
                } else {
                    self.c[j - 1] + self.c[mirror - 1]
                }
            })
            .collect()
    }

    pub fn build(&self) -> Tree {
        let q = self.c.len();
        let mut edges: Vec<(usize, usize)> = (1..q).map(|i| (i - 1, i)).collect();
        let mut next = q;
        for (i, &ci) in self.c.iter().enumerate() {
            for _ in 0..ci {
                edges.push((i, next));
                next += 1;
            }
        }
        Tree::from_edges(next, &edges).expect("caterpillar edges form a tree")
    }

    /// Number of subtrees: single pendants, plus for every backbone subpath
    /// `v_j..v_k` one subtree per subset of the pendants hanging from it.
    pub fn subtree_count(&self) -> BigUint {
        let q = self.c.len();
        let mut total = BigUint::from(q * (q + 1) / 2 + self.c.iter().sum::<usize>());
        for j in 0..q {
            let mut pendants = 0usize;
            for k in j..q {
                pendants += self.c[k];
                total += (BigUint::one() << pendants) - 1u32;
            }
        }
        total
    }
}

pub fn build_caterpillar(spec: &CaterpillarSpec) -> Tree {
    spec.build()
}

pub fn caterpillar_subtree_closed_form(dec: &CaterpillarDecomposition) -> BigUint {
    dec.subtree_count()
}

/// The caterpillar 𝕋(m_l - 2, ..., m_2 - 2), re-checked against `s`.
pub fn extremal_tree(s: &EccSequence) -> Result<Tree, ExtremalError> {
    let t = CaterpillarSpec::for_sequence(s)?.build();
    let found = t.eccentric_sequence();
    if &found != s {
        return Err(ExtremalError::ConstructionMismatch {
            expected: s.to_string(),
            found: found.to_string(),
        });
    }
    Ok(t)
}

fn binom(a: i64, k: u32) -> i64 {
    if a < k as i64 {
        return 0;
    }
    (0..k as i64).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

/// Minimum Wiener index from the partition of the extremal caterpillar
/// into the longest path and the pendant classes `D_j`.
pub fn min_wiener_derivation(s: &EccSequence) -> Result<i64, ExtremalError> {
    s.ensure_valid()?;
    let l = s.distinct();
    let q = s.diameter() as i64 - 1;
    let r = (q as usize).div_ceil(2);
    // sizes of the pendant classes, D_j = M_j - 2
    let d: Vec<i64> = (1..=r).map(|j| s.m(l + 1 - j) as i64 - 2).collect();
    let mut w = binom(q + 3, 3);
    for j in 1..=r {
        let dj = d[j - 1];
        w += dj * (dj - 1);
        w += ((q + 2) + binom(j as i64 + 1, 2) + binom(q + 2 - j as i64, 2)) * dj;
        for i in 1..j {
            w += d[i - 1] * dj * (2 + (j - i) as i64);
        }
    }
    Ok(w)
}

/// Minimum Wiener index as stated in closed form in terms of `b_l` and the
/// multiplicities, evaluated literally.
pub fn min_wiener_printed(s: &EccSequence) -> Result<i64, ExtremalError> {
    s.ensure_valid()?;
    let l = s.distinct();
    let bl = s.diameter() as i64;
    let m = |j: usize| s.m(j) as i64;
    let mut w = binom(bl + 2, 3);
    for j in 2..=l {
        w += (m(j) - 2) * (m(j) - 3);
    }
    for j in 2..=l {
        for i in 2..j {
            w += (m(i) - 2) * (m(j) - 2) * (2 + (j - i) as i64);
        }
    }
    for j in 1..l {
        w += (binom(j as i64, 2) + binom(bl + 1 - j as i64, 2)) * (m(l + 1 - j) - 2);
    }
    let tail: i64 = (2..=l).map(m).sum();
    w += (bl + 1) * (2 - 2 * l as i64 + tail);
    Ok(w)
}

/// `sum_{j=1}^{l-1} j (m_{l+1-j} - 2)`: the amount by which the printed
/// Wiener expression falls short of the derivation.
pub fn printed_wiener_shortfall(s: &EccSequence) -> i64 {
    let l = s.distinct();
    (1..l).map(|j| j as i64 * (s.m(l + 1 - j) as i64 - 2)).sum()
}

pub fn max_subtrees_value(s: &EccSequence) -> Result<BigUint, ExtremalError> {
    Ok(CaterpillarSpec::for_sequence(s)?
        .decomposition()
        .subtree_count())
}

/// Literal value of the printed subtree expression, with notes on the
/// places where the expression leaves its natural range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedSubtrees {
    pub value: BigRational,
    /// Values of `p` for which the inner sum over `j` is empty.
    pub empty_inner_sums: Vec<usize>,
    /// Product factors that refer to `m_k` with `k < 1`; they are skipped.
    pub out_of_range_factors: usize,
}

fn pow2(e: i64) -> BigRational {
    let base = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// Evaluates the printed maximum-subtree expression verbatim: empty sums
/// are 0, empty products 1, and negative exponents are kept exact.
pub fn max_subtrees_printed(s: &EccSequence) -> Result<PrintedSubtrees, ExtremalError> {
    s.ensure_valid()?;
    let l = s.distinct() as i64;
    let bl = s.diameter() as i64;
    let m = |j: i64| s.m(j as usize) as i64;
    let one = BigRational::one();
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));

    let mut value = int(binom(bl, 2) - 2 * (l - 2) + (2..=l).map(m).sum::<i64>());
    let mut empty_inner_sums = Vec::new();
    let mut out_of_range_factors = 0;
    for p in 0..=bl - 2 {
        let mut head = pow2(m(l)) - &one;
        for i in 1..=p {
            let k = l - i;
            if k < 1 {
                out_of_range_factors += 1;
                continue;
            }
            head *= pow2(m(k) - 2) - &one;
        }
        value += head;
        let upper = l - 3 + m(1) - p;
        if upper < 2 {
            empty_inner_sums.push(p as usize);
        }
        for j in 2..=upper {
            let mut prod = one.clone();
            for i in 0..=p {
                let k = l + 1 - i - j;
                if k < 1 {
                    out_of_range_factors += 1;
                    continue;
                }
                prod *= pow2(m(k) - 2) - &one;
            }
            value += prod;
        }
    }
    Ok(PrintedSubtrees {
        value,
        empty_inner_sums,
        out_of_range_factors,
    })
}

pub fn order_diameter_spec(n: usize, d: usize) -> Result<CaterpillarSpec, ExtremalError> {
    if d < 2 || d + 1 > n {
        return Err(ExtremalError::OrderDiameter { n, d });
    }
    let r = d / 2;
    let mut t = vec![0; r];
    t[r - 1] = n - d - 1;
    CaterpillarSpec::new(d - 1, t)
}

/// 𝕋(0, ..., 0, n - d - 1) with `floor(d/2) - 1` zeros: the tree of order
/// `n` and diameter `d` with the fewest total distance and the most
/// subtrees.
pub fn min_wiener_order_diameter(n: usize, d: usize) -> Result<Tree, ExtremalError> {
    Ok(order_diameter_spec(n, d)?.build())
}
