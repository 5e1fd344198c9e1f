//! Distance-based indices of trees.
//!
//! Every index is computed from its definition (pair sums over the
//! distance matrix). The Wiener index additionally has a linear-time edge
//! contribution route, and the report records the residuals of the known
//! linear relations between the Wiener index and its variants on trees.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::tree::Tree;

/// Relative tolerance used when comparing λ-indices.
pub const LAMBDA_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum InvariantError {
    #[error("the distance exponent must be nonzero")]
    ZeroLambda,
    #[error("the distance exponent must be finite, got {0}")]
    NonFiniteLambda(f64),
}

/// Wiener index as `sum over edges of s (n - s)`, where `s` is the size of
/// one side of the edge.
pub fn wiener(t: &Tree) -> u64 {
    let n = t.order();
    let (depth, parent) = t.bfs(0);
    // deepest vertices first, so subtree sizes are complete when used
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    let mut size = vec![1u64; n];
    let mut w = 0;
    for v in order {
        if v != 0 {
            w += size[v] * (n as u64 - size[v]);
            size[parent[v]] += size[v];
        }
    }
    w
}

/// Wiener index by summing the all-pairs distance matrix.
pub fn wiener_pairwise(t: &Tree) -> u64 {
    pair_sum(t, |d, _, _| d as u64)
}

fn pair_sum(t: &Tree, mut f: impl FnMut(usize, usize, usize) -> u64) -> u64 {
    let dm = t.distance_matrix();
    let mut total = 0;
    for (u, row) in dm.iter().enumerate() {
        for (v, &d) in row.iter().enumerate().skip(u + 1) {
            total += f(d, u, v);
        }
    }
    total
}

/// Number of subtrees. With a fixed root, `g(v) = prod (1 + g(child))`
/// counts the subtrees whose vertex nearest the root is `v`.
pub fn subtree_count(t: &Tree) -> BigUint {
    let (depth, parent) = t.bfs(0);
    let mut order: Vec<usize> = (0..t.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    let mut g = vec![BigUint::one(); t.order()];
    let mut total = BigUint::default();
    for v in order {
        total += &g[v];
        if v != 0 {
            let up = &g[v] + 1u32;
            g[parent[v]] *= up;
        }
    }
    total
}

fn edge_distance(dm: &[Vec<usize>], e: (usize, usize), f: (usize, usize)) -> usize {
    dm[e.0][f.0]
        .min(dm[e.0][f.1])
        .min(dm[e.1][f.0])
        .min(dm[e.1][f.1])
}

fn edge_pairs(t: &Tree, mut visit: impl FnMut(usize)) {
    let dm = t.distance_matrix();
    let edges = t.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            visit(edge_distance(&dm, e, f));
        }
    }
}

/// Edge Wiener index: sum over unordered edge pairs of the distance
/// between their nearest endpoints.
pub fn edge_wiener(t: &Tree) -> u64 {
    let mut total = 0;
    edge_pairs(t, |d| total += d as u64);
    total
}

/// Edge Wiener index with line-graph distances `d(e, f) + 1`.
pub fn edge_wiener_line(t: &Tree) -> u64 {
    let mut total = 0;
    edge_pairs(t, |d| total += d as u64 + 1);
    total
}

/// Half the sum of vertex-to-edge distances over all vertex, edge pairs.
pub fn vertex_edge_wiener(t: &Tree) -> Rational64 {
    let dm = t.distance_matrix();
    let mut sum: i64 = 0;
    for row in &dm {
        for &(a, b) in t.edges() {
            sum += row[a].min(row[b]) as i64;
        }
    }
    Rational64::new(sum, 2)
}

/// Schultz index (degree distance).
pub fn schultz(t: &Tree) -> u64 {
    pair_sum(t, |d, u, v| (d * (t.degree(u) + t.degree(v))) as u64)
}

/// Gutman index.
pub fn gutman(t: &Tree) -> u64 {
    pair_sum(t, |d, u, v| (d * t.degree(u) * t.degree(v)) as u64)
}

/// Hyper-Wiener index, `sum C(1 + d, 2)`.
pub fn hyper_wiener(t: &Tree) -> u64 {
    pair_sum(t, |d, _, _| (d * (d + 1) / 2) as u64)
}

pub fn wiener_lambda(t: &Tree, lambda: f64) -> Result<f64, InvariantError> {
    if lambda == 0.0 {
        return Err(InvariantError::ZeroLambda);
    }
    if !lambda.is_finite() {
        return Err(InvariantError::NonFiniteLambda(lambda));
    }
    let dm = t.distance_matrix();
    let mut total = 0.0;
    for (u, row) in dm.iter().enumerate() {
        for &d in &row[u + 1..] {
            total += (d as f64).powf(lambda);
        }
    }
    Ok(total)
}

/// Key used for λ values in maps and JSON.
pub fn lambda_key(lambda: f64) -> String {
    format!("{lambda}")
}

/// Every index of one tree, plus the residuals `computed - predicted` of
/// the tree relations between the Wiener index and its variants.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub n: usize,
    pub wiener: u64,
    pub subtrees: BigUint,
    pub edge_wiener: u64,
    pub edge_wiener_line: u64,
    pub vertex_edge_wiener: Rational64,
    pub schultz: u64,
    pub gutman: u64,
    pub hyper_wiener: u64,
    pub wiener_lambda: Vec<(f64, f64)>,
    pub relation_residuals: RelationResiduals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationResiduals {
    /// `W_e - (W - (n-1)^2)`
    pub edge_wiener: i64,
    /// `W'_e - (W_e + C(n-1, 2))`
    pub edge_wiener_line: i64,
    /// `W_ve - (W - n(n-1)/2)`
    #[serde(serialize_with = "ser_rational")]
    pub vertex_edge_wiener: Rational64,
    /// `W_+ - (4W - n(n-1))`
    pub schultz: i64,
    /// `W_- - (4W - (n-1)(2n-1))`
    pub gutman: i64,
    /// `2 HW - (W + sum d^2)`
    pub hyper_wiener: i64,
}

impl RelationResiduals {
    pub fn all_zero(&self) -> bool {
        self.edge_wiener == 0
            && self.edge_wiener_line == 0
            && self.vertex_edge_wiener == Rational64::from_integer(0)
            && self.schultz == 0
            && self.gutman == 0
            && self.hyper_wiener == 0
    }
}

fn ser_rational<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn invariant_report(t: &Tree, lambdas: &[f64]) -> Result<InvariantReport, InvariantError> {
    let n = t.order() as i64;
    let w = wiener(t);
    let wi = w as i64;
    let we = edge_wiener(t);
    let wel = edge_wiener_line(t);
    let wve = vertex_edge_wiener(t);
    let wp = schultz(t);
    let wm = gutman(t);
    let hw = hyper_wiener(t);
    let squares = pair_sum(t, |d, _, _| (d * d) as u64) as i64;
    let wiener_lambda = lambdas
        .iter()
        .map(|&l| wiener_lambda(t, l).map(|v| (l, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let relation_residuals = RelationResiduals {
        edge_wiener: we as i64 - (wi - (n - 1) * (n - 1)),
        edge_wiener_line: wel as i64 - (we as i64 + (n - 1) * (n - 2) / 2),
        vertex_edge_wiener: wve - Rational64::new(2 * wi - n * (n - 1), 2),
        schultz: wp as i64 - (4 * wi - n * (n - 1)),
        gutman: wm as i64 - (4 * wi - (n - 1) * (2 * n - 1)),
        hyper_wiener: 2 * hw as i64 - (wi + squares),
    };
    Ok(InvariantReport {
        n: t.order(),
        wiener: w,
        subtrees: subtree_count(t),
        edge_wiener: we,
        edge_wiener_line: wel,
        vertex_edge_wiener: wve,
        schultz: wp,
        gutman: wm,
        hyper_wiener: hw,
        wiener_lambda,
        relation_residuals,
    })
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let lambdas: BTreeMap<String, f64> = self
            .wiener_lambda
            .iter()
            .map(|&(l, v)| (lambda_key(l), v))
            .collect();
        let mut map = s.serialize_map(Some(11))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("wiener", &self.wiener)?;
        map.serialize_entry("subtrees", &self.subtrees.to_string())?;
        map.serialize_entry("edge_wiener", &self.edge_wiener)?;
        map.serialize_entry("edge_wiener_line", &self.edge_wiener_line)?;
        map.serialize_entry("vertex_edge_wiener", &self.vertex_edge_wiener.to_string())?;
        map.serialize_entry("schultz", &self.schultz)?;
        map.serialize_entry("gutman", &self.gutman)?;
        map.serialize_entry("hyper_wiener", &self.hyper_wiener)?;
        map.serialize_entry("wiener_lambda", &lambdas)?;
        map.serialize_entry("relation_residuals", &self.relation_residuals)?;
        map.end()
    }
}
