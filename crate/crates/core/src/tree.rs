//! Immutable undirected trees on dense vertex ids `0..n`.
//!
//! The text format understood by [`Tree::parse`] and produced by
//! [`Tree::to_tree_file`] is line based: the first non-comment line holds
//! the vertex count `n`, followed by exactly `n - 1` lines `u v`. A `#`
//! starts a comment that runs to the end of the line, blank lines are
//! skipped and surrounding whitespace is ignored.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::canon::{self, CanonicalCode};
use crate::seq::EccSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0} {1} closes a cycle")]
    Cycle(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

/// Error raised while reading the tree file format. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseTreeError {
    pub line: usize,
    pub kind: ParseTreeErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseTreeErrorKind {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// An undirected tree. Construction validates the edge set; the value is
/// never mutated afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Disjoint-set forest used to reject cycles while edges are added.
struct Components {
    parent: Vec<usize>,
}

impl Components {
    fn new(n: usize) -> Self {
        Components {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Incremental validating builder shared by [`Tree::from_edges`] and the
/// file parser, so errors can be attributed to the offending line.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    components: Components,
}

impl Builder {
    fn new(n: usize) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        Ok(Builder {
            n,
            edges: Vec::with_capacity(n - 1),
            adj: vec![Vec::new(); n],
            components: Components::new(n),
        })
    }

    fn add(&mut self, u: usize, v: usize) -> Result<(), TreeError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(TreeError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(TreeError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(TreeError::DuplicateEdge(u, v));
        }
        if self.edges.len() == self.n - 1 {
            return Err(TreeError::EdgeCount {
                expected: self.n - 1,
                found: self.edges.len() + 1,
            });
        }
        if !self.components.union(u, v) {
            return Err(TreeError::Cycle(u, v));
        }
        self.edges.push((u, v));
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    fn finish(mut self) -> Result<Tree, TreeError> {
        // n - 1 acyclic edges on n vertices form a spanning tree
        if self.edges.len() != self.n - 1 {
            return Err(TreeError::EdgeCount {
                expected: self.n - 1,
                found: self.edges.len(),
            });
        }
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
        Ok(Tree {
            edges: self.edges,
            adj: self.adj,
        })
    }
}

/// Result of stripping all pendant vertices.
///
/// `path` is the backbone in a fixed orientation (the end with the smaller
/// vertex id comes first). It is a single vertex for stars, empty for the
/// single edge, and empty whenever `is_caterpillar` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Backbone {
    pub path: Vec<usize>,
    pub is_caterpillar: bool,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        let mut b = Builder::new(n)?;
        for &(u, v) in edges {
            b.add(u, v)?;
        }
        b.finish()
    }

    /// The single-vertex tree.
    pub fn singleton() -> Tree {
        Tree {
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    pub fn path(n: usize) -> Result<Tree, TreeError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges)
    }

    /// Star on `n` vertices with centre 0.
    pub fn star(n: usize) -> Result<Tree, TreeError> {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Tree::from_edges(n, &edges)
    }

    /// Reads the tree file format.
    pub fn parse(text: &str) -> Result<Tree, ParseTreeError> {
        let mut builder: Option<Builder> = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            last_line = line;
            let err = |kind: ParseTreeErrorKind| ParseTreeError { line, kind };
            let malformed = || err(ParseTreeErrorKind::Malformed(content.to_string()));
            match builder.as_mut() {
                None => {
                    let n: usize = content.parse().map_err(|_| malformed())?;
                    builder = Some(Builder::new(n).map_err(|e| err(e.into()))?);
                }
                Some(b) => {
                    let mut fields = content.split_whitespace();
                    let (u, v) = match (fields.next(), fields.next(), fields.next()) {
                        (Some(u), Some(v), None) => (u, v),
                        _ => return Err(malformed()),
                    };
                    let u: usize = u.parse().map_err(|_| malformed())?;
                    let v: usize = v.parse().map_err(|_| malformed())?;
                    b.add(u, v).map_err(|e| err(e.into()))?;
                }
            }
        }
        let builder = builder.ok_or(ParseTreeError {
            line: last_line.max(1),
            kind: ParseTreeErrorKind::MissingHeader,
        })?;
        builder.finish().map_err(|e| ParseTreeError {
            line: last_line,
            kind: e.into(),
        })
    }

    /// Serialises in the tree file format, newline-terminated.
    pub fn to_tree_file(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Hop distances from `v` to every vertex.
    pub fn distances_from(&self, v: usize) -> Result<Vec<usize>, TreeError> {
        if v >= self.order() {
            return Err(TreeError::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            });
        }
        Ok(self.bfs(v).0)
    }

    /// BFS distances and parent pointers (the root is its own parent).
    pub(crate) fn bfs(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[root] = 0;
        parent[root] = root;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (dist, parent)
    }

    /// All-pairs hop distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|v| self.bfs(v).0).collect()
    }

    /// Endpoints of a longest path: `u` is farthest from vertex 0 and `v`
    /// farthest from `u`, lowest id winning ties.
    pub fn diametral_endpoints(&self) -> (usize, usize) {
        let far = |dist: &[usize]| {
            let best = dist.iter().copied().max().unwrap_or(0);
            dist.iter().position(|&d| d == best).unwrap_or(0)
        };
        let u = far(&self.bfs(0).0);
        let v = far(&self.bfs(u).0);
        (u, v)
    }

    /// The longest path between [`Tree::diametral_endpoints`], listed from
    /// `u` to `v`.
    pub fn diametral_path(&self) -> Vec<usize> {
        let (u, v) = self.diametral_endpoints();
        let (_, parent) = self.bfs(v);
        let mut path = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x];
            path.push(x);
        }
        path
    }

    pub fn diameter(&self) -> usize {
        self.diametral_path().len() - 1
    }

    /// Per-vertex eccentricities from two BFS sweeps: every eccentricity in
    /// a tree is attained at one of the two ends of a longest path.
    pub fn eccentricities(&self) -> Vec<usize> {
        let (u, v) = self.diametral_endpoints();
        let du = self.bfs(u).0;
        let dv = self.bfs(v).0;
        du.iter().zip(&dv).map(|(&a, &b)| a.max(b)).collect()
    }

    pub fn radius(&self) -> usize {
        self.eccentricities().into_iter().min().unwrap_or(0)
    }

    pub fn eccentric_sequence(&self) -> EccSequence {
        let mut ecc: Vec<u32> = self
            .eccentricities()
            .into_iter()
            .map(|e| e as u32)
            .collect();
        ecc.sort_unstable();
        EccSequence::from_sorted_unchecked(ecc)
    }

    pub fn backbone(&self) -> Backbone {
        let n = self.order();
        let inner: Vec<usize> = (0..n).filter(|&v| !self.is_pendant(v)).collect();
        if inner.len() <= 1 {
            return Backbone {
                path: inner,
                is_caterpillar: true,
            };
        }
        let mut keep = vec![false; n];
        for &v in &inner {
            keep[v] = true;
        }
        let inner_degree = |v: usize| self.adj[v].iter().filter(|&&w| keep[w]).count();
        if inner.iter().any(|&v| inner_degree(v) > 2) {
            return Backbone {
                path: Vec::new(),
                is_caterpillar: false,
            };
        }
        // the inner vertices induce a subtree, so max degree two means a path
        let start = *inner
            .iter()
            .find(|&&v| inner_degree(v) == 1)
            .expect("a path on two or more vertices has an end");
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| keep[w] && w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    path.push(w);
                }
                None => break,
            }
        }
        Backbone {
            path,
            is_caterpillar: true,
        }
    }

    pub fn is_caterpillar(&self) -> bool {
        self.backbone().is_caterpillar
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_code() == other.canonical_code()
    }

    /// Same tree with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree, TreeError> {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Tree::from_edges(self.order(), &edges)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.order(), self.edges)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tree_file())
    }
}

impl std::str::FromStr for Tree {
    type Err = ParseTreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn per_vertex_ecc(t: &Tree) -> Vec<usize> {
        t.distance_matrix()
            .iter()
            .map(|row| row.iter().copied().max().unwrap())
            .collect()
    }

    /// 𝕋(2,0): path 0..4 with two pendants (5, 6) on vertex 1.
    fn t20() -> Tree {
        Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6)]).unwrap()
    }

    fn spider() -> Tree {
        Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn parse_small_trees() {
        let p3 = Tree::parse("3\n0 1\n1 2").unwrap();
        assert_eq!(p3, Tree::path(3).unwrap());
        let e = Tree::parse("2\n0 1").unwrap();
        assert_eq!(e.order(), 2);
        assert_eq!(e.edges(), &[(0, 1)]);
    }

    #[test]
    fn parse_rejects_cycle() {
        let err = Tree::parse("4\n0 1\n1 2\n2 0").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(err.kind, ParseTreeErrorKind::Tree(TreeError::Cycle(2, 0)));
    }

    #[test]
    fn parse_comments_and_whitespace() {
        let t = Tree::parse("# a path\n\n  3   # order\n0   1\n\t1 2  # last\n").unwrap();
        assert_eq!(t, Tree::path(3).unwrap());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("x\n", 1),
            ("3\n0 1\n1\n", 3),
            ("3\n0 1\n1 5\n", 3),
            ("3\n0 0\n", 2),
            ("3\n0 1\n1 0\n", 3),
            ("3\n0 1\n", 2),
            ("3\n0 1\n1 2\n0 2\n", 4),
            ("# only a comment\n", 1),
        ];
        for (text, line) in cases {
            let err = Tree::parse(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
        assert!(matches!(
            Tree::parse("3\n0 1\n1 5\n").unwrap_err().kind,
            ParseTreeErrorKind::Tree(TreeError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert!(matches!(
            Tree::parse("3\n0 1\n1 0\n").unwrap_err().kind,
            ParseTreeErrorKind::Tree(TreeError::DuplicateEdge(1, 0))
        ));
    }

    #[test]
    fn tree_file_round_trip() {
        let t = t20();
        assert_eq!(Tree::parse(&t.to_tree_file()).unwrap(), t);
        assert!(t.to_tree_file().ends_with('\n'));
    }

    #[test]
    fn distances() {
        let p5 = Tree::path(5).unwrap();
        assert_eq!(p5.distances_from(0).unwrap(), vec![0, 1, 2, 3, 4]);
        let s4 = Tree::star(4).unwrap();
        assert_eq!(s4.distances_from(0).unwrap(), vec![0, 1, 1, 1]);
        let d = t20().distances_from(5).unwrap();
        assert_eq!(&d[..5], &[2, 1, 2, 3, 4]);
        assert!(p5.distances_from(5).is_err());
    }

    #[test]
    fn eccentricities_small() {
        assert_eq!(Tree::path(5).unwrap().eccentricities(), vec![4, 3, 2, 3, 4]);
        assert_eq!(Tree::star(4).unwrap().eccentricities(), vec![1, 2, 2, 2]);
        let mut e = t20().eccentricities();
        assert_eq!(e, per_vertex_ecc(&t20()));
        e.sort();
        assert_eq!(e, vec![2, 3, 3, 4, 4, 4, 4]);
        assert_eq!(Tree::singleton().eccentricities(), vec![0]);
    }

    #[test]
    fn eccentric_sequences() {
        assert_eq!(
            Tree::path(4).unwrap().eccentric_sequence().raw(),
            &[2, 2, 3, 3]
        );
        assert_eq!(
            Tree::star(4).unwrap().eccentric_sequence().raw(),
            &[1, 2, 2, 2]
        );
        // 𝕋(2,1,0): path 0..6, two pendants at 1, one at 2
        let t = Tree::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (1, 7),
                (1, 8),
                (2, 9),
            ],
        )
        .unwrap();
        assert_eq!(
            t.eccentric_sequence().raw(),
            &[3, 4, 4, 5, 5, 5, 6, 6, 6, 6]
        );
    }

    #[test]
    fn backbones() {
        let p5 = Tree::path(5).unwrap().backbone();
        assert!(p5.is_caterpillar);
        assert_eq!(p5.path, vec![1, 2, 3]);
        assert!(!spider().backbone().is_caterpillar);
        let s = Tree::star(5).unwrap().backbone();
        assert!(s.is_caterpillar);
        assert_eq!(s.path, vec![0]);
        let e = Tree::path(2).unwrap().backbone();
        assert!(e.is_caterpillar && e.path.is_empty());
        let t = t20().backbone();
        assert_eq!(t.path, vec![1, 2, 3]);
    }

    #[test]
    fn backbone_orientation_smaller_end_first() {
        // path 3-0-2-1-4 with a pendant
        let t = Tree::from_edges(5, &[(3, 0), (0, 2), (2, 1), (1, 4)]).unwrap();
        assert_eq!(t.backbone().path, vec![0, 2, 1]);
        let t = Tree::from_edges(5, &[(3, 1), (1, 2), (2, 0), (0, 4)]).unwrap();
        assert_eq!(t.backbone().path, vec![0, 2, 1]);
    }

    #[test]
    fn diametral_path_ties_are_deterministic() {
        let s = Tree::star(4).unwrap();
        assert_eq!(s.diametral_endpoints(), (1, 2));
        assert_eq!(s.diametral_path(), vec![1, 0, 2]);
        assert_eq!(s.diameter(), 2);
        assert_eq!(s.radius(), 1);
    }
}
