//! A rewrite that turns any tree into a caterpillar without changing its
//! eccentric sequence, while lowering the Wiener index and raising the
//! number of subtrees.
//!
//! Take a longest path `v_0..v_d` and a vertex `u` off the path that hangs
//! from `v_j` and is not a leaf. Orient the path so that `2j >= d`. Every
//! neighbour of `u` other than `v_j` is re-attached to `v_{j+1}`; `u`
//! becomes a leaf of `v_j`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("move does not match the tree: {0}")]
    StaleMove(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RewriteMove {
    /// Longest path `v_0..v_d`, oriented so that `2 * pivot >= d`.
    pub path: Vec<usize>,
    /// Index `j` of the path vertex carrying the hub.
    pub pivot: usize,
    /// Non-pendant neighbour `u` of `v_j` off the path.
    pub hub: usize,
    /// `N(u) - {v_j}`, sorted.
    pub moved: Vec<usize>,
    /// `v_{j+1}`, the new neighbour of every moved vertex.
    pub target: usize,
}

fn reach(t: &Tree, starts: &[usize], blocked: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; t.order()];
    for &b in blocked {
        seen[b] = true;
    }
    let mut out = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        out.push(x);
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

impl RewriteMove {
    pub fn pivot_vertex(&self) -> usize {
        self.path[self.pivot]
    }

    pub fn diameter(&self) -> usize {
        self.path.len() - 1
    }

    /// `U`: vertices in the components of `T - u` that avoid the path.
    pub fn detached(&self, t: &Tree) -> Vec<usize> {
        reach(t, &self.moved, &[self.hub])
    }

    /// `R`: the side of `v_{j+1}` once the edge `v_j v_{j+1}` is removed.
    pub fn right_side(&self, t: &Tree) -> Vec<usize> {
        reach(t, &[self.target], &[self.pivot_vertex()])
    }

    /// `W(T') - W(T) = |U| (2 - 2|R|)`.
    pub fn predicted_wiener_delta(&self, t: &Tree) -> i64 {
        let u = self.detached(t).len() as i64;
        let r = self.right_side(t).len() as i64;
        u * (2 - 2 * r)
    }

    fn check(&self, t: &Tree) -> Result<(), TransformError> {
        let stale = |why| Err(TransformError::StaleMove(why));
        let n = t.order();
        if self
            .path
            .iter()
            .chain([&self.hub, &self.target])
            .any(|&v| v >= n)
        {
            return stale("vertex out of range");
        }
        if self.path.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
            return stale("path is not a path of the tree");
        }
        let d = self.diameter();
        if d != t.diameter() {
            return stale("path is not a longest path");
        }
        if self.pivot + 1 > d || 2 * self.pivot < d {
            return stale("pivot outside the far half of the path");
        }
        if self.path.contains(&self.hub) || !t.has_edge(self.hub, self.pivot_vertex()) {
            return stale("hub is not an off-path neighbour of the pivot");
        }
        if self.target != self.path[self.pivot + 1] {
            return stale("target is not the successor of the pivot");
        }
        let expected: Vec<usize> = t
            .neighbors(self.hub)
            .iter()
            .copied()
            .filter(|&y| y != self.pivot_vertex())
            .collect();
        if expected.is_empty() || expected != self.moved {
            return stale("moved set differs from the hub's other neighbours");
        }
        Ok(())
    }
}

/// The move at the lexicographically smallest `(j, u)` along the tree's
/// canonical longest path, or `None` for caterpillars.
pub fn find_move(t: &Tree) -> Option<RewriteMove> {
    let mut path = t.diametral_path();
    let d = path.len() - 1;
    let mut on_path = vec![false; t.order()];
    for &v in &path {
        on_path[v] = true;
    }
    let (mut pivot, hub) = path.iter().enumerate().find_map(|(j, &v)| {
        t.neighbors(v)
            .iter()
            .find(|&&u| !on_path[u] && !t.is_pendant(u))
            .map(|&u| (j, u))
    })?;
    if 2 * pivot < d {
        path.reverse();
        pivot = d - pivot;
    }
    let moved: Vec<usize> = t
        .neighbors(hub)
        .iter()
        .copied()
        .filter(|&y| y != path[pivot])
        .collect();
    let target = path[pivot + 1];
    Some(RewriteMove {
        path,
        pivot,
        hub,
        moved,
        target,
    })
}

pub fn apply_move(t: &Tree, m: &RewriteMove) -> Result<Tree, TransformError> {
    m.check(t)?;
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .map(|&(a, b)| {
            if a == m.hub && m.moved.contains(&b) {
                (m.target, b)
            } else if b == m.hub && m.moved.contains(&a) {
                (a, m.target)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Tree::from_edges(t.order(), &edges).expect("re-attaching a branch keeps a tree"))
}

/// Applies moves until none is left. Returns the caterpillar and the moves
/// taken.
pub fn caterpillarize_traced(t: &Tree) -> (Tree, Vec<RewriteMove>) {
    let mut cur = t.clone();
    let mut moves = Vec::new();
    while let Some(m) = find_move(&cur) {
        cur = apply_move(&cur, &m).expect("fresh move is never stale");
        moves.push(m);
    }
    (cur, moves)
}

pub fn caterpillarize(t: &Tree) -> Tree {
    caterpillarize_traced(t).0
}

/// Non-pendant vertices off any longest path; each move removes one, so
/// this is the exact number of moves [`caterpillarize`] performs.
pub fn off_path_inner_vertices(t: &Tree) -> usize {
    let inner = (0..t.order()).filter(|&v| t.degree(v) >= 2).count();
    inner.saturating_sub(t.diameter().saturating_sub(1))
}
