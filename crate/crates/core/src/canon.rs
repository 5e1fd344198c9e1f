//! Centre-rooted AHU encoding of free trees.
//!
//! A tree is rooted at its centre (or, for bicentral trees, cut at the
//! central edge) and every rooted subtree is written as `(` followed by
//! the sorted codes of its children and `)`. A leading tag byte tells the
//! two cases apart.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::tree::Tree;

/// Byte string that is equal for two trees exactly when they are
/// isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // all bytes are ASCII
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertices at the middle of a longest path: one or two of them.
pub fn centers(t: &Tree) -> Vec<usize> {
    let path = t.diametral_path();
    let d = path.len() - 1;
    if d.is_multiple_of(2) {
        vec![path[d / 2]]
    } else {
        let (a, b) = (path[d / 2], path[d / 2 + 1]);
        vec![a.min(b), a.max(b)]
    }
}

/// AHU code of the subtree hanging from `root`, never stepping onto
/// `blocked`.
fn rooted_code(t: &Tree, root: usize, blocked: Option<usize>) -> Vec<u8> {
    let n = t.order();
    // iterative DFS order so deep paths do not recurse
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX && Some(y) != blocked {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut codes: Vec<Option<Vec<u8>>> = vec![None; n];
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &x in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[x]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if x == root {
            codes[x] = Some(code);
        } else {
            children[parent[x]].push(code);
        }
    }
    codes[root].take().unwrap_or_default()
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let c = centers(t);
    let mut out = Vec::with_capacity(2 * t.order() + 1);
    if let [center] = c[..] {
        out.push(b'1');
        out.extend(rooted_code(t, center, None));
    } else {
        let mut halves = [
            rooted_code(t, c[0], Some(c[1])),
            rooted_code(t, c[1], Some(c[0])),
        ];
        halves.sort_unstable();
        out.push(b'2');
        for h in halves {
            out.extend(h);
        }
    }
    CanonicalCode(out)
}
