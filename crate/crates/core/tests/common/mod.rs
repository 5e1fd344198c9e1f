//! Slow, obviously-correct reference implementations. Nothing here calls
//! into the library except to build or read a `Tree`.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet};

use ecctree::Tree;
use num_bigint::BigUint;

/// Floyd–Warshall on the edge list.
pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn dist(t: &Tree) -> Vec<Vec<usize>> {
    floyd(t.order(), t.edges())
}

pub fn wiener(t: &Tree) -> u64 {
    let d = dist(t);
    let n = t.order();
    let mut w = 0;
    for i in 0..n {
        for j in i + 1..n {
            w += d[i][j] as u64;
        }
    }
    w
}

pub fn eccentric_sequence(t: &Tree) -> Vec<u32> {
    let mut e: Vec<u32> = dist(t)
        .iter()
        .map(|r| *r.iter().max().unwrap() as u32)
        .collect();
    e.sort_unstable();
    e
}

fn degrees(t: &Tree) -> Vec<u64> {
    let mut deg = vec![0u64; t.order()];
    for &(u, v) in t.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// Edge-to-edge distance: the smallest distance between endpoints.
fn edge_dist(d: &[Vec<usize>], e: (usize, usize), f: (usize, usize)) -> usize {
    [d[e.0][f.0], d[e.0][f.1], d[e.1][f.0], d[e.1][f.1]]
        .into_iter()
        .min()
        .unwrap()
}

pub fn edge_wiener(t: &Tree) -> u64 {
    let d = dist(t);
    let e = t.edges();
    let mut s = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            s += edge_dist(&d, e[i], e[j]) as u64;
        }
    }
    s
}

pub fn edge_wiener_line(t: &Tree) -> u64 {
    let d = dist(t);
    let e = t.edges();
    let mut s = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            s += edge_dist(&d, e[i], e[j]) as u64 + 1;
        }
    }
    s
}

/// Twice the vertex-edge Wiener index, to stay in integers.
pub fn vertex_edge_wiener_doubled(t: &Tree) -> u64 {
    let d = dist(t);
    let mut s = 0;
    for v in 0..t.order() {
        for &(a, b) in t.edges() {
            s += d[v][a].min(d[v][b]) as u64;
        }
    }
    s
}

pub fn schultz(t: &Tree) -> u64 {
    let d = dist(t);
    let deg = degrees(t);
    let n = t.order();
    let mut s = 0;
    for i in 0..n {
        for j in i + 1..n {
            s += d[i][j] as u64 * (deg[i] + deg[j]);
        }
    }
    s
}

pub fn gutman(t: &Tree) -> u64 {
    let d = dist(t);
    let deg = degrees(t);
    let n = t.order();
    let mut s = 0;
    for i in 0..n {
        for j in i + 1..n {
            s += d[i][j] as u64 * deg[i] * deg[j];
        }
    }
    s
}

pub fn hyper_wiener(t: &Tree) -> u64 {
    let d = dist(t);
    let n = t.order();
    let mut s = 0;
    for i in 0..n {
        for j in i + 1..n {
            let x = d[i][j] as u64;
            s += x * (x + 1) / 2;
        }
    }
    s
}

/// Vertex subsets inducing a connected subgraph; a subset of a tree is
/// connected exactly when it spans `|S| - 1` edges.
pub fn subtree_count(t: &Tree) -> BigUint {
    let n = t.order();
    assert!(n <= 20, "subset oracle is exponential");
    let mut count = 0u64;
    for mask in 1u32..(1 << n) {
        let inside = t
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        if inside + 1 == mask.count_ones() as usize {
            count += 1;
        }
    }
    BigUint::from(count)
}

/// Canonical form as the smallest rooted encoding over all roots.
pub fn free_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn enc(adj: &[Vec<usize>], v: usize, p: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != p)
            .map(|&w| enc(adj, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    (0..n).map(|r| enc(&adj, r, usize::MAX)).min().unwrap()
}

pub fn tree_canon(t: &Tree) -> String {
    free_canon(t.order(), t.edges())
}

/// Plain O(n^2) Prüfer decoding.
pub fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut deg = vec![1usize; n];
    for &c in code {
        deg[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
        edges.push((leaf, c));
        deg[leaf] = 0;
        deg[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Isomorphism classes of all labelled trees on `n` vertices.
pub fn labelled_classes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        out.insert(free_canon(n, &edges));
        return out;
    }
    let len = n - 2;
    let mut code = vec![0usize; len];
    loop {
        out.insert(free_canon(n, &prufer_decode(&code, n)));
        let mut i = 0;
        while i < len {
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
            i += 1;
        }
        if i == len {
            return out;
        }
    }
}

/// Classes on `1..=max_n` vertices by hanging a leaf on every vertex of
/// every smaller class.
pub fn leaf_extension_classes(max_n: usize) -> Vec<Vec<Vec<(usize, usize)>>> {
    let mut levels: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![], vec![vec![]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &levels[n - 1] {
            for v in 0..n - 1 {
                let mut e = edges.clone();
                e.push((v, n - 1));
                if seen.insert(free_canon(n, &e)) {
                    next.push(e);
                }
            }
        }
        levels.push(next);
    }
    levels
}
