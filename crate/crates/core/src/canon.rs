//! Isomorphism-collapsing position keys.
//!
//! Memoizing game values over positions only pays off when isomorphic
//! positions share a cache entry. For forests — every position reachable from
//! the tree families this crate cares about — we compute an AHU-style
//! canonical encoding: each tree is rooted at its centroid (or centroid pair)
//! and encoded as nested parentheses with child encodings sorted, and a
//! forest is the sorted multiset of its tree encodings. Two forests get the
//! same key if and only if they are isomorphic.
//!
//! Graphs with cycles fall back to an exact labeled encoding: sound (distinct
//! graphs never collide) but not isomorphism-collapsing, so cyclic positions
//! simply miss out on cache sharing. The two regimes use distinct leading
//! tag bytes and can never collide with each other.

use crate::graph::Graph;

/// Opaque, deterministic position encoding; usable as a map key.
///
/// Keys are stable across runs and platforms: they are built purely from the
/// graph structure, never from hashes or pointer identities.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionKey(Box<[u8]>);

impl PositionKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for PositionKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PositionKey({})", String::from_utf8_lossy(&self.0))
    }
}

/// Canonical key of a graph position.
///
/// * Forests (including the empty graph): isomorphism-invariant — identical
///   keys exactly for isomorphic forests.
/// * Graphs containing a cycle: exact labeled fallback — deterministic and
///   collision-free, but isomorphic relabelings may get different keys.
pub fn canonical_key(g: &Graph) -> PositionKey {
    let comps = g.connected_components();
    let is_forest = g.edge_count() + comps.len() == g.vertex_count();
    if !is_forest {
        return labeled_key(g);
    }
    let mut codes: Vec<Vec<u8>> = comps
        .iter()
        .map(|c| {
            if c.len() == g.vertex_count() {
                tree_code(g)
            } else {
                tree_code(&g.induced(c))
            }
        })
        .collect();
    codes.sort_unstable();
    let mut bytes = Vec::with_capacity(1 + codes.iter().map(Vec::len).sum::<usize>());
    bytes.push(b'F');
    for code in codes {
        bytes.extend_from_slice(&code);
    }
    PositionKey(bytes.into_boxed_slice())
}

/// Exact labeled encoding: vertex count plus the sorted edge list.
fn labeled_key(g: &Graph) -> PositionKey {
    let mut text = format!("G{};", g.vertex_count());
    for (u, v) in g.edges() {
        text.push_str(&format!("{u}-{v},"));
    }
    PositionKey(text.into_bytes().into_boxed_slice())
}

/// Canonical encoding of one connected tree.
///
/// Single centroid: the rooted encoding at the centroid. Centroid pair: the
/// two halves obtained by cutting the central edge are encoded rooted at
/// their endpoints and combined in sorted order inside `[...]` (the bracket
/// namespace keeps pair codes disjoint from single-centroid codes).
fn tree_code(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    debug_assert!(n >= 1, "tree code of an empty graph");
    if n == 1 {
        return vec![b'(', b')'];
    }
    match *tree_centroids(g).as_slice() {
        [c] => rooted_code(g, c, usize::MAX),
        [c1, c2] => {
            debug_assert!(g.has_edge(c1, c2), "centroid pair must be adjacent");
            let a = rooted_code(g, c1, c2);
            let b = rooted_code(g, c2, c1);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut out = Vec::with_capacity(lo.len() + hi.len() + 2);
            out.push(b'[');
            out.extend_from_slice(&lo);
            out.extend_from_slice(&hi);
            out.push(b']');
            out
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// Centroid(s) of a connected tree: the vertices minimizing the largest
/// component left by their removal. One vertex, or two adjacent ones.
fn tree_centroids(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let (order, parent) = bfs_order(g, 0, usize::MAX);
    debug_assert_eq!(order.len(), n, "graph is not connected");
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != v {
            size[parent[v]] += size[v];
        }
    }
    let mut best = usize::MAX;
    let mut centroids = Vec::new();
    for v in 0..n {
        // Largest piece after deleting v: the side through the parent plus
        // each child subtree.
        let mut largest = n - size[v];
        for &u in g.neighbors(v) {
            if parent[u] == v {
                largest = largest.max(size[u]);
            }
        }
        match largest.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = largest;
                centroids.clear();
                centroids.push(v);
            }
            std::cmp::Ordering::Equal => centroids.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    centroids
}

/// BFS order and parent array from `root`, never crossing `blocked`
/// (`usize::MAX` for none). The root is its own parent.
fn bfs_order(g: &Graph, root: usize, blocked: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in g.neighbors(v) {
            if u != blocked && parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    (order, parent)
}

/// AHU encoding of the subtree reachable from `root` without crossing
/// `blocked`: `(` + sorted child encodings + `)`, computed bottom-up (no
/// recursion, so arbitrarily long paths are fine).
fn rooted_code(g: &Graph, root: usize, blocked: usize) -> Vec<u8> {
    let (order, parent) = bfs_order(g, root, blocked);
    let mut codes: Vec<Option<Vec<u8>>> = vec![None; g.vertex_count()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u != blocked && u != root && parent[u] == v)
            .map(|&u| codes[u].take().expect("children precede parents"))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = Some(code);
    }
    codes[root].take().expect("root encoded last")
}
