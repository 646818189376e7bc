//! Finite simple undirected graphs and the connectivity queries the move
//! rules need.
//!
//! Graphs are immutable after construction: vertex ids are exactly
//! `0..vertex_count`, adjacency lists are sorted, symmetric, loop-free and
//! duplicate-free (asserted when built). Removal operations return new graphs
//! with ids re-compacted; positions are only ever compared through
//! [`crate::canon::canonical_key`], so relabeling is harmless.
//!
//! Enumeration orders are deterministic everywhere: components are listed by
//! smallest member, vertex sets in ascending lexicographic order.

use crate::{Error, Result};

/// A sorted, duplicate-free set of vertex ids within one graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary ids (sorts and deduplicates).
    pub fn new(mut ids: Vec<usize>) -> VertexSet {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> VertexSet {
        VertexSet::new(ids)
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Finite simple undirected graph with vertex ids `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// `adj[v]` is the sorted list of neighbors of `v`.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.assert_invariants();
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::InvalidArgument(format!("duplicate edge {u}-{v}")));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.adj[u].sort_unstable();
        self.adj[v].sort_unstable();
        Ok(())
    }

    /// Checks adjacency symmetry, sortedness and absence of loops; cheap
    /// enough to run on every construction path.
    fn assert_invariants(&self) {
        for (v, ns) in self.adj.iter().enumerate() {
            debug_assert!(ns.windows(2).all(|w| w[0] < w[1]), "unsorted adjacency");
            for &u in ns {
                debug_assert_ne!(u, v, "self-loop");
                debug_assert!(self.adj[u].contains(&v), "asymmetric adjacency");
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    /// True iff the graph is connected; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True iff the graph has no cycles.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
            || self.vertex_count() == 0
    }

    /// Induced subgraph on `verts`, ids re-compacted to `0..verts.len()` in
    /// ascending order of the original ids.
    pub fn induced(&self, verts: &VertexSet) -> Graph {
        let n = self.vertex_count();
        let mut remap = vec![usize::MAX; n];
        for (new, old) in verts.iter().enumerate() {
            debug_assert!(old < n, "vertex {old} out of range");
            remap[old] = new;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for old in verts.iter() {
            let new = remap[old];
            for &u in &self.adj[old] {
                if remap[u] != usize::MAX {
                    adj[new].push(remap[u]);
                }
            }
            adj[new].sort_unstable();
        }
        let g = Graph { adj };
        g.assert_invariants();
        g
    }

    /// Graph after deleting the vertices in `removed` (induced subgraph on
    /// the complement, ids re-compacted). The original graph is unchanged.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<Graph> {
        let n = self.vertex_count();
        if let Some(bad) = removed.iter().find(|&v| v >= n) {
            return Err(Error::InvalidArgument(format!(
                "cannot remove vertex {bad}: graph has {n} vertices"
            )));
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !removed.contains(v)).collect();
        Ok(self.induced(&VertexSet(keep)))
    }

    /// Attaches a fresh path of `len` vertices to vertex `at`: new vertices
    /// get ids `n..n+len`, chained, with the first one adjacent to `at`.
    pub fn attach_path(&self, at: usize, len: usize) -> Result<Graph> {
        let n = self.vertex_count();
        if at >= n {
            return Err(Error::InvalidArgument(format!(
                "attach point {at} out of range for {n} vertices"
            )));
        }
        let mut g = self.clone();
        g.adj.resize(n + len, Vec::new());
        let mut prev = at;
        for v in n..n + len {
            g.add_edge(prev, v)?;
            prev = v;
        }
        g.assert_invariants();
        Ok(g)
    }

    /// Disjoint union; `other`'s vertex ids are shifted up by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&u| u + shift).collect::<Vec<_>>()),
        );
        let g = Graph { adj };
        g.assert_invariants();
        g
    }

    /// Relabels vertices: `perm[v]` is the new id of vertex `v`. `perm` must
    /// be a permutation of `0..vertex_count`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation length {} != vertex count {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument(
                    "relabeling is not a permutation".into(),
                ));
            }
            seen[p] = true;
        }
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            let mut ns: Vec<usize> = self.adj[v].iter().map(|&u| perm[u]).collect();
            ns.sort_unstable();
            adj[perm[v]] = ns;
        }
        let g = Graph { adj };
        g.assert_invariants();
        Ok(g)
    }
}

/// Path on `n` vertices (`n = 0` gives the empty graph).
pub fn build_path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid by construction")
}

/// Cycle on `n >= 3` vertices.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// All vertex sets of exactly `size` vertices that induce a connected
/// subgraph, in ascending lexicographic order. Each set necessarily lies
/// within a single component.
///
/// Uses the ESU extension scheme: each set is generated exactly once, grown
/// from its minimum vertex using only larger vertices.
pub fn enumerate_connected_removals(g: &Graph, size: usize) -> Vec<VertexSet> {
    assert!(size >= 1, "removal size must be at least 1");
    let n = g.vertex_count();
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    if size == 1 {
        return (0..n).map(VertexSet::singleton).collect();
    }
    let mut sub = Vec::with_capacity(size);
    let mut in_sub = vec![false; n];
    for root in 0..n {
        sub.push(root);
        in_sub[root] = true;
        let ext: Vec<usize> = g.neighbors(root).iter().copied().filter(|&u| u > root).collect();
        extend_subgraph(g, root, &mut sub, &ext, &mut in_sub, size, &mut out);
        in_sub[root] = false;
        sub.pop();
    }
    out.sort_unstable();
    out
}

fn extend_subgraph(
    g: &Graph,
    root: usize,
    sub: &mut Vec<usize>,
    ext: &[usize],
    in_sub: &mut Vec<bool>,
    size: usize,
    out: &mut Vec<VertexSet>,
) {
    if sub.len() == size {
        let mut s = sub.clone();
        s.sort_unstable();
        out.push(VertexSet(s));
        return;
    }
    for (i, &w) in ext.iter().enumerate() {
        // Candidates after `w`, plus w's exclusive neighborhood: neighbors
        // larger than the root that are not already adjacent to the set.
        let mut next_ext: Vec<usize> = ext[i + 1..].to_vec();
        for &u in g.neighbors(w) {
            if u > root
                && !in_sub[u]
                && !next_ext.contains(&u)
                && !sub.iter().any(|&s| g.has_edge(s, u))
            {
                next_ext.push(u);
            }
        }
        sub.push(w);
        in_sub[w] = true;
        extend_subgraph(g, root, sub, &next_ext, in_sub, size, out);
        in_sub[w] = false;
        sub.pop();
    }
}
