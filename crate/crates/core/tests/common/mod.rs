//! Shared test support: an independent brute-force value oracle and random
//! tree/forest generators.
//!
//! The oracle here deliberately shares no machinery with the library engine:
//! positions are bitmasks over the *original labeled* vertex set, there is
//! no canonicalization and no component decomposition, and moves are found
//! by submask enumeration. Agreement between this and the engine is
//! therefore meaningful evidence, not an echo.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;

use octal_games::graph::Graph;
use octal_games::octal::OctalCode;

pub fn code(text: &str) -> OctalCode {
    OctalCode::parse(text).expect("test code strings are valid")
}

/// Brute-force value of `g` under `code`, by labeled-subset memoization.
/// Exponential: keep `g` at 20 vertices or fewer.
pub fn naive_grundy(g: &Graph, code: &OctalCode) -> u32 {
    let n = g.vertex_count();
    assert!(n <= 20, "naive oracle is exponential in the vertex count");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut memo: HashMap<u32, u32> = HashMap::new();
    eval_mask(full, &adj, code, &mut memo)
}

fn eval_mask(mask: u32, adj: &[u32], code: &OctalCode, memo: &mut HashMap<u32, u32>) -> u32 {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let max_size = code.max_removal_size() as u32;
    let mut opts = Vec::new();
    // Every nonempty submask x of mask is a removal candidate.
    let mut x = mask;
    loop {
        if x.count_ones() <= max_size && is_connected_set(x, adj) {
            let flags = code.flags(x.count_ones() as usize);
            let home = component_within(x & x.wrapping_neg(), mask, adj);
            let rest = home & !x;
            let allowed = if rest == 0 {
                flags.take_whole
            } else if is_connected_set(rest, adj) {
                flags.leave_connected
            } else {
                flags.disconnect
            };
            if allowed {
                opts.push(eval_mask(mask & !x, adj, code, memo));
            }
        }
        x = (x - 1) & mask;
        if x == 0 {
            break;
        }
    }
    let mut v = 0u32;
    while opts.contains(&v) {
        v += 1;
    }
    memo.insert(mask, v);
    v
}

/// Is the vertex set `set` connected in the graph restricted to `set`?
fn is_connected_set(set: u32, adj: &[u32]) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] & set;
        }
        if grown == seen {
            break;
        }
        seen = grown;
    }
    seen == set
}

/// The component of `mask` containing the (single-bit) seed `start`.
fn component_within(start: u32, mask: u32, adj: &[u32]) -> u32 {
    let mut seen = start;
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] & mask;
        }
        if grown == seen {
            return seen;
        }
        seen = grown;
    }
}

/// The labeled tree encoded by a Prüfer sequence over `0..seq.len() + 2`.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        assert!(v < n, "Prüfer entry out of range");
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Repeatedly join the smallest current leaf to the next sequence entry.
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] = 0; // consumed
        degree[v] -= 1;
    }
    // Two vertices of degree 1 remain.
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let a = last.next().expect("two leaves remain");
    let b = last.next().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// A uniformly random labeled tree with `n >= 1` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    match n {
        0 => Graph::new(0),
        1 => Graph::new(1),
        2 => Graph::from_edges(2, &[(0, 1)]).expect("single edge"),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(&seq)
        }
    }
}

/// A random forest: trees of random sizes totalling exactly `n` vertices.
/// Returns the forest and the component trees it was assembled from.
pub fn random_forest(n: usize, rng: &mut impl Rng) -> (Graph, Vec<Graph>) {
    let mut trees = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let size = rng.gen_range(1..=remaining.min(9));
        trees.push(random_tree(size, rng));
        remaining -= size;
    }
    let mut forest = Graph::new(0);
    for t in &trees {
        forest = forest.disjoint_union(t);
    }
    (forest, trees)
}

/// A random graph on `n` vertices with each edge present with probability
/// roughly `density` (may contain cycles, may be disconnected).
pub fn random_graph(n: usize, density: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
