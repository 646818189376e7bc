//! Exact game evaluation by exhaustive search with memoization.
//!
//! Positions decompose into connected components whose values combine by
//! XOR, so the engine only ever evaluates connected graphs, memoized under
//! their canonical keys (isomorphic forest positions share one entry). The
//! walk over the position DAG uses an explicit task stack instead of
//! recursion — deep chains of single-vertex removals would otherwise
//! overflow the call stack.
//!
//! The cache is sharded and lock-free to read, so one [`EvalCache`] can be
//! shared across threads sweeping many positions of the same game; results
//! are deterministic either way. A configurable entry cap turns runaway
//! state spaces into a clean [`Error::ResourceLimit`] instead of memory
//! exhaustion.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use dashmap::DashMap;
use serde::Serialize;

use crate::canon::{canonical_key, PositionKey};
use crate::graph::Graph;
use crate::octal::{legal_moves, Move, OctalCode};
use crate::{Error, Result};

/// A game value. Values in this crate are tiny (0..=5 in practice), but the
/// type leaves headroom for other codes.
pub type GrundyValue = u32;

/// Who wins with best play: the previous player (`P`, value 0) or the next
/// player to move (`N`, any nonzero value).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Outcome {
    P,
    N,
}

impl Outcome {
    pub fn from_value(value: GrundyValue) -> Outcome {
        if value == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::P => write!(f, "P"),
            Outcome::N => write!(f, "N"),
        }
    }
}

/// Minimum excludant: the least nonnegative integer absent from `values`.
pub fn mex(values: &[GrundyValue]) -> GrundyValue {
    let mut seen = vec![false; values.len() + 1];
    for &v in values {
        if (v as usize) < seen.len() {
            seen[v as usize] = true;
        }
    }
    seen.iter().position(|&b| !b).expect("a gap always exists") as GrundyValue
}

/// Default cap on memoized positions before evaluation aborts with
/// [`Error::ResourceLimit`].
pub const DEFAULT_CACHE_LIMIT: usize = 50_000_000;

/// Concurrent memo table for one code's position values.
///
/// Insert-only; safe to share across threads (worst case, two threads
/// briefly duplicate work on the same position and store the same value).
/// Hit/miss counters track how often an evaluation found its position
/// already solved.
pub struct EvalCache {
    code: OctalCode,
    map: DashMap<PositionKey, GrundyValue>,
    entries: AtomicUsize,
    hits: AtomicU64,
    misses: AtomicU64,
    limit: usize,
}

impl EvalCache {
    pub fn new(code: OctalCode) -> EvalCache {
        EvalCache::with_limit(code, DEFAULT_CACHE_LIMIT)
    }

    pub fn with_limit(code: OctalCode, limit: usize) -> EvalCache {
        EvalCache {
            code,
            map: DashMap::new(),
            entries: AtomicUsize::new(0),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            limit,
        }
    }

    pub fn code(&self) -> &OctalCode {
        &self.code
    }

    /// Number of distinct positions memoized so far.
    pub fn entries(&self) -> usize {
        self.entries.load(Ordering::Relaxed)
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn get(&self, key: &PositionKey) -> Option<GrundyValue> {
        self.map.get(key).map(|v| *v)
    }

    fn insert(&self, key: PositionKey, value: GrundyValue) -> Result<()> {
        if self.entries.load(Ordering::Relaxed) >= self.limit {
            return Err(Error::ResourceLimit { cap: self.limit });
        }
        if self.map.insert(key, value).is_none() {
            self.entries.fetch_add(1, Ordering::Relaxed);
        }
        Ok(())
    }
}

impl std::fmt::Debug for EvalCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EvalCache")
            .field("code", &self.code.to_string())
            .field("entries", &self.entries())
            .field("hits", &self.hits())
            .field("misses", &self.misses())
            .field("limit", &self.limit)
            .finish()
    }
}

/// Game value of `g` under `code`: XOR of its components' values.
///
/// # Panics
///
/// Panics if `cache` was built for a different code.
pub fn grundy(g: &Graph, code: &OctalCode, cache: &EvalCache) -> Result<GrundyValue> {
    assert_eq!(
        cache.code(),
        code,
        "evaluation cache built for {} used with {}",
        cache.code(),
        code
    );
    let comps = g.connected_components();
    let mut total = 0;
    for c in &comps {
        let comp = if c.len() == g.vertex_count() {
            g.clone()
        } else {
            g.induced(c)
        };
        total ^= component_grundy(comp, code, cache)?;
    }
    Ok(total)
}

/// Outcome of `g` under `code` with best play.
pub fn outcome(g: &Graph, code: &OctalCode, cache: &EvalCache) -> Result<Outcome> {
    Ok(Outcome::from_value(grundy(g, code, cache)?))
}

/// The legal moves from `g` that land in a value-0 position, in the same
/// deterministic order as [`legal_moves`]. Empty exactly when `g` is a
/// P-position (or has no moves at all).
pub fn winning_moves(g: &Graph, code: &OctalCode, cache: &EvalCache) -> Result<Vec<Move>> {
    let mut wins = Vec::new();
    for mv in legal_moves(g, code) {
        let rest = g.remove_vertices(&mv.removed)?;
        if grundy(&rest, code, cache)? == 0 {
            wins.push(mv);
        }
    }
    Ok(wins)
}

/// One unit of deferred work on the evaluation stack.
enum Task {
    /// Ensure this connected position's value is cached, expanding its
    /// moves if necessary.
    Expand(Graph, PositionKey),
    /// All children below are solved; combine them into this position's
    /// value. `options` holds, per legal move, the keys of the components
    /// the move leaves behind.
    Finalize {
        key: PositionKey,
        options: Vec<Vec<PositionKey>>,
    },
}

/// Evaluate one connected position without recursion.
fn component_grundy(g: Graph, code: &OctalCode, cache: &EvalCache) -> Result<GrundyValue> {
    let root_key = canonical_key(&g);
    let mut stack = vec![Task::Expand(g, root_key.clone())];
    let mut option_values: Vec<GrundyValue> = Vec::new();
    while let Some(task) = stack.pop() {
        match task {
            Task::Expand(g, key) => {
                if cache.get(&key).is_some() {
                    cache.hits.fetch_add(1, Ordering::Relaxed);
                    continue;
                }
                cache.misses.fetch_add(1, Ordering::Relaxed);
                let moves = legal_moves(&g, code);
                let mut options = Vec::with_capacity(moves.len());
                let mut pending: Vec<(Graph, PositionKey)> = Vec::new();
                for mv in &moves {
                    let rest = g
                        .remove_vertices(&mv.removed)
                        .expect("legal moves target existing vertices");
                    let comps = rest.connected_components();
                    let mut child_keys = Vec::with_capacity(comps.len());
                    for c in &comps {
                        let child = if c.len() == rest.vertex_count() {
                            rest.clone()
                        } else {
                            rest.induced(c)
                        };
                        let child_key = canonical_key(&child);
                        if cache.get(&child_key).is_none()
                            && !pending.iter().any(|(_, k)| *k == child_key)
                        {
                            pending.push((child, child_key.clone()));
                        }
                        child_keys.push(child_key);
                    }
                    options.push(child_keys);
                }
                stack.push(Task::Finalize { key, options });
                for (child, child_key) in pending {
                    stack.push(Task::Expand(child, child_key));
                }
            }
            Task::Finalize { key, options } => {
                option_values.clear();
                for child_keys in &options {
                    let mut value = 0;
                    for k in child_keys {
                        value ^= cache.get(k).ok_or_else(|| {
                            Error::Internal(
                                "child position left unsolved before its parent".into(),
                            )
                        })?;
                    }
                    option_values.push(value);
                }
                cache.insert(key, mex(&option_values))?;
            }
        }
    }
    cache.get(&root_key).ok_or_else(|| {
        Error::Internal("evaluation finished without solving the root".into())
    })
}
