//! Octal rule codes and the moves they induce.
//!
//! A code `0.u1u2u3...` assigns each removal size `i >= 1` a digit
//! `u_i = b1 + 2*b2 + 4*b3` over three bits. A move removes a nonempty set
//! `X` of exactly `i` vertices that induces a connected subgraph, all inside
//! one component `H` of the position, and the digit's bits say which shapes
//! of aftermath are legal, judged on `H` alone (other components are
//! bystanders):
//!
//! * bit 1 (`b1`) — removing `X` wipes out `H` entirely;
//! * bit 2 (`b2`) — `H - X` is nonempty and still connected;
//! * bit 3 (`b3`) — `H - X` splits into two or more components.
//!
//! The same code read on heaps (a heap of `n` tokens is the path with `n`
//! vertices in spirit) gives the classical recursion: from `n`, a digit
//! `u_i` allows taking the whole heap (`n == i`, bit 1), leaving one heap
//! `n - i >= 1` (bit 2), or splitting the remainder into two nonempty heaps
//! (bit 3). [`heap_grundy`] evaluates that recursion; [`detect_period`]
//! finds eventual periods in the resulting sequences.

use crate::engine::{mex, GrundyValue};
use crate::graph::{enumerate_connected_removals, Graph, VertexSet};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Codes
// ---------------------------------------------------------------------------

/// A parsed octal code: the digit string after `0.`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OctalCode {
    digits: Vec<u8>,
}

impl OctalCode {
    /// Parse `0.d1d2...` with digits in `0..=7`. The digit string must be
    /// nonempty; anything else is rejected with a column-accurate error.
    pub fn parse(text: &str) -> Result<OctalCode> {
        let body = text.strip_prefix("0.").ok_or_else(|| {
            crate::Error::parse_at(1, format!("octal code must start with `0.`, found `{text}`"))
        })?;
        if body.is_empty() {
            return Err(crate::Error::parse_at(3, "octal code needs at least one digit"));
        }
        let mut digits = Vec::with_capacity(body.len());
        for (i, c) in body.chars().enumerate() {
            match c.to_digit(8) {
                Some(d) => digits.push(d as u8),
                None => {
                    return Err(crate::Error::parse_at(
                        3 + i,
                        format!("invalid octal digit `{c}`"),
                    ))
                }
            }
        }
        Ok(OctalCode { digits })
    }

    /// Digits `u_1, u_2, ...` in order.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The digit for removal size `i` (1-based); 0 beyond the written code.
    pub fn digit(&self, i: usize) -> u8 {
        if i >= 1 && i <= self.digits.len() {
            self.digits[i - 1]
        } else {
            0
        }
    }

    /// Bit decomposition of the digit for removal size `i`.
    pub fn flags(&self, i: usize) -> DigitFlags {
        DigitFlags::from_digit(self.digit(i))
    }

    /// Largest removal size with a nonzero digit (0 for the null code).
    pub fn max_removal_size(&self) -> usize {
        self.digits
            .iter()
            .rposition(|&d| d != 0)
            .map_or(0, |p| p + 1)
    }
}

impl std::fmt::Display for OctalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "0.")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// The three per-digit permission bits, unpacked.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DigitFlags {
    /// Bit 1: the removal may take out its whole component.
    pub take_whole: bool,
    /// Bit 2: the removal may leave its component connected and nonempty.
    pub leave_connected: bool,
    /// Bit 3: the removal may shatter its component into several pieces.
    pub disconnect: bool,
}

impl DigitFlags {
    /// Unpack a digit in `0..=7`.
    pub fn from_digit(digit: u8) -> DigitFlags {
        assert!(digit <= 7, "octal digit out of range: {digit}");
        DigitFlags {
            take_whole: digit & 1 != 0,
            leave_connected: digit & 2 != 0,
            disconnect: digit & 4 != 0,
        }
    }

    pub fn to_digit(self) -> u8 {
        u8::from(self.take_whole)
            | u8::from(self.leave_connected) << 1
            | u8::from(self.disconnect) << 2
    }
}

// ---------------------------------------------------------------------------
// Moves on graphs
// ---------------------------------------------------------------------------

/// How removing a connected set reshapes its component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MoveKind {
    /// The component is removed entirely.
    TakesWholeComponent,
    /// The component stays nonempty and connected.
    LeavesConnected,
    /// The component splits into two or more pieces.
    Disconnects,
}

/// A legal move: the removed vertex set and its effect class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Move {
    pub removed: VertexSet,
    pub kind: MoveKind,
}

/// Classify the effect of removing `x` from `g`, independent of any code.
///
/// `x` must be nonempty, induce a connected subgraph, and (therefore) lie in
/// a single component; violations are reported as errors.
pub fn removal_effect(g: &Graph, x: &VertexSet) -> Result<MoveKind> {
    if x.is_empty() {
        return Err(Error::InvalidArgument("removal set is empty".into()));
    }
    for v in x.iter() {
        if v >= g.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "removal set names vertex {v}, but the graph has {} vertices",
                g.vertex_count()
            )));
        }
    }
    // Connectivity of the induced subgraph on x, by search within x.
    let mut seen = vec![false; x.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for &u in g.neighbors(x.as_slice()[i]) {
            if let Ok(j) = x.as_slice().binary_search(&u) {
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
    }
    if reached != x.len() {
        return Err(Error::InvalidArgument(format!(
            "removal set {x} does not induce a connected subgraph"
        )));
    }
    // Size of the component containing x, and of what remains of it.
    let comps = g.connected_components();
    let home = comps
        .iter()
        .find(|c| c.contains(x.as_slice()[0]))
        .expect("every vertex lies in a component");
    let rest = home.len() - x.len();
    if rest == 0 {
        return Ok(MoveKind::TakesWholeComponent);
    }
    let start = home
        .iter()
        .find(|&v| !x.contains(v))
        .expect("rest is nonempty");
    let reached = count_reachable_avoiding(g, start, x);
    if reached == rest {
        Ok(MoveKind::LeavesConnected)
    } else {
        Ok(MoveKind::Disconnects)
    }
}

fn count_reachable_avoiding(g: &Graph, start: usize, avoid: &VertexSet) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] && !avoid.contains(u) {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count
}

/// All legal moves of `code` on `g`, in deterministic order: by removal size
/// ascending, then by removed set lexicographically.
pub fn legal_moves(g: &Graph, code: &OctalCode) -> Vec<Move> {
    let n = g.vertex_count();
    let comps = g.connected_components();
    let mut comp_id = vec![usize::MAX; n];
    for (ci, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_id[v] = ci;
        }
    }
    let mut moves = Vec::new();
    let max_size = code.max_removal_size().min(n);
    for size in 1..=max_size {
        let flags = code.flags(size);
        if code.digit(size) == 0 {
            continue;
        }
        for x in enumerate_connected_removals(g, size) {
            let home = &comps[comp_id[x.as_slice()[0]]];
            let rest = home.len() - size;
            let kind = if rest == 0 {
                MoveKind::TakesWholeComponent
            } else {
                let start = home
                    .iter()
                    .find(|&v| !x.contains(v))
                    .expect("rest is nonempty");
                if count_reachable_avoiding(g, start, &x) == rest {
                    MoveKind::LeavesConnected
                } else {
                    MoveKind::Disconnects
                }
            };
            let allowed = match kind {
                MoveKind::TakesWholeComponent => flags.take_whole,
                MoveKind::LeavesConnected => flags.leave_connected,
                MoveKind::Disconnects => flags.disconnect,
            };
            if allowed {
                moves.push(Move { removed: x, kind });
            }
        }
    }
    moves
}

// ---------------------------------------------------------------------------
// Heaps
// ---------------------------------------------------------------------------

/// Memo for one code's heap values; index `n` holds the value of a heap of
/// `n` tokens. A heap of 0 is the empty position, value 0.
#[derive(Clone, Debug)]
pub struct HeapCache {
    code: OctalCode,
    values: Vec<GrundyValue>,
}

impl HeapCache {
    pub fn new(code: OctalCode) -> HeapCache {
        HeapCache { code, values: vec![0] }
    }

    pub fn code(&self) -> &OctalCode {
        &self.code
    }

    /// Values computed so far, `0..=n` for the largest `n` seen.
    pub fn values(&self) -> &[GrundyValue] {
        &self.values
    }
}

/// Heap value of `n` tokens under `code`, memoized in `cache`.
///
/// # Panics
///
/// Panics if `cache` was built for a different code.
pub fn heap_grundy(code: &OctalCode, n: usize, cache: &mut HeapCache) -> GrundyValue {
    assert_eq!(
        &cache.code, code,
        "heap cache built for {} used with {}",
        cache.code, code
    );
    let mut opts: Vec<GrundyValue> = Vec::new();
    while cache.values.len() <= n {
        let m = cache.values.len();
        opts.clear();
        for i in 1..=code.digits().len().min(m) {
            let flags = code.flags(i);
            if flags.take_whole && m == i {
                opts.push(0);
            }
            if flags.leave_connected && m - i >= 1 {
                opts.push(cache.values[m - i]);
            }
            if flags.disconnect && m - i >= 2 {
                for a in 1..=(m - i) / 2 {
                    opts.push(cache.values[a] ^ cache.values[m - i - a]);
                }
            }
        }
        let v = mex(&opts);
        cache.values.push(v);
    }
    cache.values[n]
}

/// Heap values `0..=n_max` for `code`, computed fresh.
pub fn grundy_sequence(code: &OctalCode, n_max: usize) -> Vec<GrundyValue> {
    let mut cache = HeapCache::new(code.clone());
    heap_grundy(code, n_max, &mut cache);
    cache.values[..=n_max].to_vec()
}

/// Smallest `(preperiod, period)` visible in `seq`: the least period `p >= 1`
/// (ties broken by least preperiod `s >= 0`) with `seq[i] == seq[i + p]` for
/// all `s <= i < seq.len() - p`, requiring at least two full periods of
/// agreeing tail (`seq.len() - s >= 2 * p`) so one stray repeat does not
/// count. Returns `None` when no period fits that evidence bar.
pub fn detect_period(seq: &[GrundyValue]) -> Option<(usize, usize)> {
    let len = seq.len();
    for p in 1..=len / 2 {
        // Smallest s for which the tail from s agrees at shift p.
        let mut s = len - p;
        while s > 0 && seq[s - 1] == seq[s - 1 + p] {
            s -= 1;
        }
        if len - s >= 2 * p {
            return Some((s, p));
        }
    }
    None
}
