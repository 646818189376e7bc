//! Parametric graph families: subdivided stars, bistars, caterpillars.
//!
//! These are the shapes the closed-form layer reasons about, so their
//! numeric descriptions (arm multisets, middle length, leg positions) are
//! first-class values here, with `realize` methods producing concrete
//! [`Graph`]s in a documented vertex layout. Specs normalize on
//! construction — star arms are kept sorted, caterpillar legs sorted and
//! deduplicated — so equal specs describe isomorphic graphs.
//!
//! A `StarSpec` can also be *absent* (no center, no vertices): that is the
//! natural encoding for a bistar side that has been deleted during play, and
//! it obeys different degenerate rules than a present star with zero arms
//! (a single vertex).

use serde::Serialize;

use crate::graph::{build_path, Graph};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Subdivided stars
// ---------------------------------------------------------------------------

/// A subdivided star: a center vertex with disjoint paths ("arms") attached,
/// described by the multiset of arm lengths. May be *absent* (the empty
/// graph), which is distinct from a present star with no arms (one vertex).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StarSpec {
    present: bool,
    arms: Vec<usize>,
}

impl StarSpec {
    /// The absent star: no center, realizes as the empty graph.
    pub fn empty() -> StarSpec {
        StarSpec { present: false, arms: Vec::new() }
    }

    /// A present star with the given arm lengths. Zero lengths are dropped
    /// (an arm of length 0 adds nothing); the rest are kept sorted.
    pub fn from_arms<I: IntoIterator<Item = usize>>(arms: I) -> StarSpec {
        let mut arms: Vec<usize> = arms.into_iter().filter(|&a| a > 0).collect();
        arms.sort_unstable();
        StarSpec { present: true, arms }
    }

    pub fn is_present(&self) -> bool {
        self.present
    }

    /// Arm lengths in ascending order (empty for an absent star).
    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn arm_count(&self) -> usize {
        self.arms.len()
    }

    /// Number of vertices in the realized graph.
    pub fn vertex_count(&self) -> usize {
        if self.present {
            1 + self.arms.iter().sum::<usize>()
        } else {
            0
        }
    }

    /// This star with one more arm of length `len` (no-op for `len == 0`).
    ///
    /// # Panics
    ///
    /// Panics on an absent star, which has no center to attach to.
    pub fn with_extra_arm(&self, len: usize) -> StarSpec {
        assert!(self.present, "cannot attach an arm to an absent star");
        let mut arms = self.arms.clone();
        if len > 0 {
            arms.push(len);
            arms.sort_unstable();
        }
        StarSpec { present: true, arms }
    }

    /// The star whose arm multiset is the union of both stars' arms
    /// (the shape obtained by fusing two centers into one). Present if
    /// either input is.
    pub fn merged_with(&self, other: &StarSpec) -> StarSpec {
        let mut arms = self.arms.clone();
        arms.extend_from_slice(&other.arms);
        arms.sort_unstable();
        StarSpec { present: self.present || other.present, arms }
    }

    /// Concrete graph: vertex 0 is the center; arms are laid out in
    /// ascending length order, each as a consecutive block of vertices
    /// walking outward. An absent star realizes as the empty graph.
    pub fn realize(&self) -> Graph {
        if !self.present {
            return Graph::new(0);
        }
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut next = 1;
        for &len in &self.arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("star layout is always well formed")
    }
}

impl std::fmt::Display for StarSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if !self.present {
            return write!(f, "star:empty");
        }
        write!(f, "star:")?;
        for (i, a) in self.arms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Bistars
// ---------------------------------------------------------------------------

/// Two subdivided stars joined by a path of `middle_edges` edges between
/// their centers. Either side may be absent, and `middle_edges == 0` fuses
/// two present centers into one, so the family also covers plain stars and
/// paths as degenerate cases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BistarSpec {
    pub left: StarSpec,
    pub middle_edges: usize,
    pub right: StarSpec,
}

impl BistarSpec {
    pub fn new(left: StarSpec, middle_edges: usize, right: StarSpec) -> BistarSpec {
        BistarSpec { left, middle_edges, right }
    }

    /// Number of vertices in the realized graph.
    pub fn vertex_count(&self) -> usize {
        let m = self.middle_edges;
        match (self.left.is_present(), self.right.is_present()) {
            (true, true) => {
                if m == 0 {
                    self.left.vertex_count() + self.right.vertex_count() - 1
                } else {
                    self.left.vertex_count() + self.right.vertex_count() + m - 1
                }
            }
            (true, false) => self.left.vertex_count() + m.saturating_sub(1),
            (false, true) => self.right.vertex_count() + m.saturating_sub(1),
            (false, false) => m.saturating_sub(1),
        }
    }

    /// Concrete graph plus the vertex ids of the left and right centers
    /// (`None` for an absent side).
    ///
    /// Layout: the left star occupies ids `0..left.vertex_count()` in star
    /// layout; the middle path interior follows; the right center comes
    /// next, then the right arms in ascending order as consecutive blocks.
    /// Degenerate cases collapse to the equivalent star or path:
    ///
    /// * both sides absent — the middle alone, i.e. a path with
    ///   `middle_edges - 1` vertices (empty for `middle_edges <= 1`);
    /// * one side absent — that star with the middle folded in as one extra
    ///   arm of length `middle_edges - 1`;
    /// * both present with `middle_edges == 0` — the merged star, and both
    ///   reported centers are the same vertex 0.
    pub fn realize_with_centers(&self) -> (Graph, Option<usize>, Option<usize>) {
        let m = self.middle_edges;
        match (self.left.is_present(), self.right.is_present()) {
            (false, false) => (build_path(m.saturating_sub(1)), None, None),
            (true, false) => {
                let g = self.left.with_extra_arm(m.saturating_sub(1)).realize();
                (g, Some(0), None)
            }
            (false, true) => {
                let g = self.right.with_extra_arm(m.saturating_sub(1)).realize();
                (g, None, Some(0))
            }
            (true, true) if m == 0 => {
                let g = self.left.merged_with(&self.right).realize();
                (g, Some(0), Some(0))
            }
            (true, true) => {
                let left_n = self.left.vertex_count();
                let n = self.vertex_count();
                let left_graph = self.left.realize();
                let mut edges: Vec<(usize, usize)> = left_graph.edges();
                // Middle path: center 0 -> interior ids left_n .. left_n+m-1
                // -> right center.
                let right_center = left_n + m - 1;
                let mut prev = 0;
                for v in left_n..right_center {
                    edges.push((prev, v));
                    prev = v;
                }
                edges.push((prev, right_center));
                // Right arms walk outward from ids right_center+1 onward.
                let mut next = right_center + 1;
                for &len in self.right.arms() {
                    let mut prev = right_center;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                debug_assert_eq!(next, n);
                let g = Graph::from_edges(n, &edges)
                    .expect("bistar layout is always well formed");
                (g, Some(0), Some(right_center))
            }
        }
    }

    pub fn realize(&self) -> Graph {
        self.realize_with_centers().0
    }
}

impl std::fmt::Display for BistarSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = |s: &StarSpec| -> String {
            if !s.is_present() {
                "empty".to_string()
            } else {
                s.arms()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        write!(
            f,
            "bistar:{}/{}/{}",
            side(&self.left),
            self.middle_edges,
            side(&self.right)
        )
    }
}

// ---------------------------------------------------------------------------
// Caterpillars
// ---------------------------------------------------------------------------

/// A caterpillar: a spine path with single-vertex legs hanging off a set of
/// spine positions. Legs are indexed by spine position (0-based) and kept
/// sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CaterpillarSpec {
    spine: usize,
    legs: Vec<usize>,
}

impl CaterpillarSpec {
    /// A caterpillar with `spine` spine vertices and legs at the given
    /// positions. `spine` must be positive and every position must be
    /// `< spine`; duplicate positions are collapsed.
    pub fn new<I: IntoIterator<Item = usize>>(spine: usize, legs: I) -> Result<CaterpillarSpec> {
        if spine == 0 {
            return Err(Error::InvalidArgument(
                "caterpillar spine must have at least one vertex".into(),
            ));
        }
        let mut legs: Vec<usize> = legs.into_iter().collect();
        legs.sort_unstable();
        legs.dedup();
        if let Some(&bad) = legs.iter().find(|&&p| p >= spine) {
            return Err(Error::InvalidArgument(format!(
                "leg position {bad} is outside the spine (length {spine})"
            )));
        }
        Ok(CaterpillarSpec { spine, legs })
    }

    pub fn spine_length(&self) -> usize {
        self.spine
    }

    /// Leg positions in ascending order.
    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        self.spine + self.legs.len()
    }

    /// The same caterpillar read from the other end of the spine.
    pub fn mirrored(&self) -> CaterpillarSpec {
        let legs: Vec<usize> = self.legs.iter().map(|&p| self.spine - 1 - p).collect();
        CaterpillarSpec::new(self.spine, legs).expect("mirror of a valid spec is valid")
    }

    /// The lexicographically smaller of this spec and its mirror — a
    /// canonical representative of the unordered shape, useful for
    /// deduplicating sweeps.
    pub fn canonical(&self) -> CaterpillarSpec {
        let mirrored = self.mirrored();
        if mirrored < *self {
            mirrored
        } else {
            self.clone()
        }
    }

    /// Concrete graph: spine vertices are `0..spine` in path order; leg
    /// vertices follow, one per listed position in ascending order.
    pub fn realize(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for v in 1..self.spine {
            edges.push((v - 1, v));
        }
        for (i, &p) in self.legs.iter().enumerate() {
            edges.push((p, self.spine + i));
        }
        Graph::from_edges(n, &edges).expect("caterpillar layout is always well formed")
    }
}

impl std::fmt::Display for CaterpillarSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cat:{}", self.spine)?;
        if !self.legs.is_empty() {
            write!(f, ":")?;
            for (i, p) in self.legs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}
