//! Octal games played on graphs: an exact Sprague-Grundy solver plus
//! closed-form evaluation of the **0.33** game on structured tree families.
//!
//! An octal game `0.u1u2…uk` is played by removing `i` vertices at a time
//! (for digits `ui != 0`) subject to connectivity constraints encoded in the
//! digit's three bit flags; see [`octal`] for the exact semantics. The last
//! player to move wins.
//!
//! The crate is organised in layers:
//!
//! * [`graph`] — immutable simple graphs, connectivity queries, and
//!   enumeration of connected vertex sets;
//! * [`canon`] — isomorphism-collapsing position keys for forests (AHU
//!   canonical encodings), with an exact labeled fallback for cyclic graphs;
//! * [`families`] — symbolic specs for paths-with-arms: subdivided stars,
//!   subdivided bistars, caterpillars — and their realizations as graphs;
//! * [`dsl`] — a one-line-per-graph text format (`path:7`, `star:1,1,3,4`,
//!   `bistar:1,1/2/1,2`, `cat:37:2,4,…`, `edges:4;0-1,1-2,2-3`);
//! * [`octal`] — octal-code parsing, legal-move generation on graphs, and the
//!   classical heap-game recursion with period detection;
//! * [`engine`] — memoized brute-force Grundy evaluation of any octal game on
//!   any graph, with component decomposition by nim-sum;
//! * [`closed_form`] — constant-time 0.33 values for paths, cycles,
//!   subdivided stars and bistars, driven by a small recursive table and two
//!   equivalence-class product tables;
//! * [`verify`] — suites that recompute every closed form against the engine
//!   and report structured pass/fail results.
//!
//! Cross-cutting guarantees: all enumeration orders are deterministic, every
//! evaluation is reproducible across runs and thread counts, and the engine
//! fails with an explicit resource error instead of degrading when a position
//! cache grows past its cap.

pub mod canon;
pub mod closed_form;
pub mod dsl;
pub mod engine;
mod exec;
pub mod families;
pub mod graph;
pub mod octal;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's preconditions.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Text input (octal code or graph DSL) failed to parse. `line` is
    /// 1-based and only meaningful for multi-line DSL input; `column` is the
    /// 1-based character position of the offending token.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An evaluation exceeded the configured position-cache cap. Raise the
    /// cap to proceed; results are never silently truncated.
    #[error("position cache limit exceeded ({cap} entries)")]
    ResourceLimit { cap: usize },

    /// An internal cross-check failed; this is a bug, not a usage error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Parse error on single-line input (line is reported as 1).
    pub(crate) fn parse_at(column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
