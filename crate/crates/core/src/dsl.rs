//! Text format for describing positions.
//!
//! One spec per line, `<family>:<parameters>`:
//!
//! * `path:7` — the path with 7 vertices;
//! * `cycle:9` — the cycle with 9 vertices (at least 3);
//! * `star:1,1,3,4` — a subdivided star by arm lengths; `star:` is a single
//!   vertex, `star:empty` the empty graph;
//! * `bistar:1,1/2/1,2` — left arms / middle edge count / right arms, where a
//!   side may be `empty` (no center) or blank (a bare center);
//! * `cat:37:2,4,6` — a caterpillar by spine length and leg positions
//!   (0-based); `cat:37` has no legs;
//! * `edges:4;0-1,1-2,2-3` — an explicit edge list on `n` vertices; the list
//!   may be empty.
//!
//! [`parse_document`] reads many lines, skipping blanks and `#` comments.
//! Parse errors carry 1-based line and column positions and name the
//! offending token.

use crate::families::{BistarSpec, CaterpillarSpec, StarSpec};
use crate::graph::{build_cycle, build_path, Graph};
use crate::{Error, Result};

/// A parsed position description, realizable as a concrete [`Graph`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Star(StarSpec),
    Bistar(BistarSpec),
    Caterpillar(CaterpillarSpec),
    Edges { vertices: usize, edges: Vec<(usize, usize)> },
}

impl GraphSpec {
    /// Build the concrete graph. Fails on structurally invalid specs
    /// (cycles below 3 vertices, edge lists with bad endpoints or
    /// duplicates).
    pub fn realize(&self) -> Result<Graph> {
        match self {
            GraphSpec::Path(n) => Ok(build_path(*n)),
            GraphSpec::Cycle(n) => build_cycle(*n),
            GraphSpec::Star(s) => Ok(s.realize()),
            GraphSpec::Bistar(b) => Ok(b.realize()),
            GraphSpec::Caterpillar(c) => Ok(c.realize()),
            GraphSpec::Edges { vertices, edges } => Graph::from_edges(*vertices, edges),
        }
    }
}

impl std::fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Star(s) => write!(f, "{s}"),
            GraphSpec::Bistar(b) => write!(f, "{b}"),
            GraphSpec::Caterpillar(c) => write!(f, "{c}"),
            GraphSpec::Edges { vertices, edges } => {
                write!(f, "edges:{vertices};")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Parse a single spec. Errors report line 1 and a 1-based column.
pub fn parse_line(text: &str) -> Result<GraphSpec> {
    let trimmed = text.trim();
    let base = text.len() - text.trim_start().len();
    parse_spec(trimmed, 1, base)
}

/// Parse a whole document: one spec per line, blank lines and lines whose
/// first non-space character is `#` are skipped. Errors carry the 1-based
/// line number.
pub fn parse_document(text: &str) -> Result<Vec<GraphSpec>> {
    let mut specs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let base = raw.len() - raw.trim_start().len();
        specs.push(parse_spec(trimmed, idx + 1, base)?);
    }
    Ok(specs)
}

/// Parse one trimmed spec; `base` is the byte offset of `text` within its
/// original line, used to report columns against the unstripped input.
fn parse_spec(text: &str, line: usize, base: usize) -> Result<GraphSpec> {
    let fail = |off: usize, message: String| Error::Parse {
        line,
        column: base + off + 1,
        message,
    };
    let colon = text
        .find(':')
        .ok_or_else(|| fail(0, "expected `<family>:<parameters>`".into()))?;
    let head = &text[..colon];
    let rest = &text[colon + 1..];
    let rest_off = colon + 1;
    match head {
        "path" => Ok(GraphSpec::Path(parse_number(rest, rest_off, &fail)?)),
        "cycle" => Ok(GraphSpec::Cycle(parse_number(rest, rest_off, &fail)?)),
        "star" => Ok(GraphSpec::Star(parse_side(rest, rest_off, &fail)?)),
        "bistar" => {
            let first = rest
                .find('/')
                .ok_or_else(|| fail(rest_off, "expected `<left>/<middle>/<right>`".into()))?;
            let after = &rest[first + 1..];
            let second = after
                .find('/')
                .ok_or_else(|| fail(rest_off + first + 1, "expected `<middle>/<right>`".into()))?;
            let left = parse_side(&rest[..first], rest_off, &fail)?;
            let middle = parse_number(&after[..second], rest_off + first + 1, &fail)?;
            let right = parse_side(&after[second + 1..], rest_off + first + second + 2, &fail)?;
            Ok(GraphSpec::Bistar(BistarSpec::new(left, middle, right)))
        }
        "cat" => {
            let (spine_text, legs) = match rest.find(':') {
                None => (rest, None),
                Some(p) => (&rest[..p], Some((&rest[p + 1..], rest_off + p + 1))),
            };
            let spine = parse_number(spine_text, rest_off, &fail)?;
            let legs = match legs {
                None => Vec::new(),
                Some((list, off)) => parse_list(list, off, 0, &fail)?,
            };
            // Positions are syntactically fine; range-check them here so the
            // error still points into the source text.
            let legs_off = rest.find(':').map(|p| rest_off + p + 1).unwrap_or(rest_off);
            CaterpillarSpec::new(spine, legs)
                .map(GraphSpec::Caterpillar)
                .map_err(|e| fail(legs_off, e.to_string()))
        }
        "edges" => {
            let semi = rest
                .find(';')
                .ok_or_else(|| fail(rest_off, "expected `<n>;<edge list>`".into()))?;
            let vertices = parse_number(&rest[..semi], rest_off, &fail)?;
            let list = &rest[semi + 1..];
            let list_off = rest_off + semi + 1;
            let mut edges = Vec::new();
            if !list.is_empty() {
                for (part, off) in split_with_offsets(list, list_off, ',') {
                    let dash = part.find('-').ok_or_else(|| {
                        fail(off, format!("expected `u-v`, found `{part}`"))
                    })?;
                    let u = parse_number(&part[..dash], off, &fail)?;
                    let v = parse_number(&part[dash + 1..], off + dash + 1, &fail)?;
                    edges.push((u, v));
                }
            }
            Ok(GraphSpec::Edges { vertices, edges })
        }
        _ => Err(fail(
            0,
            format!("unknown graph family `{head}` (expected path, cycle, star, bistar, cat, or edges)"),
        )),
    }
}

/// A bistar side / star body: `empty`, blank (bare center), or an arm list.
fn parse_side(
    text: &str,
    off: usize,
    fail: &dyn Fn(usize, String) -> Error,
) -> Result<StarSpec> {
    if text == "empty" {
        return Ok(StarSpec::empty());
    }
    if text.is_empty() {
        return Ok(StarSpec::from_arms([]));
    }
    let arms = parse_list(text, off, 1, fail)?;
    Ok(StarSpec::from_arms(arms))
}

/// Comma-separated numbers, each at least `min`.
fn parse_list(
    text: &str,
    off: usize,
    min: usize,
    fail: &dyn Fn(usize, String) -> Error,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (part, part_off) in split_with_offsets(text, off, ',') {
        let value = parse_number(part, part_off, fail)?;
        if value < min {
            return Err(fail(
                part_off,
                format!("value must be at least {min}, found {value}"),
            ));
        }
        out.push(value);
    }
    Ok(out)
}

fn parse_number(
    text: &str,
    off: usize,
    fail: &dyn Fn(usize, String) -> Error,
) -> Result<usize> {
    if text.is_empty() {
        return Err(fail(off, "expected a number".into()));
    }
    if let Some(pos) = text.find(|c: char| !c.is_ascii_digit()) {
        return Err(fail(
            off + pos,
            format!("expected a number, found `{text}`"),
        ));
    }
    text.parse::<usize>()
        .map_err(|_| fail(off, format!("number `{text}` is too large")))
}

/// Split on `sep`, yielding each piece with its byte offset in the source.
fn split_with_offsets<'a>(
    text: &'a str,
    base: usize,
    sep: char,
) -> impl Iterator<Item = (&'a str, usize)> + 'a {
    let mut start = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        match text[start..].find(sep) {
            Some(rel) => {
                let piece = (&text[start..start + rel], base + start);
                start += rel + sep.len_utf8();
                Some(piece)
            }
            None => {
                done = true;
                Some((&text[start..], base + start))
            }
        }
    })
}
