//! Verification suites: every closed form cross-checked against the engine.
//!
//! Each suite sweeps a family of positions, computes each value twice —
//! once by formula, once by exhaustive search — and files any disagreement
//! as a [`CaseFailure`] in its [`VerificationReport`]. A clean report means
//! the formulas and the engine corroborate each other over the swept range;
//! nothing here trusts a formula without making the engine reproduce it.
//!
//! Sweeps fan out across threads when the `parallel` feature (default) is
//! on. Case results, failure lists, and cache entry counts are deterministic
//! either way; wall-clock and hit/miss counters naturally vary from run to
//! run.

use std::time::Instant;

use serde::Serialize;

use crate::closed_form::{
    bistar_grundy, classify_sim1, classify_sim2, cycle_grundy, path_grundy, star_grundy,
    star_table, star_value, ClassSim1, ClassSim2,
};
use crate::engine::{grundy, EvalCache, GrundyValue, Outcome};
use crate::exec;
use crate::families::{BistarSpec, CaterpillarSpec, StarSpec};
use crate::graph::{build_cycle, build_path, Graph};
use crate::octal::{detect_period, grundy_sequence, OctalCode};
use crate::{Error, Result};

/// One disagreement found by a suite.
#[derive(Clone, Debug, Serialize)]
pub struct CaseFailure {
    /// What was checked, in the text format of the input involved.
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite run.
///
/// `cases` counts every comparison made; `failures` is empty on success.
/// `cache_entries` (distinct positions memoized) is deterministic for fixed
/// bounds; `elapsed_ms` and the hit/miss counters are run-dependent.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<CaseFailure>,
    pub elapsed_ms: u64,
    pub cache_entries: u64,
    pub cache_hits: u64,
    pub cache_misses: u64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The 52-vertex caterpillar certified by [`verify_caterpillar`]: spine
/// length, leg positions, and its game value under `0.33`.
pub const CATERPILLAR_SPINE: usize = 37;
pub const CATERPILLAR_LEGS: [usize; 15] =
    [2, 4, 6, 8, 10, 12, 14, 18, 20, 22, 24, 26, 28, 30, 34];
pub const CATERPILLAR_VALUE: GrundyValue = 10;

fn code_033() -> OctalCode {
    OctalCode::parse("0.33").expect("0.33 is a valid code")
}

fn check<E: std::fmt::Display, A: std::fmt::Display>(
    input: String,
    expected: E,
    actual: A,
) -> Option<CaseFailure> {
    let expected = expected.to_string();
    let actual = actual.to_string();
    if expected == actual {
        None
    } else {
        Some(CaseFailure { input, expected, actual })
    }
}

fn collect(results: Vec<Result<Option<CaseFailure>>>) -> Result<(u64, Vec<CaseFailure>)> {
    let cases = results.len() as u64;
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok((cases, failures))
}

fn report(
    suite: &str,
    started: Instant,
    cases: u64,
    failures: Vec<CaseFailure>,
    caches: &[&EvalCache],
    notes: Vec<String>,
) -> VerificationReport {
    let mut entries = 0u64;
    let mut hits = 0u64;
    let mut misses = 0u64;
    for c in caches {
        entries += c.entries() as u64;
        hits += c.hits();
        misses += c.misses();
    }
    VerificationReport {
        suite: suite.to_string(),
        cases,
        failures,
        elapsed_ms: started.elapsed().as_millis() as u64,
        cache_entries: entries,
        cache_hits: hits,
        cache_misses: misses,
        notes,
    }
}

// ---------------------------------------------------------------------------
// Paths and cycles
// ---------------------------------------------------------------------------

/// Engine vs `n mod 3` for all paths `0..=n_max` and cycles `3..=n_max`.
pub fn verify_paths_cycles(n_max: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let code = code_033();
    let cache = EvalCache::new(code.clone());
    enum Case {
        Path(usize),
        Cycle(usize),
    }
    let mut cases: Vec<Case> = (0..=n_max).map(Case::Path).collect();
    cases.extend((3..=n_max.max(2)).map(Case::Cycle));
    let results = exec::map_cases(cases, |case| -> Result<Option<CaseFailure>> {
        let (input, g, expected) = match case {
            Case::Path(n) => (format!("path:{n}"), build_path(n), path_grundy(n)),
            Case::Cycle(n) => (format!("cycle:{n}"), build_cycle(n)?, cycle_grundy(n)?),
        };
        let actual = grundy(&g, &code, &cache)?;
        Ok(check(input, expected, actual))
    });
    let (cases, failures) = collect(results)?;
    Ok(report("paths-cycles", started, cases, failures, &[&cache], Vec::new()))
}

// ---------------------------------------------------------------------------
// The star table
// ---------------------------------------------------------------------------

/// First six rows of the star table, pinned: changing the recursion in any
/// way must trip this suite.
const STAR_ROWS_PINNED: [&[GrundyValue]; 6] = [
    &[1],
    &[2, 0],
    &[0, 1, 2],
    &[1, 2, 0, 1],
    &[0, 3, 1, 2, 0],
    &[1, 2, 0, 3, 1, 2],
];

/// Expected row `k >= 4` of the star table from its eventual pattern:
/// odd rows run `1 2 0 3` then alternate `1 2`; even rows run `0 3 1 2 0`
/// then alternate `3 0`.
fn pattern_row(k: usize) -> Vec<GrundyValue> {
    let mut row = Vec::with_capacity(k + 1);
    if k % 2 == 1 {
        row.extend_from_slice(&[1, 2, 0, 3]);
        for j in 4..=k {
            row.push(if (j - 4) % 2 == 0 { 1 } else { 2 });
        }
    } else {
        row.extend_from_slice(&[0, 3, 1, 2, 0]);
        for j in 5..=k {
            row.push(if (j - 5) % 2 == 0 { 3 } else { 0 });
        }
    }
    row
}

/// Star-table checks, three layers: the first six rows against pinned
/// values, rows 6..=12 against the eventual pattern, and every star with up
/// to `max_arms` arms of length 1 or 2 against the engine. Requires
/// `max_arms >= 3` so at least one non-path star is exercised.
pub fn verify_star_table(max_arms: usize) -> Result<VerificationReport> {
    if max_arms < 3 {
        return Err(Error::InvalidArgument(format!(
            "star sweep needs max_arms >= 3, got {max_arms}"
        )));
    }
    let started = Instant::now();
    let code = code_033();
    let cache = EvalCache::new(code.clone());
    const PATTERN_ROWS: usize = 12;
    let table = star_table(PATTERN_ROWS + 1);

    enum Case {
        Pinned(usize, usize),
        Pattern(usize),
        Engine(usize, usize),
        EmptyStar,
    }
    let mut cases = Vec::new();
    for (k, row) in STAR_ROWS_PINNED.iter().enumerate() {
        for j in 0..row.len() {
            cases.push(Case::Pinned(k, j));
        }
    }
    cases.extend((6..=PATTERN_ROWS).map(Case::Pattern));
    cases.push(Case::EmptyStar);
    for k in 0..=max_arms {
        for j in 0..=k {
            cases.push(Case::Engine(k, j));
        }
    }

    let results = exec::map_cases(cases, |case| -> Result<Option<CaseFailure>> {
        match case {
            Case::Pinned(k, j) => Ok(check(
                format!("star value ({k},{j})"),
                STAR_ROWS_PINNED[k][j],
                table[k][j],
            )),
            Case::Pattern(k) => Ok(check(
                format!("star table row {k}"),
                format!("{:?}", pattern_row(k)),
                format!("{:?}", table[k]),
            )),
            Case::EmptyStar => {
                let actual = grundy(&Graph::new(0), &code, &cache)?;
                Ok(check("star:empty".to_string(), star_grundy(&StarSpec::empty()), actual))
            }
            Case::Engine(k, j) => {
                let arms = std::iter::repeat(1usize)
                    .take(k - j)
                    .chain(std::iter::repeat(2usize).take(j));
                let spec = StarSpec::from_arms(arms);
                let actual = grundy(&spec.realize(), &code, &cache)?;
                Ok(check(spec.to_string(), star_value(k, j), actual))
            }
        }
    });
    let (cases, failures) = collect(results)?;
    Ok(report("star-table", started, cases, failures, &[&cache], Vec::new()))
}

// ---------------------------------------------------------------------------
// Bistars
// ---------------------------------------------------------------------------

/// All multisets of arm lengths `1..=max_len` with up to `max_arms` arms,
/// as nondecreasing vectors, in deterministic order.
fn arm_multisets(max_arms: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(
        cur: &mut Vec<usize>,
        min_len: usize,
        remaining: usize,
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        if remaining == 0 {
            return;
        }
        for len in min_len..=max_len {
            cur.push(len);
            extend(cur, len, remaining - 1, max_len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_arms, max_len, &mut out);
    out
}

/// A representative side star for every row of the first join table.
fn sim1_representatives() -> [(ClassSim1, StarSpec); 8] {
    [
        (ClassSim1::C0, StarSpec::from_arms([1, 1, 1, 1])),
        (ClassSim1::C1, StarSpec::from_arms([1, 1, 1])),
        (ClassSim1::C1Star, StarSpec::from_arms([2, 2, 2])),
        (ClassSim1::C2, StarSpec::from_arms([2, 2, 2, 2, 2])),
        (ClassSim1::C2Star, StarSpec::from_arms([2, 2])),
        (ClassSim1::C2Box, StarSpec::from_arms([1, 1, 2])),
        (ClassSim1::C3, StarSpec::from_arms([1, 2, 2, 2, 2, 2])),
        (ClassSim1::C3Box, StarSpec::from_arms([1, 1, 1, 2])),
    ]
}

/// A representative side star for every row of the second join table.
fn sim2_representatives() -> [(ClassSim2, StarSpec); 10] {
    [
        (ClassSim2::D0, StarSpec::from_arms([2, 2, 2, 2])),
        (ClassSim2::D0Star, StarSpec::from_arms([1, 2, 2])),
        (ClassSim2::D1, StarSpec::from_arms([1, 2, 2, 2, 2])),
        (ClassSim2::D1Star, StarSpec::from_arms([2, 2, 2])),
        (ClassSim2::D1Box, StarSpec::from_arms([1, 1, 1])),
        (ClassSim2::D2, StarSpec::from_arms([2, 2, 2, 2, 2])),
        (ClassSim2::D2Star, StarSpec::from_arms([2, 2])),
        (ClassSim2::D2Box, StarSpec::from_arms([1, 1, 2])),
        (ClassSim2::D3, StarSpec::from_arms([1, 2, 2, 2, 2, 2])),
        (ClassSim2::D3Box, StarSpec::from_arms([1, 1, 1, 2])),
    ]
}

/// Bistar closed form vs engine, two layers: a full sweep over all side
/// pairs drawn from arm multisets (up to `max_arms_per_side` arms of length
/// up to `max_arm_len`, plus the absent side) across middles `0..=max_middle`,
/// and a targeted pass exercising every cell of both join tables through
/// pinned class representatives (which also re-checks each representative's
/// classification).
pub fn verify_bistars(
    max_arms_per_side: usize,
    max_arm_len: usize,
    max_middle: usize,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let code = code_033();
    let cache = EvalCache::new(code.clone());
    let mut sides = vec![StarSpec::empty()];
    sides.extend(
        arm_multisets(max_arms_per_side, max_arm_len)
            .into_iter()
            .map(StarSpec::from_arms),
    );
    let reps1 = sim1_representatives();
    let reps2 = sim2_representatives();

    enum Case {
        Sweep(usize, usize, usize),
        Cell1(usize, usize),
        Cell2(usize, usize),
    }
    let mut cases = Vec::new();
    for li in 0..sides.len() {
        for ri in 0..sides.len() {
            for m in 0..=max_middle {
                cases.push(Case::Sweep(li, ri, m));
            }
        }
    }
    for i in 0..reps1.len() {
        for j in 0..reps1.len() {
            cases.push(Case::Cell1(i, j));
        }
    }
    for i in 0..reps2.len() {
        for j in 0..reps2.len() {
            cases.push(Case::Cell2(i, j));
        }
    }

    let compare = |spec: BistarSpec| -> Result<Option<CaseFailure>> {
        let expected = bistar_grundy(&spec);
        let actual = grundy(&spec.realize(), &code, &cache)?;
        Ok(check(spec.to_string(), expected, actual))
    };
    let results = exec::map_cases(cases, |case| -> Result<Option<CaseFailure>> {
        match case {
            Case::Sweep(li, ri, m) => {
                compare(BistarSpec::new(sides[li].clone(), m, sides[ri].clone()))
            }
            Case::Cell1(i, j) => {
                let (class_a, side_a) = &reps1[i];
                let (class_b, side_b) = &reps1[j];
                let got = classify_sim1(side_a);
                if got != *class_a {
                    return Ok(check(format!("classify {side_a}"), class_a, got));
                }
                let got = classify_sim1(side_b);
                if got != *class_b {
                    return Ok(check(format!("classify {side_b}"), class_b, got));
                }
                compare(BistarSpec::new(side_a.clone(), 1, side_b.clone()))
            }
            Case::Cell2(i, j) => {
                let (class_a, side_a) = &reps2[i];
                let (class_b, side_b) = &reps2[j];
                let got = classify_sim2(side_a);
                if got != *class_a {
                    return Ok(check(format!("classify {side_a}"), class_a, got));
                }
                let got = classify_sim2(side_b);
                if got != *class_b {
                    return Ok(check(format!("classify {side_b}"), class_b, got));
                }
                compare(BistarSpec::new(side_a.clone(), 2, side_b.clone()))
            }
        }
    });
    let (cases, failures) = collect(results)?;
    let notes = vec![
        format!("side shapes swept: {}", sides.len()),
        format!("first join table cells exercised: {}", reps1.len() * reps1.len()),
        format!("second join table cells exercised: {}", reps2.len() * reps2.len()),
    ];
    Ok(report("bistars", started, cases, failures, &[&cache], notes))
}

// ---------------------------------------------------------------------------
// The sensitivity counterexample
// ---------------------------------------------------------------------------

/// The bistar whose value is sensitive to where a 3-path is attached:
/// left arms {1,1}, two middle edges, right arms {1,2}.
fn sensitive_bistar() -> BistarSpec {
    BistarSpec::new(
        StarSpec::from_arms([1, 1]),
        2,
        StarSpec::from_arms([1, 2]),
    )
}

/// Certifies that attaching the same 3-vertex path at different vertices of
/// one 8-vertex bistar changes the value — at either center the value stays
/// 2 (the formulas are attachment-blind there), but at the inner vertex of
/// the right length-2 arm it drops to 0, flipping the outcome from N to P.
pub fn verify_counterexample() -> Result<VerificationReport> {
    let started = Instant::now();
    let code = code_033();
    let cache = EvalCache::new(code.clone());
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut push = |f: Option<CaseFailure>| {
        cases += 1;
        if let Some(f) = f {
            failures.push(f);
        }
    };

    let spec = sensitive_bistar();
    let (base, left_center, right_center) = spec.realize_with_centers();
    let left_center = left_center.expect("left side is present");
    let right_center = right_center.expect("right side is present");

    let base_value = grundy(&base, &code, &cache)?;
    push(check(format!("{spec} (engine)"), 2, base_value));
    push(check(format!("{spec} (closed form)"), 2, bistar_grundy(&spec)));
    push(check(
        format!("{spec} (outcome)"),
        Outcome::N,
        Outcome::from_value(base_value),
    ));

    // The attachment vertex: the inner vertex of the right star's length-2
    // arm — degree 2, adjacent to the right center, its other neighbor a
    // leaf. The layout guarantees exactly one such vertex.
    let candidates: Vec<usize> = base
        .neighbors(right_center)
        .iter()
        .copied()
        .filter(|&x| {
            base.degree(x) == 2
                && base
                    .neighbors(x)
                    .iter()
                    .any(|&y| y != right_center && base.degree(y) == 1)
        })
        .collect();
    push(check(
        "unique inner vertex of the right length-2 arm".to_string(),
        1,
        candidates.len(),
    ));
    if let [attach] = candidates.as_slice() {
        let modified = base.attach_path(*attach, 3)?;
        let v = grundy(&modified, &code, &cache)?;
        push(check("3-path attached at the inner arm vertex".to_string(), 0, v));
        push(check(
            "3-path attached at the inner arm vertex (outcome)".to_string(),
            Outcome::P,
            Outcome::from_value(v),
        ));
    }
    for (label, at) in [("left", left_center), ("right", right_center)] {
        let modified = base.attach_path(at, 3)?;
        let v = grundy(&modified, &code, &cache)?;
        push(check(format!("3-path attached at the {label} center"), 2, v));
    }
    // The closed form agrees for the center attachments, where the extra
    // 3-arm reduces away.
    for (label, spec) in [
        (
            "left",
            BistarSpec::new(
                StarSpec::from_arms([1, 1, 3]),
                2,
                StarSpec::from_arms([1, 2]),
            ),
        ),
        (
            "right",
            BistarSpec::new(
                StarSpec::from_arms([1, 1]),
                2,
                StarSpec::from_arms([1, 2, 3]),
            ),
        ),
    ] {
        push(check(format!("{label} center attachment (closed form)"), 2, bistar_grundy(&spec)));
    }

    drop(push);
    Ok(report("counterexample", started, cases, failures, &[&cache], Vec::new()))
}

// ---------------------------------------------------------------------------
// The large caterpillar
// ---------------------------------------------------------------------------

/// Evaluates the certified 52-vertex caterpillar (and two structural
/// controls: its mirror image, and the bare 37-spine, which is a path) with
/// the full engine. This is the heavyweight suite — several hundred
/// thousand distinct positions.
pub fn verify_caterpillar() -> Result<VerificationReport> {
    let started = Instant::now();
    let code = code_033();
    let cache = EvalCache::new(code.clone());
    let spec = CaterpillarSpec::new(CATERPILLAR_SPINE, CATERPILLAR_LEGS)?;
    let mirrored = spec.mirrored();
    let bare = CaterpillarSpec::new(CATERPILLAR_SPINE, [])?;
    let cases = vec![
        (spec.to_string(), spec.realize(), CATERPILLAR_VALUE),
        (mirrored.to_string(), mirrored.realize(), CATERPILLAR_VALUE),
        (bare.to_string(), bare.realize(), path_grundy(CATERPILLAR_SPINE)),
    ];
    let results = exec::map_cases(cases, |(input, g, expected)| -> Result<Option<CaseFailure>> {
        let actual = grundy(&g, &code, &cache)?;
        Ok(check(input, expected, actual))
    });
    let (cases, failures) = collect(results)?;
    let notes = vec![
        format!("{spec} evaluates to {CATERPILLAR_VALUE}"),
        format!("distinct positions memoized: {}", cache.entries()),
    ];
    Ok(report("caterpillar", started, cases, failures, &[&cache], notes))
}

// ---------------------------------------------------------------------------
// Heaps vs paths
// ---------------------------------------------------------------------------

/// Codes whose heap games the suite compares against their path games.
pub const HEAP_PATH_CODES: [&str; 5] = ["0.3", "0.33", "0.6", "0.07", "0.137"];

/// For each code in [`HEAP_PATH_CODES`], the heap recursion and the graph
/// engine on paths must produce the same values for all `n <= n_max` — on
/// paths, "remove i adjacent vertices" and "take i tokens" are the same
/// game. Also pins the eventual period of the `0.33` sequence.
pub fn verify_heap_path(n_max: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let codes: Vec<OctalCode> = HEAP_PATH_CODES
        .iter()
        .map(|s| OctalCode::parse(s))
        .collect::<Result<_>>()?;
    let heap_values: Vec<Vec<GrundyValue>> =
        codes.iter().map(|c| grundy_sequence(c, n_max)).collect();
    let caches: Vec<EvalCache> = codes.iter().map(|c| EvalCache::new(c.clone())).collect();

    enum Case {
        HeapVsPath(usize, usize),
        Period033,
    }
    let mut cases = Vec::new();
    for ci in 0..codes.len() {
        for n in 0..=n_max {
            cases.push(Case::HeapVsPath(ci, n));
        }
    }
    cases.push(Case::Period033);

    let results = exec::map_cases(cases, |case| -> Result<Option<CaseFailure>> {
        match case {
            Case::HeapVsPath(ci, n) => {
                let actual = grundy(&build_path(n), &codes[ci], &caches[ci])?;
                Ok(check(
                    format!("{} heap {n} vs path:{n}", codes[ci]),
                    heap_values[ci][n],
                    actual,
                ))
            }
            Case::Period033 => {
                let seq = grundy_sequence(&code_033(), 60);
                let got = detect_period(&seq)
                    .map(|(s, p)| format!("preperiod {s}, period {p}"))
                    .unwrap_or_else(|| "none".to_string());
                Ok(check(
                    "0.33 heap sequence period".to_string(),
                    "preperiod 0, period 3",
                    got,
                ))
            }
        }
    });
    let (cases, failures) = collect(results)?;
    let cache_refs: Vec<&EvalCache> = caches.iter().collect();
    Ok(report("heap-path", started, cases, failures, &cache_refs, Vec::new()))
}

// ---------------------------------------------------------------------------
// Caterpillar search
// ---------------------------------------------------------------------------

/// One caterpillar hitting the search target.
#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub spec: CaterpillarSpec,
    pub grundy: GrundyValue,
}

/// Result of an exhaustive caterpillar sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub spine_max: usize,
    pub target: GrundyValue,
    /// Instances evaluated to completion.
    pub examined: u64,
    /// Instances whose value equals `target`, in enumeration order.
    pub matches: Vec<SearchHit>,
    /// First instance attaining the largest value seen.
    pub best: Option<SearchHit>,
    /// Instances abandoned at the per-instance cache cap.
    pub skipped: Vec<String>,
    pub elapsed_ms: u64,
}

/// Evaluate every caterpillar with spine length `1..=spine_max` and any set
/// of legs at interior spine positions, reporting those whose value equals
/// `target`. Mirror images count once. Each instance gets its own cache
/// capped at `cache_limit` entries; instances over the cap are listed as
/// skipped rather than failing the sweep.
///
/// The search space doubles with each interior position, so `spine_max` is
/// limited to 24.
pub fn search_caterpillars(
    spine_max: usize,
    target: GrundyValue,
    cache_limit: usize,
) -> Result<SearchReport> {
    if spine_max > 24 {
        return Err(Error::InvalidArgument(format!(
            "search over spine length {spine_max} would enumerate 2^{} leg sets; \
             the limit is spine length 24",
            spine_max.saturating_sub(2)
        )));
    }
    let started = Instant::now();
    let code = code_033();
    let mut specs = Vec::new();
    for spine in 1..=spine_max {
        let interior: Vec<usize> = (1..spine.saturating_sub(1)).collect();
        for mask in 0u64..(1u64 << interior.len()) {
            let legs: Vec<usize> = interior
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let spec = CaterpillarSpec::new(spine, legs)?;
            if spec.canonical() == spec {
                specs.push(spec);
            }
        }
    }
    let results = exec::map_cases(specs, |spec| {
        let cache = EvalCache::with_limit(code.clone(), cache_limit);
        let value = grundy(&spec.realize(), &code, &cache);
        (spec, value)
    });

    let mut examined = 0u64;
    let mut matches = Vec::new();
    let mut best: Option<SearchHit> = None;
    let mut skipped = Vec::new();
    for (spec, value) in results {
        match value {
            Ok(v) => {
                examined += 1;
                if v == target {
                    matches.push(SearchHit { spec: spec.clone(), grundy: v });
                }
                if best.as_ref().map_or(true, |b| v > b.grundy) {
                    best = Some(SearchHit { spec, grundy: v });
                }
            }
            Err(Error::ResourceLimit { .. }) => skipped.push(spec.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(SearchReport {
        spine_max,
        target,
        examined,
        matches,
        best,
        skipped,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}
