//! `verify` command: every applicable structure against the brute-force
//! oracle, on listed or all ranges.

use std::fmt;

use rangemode_core::multidim::{oracle_grid_mode, validate_grid_answer};
use rangemode_core::{
    oracle_mode, GridArray, GridRange, GridRangeMode, ModeAnswer, OccurrenceIndex, QueryRange,
    RangeMode, RankedArray, Workspace,
};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::input::{LoadedArray, QueryLine};
use crate::structures::{build_grid, build_linear, Params, StructureKind};

/// Largest array (in cells) `--exhaustive` accepts.
pub const EXHAUSTIVE_LIMIT: usize = 2048;

pub enum RangeSource {
    Exhaustive,
    Listed(Vec<QueryLine>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub structure: String,
    pub range: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub structures: Vec<String>,
    pub ranges: usize,
    pub skipped: usize,
    pub failure: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "structures: {}", self.structures.join(","))?;
        writeln!(f, "ranges: {}", self.ranges)?;
        if self.skipped > 0 {
            writeln!(f, "skipped invalid ranges: {}", self.skipped)?;
        }
        match &self.failure {
            None => write!(f, "PASS"),
            Some(m) => write!(
                f,
                "FAIL structure={} range={} {}",
                m.structure, m.range, m.detail
            ),
        }
    }
}

/// A one-axis grid structure seen as an array structure.
struct GridAsLinear<'a> {
    inner: &'a (dyn GridRangeMode + Sync),
    ranked: &'a RankedArray,
}

impl RangeMode for GridAsLinear<'_> {
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn ranked(&self) -> &RankedArray {
        self.ranked
    }

    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        let r = GridRange {
            lo: vec![r.i],
            hi: vec![r.j],
        };
        self.inner.query(&r, ws)
    }
}

fn check_linear(
    ra: &RankedArray,
    oi: &OccurrenceIndex,
    r: QueryRange,
    a: &ModeAnswer,
    expected: usize,
) -> std::result::Result<(), String> {
    if a.frequency != expected {
        return Err(format!("frequency {} expected {expected}", a.frequency));
    }
    if a.witness < r.i || a.witness > r.j {
        return Err(format!("witness {} outside range", a.witness));
    }
    if ra.value(a.witness) != a.element || ra.token_of_rank(a.rank) != a.element {
        return Err(format!("witness {} does not hold {}", a.witness, a.element));
    }
    let occ = oi.occurrences(a.rank);
    let count =
        occ.partition_point(|&p| p as usize <= r.j) - occ.partition_point(|&p| (p as usize) < r.i);
    if count != a.frequency {
        return Err(format!(
            "{} occurs {count} times, claimed {}",
            a.element, a.frequency
        ));
    }
    Ok(())
}

fn fmt_range(r: QueryRange) -> String {
    format!("[{},{}]", r.i, r.j)
}

/// Runs `structures` on `ranges` (or on every range when `None`) and reports
/// the first disagreement with the oracle.
pub fn verify_linear(
    structures: &[&(dyn RangeMode + Sync)],
    ra: &RankedArray,
    ranges: Option<&[QueryRange]>,
) -> VerifyReport {
    let oi = OccurrenceIndex::build(ra);
    let n = ra.len();
    let new_workspaces =
        || -> Vec<Workspace> { structures.iter().map(|s| s.workspace()).collect() };
    let check = |wss: &mut Vec<Workspace>, r: QueryRange, expected: usize| -> Option<Mismatch> {
        for (s, ws) in structures.iter().zip(wss.iter_mut()) {
            let a = s.query(r, ws);
            if let Err(detail) = check_linear(ra, &oi, r, &a, expected) {
                return Some(Mismatch {
                    structure: s.name().to_string(),
                    range: fmt_range(r),
                    detail,
                });
            }
        }
        None
    };

    let (count, failure) = match ranges {
        None => {
            // Row i sweeps j rightward with a running tally as the oracle.
            let ranks: Vec<usize> = (1..=n).map(|p| ra.rank(p) - 1).collect();
            let failure = (1..=n)
                .into_par_iter()
                .map_init(
                    || (new_workspaces(), vec![0usize; ra.distinct_count()]),
                    |(wss, tally), i| {
                        let mut best = 0;
                        let mut found = None;
                        for j in i..=n {
                            tally[ranks[j - 1]] += 1;
                            best = best.max(tally[ranks[j - 1]]);
                            if found.is_none() {
                                found = check(wss, QueryRange::new(i, j), best);
                            }
                        }
                        for &a in &ranks[i - 1..] {
                            tally[a] = 0;
                        }
                        found
                    },
                )
                .find_first(Option::is_some)
                .flatten();
            (n * (n + 1) / 2, failure)
        }
        Some(list) => {
            let failure = list
                .par_iter()
                .map_init(new_workspaces, |wss, &r| {
                    check(wss, r, oracle_mode(ra, r).frequency)
                })
                .find_first(Option::is_some)
                .flatten();
            (list.len(), failure)
        }
    };
    VerifyReport {
        structures: structures.iter().map(|s| s.name().to_string()).collect(),
        ranges: count,
        skipped: 0,
        failure,
    }
}

pub fn verify_grid(
    structures: &[&(dyn GridRangeMode + Sync)],
    grid: &GridArray,
    ranges: &[GridRange],
) -> VerifyReport {
    let failure = ranges
        .par_iter()
        .map_init(
            || structures.iter().map(|s| s.workspace()).collect::<Vec<_>>(),
            |wss, r| {
                let expected = oracle_grid_mode(grid, r).frequency;
                for (s, ws) in structures.iter().zip(wss.iter_mut()) {
                    let a = s.query(r, ws);
                    let res = if a.frequency != expected {
                        Err(format!("frequency {} expected {expected}", a.frequency))
                    } else {
                        validate_grid_answer(grid, r, &a)
                    };
                    if let Err(detail) = res {
                        return Some(Mismatch {
                            structure: s.name().to_string(),
                            range: format!("{:?}..{:?}", r.lo, r.hi),
                            detail,
                        });
                    }
                }
                None
            },
        )
        .find_first(Option::is_some)
        .flatten();
    VerifyReport {
        structures: structures.iter().map(|s| s.name().to_string()).collect(),
        ranges: ranges.len(),
        skipped: 0,
        failure,
    }
}

/// Every box of a grid, in row-major order of `(lo, hi)`.
pub fn all_boxes(dims: &[usize]) -> Vec<GridRange> {
    let mut out = vec![(vec![], vec![])];
    for &n in dims {
        out = out
            .into_iter()
            .flat_map(|(lo, hi): (Vec<usize>, Vec<usize>)| {
                (1..=n).flat_map(move |a| {
                    let (lo, hi) = (lo.clone(), hi.clone());
                    (a..=n).map(move |b| {
                        let mut l = lo.clone();
                        let mut h = hi.clone();
                        l.push(a);
                        h.push(b);
                        (l, h)
                    })
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|(lo, hi)| GridRange { lo, hi })
        .collect()
}

/// Verifies every structure applicable to `array`: on a plain array the four
/// array structures plus both grid structures on one axis; on a grid, the two
/// grid structures.
pub fn verify(array: &LoadedArray, params: &Params, source: RangeSource) -> Result<VerifyReport> {
    let cells: usize = array.dims().iter().product();
    if matches!(source, RangeSource::Exhaustive) && cells > EXHAUSTIVE_LIMIT {
        return Err(CliError::Usage(format!(
            "--exhaustive supports at most {EXHAUSTIVE_LIMIT} cells, array has {cells}"
        )));
    }
    let grid = array.to_grid()?;
    let grids: Vec<_> = StructureKind::GRID
        .iter()
        .map(|&k| build_grid(k, params, &grid))
        .collect::<Result<_>>()?;

    let (listed, skipped) = match &source {
        RangeSource::Exhaustive => (None, 0),
        RangeSource::Listed(lines) => {
            let valid: Vec<QueryLine> = lines
                .iter()
                .filter(|q| !matches!(q, QueryLine::Invalid))
                .cloned()
                .collect();
            let skipped = lines.len() - valid.len();
            (Some(valid), skipped)
        }
    };

    let mut report = match array {
        LoadedArray::Linear(ra) => {
            let oi = OccurrenceIndex::build(ra);
            let linear: Vec<_> = StructureKind::LINEAR
                .iter()
                .map(|&k| build_linear(k, params, ra, &oi))
                .collect::<Result<_>>()?;
            let adapters: Vec<GridAsLinear> = grids
                .iter()
                .map(|g| GridAsLinear {
                    inner: g.as_ref(),
                    ranked: ra,
                })
                .collect();
            let mut all: Vec<&(dyn RangeMode + Sync)> = linear.iter().map(|b| b.as_ref()).collect();
            all.extend(adapters.iter().map(|a| a as &(dyn RangeMode + Sync)));
            let ranges: Option<Vec<QueryRange>> = listed.map(|v| {
                v.into_iter()
                    .filter_map(|q| match q {
                        QueryLine::Linear(r) => Some(r),
                        _ => None,
                    })
                    .collect()
            });
            verify_linear(&all, ra, ranges.as_deref())
        }
        LoadedArray::Grid(g) => {
            let ranges: Vec<GridRange> = match listed {
                None => all_boxes(g.dims()),
                Some(v) => v
                    .into_iter()
                    .filter_map(|q| match q {
                        QueryLine::Grid(r) => Some(r),
                        _ => None,
                    })
                    .collect(),
            };
            let all: Vec<&(dyn GridRangeMode + Sync)> = grids.iter().map(|b| b.as_ref()).collect();
            verify_grid(&all, g, &ranges)
        }
    };
    report.skipped = skipped;
    Ok(report)
}
