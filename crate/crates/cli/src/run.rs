//! `query` command: answer every line of a query file in input order.

use rangemode_core::OccurrenceIndex;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::input::{LoadedArray, QueryLine};
use crate::structures::{build_grid, build_linear, Params, StructureKind};

pub const INVALID_RANGE: &str = "ERR invalid-range";

/// One output line per query: `<element>\t<frequency>` or
/// [`INVALID_RANGE`]. Queries run on the rayon pool, one workspace per
/// worker; output order matches input order.
pub fn run_queries(
    kind: StructureKind,
    params: &Params,
    array: &LoadedArray,
    queries: &[QueryLine],
) -> Result<Vec<String>> {
    if kind.is_grid() {
        let grid = array.to_grid()?;
        let s = build_grid(kind, params, &grid)?;
        let s = s.as_ref();
        let d = grid.ndim();
        Ok(queries
            .par_iter()
            .map_init(
                || s.workspace(),
                |ws, q| match q {
                    QueryLine::Grid(r) => {
                        let a = s.query(r, ws);
                        format!("{}\t{}", a.element, a.frequency)
                    }
                    QueryLine::Linear(r) if d == 1 => {
                        let r = rangemode_core::GridRange {
                            lo: vec![r.i],
                            hi: vec![r.j],
                        };
                        let a = s.query(&r, ws);
                        format!("{}\t{}", a.element, a.frequency)
                    }
                    _ => INVALID_RANGE.to_string(),
                },
            )
            .collect())
    } else {
        let LoadedArray::Linear(ra) = array else {
            return Err(CliError::Usage(format!(
                "{} needs a one-dimensional array; use grid or grid-counting",
                kind.name()
            )));
        };
        let oi = OccurrenceIndex::build(ra);
        let s = build_linear(kind, params, ra, &oi)?;
        let s = s.as_ref();
        Ok(queries
            .par_iter()
            .map_init(
                || s.workspace(),
                |ws, q| match q {
                    QueryLine::Linear(r) => {
                        let a = s.query(*r, ws);
                        format!("{}\t{}", a.element, a.frequency)
                    }
                    _ => INVALID_RANGE.to_string(),
                },
            )
            .collect())
    }
}
