//! Counting method: no preprocessing beyond rank reduction; a query tallies
//! its range into the caller's workspace, reads the maximum back off the
//! touched slots, and zeroes them again.

use crate::ranked::{ModeAnswer, QueryRange, RankedArray};
use crate::work::Workspace;
use crate::RangeMode;

/// Mode of `r` in `Θ(|r|)` work. The workspace must be clear on entry and is
/// clear again on return. Touches exactly `3 |r|` cells.
pub fn query(ra: &RankedArray, ws: &mut Workspace, r: QueryRange) -> ModeAnswer {
    debug_assert!(r.is_valid_for(ra.len()));
    ws.begin(ra.distinct_count());
    let (rank, freq, witness) = tally_range(ra.raw_ranks(), ws, r.i, r.j);
    ra.answer(rank, freq, witness)
}

/// Tally, maximize, and reset over 1-based `[i, j]`; returns the 0-based rank,
/// frequency, and first position of the winner.
pub(crate) fn tally_range(
    ranks: &[u32],
    ws: &mut Workspace,
    i: usize,
    j: usize,
) -> (usize, usize, usize) {
    let Workspace { tally, counters } = ws;
    let slice = &ranks[i - 1..j];
    let len = slice.len() as u64;
    for &a in slice {
        tally[a as usize] += 1;
    }
    let (mut best_f, mut best_x) = (0u32, 0usize);
    for (off, &a) in slice.iter().enumerate() {
        if tally[a as usize] > best_f {
            best_f = tally[a as usize];
            best_x = off;
        }
    }
    for &a in slice {
        tally[a as usize] = 0;
    }
    counters.cells_touched += 3 * len;
    (slice[best_x] as usize, best_f as usize, i + best_x)
}

/// [`RangeMode`] adapter for the counting method.
#[derive(Debug, Clone, Copy)]
pub struct CountingMethod<'a> {
    ranked: &'a RankedArray,
}

impl<'a> CountingMethod<'a> {
    pub fn new(ranked: &'a RankedArray) -> Self {
        Self { ranked }
    }
}

impl RangeMode for CountingMethod<'_> {
    fn name(&self) -> &'static str {
        "counting"
    }

    fn ranked(&self) -> &RankedArray {
        self.ranked
    }

    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        query(self.ranked, ws, r)
    }
}
