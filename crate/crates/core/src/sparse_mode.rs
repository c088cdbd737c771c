//! Sparse mode table: precomputed modes of every run of whole blocks, plus a
//! candidate scan of the partial blocks at either end of a query.
//!
//! With block size `s = ceil(n^eps)` the tables hold `2 t^2` cells for
//! `t = ceil(n / s)` blocks and a query does `O(s)` work. At `eps = 1/2` the
//! whole structure is linear in `n`.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::occurrence::OccurrenceIndex;
use crate::ranked::{ModeAnswer, QueryRange, RankedArray};
use crate::work::Workspace;
use crate::RangeMode;

/// `ceil(n^epsilon)`, clamped to `[1, n]`.
///
/// A power that lands within 1e-9 above an integer is treated as that integer,
/// so `block_size(16, 0.5) == 4` regardless of `powf` rounding.
pub fn block_size(n: usize, epsilon: f64) -> usize {
    let x = (n as f64).powf(epsilon);
    let c = x.ceil();
    let s = if c > 1.0 && x - (c - 1.0) < 1e-9 {
        c - 1.0
    } else {
        c
    };
    (s as usize).clamp(1, n.max(1))
}

/// How a query range splits into prefix, span (whole blocks), and suffix.
///
/// All three are 1-based inclusive position ranges; an empty part has
/// `start > end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Index of the first block fully inside the range.
    pub first_block: usize,
    /// Index of the last block fully inside the range; `-1` when none can be.
    pub last_block: isize,
    pub prefix: RangeInclusive<usize>,
    pub span: RangeInclusive<usize>,
    pub suffix: RangeInclusive<usize>,
}

impl Decomposition {
    pub fn new(r: QueryRange, s: usize) -> Self {
        let first_block = (r.i - 1).div_ceil(s);
        let last_block = (r.j / s) as isize - 1;
        let prefix_end = (first_block * s).min(r.j);
        let span = if first_block as isize <= last_block {
            first_block * s + 1..=(last_block as usize + 1) * s
        } else {
            #[allow(clippy::reversed_empty_ranges)]
            {
                1..=0
            }
        };
        // When both ends fall in one block the literal suffix start would
        // overlap the prefix, so it is pushed past the prefix.
        let suffix_start = (((last_block + 1) as usize) * s + 1)
            .max(r.i)
            .max(prefix_end + 1);
        Self {
            first_block,
            last_block,
            prefix: r.i..=prefix_end,
            span,
            suffix: suffix_start..=r.j,
        }
    }

    pub fn has_span(&self) -> bool {
        self.first_block as isize <= self.last_block
    }
}

#[derive(Debug, Clone)]
pub struct SparseModeTable<'a> {
    ranked: &'a RankedArray,
    occ: &'a OccurrenceIndex,
    epsilon: f64,
    block: usize,
    blocks: usize,
    /// `S`, stored as a 1-based witness position of a mode of each span; the
    /// mode's rank is `B` at that position.
    span_witness: Vec<u32>,
    /// `S'`.
    span_freq: Vec<u32>,
}

impl<'a> SparseModeTable<'a> {
    /// Builds both tables one row per left block, each row from a single
    /// rightward scan with a running tally.
    pub fn build(ranked: &'a RankedArray, occ: &'a OccurrenceIndex, epsilon: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&epsilon) {
            return Err(Error::BadEpsilon(epsilon));
        }
        let n = ranked.len();
        let s = block_size(n, epsilon);
        let t = n.div_ceil(s);
        let ranks = ranked.raw_ranks();
        let mut span_witness = vec![0u32; t * t];
        let mut span_freq = vec![0u32; t * t];
        let mut tally = vec![0u32; ranked.distinct_count()];

        for bi in 0..t {
            let start = bi * s;
            let (mut best_f, mut best_pos) = (0u32, 0u32);
            for (x, &a) in ranks.iter().enumerate().skip(start) {
                let a = a as usize;
                tally[a] += 1;
                if tally[a] > best_f {
                    best_f = tally[a];
                    best_pos = x as u32 + 1;
                }
                if (x + 1) % s == 0 || x + 1 == n {
                    let bj = x / s;
                    span_witness[bi * t + bj] = best_pos;
                    span_freq[bi * t + bj] = best_f;
                }
            }
            for &a in &ranks[start..] {
                tally[a as usize] = 0;
            }
        }

        Ok(Self {
            ranked,
            occ,
            epsilon,
            block: s,
            blocks: t,
            span_witness,
            span_freq,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    /// Mode of blocks `bi..=bj` as `(1-based rank, frequency, witness)`.
    pub fn span_mode(&self, bi: usize, bj: usize) -> Option<(usize, usize, usize)> {
        if bi > bj || bj >= self.blocks {
            return None;
        }
        let slot = bi * self.blocks + bj;
        let pos = self.span_witness[slot] as usize;
        Some((self.ranked.rank(pos), self.span_freq[slot] as usize, pos))
    }

    /// Cells held by `S` and `S'`.
    pub fn table_cells(&self) -> usize {
        self.span_witness.len() + self.span_freq.len()
    }

    /// Auxiliary cells: `S`, `S'`, the occurrence lists, and `B'`.
    pub fn aux_cells(&self) -> usize {
        self.table_cells() + self.occ.storage_cells()
    }

    pub fn decompose(&self, r: QueryRange) -> Decomposition {
        Decomposition::new(r, self.block)
    }

    /// Overwrites one `S'` entry. Exists so verification tooling can check that
    /// a corrupted table is caught.
    #[doc(hidden)]
    pub fn corrupt_span_frequency(&mut self, bi: usize, bj: usize, frequency: u32) {
        self.span_freq[bi * self.blocks + bj] = frequency;
    }

    pub fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        let ra = self.ranked;
        debug_assert!(r.is_valid_for(ra.len()));
        ws.begin(ra.distinct_count());
        let ranks = ra.raw_ranks();
        let d = self.decompose(r);

        // Span mode; f_c = 0 on an empty span.
        let (mut best_f, mut best_pos) = (0usize, 0usize);
        if d.has_span() {
            ws.counters.cells_touched += 1;
            let slot = d.first_block * self.blocks + d.last_block as usize;
            best_f = self.span_freq[slot] as usize;
            best_pos = self.span_witness[slot] as usize;
        }

        let Workspace { tally, counters } = ws;

        // The first copy of an element seen in the prefix has every copy in
        // the range at or to its right.
        for x in d.prefix.clone() {
            counters.cells_touched += 1;
            let a = ranks[x - 1] as usize;
            if tally[a] != 0 {
                continue;
            }
            let q = best_f + 1;
            if self.occ.forward_reaches(a, x, r.j, q, counters) {
                let f = self.occ.forward_count(a, x, r.j, q, counters);
                tally[a] = f as u32;
                best_f = f;
                best_pos = x;
            }
        }
        // Mirror image for the suffix, scanned right to left.
        for x in d.suffix.clone().rev() {
            counters.cells_touched += 1;
            let a = ranks[x - 1] as usize;
            if tally[a] != 0 {
                continue;
            }
            let q = best_f + 1;
            if self.occ.backward_reaches(a, x, r.i, q, counters) {
                let f = self.occ.backward_count(a, x, r.i, q, counters);
                tally[a] = f as u32;
                best_f = f;
                best_pos = x;
            }
        }

        for x in d.prefix.clone().chain(d.suffix.clone()) {
            counters.cells_touched += 1;
            tally[ranks[x - 1] as usize] = 0;
        }

        ra.answer(ranks[best_pos - 1] as usize, best_f, best_pos)
    }
}

impl RangeMode for SparseModeTable<'_> {
    fn name(&self) -> &'static str {
        "sparse-mode"
    }

    fn ranked(&self) -> &RankedArray {
        self.ranked
    }

    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        SparseModeTable::query(self, r, ws)
    }
}
