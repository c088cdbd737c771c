//! Low-frequency mode structure, parameterized by the global mode frequency
//! `m`. For every block boundary `p` it stores `F_p[1..=m]`: `F_p[x]` is the
//! furthest right end `j` such that the mode of `B[p+1..=j]` occurs at most `x`
//! times. A query resolves everything right of the first boundary inside the
//! range by a successor search on `F_p`, then scans the prefix with the
//! occurrence-list test.

use crate::counting::tally_range;
use crate::error::{Error, Result};
use crate::occurrence::OccurrenceIndex;
use crate::ranked::{ModeAnswer, QueryRange, RankedArray};
use crate::work::Workspace;
use crate::RangeMode;

#[derive(Debug, Clone)]
pub struct LowFrequencyStructure<'a> {
    ranked: &'a RankedArray,
    occ: &'a OccurrenceIndex,
    block: usize,
    mode_freq: usize,
    /// `F_p[x]` at `ends[(p / s) * m + x - 1]`.
    ends: Vec<u32>,
    /// Position at which frequency `x` was first reached right of `p`; the
    /// element there is a mode of `B[p+1..=j]` for every `j` in
    /// `(F_p[x-1], F_p[x]]`. Entries past the largest reachable frequency
    /// repeat the last real one.
    witness: Vec<u32>,
}

/// Frequency of the most frequent element of the whole array.
pub fn global_mode_frequency(ra: &RankedArray) -> usize {
    let mut tally = vec![0usize; ra.distinct_count()];
    let mut m = 0;
    for &a in ra.raw_ranks() {
        tally[a as usize] += 1;
        m = m.max(tally[a as usize]);
    }
    m
}

impl<'a> LowFrequencyStructure<'a> {
    /// Block size `s = m`, the linear-space choice.
    pub fn build_auto(ranked: &'a RankedArray, occ: &'a OccurrenceIndex) -> Self {
        let m = global_mode_frequency(ranked);
        Self::build(ranked, occ, m).expect("1 <= m <= n")
    }

    pub fn build(ranked: &'a RankedArray, occ: &'a OccurrenceIndex, s: usize) -> Result<Self> {
        let n = ranked.len();
        if s < 1 || s > n {
            return Err(Error::BadBlockSize { size: s, n });
        }
        let m = global_mode_frequency(ranked);
        let ranks = ranked.raw_ranks();
        let boundaries = n.div_ceil(s);
        let mut ends = vec![0u32; boundaries * m];
        let mut witness = vec![0u32; boundaries * m];
        let mut tally = vec![0u32; ranked.distinct_count()];

        for (row, p) in (0..n).step_by(s).enumerate() {
            let base = row * m;
            let mut cur = 0usize;
            for j in p + 1..=n {
                let a = ranks[j - 1] as usize;
                tally[a] += 1;
                if tally[a] as usize > cur {
                    if cur >= 1 {
                        ends[base + cur - 1] = (j - 1) as u32;
                    }
                    cur += 1;
                    witness[base + cur - 1] = j as u32;
                }
            }
            let last = witness[base + cur - 1];
            for x in cur..=m {
                ends[base + x - 1] = n as u32;
                witness[base + x - 1] = last;
            }
            for &a in &ranks[p..] {
                tally[a as usize] = 0;
            }
        }

        Ok(Self {
            ranked,
            occ,
            block: s,
            mode_freq: m,
            ends,
            witness,
        })
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    /// Global mode frequency `m`.
    pub fn mode_frequency(&self) -> usize {
        self.mode_freq
    }

    pub fn boundary_count(&self) -> usize {
        self.ends.len() / self.mode_freq
    }

    /// `F_p` for boundary `p` (a multiple of the block size below `n`).
    pub fn f_array(&self, p: usize) -> &[u32] {
        assert_eq!(p % self.block, 0, "{p} is not a boundary");
        &self.ends[p / self.block * self.mode_freq..][..self.mode_freq]
    }

    /// Witness positions paired with [`f_array`](Self::f_array).
    pub fn f_witnesses(&self, p: usize) -> &[u32] {
        assert_eq!(p % self.block, 0, "{p} is not a boundary");
        &self.witness[p / self.block * self.mode_freq..][..self.mode_freq]
    }

    /// Cells for `F` and its companion witnesses.
    pub fn storage_cells(&self) -> usize {
        self.ends.len() + self.witness.len()
    }

    /// Mode frequency of `B[p+1..=j]` as `min { x : F_p[x] >= j }`.
    pub fn span_frequency(&self, p: usize, j: usize) -> usize {
        self.f_array(p).partition_point(|&e| (e as usize) < j) + 1
    }

    pub fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        let ra = self.ranked;
        debug_assert!(r.is_valid_for(ra.len()));
        ws.begin(ra.distinct_count());
        let ranks = ra.raw_ranks();
        let s = self.block;
        let p = s * (r.i - 1).div_ceil(s);
        if p >= r.j {
            let (rank, f, w) = tally_range(ranks, ws, r.i, r.j);
            return ra.answer(rank, f, w);
        }

        // Binary search for the successor of j in F_p.
        let row = p / s * self.mode_freq;
        let f_row = &self.ends[row..row + self.mode_freq];
        let (mut lo, mut hi) = (0usize, self.mode_freq);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            ws.counters.successor_probes += 1;
            if (f_row[mid] as usize) < r.j {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        ws.counters.cells_touched += 1;
        let mut best_f = lo + 1;
        let mut best_pos = self.witness[row + lo] as usize;

        let Workspace { tally, counters } = ws;
        for x in r.i..=p {
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
        for x in r.i..=p {
            counters.cells_touched += 1;
            tally[ranks[x - 1] as usize] = 0;
        }

        ra.answer(ranks[best_pos - 1] as usize, best_f, best_pos)
    }
}

impl RangeMode for LowFrequencyStructure<'_> {
    fn name(&self) -> &'static str {
        "low-freq"
    }

    fn ranked(&self) -> &RankedArray {
        self.ranked
    }

    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        LowFrequencyStructure::query(self, r, ws)
    }
}
