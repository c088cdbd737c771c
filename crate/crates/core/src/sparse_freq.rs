//! Sparse frequency tables: a full size-k tally of every prefix `B[1..p]` for
//! `p` a multiple of the block size. A query subtracts two snapshots, patches
//! in the partial blocks, and takes the maximum, for `O(k + s)` work.

use crate::error::{Error, Result};
use crate::occurrence::OccurrenceIndex;
use crate::ranked::{ModeAnswer, QueryRange, RankedArray};
use crate::work::Workspace;
use crate::RangeMode;

#[derive(Debug, Clone)]
pub struct PrefixFrequencyTables<'a> {
    ranked: &'a RankedArray,
    occ: &'a OccurrenceIndex,
    block: usize,
    /// Snapshot `C_{p}` occupies `snapshots[(p / s) * k..][..k]`.
    snapshots: Vec<u32>,
}

impl<'a> PrefixFrequencyTables<'a> {
    /// Block size `s = k`, which keeps the snapshots linear in `n`.
    pub fn build_auto(ranked: &'a RankedArray, occ: &'a OccurrenceIndex) -> Self {
        let s = ranked.distinct_count().min(ranked.len());
        Self::build(ranked, occ, s).expect("1 <= k <= n")
    }

    /// Snapshots are emitted during a single pass over `B`.
    pub fn build(ranked: &'a RankedArray, occ: &'a OccurrenceIndex, s: usize) -> Result<Self> {
        let n = ranked.len();
        if s < 1 || s > n {
            return Err(Error::BadBlockSize { size: s, n });
        }
        let k = ranked.distinct_count();
        let count = n / s + 1;
        let mut snapshots = vec![0u32; count * k];
        let mut running = vec![0u32; k];
        for (x, &a) in ranked.raw_ranks().iter().enumerate() {
            running[a as usize] += 1;
            if (x + 1) % s == 0 {
                let at = (x + 1) / s * k;
                snapshots[at..at + k].copy_from_slice(&running);
            }
        }
        Ok(Self {
            ranked,
            occ,
            block: s,
            snapshots,
        })
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn snapshot_count(&self) -> usize {
        self.snapshots.len() / self.ranked.distinct_count()
    }

    /// `C_p` for a multiple `p` of the block size.
    pub fn snapshot(&self, p: usize) -> &[u32] {
        assert_eq!(p % self.block, 0, "no snapshot at {p}");
        let k = self.ranked.distinct_count();
        &self.snapshots[p / self.block * k..][..k]
    }

    pub fn storage_cells(&self) -> usize {
        self.snapshots.len()
    }

    /// Steps 1-3: leaves the exact frequency table of `r` in `ws.tally`.
    fn fill_table(&self, r: QueryRange, ws: &mut Workspace) {
        let s = self.block;
        let k = self.ranked.distinct_count();
        let ranks = self.ranked.raw_ranks();
        let p = s * ((r.i - 1) / s);
        let p2 = s * (r.j / s);
        let Workspace { tally, counters } = ws;

        let (lo, hi) = (self.snapshot(p), self.snapshot(p2));
        for x in 0..k {
            tally[x] = hi[x] - lo[x];
        }
        counters.cells_touched += k as u64;

        // Add the right fringe before removing the left one so no slot dips
        // below zero when both fringes sit in the same block.
        for &a in &ranks[p2..r.j] {
            tally[a as usize] += 1;
        }
        for &a in &ranks[p..r.i - 1] {
            tally[a as usize] -= 1;
        }
        counters.cells_touched += (r.j - p2 + r.i - 1 - p) as u64;
    }

    /// Exact frequency table (indexed by 0-based rank) of `r`.
    pub fn frequency_table(&self, r: QueryRange) -> Vec<u32> {
        let k = self.ranked.distinct_count();
        let mut ws = Workspace::new(k);
        self.fill_table(r, &mut ws);
        std::mem::replace(&mut ws.tally, vec![0; k])
    }

    pub fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        let ra = self.ranked;
        debug_assert!(r.is_valid_for(ra.len()));
        let k = ra.distinct_count();
        ws.begin(k);
        self.fill_table(r, ws);

        let (mut best_f, mut best_rank) = (0u32, 0usize);
        for (x, c) in ws.tally[..k].iter_mut().enumerate() {
            if *c > best_f {
                best_f = *c;
                best_rank = x;
            }
            *c = 0;
        }
        ws.counters.cells_touched += k as u64;

        let witness = self
            .occ
            .first_at_or_after(best_rank, r.i, &mut ws.counters)
            .expect("mode occurs in range");
        ra.answer(best_rank, best_f as usize, witness)
    }
}

impl RangeMode for PrefixFrequencyTables<'_> {
    fn name(&self) -> &'static str {
        "sparse-freq"
    }

    fn ranked(&self) -> &RankedArray {
        self.ranked
    }

    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer {
        PrefixFrequencyTables::query(self, r, ws)
    }
}
