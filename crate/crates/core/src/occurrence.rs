//! Occurrence lists `Q_a` and the constant-time "at least q copies" test.

use crate::ranked::RankedArray;
use crate::work::WorkCounters;

/// Sorted occurrence positions per rank, stored back to back.
///
/// `positions[offsets[a]..offsets[a + 1]]` is `Q_{a+1}` (1-based positions,
/// ascending). `slot[b]` is the index of position `b` inside `positions`, so the
/// 1-based rank of `b` within its own list is `slot[b] - offsets[B[b]] + 1`.
#[derive(Debug, Clone)]
pub struct OccurrenceIndex {
    offsets: Vec<u32>,
    positions: Vec<u32>,
    slot: Vec<u32>,
}

impl OccurrenceIndex {
    /// One counting pass plus one placement pass over `B`.
    pub fn build(ra: &RankedArray) -> Self {
        let k = ra.distinct_count();
        let ranks = ra.raw_ranks();
        let mut offsets = vec![0u32; k + 1];
        for &r in ranks {
            offsets[r as usize + 1] += 1;
        }
        for a in 0..k {
            offsets[a + 1] += offsets[a];
        }
        let mut next = offsets.clone();
        let mut positions = vec![0u32; ranks.len()];
        let mut slot = vec![0u32; ranks.len()];
        for (b, &r) in ranks.iter().enumerate() {
            let at = next[r as usize];
            positions[at as usize] = b as u32 + 1;
            slot[b] = at;
            next[r as usize] += 1;
        }
        Self {
            offsets,
            positions,
            slot,
        }
    }

    pub fn distinct_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// `Q_a` for 1-based rank `a`.
    pub fn occurrences(&self, a: usize) -> &[u32] {
        &self.positions[self.offsets[a - 1] as usize..self.offsets[a] as usize]
    }

    /// `B'[b]`: 1-based index of position `b` within its occurrence list.
    pub fn rank_in_element(&self, ra: &RankedArray, b: usize) -> usize {
        let a = ra.raw_ranks()[b - 1] as usize;
        (self.slot[b - 1] - self.offsets[a]) as usize + 1
    }

    /// Storage cells: `n` positions, `n` slots, `k + 1` offsets.
    pub fn storage_cells(&self) -> usize {
        self.positions.len() + self.slot.len() + self.offsets.len()
    }

    /// Does `B[start..=j]` hold at least `q` copies of `B[start]`?
    pub fn freq_at_least(&self, ra: &RankedArray, start: usize, j: usize, q: usize) -> bool {
        self.freq_at_least_counted(ra, start, j, q, &mut WorkCounters::default())
    }

    /// As [`freq_at_least`](Self::freq_at_least), recording its reads: three
    /// cells (`B[start]`, its slot, the list end) and at most one list probe.
    pub fn freq_at_least_counted(
        &self,
        ra: &RankedArray,
        start: usize,
        j: usize,
        q: usize,
        counters: &mut WorkCounters,
    ) -> bool {
        debug_assert!(start >= 1 && start <= j && j <= ra.len() && q >= 1);
        counters.cells_touched += 3;
        let a = ra.raw_ranks()[start - 1] as usize;
        self.forward_reaches(a, start, j, q, counters)
    }

    /// Exact multiplicity of `B[start]` in `B[start..=j]`, given that it is at
    /// least `lower_bound`. Probes the list only past the known lower bound.
    pub fn count_from(
        &self,
        ra: &RankedArray,
        start: usize,
        j: usize,
        lower_bound: usize,
    ) -> usize {
        self.count_from_counted(ra, start, j, lower_bound, &mut WorkCounters::default())
    }

    pub fn count_from_counted(
        &self,
        ra: &RankedArray,
        start: usize,
        j: usize,
        lower_bound: usize,
        counters: &mut WorkCounters,
    ) -> usize {
        assert!(lower_bound >= 1, "lower bound must be positive");
        let a = ra.raw_ranks()[start - 1] as usize;
        counters.cells_touched += 1;
        self.forward_count(a, start, j, lower_bound, counters)
    }

    // The helpers below take the 0-based rank `a` of position `x` already read
    // by the caller.

    /// `Q_a[B'[x] + q - 1] <= j`.
    pub(crate) fn forward_reaches(
        &self,
        a: usize,
        x: usize,
        j: usize,
        q: usize,
        counters: &mut WorkCounters,
    ) -> bool {
        let at = self.slot[x - 1] as usize + q - 1;
        if at >= self.offsets[a + 1] as usize {
            return false;
        }
        counters.occ_probes += 1;
        self.positions[at] as usize <= j
    }

    /// Counts copies of rank `a` in `[x, j]` knowing there are at least `known`.
    pub(crate) fn forward_count(
        &self,
        a: usize,
        x: usize,
        j: usize,
        known: usize,
        counters: &mut WorkCounters,
    ) -> usize {
        let first = self.slot[x - 1] as usize;
        let end = self.offsets[a + 1] as usize;
        let mut y = first + known;
        while y < end {
            counters.occ_probes += 1;
            if self.positions[y] as usize > j {
                break;
            }
            y += 1;
        }
        y - first
    }

    /// `Q_a[B'[x] - q + 1] >= i`: at least `q` copies of rank `a` in `[i, x]`.
    pub(crate) fn backward_reaches(
        &self,
        a: usize,
        x: usize,
        i: usize,
        q: usize,
        counters: &mut WorkCounters,
    ) -> bool {
        let last = self.slot[x - 1] as usize;
        let begin = self.offsets[a] as usize;
        if last + 1 < begin + q {
            return false;
        }
        counters.occ_probes += 1;
        self.positions[last + 1 - q] as usize >= i
    }

    /// Counts copies of rank `a` in `[i, x]` knowing there are at least `known`.
    pub(crate) fn backward_count(
        &self,
        a: usize,
        x: usize,
        i: usize,
        known: usize,
        counters: &mut WorkCounters,
    ) -> usize {
        let last = self.slot[x - 1] as usize;
        let begin = self.offsets[a] as usize;
        // Next candidate slot is last + 1 - (known + 1); walk down while it stays in range.
        let mut count = known;
        while last + 1 > begin + count {
            counters.occ_probes += 1;
            if (self.positions[last - count] as usize) < i {
                break;
            }
            count += 1;
        }
        count
    }

    /// First occurrence of 0-based rank `a` at or after position `i`, found by
    /// binary search over `Q_a`.
    pub(crate) fn first_at_or_after(
        &self,
        a: usize,
        i: usize,
        counters: &mut WorkCounters,
    ) -> Option<usize> {
        let list = &self.positions[self.offsets[a] as usize..self.offsets[a + 1] as usize];
        let (mut lo, mut hi) = (0usize, list.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            counters.occ_probes += 1;
            if (list[mid] as usize) < i {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        list.get(lo).map(|&p| p as usize)
    }
}
