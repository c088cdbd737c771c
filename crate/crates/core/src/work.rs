//! Per-query scratch state and work counters.
//!
//! Counting convention: `cells_touched` is incremented once per array position
//! or table slot a query loop visits (a slot of the scratch tally computed from
//! two stored snapshots counts once). `occ_probes` counts reads of occurrence
//! lists, `successor_probes` counts reads of the low-frequency F arrays.

/// Work performed by the most recent query on a [`Workspace`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkCounters {
    pub cells_touched: u64,
    pub occ_probes: u64,
    pub successor_probes: u64,
}

impl WorkCounters {
    pub fn reset(&mut self) {
        *self = Self::default();
    }

    pub fn total(&self) -> u64 {
        self.cells_touched + self.occ_probes + self.successor_probes
    }
}

/// Size-k frequency tally plus counters, owned by one caller at a time.
///
/// The tally is all-zero between queries. Every query restores it before
/// returning, so the O(k) initialization is paid once per workspace.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub(crate) tally: Vec<u32>,
    pub counters: WorkCounters,
}

impl Workspace {
    pub fn new(k: usize) -> Self {
        Self {
            tally: vec![0; k],
            counters: WorkCounters::default(),
        }
    }

    pub fn capacity(&self) -> usize {
        self.tally.len()
    }

    /// True when every tally slot is zero.
    pub fn is_clear(&self) -> bool {
        self.tally.iter().all(|&c| c == 0)
    }

    pub(crate) fn begin(&mut self, k: usize) {
        debug_assert!(self.tally.len() >= k, "workspace smaller than k");
        debug_assert!(self.is_clear());
        self.counters.reset();
    }
}
