//! Static range mode queries on arrays.
//!
//! Every structure answers "which element occurs most often in `A[i..=j]`,
//! and how often?" with a different space/time trade-off:
//!
//! | structure | space | query work |
//! |---|---|---|
//! | [`SparseModeTable`] | `O(n^(2-2eps))` | `O(n^eps)` |
//! | [`PrefixFrequencyTables`] | `O(n + nk/s)` | `O(k + s)` |
//! | [`LowFrequencyStructure`] | `O(n + nm/s)` | `O(s + log m)` |
//! | [`counting`] | `O(n)` | `O(j - i)` |
//!
//! [`multidim`] extends the counting method and the frequency tables to
//! d-dimensional arrays. [`oracle`] holds the brute-force reference.
//!
//! All structures are immutable once built. Queries take a [`Workspace`]
//! holding the size-k scratch tally, so concurrent callers each need their
//! own.

pub mod counting;
pub mod error;
pub mod low_freq;
pub mod multidim;
pub mod occurrence;
pub mod oracle;
pub mod ranked;
pub mod sparse_freq;
pub mod sparse_mode;
pub mod work;

pub use counting::CountingMethod;
pub use error::{Error, Result};
pub use low_freq::LowFrequencyStructure;
pub use multidim::{FrequencyGrid, GridArray, GridCounting, GridRange, GridRangeMode};
pub use occurrence::OccurrenceIndex;
pub use oracle::{oracle_mode, validate_answer};
pub use ranked::{ModeAnswer, QueryRange, RankedArray, Token};
pub use sparse_freq::PrefixFrequencyTables;
pub use sparse_mode::{Decomposition, SparseModeTable};
pub use work::{WorkCounters, Workspace};

/// Common interface of the one-dimensional structures.
pub trait RangeMode {
    fn name(&self) -> &'static str;

    fn ranked(&self) -> &RankedArray;

    /// Mode of `r`. The workspace must come from [`workspace`](Self::workspace)
    /// (or be at least `k` slots and clear); it is clear again on return and
    /// its counters describe this query.
    fn query(&self, r: QueryRange, ws: &mut Workspace) -> ModeAnswer;

    fn workspace(&self) -> Workspace {
        Workspace::new(self.ranked().distinct_count())
    }
}
