//! Rank reduction of the input tokens and the range/answer value types.

use crate::error::{Error, Result};

/// Source tokens are 64-bit signed integers.
pub type Token = i64;

/// Input array together with its rank-reduced form.
///
/// Positions are 1-based at the API boundary. Ranks are 1-based (`1..=k`) when
/// returned from accessors; internal storage is 0-based so ranks index scratch
/// tallies directly.
#[derive(Debug, Clone)]
pub struct RankedArray {
    values: Vec<Token>,
    ranks: Vec<u32>,
    distinct: Vec<Token>,
}

impl RankedArray {
    pub fn new(values: Vec<Token>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyArray);
        }
        if values.len() >= u32::MAX as usize {
            return Err(Error::TooLarge(values.len()));
        }
        let mut distinct = values.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let ranks = values
            .iter()
            .map(|v| distinct.binary_search(v).expect("token present in D") as u32)
            .collect();
        Ok(Self {
            values,
            ranks,
            distinct,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; construction rejects empty input.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of distinct tokens.
    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }

    pub fn values(&self) -> &[Token] {
        &self.values
    }

    pub fn distinct(&self) -> &[Token] {
        &self.distinct
    }

    /// Token at 1-based position `i`.
    pub fn value(&self, i: usize) -> Token {
        self.values[i - 1]
    }

    /// 1-based rank of the token at 1-based position `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i - 1] as usize + 1
    }

    /// Token with 1-based rank `r`.
    pub fn token_of_rank(&self, r: usize) -> Token {
        self.distinct[r - 1]
    }

    /// 0-based ranks, indexed by 0-based position.
    pub(crate) fn raw_ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Reconstructs the input by mapping every rank back through `D`.
    pub fn decode(&self) -> Vec<Token> {
        self.ranks
            .iter()
            .map(|&r| self.distinct[r as usize])
            .collect()
    }

    pub fn range(&self, i: usize, j: usize) -> Result<QueryRange> {
        QueryRange::checked(i, j, self.len())
    }

    /// Builds an answer from a 0-based rank, a frequency, and a 1-based witness.
    pub(crate) fn answer(&self, rank0: usize, frequency: usize, witness: usize) -> ModeAnswer {
        debug_assert_eq!(self.ranks[witness - 1] as usize, rank0);
        ModeAnswer {
            element: self.distinct[rank0],
            rank: rank0 + 1,
            frequency,
            witness,
        }
    }
}

/// Inclusive 1-based query range `[i, j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueryRange {
    pub i: usize,
    pub j: usize,
}

impl QueryRange {
    /// Unchecked constructor; structures debug-assert validity.
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn checked(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || i > j || j > n {
            return Err(Error::InvalidRange { i, j, n });
        }
        Ok(Self { i, j })
    }

    pub fn len(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_valid_for(&self, n: usize) -> bool {
        self.i >= 1 && self.i <= self.j && self.j <= n
    }
}

/// A mode of a query range.
///
/// `frequency` is the multiplicity of `element` in the range and no element has
/// a larger one. `witness` is a 1-based position inside the range holding
/// `element`. When several modes exist, which one is returned depends on the
/// structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeAnswer {
    pub element: Token,
    /// 1-based rank of `element` in the sorted distinct tokens.
    pub rank: usize,
    pub frequency: usize,
    pub witness: usize,
}
