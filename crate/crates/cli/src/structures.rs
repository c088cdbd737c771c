//! Structure selection and construction from command-line parameters.

use clap::ValueEnum;
use rangemode_core::{
    CountingMethod, FrequencyGrid, GridArray, GridCounting, GridRangeMode, LowFrequencyStructure,
    OccurrenceIndex, PrefixFrequencyTables, RangeMode, RankedArray, SparseModeTable,
};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    SparseMode,
    SparseFreq,
    LowFreq,
    Counting,
    Grid,
    GridCounting,
}

impl StructureKind {
    pub const LINEAR: [StructureKind; 4] = [
        StructureKind::SparseMode,
        StructureKind::SparseFreq,
        StructureKind::LowFreq,
        StructureKind::Counting,
    ];

    pub const GRID: [StructureKind; 2] = [StructureKind::Grid, StructureKind::GridCounting];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::SparseMode => "sparse-mode",
            StructureKind::SparseFreq => "sparse-freq",
            StructureKind::LowFreq => "low-freq",
            StructureKind::Counting => "counting",
            StructureKind::Grid => "grid",
            StructureKind::GridCounting => "grid-counting",
        }
    }

    pub fn is_grid(self) -> bool {
        matches!(self, StructureKind::Grid | StructureKind::GridCounting)
    }
}

/// `--epsilon` applies to the sparse mode table; `--block-size` to the block
/// structures (0 or absent selects the linear-space default) and to the grid,
/// where it is the cell width on every axis.
#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub epsilon: Option<f64>,
    pub block_size: Option<usize>,
}

impl Params {
    pub fn epsilon(&self) -> f64 {
        self.epsilon.unwrap_or(0.5)
    }

    fn block(&self) -> Option<usize> {
        self.block_size.filter(|&s| s > 0)
    }
}

/// Cap on `S` plus `S'` cells.
const MAX_SPAN_TABLE_CELLS: usize = 1 << 28;

pub type DynLinear<'a> = Box<dyn RangeMode + Sync + 'a>;
pub type DynGrid<'a> = Box<dyn GridRangeMode + Sync + 'a>;

pub fn build_linear<'a>(
    kind: StructureKind,
    params: &Params,
    ra: &'a RankedArray,
    oi: &'a OccurrenceIndex,
) -> Result<DynLinear<'a>> {
    Ok(match kind {
        StructureKind::SparseMode => {
            let eps = params.epsilon();
            let n = ra.len();
            if (0.0..=0.5).contains(&eps) {
                let t = n.div_ceil(rangemode_core::sparse_mode::block_size(n, eps));
                if t.saturating_mul(t).saturating_mul(2) > MAX_SPAN_TABLE_CELLS {
                    return Err(CliError::ResourceLimit(format!(
                        "sparse mode table with {t} blocks needs {} cells; raise --epsilon",
                        2 * t as u128 * t as u128
                    )));
                }
            }
            Box::new(SparseModeTable::build(ra, oi, eps)?)
        }
        StructureKind::SparseFreq => Box::new(match params.block() {
            Some(s) => PrefixFrequencyTables::build(ra, oi, s)?,
            None => PrefixFrequencyTables::build_auto(ra, oi),
        }),
        StructureKind::LowFreq => Box::new(match params.block() {
            Some(s) => LowFrequencyStructure::build(ra, oi, s)?,
            None => LowFrequencyStructure::build_auto(ra, oi),
        }),
        StructureKind::Counting => Box::new(CountingMethod::new(ra)),
        StructureKind::Grid | StructureKind::GridCounting => {
            return Err(CliError::Usage(format!(
                "{} is a grid structure",
                kind.name()
            )))
        }
    })
}

pub fn build_grid<'a>(
    kind: StructureKind,
    params: &Params,
    grid: &'a GridArray,
) -> Result<DynGrid<'a>> {
    Ok(match kind {
        StructureKind::Grid => Box::new(match params.block() {
            Some(w) => {
                let widths = grid.dims().iter().map(|&n| w.min(n)).collect();
                FrequencyGrid::with_cell_widths(grid, widths)?
            }
            None => FrequencyGrid::build_auto(grid)?,
        }),
        StructureKind::GridCounting => Box::new(GridCounting::new(grid)),
        _ => {
            return Err(CliError::Usage(format!(
                "{} needs a one-dimensional array",
                kind.name()
            )))
        }
    })
}

/// Parameter column for bench output: epsilon for the sparse mode table, the
/// block size actually used otherwise, `-` when there is none.
pub fn param_label(kind: StructureKind, params: &Params, ra: &RankedArray) -> String {
    match kind {
        StructureKind::SparseMode => format!("{}", params.epsilon()),
        StructureKind::SparseFreq => params
            .block()
            .unwrap_or_else(|| ra.distinct_count())
            .to_string(),
        StructureKind::LowFreq => params
            .block()
            .unwrap_or_else(|| rangemode_core::low_freq::global_mode_frequency(ra))
            .to_string(),
        _ => "-".to_string(),
    }
}
