//! `bench` command: seeded random array and ranges, build time, median query
//! time, and the largest per-query work count.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rangemode_core::{OccurrenceIndex, QueryRange, RankedArray};

use crate::error::{CliError, Result};
use crate::structures::{build_linear, param_label, Params, StructureKind};

pub const CSV_HEADER: &str = "structure,n,k,param,build_ns,p50_query_ns,max_cells_touched,seed";

/// Largest `n` accepted, bounding the input plus occurrence lists.
pub const MAX_N: usize = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub structure: String,
    pub n: usize,
    pub k: usize,
    pub param: String,
    pub build_ns: u128,
    pub p50_query_ns: u128,
    /// Maximum over queries of cells touched plus list and F-array probes.
    pub max_cells_touched: u64,
    pub seed: u64,
}

impl BenchRecord {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.structure,
            self.n,
            self.k,
            self.param,
            self.build_ns,
            self.p50_query_ns,
            self.max_cells_touched,
            self.seed
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub kind: StructureKind,
    pub params: Params,
    pub n: usize,
    pub k: usize,
    pub queries: usize,
    pub seed: u64,
}

/// `n` tokens uniform over `1..=k`, then `count` ranges with both ends uniform,
/// all from one ChaCha8 stream.
pub fn generate(n: usize, k: usize, count: usize, seed: u64) -> (Vec<i64>, Vec<QueryRange>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n).map(|_| rng.gen_range(1..=k as i64)).collect();
    let ranges = (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            QueryRange::new(a.min(b), a.max(b))
        })
        .collect();
    (values, ranges)
}

pub fn bench(cfg: &BenchConfig) -> Result<BenchRecord> {
    if cfg.kind.is_grid() {
        return Err(CliError::Usage(format!(
            "bench covers the array structures; {} is not one",
            cfg.kind.name()
        )));
    }
    if cfg.n == 0 || cfg.k == 0 {
        return Err(CliError::Usage("--n and --k must be positive".into()));
    }
    if cfg.n > MAX_N {
        return Err(CliError::ResourceLimit(format!(
            "n = {} exceeds the limit of {MAX_N}",
            cfg.n
        )));
    }
    let (values, ranges) = generate(cfg.n, cfg.k, cfg.queries, cfg.seed);
    let ra = RankedArray::new(values)?;

    let start = Instant::now();
    let oi = OccurrenceIndex::build(&ra);
    let s = build_linear(cfg.kind, &cfg.params, &ra, &oi)?;
    let build_ns = start.elapsed().as_nanos();

    let mut ws = s.workspace();
    let mut times = Vec::with_capacity(ranges.len());
    let mut max_work = 0u64;
    for &r in &ranges {
        let t = Instant::now();
        let a = s.query(r, &mut ws);
        times.push(t.elapsed().as_nanos());
        std::hint::black_box(a);
        max_work = max_work.max(ws.counters.total());
    }
    times.sort_unstable();
    let p50 = times.get(times.len() / 2).copied().unwrap_or(0);

    Ok(BenchRecord {
        structure: cfg.kind.name().to_string(),
        n: cfg.n,
        k: cfg.k,
        param: param_label(cfg.kind, &cfg.params, &ra),
        build_ns,
        p50_query_ns: p50,
        max_cells_touched: max_work,
        seed: cfg.seed,
    })
}
