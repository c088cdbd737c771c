//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any failed.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rangemode_cli::bench::{bench, generate, BenchConfig};
use rangemode_cli::structures::{Params, StructureKind};
use rangemode_core::multidim::{counting_query_grid, AlignedBox};
use rangemode_core::{
    CountingMethod, Decomposition, FrequencyGrid, GridArray, GridRange, LowFrequencyStructure,
    OccurrenceIndex, PrefixFrequencyTables, QueryRange, RangeMode, RankedArray, SparseModeTable,
    Workspace,
};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_array(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(1..=k as i64)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// 1 ------------------------------------------------------------------------

/// Every range of `ra`, checked against a per-row running tally.
fn exhaustive_check(ra: &RankedArray, s: &dyn RangeMode) -> Result<usize, String> {
    let n = ra.len();
    let mut ws = s.workspace();
    let mut tally = vec![0usize; ra.distinct_count() + 1];
    let mut checked = 0;
    for i in 1..=n {
        tally.iter_mut().for_each(|c| *c = 0);
        let mut best = 0;
        for j in i..=n {
            tally[ra.rank(j)] += 1;
            best = best.max(tally[ra.rank(j)]);
            let a = s.query(QueryRange::new(i, j), &mut ws);
            let ok = a.frequency == best
                && (i..=j).contains(&a.witness)
                && ra.value(a.witness) == a.element
                && ra.token_of_rank(a.rank) == a.element
                && tally[a.rank] == a.frequency
                && ws.is_clear();
            if !ok {
                return Err(format!(
                    "{} on [{i},{j}] (n={n}): got element {} freq {} witness {}, oracle freq {best}",
                    s.name(),
                    a.element,
                    a.frequency,
                    a.witness
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn oracle_equivalence() -> Outcome {
    let results: Vec<Result<usize, String>> = (0..200u64)
        .into_par_iter()
        .map(|t| {
            let mut g = rng(1000 + t);
            let n = g.gen_range(1..=256usize);
            let k = [1, 2, 8, n][t as usize % 4];
            let ra = RankedArray::new(random_array(&mut g, n, k)).map_err(|e| e.to_string())?;
            let oi = OccurrenceIndex::build(&ra);
            let eps = [0.5, 0.25, 0.0][t as usize % 3];
            let sm = SparseModeTable::build(&ra, &oi, eps).map_err(|e| e.to_string())?;
            let pf = PrefixFrequencyTables::build_auto(&ra, &oi);
            let lf = LowFrequencyStructure::build_auto(&ra, &oi);
            let cm = CountingMethod::new(&ra);
            let structures: [&dyn RangeMode; 4] = [&sm, &pf, &lf, &cm];
            let mut total = 0;
            for s in structures {
                total += exhaustive_check(&ra, s)?;
            }
            Ok(total)
        })
        .collect();
    let mut queries = 0;
    for r in results {
        queries += r?;
    }
    Ok(format!("200 arrays, {queries} structure-range checks"))
}

// 2 ------------------------------------------------------------------------

const DECOMPOSITION_EXAMPLE: [i64; 24] = [
    30, 40, 50, 10, 30, 40, 10, 30, 20, 10, 20, 30, 20, 40, 20, 50, 20, 10, 30, 40, 50, 10, 20, 30,
];

fn decomposition_example() -> Outcome {
    let d = Decomposition::new(QueryRange::new(7, 19), 4);
    ensure(d.first_block == 2 && d.last_block == 3, || {
        format!("blocks b_i={} b_j={}", d.first_block, d.last_block)
    })?;
    ensure(
        d.prefix == (7..=8) && d.span == (9..=16) && d.suffix == (17..=19),
        || {
            format!(
                "prefix {:?} span {:?} suffix {:?}",
                d.prefix, d.span, d.suffix
            )
        },
    )?;
    // The same split through a built table whose block size comes out as 4.
    let ra = RankedArray::new(DECOMPOSITION_EXAMPLE.to_vec()).unwrap();
    let oi = OccurrenceIndex::build(&ra);
    let sm = SparseModeTable::build(&ra, &oi, 0.375).unwrap();
    ensure(sm.block_size() == 4, || {
        format!("block size {}", sm.block_size())
    })?;
    ensure(sm.decompose(QueryRange::new(7, 19)) == d, || {
        "table decomposition differs".into()
    })?;
    let a = sm.query(QueryRange::new(7, 19), &mut sm.workspace());
    ensure(a.element == 20 && a.frequency == 5, || {
        format!("answer {} x{}", a.element, a.frequency)
    })?;
    Ok("b_i=2 b_j=3 prefix [7,8] span [9,16] suffix [17,19]".into())
}

// 3 ------------------------------------------------------------------------

fn space_bounds() -> Outcome {
    let mut lines = vec![];
    for (idx, n) in [1_000usize, 10_000, 100_000].into_iter().enumerate() {
        let sq = (n as f64).sqrt() as usize;
        for k in [1, 10, sq, n / 10, n] {
            let mut g = rng(3000 + idx as u64 * 10 + k as u64);
            let ra = RankedArray::new(random_array(&mut g, n, k)).unwrap();
            let oi = OccurrenceIndex::build(&ra);
            let kd = ra.distinct_count();

            let sm = SparseModeTable::build(&ra, &oi, 0.5).unwrap();
            let t = n.div_ceil(sm.block_size());
            let expect = 2 * t * t + 2 * n + kd + 1;
            ensure(sm.aux_cells() == expect, || {
                format!(
                    "sparse-mode n={n} k={kd}: {} cells, expected {expect}",
                    sm.aux_cells()
                )
            })?;
            ensure(expect <= 6 * n, || {
                format!("sparse-mode n={n} k={kd}: {expect} > 6n")
            })?;

            let pf = PrefixFrequencyTables::build_auto(&ra, &oi);
            let expect = (n / kd + 1) * kd;
            ensure(
                pf.block_size() == kd && pf.storage_cells() == expect,
                || {
                    format!(
                        "sparse-freq n={n} k={kd}: {} cells, expected {expect}",
                        pf.storage_cells()
                    )
                },
            )?;
            ensure(expect <= n + 2 * kd, || {
                format!("sparse-freq n={n} k={kd}: {expect} > n+2k")
            })?;

            let lf = LowFrequencyStructure::build_auto(&ra, &oi);
            let m = lf.mode_frequency();
            let expect = 2 * m * n.div_ceil(m);
            ensure(lf.block_size() == m && lf.storage_cells() == expect, || {
                format!(
                    "low-freq n={n} m={m}: {} cells, expected {expect}",
                    lf.storage_cells()
                )
            })?;
            ensure(expect <= 2 * n + 2 * m, || {
                format!("low-freq n={n} m={m}: {expect} > 2n+2m")
            })?;
        }
        lines.push(format!("n={n} ok"));
    }
    Ok(format!("{} (5 k values each)", lines.join(", ")))
}

// 4 ------------------------------------------------------------------------

fn bench_max(
    kind: StructureKind,
    params: Params,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<u64, String> {
    bench(&BenchConfig {
        kind,
        params,
        n,
        k,
        queries: 10_000,
        seed,
    })
    .map(|r| r.max_cells_touched)
    .map_err(|e| e.to_string())
}

fn work_scaling() -> Outcome {
    let params = Params {
        epsilon: Some(0.5),
        block_size: None,
    };
    let big = 1_000_000usize;
    let small = big / 4;
    let bound = 16 * (big as f64).sqrt().ceil() as u64;
    let mut report = vec![];
    for (k_big, k_small) in [(8, 8), (1000, 1000), (big, small)] {
        let hi = bench_max(StructureKind::SparseMode, params, big, k_big, 1)?;
        let lo = bench_max(StructureKind::SparseMode, params, small, k_small, 1)?;
        ensure(hi <= bound, || {
            format!("k={k_big}: max work {hi} > {bound}")
        })?;
        let ratio = hi as f64 / lo as f64;
        ensure(ratio <= 2.0 * 1.5, || {
            format!("k={k_big}: max work {lo} -> {hi} when n quadruples (ratio {ratio:.2})")
        })?;
        report.push(format!("k={k_big}: {lo}->{hi} (x{ratio:.2})"));
    }
    Ok(format!("bound {bound}; {}", report.join(", ")))
}

// 5 ------------------------------------------------------------------------

fn sparse_frequency_work() -> Outcome {
    let (n, k, s) = (1_000_000usize, 1000usize, 1000usize);
    let (values, ranges) = generate(n, k, 10_000, 5);
    let ra = RankedArray::new(values).unwrap();
    ensure(ra.distinct_count() == k, || {
        format!("only {} distinct", ra.distinct_count())
    })?;
    let oi = OccurrenceIndex::build(&ra);
    let pf = PrefixFrequencyTables::build(&ra, &oi, s).unwrap();
    let mut ws = pf.workspace();
    let (mut max_cells, mut max_total) = (0, 0);
    for &r in &ranges {
        pf.query(r, &mut ws);
        max_cells = max_cells.max(ws.counters.cells_touched);
        max_total = max_total.max(ws.counters.total());
    }
    let bound = (2 * k + 2 * s + 16) as u64;
    ensure(max_cells <= bound, || {
        format!("max cells {max_cells} > {bound}")
    })?;
    Ok(format!(
        "max cells {max_cells} <= {bound} (with witness probes {max_total})"
    ))
}

// 6 ------------------------------------------------------------------------

fn counting_work() -> Outcome {
    let (values, mut ranges) = generate(100_000, 300, 10_000, 6);
    // Short ranges too, where the additive constant matters.
    let mut g = rng(66);
    for q in ranges.iter_mut().step_by(4) {
        let len = g.gen_range(1..=8usize);
        let i = g.gen_range(1..=100_000 - len + 1);
        *q = QueryRange::new(i, i + len - 1);
    }
    let ra = RankedArray::new(values).unwrap();
    let cm = CountingMethod::new(&ra);
    let mut ws = cm.workspace();
    let mut worst_slack = i64::MAX;
    for &r in &ranges {
        cm.query(r, &mut ws);
        let bound = 4 * r.len() as u64 + 8;
        let cells = ws.counters.cells_touched;
        ensure(cells <= bound, || {
            format!("[{},{}]: {cells} cells > {bound}", r.i, r.j)
        })?;
        worst_slack = worst_slack.min(bound as i64 - cells as i64);
    }
    Ok(format!("{} queries, min slack {worst_slack}", ranges.len()))
}

// 7 ------------------------------------------------------------------------

fn gadget() -> Outcome {
    let mut calls = 0u64;
    let mut max_reads = 0;
    for n in 1..=64usize {
        for (t, k) in [1, 2, 4, n].into_iter().enumerate() {
            let values = random_array(&mut rng(7000 + n as u64 * 8 + t as u64), n, k);
            let ra = RankedArray::new(values.clone()).unwrap();
            let oi = OccurrenceIndex::build(&ra);
            for start in 1..=n {
                let mut freq = 0;
                for j in start..=n {
                    freq += usize::from(values[j - 1] == values[start - 1]);
                    for q in 1..=n + 1 {
                        let mut c = Default::default();
                        let got = oi.freq_at_least_counted(&ra, start, j, q, &mut c);
                        let reads = rangemode_core::WorkCounters::total(&c);
                        max_reads = max_reads.max(reads);
                        ensure(got == (freq >= q) && reads <= 4, || {
                            format!("n={n} start={start} j={j} q={q}: {got} with {reads} reads, count {freq}")
                        })?;
                        calls += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{calls} calls, max {max_reads} reads"))
}

// 8 ------------------------------------------------------------------------

fn tally_box(g: &GridArray, lo: &[usize], hi: &[usize]) -> Vec<u32> {
    let mut t = vec![0u32; g.distinct_count()];
    let d = lo.len();
    if (0..d).any(|l| lo[l] > hi[l]) {
        return t;
    }
    let mut cur = lo.to_vec();
    loop {
        t[g.ranked()
            .distinct()
            .binary_search(&g.value_at(&cur))
            .unwrap()] += 1;
        let mut l = d;
        loop {
            if l == 0 {
                return t;
            }
            l -= 1;
            if cur[l] < hi[l] {
                cur[l] += 1;
                break;
            }
            cur[l] = lo[l];
        }
    }
}

fn cell_configs(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &n in dims {
        let mut opts = vec![1, 2.min(n), n];
        opts.dedup();
        out = out
            .into_iter()
            .flat_map(|pre: Vec<usize>| {
                opts.iter().map(move |&g| {
                    let mut v = pre.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

fn all_shapes() -> Vec<Vec<usize>> {
    let mut shapes = vec![];
    for a in 1..=8 {
        shapes.push(vec![a]);
        for b in 1..=8 {
            shapes.push(vec![a, b]);
            for c in 1..=4 {
                shapes.push(vec![a, b, c]);
            }
        }
    }
    shapes
}

/// Checks every aligned box's span table and 1000 random rectangles.
fn check_grid_config(grid: &GridArray, counts: &[usize], g: &mut ChaCha8Rng) -> Result<(), String> {
    let dims = grid.dims().to_vec();
    let fg = FrequencyGrid::build(grid, counts).map_err(|e| e.to_string())?;
    let d = dims.len();
    let lattice: Vec<Vec<usize>> = (0..d).map(|l| fg.lattice(l).to_vec()).collect();
    let mut idx = vec![0usize; 2 * d];
    'boxes: loop {
        let lo: Vec<usize> = (0..d).map(|l| lattice[l][idx[l]]).collect();
        let hi: Vec<usize> = (0..d).map(|l| lattice[l][idx[d + l]]).collect();
        if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
            let t = fg
                .grid_span_table(&AlignedBox {
                    lo: lo.clone(),
                    hi: hi.clone(),
                })
                .map_err(|e| e.to_string())?;
            let plo: Vec<usize> = lo.iter().map(|x| x + 1).collect();
            ensure(t == tally_box(grid, &plo, &hi), || {
                format!("span table dims={dims:?} cells={counts:?} box {lo:?}..{hi:?}")
            })?;
        }
        let mut p = 0;
        loop {
            if p == 2 * d {
                break 'boxes;
            }
            idx[p] += 1;
            if idx[p] < lattice[p % d].len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
    let mut ws = Workspace::new(grid.distinct_count());
    for _ in 0..1000 {
        let (mut lo, mut hi) = (vec![], vec![]);
        for &n in &dims {
            let a = g.gen_range(1..=n);
            let b = g.gen_range(1..=n);
            lo.push(a.min(b));
            hi.push(a.max(b));
        }
        let r = GridRange::checked(lo, hi, &dims).map_err(|e| e.to_string())?;
        let tally = tally_box(grid, &r.lo, &r.hi);
        let best = *tally.iter().max().unwrap() as usize;
        let a = fg.grid_query(&r, &mut ws);
        let rank = grid
            .ranked()
            .distinct()
            .binary_search(&a.element)
            .map_err(|_| "unknown element")?;
        let w = grid.coords(a.witness);
        let inside = (0..d).all(|l| r.lo[l] <= w[l] && w[l] <= r.hi[l]);
        ensure(
            a.frequency == best
                && tally[rank] as usize == best
                && inside
                && grid.value_at(&w) == a.element,
            || {
                format!(
                    "grid_query dims={dims:?} cells={counts:?} {:?}..{:?}: freq {} vs {best}",
                    r.lo, r.hi, a.frequency
                )
            },
        )?;
        let c = counting_query_grid(grid, &mut ws, &r);
        ensure(c.frequency == best, || {
            format!("grid counting {:?}..{:?}", r.lo, r.hi)
        })?;
    }
    Ok(())
}

fn multidim_exactness() -> Outcome {
    let shapes = all_shapes();
    let configs: usize = shapes
        .par_iter()
        .enumerate()
        .map(|(t, dims)| {
            let n: usize = dims.iter().product();
            let k = [1, 2, 5, 8][t % 4];
            let mut g = rng(8000 + t as u64);
            let grid = GridArray::new(dims.clone(), random_array(&mut g, n, k))
                .map_err(|e| e.to_string())?;
            let cfgs = cell_configs(dims);
            for counts in &cfgs {
                check_grid_config(&grid, counts, &mut g)?;
            }
            Ok(cfgs.len())
        })
        .collect::<Result<Vec<usize>, String>>()?
        .into_iter()
        .sum();

    // d = 1 against the sparse frequency tables, every range, every block size.
    let mut ranges = 0u64;
    for n in 1..=64usize {
        let values = random_array(&mut rng(8500 + n as u64), n, 1 + n % 9);
        let grid = GridArray::new(vec![n], values.clone()).unwrap();
        let ra = RankedArray::new(values).unwrap();
        let oi = OccurrenceIndex::build(&ra);
        for s in 1..=n {
            let fg = FrequencyGrid::with_cell_widths(&grid, vec![s]).unwrap();
            let pf = PrefixFrequencyTables::build(&ra, &oi, s).unwrap();
            for p in (0..=n).step_by(s) {
                ensure(fg.snapshot(&[p]).unwrap() == pf.snapshot(p), || {
                    format!("snapshot n={n} s={s} p={p}")
                })?;
            }
            let (mut w1, mut w2) = (Workspace::new(ra.distinct_count()), pf.workspace());
            for i in 1..=n {
                for j in i..=n {
                    let a = fg.grid_query(
                        &GridRange {
                            lo: vec![i],
                            hi: vec![j],
                        },
                        &mut w1,
                    );
                    let b = pf.query(QueryRange::new(i, j), &mut w2);
                    ensure(
                        a.frequency == b.frequency && (i..=j).contains(&a.witness),
                        || {
                            format!(
                                "d=1 n={n} s={s} [{i},{j}]: grid {} vs table {}",
                                a.frequency, b.frequency
                            )
                        },
                    )?;
                    ranges += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} shapes, {configs} configurations; d=1: {ranges} ranges",
        shapes.len()
    ))
}

// 9 ------------------------------------------------------------------------

fn low_frequency_arrays() -> Outcome {
    let mut checks = 0u64;
    for n in 1..=128usize {
        for (t, k) in [1, 3, 16, n].into_iter().enumerate() {
            let values = random_array(&mut rng(9000 + n as u64 * 4 + t as u64), n, k);
            let ra = RankedArray::new(values.clone()).unwrap();
            let oi = OccurrenceIndex::build(&ra);
            let m = LowFrequencyStructure::build_auto(&ra, &oi).mode_frequency();
            // Block size 1 makes every p < n a boundary; the default is checked too.
            for s in [1, m] {
                let lf = LowFrequencyStructure::build(&ra, &oi, s).unwrap();
                for p in (0..n).step_by(s) {
                    let f = lf.f_array(p);
                    let mut tally = vec![0usize; ra.distinct_count() + 1];
                    let mut best = 0;
                    for j in p + 1..=n {
                        tally[ra.rank(j)] += 1;
                        best = best.max(tally[ra.rank(j)]);
                        let x = f.iter().position(|&e| e as usize >= j).map(|x| x + 1);
                        ensure(x == Some(best), || {
                            format!("n={n} s={s} p={p} j={j}: {x:?} vs {best}")
                        })?;
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checks} (p, j) pairs"))
}

// 10 -----------------------------------------------------------------------

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_rangemode"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr),
    ))
}

fn write_dataset(dir: &Path, t: u64) -> std::io::Result<std::path::PathBuf> {
    let mut g = rng(10_000 + t);
    let path = dir.join(format!("data{t}.txt"));
    let text = if t % 4 == 3 {
        let dims = [
            g.gen_range(1..=6usize),
            g.gen_range(1..=6),
            g.gen_range(1..=4),
        ];
        let n: usize = dims.iter().product();
        let vals = random_array(&mut g, n, 5);
        format!(
            "dims {} {} {}\n{}\n",
            dims[0],
            dims[1],
            dims[2],
            vals.iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        )
    } else {
        let n = g.gen_range(1..=300usize);
        let k = [1, 4, n][t as usize % 3];
        let vals: Vec<i64> = (0..n)
            .map(|_| g.gen_range(-(k as i64)..=k as i64) * 7)
            .collect();
        vals.iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
            + "\n"
    };
    std::fs::write(&path, text)?;
    Ok(path)
}

fn strip_timing(csv: &str) -> String {
    csv.lines()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            [&f[..4], &f[6..]].concat().join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for t in 0..20 {
        let path = write_dataset(dir.path(), t).map_err(|e| e.to_string())?;
        let (code, out) = cli(&["verify", "--array", path.to_str().unwrap(), "--exhaustive"])?;
        ensure(code == 0 && out.contains("PASS"), || {
            format!("dataset {t}: exit {code}: {out}")
        })?;
    }
    for kind in StructureKind::LINEAR {
        let args = [
            "bench",
            "--structure",
            kind.name(),
            "--n",
            "2000",
            "--k",
            "40",
            "--count",
            "500",
            "--seed",
            "11",
            "--csv",
        ];
        let (c1, a) = cli(&args)?;
        let (c2, b) = cli(&args)?;
        ensure(c1 == 0 && c2 == 0, || {
            format!("bench {} failed: {a}", kind.name())
        })?;
        ensure(strip_timing(&a) == strip_timing(&b), || {
            format!("bench {} differs:\n{a}\n{b}", kind.name())
        })?;
    }
    // The benched input itself passes verification.
    let (values, _) = generate(2000, 40, 0, 11);
    let path = dir.path().join("bench.txt");
    std::fs::write(
        &path,
        values
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    )
    .map_err(|e| e.to_string())?;
    let (code, out) = cli(&["verify", "--array", path.to_str().unwrap(), "--exhaustive"])?;
    ensure(code == 0, || format!("bench input: exit {code}: {out}"))?;
    Ok("20 datasets verified; bench columns identical for 4 structures".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("block decomposition example", decomposition_example),
        ("space bounds", space_bounds),
        ("sparse-mode work scaling", work_scaling),
        ("sparse-frequency work", sparse_frequency_work),
        ("counting work", counting_work),
        ("occurrence gadget", gadget),
        ("multidimensional exactness", multidim_exactness),
        ("low-frequency F arrays", low_frequency_arrays),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (num, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", num + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", num + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
