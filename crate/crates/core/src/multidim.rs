//! Range mode over d-dimensional arrays: the counting method on boxes, and a
//! lattice of prefix frequency tables combined by inclusion-exclusion over the
//! `2^d` corners of the largest lattice-aligned box inside the query.
//!
//! Positions are 1-based per coordinate. Linear positions are row-major with
//! the last coordinate fastest; [`ModeAnswer::witness`] for a grid query is the
//! 1-based linear position (see [`GridArray::coords`]).

use crate::error::{Error, Result};
use crate::ranked::{ModeAnswer, RankedArray, Token};
use crate::work::Workspace;

pub const MAX_DIMS: usize = 8;

/// Upper bound on lattice points times `k`, the snapshot cell count.
const MAX_SNAPSHOT_CELLS: usize = 1 << 31;

#[derive(Debug, Clone)]
pub struct GridArray {
    dims: Vec<usize>,
    strides: Vec<usize>,
    ranked: RankedArray,
}

impl GridArray {
    pub fn new(dims: Vec<usize>, values: Vec<Token>) -> Result<Self> {
        if dims.is_empty() || dims.len() > MAX_DIMS {
            return Err(Error::BadGrid(format!(
                "dimension count {} outside [1, {MAX_DIMS}]",
                dims.len()
            )));
        }
        if dims.contains(&0) {
            return Err(Error::BadGrid("zero extent".into()));
        }
        let expected = dims
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::BadGrid("extent product overflows".into()))?;
        if expected != values.len() {
            return Err(Error::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        let ranked = RankedArray::new(values)?;
        Ok(Self {
            strides: row_major_strides(&dims),
            dims,
            ranked,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn distinct_count(&self) -> usize {
        self.ranked.distinct_count()
    }

    /// The flattened array, row-major.
    pub fn ranked(&self) -> &RankedArray {
        &self.ranked
    }

    /// 0-based linear index of a 1-based coordinate tuple.
    pub fn linear(&self, pos: &[usize]) -> usize {
        pos.iter()
            .zip(&self.strides)
            .map(|(&x, &st)| (x - 1) * st)
            .sum()
    }

    /// 1-based coordinates of a 1-based linear position.
    pub fn coords(&self, linear: usize) -> Vec<usize> {
        let mut rest = linear - 1;
        self.strides
            .iter()
            .map(|&st| {
                let c = rest / st;
                rest %= st;
                c + 1
            })
            .collect()
    }

    pub fn value_at(&self, pos: &[usize]) -> Token {
        self.ranked.values()[self.linear(pos)]
    }

    pub fn range(&self, lo: Vec<usize>, hi: Vec<usize>) -> Result<GridRange> {
        GridRange::checked(lo, hi, &self.dims)
    }

    /// Calls `f` with the 0-based linear index of every position in the box
    /// `[lo, hi]` (1-based, inclusive), in row-major order.
    fn visit_box(&self, lo: &[usize], hi: &[usize], mut f: impl FnMut(usize)) {
        let d = self.dims.len();
        if (0..d).any(|l| lo[l] > hi[l]) {
            return;
        }
        let run = hi[d - 1] - lo[d - 1] + 1;
        let mut cur: Vec<usize> = lo.to_vec();
        loop {
            let base = self.linear(&cur);
            for x in base..base + run {
                f(x);
            }
            // Odometer over every coordinate but the last.
            let mut l = d - 1;
            loop {
                if l == 0 {
                    return;
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
}

fn row_major_strides(dims: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; dims.len()];
    for l in (0..dims.len().saturating_sub(1)).rev() {
        strides[l] = strides[l + 1] * dims[l + 1];
    }
    strides
}

/// Inclusive box `[lo, hi]` of 1-based coordinates with `lo <= hi` per axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridRange {
    pub lo: Vec<usize>,
    pub hi: Vec<usize>,
}

impl GridRange {
    pub fn checked(lo: Vec<usize>, hi: Vec<usize>, dims: &[usize]) -> Result<Self> {
        let ok = lo.len() == dims.len()
            && hi.len() == dims.len()
            && (0..dims.len()).all(|l| lo[l] >= 1 && lo[l] <= hi[l] && hi[l] <= dims[l]);
        if !ok {
            return Err(Error::InvalidGridRange { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn volume(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&a, &b)| b - a + 1)
            .product()
    }

    pub fn is_valid_for(&self, dims: &[usize]) -> bool {
        self.lo.len() == dims.len()
            && self.hi.len() == dims.len()
            && (0..dims.len())
                .all(|l| self.lo[l] >= 1 && self.lo[l] <= self.hi[l] && self.hi[l] <= dims[l])
    }
}

/// Box between two lattice points given as prefix lengths: it covers positions
/// `lo[l] + 1 ..= hi[l]` on axis `l`, and is empty when `lo[l] == hi[l]` on any
/// axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignedBox {
    pub lo: Vec<usize>,
    pub hi: Vec<usize>,
}

impl AlignedBox {
    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(a, b)| a >= b)
    }

    pub fn volume(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.lo.iter().zip(&self.hi).map(|(&a, &b)| b - a).product()
    }
}

/// What a grid query did: the aligned inner box it used (if any) and how many
/// positions of the surrounding shell it visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTrace {
    pub inner: Option<AlignedBox>,
    pub shell_visits: usize,
}

/// Prefix frequency tables at every point of a lattice.
///
/// On axis `l` the lattice points are `0, w_l, 2 w_l, ...` and `n_l`; the last
/// cell may be short. The snapshot at lattice point `t` is the frequency table
/// of the closed box `[1, t]`.
#[derive(Debug, Clone)]
pub struct FrequencyGrid<'a> {
    grid: &'a GridArray,
    widths: Vec<usize>,
    lattice: Vec<Vec<usize>>,
    lattice_strides: Vec<usize>,
    snapshots: Vec<u32>,
}

impl<'a> FrequencyGrid<'a> {
    /// Cell width `ceil(n_l (k/n)^(1/d))` per axis, clamped to `[1, n_l]`,
    /// which puts about `k` positions in each cell.
    pub fn build_auto(grid: &'a GridArray) -> Result<Self> {
        let d = grid.ndim() as f64;
        let ratio = (grid.distinct_count() as f64 / grid.len() as f64).powf(1.0 / d);
        let widths = grid
            .dims()
            .iter()
            .map(|&n| ((n as f64 * ratio).ceil() as usize).clamp(1, n))
            .collect();
        Self::with_cell_widths(grid, widths)
    }

    /// `cell_counts[l]` cells on axis `l`, each `ceil(n_l / g_l)` wide.
    pub fn build(grid: &'a GridArray, cell_counts: &[usize]) -> Result<Self> {
        if cell_counts.len() != grid.ndim() {
            return Err(Error::BadGrid(format!(
                "{} cell counts for {} dimensions",
                cell_counts.len(),
                grid.ndim()
            )));
        }
        let mut widths = Vec::with_capacity(cell_counts.len());
        for (&g, &n) in cell_counts.iter().zip(grid.dims()) {
            if g < 1 || g > n {
                return Err(Error::BadGrid(format!("cell count {g} outside [1, {n}]")));
            }
            widths.push(n.div_ceil(g));
        }
        Self::with_cell_widths(grid, widths)
    }

    pub fn with_cell_widths(grid: &'a GridArray, widths: Vec<usize>) -> Result<Self> {
        let d = grid.ndim();
        let k = grid.distinct_count();
        if widths.len() != d {
            return Err(Error::BadGrid(format!(
                "{} cell widths for {d} dimensions",
                widths.len()
            )));
        }
        let mut lattice = Vec::with_capacity(d);
        for (&w, &n) in widths.iter().zip(grid.dims()) {
            if w < 1 || w > n {
                return Err(Error::BadGrid(format!("cell width {w} outside [1, {n}]")));
            }
            let mut pts: Vec<usize> = (0..n).step_by(w).collect();
            pts.push(n);
            lattice.push(pts);
        }
        let lattice_dims: Vec<usize> = lattice.iter().map(Vec::len).collect();
        let points: usize = lattice_dims.iter().product();
        if points.saturating_mul(k) > MAX_SNAPSHOT_CELLS {
            return Err(Error::BadGrid(format!(
                "{points} lattice points x {k} ranks exceeds the snapshot limit"
            )));
        }
        let lattice_strides = row_major_strides(&lattice_dims);
        let mut snapshots = vec![0u32; points * k];

        // Per-cell tallies at each cell's upper lattice corner...
        let ranks = grid.ranked().raw_ranks();
        let mut pos = vec![1usize; d];
        for &a in ranks {
            let cell: usize = (0..d)
                .map(|l| ((pos[l] - 1) / widths[l] + 1) * lattice_strides[l])
                .sum();
            snapshots[cell * k + a as usize] += 1;
            for l in (0..d).rev() {
                if pos[l] < grid.dims()[l] {
                    pos[l] += 1;
                    break;
                }
                pos[l] = 1;
            }
        }
        // ...then one prefix accumulation along each axis.
        for l in 0..d {
            let stride = lattice_strides[l];
            for idx in 0..points {
                if (idx / stride).is_multiple_of(lattice_dims[l]) {
                    continue;
                }
                let (src, dst) = ((idx - stride) * k, idx * k);
                for x in 0..k {
                    snapshots[dst + x] += snapshots[src + x];
                }
            }
        }

        Ok(Self {
            grid,
            widths,
            lattice,
            lattice_strides,
            snapshots,
        })
    }

    pub fn cell_widths(&self) -> &[usize] {
        &self.widths
    }

    /// Number of cells on each axis.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.lattice.iter().map(|p| p.len() - 1).collect()
    }

    pub fn lattice(&self, axis: usize) -> &[usize] {
        &self.lattice[axis]
    }

    pub fn storage_cells(&self) -> usize {
        self.snapshots.len()
    }

    /// Snapshot at a lattice point given as prefix lengths per axis.
    pub fn snapshot(&self, point: &[usize]) -> Result<&[u32]> {
        let idx = self.lattice_index(point).ok_or(Error::NotAligned)?;
        let k = self.grid.distinct_count();
        Ok(&self.snapshots[idx * k..][..k])
    }

    fn lattice_index(&self, point: &[usize]) -> Option<usize> {
        if point.len() != self.lattice.len() {
            return None;
        }
        let mut idx = 0;
        for (l, &p) in point.iter().enumerate() {
            idx += self.lattice[l].binary_search(&p).ok()? * self.lattice_strides[l];
        }
        Some(idx)
    }

    /// Frequency table (indexed by 0-based rank) of an aligned box, by signed
    /// sum of its `2^d` corner snapshots.
    pub fn grid_span_table(&self, aligned: &AlignedBox) -> Result<Vec<u32>> {
        let k = self.grid.distinct_count();
        let lo = self.lattice_indices(&aligned.lo)?;
        let hi = self.lattice_indices(&aligned.hi)?;
        let mut out = vec![0u32; k];
        if !aligned.is_empty() {
            let mut ws = Workspace::new(k);
            self.add_box_table(&lo, &hi, &mut ws);
            out.copy_from_slice(&ws.tally);
        }
        Ok(out)
    }

    fn lattice_indices(&self, point: &[usize]) -> Result<Vec<usize>> {
        if point.len() != self.lattice.len() {
            return Err(Error::NotAligned);
        }
        point
            .iter()
            .enumerate()
            .map(|(l, p)| {
                self.lattice[l]
                    .binary_search(p)
                    .map_err(|_| Error::NotAligned)
            })
            .collect()
    }

    /// Corner sign is `(-1)^(d - ones)` where `ones` counts upper corners.
    fn corner(&self, lo: &[usize], hi: &[usize], v: usize) -> (usize, bool) {
        let d = lo.len();
        let mut idx = 0;
        for l in 0..d {
            let c = if v >> l & 1 == 1 { hi[l] } else { lo[l] };
            idx += c * self.lattice_strides[l];
        }
        let positive = (d - v.count_ones() as usize).is_multiple_of(2);
        (idx, positive)
    }

    /// Adds the table of the box between lattice indices `lo` and `hi` into
    /// the workspace tally.
    fn add_box_table(&self, lo: &[usize], hi: &[usize], ws: &mut Workspace) {
        let k = self.grid.distinct_count();
        for v in 0..1usize << lo.len() {
            let (idx, positive) = self.corner(lo, hi, v);
            let snap = &self.snapshots[idx * k..][..k];
            for (t, &c) in ws.tally.iter_mut().zip(snap) {
                *t = if positive {
                    t.wrapping_add(c)
                } else {
                    t.wrapping_sub(c)
                };
            }
            ws.counters.cells_touched += k as u64;
        }
    }

    /// Count of 0-based rank `a` in the box between lattice indices.
    fn box_count(&self, lo: &[usize], hi: &[usize], a: usize, ws: &mut Workspace) -> u32 {
        let k = self.grid.distinct_count();
        let mut total = 0u32;
        for v in 0..1usize << lo.len() {
            let (idx, positive) = self.corner(lo, hi, v);
            let c = self.snapshots[idx * k + a];
            total = if positive {
                total.wrapping_add(c)
            } else {
                total.wrapping_sub(c)
            };
        }
        ws.counters.cells_touched += 1 << lo.len();
        total
    }

    /// Largest lattice-aligned box inside `r`, as lattice indices.
    fn inner_box(&self, r: &GridRange) -> Option<(Vec<usize>, Vec<usize>)> {
        let d = r.lo.len();
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for l in 0..d {
            let pts = &self.lattice[l];
            let a = pts.partition_point(|&p| p < r.lo[l] - 1);
            let b = pts.partition_point(|&p| p <= r.hi[l]) - 1;
            if a >= b {
                return None;
            }
            lo.push(a);
            hi.push(b);
        }
        Some((lo, hi))
    }

    /// The query box minus the aligned inner box, as disjoint sub-boxes: on
    /// axis `l`, coordinates before `l` lie inside the inner box and
    /// coordinate `l` lies outside it.
    fn shell_boxes(
        r: &GridRange,
        inner_lo: &[usize],
        inner_hi: &[usize],
    ) -> Vec<(Vec<usize>, Vec<usize>)> {
        let d = r.lo.len();
        let mut out = Vec::with_capacity(2 * d);
        for l in 0..d {
            let mut lo = r.lo.clone();
            let mut hi = r.hi.clone();
            lo[..l].copy_from_slice(&inner_lo[..l]);
            hi[..l].copy_from_slice(&inner_hi[..l]);
            if r.lo[l] < inner_lo[l] {
                let mut h = hi.clone();
                h[l] = inner_lo[l] - 1;
                out.push((lo.clone(), h));
            }
            if inner_hi[l] < r.hi[l] {
                let mut lw = lo.clone();
                lw[l] = inner_hi[l] + 1;
                out.push((lw, hi.clone()));
            }
        }
        out
    }

    pub fn grid_query(&self, r: &GridRange, ws: &mut Workspace) -> ModeAnswer {
        self.grid_query_traced(r, ws).0
    }

    pub fn grid_query_traced(&self, r: &GridRange, ws: &mut Workspace) -> (ModeAnswer, GridTrace) {
        let grid = self.grid;
        debug_assert!(r.is_valid_for(grid.dims()));
        let k = grid.distinct_count();
        let ra = grid.ranked();
        let ranks = ra.raw_ranks();

        let Some((lo, hi)) = self.inner_box(r) else {
            let answer = counting_query_grid(grid, ws, r);
            let trace = GridTrace {
                inner: None,
                shell_visits: r.volume(),
            };
            return (answer, trace);
        };
        ws.begin(k);

        let inner_lo: Vec<usize> = (0..lo.len()).map(|l| self.lattice[l][lo[l]] + 1).collect();
        let inner_hi: Vec<usize> = (0..hi.len()).map(|l| self.lattice[l][hi[l]]).collect();
        self.add_box_table(&lo, &hi, ws);

        let shell = Self::shell_boxes(r, &inner_lo, &inner_hi);
        let mut shell_visits = 0usize;
        for (a, b) in &shell {
            let tally = &mut ws.tally;
            grid.visit_box(a, b, |x| {
                tally[ranks[x] as usize] += 1;
                shell_visits += 1;
            });
        }
        ws.counters.cells_touched += shell_visits as u64;

        let (mut best_f, mut best_rank) = (0u32, 0usize);
        for (x, c) in ws.tally[..k].iter_mut().enumerate() {
            if *c > best_f {
                best_f = *c;
                best_rank = x;
            }
            *c = 0;
        }
        ws.counters.cells_touched += k as u64;

        let witness = self.locate(r, &lo, &hi, &shell, best_rank, ws);
        let trace = GridTrace {
            inner: Some(AlignedBox {
                lo: inner_lo.iter().map(|x| x - 1).collect(),
                hi: inner_hi,
            }),
            shell_visits,
        };
        (ra.answer(best_rank, best_f as usize, witness), trace)
    }

    /// 1-based linear position of some copy of `a` inside `r`: a lattice cell
    /// of the inner box known to hold one is scanned, else the shell.
    fn locate(
        &self,
        r: &GridRange,
        lo: &[usize],
        hi: &[usize],
        shell: &[(Vec<usize>, Vec<usize>)],
        a: usize,
        ws: &mut Workspace,
    ) -> usize {
        let grid = self.grid;
        let ranks = grid.ranked().raw_ranks();
        let mut found = None;
        let scan = |blo: &[usize], bhi: &[usize], ws: &mut Workspace| {
            let mut hit = None;
            let mut visited = 0u64;
            grid.visit_box(blo, bhi, |x| {
                if hit.is_none() {
                    visited += 1;
                    if ranks[x] as usize == a {
                        hit = Some(x + 1);
                    }
                }
            });
            ws.counters.cells_touched += visited;
            hit
        };

        if self.box_count(lo, hi, a, ws) > 0 {
            // Walk the inner box one lattice cell at a time.
            let d = lo.len();
            let mut cell: Vec<usize> = lo.to_vec();
            loop {
                let upper: Vec<usize> = cell.iter().map(|c| c + 1).collect();
                if self.box_count(&cell, &upper, a, ws) > 0 {
                    let blo: Vec<usize> = (0..d).map(|l| self.lattice[l][cell[l]] + 1).collect();
                    let bhi: Vec<usize> = (0..d).map(|l| self.lattice[l][upper[l]]).collect();
                    found = scan(&blo, &bhi, ws);
                    break;
                }
                let mut l = d;
                loop {
                    l -= 1;
                    if cell[l] + 1 < hi[l] {
                        cell[l] += 1;
                        break;
                    }
                    cell[l] = lo[l];
                    assert!(l > 0, "inner box count disagrees with its cells");
                }
            }
        } else {
            for (blo, bhi) in shell {
                if let Some(w) = scan(blo, bhi, ws) {
                    found = Some(w);
                    break;
                }
            }
        }
        let w = found.expect("mode occurs in range");
        debug_assert!({
            let c = grid.coords(w);
            (0..c.len()).all(|l| r.lo[l] <= c[l] && c[l] <= r.hi[l])
        });
        w
    }
}

/// Counting method over a box: tally, maximize, reset. Touches `3 |r|` cells.
pub fn counting_query_grid(grid: &GridArray, ws: &mut Workspace, r: &GridRange) -> ModeAnswer {
    debug_assert!(r.is_valid_for(grid.dims()));
    let ra = grid.ranked();
    ws.begin(ra.distinct_count());
    let ranks = ra.raw_ranks();
    let Workspace { tally, counters } = ws;
    let mut visits = 0u64;
    grid.visit_box(&r.lo, &r.hi, |x| {
        tally[ranks[x] as usize] += 1;
        visits += 1;
    });
    let (mut best_f, mut best_x) = (0u32, 0usize);
    grid.visit_box(&r.lo, &r.hi, |x| {
        let c = tally[ranks[x] as usize];
        if c > best_f {
            best_f = c;
            best_x = x;
        }
    });
    grid.visit_box(&r.lo, &r.hi, |x| tally[ranks[x] as usize] = 0);
    counters.cells_touched += 3 * visits;
    ra.answer(ranks[best_x] as usize, best_f as usize, best_x + 1)
}

/// Brute-force grid mode; ties go to the smallest token.
pub fn oracle_grid_mode(grid: &GridArray, r: &GridRange) -> ModeAnswer {
    let ra = grid.ranked();
    let ranks = ra.raw_ranks();
    let mut tally = vec![0usize; ra.distinct_count()];
    let mut first = vec![usize::MAX; ra.distinct_count()];
    grid.visit_box(&r.lo, &r.hi, |x| {
        let a = ranks[x] as usize;
        tally[a] += 1;
        first[a] = first[a].min(x);
    });
    let (best, &f) = tally
        .iter()
        .enumerate()
        .max_by(|(a, x), (b, y)| x.cmp(y).then(b.cmp(a)))
        .expect("k >= 1");
    ra.answer(best, f, first[best] + 1)
}

/// Checks frequency against the brute-force tally and that the witness lies in
/// `r`, holds the element, and the element has the claimed multiplicity.
pub fn validate_grid_answer(
    grid: &GridArray,
    r: &GridRange,
    answer: &ModeAnswer,
) -> std::result::Result<(), String> {
    let expected = oracle_grid_mode(grid, r).frequency;
    if answer.frequency != expected {
        return Err(format!(
            "frequency {} != oracle frequency {expected}",
            answer.frequency
        ));
    }
    if answer.witness < 1 || answer.witness > grid.len() {
        return Err(format!("witness {} out of bounds", answer.witness));
    }
    let c = grid.coords(answer.witness);
    if (0..c.len()).any(|l| c[l] < r.lo[l] || c[l] > r.hi[l]) {
        return Err(format!("witness {c:?} outside query box"));
    }
    if grid.value_at(&c) != answer.element {
        return Err(format!("witness {c:?} does not hold {}", answer.element));
    }
    let mut count = 0;
    let values = grid.ranked().values();
    grid.visit_box(&r.lo, &r.hi, |x| {
        count += (values[x] == answer.element) as usize
    });
    if count != answer.frequency {
        return Err(format!(
            "element {} occurs {count} times, claimed {}",
            answer.element, answer.frequency
        ));
    }
    Ok(())
}

/// Common interface of the grid structures.
pub trait GridRangeMode {
    fn name(&self) -> &'static str;
    fn grid(&self) -> &GridArray;
    fn query(&self, r: &GridRange, ws: &mut Workspace) -> ModeAnswer;

    fn workspace(&self) -> Workspace {
        Workspace::new(self.grid().distinct_count())
    }
}

impl GridRangeMode for FrequencyGrid<'_> {
    fn name(&self) -> &'static str {
        "grid"
    }

    fn grid(&self) -> &GridArray {
        self.grid
    }

    fn query(&self, r: &GridRange, ws: &mut Workspace) -> ModeAnswer {
        self.grid_query(r, ws)
    }
}

/// [`GridRangeMode`] adapter for [`counting_query_grid`].
#[derive(Debug, Clone, Copy)]
pub struct GridCounting<'a> {
    grid: &'a GridArray,
}

impl<'a> GridCounting<'a> {
    pub fn new(grid: &'a GridArray) -> Self {
        Self { grid }
    }
}

impl GridRangeMode for GridCounting<'_> {
    fn name(&self) -> &'static str {
        "grid-counting"
    }

    fn grid(&self) -> &GridArray {
        self.grid
    }

    fn query(&self, r: &GridRange, ws: &mut Workspace) -> ModeAnswer {
        counting_query_grid(self.grid, ws, r)
    }
}
