//! Array and query file formats.
//!
//! Arrays: whitespace-separated signed decimal integers. A d-dimensional array
//! starts with a line `dims n_1 ... n_d` followed by the `n_1 * ... * n_d`
//! values in row-major order.
//!
//! Queries: one per line, `i j` for arrays or `i_1 .. i_d j_1 .. j_d` for
//! grids, 1-based inclusive. Blank lines are ignored.

use std::fs;
use std::path::Path;

use rangemode_core::{Error as CoreError, GridArray, GridRange, QueryRange, RankedArray};

use crate::error::{CliError, Result};

#[derive(Debug, Clone)]
pub enum LoadedArray {
    Linear(RankedArray),
    Grid(GridArray),
}

impl LoadedArray {
    pub fn ndim(&self) -> usize {
        match self {
            LoadedArray::Linear(_) => 1,
            LoadedArray::Grid(g) => g.ndim(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        match self {
            LoadedArray::Linear(ra) => vec![ra.len()],
            LoadedArray::Grid(g) => g.dims().to_vec(),
        }
    }

    /// Grid view of the array; a plain array becomes a one-axis grid.
    pub fn to_grid(&self) -> Result<GridArray> {
        match self {
            LoadedArray::Linear(ra) => Ok(GridArray::new(vec![ra.len()], ra.values().to_vec())?),
            LoadedArray::Grid(g) => Ok(g.clone()),
        }
    }
}

/// One parsed query line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryLine {
    Linear(QueryRange),
    Grid(GridRange),
    Invalid,
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_array(path: &Path) -> Result<LoadedArray> {
    parse_array(&read_file(path)?, &path.display().to_string())
}

/// Whitespace-separated tokens with their 1-based line and column.
fn tokens(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().flat_map(|(ln, line)| {
        let mut out = Vec::new();
        let mut start = None;
        for (col, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    out.push((ln + 1, line[..s].chars().count() + 1, &line[s..col]));
                    start = None;
                }
                _ => {}
            }
        }
        out
    })
}

fn format_err(path: &str, line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::DataFormat {
        path: path.to_string(),
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_array(text: &str, path: &str) -> Result<LoadedArray> {
    let mut toks = tokens(text).peekable();
    let dims = match toks.peek() {
        Some(&(line, _, "dims")) => {
            toks.next();
            let mut dims = Vec::new();
            while let Some(&(l, col, tok)) = toks.peek() {
                if l != line {
                    break;
                }
                let n: usize = tok
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| format_err(path, l, col, format!("bad extent `{tok}`")))?;
                dims.push(n);
                toks.next();
            }
            if dims.is_empty() {
                return Err(format_err(
                    path,
                    line,
                    5,
                    "`dims` needs at least one extent",
                ));
            }
            Some(dims)
        }
        _ => None,
    };
    let mut values = Vec::new();
    for (line, col, tok) in toks {
        let v: i64 = tok.parse().map_err(|_| {
            format_err(
                path,
                line,
                col,
                format!("expected an integer, found `{tok}`"),
            )
        })?;
        values.push(v);
    }
    match dims {
        None => {
            if values.is_empty() {
                return Err(format_err(path, 1, 1, "array is empty"));
            }
            Ok(LoadedArray::Linear(RankedArray::new(values)?))
        }
        Some(dims) => match GridArray::new(dims, values) {
            Ok(g) => Ok(LoadedArray::Grid(g)),
            Err(CoreError::DimensionMismatch { expected, actual }) => {
                Err(CliError::DimensionMismatch { expected, actual })
            }
            Err(e) => Err(e.into()),
        },
    }
}

/// Parses a query file against arrays of extent `dims`. Lines with the wrong
/// token count or non-integer tokens are format errors; well-formed ranges
/// that are empty or out of bounds become [`QueryLine::Invalid`].
pub fn parse_queries(text: &str, dims: &[usize], path: &str) -> Result<Vec<QueryLine>> {
    let d = dims.len();
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.is_empty() {
            continue;
        }
        if parts.len() != 2 * d {
            return Err(format_err(
                path,
                ln + 1,
                1,
                format!("expected {} indices, found {}", 2 * d, parts.len()),
            ));
        }
        let mut nums = Vec::with_capacity(2 * d);
        for (col, tok) in tokens(line).map(|(_, c, t)| (c, t)) {
            let v: i64 = tok.parse().map_err(|_| {
                format_err(
                    path,
                    ln + 1,
                    col,
                    format!("expected an index, found `{tok}`"),
                )
            })?;
            nums.push(v);
        }
        out.push(to_query(&nums, dims));
    }
    Ok(out)
}

fn to_query(nums: &[i64], dims: &[usize]) -> QueryLine {
    let d = dims.len();
    if nums.iter().any(|&v| v < 1) {
        return QueryLine::Invalid;
    }
    let idx: Vec<usize> = nums.iter().map(|&v| v as usize).collect();
    let (lo, hi) = idx.split_at(d);
    if d == 1 {
        match QueryRange::checked(lo[0], hi[0], dims[0]) {
            Ok(r) => QueryLine::Linear(r),
            Err(_) => QueryLine::Invalid,
        }
    } else {
        match GridRange::checked(lo.to_vec(), hi.to_vec(), dims) {
            Ok(r) => QueryLine::Grid(r),
            Err(_) => QueryLine::Invalid,
        }
    }
}

pub fn load_queries(path: &Path, dims: &[usize]) -> Result<Vec<QueryLine>> {
    parse_queries(&read_file(path)?, dims, &path.display().to_string())
}
