//! Bit-packed GF(2) linear algebra and canonical enumeration of Z2
//! characteristic matrices.
//!
//! A characteristic matrix assigns a nonzero vector in Z2^n to each facet so
//! that the n vectors at every vertex are linearly independent. Up to the
//! left GL(n, Z2) action every such matrix has a unique representative whose
//! first n columns (the facets through the base vertex) form the identity;
//! the enumerator searches exactly those representatives.
//!
//! Columns are stored as `u32` bit masks with row 0 in the least significant
//! bit. Reports are sorted by the concatenated row-major bit string, so runs
//! with different worker counts serialize identically.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::combinatorics::{is_k_neighborly, SimplePolytope};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("expected {expected} columns, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("matrix is {matrix_n}x{matrix_m} but the polytope has n = {dim}, m = {num_facets}")]
    DimensionMismatch {
        matrix_n: usize,
        matrix_m: usize,
        dim: usize,
        num_facets: usize,
    },
    #[error("the first n columns are linearly dependent")]
    SingularPrefix,
    #[error("the polytope has no vertex {{0..n-1}}; relabel before enumerating")]
    MissingBaseVertex,
    #[error("invalid matrix shape: {0}")]
    InvalidShape(String),
}

/// n x m matrix over GF(2), stored column-wise; bit r of `cols[c]` is the
/// entry in row r, column c.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharMatrixZ2 {
    n: usize,
    m: usize,
    cols: Vec<u32>,
    canonical: bool,
}

impl CharMatrixZ2 {
    /// Builds from row-major 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, Gf2Error> {
        let n = rows.len();
        if n == 0 || n > 32 {
            return Err(Gf2Error::InvalidShape(format!("{n} rows")));
        }
        let m = rows[0].len();
        if m == 0 || m > 32 {
            return Err(Gf2Error::InvalidShape(format!("{m} columns")));
        }
        let mut cols = vec![0u32; m];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Gf2Error::InvalidShape("ragged rows".into()));
            }
            for (c, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => cols[c] |= 1 << r,
                    other => {
                        return Err(Gf2Error::InvalidShape(format!(
                            "entry {other} at ({r}, {c}) is not a bit"
                        )))
                    }
                }
            }
        }
        Ok(Self::from_cols(n, cols))
    }

    pub(crate) fn from_cols(n: usize, cols: Vec<u32>) -> Self {
        let m = cols.len();
        let canonical = m >= n && (0..n).all(|c| cols[c] == 1 << c);
        Self {
            n,
            m,
            cols,
            canonical,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Column c as a bit mask (row 0 = least significant bit).
    pub fn col(&self, c: usize) -> u32 {
        self.cols[c]
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        ((self.cols[c] >> r) & 1) as u8
    }

    /// True when columns `0..n-1` are the standard basis in order.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|r| (0..self.m).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Sort key: the row-major bit string, packed row by row with column 0
    /// in the most significant position.
    pub fn sort_key(&self) -> Vec<u64> {
        (0..self.n)
            .map(|r| (0..self.m).fold(0u64, |acc, c| (acc << 1) | self.entry(r, c) as u64))
            .collect()
    }

    /// Left-multiplies by the inverse of the first-n-column block, producing
    /// the unique `(I | *)` representative of the GL(n, Z2) orbit.
    pub fn canonicalize(&self) -> Result<CharMatrixZ2, Gf2Error> {
        if self.m < self.n {
            return Err(Gf2Error::WrongArity {
                expected: self.n,
                got: self.m,
            });
        }
        if self.canonical {
            return Ok(self.clone());
        }
        let inv = invert_gf2(self.n, &self.cols[..self.n]).ok_or(Gf2Error::SingularPrefix)?;
        let cols = self
            .cols
            .iter()
            .map(|&c| {
                let mut acc = 0u32;
                let mut bits = c;
                while bits != 0 {
                    let r = bits.trailing_zeros() as usize;
                    acc ^= inv[r];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Ok(Self::from_cols(self.n, cols))
    }
}

impl PartialOrd for CharMatrixZ2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CharMatrixZ2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.m)
            .cmp(&(other.n, other.m))
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

/// Determinant over GF(2) of n column vectors: 1 iff linearly independent.
pub fn det_gf2(n: usize, cols: &[u32]) -> Result<u8, Gf2Error> {
    if cols.len() != n {
        return Err(Gf2Error::WrongArity {
            expected: n,
            got: cols.len(),
        });
    }
    Ok(columns_independent(n, cols) as u8)
}

fn columns_independent(n: usize, cols: &[u32]) -> bool {
    debug_assert!(n <= 32 && cols.len() == n);
    let mut work = [0u32; 32];
    work[..n].copy_from_slice(cols);
    for r in 0..n {
        let mask = 1u32 << r;
        let Some(p) = (r..n).find(|&i| work[i] & mask != 0) else {
            return false;
        };
        work.swap(r, p);
        let pivot = work[r];
        for w in work[r + 1..n].iter_mut() {
            if *w & mask != 0 {
                *w ^= pivot;
            }
        }
    }
    true
}

/// Inverse of an n x n GF(2) matrix given as column masks, again as column
/// masks; `None` when singular.
fn invert_gf2(n: usize, cols: &[u32]) -> Option<Vec<u32>> {
    debug_assert!(n <= 32);
    // row-wise Gauss-Jordan on [A | I] packed into u64 rows
    let mut rows = vec![0u64; n];
    for (c, &col) in cols.iter().enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            *row |= (((col >> r) & 1) as u64) << c;
        }
    }
    for (r, row) in rows.iter_mut().enumerate() {
        *row |= 1u64 << (n + r);
    }
    for c in 0..n {
        let mask = 1u64 << c;
        let p = (c..n).find(|&i| rows[i] & mask != 0)?;
        rows.swap(c, p);
        let pivot = rows[c];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != c && *row & mask != 0 {
                *row ^= pivot;
            }
        }
    }
    // read the inverse back as columns
    let mut inv = vec![0u32; n];
    for (r, row) in rows.iter().enumerate() {
        let inv_row = (row >> n) as u32;
        for (c, col) in inv.iter_mut().enumerate() {
            *col |= ((inv_row >> c) & 1) << r;
        }
    }
    Some(inv)
}

/// True iff the columns at every vertex of the polytope are independent.
pub fn is_characteristic_z2(lambda: &CharMatrixZ2, p: &SimplePolytope) -> Result<bool, Gf2Error> {
    if lambda.n() != p.dim() || lambda.m() != p.num_facets() {
        return Err(Gf2Error::DimensionMismatch {
            matrix_n: lambda.n(),
            matrix_m: lambda.m(),
            dim: p.dim(),
            num_facets: p.num_facets(),
        });
    }
    let n = p.dim();
    let mut buf = [0u32; 32];
    for &vertex in p.vertex_masks() {
        gather_columns(lambda.cols(), vertex, &mut buf);
        if !columns_independent(n, &buf[..n]) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gather_columns(cols: &[u32], vertex: u32, buf: &mut [u32; 32]) {
    let mut bits = vertex;
    let mut i = 0;
    while bits != 0 {
        let f = bits.trailing_zeros() as usize;
        buf[i] = cols[f];
        i += 1;
        bits &= bits - 1;
    }
}

/// Cheap non-existence test run before enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// 2-neighborly with m >= 2^n: a characteristic map would need more than
    /// the 2^n - 1 available colors, so none exists.
    Blocked,
    /// No obstruction detected; enumeration must decide.
    Unknown,
}

pub fn quick_obstruction(p: &SimplePolytope) -> Obstruction {
    if p.dim() >= 2 && (p.num_facets() as u128) >= (1u128 << p.dim()) && is_k_neighborly(p, 2) {
        Obstruction::Blocked
    } else {
        Obstruction::Unknown
    }
}

/// Options for [`enumerate_char_maps`].
#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Worker threads; the search space is partitioned deterministically on
    /// the first free column, so any count produces identical reports.
    pub workers: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { workers: 1 }
    }
}

/// Result of a canonical enumeration.
#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub polytope: String,
    /// Canonical characteristic matrices, strictly increasing by sort key.
    pub matrices: Vec<CharMatrixZ2>,
    /// Candidate column assignments tried; identical for any worker count.
    pub nodes_explored: u64,
    pub wall_time: Duration,
}

impl EnumerationReport {
    pub fn count(&self) -> usize {
        self.matrices.len()
    }
}

/// Per-column vertex constraints: vertex v is checked when its highest facet
/// column is assigned, so each constraint runs exactly once per branch.
struct Search {
    n: usize,
    m: usize,
    by_last: Vec<Vec<u32>>,
}

impl Search {
    fn new(p: &SimplePolytope) -> Self {
        let n = p.dim();
        let m = p.num_facets();
        let mut by_last = vec![Vec::new(); m.saturating_sub(n)];
        for &v in p.vertex_masks() {
            let last = (31 - v.leading_zeros()) as usize;
            if last >= n {
                by_last[last - n].push(v);
            }
        }
        Self { n, m, by_last }
    }

    fn column_ok(&self, cols: &[u32], j: usize) -> bool {
        let mut buf = [0u32; 32];
        self.by_last[j - self.n].iter().all(|&v| {
            gather_columns(cols, v, &mut buf);
            columns_independent(self.n, &buf[..self.n])
        })
    }

    /// Depth-first over columns `j..m`, candidate values ascending.
    fn dfs(&self, cols: &mut Vec<u32>, j: usize, out: &mut Vec<Vec<u32>>, nodes: &mut u64) {
        if j == self.m {
            out.push(cols.clone());
            return;
        }
        for value in 1..(1u32 << self.n) {
            *nodes += 1;
            cols[j] = value;
            if self.column_ok(cols, j) {
                self.dfs(cols, j + 1, out, nodes);
            }
        }
        cols[j] = 0;
    }
}

/// Enumerates every canonical Z2 characteristic matrix over the polytope by
/// pruned depth-first backtracking on the free columns.
pub fn enumerate_char_maps(
    p: &SimplePolytope,
    opts: &EnumerateOptions,
) -> Result<EnumerationReport, Gf2Error> {
    assert!(opts.workers >= 1, "worker count must be at least 1");
    if !p.has_base_vertex() {
        return Err(Gf2Error::MissingBaseVertex);
    }
    let started = Instant::now();
    let n = p.dim();
    let m = p.num_facets();
    let search = Search::new(p);

    let identity: Vec<u32> = (0..n).map(|r| 1u32 << r).collect();
    let mut raw: Vec<Vec<u32>> = Vec::new();
    let mut nodes: u64 = 0;

    if m == n {
        raw.push(identity);
    } else {
        let first_values: Vec<u32> = (1..(1u32 << n)).collect();
        let workers = opts.workers.min(first_values.len()).max(1);
        if workers == 1 {
            let mut cols = identity;
            cols.resize(m, 0);
            search.dfs(&mut cols, n, &mut raw, &mut nodes);
        } else {
            let chunk = first_values.len().div_ceil(workers);
            let results: Vec<(Vec<Vec<u32>>, u64)> = std::thread::scope(|scope| {
                let handles: Vec<_> = first_values
                    .chunks(chunk)
                    .map(|values| {
                        let search = &search;
                        let identity = &identity;
                        scope.spawn(move || {
                            let mut out = Vec::new();
                            let mut local_nodes = 0u64;
                            let mut cols = identity.clone();
                            cols.resize(m, 0);
                            for &v in values {
                                local_nodes += 1;
                                cols[n] = v;
                                if search.column_ok(&cols, n) {
                                    search.dfs(&mut cols, n + 1, &mut out, &mut local_nodes);
                                }
                            }
                            (out, local_nodes)
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .collect()
            });
            for (out, worker_nodes) in results {
                raw.extend(out);
                nodes += worker_nodes;
            }
        }
    }

    let mut matrices: Vec<CharMatrixZ2> = raw
        .into_iter()
        .map(|cols| CharMatrixZ2::from_cols(n, cols))
        .collect();
    matrices.sort();
    Ok(EnumerationReport {
        polytope: p.name().to_string(),
        matrices,
        nodes_explored: nodes,
        wall_time: started.elapsed(),
    })
}
