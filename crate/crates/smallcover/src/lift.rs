//! Integer characteristic matrices and the bounded lifting search.
//!
//! A Z2 characteristic matrix lifts when some integer matrix with the same
//! entries mod 2 (and identity in the first n columns) has every vertex
//! minor equal to +-1. The search is bounded and deterministic: absence at a
//! bound is reported as such, never as a disproof.

use thiserror::Error;

use crate::combinatorics::SimplePolytope;
use crate::gf2::{is_characteristic_z2, CharMatrixZ2};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("expected {expected} columns, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("matrix is {matrix_n}x{matrix_m} but the polytope has n = {dim}, m = {num_facets}")]
    DimensionMismatch {
        matrix_n: usize,
        matrix_m: usize,
        dim: usize,
        num_facets: usize,
    },
    #[error("the mod-2 input is not a canonical characteristic matrix")]
    InputNotCharacteristic,
    #[error("invalid matrix shape: {0}")]
    InvalidShape(String),
}

/// n x m integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMatrixZ {
    n: usize,
    m: usize,
    entries: Vec<i64>,
}

impl CharMatrixZ {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LiftError> {
        let n = rows.len();
        if n == 0 {
            return Err(LiftError::InvalidShape("no rows".into()));
        }
        let m = rows[0].len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(LiftError::InvalidShape("empty or ragged rows".into()));
        }
        Ok(Self {
            n,
            m,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.m + c]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.m).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.entry(r, c)).collect()
    }

    /// True when the entries reduce mod 2 to the given Z2 matrix.
    pub fn reduces_to(&self, z2: &CharMatrixZ2) -> bool {
        self.n == z2.n()
            && self.m == z2.m()
            && (0..self.n).all(|r| {
                (0..self.m).all(|c| self.entry(r, c).rem_euclid(2) as u8 == z2.entry(r, c))
            })
    }
}

/// Exact integer determinant of n columns (Bareiss elimination).
pub fn det_int(n: usize, cols: &[Vec<i64>]) -> Result<i64, LiftError> {
    if cols.len() != n {
        return Err(LiftError::WrongArity {
            expected: n,
            got: cols.len(),
        });
    }
    for col in cols {
        if col.len() != n {
            return Err(LiftError::InvalidShape(format!(
                "column of length {}, expected {n}",
                col.len()
            )));
        }
    }
    let mut mat = vec![[0i128; 8]; n];
    for (c, col) in cols.iter().enumerate() {
        for (r, &e) in col.iter().enumerate() {
            mat[r][c] = e as i128;
        }
    }
    Ok(bareiss(n, &mut mat) as i64)
}

fn bareiss(n: usize, mat: &mut [[i128; 8]]) -> i128 {
    debug_assert!(n <= 8);
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if mat[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| mat[r][k] != 0) else {
                return 0;
            };
            mat.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    sign * mat[n - 1][n - 1]
}

/// True iff every vertex minor of the matrix is +1 or -1.
pub fn is_characteristic_z(lambda: &CharMatrixZ, p: &SimplePolytope) -> Result<bool, LiftError> {
    if lambda.n() != p.dim() || lambda.m() != p.num_facets() {
        return Err(LiftError::DimensionMismatch {
            matrix_n: lambda.n(),
            matrix_m: lambda.m(),
            dim: p.dim(),
            num_facets: p.num_facets(),
        });
    }
    let n = p.dim();
    for &vertex in p.vertex_masks() {
        let cols: Vec<Vec<i64>> = (0..p.num_facets())
            .filter(|&f| vertex & (1 << f) != 0)
            .map(|f| lambda.column(f))
            .collect();
        if det_int(n, &cols)?.abs() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for an integer lift of a canonical Z2 characteristic matrix with
/// all entries bounded by `bound` in absolute value.
///
/// The first n columns are fixed to the integer identity. Free entries are
/// explored column by column, top to bottom, with candidate values ordered
/// 1, -1, 3, -3, ... for odd parity and 0, 2, -2, ... for even parity; a
/// vertex minor is checked as soon as its last column completes. The first
/// solution in that order is returned, so results are reproducible. `None`
/// means the bounded search is exhausted, not that no lift exists.
pub fn find_lift(
    z2: &CharMatrixZ2,
    p: &SimplePolytope,
    bound: i64,
) -> Result<Option<CharMatrixZ>, LiftError> {
    assert!(bound >= 1, "bound must be at least 1");
    if z2.n() != p.dim() || z2.m() != p.num_facets() {
        return Err(LiftError::DimensionMismatch {
            matrix_n: z2.n(),
            matrix_m: z2.m(),
            dim: p.dim(),
            num_facets: p.num_facets(),
        });
    }
    if !z2.is_canonical()
        || !is_characteristic_z2(z2, p).map_err(|_| LiftError::InputNotCharacteristic)?
    {
        return Err(LiftError::InputNotCharacteristic);
    }
    let n = p.dim();
    let m = p.num_facets();

    // vertices indexed by their highest facet, checked when that column fills
    let mut by_last = vec![Vec::new(); m];
    for &v in p.vertex_masks() {
        let last = (31 - v.leading_zeros()) as usize;
        if last >= n {
            by_last[last].push(v);
        }
    }

    let mut entries = vec![0i64; n * m];
    for r in 0..n {
        entries[r * m + r] = 1;
    }
    let found = search_cell(z2, bound, &by_last, &mut entries, n, 0);
    Ok(found.then_some(CharMatrixZ { n, m, entries }))
}

fn search_cell(
    z2: &CharMatrixZ2,
    bound: i64,
    by_last: &[Vec<u32>],
    entries: &mut Vec<i64>,
    col: usize,
    row: usize,
) -> bool {
    let n = z2.n();
    let m = z2.m();
    if col == m {
        return true;
    }
    if row == n {
        // column complete: check every vertex ending here
        for &v in &by_last[col] {
            if !minor_is_unit(entries, n, m, v) {
                return false;
            }
        }
        return search_cell(z2, bound, by_last, entries, col + 1, 0);
    }
    let parity = z2.entry(row, col);
    let mut value = if parity == 1 { 1 } else { 0 };
    while value <= bound {
        for candidate in [value, -value] {
            entries[row * m + col] = candidate;
            if search_cell(z2, bound, by_last, entries, col, row + 1) {
                return true;
            }
            if candidate == 0 {
                break; // -0 is no new candidate
            }
        }
        value += 2;
    }
    entries[row * m + col] = 0;
    false
}

fn minor_is_unit(entries: &[i64], n: usize, m: usize, vertex: u32) -> bool {
    let mut mat = [[0i128; 8]; 8];
    let mut c = 0;
    let mut bits = vertex;
    while bits != 0 {
        let f = bits.trailing_zeros() as usize;
        for r in 0..n {
            mat[r][c] = entries[r * m + f] as i128;
        }
        c += 1;
        bits &= bits - 1;
    }
    bareiss(n, &mut mat[..n]).abs() == 1
}
