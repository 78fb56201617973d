//! Exact rational convex hull for simplicial polytopes, plus the
//! combinatorial cyclic-polytope generator.

use std::collections::HashMap;

use num::Signed;
use num::Zero;

use super::rational::Rational;
use super::CombinatoricsError;
use crate::util::combinations;

/// A full-dimensional set of exact rational points, the vertex coordinates of
/// a simplicial polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    /// Validates distinctness, coordinate arity and full-dimensionality
    /// (rank of the difference vectors equals `dim`).
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self, CombinatoricsError> {
        if dim == 0 {
            return Err(CombinatoricsError::InvalidParameters(
                "dimension must be positive".into(),
            ));
        }
        for p in &points {
            if p.len() != dim {
                return Err(CombinatoricsError::InvalidParameters(format!(
                    "point with {} coordinates in R^{dim}",
                    p.len()
                )));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(CombinatoricsError::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        if points.len() < dim + 1 || affine_rank(&points) < dim {
            return Err(CombinatoricsError::NotFullDimensional { dim });
        }
        Ok(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Points on the moment curve t -> (t, t^2, ..., t^dim); the geometric
    /// realization of the cyclic polytope for strictly increasing parameters.
    pub fn moment_curve(dim: usize, params: &[Rational]) -> Result<Self, CombinatoricsError> {
        let points = params
            .iter()
            .map(|t| {
                let mut coords = Vec::with_capacity(dim);
                let mut acc = Rational::from_integer(1.into());
                for _ in 0..dim {
                    acc *= t;
                    coords.push(acc.clone());
                }
                coords
            })
            .collect();
        Self::new(dim, points)
    }
}

/// The facet list of a simplicial polytope: sorted `dim`-element subsets of
/// point labels, two per ridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialFacets {
    dim: usize,
    num_points: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialFacets {
    /// Validates arity, label range, distinctness, point coverage and the
    /// pseudomanifold condition (every ridge in exactly two facets).
    pub fn new(
        dim: usize,
        num_points: usize,
        mut facets: Vec<Vec<usize>>,
    ) -> Result<Self, CombinatoricsError> {
        for f in &mut facets {
            f.sort_unstable();
            if f.len() != dim || f.windows(2).any(|w| w[0] == w[1]) {
                return Err(CombinatoricsError::WrongVertexSize {
                    set: f.clone(),
                    dim,
                });
            }
            if let Some(&bad) = f.iter().find(|&&x| x >= num_points) {
                return Err(CombinatoricsError::BadFacet {
                    facet: bad,
                    problem: format!("out of range (num_points = {num_points})"),
                });
            }
        }
        facets.sort();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(CombinatoricsError::DuplicateVertex(w[0].clone()));
        }
        let mut covered = vec![false; num_points];
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &facets {
            for &x in f {
                covered[x] = true;
            }
            for skip in 0..dim {
                let ridge: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        if let Some(p) = covered.iter().position(|&c| !c) {
            return Err(CombinatoricsError::BadFacet {
                facet: p,
                problem: "appears in no facet".into(),
            });
        }
        if let Some((ridge, &count)) = ridges.iter().find(|&(_, &c)| c != 2) {
            return Err(CombinatoricsError::NotPseudomanifold {
                ridge: ridge.clone(),
                count,
            });
        }
        Ok(Self {
            dim,
            num_points,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    /// Sorted list of sorted facets.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }
}

/// Exact convex hull of a full-dimensional point set whose hull is
/// simplicial: returns exactly the `dim`-subsets spanning a supporting
/// hyperplane with every other point strictly on one side.
pub fn facets_from_points(pts: &PointSet) -> Result<SimplicialFacets, CombinatoricsError> {
    let d = pts.dim();
    let points = pts.points();
    let m = points.len();
    let mut facets = Vec::new();
    for subset in combinations(m, d) {
        // hyperplane a.x + c = 0 through the subset, as the 1-dimensional
        // nullspace of the d x (d+1) homogeneous system [x | 1]
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| {
                let mut r = points[i].clone();
                r.push(Rational::from_integer(1.into()));
                r
            })
            .collect();
        let Some(normal) = nullspace_vector(rows) else {
            continue; // affinely dependent, spans no hyperplane
        };
        let eval = |q: &[Rational]| -> Rational {
            let mut acc = normal[d].clone();
            for (a, x) in normal.iter().zip(q.iter()) {
                acc += a * x;
            }
            acc
        };
        let mut pos = false;
        let mut neg = false;
        let mut on_plane = None;
        for (i, point) in points.iter().enumerate() {
            if subset.contains(&i) {
                continue;
            }
            let v = eval(point);
            if v.is_zero() {
                on_plane = Some(i);
            } else if v.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        if pos && neg {
            continue; // interior chord plane, not supporting
        }
        if let Some(extra) = on_plane {
            return Err(CombinatoricsError::NotSimplicial { subset, extra });
        }
        facets.push(subset);
    }
    let mut covered = vec![false; m];
    for f in &facets {
        for &x in f {
            covered[x] = true;
        }
    }
    if let Some(i) = covered.iter().position(|&c| !c) {
        return Err(CombinatoricsError::InteriorPoint { index: i });
    }
    SimplicialFacets::new(d, m, facets)
}

/// Facets of the cyclic polytope `C^n(m)` by Gale's evenness condition: an
/// n-subset S is a facet iff for every i < j outside S the number of
/// elements of S strictly between i and j is even.
pub fn cyclic_polytope(n: usize, m: usize) -> Result<SimplicialFacets, CombinatoricsError> {
    if n < 2 || m <= n {
        return Err(CombinatoricsError::InvalidParameters(format!(
            "cyclic polytope needs m > n >= 2, got n = {n}, m = {m}"
        )));
    }
    let mut facets = Vec::new();
    for subset in combinations(m, n) {
        let inside: Vec<bool> = {
            let mut v = vec![false; m];
            for &x in &subset {
                v[x] = true;
            }
            v
        };
        let outside: Vec<usize> = (0..m).filter(|&x| !inside[x]).collect();
        let mut ok = true;
        'pairs: for (a, &i) in outside.iter().enumerate() {
            for &j in &outside[a + 1..] {
                let between = subset.iter().filter(|&&k| i < k && k < j).count();
                if between % 2 == 1 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            facets.push(subset);
        }
    }
    SimplicialFacets::new(n, m, facets)
}

/// Rank of the affine hull: rank of the difference vectors to the first point.
fn affine_rank(points: &[Vec<Rational>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    rank(diffs)
}

#[allow(clippy::needless_range_loop)] // elimination mixes two rows per step
fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            if !m[i][c].is_zero() {
                let factor = &m[i][c] / &pivot;
                for j in c..cols {
                    let sub = &factor * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Kernel vector of a d x (d+1) system with a 1-dimensional nullspace;
/// `None` when the rows are dependent (rank < d).
#[allow(clippy::needless_range_loop)] // elimination mixes two rows per step
fn nullspace_vector(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = rows + 1;
    let mut pivot_cols = Vec::with_capacity(rows);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..cols {
            m[r][j] = &m[r][j] / &pivot;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let sub = &factor * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if r < rows {
        return None;
    }
    let free = (0..cols)
        .find(|c| !pivot_cols.contains(c))
        .expect("one free column");
    let mut kernel = vec![Rational::zero(); cols];
    kernel[free] = Rational::from_integer(1.into());
    for (row, &pc) in pivot_cols.iter().enumerate() {
        kernel[pc] = -m[row][free].clone();
    }
    Some(kernel)
}
