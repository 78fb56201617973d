//! Facet-relabeling symmetries of a simple polytope and the induced
//! classification of characteristic matrices.
//!
//! `Aut(P)` is realized as the permutations of facet labels that map the
//! vertex family onto itself; for simple polytopes this is exactly the
//! automorphism group of the face poset. Orbits of canonical matrices under
//! the column action of `Aut(P)` count the associated manifolds up to weakly
//! equivariant homeomorphism.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::combinatorics::SimplePolytope;
use crate::gf2::{CharMatrixZ2, EnumerationReport, Gf2Error};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("images are not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("permuted identity block is singular; the permutation is not an automorphism or the matrix is not characteristic")]
    SingularPrefix,
    #[error("acting on matrix {index} leaves the enumerated set; inputs are inconsistent")]
    ActionLeavesSet { index: usize },
    #[error("{0}")]
    Mismatch(String),
}

/// A bijection of facet labels, stored as the image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetPermutation {
    images: Vec<usize>,
}

impl FacetPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self, SymmetryError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &img in &images {
            if img >= m || seen[img] {
                return Err(SymmetryError::NotABijection(m));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Self { images }
    }

    /// Applies the relabeling to a facet bit mask.
    pub fn apply_to_mask(&self, mask: u32) -> u32 {
        let mut out = 0;
        let mut bits = mask;
        while bits != 0 {
            let f = bits.trailing_zeros() as usize;
            out |= 1 << self.images[f];
            bits &= bits - 1;
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        let m = self.images.len();
        let mut seen = vec![false; m];
        let mut acc = 1usize;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The full automorphism group, stored explicitly; polytopes in scope have
/// tiny groups.
#[derive(Debug, Clone)]
pub struct AutGroup {
    generators: Vec<FacetPermutation>,
    elements: Vec<FacetPermutation>,
}

impl AutGroup {
    /// A small generating set (empty for the trivial group).
    pub fn generators(&self) -> &[FacetPermutation] {
        &self.generators
    }

    /// All elements, sorted lexicographically by image array.
    pub fn elements(&self) -> &[FacetPermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, perm: &FacetPermutation) -> bool {
        self.elements.binary_search(perm).is_ok()
    }
}

/// Facet incidence data driving the signature pruning: ridge sizes (number
/// of vertices shared by a facet pair), per-facet vertex counts, and the
/// resulting per-facet signature.
struct Incidence {
    ridge_size: Vec<Vec<u32>>,
    signature: Vec<(u32, Vec<u32>)>,
    vertex_set: HashSet<u32>,
    vertices: Vec<u32>,
}

impl Incidence {
    fn of(p: &SimplePolytope) -> Self {
        let m = p.num_facets();
        let mut ridge_size = vec![vec![0u32; m]; m];
        let mut vertex_count = vec![0u32; m];
        for &v in p.vertex_masks() {
            let facets: Vec<usize> = (0..m).filter(|&f| v & (1 << f) != 0).collect();
            for (a, &i) in facets.iter().enumerate() {
                vertex_count[i] += 1;
                for &j in &facets[a + 1..] {
                    ridge_size[i][j] += 1;
                    ridge_size[j][i] += 1;
                }
            }
        }
        let signature = (0..m)
            .map(|i| {
                let mut sizes: Vec<u32> = (0..m)
                    .filter(|&j| j != i)
                    .map(|j| ridge_size[i][j])
                    .collect();
                sizes.sort_unstable();
                (vertex_count[i], sizes)
            })
            .collect();
        Self {
            ridge_size,
            signature,
            vertex_set: p.vertex_masks().iter().copied().collect(),
            vertices: p.vertex_masks().to_vec(),
        }
    }
}

/// Computes `Aut(P)`: every facet permutation mapping the vertex family onto
/// itself. Backtracks over facet images, pruned by facet signatures (vertex
/// count plus the multiset of ridge sizes against every other facet).
pub fn automorphisms(p: &SimplePolytope) -> AutGroup {
    let m = p.num_facets();
    let data = Incidence::of(p);
    let mut elements = Vec::new();
    let mut images = vec![usize::MAX; m];
    let mut used = vec![false; m];
    backtrack(
        0,
        &mut images,
        &mut used,
        &data,
        &data,
        &mut elements,
        false,
    );
    elements.sort();
    let generators = generating_set(&elements, m);
    AutGroup {
        generators,
        elements,
    }
}

/// Finds one facet relabeling carrying the vertex family of `p` onto that of
/// `q`, or `None` when the polytopes are combinatorially distinct. Useful for
/// matching hull output against an externally labeled facet list.
pub fn isomorphism(p: &SimplePolytope, q: &SimplePolytope) -> Option<FacetPermutation> {
    if p.dim() != q.dim()
        || p.num_facets() != q.num_facets()
        || p.vertex_masks().len() != q.vertex_masks().len()
    {
        return None;
    }
    let m = p.num_facets();
    let source = Incidence::of(p);
    let target = Incidence::of(q);
    let mut found = Vec::new();
    let mut images = vec![usize::MAX; m];
    let mut used = vec![false; m];
    backtrack(
        0,
        &mut images,
        &mut used,
        &source,
        &target,
        &mut found,
        true,
    );
    found.into_iter().next()
}

fn backtrack(
    facet: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    source: &Incidence,
    target: &Incidence,
    out: &mut Vec<FacetPermutation>,
    first_only: bool,
) {
    let m = images.len();
    if first_only && !out.is_empty() {
        return;
    }
    if facet == m {
        let perm = FacetPermutation::new(images.clone()).expect("bijection by construction");
        if source
            .vertices
            .iter()
            .all(|&v| target.vertex_set.contains(&perm.apply_to_mask(v)))
        {
            out.push(perm);
        }
        return;
    }
    for img in 0..m {
        if used[img] || source.signature[facet] != target.signature[img] {
            continue;
        }
        if (0..facet)
            .any(|prev| source.ridge_size[facet][prev] != target.ridge_size[img][images[prev]])
        {
            continue;
        }
        images[facet] = img;
        used[img] = true;
        backtrack(facet + 1, images, used, source, target, out, first_only);
        used[img] = false;
        images[facet] = usize::MAX;
    }
}

/// Greedy small generating set: consider elements by descending order, then
/// lexicographically, and keep those extending the closure.
fn generating_set(elements: &[FacetPermutation], m: usize) -> Vec<FacetPermutation> {
    let mut candidates: Vec<&FacetPermutation> =
        elements.iter().filter(|e| !e.is_identity()).collect();
    candidates.sort_by_key(|e| (std::cmp::Reverse(e.order()), e.images().to_vec()));
    let mut generators: Vec<FacetPermutation> = Vec::new();
    let mut closure: HashSet<FacetPermutation> = HashSet::new();
    closure.insert(FacetPermutation::identity(m));
    for cand in candidates {
        if closure.len() == elements.len() {
            break;
        }
        if closure.contains(cand) {
            continue;
        }
        generators.push(cand.clone());
        closure = close_under(&generators, m);
    }
    generators
}

fn close_under(generators: &[FacetPermutation], m: usize) -> HashSet<FacetPermutation> {
    let mut closure = HashSet::new();
    let mut frontier = vec![FacetPermutation::identity(m)];
    while let Some(next) = frontier.pop() {
        if !closure.insert(next.clone()) {
            continue;
        }
        for g in generators {
            frontier.push(g.compose(&next));
        }
    }
    closure
}

/// Column action of a facet permutation on a canonical matrix: column i of
/// the image is column `perm(i)` of the input, re-canonicalized. For an
/// automorphism the new leading block consists of a vertex's columns, hence
/// stays invertible.
pub fn act(matrix: &CharMatrixZ2, perm: &FacetPermutation) -> Result<CharMatrixZ2, SymmetryError> {
    if matrix.m() != perm.len() {
        return Err(SymmetryError::Mismatch(format!(
            "matrix has {} columns, permutation acts on {}",
            matrix.m(),
            perm.len()
        )));
    }
    let cols: Vec<u32> = (0..matrix.m()).map(|i| matrix.col(perm.image(i))).collect();
    let permuted = CharMatrixZ2::from_cols(matrix.n(), cols);
    permuted.canonicalize().map_err(|e| match e {
        Gf2Error::SingularPrefix => SymmetryError::SingularPrefix,
        other => SymmetryError::Mismatch(other.to_string()),
    })
}

/// Orbits of an enumeration report under the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClassification {
    /// Orbits as sorted index lists into the report, ordered by first index.
    pub orbits: Vec<Vec<usize>>,
    /// Lexicographically smallest matrix of each orbit.
    pub representatives: Vec<CharMatrixZ2>,
}

impl OrbitClassification {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Partitions the enumerated matrices into `Aut(P)`-orbits; the orbit count
/// is the number of associated manifolds up to weakly equivariant
/// homeomorphism.
pub fn orbit_classify(
    report: &EnumerationReport,
    group: &AutGroup,
) -> Result<OrbitClassification, SymmetryError> {
    let index_of: HashMap<Vec<u64>, usize> = report
        .matrices
        .iter()
        .enumerate()
        .map(|(i, mat)| (mat.sort_key(), i))
        .collect();
    let k = report.matrices.len();
    let mut seen = vec![false; k];
    let mut orbits = Vec::new();
    let mut representatives = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        let mut frontier = vec![start];
        seen[start] = true;
        while let Some(i) = frontier.pop() {
            for g in group.elements() {
                let image = act(&report.matrices[i], g)?;
                let &j = index_of
                    .get(&image.sort_key())
                    .ok_or(SymmetryError::ActionLeavesSet { index: i })?;
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                    frontier.push(j);
                }
            }
        }
        orbit.sort_unstable();
        representatives.push(report.matrices[orbit[0]].clone());
        orbits.push(orbit);
    }
    Ok(OrbitClassification {
        orbits,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::product;
    use crate::gf2::{enumerate_char_maps, EnumerateOptions};

    #[test]
    fn permutation_basics() {
        let p = FacetPermutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.inverse().images(), &[2, 0, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.apply_to_mask(0b011), 0b110);
        assert!(FacetPermutation::new(vec![0, 0, 1]).is_err());
        assert!(FacetPermutation::new(vec![0, 3]).is_err());
    }

    #[test]
    fn simplex_full_symmetric_group() {
        for n in 2..=4 {
            let g = automorphisms(&SimplePolytope::simplex(n));
            let expected: usize = (1..=n + 1).product();
            assert_eq!(g.order(), expected, "Aut(simplex-{n}) = S_{}", n + 1);
        }
    }

    #[test]
    fn cube_group_order() {
        let seg = SimplePolytope::simplex(1);
        let square = product(&seg, &seg).unwrap();
        let cube = product(&square, &seg).unwrap();
        assert_eq!(automorphisms(&cube).order(), 48);
    }

    #[test]
    fn group_is_closed() {
        let g = automorphisms(&SimplePolytope::simplex(3));
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn generators_generate() {
        let seg = SimplePolytope::simplex(1);
        let square = product(&seg, &seg).unwrap();
        let cube = product(&square, &seg).unwrap();
        let g = automorphisms(&cube);
        let closure = close_under(g.generators(), cube.num_facets());
        assert_eq!(closure.len(), g.order());
        assert!(g.generators().len() <= 3);
    }

    #[test]
    fn act_by_identity_is_identity() {
        let p = SimplePolytope::simplex(4);
        let report = enumerate_char_maps(&p, &EnumerateOptions::default()).unwrap();
        let id = FacetPermutation::identity(5);
        for m in &report.matrices {
            assert_eq!(&act(m, &id).unwrap(), m);
        }
    }

    #[test]
    fn act_round_trip_via_inverse() {
        let p = SimplePolytope::simplex(4);
        let report = enumerate_char_maps(&p, &EnumerateOptions::default()).unwrap();
        for g in automorphisms(&p).elements() {
            for m in &report.matrices {
                let once = act(m, g).unwrap();
                assert_eq!(&act(&once, &g.inverse()).unwrap(), m);
            }
        }
    }

    #[test]
    fn trivial_group_gives_singletons() {
        let p = SimplePolytope::simplex(3);
        let report = enumerate_char_maps(&p, &EnumerateOptions::default()).unwrap();
        let trivial = AutGroup {
            generators: vec![],
            elements: vec![FacetPermutation::identity(4)],
        };
        let classes = orbit_classify(&report, &trivial).unwrap();
        assert_eq!(classes.orbit_count(), report.count());
        assert!(classes.orbits.iter().all(|o| o.len() == 1));
    }

    #[test]
    fn square_orbits_and_truncation_error() {
        let seg = SimplePolytope::simplex(1);
        let square = product(&seg, &seg).unwrap();
        let square = SimplePolytope::normalized("square", 2, 4, &square.vertex_sets()).unwrap();
        let report = enumerate_char_maps(&square, &EnumerateOptions::default()).unwrap();
        assert_eq!(report.count(), 3);
        let g = automorphisms(&square);
        assert_eq!(g.order(), 8, "dihedral group of the square");
        let classes = orbit_classify(&report, &g).unwrap();
        assert_eq!(classes.orbit_count(), 2);

        // dropping one member of the two-element orbit leaves the set open
        let two = classes.orbits.iter().find(|o| o.len() == 2).unwrap();
        let mut truncated = report.clone();
        truncated.matrices.remove(two[1]);
        assert!(matches!(
            orbit_classify(&truncated, &g),
            Err(SymmetryError::ActionLeavesSet { .. })
        ));
    }
}
