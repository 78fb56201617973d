//! Coloring and cohomological invariants: facet adjacency, exact chromatic
//! number, Stanley-Reisner data and Betti numbers.

use thiserror::Error;

use crate::combinatorics::{f_vector, h_vector, product, HVector, SimplePolytope};
use crate::gf2::{is_characteristic_z2, CharMatrixZ2};
use crate::lift::{is_characteristic_z, CharMatrixZ};
use crate::util::combinations;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("graph with {nodes} nodes exceeds the exact-coloring limit of 20")]
    TooLarge { nodes: usize },
    #[error("the matrix is not characteristic over the polytope")]
    NotCharacteristic,
}

/// Facet adjacency: nodes are facets, an edge means the two facets share a
/// ridge (equivalently, a vertex, since the polytope is simple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adj: Vec<u32>,
}

impl AdjacencyGraph {
    pub fn nodes(&self) -> usize {
        self.adj.len()
    }

    /// Neighbor set of node i as a bit mask.
    pub fn neighbors(&self, i: usize) -> u32 {
        self.adj[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i] & (1 << j) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_complete(&self) -> bool {
        let m = self.nodes();
        self.edge_count() == m * (m - 1) / 2
    }
}

/// Builds the facet adjacency graph: `{i, j}` is an edge iff some vertex
/// contains both facets.
pub fn facet_adjacency(p: &SimplePolytope) -> AdjacencyGraph {
    let m = p.num_facets();
    let mut adj = vec![0u32; m];
    for &v in p.vertex_masks() {
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            adj[i] |= bits; // pair i with every higher facet in the vertex
            let mut higher = bits;
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                adj[j] |= 1 << i;
                higher &= higher - 1;
            }
        }
    }
    AdjacencyGraph { adj }
}

/// Exact chromatic number by branch and bound with DSATUR ordering and a
/// greedy clique lower bound. Limited to 20 nodes.
pub fn chromatic_number(g: &AdjacencyGraph) -> Result<u32, InvariantsError> {
    let m = g.nodes();
    if m > 20 {
        return Err(InvariantsError::TooLarge { nodes: m });
    }
    if m == 0 {
        return Ok(0);
    }
    if g.adj.iter().all(|&a| a == 0) {
        return Ok(1);
    }
    let lower = greedy_clique(g) as u32;
    let mut colors = vec![usize::MAX; m];
    let upper = dsatur_greedy(g, &mut colors);
    if lower == upper {
        return Ok(lower);
    }
    let mut best = upper;
    let mut assignment = vec![usize::MAX; m];
    branch(g, &mut assignment, 0, 0, lower, &mut best);
    Ok(best)
}

fn greedy_clique(g: &AdjacencyGraph) -> usize {
    let m = g.nodes();
    let mut best = 1;
    for start in 0..m {
        let mut clique = 1u32 << start;
        let mut common = g.neighbors(start);
        while common != 0 {
            // take the candidate with most neighbors inside the candidate set
            let mut pick = usize::MAX;
            let mut pick_score = 0u32;
            let mut bits = common;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let score = (g.neighbors(v) & common).count_ones();
                if pick == usize::MAX || score > pick_score {
                    pick = v;
                    pick_score = score;
                }
            }
            clique |= 1 << pick;
            common &= g.neighbors(pick);
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

fn dsatur_greedy(g: &AdjacencyGraph, colors: &mut [usize]) -> u32 {
    let m = g.nodes();
    let mut used = 0;
    for _ in 0..m {
        let v = select_dsatur(g, colors).expect("uncolored node exists");
        let c = smallest_feasible(g, colors, v);
        colors[v] = c;
        used = used.max(c + 1);
    }
    used as u32
}

/// Uncolored node with maximal saturation, breaking ties by degree then index.
fn select_dsatur(g: &AdjacencyGraph, colors: &[usize]) -> Option<usize> {
    let m = g.nodes();
    (0..m)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut seen = 0u32;
            let mut bits = g.neighbors(v);
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if colors[u] != usize::MAX {
                    seen |= 1 << colors[u];
                }
            }
            (
                seen.count_ones(),
                g.neighbors(v).count_ones(),
                std::cmp::Reverse(v),
            )
        })
}

fn smallest_feasible(g: &AdjacencyGraph, colors: &[usize], v: usize) -> usize {
    let mut banned = 0u32;
    let mut bits = g.neighbors(v);
    while bits != 0 {
        let u = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if colors[u] != usize::MAX {
            banned |= 1 << colors[u];
        }
    }
    (!banned).trailing_zeros() as usize
}

fn branch(
    g: &AdjacencyGraph,
    colors: &mut [usize],
    colored: usize,
    used: u32,
    lower: u32,
    best: &mut u32,
) {
    if *best == lower {
        return; // cannot improve below the clique bound
    }
    if colored == g.nodes() {
        *best = (*best).min(used);
        return;
    }
    let Some(v) = select_dsatur(g, colors) else {
        return;
    };
    let mut banned = 0u32;
    let mut bits = g.neighbors(v);
    while bits != 0 {
        let u = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if colors[u] != usize::MAX {
            banned |= 1 << colors[u];
        }
    }
    let limit = (used + 1).min(*best - 1);
    for c in 0..limit {
        if banned & (1 << c) != 0 {
            continue;
        }
        colors[v] = c as usize;
        branch(g, colors, colored + 1, used.max(c + 1), lower, best);
        colors[v] = usize::MAX;
    }
}

/// Consistency check for the product construction: the chromatic number of a
/// product must be the sum of the factors' chromatic numbers. A `false`
/// return signals an implementation bug rather than interesting mathematics.
pub fn chi_additivity_check(
    p: &SimplePolytope,
    q: &SimplePolytope,
) -> Result<bool, InvariantsError> {
    let prod = product(p, q).map_err(|_| InvariantsError::TooLarge {
        nodes: p.num_facets() + q.num_facets(),
    })?;
    let chi_p = chromatic_number(&facet_adjacency(p))?;
    let chi_q = chromatic_number(&facet_adjacency(q))?;
    let chi_prod = chromatic_number(&facet_adjacency(&prod))?;
    Ok(chi_prod == chi_p + chi_q)
}

/// All inclusion-minimal facet subsets with empty intersection, by size then
/// lexicographic order. Sizes run up to n+1; a minimal non-face cannot be
/// larger since its proper subsets must fit inside vertex sets of size n.
pub fn minimal_nonfaces(p: &SimplePolytope) -> Vec<Vec<usize>> {
    let faces = p.faces();
    let m = p.num_facets();
    let n = p.dim();
    let mut generator_masks: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    for size in 2..=(n + 1).min(m) {
        for subset in combinations(m, size) {
            let mask = subset.iter().fold(0u32, |acc, &f| acc | 1 << f);
            if generator_masks.iter().any(|&g| g & !mask == 0) {
                continue; // contains a smaller non-face
            }
            if !faces.contains(&mask) {
                generator_masks.push(mask);
                out.push(subset);
            }
        }
    }
    out
}

/// A characteristic matrix over either coefficient ring.
#[derive(Debug, Clone, Copy)]
pub enum CharacteristicRef<'a> {
    Z2(&'a CharMatrixZ2),
    Z(&'a CharMatrixZ),
}

impl<'a> From<&'a CharMatrixZ2> for CharacteristicRef<'a> {
    fn from(m: &'a CharMatrixZ2) -> Self {
        Self::Z2(m)
    }
}

impl<'a> From<&'a CharMatrixZ> for CharacteristicRef<'a> {
    fn from(m: &'a CharMatrixZ) -> Self {
        Self::Z(m)
    }
}

/// Stanley-Reisner presentation data of the manifold attached to a
/// characteristic pair: ideal generators, the linear forms, and the Betti
/// numbers (no ring arithmetic is performed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SRPresentation {
    /// Minimal facet subsets with empty intersection, one monomial each.
    pub nonface_generators: Vec<Vec<usize>>,
    /// Row i holds the coefficients of the linear form built from row i of
    /// the characteristic matrix.
    pub linear_forms: Vec<Vec<i64>>,
    /// Betti numbers; equal to the h-vector of the polytope.
    pub betti: HVector,
}

/// Emits the presentation for a characteristic pair.
pub fn presentation(
    p: &SimplePolytope,
    lambda: CharacteristicRef<'_>,
) -> Result<SRPresentation, InvariantsError> {
    let linear_forms = match lambda {
        CharacteristicRef::Z2(m) => {
            if !is_characteristic_z2(m, p).map_err(|_| InvariantsError::NotCharacteristic)? {
                return Err(InvariantsError::NotCharacteristic);
            }
            m.rows()
                .into_iter()
                .map(|row| row.into_iter().map(i64::from).collect())
                .collect()
        }
        CharacteristicRef::Z(m) => {
            if !is_characteristic_z(m, p).map_err(|_| InvariantsError::NotCharacteristic)? {
                return Err(InvariantsError::NotCharacteristic);
            }
            m.rows()
        }
    };
    Ok(SRPresentation {
        nonface_generators: minimal_nonfaces(p),
        linear_forms,
        betti: h_vector(&f_vector(p)),
    })
}
