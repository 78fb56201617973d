//! Simple polytopes as facet-incidence data.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::hull::SimplicialFacets;
use super::CombinatoricsError;
use crate::symmetry::FacetPermutation;

/// A simple n-polytope with labeled facets `0..m-1`; each vertex is stored as
/// the bit mask of the n facets through it. `m <= 32`.
///
/// The vertex list is kept sorted by mask value, so two polytopes with the
/// same combinatorics compare equal regardless of input order.
#[derive(Debug, Clone)]
pub struct SimplePolytope {
    dim: usize,
    num_facets: usize,
    vertices: Vec<u32>,
    name: String,
    relabel: Option<FacetPermutation>,
    faces: OnceLock<HashSet<u32>>,
}

impl PartialEq for SimplePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.num_facets == other.num_facets
            && self.vertices == other.vertices
    }
}

impl Eq for SimplePolytope {}

impl SimplePolytope {
    /// Validates and builds a polytope without touching the facet labels.
    ///
    /// Checks: every vertex set has exactly `dim` distinct facets in range,
    /// the sets are pairwise distinct, and every facet lies in some vertex.
    /// The base vertex `{0..dim-1}` is not required here; operations that
    /// need it (canonical enumeration) check for it themselves.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        num_facets: usize,
        vertex_sets: &[Vec<usize>],
    ) -> Result<Self, CombinatoricsError> {
        if dim == 0 {
            return Err(CombinatoricsError::InvalidParameters(
                "dimension must be positive".into(),
            ));
        }
        if num_facets > 32 {
            return Err(CombinatoricsError::TooManyFacets { got: num_facets });
        }
        let mut masks = Vec::with_capacity(vertex_sets.len());
        for set in vertex_sets {
            let mut mask = 0u32;
            for &f in set {
                if f >= num_facets {
                    return Err(CombinatoricsError::BadFacet {
                        facet: f,
                        problem: format!("out of range (num_facets = {num_facets})"),
                    });
                }
                mask |= 1 << f;
            }
            if mask.count_ones() as usize != dim {
                return Err(CombinatoricsError::WrongVertexSize {
                    set: set.clone(),
                    dim,
                });
            }
            masks.push(mask);
        }
        masks.sort_unstable();
        if let Some(w) = masks.windows(2).find(|w| w[0] == w[1]) {
            return Err(CombinatoricsError::DuplicateVertex(mask_to_set(w[0])));
        }
        let covered = masks.iter().fold(0u32, |acc, &v| acc | v);
        let all = mask_of_range(num_facets);
        if covered != all {
            let missing = (all & !covered).trailing_zeros() as usize;
            return Err(CombinatoricsError::BadFacet {
                facet: missing,
                problem: "appears in no vertex".into(),
            });
        }
        Ok(Self {
            dim,
            num_facets,
            vertices: masks,
            name: name.into(),
            relabel: None,
            faces: OnceLock::new(),
        })
    }

    /// Like [`SimplePolytope::new`], but relabels the facets when the base
    /// vertex `{0..dim-1}` is absent: the lexicographically smallest vertex
    /// set is mapped to `0..dim-1` and the remaining facets keep their
    /// relative order. The applied permutation (old label -> new label) is
    /// recorded in [`SimplePolytope::relabel`].
    pub fn normalized(
        name: impl Into<String>,
        dim: usize,
        num_facets: usize,
        vertex_sets: &[Vec<usize>],
    ) -> Result<Self, CombinatoricsError> {
        let plain = Self::new(name, dim, num_facets, vertex_sets)?;
        if plain.has_base_vertex() {
            return Ok(plain);
        }
        let smallest = plain
            .vertex_sets()
            .into_iter()
            .min()
            .expect("polytope has vertices");
        let mut images = vec![usize::MAX; num_facets];
        for (new, &old) in smallest.iter().enumerate() {
            images[old] = new;
        }
        let mut next = dim;
        for slot in images.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let perm = FacetPermutation::new(images).expect("constructed bijection");
        let relabeled: Vec<Vec<usize>> = plain
            .vertex_sets()
            .iter()
            .map(|set| {
                let mut s: Vec<usize> = set.iter().map(|&f| perm.image(f)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let mut out = Self::new(plain.name, dim, num_facets, &relabeled)?;
        out.relabel = Some(perm);
        Ok(out)
    }

    /// The n-simplex: n+1 facets, every n of them meeting in a vertex.
    pub fn simplex(dim: usize) -> Self {
        let sets: Vec<Vec<usize>> = (0..=dim)
            .map(|skip| (0..=dim).filter(|&f| f != skip).collect())
            .collect();
        Self::new(format!("simplex-{dim}"), dim, dim + 1, &sets).expect("simplex data is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.num_facets
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Vertex masks, sorted ascending; bit f set means facet f passes
    /// through the vertex.
    pub fn vertex_masks(&self) -> &[u32] {
        &self.vertices
    }

    /// Vertices as sorted index lists, in lexicographic order.
    pub fn vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.vertices.iter().map(|&v| mask_to_set(v)).collect();
        sets.sort();
        sets
    }

    /// Relabeling applied at load time, if any (old label -> new label).
    pub fn relabel(&self) -> Option<&FacetPermutation> {
        self.relabel.as_ref()
    }

    pub fn has_base_vertex(&self) -> bool {
        self.has_vertex(mask_of_range(self.dim))
    }

    pub fn has_vertex(&self, mask: u32) -> bool {
        self.vertices.binary_search(&mask).is_ok()
    }

    /// Downward closure of the vertex family: the masks of all faces
    /// (intersections of facets containing at least one vertex), including
    /// the empty face. Computed once and cached.
    pub fn faces(&self) -> &HashSet<u32> {
        self.faces.get_or_init(|| {
            let mut faces = HashSet::new();
            for &v in &self.vertices {
                let mut s = v;
                loop {
                    faces.insert(s);
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & v;
                }
            }
            faces
        })
    }

    /// Renames the polytope, keeping everything else.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Face-lattice dual of a simplicial facet list: each facet becomes a vertex
/// of the simple polytope, each point label a facet. Applies base-vertex
/// normalization when needed.
pub fn dualize(
    sf: &SimplicialFacets,
    name: impl Into<String>,
) -> Result<SimplePolytope, CombinatoricsError> {
    SimplePolytope::normalized(name, sf.dim(), sf.num_points(), sf.facets())
}

/// Cartesian product of simple polytopes: facets of `p` keep their labels,
/// facets of `q` shift up by `p.num_facets()`, vertices are all unions.
pub fn product(
    p: &SimplePolytope,
    q: &SimplePolytope,
) -> Result<SimplePolytope, CombinatoricsError> {
    let shift = p.num_facets();
    let m = shift + q.num_facets();
    if m > 32 {
        return Err(CombinatoricsError::TooManyFacets { got: m });
    }
    let mut sets = Vec::with_capacity(p.vertex_masks().len() * q.vertex_masks().len());
    for &vp in p.vertex_masks() {
        for &vq in q.vertex_masks() {
            let mask = vp | (vq << shift);
            sets.push(mask_to_set(mask));
        }
    }
    SimplePolytope::new(
        format!("{}x{}", p.name(), q.name()),
        p.dim() + q.dim(),
        m,
        &sets,
    )
}

pub(crate) fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| mask & (1 << b) != 0).collect()
}

pub(crate) fn mask_of_range(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}
