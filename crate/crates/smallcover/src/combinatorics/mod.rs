//! Exact-rational polytope ingestion, cyclic polytopes and f/h-vector
//! machinery.
//!
//! The pipeline is: rational coordinates ([`PointSet`]) -> convex hull
//! ([`facets_from_points`]) -> facet list of the simplicial polytope
//! ([`SimplicialFacets`]) -> dual simple polytope ([`dualize`]). Cyclic
//! polytopes come combinatorially from Gale's evenness condition and serve as
//! an independent route to the same facet sets.

mod fvector;
mod hull;
mod polytope;
mod rational;

pub use fvector::{
    check_dehn_sommerville, f_from_h, f_vector, gtheorem_valid, h_vector, is_k_neighborly,
    neighborliness, FVector, HVector,
};
pub use hull::{cyclic_polytope, facets_from_points, PointSet, SimplicialFacets};
pub use polytope::{dualize, product, SimplePolytope};
pub use rational::{format_rational, parse_rational, Rational};

use thiserror::Error;

/// Errors from polytope ingestion and construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    /// The affine hull of the input points has dimension below the declared one.
    #[error("point set is not full-dimensional in R^{dim}")]
    NotFullDimensional { dim: usize },
    /// A supporting hyperplane contains more than `dim` points.
    #[error("input is not simplicial: the supporting hyperplane through points {subset:?} contains point {extra}")]
    NotSimplicial { subset: Vec<usize>, extra: usize },
    /// A point lies on no facet of the hull.
    #[error("point {index} lies in the interior of the hull")]
    InteriorPoint { index: usize },
    /// Duplicate point in a point set.
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    /// Bad parameters for a generator (e.g. cyclic polytope needs m > n >= 2).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// Duplicate vertex set in a polytope description.
    #[error("duplicate vertex set {0:?}")]
    DuplicateVertex(Vec<usize>),
    /// A vertex set has the wrong cardinality for the declared dimension.
    #[error("vertex set {set:?} has {} facets, expected {dim}", set.len())]
    WrongVertexSize { set: Vec<usize>, dim: usize },
    /// A facet index is out of range or some facet appears in no vertex.
    #[error("facet {facet} {problem}")]
    BadFacet { facet: usize, problem: String },
    /// More facets than the bit-packed representation supports.
    #[error("{got} facets exceed the supported maximum of 32")]
    TooManyFacets { got: usize },
    /// The facet family violates the pseudomanifold condition.
    #[error("ridge {ridge:?} lies in {count} facets, expected 2")]
    NotPseudomanifold { ridge: Vec<usize>, count: usize },
    /// Malformed rational literal.
    #[error("cannot parse rational number {0:?}")]
    BadRational(String),
}
