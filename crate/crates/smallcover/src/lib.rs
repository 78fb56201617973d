//! Characteristic maps over simple polytopes.
//!
//! The crate decides whether a simple polytope admits a characteristic map,
//! enumerates all canonical Z2 characteristic matrices up to `GL(n, Z2)` and
//! polytope symmetry, searches integer lifts of those matrices, and computes
//! the combinatorial invariants (f/h-vectors, neighborliness, chromatic data,
//! Stanley-Reisner presentation) attached to the resulting manifolds.
//!
//! Everything is exact: polytope ingestion runs on arbitrary-precision
//! rationals, matrix work runs on bit-packed GF(2) words and machine
//! integers. All algorithms are deterministic; parallel enumeration is
//! bit-identical to the serial run.

pub mod combinatorics;
pub mod gf2;
pub mod invariants;
pub mod io;
pub mod lift;
pub mod symmetry;
mod util;

pub use combinatorics::{
    cyclic_polytope, dualize, f_vector, facets_from_points, h_vector, product, FVector, HVector,
    PointSet, SimplePolytope, SimplicialFacets,
};
pub use gf2::{enumerate_char_maps, quick_obstruction, CharMatrixZ2, EnumerationReport};
pub use invariants::{chromatic_number, facet_adjacency, AdjacencyGraph, SRPresentation};
pub use lift::{find_lift, CharMatrixZ};
pub use symmetry::{
    automorphisms, isomorphism, orbit_classify, AutGroup, FacetPermutation, OrbitClassification,
};
