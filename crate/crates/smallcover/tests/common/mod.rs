//! Shared fixtures: the two 8-facet neighborly polytopes with their published
//! characteristic matrices, plus small standard polytopes.

#![allow(dead_code)]

use smallcover::combinatorics::{cyclic_polytope, dualize, product, SimplePolytope};
use smallcover::gf2::CharMatrixZ2;
use smallcover::io;
use smallcover::symmetry::FacetPermutation;

pub const P048_POINTS_JSON: &str = include_str!("../fixtures/p048_points.json");
pub const P148_POINTS_JSON: &str = include_str!("../fixtures/p148_points.json");
pub const P048_POLYTOPE_JSON: &str = include_str!("../fixtures/p048_polytope.json");
pub const P148_POLYTOPE_JSON: &str = include_str!("../fixtures/p148_polytope.json");

/// The 19 distinct vertex sets printed for P048 (one line of the published
/// list is a duplicate); the twentieth vertex {1,2,3,7} is recovered from
/// the hull of the coordinates.
pub const P048_PRINTED_DISTINCT: [[usize; 4]; 19] = [
    [0, 1, 2, 3],
    [0, 1, 2, 7],
    [0, 1, 3, 4],
    [0, 1, 4, 5],
    [0, 1, 5, 6],
    [0, 1, 6, 7],
    [0, 2, 3, 4],
    [0, 2, 4, 5],
    [0, 2, 5, 6],
    [0, 2, 6, 7],
    [1, 3, 4, 6],
    [1, 3, 6, 7],
    [1, 4, 5, 6],
    [2, 3, 4, 7],
    [2, 4, 5, 7],
    [2, 5, 6, 7],
    [3, 4, 5, 6],
    [3, 4, 5, 7],
    [3, 5, 6, 7],
];

pub const P048_RECOVERED_VERTEX: [usize; 4] = [1, 2, 3, 7];

/// The seven published characteristic matrices over P048, in publication
/// order a1..a7.
pub const A_P048: [[[u8; 8]; 4]; 7] = [
    [
        [1, 0, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 1, 0],
        [0, 0, 0, 1, 0, 1, 0, 1],
    ],
    [
        [1, 0, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 0, 1, 0, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 1, 0],
        [0, 0, 0, 1, 0, 1, 0, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 1, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 1, 0, 1],
        [0, 0, 1, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 1, 1, 1],
    ],
    [
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 1, 0, 1],
    ],
    [
        [1, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 1, 0],
        [0, 0, 0, 1, 1, 0, 1, 1],
    ],
];

/// The three published characteristic matrices over P148.
pub const A_P148: [[[u8; 8]; 4]; 3] = [
    [
        [1, 0, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
    ],
    [
        [1, 0, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 0],
    ],
    [
        [1, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 0, 1, 1],
    ],
];

/// The published order-4 symmetry of P048.
pub const TAU_P048: [usize; 8] = [5, 6, 4, 1, 0, 2, 7, 3];

pub fn p048() -> SimplePolytope {
    io::polytope_from_json(P048_POLYTOPE_JSON).unwrap()
}

pub fn p148() -> SimplePolytope {
    io::polytope_from_json(P148_POLYTOPE_JSON).unwrap()
}

pub fn tau() -> FacetPermutation {
    FacetPermutation::new(TAU_P048.to_vec()).unwrap()
}

pub fn published_matrices_p048() -> Vec<CharMatrixZ2> {
    A_P048.iter().map(matrix).collect()
}

pub fn published_matrices_p148() -> Vec<CharMatrixZ2> {
    A_P148.iter().map(matrix).collect()
}

pub fn matrix(rows: &[[u8; 8]; 4]) -> CharMatrixZ2 {
    CharMatrixZ2::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn cyclic_dual(n: usize, m: usize) -> SimplePolytope {
    dualize(&cyclic_polytope(n, m).unwrap(), format!("dual-c{n}-{m}")).unwrap()
}

/// 3-cube with facets relabeled so the base vertex exists.
pub fn cube3() -> SimplePolytope {
    let seg = SimplePolytope::simplex(1);
    let square = product(&seg, &seg).unwrap();
    let raw = product(&square, &seg).unwrap();
    SimplePolytope::normalized("cube3", raw.dim(), raw.num_facets(), &raw.vertex_sets()).unwrap()
}

/// Pentagonal prism, base-normalized.
pub fn pentagonal_prism() -> SimplePolytope {
    let pentagon = dualize(&cyclic_polytope(2, 5).unwrap(), "pentagon").unwrap();
    let raw = product(&pentagon, &SimplePolytope::simplex(1)).unwrap();
    SimplePolytope::normalized(
        "pentagonal-prism",
        raw.dim(),
        raw.num_facets(),
        &raw.vertex_sets(),
    )
    .unwrap()
}
