//! Lifting-search behavior on a constructed worst case: a Z2 characteristic
//! matrix whose 0/1 integer form has a vertex minor of absolute value 3, so
//! the verbatim matrix fails and signs must be flipped.

mod common;

use common::*;
use smallcover::gf2::{is_characteristic_z2, CharMatrixZ2};
use smallcover::lift::{find_lift, is_characteristic_z, CharMatrixZ};
use smallcover::SimplePolytope;

/// Two disjoint vertices over 8 facets; the free block is J - I, whose
/// integer determinant is -3 while its GF(2) determinant is 1.
fn synthetic() -> (SimplePolytope, CharMatrixZ2) {
    let p = SimplePolytope::new("pm3-minor", 4, 8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap();
    let mut rows = vec![vec![0u8; 8]; 4];
    for (r, row) in rows.iter_mut().enumerate() {
        row[r] = 1;
        for (k, slot) in row[4..8].iter_mut().enumerate() {
            if k != r {
                *slot = 1;
            }
        }
    }
    (p, CharMatrixZ2::from_rows(&rows).unwrap())
}

fn to_int_rows(z2: &CharMatrixZ2) -> Vec<Vec<i64>> {
    z2.rows()
        .iter()
        .map(|r| r.iter().map(|&e| e as i64).collect())
        .collect()
}

#[test]
fn verbatim_form_fails_with_minor_three() {
    let (p, z2) = synthetic();
    assert_eq!(is_characteristic_z2(&z2, &p), Ok(true));
    let verbatim = CharMatrixZ::from_rows(&to_int_rows(&z2)).unwrap();
    assert_eq!(is_characteristic_z(&verbatim, &p), Ok(false));
}

/// Independent oracle: enumerate every sign pattern on the odd entries in
/// the same candidate order the search uses (columns left to right, rows top
/// to bottom, +1 before -1) and take the first valid one.
fn exhaustive_first_lift_at_bound_one(
    p: &SimplePolytope,
    z2: &CharMatrixZ2,
) -> Option<(Vec<Vec<i64>>, usize)> {
    let odd_cells: Vec<(usize, usize)> = (4..8)
        .flat_map(|c| (0..4).map(move |r| (r, c)))
        .filter(|&(r, c)| z2.entry(r, c) == 1)
        .collect();
    let l = odd_cells.len();
    let mut first = None;
    let mut count = 0usize;
    for idx in 0..(1u32 << l) {
        let mut rows = to_int_rows(z2);
        for (k, &(r, c)) in odd_cells.iter().enumerate() {
            if (idx >> (l - 1 - k)) & 1 == 1 {
                rows[r][c] = -1;
            }
        }
        let candidate = CharMatrixZ::from_rows(&rows).unwrap();
        if is_characteristic_z(&candidate, p).unwrap() {
            count += 1;
            if first.is_none() {
                first = Some(rows);
            }
        }
    }
    first.map(|rows| (rows, count))
}

#[test]
fn bounded_search_matches_exhaustive_oracle() {
    let (p, z2) = synthetic();
    let (expected_rows, solutions) =
        exhaustive_first_lift_at_bound_one(&p, &z2).expect("a sign flip fixes the minor");
    assert_eq!(solutions, 1920, "many valid sign patterns exist");

    let found = find_lift(&z2, &p, 1).unwrap().expect("lift at bound 1");
    assert_eq!(found.rows(), expected_rows, "deterministic first solution");
    assert!(found.reduces_to(&z2));
    assert_eq!(is_characteristic_z(&found, &p), Ok(true));

    // exactly one entry had to change sign
    let negatives = found.rows().iter().flatten().filter(|&&e| e == -1).count();
    assert_eq!(negatives, 1);
    assert_eq!(found.entry(2, 7), -1);
}

#[test]
fn three_dimensional_matrices_lift_verbatim_at_bound_one() {
    for p in [cube3(), pentagonal_prism()] {
        let report = smallcover::gf2::enumerate_char_maps(&p, &Default::default()).unwrap();
        assert!(report.count() > 0);
        for z2 in &report.matrices {
            let lift = find_lift(z2, &p, 1)
                .unwrap()
                .expect("dimension 3 always lifts");
            // the 3x3 determinant bound means the 0/1 matrix itself works
            assert!(lift.rows().iter().flatten().all(|&e| e == 0 || e == 1));
            assert!(lift.reduces_to(z2));
        }
    }
}

#[test]
fn lift_reduction_and_int_checks_agree_mod_two() {
    // every returned lift reduces to its source; spot-check over P148
    let p = p148();
    for z2 in &published_matrices_p148() {
        let lift = find_lift(z2, &p, 2)
            .unwrap()
            .expect("published matrices lift");
        assert!(lift.reduces_to(z2));
    }
}
