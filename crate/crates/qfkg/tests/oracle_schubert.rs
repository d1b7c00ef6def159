//! Rank generating functions of box lattices checked against the Gaussian
//! binomial recurrence and hand computations.

mod common;

use common::*;
use qfkg::error::Error;
use qfkg::fkg::Verdict;
use qfkg::lattice::Lattice;
use qfkg::poly::dominance;
use qfkg::rat::{factorial, Q};
use qfkg::schubert::{
    box_grid_isomorphism, check_all_pairs, check_poincare_dominance, BoxLattice, Grading,
};

#[test]
fn two_by_two_box_matches_hand_computation() {
    let lat = BoxLattice::new(2, 2).unwrap();
    assert_eq!(lat.len(), 6);
    assert_eq!(lat.full_partition(), part(&[2, 2]));

    let comb = lat.full_poincare(Grading::Combinatorial);
    assert_eq!(comb, poly_i(&[1, 1, 2, 1, 1]));

    let cohom = lat.full_poincare(Grading::Cohomological);
    assert_eq!(cohom, poly_i(&[1, 0, 1, 0, 2, 0, 1, 0, 1]));
    assert_eq!(cohom, comb.stretch(2));
    assert_eq!(cohom.eval_one(), qi(6));

    // Principal ideals.
    let p = lat
        .poincare_polynomial(&part(&[1]), Grading::Combinatorial)
        .unwrap();
    assert_eq!(p, poly_i(&[1, 1]));
    let p = lat
        .poincare_polynomial(&part(&[2, 1]), Grading::Combinatorial)
        .unwrap();
    assert_eq!(p, poly_i(&[1, 1, 2, 1]));
}

#[test]
fn full_box_series_match_the_gaussian_binomial_recurrence() {
    for (rows, cols) in [(1usize, 1u32), (2, 2), (2, 3), (3, 2), (3, 3), (4, 4), (2, 5)] {
        let lat = BoxLattice::new(rows, cols).unwrap();
        let got = lat.full_poincare(Grading::Combinatorial);
        let want = gaussian_binomial(rows + cols as usize, rows);
        assert_eq!(got, want, "box {rows}x{cols}");

        // Point count: the binomial coefficient.
        let n = (rows + cols as usize) as u64;
        let binom = Q::new(
            factorial(n),
            factorial(rows as u64) * factorial(n - rows as u64),
        );
        assert_eq!(got.eval_one(), binom);
    }
}

#[test]
fn dominance_pair_in_the_square_box_matches_hand_computation() {
    let lat = BoxLattice::new(2, 2).unwrap();
    let report = check_poincare_dominance(
        &lat,
        &part(&[2]),
        &part(&[1, 1]),
        Grading::Combinatorial,
    )
    .unwrap();

    assert_eq!(report.meet, "1");
    assert_eq!(report.p_u, poly_i(&[1, 1, 1]));
    assert_eq!(report.p_v, poly_i(&[1, 1, 1]));
    assert_eq!(report.p_meet, poly_i(&[1, 1]));
    assert_eq!(report.lhs, poly_i(&[1, 2, 3, 2, 1]));
    assert_eq!(report.rhs, poly_i(&[1, 2, 3, 3, 2, 1]));
    assert!(report.dominance.holds);
    assert_eq!(report.fkg.verdict, Verdict::Holds);
    assert!(report.fkg.hypothesis_issues.is_empty());
}

#[test]
fn every_pair_holds_in_small_boxes_under_both_gradings() {
    for (rows, cols) in [(2usize, 2u32), (2, 3), (3, 3)] {
        let lat = BoxLattice::new(rows, cols).unwrap();
        for grading in [Grading::Combinatorial, Grading::Cohomological] {
            let report = check_all_pairs(&lat, grading).unwrap();
            assert!(report.all_hold, "box {rows}x{cols}");
            assert_eq!(report.pairs, lat.len() * lat.len());
            assert!(report.failures.is_empty());
        }
    }
}

#[test]
fn principal_series_grow_monotonically_with_the_shape() {
    let lat = BoxLattice::new(3, 3).unwrap();
    for u in 0..lat.len() {
        for v in 0..lat.len() {
            if !lat.partition(v).contains(lat.partition(u)) {
                continue;
            }
            let p_u = lat
                .poincare_polynomial(lat.partition(u), Grading::Cohomological)
                .unwrap();
            let p_v = lat
                .poincare_polynomial(lat.partition(v), Grading::Cohomological)
                .unwrap();
            assert!(
                dominance(&p_u, &p_v).holds,
                "{} inside {}",
                lat.partition(u),
                lat.partition(v)
            );
        }
    }
}

#[test]
fn regrading_is_a_coefficient_stretch_everywhere() {
    let lat = BoxLattice::new(3, 2).unwrap();
    for x in 0..lat.len() {
        let u = lat.partition(x).clone();
        let comb = lat.poincare_polynomial(&u, Grading::Combinatorial).unwrap();
        let cohom = lat.poincare_polynomial(&u, Grading::Cohomological).unwrap();
        assert_eq!(cohom, comb.stretch(2), "element {u}");
    }
    for v in 0..lat.len() {
        let a = check_poincare_dominance(
            &lat,
            lat.partition(2),
            lat.partition(v),
            Grading::Combinatorial,
        )
        .unwrap();
        let b = check_poincare_dominance(
            &lat,
            lat.partition(2),
            lat.partition(v),
            Grading::Cohomological,
        )
        .unwrap();
        assert_eq!(b.lhs, a.lhs.stretch(2));
        assert_eq!(b.rhs, a.rhs.stretch(2));
        assert_eq!(b.dominance.holds, a.dominance.holds);
    }
}

#[test]
fn box_lattice_is_isomorphic_to_grid_ideals() {
    for (rows, cols) in [(1usize, 1u32), (2, 2), (3, 3), (4, 4), (2, 4), (3, 2), (1, 5)] {
        let report = box_grid_isomorphism(rows, cols).unwrap();
        assert!(report.holds, "box {rows}x{cols}");
        assert!(report.rank_preserved);
        assert!(report.covers_preserved);
        assert!(report.meets_preserved);
        assert!(report.joins_preserved);
    }
}

#[test]
fn shapes_outside_the_box_are_rejected() {
    let lat = BoxLattice::new(2, 2).unwrap();
    assert!(matches!(
        lat.index_of(&part(&[3])),
        Err(Error::OutsideBox { rows: 2, cols: 2 })
    ));
    assert!(matches!(
        lat.index_of(&part(&[1, 1, 1])),
        Err(Error::OutsideBox { .. })
    ));
    assert!(!lat.contains(&part(&[3])));
    assert!(lat.contains(&part(&[2, 2])));
    assert!(check_poincare_dominance(&lat, &part(&[3]), &part(&[1]), Grading::Combinatorial)
        .is_err());
}
