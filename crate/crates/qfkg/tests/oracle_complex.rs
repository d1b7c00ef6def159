//! Face-count dominance checked against brute subset scans and small cases
//! computed by hand.

mod common;

use common::*;
use qfkg::complex::{
    check_intersection_dominance, join_identity, join_restatement, kleitman_scalar,
    SimplicialComplex,
};
use qfkg::fkg::Verdict;
use qfkg::gen::{default_rng, random_complex};
use qfkg::poly::{dominance, QPolynomial};
use qfkg::poset::Poset;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn complex(names: &[&str], facets: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_facets(labels(names), facets).unwrap()
}

#[test]
fn triangle_boundary_matches_hand_computation() {
    // Three edges of a triangle: faces are {}, 3 vertices, 3 edges.
    let c = complex(&["x", "y", "z"], &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    assert_eq!(c.face_count(), 7);
    assert_eq!(c.f_polynomial().unwrap(), poly_i(&[1, 3, 3]));
    assert_eq!(c.f_polynomial().unwrap(), brute_f_polynomial(&c));

    // Full simplex on 3 vertices: (1 + q)^3.
    let full = SimplicialComplex::full_simplex(labels(&["x", "y", "z"])).unwrap();
    assert_eq!(full.f_polynomial().unwrap(), poly_i(&[1, 3, 3, 1]));
    assert_eq!(full.f_polynomial().unwrap(), QPolynomial::one_plus_q_pow(3));
}

#[test]
fn f_polynomial_basics_hold_on_random_complexes() {
    let mut rng = default_rng(5);
    let verts = Poset::default_labels(7);
    for _ in 0..40 {
        let c = random_complex(&verts, &mut rng, 6);
        let f = c.f_polynomial().unwrap();
        assert_eq!(f, brute_f_polynomial(&c));
        // Constant term 1 (the empty face), f(1) = face count.
        assert_eq!(f.coeff(0), qi(1));
        assert_eq!(f.eval_one(), qi(c.face_count() as i64));
    }
}

#[test]
fn subcomplexes_have_dominated_face_vectors() {
    let mut rng = default_rng(17);
    let verts = Poset::default_labels(7);
    for _ in 0..25 {
        let big = random_complex(&verts, &mut rng, 6);
        let small = random_complex(&verts, &mut rng, 6);
        let inter = big.intersect(&small).unwrap();
        assert!(inter.is_subcomplex_of(&big));
        assert!(inter.is_subcomplex_of(&small));
        let f_inter = inter.f_polynomial().unwrap();
        assert!(dominance(&f_inter, &big.f_polynomial().unwrap()).holds);
        assert!(dominance(&f_inter, &small.f_polynomial().unwrap()).holds);
    }
}

#[test]
fn intersection_dominance_on_hand_built_pair() {
    // Shared vertex set {x, y, z}: edge-plus-point vs path-edge-plus-point.
    let delta = complex(&["x", "y", "z"], &[vec![0, 1], vec![2]]);
    let gamma = complex(&["x", "y", "z"], &[vec![1, 2], vec![0]]);

    let report = check_intersection_dominance(&delta, &gamma).unwrap();
    assert_eq!(report.fkg.verdict, Verdict::Holds);
    assert!(report.fkg.hypothesis_issues.is_empty());

    // f_Δ = f_Γ = 1 + 3q + q²; faces of the intersection: {}, x, y, z.
    assert_eq!(report.f_left, poly_i(&[1, 3, 1]));
    assert_eq!(report.f_right, poly_i(&[1, 3, 1]));
    assert_eq!(report.f_intersection, poly_i(&[1, 3]));
    assert_eq!(report.simplex_poly, poly_i(&[1, 3, 3, 1]));
    assert_eq!(report.fkg.lhs, &report.f_left * &report.f_right);
    assert_eq!(report.fkg.rhs, &report.simplex_poly * &report.f_intersection);
    assert!(report.fkg.dominance.holds);

    // Scalar specialization at q = 1: 5·5 ≤ 8·4.
    let (lhs, rhs, holds) = kleitman_scalar(&delta, &gamma).unwrap();
    assert_eq!(lhs, qi(25));
    assert_eq!(rhs, qi(32));
    assert!(holds);
}

#[test]
fn intersection_dominance_holds_on_random_pairs() {
    let mut rng = default_rng(29);
    let verts = Poset::default_labels(6);
    for round in 0..30 {
        let delta = random_complex(&verts, &mut rng, 5);
        let gamma = random_complex(&verts, &mut rng, 5);
        let report = check_intersection_dominance(&delta, &gamma).unwrap();
        assert_eq!(report.fkg.verdict, Verdict::Holds, "round {round}");
        assert!(report.fkg.hypothesis_issues.is_empty());

        let (l, r, ok) = kleitman_scalar(&delta, &gamma).unwrap();
        assert!(ok && l <= r);
    }
}

#[test]
fn join_multiplies_face_polynomials() {
    let delta = complex(&["x", "y"], &[vec![0, 1]]);
    let gamma = complex(&["u", "v"], &[vec![0], vec![1]]);
    let report = join_identity(&delta, &gamma).unwrap();
    assert!(report.holds);
    // (1 + 2q + q²)(1 + 2q) computed by hand.
    assert_eq!(report.f_join, poly_i(&[1, 4, 5, 2]));
    assert_eq!(report.product, report.f_join);

    let mut rng = default_rng(31);
    for _ in 0..20 {
        let delta =
            random_complex(&Poset::default_labels(5), &mut rng, 4).with_suffixed_labels("'");
        let gamma =
            random_complex(&Poset::default_labels(4), &mut rng, 4).with_suffixed_labels("''");
        let report = join_identity(&delta, &gamma).unwrap();
        assert!(report.holds);
        let expected = &delta.f_polynomial().unwrap() * &gamma.f_polynomial().unwrap();
        assert_eq!(report.f_join, expected);
        // Brute count on the joined complex agrees.
        let joined = delta.join(&gamma).unwrap();
        assert_eq!(report.f_join, brute_f_polynomial(&joined));
    }
}

#[test]
fn join_restatement_recovers_the_dominance() {
    let delta = complex(&["x", "y", "z"], &[vec![0, 1], vec![2]]);
    let gamma = complex(&["x", "y", "z"], &[vec![1, 2]]);
    let report = join_restatement(&delta, &gamma).unwrap();
    assert_eq!(report.verdict, Verdict::Holds);
    assert!(report.dominance.holds);
    assert_eq!(
        report.f_join,
        &delta.f_polynomial().unwrap() * &gamma.f_polynomial().unwrap()
    );

    let mut rng = default_rng(43);
    let verts = Poset::default_labels(5);
    for _ in 0..10 {
        let delta = random_complex(&verts, &mut rng, 4);
        let gamma = random_complex(&verts, &mut rng, 4);
        let report = join_restatement(&delta, &gamma).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }
}

#[test]
fn mismatched_or_degenerate_inputs_are_rejected() {
    let delta = complex(&["x", "y"], &[vec![0, 1]]);
    let gamma = complex(&["x", "z"], &[vec![0, 1]]);
    assert!(check_intersection_dominance(&delta, &gamma).is_err());

    // Join requires disjoint vertex labels.
    let overlapping = complex(&["y", "z"], &[vec![0]]);
    assert!(delta.join(&overlapping).is_err());

    // Facet index out of range.
    assert!(SimplicialComplex::from_facets(labels(&["x"]), &[vec![3]]).is_err());

    // Duplicate vertex labels.
    assert!(SimplicialComplex::from_facets(labels(&["x", "x"]), &[vec![0]]).is_err());
}

#[test]
fn void_and_empty_complexes_are_distinguished() {
    // No facets at all: the void complex, excluded from the theorems.
    let void = SimplicialComplex::from_facets(labels(&["x", "y"]), &[]).unwrap();
    assert!(void.is_void());
    assert_eq!(void.face_count(), 0);

    // The complex whose only face is empty.
    let empty_face = SimplicialComplex::from_facets(labels(&["x", "y"]), &[vec![]]).unwrap();
    assert!(!empty_face.is_void());
    assert_eq!(empty_face.face_count(), 1);
    assert_eq!(empty_face.f_polynomial().unwrap(), poly_i(&[1]));

    let other = complex(&["x", "y"], &[vec![0, 1]]);
    assert!(check_intersection_dominance(&void, &other).is_err());
    let report = check_intersection_dominance(&empty_face, &other).unwrap();
    assert_eq!(report.fkg.verdict, Verdict::Holds);
}
