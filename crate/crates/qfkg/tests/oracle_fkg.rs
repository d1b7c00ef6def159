//! Correlation-check engine against hand-computed values and two
//! independent recomputations of the defect polynomial.

mod common;

use common::*;
use num::Zero;
use qfkg::error::Error;
use qfkg::fkg::{
    check_psi_decomposition, check_qfkg, check_qfkg_fishburn, expectation_poly, fishburn_weight,
    psi, set_sum_poly, Comonotonicity, Direction, Verdict,
};
use qfkg::gen::{
    default_rng, random_func, random_ideal_lattice, random_monotone_func, random_nonneg_values,
    random_product_weight, MonotoneKind,
};
use qfkg::lattice::Lattice;
use qfkg::poly::QPolynomial;
use qfkg::rat::Q;
use qfkg::tables::{FuncTable, Monotonicity, WeightTable};

/// Square lattice (power set of two elements) with uniform weight and
/// g = h = rank. Everything below is verified by hand.
fn square_rank_instance() -> (qfkg::lattice::IdealLattice, WeightTable, FuncTable) {
    let lat = boolean_lattice(2);
    let mu = WeightTable::ones(lat.len());
    let rank = FuncTable::new((0..lat.len()).map(|x| qi(lat.rank(x) as i64)).collect());
    (lat, mu, rank)
}

#[test]
fn square_rank_statistic_matches_hand_computation() {
    let (lat, mu, rank) = square_rank_instance();
    let report = check_qfkg(&lat, &mu, &rank, &rank).unwrap();

    assert_eq!(report.e_one, poly_i(&[1, 2, 1]));
    assert_eq!(report.e_g, poly_i(&[0, 2, 2]));
    assert_eq!(report.e_h, poly_i(&[0, 2, 2]));
    assert_eq!(report.e_gh, poly_i(&[0, 2, 4]));
    assert_eq!(report.lhs, poly_i(&[0, 0, 4, 8, 4]));
    assert_eq!(report.rhs, poly_i(&[0, 2, 8, 10, 4]));
    assert_eq!(&report.rhs - &report.lhs, poly_i(&[0, 2, 4, 2]));

    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.direction, Direction::Forward);
    assert_eq!(report.comonotonicity, Comonotonicity::Comonotone);
    assert_eq!(report.g_monotonicity, Monotonicity::Increasing);
    assert!(report.hypothesis_issues.is_empty());
    assert!(report.dominance.holds);
}

#[test]
fn square_interval_decomposition_matches_hand_computation() {
    let (lat, mu, rank) = square_rank_instance();
    let report = check_psi_decomposition(&lat, &mu, &rank, &rank).unwrap();

    // Comparable pairs in index order; the two rank-1 ideals are incomparable.
    let got: Vec<(usize, usize, Q)> = report
        .entries
        .iter()
        .map(|e| (e.u, e.v, e.value.clone()))
        .collect();
    let want = vec![
        (0, 0, qi(0)),
        (0, 1, qi(1)),
        (0, 2, qi(1)),
        (0, 3, qi(4)),
        (1, 1, qi(0)),
        (1, 3, qi(1)),
        (2, 2, qi(0)),
        (2, 3, qi(1)),
        (3, 3, qi(0)),
    ];
    assert_eq!(got, want);

    assert_eq!(report.min_value, qi(0));
    assert_eq!(report.max_value, qi(4));
    assert_eq!(report.phi_poly, poly_i(&[0, 2, 4, 2]));
    assert!(report.aggregation_exact);
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.direction, Direction::Forward);
}

#[test]
fn expectation_matches_direct_sum_on_random_tables() {
    let mut rng = default_rng(71);
    for _ in 0..20 {
        let lat = random_ideal_lattice(&mut rng, 6, 1 << 8);
        let mu = WeightTable::new(random_nonneg_values(lat.len(), &mut rng))
            .unwrap_or_else(|_| WeightTable::ones(lat.len()));
        let k = random_func(lat.len(), &mut rng);

        let mut direct = QPolynomial::zero();
        for x in 0..lat.len() {
            let term = mu.get(x) * k.get(x);
            direct.add_term(&term, lat.rank(x));
        }
        assert_eq!(expectation_poly(&lat, &mu, Some(&k)).unwrap(), direct);
    }
}

#[test]
fn defect_polynomial_matches_two_independent_oracles_on_arbitrary_tables() {
    // The pairwise decomposition is an algebraic identity: it must hold for
    // arbitrary weights (zeros allowed) and arbitrary, non-monotone functions.
    let mut rng = default_rng(83);
    for round in 0..30 {
        let lat = random_ideal_lattice(&mut rng, 5, 40);
        let mut values = random_nonneg_values(lat.len(), &mut rng);
        if round % 3 == 0 {
            values[round % lat.len()] = Q::zero();
        }
        let mu = WeightTable::new_allow_zero_total(values).unwrap();
        let g = random_func(lat.len(), &mut rng);
        let h = random_func(lat.len(), &mut rng);

        let by_pairs = brute_phi_by_degree(&lat, &mu, &g, &h);
        let by_convolution = brute_phi_by_convolution(&lat, &mu, &g, &h);
        let report = check_psi_decomposition(&lat, &mu, &g, &h).unwrap();

        assert!(report.aggregation_exact, "round {round}");
        for d in 0..by_pairs.len() {
            assert_eq!(by_pairs[d], report.phi_poly.coeff(d), "degree {d}");
        }
        for d in 0..by_convolution.len() {
            assert_eq!(by_convolution[d], report.phi_poly.coeff(d), "degree {d}");
        }

        // Each ψ value equals the brute pair scan over its interval.
        for e in &report.entries {
            assert_eq!(e.value, brute_psi(&lat, &mu, &g, &h, e.u, e.v));
            assert_eq!(e.value, psi(&lat, &mu, &g, &h, e.u, e.v).unwrap());
        }
    }
}

#[test]
fn random_valid_instances_hold_in_both_formulations() {
    let mut rng = default_rng(97);
    for round in 0..10 {
        let lat = random_ideal_lattice(&mut rng, 5, 50);
        let mu = random_product_weight(&lat, &mut rng);
        let kind = if round % 2 == 0 {
            MonotoneKind::Increasing
        } else {
            MonotoneKind::Decreasing
        };
        let g = random_monotone_func(&lat, &mut rng, kind);
        let h = random_monotone_func(&lat, &mut rng, kind);

        let fkg = check_qfkg(&lat, &mu, &g, &h).unwrap();
        assert_eq!(fkg.verdict, Verdict::Holds, "round {round}");
        assert!(fkg.hypothesis_issues.is_empty(), "round {round}");

        let psi_rep = check_psi_decomposition(&lat, &mu, &g, &h).unwrap();
        assert_eq!(psi_rep.verdict, Verdict::Holds, "round {round}");
        assert!(psi_rep.aggregation_exact);
    }
}

#[test]
fn hypothesis_violations_are_flagged_not_suppressed() {
    let lat = boolean_lattice(2);

    // Weight failing log-supermodularity: 2·2 > 1·1 across the diagonal.
    let bad_mu = wt(&[1, 2, 2, 1]);
    let rank = FuncTable::new((0..lat.len()).map(|x| qi(lat.rank(x) as i64)).collect());
    let report = check_qfkg(&lat, &bad_mu, &rank, &rank).unwrap();
    assert!(
        report
            .hypothesis_issues
            .iter()
            .any(|s| s.contains("not log-supermodular")),
        "issues: {:?}",
        report.hypothesis_issues
    );

    // Non-monotone g: peak in the middle.
    let mu = WeightTable::ones(lat.len());
    let bumpy = ft(&[0, 5, 0, 1]);
    let report = check_qfkg(&lat, &mu, &bumpy, &rank).unwrap();
    assert!(report
        .hypothesis_issues
        .iter()
        .any(|s| s.contains("g is not monotone")));
    assert_eq!(report.comonotonicity, Comonotonicity::Unclassified);
    assert_eq!(report.direction, Direction::Forward);
}

#[test]
fn countermonotone_pair_reverses_the_inequality() {
    let lat = boolean_lattice(2);
    let mu = WeightTable::ones(lat.len());
    // g = [contains first element], h = 1 - g.
    let g = FuncTable::indicator(lat.len(), [1usize, 3]);
    let h = ft(&[1, 0, 1, 0]);

    let report = check_qfkg(&lat, &mu, &g, &h).unwrap();
    assert_eq!(report.comonotonicity, Comonotonicity::Countermonotone);
    assert_eq!(report.direction, Direction::Reversed);
    assert_eq!(report.verdict, Verdict::Holds);
    // Reversed orientation: E(1)E(gh) ≪ E(g)E(h).
    assert_eq!(report.lhs, &report.e_one * &report.e_gh);
    assert_eq!(report.rhs, &report.e_g * &report.e_h);
    // Specializing q = 1 gives the classical scalar inequality.
    assert!(report.lhs.eval_one() <= report.rhs.eval_one());

    let psi_rep = check_psi_decomposition(&lat, &mu, &g, &h).unwrap();
    assert_eq!(psi_rep.direction, Direction::Reversed);
    assert_eq!(psi_rep.verdict, Verdict::Holds);
    assert!(psi_rep.max_value <= qi(0));
}

#[test]
fn chain_weight_values_match_hand_computation() {
    let lat = boolean_lattice(2); // m = [1, 1, 1, 2], r! = [1, 1, 1, 2]

    let w = fishburn_weight(&lat, 1, 1).unwrap();
    assert_eq!(w.values(), wt(&[1, 1, 1, 1]).values());

    let w = fishburn_weight(&lat, 0, 1).unwrap();
    assert_eq!(w.values(), wt(&[1, 1, 1, 2]).values());

    let w = fishburn_weight(&lat, 0, 0).unwrap();
    assert_eq!(w.values(), wt(&[1, 1, 1, 1]).values());

    let w = fishburn_weight(&lat, 2, 2).unwrap();
    assert_eq!(w.values(), wt(&[1, 1, 1, 1]).values());

    assert!(matches!(
        fishburn_weight(&lat, 2, 1),
        Err(Error::BadExponents { s: 2, t: 1 })
    ));
}

#[test]
fn generalized_check_equals_ordinary_check_with_effective_weight() {
    let mut rng = default_rng(103);
    for _ in 0..8 {
        let lat = random_ideal_lattice(&mut rng, 5, 40);
        let mu = random_product_weight(&lat, &mut rng);
        let g = random_monotone_func(&lat, &mut rng, MonotoneKind::Increasing);
        let h = random_monotone_func(&lat, &mut rng, MonotoneKind::Increasing);

        for (s, t) in [(0, 1), (1, 1), (1, 2)] {
            let gen_report = check_qfkg_fishburn(&lat, &mu, s, t, &g, &h).unwrap();
            let effective = mu.pointwise_mul(&fishburn_weight(&lat, s, t).unwrap()).unwrap();
            let plain = check_qfkg(&lat, &effective, &g, &h).unwrap();
            assert_eq!(gen_report.verdict, plain.verdict);
            assert_eq!(gen_report.lhs, plain.lhs);
            assert_eq!(gen_report.rhs, plain.rhs);
            // Scaled log-supermodular weights stay log-supermodular.
            assert!(gen_report.hypothesis_issues.is_empty(), "s={s}, t={t}");
            assert_eq!(gen_report.verdict, Verdict::Holds, "s={s}, t={t}");
        }
    }
}

#[test]
fn sum_polynomial_collects_ranks() {
    let lat = boolean_lattice(2);
    let w = vec![qi(3), qi(5), qi(7), qi(11)];
    assert_eq!(set_sum_poly(&lat, &w, &[0, 1, 2, 3]), poly_i(&[3, 12, 11]));
    assert_eq!(set_sum_poly(&lat, &w, &[1, 3]), poly_i(&[0, 5, 11]));
    assert_eq!(set_sum_poly(&lat, &w, &[]), QPolynomial::zero());
}
