//! Lattice construction checked against exhaustive subset scans, naive
//! recursion, and hand-verified small cases.

mod common;

use common::*;
use num::BigInt;
use qfkg::error::Error;
use qfkg::gen::{default_rng, random_ideal_lattice, random_poset};
use qfkg::lattice::{
    distributivity_violation, maximal_chain_counts, modular_rank_violation, IdealLattice, Lattice,
};
use qfkg::poset::{all_labeled_posets, all_posets_up_to_iso, Poset, MAX_POSET_ELEMENTS};

fn lat_from_covers(labels: &[&str], covers: &[(usize, usize)]) -> IdealLattice {
    let poset =
        Poset::from_covers(labels.iter().map(|s| s.to_string()).collect(), covers).unwrap();
    IdealLattice::from_poset(&poset).unwrap()
}

fn mask_list(lat: &IdealLattice) -> Vec<u64> {
    (0..lat.len()).map(|x| lat.mask(x)).collect()
}

#[test]
fn boolean_cube_is_the_full_power_set() {
    let lat = boolean_lattice(3);
    assert_eq!(lat.len(), 8);
    assert_eq!(lat.height(), 3);
    assert_eq!(mask_list(&lat), brute_ideals(lat.poset()));

    let mut layer_sizes = [0usize; 4];
    for x in 0..lat.len() {
        assert_eq!(lat.rank(x), lat.mask(x).count_ones() as usize);
        layer_sizes[lat.rank(x)] += 1;
    }
    assert_eq!(layer_sizes, [1, 3, 3, 1]);

    // Meet and join are set intersection and union.
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            assert_eq!(lat.mask(lat.meet(x, y)), lat.mask(x) & lat.mask(y));
            assert_eq!(lat.mask(lat.join(x, y)), lat.mask(x) | lat.mask(y));
        }
    }
}

#[test]
fn vee_poset_has_exactly_five_ideals() {
    // c below both a and b: ideals are {}, {c}, {ac}, {bc}, {abc}.
    let lat = lat_from_covers(&["a", "b", "c"], &[(2, 0), (2, 1)]);
    assert_eq!(mask_list(&lat), vec![0b000, 0b100, 0b101, 0b110, 0b111]);
    assert_eq!(lat.ideal_key(0), "");
    assert_eq!(lat.ideal_key(1), "c");
    assert_eq!(lat.ideal_key(4), "a,b,c");
}

#[test]
fn n_shaped_poset_has_exactly_eight_ideals() {
    // a < c, b < c, b < d.
    let lat = lat_from_covers(&["a", "b", "c", "d"], &[(0, 2), (1, 2), (1, 3)]);
    assert_eq!(lat.len(), 8);
    assert_eq!(mask_list(&lat), brute_ideals(lat.poset()));
    assert_eq!(distributivity_violation(&lat, 7), None);
    assert_eq!(modular_rank_violation(&lat), None);
}

#[test]
fn grid_ideal_counts_match_binomials() {
    for (rows, cols, expect) in [(2usize, 2usize, 6usize), (2, 3, 10), (3, 3, 20)] {
        let poset = Poset::grid(rows, cols).unwrap();
        let lat = IdealLattice::from_poset(&poset).unwrap();
        assert_eq!(lat.len(), expect, "grid {rows}x{cols}");
        assert_eq!(mask_list(&lat), brute_ideals(&poset));
    }
}

#[test]
fn enumeration_matches_brute_subset_scan_on_random_posets() {
    let mut rng = default_rng(11);
    for _ in 0..25 {
        let poset = random_poset(&mut rng, 6);
        let lat = IdealLattice::from_poset(&poset).unwrap();
        assert_eq!(mask_list(&lat), brute_ideals(&poset));
    }
}

#[test]
fn chain_counts_match_naive_recursion() {
    let cube = boolean_lattice(3);
    let counts = maximal_chain_counts(&cube);
    assert_eq!(counts[cube.top()], BigInt::from(6)); // 3! orderings

    let mut rng = default_rng(23);
    for _ in 0..10 {
        let lat = random_ideal_lattice(&mut rng, 5, 1 << 10);
        let counts = maximal_chain_counts(&lat);
        for x in 0..lat.len() {
            assert_eq!(counts[x], brute_chain_count(&lat, x), "element {x}");
        }
    }
}

#[test]
fn relative_complements_match_brute_pair_scan() {
    // Square. Complement pairs of the whole interval: {bot, top} and {a, b}.
    let square = boolean_lattice(2);
    let lib = square
        .relative_complements(square.bottom(), square.top())
        .unwrap();
    assert_eq!(normalize_pairs(&lib), vec![(0, 3), (1, 2)]);

    let mut rng = default_rng(37);
    for _ in 0..10 {
        let lat = random_ideal_lattice(&mut rng, 5, 30);
        for u in 0..lat.len() {
            for v in 0..lat.len() {
                if lat.meet(u, v) != u {
                    continue;
                }
                let lib = lat.relative_complements(u, v).unwrap();
                assert_eq!(
                    normalize_pairs(&lib),
                    brute_relative_complements(&lat, u, v),
                    "interval [{u}, {v}]"
                );
            }
        }
    }
}

#[test]
fn intervals_are_distributive_lattices_of_the_enumerated_size() {
    let mut rng = default_rng(41);
    for round in 0..10 {
        let lat = random_ideal_lattice(&mut rng, 5, 40);
        for u in 0..lat.len() {
            for v in 0..lat.len() {
                if lat.meet(u, v) != u {
                    continue;
                }
                let elements = lat.interval_elements(u, v).unwrap();
                let sub = lat.interval(u, v).unwrap();
                assert_eq!(sub.len(), elements.len(), "round {round}, [{u}, {v}]");
                assert_eq!(distributivity_violation(&sub, round), None);
            }
        }
    }
}

#[test]
fn lattice_laws_hold_on_random_instances() {
    let mut rng = default_rng(53);
    for round in 0..15 {
        let lat = random_ideal_lattice(&mut rng, 6, 1 << 10);
        assert_eq!(distributivity_violation(&lat, round), None);
        assert_eq!(modular_rank_violation(&lat), None);
    }
}

#[test]
fn poset_census_matches_published_counts() {
    let labeled: Vec<usize> = (0..=4)
        .map(|n| all_labeled_posets(n).unwrap().len())
        .collect();
    assert_eq!(labeled, vec![1, 1, 3, 19, 219]);

    let unlabeled: Vec<usize> = (0..=5)
        .map(|n| all_posets_up_to_iso(n).unwrap().len())
        .collect();
    assert_eq!(unlabeled, vec![1, 1, 2, 5, 16, 63]);
}

#[test]
fn construction_rejects_malformed_cover_lists() {
    let labels = |names: &[&str]| -> Vec<String> { names.iter().map(|s| s.to_string()).collect() };

    // Duplicate cover.
    assert!(Poset::from_covers(labels(&["a", "b"]), &[(0, 1), (0, 1)]).is_err());
    // Self-cover.
    assert!(Poset::from_covers(labels(&["a"]), &[(0, 0)]).is_err());
    // Cycle.
    assert!(Poset::from_covers(labels(&["a", "b"]), &[(0, 1), (1, 0)]).is_err());
    // Transitively implied pair is not a cover.
    assert!(Poset::from_covers(labels(&["a", "b", "c"]), &[(0, 1), (1, 2), (0, 2)]).is_err());
    // Out-of-range index.
    assert!(Poset::from_covers(labels(&["a"]), &[(0, 5)]).is_err());
    // Duplicate labels.
    assert!(Poset::from_covers(labels(&["a", "a"]), &[]).is_err());
    // Too many elements.
    let too_many = Poset::default_labels(MAX_POSET_ELEMENTS + 1);
    assert!(matches!(
        Poset::antichain(too_many),
        Err(Error::TooManyIrreducibles { .. })
    ));
}

#[test]
fn enumeration_cap_is_enforced() {
    let poset = Poset::antichain(Poset::default_labels(5)).unwrap();
    match IdealLattice::from_poset_capped(&poset, 16) {
        Err(Error::SizeLimit { .. }) => {}
        other => panic!("expected a size-limit error, got {other:?}"),
    }
    // The exact cap admits the full power set.
    let lat = IdealLattice::from_poset_capped(&poset, 32).unwrap();
    assert_eq!(lat.len(), 32);
}

#[test]
fn complemented_elements_form_the_expected_boolean_core() {
    let cube = boolean_lattice(3);
    let core = cube.complemented_elements();
    assert_eq!(core.members.len(), 8);
    assert_eq!(core.atoms.len(), 3);

    // In a 3-element chain only the two ends are complemented.
    let chain = IdealLattice::from_poset(&Poset::chain(2).unwrap()).unwrap();
    let core = chain.complemented_elements();
    assert_eq!(core.members, vec![chain.bottom(), chain.top()]);
    assert_eq!(core.atoms, vec![chain.top()]);
}

#[test]
fn masks_members_and_keys_are_consistent() {
    let mut rng = default_rng(61);
    for _ in 0..8 {
        let lat = random_ideal_lattice(&mut rng, 6, 1 << 8);
        for x in 0..lat.len() {
            let mask = lat.mask(x);
            assert_eq!(lat.index_of_mask(mask), Some(x));
            let members = lat.members(x);
            let rebuilt = members.iter().fold(0u64, |m, &i| m | 1 << i);
            assert_eq!(rebuilt, mask);
            let key = lat.ideal_key(x);
            if members.is_empty() {
                assert_eq!(key, "");
            } else {
                assert_eq!(key.split(',').count(), members.len());
            }
        }
    }
}
