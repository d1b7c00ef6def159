//! Seeded random generators for posets, weights, functions, and complexes.
//! All draws go through `ChaCha8Rng`, so a seed fully determines the output.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::lattice::{IdealLattice, Lattice};
use crate::poset::Poset;
use crate::rat::{q, q_frac, Q};
use crate::tables::{is_log_supermodular, FuncTable, PairMode, WeightTable};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

pub fn default_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick(rng: &mut ChaCha8Rng, palette: &[Q]) -> Q {
    palette[rng.gen_range(0..palette.len())].clone()
}

/// Random poset on up to `max_elements` elements: random edges on a fixed
/// topological order, then transitive closure and reduction.
pub fn random_poset(rng: &mut ChaCha8Rng, max_elements: usize) -> Poset {
    let n = rng.gen_range(0..=max_elements);
    let p: f64 = rng.gen_range(0.1..0.6);
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                rel[i][j] = true;
            }
        }
    }
    // Transitive closure (edges respect i < j, so one forward sweep works).
    for k in 0..n {
        for i in 0..k {
            if rel[i][k] {
                for j in k + 1..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    Poset::from_strict_relation(Poset::default_labels(n), &rel)
        .expect("randomly generated relation is a strict order")
}

/// Random ideal lattice with at most `max_irreducibles` join-irreducibles and
/// at most `max_lattice` elements (resamples until the cap is met).
pub fn random_ideal_lattice(
    rng: &mut ChaCha8Rng,
    max_irreducibles: usize,
    max_lattice: usize,
) -> IdealLattice {
    loop {
        let poset = random_poset(rng, max_irreducibles);
        match IdealLattice::from_poset_capped(&poset, max_lattice) {
            Ok(lat) => return lat,
            Err(Error::SizeLimit { .. }) => continue,
            Err(e) => unreachable!("ideal enumeration failed unexpectedly: {e}"),
        }
    }
}

/// Multiplicative weight: one positive factor per join-irreducible,
/// `μ(x) = Π factors over the ideal`. Log-supermodular with equality, since
/// ideals satisfy (x ∧ y) ⊎ (x ∨ y) = x ⊎ y as multisets.
pub fn random_product_weight(lat: &IdealLattice, rng: &mut ChaCha8Rng) -> WeightTable {
    let palette = [q_frac(1, 2), q(1), q(2), q(3), q_frac(3, 2)];
    let factors: Vec<Q> = (0..lat.poset().len()).map(|_| pick(rng, &palette)).collect();
    let values = (0..lat.len())
        .map(|x| {
            let mut acc = q(1);
            let mut rest = lat.mask(x);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc *= &factors[j];
            }
            acc
        })
        .collect();
    WeightTable::new(values).expect("product weights are positive")
}

/// Rejection-sampled log-supermodular weight. Values are drawn from a small
/// strictly positive palette biased toward 1 (a flat palette would make the
/// acceptance probability vanish on Boolean lattices); the
/// log-supermodularity checker is the accept/reject oracle. Only offered for
/// lattices with at most 32 elements.
pub fn random_rejection_weight(
    lat: &impl Lattice,
    rng: &mut ChaCha8Rng,
    max_attempts: u64,
) -> Result<WeightTable> {
    const MAX: usize = 32;
    if lat.len() > MAX {
        return Err(Error::RejectionTooLarge {
            got: lat.len(),
            max: MAX,
        });
    }
    let palette = [q(1), q(1), q(1), q(1), q(1), q(1), q(2), q_frac(1, 2)];
    for _ in 0..max_attempts {
        let values: Vec<Q> = (0..lat.len()).map(|_| pick(rng, &palette)).collect();
        let w = WeightTable::new(values).expect("palette is positive");
        // Strictly positive values, so the distance-2 scan is a complete check.
        if is_log_supermodular(lat, &w, PairMode::Auto)? {
            return Ok(w);
        }
    }
    Err(Error::SamplerExhausted {
        attempts: max_attempts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneKind {
    Increasing,
    Decreasing,
}

/// Random monotone function: random nonnegative seeds, then cumulative
/// maxima along covers (index order is a linear extension, so one sweep in
/// the right direction suffices).
pub fn random_monotone_func(
    lat: &impl Lattice,
    rng: &mut ChaCha8Rng,
    kind: MonotoneKind,
) -> FuncTable {
    let palette = [q(0), q(1), q(1), q(2), q(3), q_frac(1, 2)];
    let mut values: Vec<Q> = (0..lat.len()).map(|_| pick(rng, &palette)).collect();
    match kind {
        MonotoneKind::Increasing => {
            for x in 0..lat.len() {
                for &y in lat.lower_covers(x) {
                    if values[y] > values[x] {
                        values[x] = values[y].clone();
                    }
                }
            }
        }
        MonotoneKind::Decreasing => {
            for x in (0..lat.len()).rev() {
                for &y in lat.upper_covers(x) {
                    if values[y] > values[x] {
                        values[x] = values[y].clone();
                    }
                }
            }
        }
    }
    FuncTable::new(values)
}

/// Unconstrained random function (may be negative); for algebraic identities
/// that need no hypotheses.
pub fn random_func(len: usize, rng: &mut ChaCha8Rng) -> FuncTable {
    let palette = [q(-2), q(-1), q(0), q(1), q(2), q_frac(1, 2), q_frac(-3, 2)];
    FuncTable::new((0..len).map(|_| pick(rng, &palette)).collect())
}

/// Random nonnegative weight values (zeros allowed); raw values for the
/// four-function sampler.
pub fn random_nonneg_values(len: usize, rng: &mut ChaCha8Rng) -> Vec<Q> {
    let palette = [q(0), q(1), q(1), q(2), q(3), q_frac(1, 2), q_frac(3, 2)];
    (0..len).map(|_| pick(rng, &palette)).collect()
}

/// Random strictly positive values.
pub fn random_positive_values(len: usize, rng: &mut ChaCha8Rng) -> Vec<Q> {
    let palette = [q(1), q(2), q(3), q_frac(1, 2), q_frac(3, 2)];
    (0..len).map(|_| pick(rng, &palette)).collect()
}

/// Random subset of `0..len` (each element kept with probability 1/2),
/// ascending.
pub fn random_subset(len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..len).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Random simplicial complex on the given vertex labels.
pub fn random_complex(
    vertices: &[String],
    rng: &mut ChaCha8Rng,
    max_facets: usize,
) -> SimplicialComplex {
    let n = vertices.len();
    let k = rng.gen_range(1..=max_facets.max(1));
    let facets: Vec<Vec<usize>> = (0..k)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::from_facets(vertices.to_vec(), &facets)
        .expect("random facets over valid labels")
}
