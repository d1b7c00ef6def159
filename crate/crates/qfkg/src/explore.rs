//! Floating-point exploration of the chain-weight family with *real*
//! exponents.
//!
//! The exact rational engine restricts the chain-weight exponents to integers
//! `0 ≤ s ≤ t` so that every verification stays in ℚ. The scaled weight
//! `μ(x)·m(x)^t / (rank(x)!)^s` makes sense for arbitrary real `s ≤ t`,
//! though, and this module lets you probe that regime in `f64` arithmetic
//! with a fixed tolerance. Nothing here participates in any theorem
//! verification: a float "holds" is a hint, never a proof, and a float
//! "fails" within tolerance noise is not a counterexample.

use crate::lattice::{maximal_chain_counts, Lattice};
use crate::tables::{FuncTable, WeightTable};
use num::ToPrimitive;
use serde::Serialize;

/// Slack allowed before a coefficient deficit counts as a violation.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// `μ(x) · m(x)^t / (rank(x)!)^s` in log space (stable for large chain
/// counts), exponentiated at the end. Requires μ ≥ 0; zero weights map to 0.
pub fn float_fishburn_weight(lat: &impl Lattice, mu: &WeightTable, s: f64, t: f64) -> Vec<f64> {
    let chains = maximal_chain_counts(lat);
    (0..lat.len())
        .map(|x| {
            let m = chains[x].to_f64().unwrap_or(f64::INFINITY);
            let mu_x = mu.get(x).to_f64().unwrap_or(f64::INFINITY);
            if mu_x == 0.0 {
                return 0.0;
            }
            let mut log = mu_x.ln() + t * m.ln();
            for r in 1..=lat.rank(x) {
                log -= s * (r as f64).ln();
            }
            log.exp()
        })
        .collect()
}

/// Rank-graded expectation coefficients `Σ_{rank(x)=d} k(x)·w(x)`.
pub fn float_expectation(lat: &impl Lattice, w: &[f64], k: Option<&FuncTable>) -> Vec<f64> {
    let mut coeffs = vec![0.0; lat.height() + 1];
    for x in 0..lat.len() {
        let kx = match k {
            Some(f) => f.get(x).to_f64().unwrap_or(f64::INFINITY),
            None => 1.0,
        };
        coeffs[lat.rank(x)] += kx * w[x];
    }
    coeffs
}

#[derive(Debug, Clone, Serialize)]
pub struct FloatReport {
    pub s: f64,
    pub t: f64,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    /// Largest `lhs[d] − rhs[d]` (positive = dominance deficit).
    pub worst_deficit: f64,
    pub worst_degree: Option<usize>,
    /// Deficit stayed within [`FLOAT_TOLERANCE`] at every degree.
    pub holds_numerically: bool,
}

/// Probe `E(g)E(h) ≪ E(1)E(gh)` under the real-exponent scaled weight.
/// Comparison is coefficientwise with [`FLOAT_TOLERANCE`] slack; exploration
/// only.
pub fn float_qfkg_fishburn(
    lat: &impl Lattice,
    mu: &WeightTable,
    s: f64,
    t: f64,
    g: &FuncTable,
    h: &FuncTable,
) -> FloatReport {
    let w = float_fishburn_weight(lat, mu, s, t);
    let gh = g.pointwise_mul(h).expect("tables share the lattice length");
    let e_one = float_expectation(lat, &w, None);
    let e_g = float_expectation(lat, &w, Some(g));
    let e_h = float_expectation(lat, &w, Some(h));
    let e_gh = float_expectation(lat, &w, Some(&gh));
    let lhs = convolve(&e_g, &e_h);
    let rhs = convolve(&e_one, &e_gh);
    let mut worst_deficit = f64::NEG_INFINITY;
    let mut worst_degree = None;
    for d in 0..lhs.len() {
        let deficit = lhs[d] - rhs[d];
        if deficit > worst_deficit {
            worst_deficit = deficit;
            worst_degree = Some(d);
        }
    }
    FloatReport {
        s,
        t,
        lhs,
        rhs,
        worst_deficit,
        worst_degree,
        holds_numerically: worst_deficit <= FLOAT_TOLERANCE,
    }
}

fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
