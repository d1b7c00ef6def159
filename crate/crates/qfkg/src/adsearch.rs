//! Randomized search for a counterexample to the graded four-function
//! inequality.
//!
//! A quadruple `α, β, γ, δ : L → ℝ⁺` is *feasible* when
//! `α(x)·β(y) ≤ γ(x∨y)·δ(x∧y)` for every ordered pair `(x, y)`. The classical
//! four-function theorem then gives, for arbitrary subsets `A, B ⊆ L`,
//!
//! ```text
//! α(A)·β(B) ≤ γ(A∨B)·δ(A∧B),      f(S) = Σ_{x∈S} f(x),
//! ```
//!
//! with `A∨B = {x∨y : x∈A, y∈B}` and `A∧B` likewise. The graded refinement
//! asks whether `α(A;q)·β(B;q) ≪ γ(A∨B;q)·δ(A∧B;q)` holds coefficientwise,
//! where `f(S;q) = Σ_{x∈S} f(x)·q^{r(x)}`. That refinement is open; this
//! module samples feasible quadruples and subset pairs looking for a
//! violation. The ungraded inequality is asserted on every sample as a
//! self-check — a failure there is a bug, not a discovery.

use crate::error::Result;
use crate::fkg::set_sum_poly;
use crate::gen::{default_rng, random_nonneg_values, random_positive_values, random_subset};
use crate::lattice::{IdealLattice, Lattice};
use crate::poly::{dominance, QPolynomial};
use crate::rat::{format_q, Q};
use num::Zero;
use rand::Rng;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Serialize)]
pub struct FourFunctionConfig {
    /// Number of sampled (lattice, quadruple, subset pair) trials.
    pub samples: u64,
    pub seed: u64,
    /// When set, γ is not sampled but repaired upward to the smallest table
    /// making the quadruple feasible; every trial then tests the conclusion.
    /// When unset, γ is sampled like the others and infeasible draws are
    /// discarded (most draws are).
    pub repair: bool,
}

impl Default for FourFunctionConfig {
    fn default() -> Self {
        FourFunctionConfig {
            samples: 10_000,
            seed: 0,
            repair: true,
        }
    }
}

/// First ordered pair violating `α(x)β(y) ≤ γ(x∨y)δ(x∧y)`, if any.
pub fn hypothesis_violation(
    lat: &impl Lattice,
    alpha: &[Q],
    beta: &[Q],
    gamma: &[Q],
    delta: &[Q],
) -> Option<(usize, usize)> {
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            let lhs = &alpha[x] * &beta[y];
            let rhs = &gamma[lat.join(x, y)] * &delta[lat.meet(x, y)];
            if lhs > rhs {
                return Some((x, y));
            }
        }
    }
    None
}

/// Smallest γ making `(α, β, γ, δ)` feasible:
/// `γ(z) = max { α(x)β(y)/δ(x∧y) : x∨y = z }`. The pair `(z, z)` always
/// contributes, so every value is defined. Requires δ strictly positive.
pub fn repair_gamma(lat: &impl Lattice, alpha: &[Q], beta: &[Q], delta: &[Q]) -> Vec<Q> {
    let mut gamma = vec![Q::zero(); lat.len()];
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            let z = lat.join(x, y);
            let need = &alpha[x] * &beta[y] / &delta[lat.meet(x, y)];
            if need > gamma[z] {
                gamma[z] = need;
            }
        }
    }
    gamma
}

#[derive(Debug, Clone, Serialize)]
pub struct FourFunctionViolation {
    /// Labels of the underlying poset of join-irreducibles.
    pub poset_labels: Vec<String>,
    /// Cover pairs `(lower, upper)` as indices into `poset_labels`.
    pub poset_covers: Vec<(usize, usize)>,
    /// Lattice element names, in lattice index order.
    pub elements: Vec<String>,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub gamma: Vec<String>,
    pub delta: Vec<String>,
    pub set_a: Vec<String>,
    pub set_b: Vec<String>,
    pub join_set: Vec<String>,
    pub meet_set: Vec<String>,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    /// Degrees where the coefficient of `rhs − lhs` is negative.
    pub failing_degrees: Vec<usize>,
}

impl fmt::Display for FourFunctionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "==== GRADED FOUR-FUNCTION INEQUALITY: COUNTEREXAMPLE ====")?;
        writeln!(f, "poset labels: {:?}", self.poset_labels)?;
        writeln!(f, "poset covers: {:?}", self.poset_covers)?;
        let table = |name: &str, vals: &[String]| {
            let rows: Vec<String> = self
                .elements
                .iter()
                .zip(vals)
                .map(|(e, v)| format!("{e}={v}"))
                .collect();
            format!("{name}: {}", rows.join(", "))
        };
        writeln!(f, "{}", table("alpha", &self.alpha))?;
        writeln!(f, "{}", table("beta ", &self.beta))?;
        writeln!(f, "{}", table("gamma", &self.gamma))?;
        writeln!(f, "{}", table("delta", &self.delta))?;
        writeln!(f, "A      = {{{}}}", self.set_a.join(", "))?;
        writeln!(f, "B      = {{{}}}", self.set_b.join(", "))?;
        writeln!(f, "A join B = {{{}}}", self.join_set.join(", "))?;
        writeln!(f, "A meet B = {{{}}}", self.meet_set.join(", "))?;
        writeln!(f, "lhs  alpha(A;q)*beta(B;q)  = {}", self.lhs)?;
        writeln!(f, "rhs  gamma(A∨B;q)*delta(A∧B;q) = {}", self.rhs)?;
        writeln!(f, "coefficient dominance fails in degrees {:?}", self.failing_degrees)?;
        write!(f, "=========================================================")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub examined: u64,
    /// Trials whose quadruple satisfied the pairwise hypothesis.
    pub feasible: u64,
    pub violation: Option<FourFunctionViolation>,
}

fn element_names(lat: &IdealLattice, set: &[usize]) -> Vec<String> {
    set.iter().map(|&x| lat.element_name(x)).collect()
}

fn format_table(vals: &[Q]) -> Vec<String> {
    vals.iter().map(format_q).collect()
}

/// Pairwise joins of `A × B` as a deduplicated ascending set.
fn pairwise_joins(lat: &impl Lattice, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; lat.len()];
    for &x in a {
        for &y in b {
            seen[lat.join(x, y)] = true;
        }
    }
    (0..lat.len()).filter(|&z| seen[z]).collect()
}

fn pairwise_meets(lat: &impl Lattice, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; lat.len()];
    for &x in a {
        for &y in b {
            seen[lat.meet(x, y)] = true;
        }
    }
    (0..lat.len()).filter(|&z| seen[z]).collect()
}

/// Run the randomized search over the given lattice pool. Stops at the first
/// violation. Panics if the ungraded (scalar) inequality ever fails on a
/// feasible sample, since that would contradict the four-function theorem.
pub fn search_four_function(
    pool: &[IdealLattice],
    cfg: &FourFunctionConfig,
) -> Result<SearchOutcome> {
    assert!(!pool.is_empty(), "lattice pool must be non-empty");
    let mut rng = default_rng(cfg.seed);
    let mut feasible = 0u64;
    for trial in 0..cfg.samples {
        let lat = &pool[rng.gen_range(0..pool.len())];
        let n = lat.len();
        let alpha = random_nonneg_values(n, &mut rng);
        let beta = random_nonneg_values(n, &mut rng);
        let delta = random_positive_values(n, &mut rng);
        let gamma = if cfg.repair {
            repair_gamma(lat, &alpha, &beta, &delta)
        } else {
            random_nonneg_values(n, &mut rng)
        };
        if hypothesis_violation(lat, &alpha, &beta, &gamma, &delta).is_some() {
            continue;
        }
        feasible += 1;

        // Mostly random subsets; occasionally the full ground set, which is
        // the sharpest case (A∨B and A∧B collapse the least).
        let a = if rng.gen_range(0..8) == 0 {
            (0..n).collect()
        } else {
            random_subset(n, &mut rng)
        };
        let b = if rng.gen_range(0..8) == 0 {
            (0..n).collect()
        } else {
            random_subset(n, &mut rng)
        };
        let joins = pairwise_joins(lat, &a, &b);
        let meets = pairwise_meets(lat, &a, &b);

        let lhs = &set_sum_poly(lat, &alpha, &a) * &set_sum_poly(lat, &beta, &b);
        let rhs = &set_sum_poly(lat, &gamma, &joins) * &set_sum_poly(lat, &delta, &meets);
        assert!(
            lhs.eval_one() <= rhs.eval_one(),
            "scalar four-function inequality failed on a feasible sample (bug)"
        );

        let report = dominance(&lhs, &rhs);
        if !report.holds {
            let violation = FourFunctionViolation {
                poset_labels: lat.poset().labels().to_vec(),
                poset_covers: lat.poset().covers().to_vec(),
                elements: (0..n).map(|x| lat.element_name(x)).collect(),
                alpha: format_table(&alpha),
                beta: format_table(&beta),
                gamma: format_table(&gamma),
                delta: format_table(&delta),
                set_a: element_names(lat, &a),
                set_b: element_names(lat, &b),
                join_set: element_names(lat, &joins),
                meet_set: element_names(lat, &meets),
                failing_degrees: report.violations.iter().map(|v| v.degree).collect(),
                lhs,
                rhs,
            };
            return Ok(SearchOutcome {
                examined: trial + 1,
                feasible,
                violation: Some(violation),
            });
        }
    }
    Ok(SearchOutcome {
        examined: cfg.samples,
        feasible,
        violation: None,
    })
}
