//! The q-weighted correlation inequality engine.
//!
//! For a weight `μ` and function `k` on a graded lattice, the rank-graded
//! expectation polynomial is `E(k; q) = Σ_x k(x)·μ(x)·q^{r(x)}`. The central
//! check: for log-supermodular `μ` and monotone `g`, `h`,
//!
//! * comonotone (same direction):  `E(g)·E(h) ≪ E(1)·E(gh)`
//! * countermonotone:              `E(1)·E(gh) ≪ E(g)·E(h)`
//!
//! where `≪` is coefficientwise dominance. The difference polynomial
//! decomposes interval by interval: with
//! `φ(x, y) = μ(x)μ(y)[g(x) − g(y)][h(x) − h(y)]` and
//! `ψ(u, v) = Σ φ(x, y)` over relative-complement pairs in `[u, v]`, the
//! degree-d coefficient of `E(1)E(gh) − E(g)E(h)` equals
//! `Σ ψ(u, v)` over comparable pairs with `r(u) + r(v) = d` — pure algebra,
//! valid for arbitrary tables. The hypotheses enter only to force each
//! `ψ(u, v) ≥ 0`.

use crate::error::Result;
use crate::lattice::{maximal_chain_counts, IdealLattice, Lattice};
use crate::poly::{dominance, DominanceReport, QPolynomial};
use crate::rat::{factorial, Q};
use crate::tables::{
    check_len, log_supermodular_violation, monotonicity, FuncTable, Monotonicity, PairMode,
    WeightTable,
};
use num::{BigInt, Signed, Zero};
use serde::Serialize;

/// `E(k; q) = Σ_x k(x)·μ(x)·q^{r(x)}`; `k = None` means `k ≡ 1`.
pub fn expectation_poly(
    lat: &impl Lattice,
    mu: &WeightTable,
    k: Option<&FuncTable>,
) -> Result<QPolynomial> {
    check_len(lat, mu.len())?;
    if let Some(f) = k {
        check_len(lat, f.len())?;
    }
    let mut poly = QPolynomial::zero();
    for x in 0..lat.len() {
        let c = match k {
            Some(f) => f.get(x) * mu.get(x),
            None => mu.get(x).clone(),
        };
        poly.add_term(&c, lat.rank(x));
    }
    Ok(poly)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

/// Which way the dominance claim points after orienting by comonotonicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `E(g)E(h) ≪ E(1)E(gh)` (comonotone case).
    Forward,
    /// `E(1)E(gh) ≪ E(g)E(h)` (countermonotone case).
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comonotonicity {
    Comonotone,
    Countermonotone,
    /// At least one function is not monotone; Forward is checked and the
    /// report is flagged.
    Unclassified,
}

impl Comonotonicity {
    pub fn classify(mg: Monotonicity, mh: Monotonicity) -> Comonotonicity {
        use Monotonicity::*;
        match (mg, mh) {
            (Neither, _) | (_, Neither) => Comonotonicity::Unclassified,
            (Constant, _) | (_, Constant) => Comonotonicity::Comonotone,
            (Increasing, Increasing) | (Decreasing, Decreasing) => Comonotonicity::Comonotone,
            (Increasing, Decreasing) | (Decreasing, Increasing) => {
                Comonotonicity::Countermonotone
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FkgReport {
    pub verdict: Verdict,
    pub direction: Direction,
    pub comonotonicity: Comonotonicity,
    pub g_monotonicity: Monotonicity,
    pub h_monotonicity: Monotonicity,
    /// Unmet hypotheses, empty when all hold. The verdict is still computed.
    pub hypothesis_issues: Vec<String>,
    pub e_one: QPolynomial,
    pub e_g: QPolynomial,
    pub e_h: QPolynomial,
    pub e_gh: QPolynomial,
    /// Oriented so that the claim is `lhs ≪ rhs`.
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub dominance: DominanceReport,
}

/// Runs the full check: hypothesis validation (flagged, never suppressing),
/// expectation polynomials, orientation, and exact dominance.
pub fn check_qfkg(
    lat: &impl Lattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
) -> Result<FkgReport> {
    let mut issues = Vec::new();
    if let Some((x, y)) = log_supermodular_violation(lat, mu, PairMode::Auto)? {
        issues.push(format!(
            "mu is not log-supermodular (witness pair {}, {})",
            lat.element_name(x),
            lat.element_name(y)
        ));
    }
    let mg = monotonicity(lat, g)?;
    let mh = monotonicity(lat, h)?;
    if mg == Monotonicity::Neither {
        issues.push("g is not monotone".into());
    }
    if mh == Monotonicity::Neither {
        issues.push("h is not monotone".into());
    }
    let comonotonicity = Comonotonicity::classify(mg, mh);
    let direction = match comonotonicity {
        Comonotonicity::Countermonotone => Direction::Reversed,
        _ => Direction::Forward,
    };

    let e_one = expectation_poly(lat, mu, None)?;
    let e_g = expectation_poly(lat, mu, Some(g))?;
    let e_h = expectation_poly(lat, mu, Some(h))?;
    let e_gh = expectation_poly(lat, mu, Some(&g.pointwise_mul(h)?))?;

    let prod_gh = &e_g * &e_h;
    let prod_one_gh = &e_one * &e_gh;
    let (lhs, rhs) = match direction {
        Direction::Forward => (prod_gh, prod_one_gh),
        Direction::Reversed => (prod_one_gh, prod_gh),
    };
    let dom = dominance(&lhs, &rhs);
    Ok(FkgReport {
        verdict: if dom.holds { Verdict::Holds } else { Verdict::Fails },
        direction,
        comonotonicity,
        g_monotonicity: mg,
        h_monotonicity: mh,
        hypothesis_issues: issues,
        e_one,
        e_g,
        e_h,
        e_gh,
        lhs,
        rhs,
        dominance: dom,
    })
}


/// `φ(x, y) = μ(x)μ(y)·[g(x) − g(y)]·[h(x) − h(y)]`.
pub fn phi(mu: &WeightTable, g: &FuncTable, h: &FuncTable, x: usize, y: usize) -> Q {
    mu.get(x) * mu.get(y) * (g.get(x) - g.get(y)) * (h.get(x) - h.get(y))
}

/// `ψ(u, v) = Σ φ(x, y)` over relative-complement pairs of `[u, v]`.
/// The pair {u, v} itself contributes; diagonal pairs contribute 0.
pub fn psi(
    lat: &IdealLattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
    u: usize,
    v: usize,
) -> Result<Q> {
    check_len(lat, mu.len())?;
    check_len(lat, g.len())?;
    check_len(lat, h.len())?;
    let mut acc = Q::zero();
    for (x, y) in lat.relative_complements(u, v)? {
        acc += phi(mu, g, h, x, y);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct PsiEntry {
    pub u: usize,
    pub v: usize,
    #[serde(with = "crate::rat::qstr")]
    pub value: Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsiReport {
    pub verdict: Verdict,
    pub direction: Direction,
    /// ψ over every comparable pair u ≤ v, in index order.
    pub entries: Vec<PsiEntry>,
    #[serde(with = "crate::rat::qstr")]
    pub min_value: Q,
    #[serde(with = "crate::rat::qstr")]
    pub max_value: Q,
    /// `E(1)E(gh) − E(g)E(h)`, computed by polynomial products.
    pub phi_poly: QPolynomial,
    /// Whether `Σ_{r(u)+r(v)=d} ψ(u, v)` reproduces `phi_poly` exactly —
    /// an algebraic identity that must hold for arbitrary tables.
    pub aggregation_exact: bool,
}

/// Evaluates ψ on every interval and checks both the sign claim (each ψ has
/// the sign the hypotheses predict) and the exact degree-wise aggregation
/// identity against the independently multiplied polynomials.
pub fn check_psi_decomposition(
    lat: &IdealLattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
) -> Result<PsiReport> {
    let mg = monotonicity(lat, g)?;
    let mh = monotonicity(lat, h)?;
    let direction = match Comonotonicity::classify(mg, mh) {
        Comonotonicity::Countermonotone => Direction::Reversed,
        _ => Direction::Forward,
    };

    let e_one = expectation_poly(lat, mu, None)?;
    let e_g = expectation_poly(lat, mu, Some(g))?;
    let e_h = expectation_poly(lat, mu, Some(h))?;
    let e_gh = expectation_poly(lat, mu, Some(&g.pointwise_mul(h)?))?;
    let phi_poly = &(&e_one * &e_gh) - &(&e_g * &e_h);

    let mut entries = Vec::new();
    let mut by_degree = vec![Q::zero(); 2 * lat.height() + 1];
    for u in 0..lat.len() {
        for v in u..lat.len() {
            if !lat.le(u, v) {
                continue;
            }
            let value = psi(lat, mu, g, h, u, v)?;
            by_degree[lat.rank(u) + lat.rank(v)] += &value;
            entries.push(PsiEntry { u, v, value });
        }
    }

    let aggregation_exact = QPolynomial::from_coeffs(by_degree) == phi_poly;
    let min_value = entries
        .iter()
        .map(|e| &e.value)
        .min()
        .cloned()
        .unwrap_or_else(Q::zero);
    let max_value = entries
        .iter()
        .map(|e| &e.value)
        .max()
        .cloned()
        .unwrap_or_else(Q::zero);
    let sign_ok = match direction {
        Direction::Forward => !min_value.is_negative(),
        Direction::Reversed => !max_value.is_positive(),
    };
    Ok(PsiReport {
        verdict: if sign_ok && aggregation_exact {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        direction,
        entries,
        min_value,
        max_value,
        phi_poly,
        aggregation_exact,
    })
}

/// The chain-counting weight `m(x)^t / (r(x)!)^s`, log-supermodular for
/// integer `0 ≤ s ≤ t`.
pub fn fishburn_weight(lat: &impl Lattice, s: u32, t: u32) -> Result<WeightTable> {
    if s > t {
        return Err(crate::error::Error::BadExponents {
            s: s as i64,
            t: t as i64,
        });
    }
    let chains = maximal_chain_counts(lat);
    let values = (0..lat.len())
        .map(|x| {
            let num = num::pow::pow(chains[x].clone(), t as usize);
            let den = num::pow::pow(factorial(lat.rank(x) as u64), s as usize);
            Q::new(num, den)
        })
        .collect();
    WeightTable::new(values)
}

/// The generalized check: ordinary q-FKG with effective weight
/// `μ(x)·m(x)^t/(r(x)!)^s`.
pub fn check_qfkg_fishburn(
    lat: &impl Lattice,
    mu: &WeightTable,
    s: u32,
    t: u32,
    g: &FuncTable,
    h: &FuncTable,
) -> Result<FkgReport> {
    let effective = mu.pointwise_mul(&fishburn_weight(lat, s, t)?)?;
    check_qfkg(lat, &effective, g, h)
}

/// Sum polynomial `Σ_{x ∈ set} w(x)·q^{r(x)}` over raw values (used by the
/// four-function search, where the four tables are not WeightTables).
pub fn set_sum_poly(lat: &impl Lattice, w: &[Q], set: &[usize]) -> QPolynomial {
    let mut poly = QPolynomial::zero();
    for &x in set {
        poly.add_term(&w[x], lat.rank(x));
    }
    poly
}

/// Factorial of an element's rank as an exact integer.
pub fn rank_factorial(lat: &impl Lattice, x: usize) -> BigInt {
    factorial(lat.rank(x) as u64)
}
