//! Weighted tableau series on the lattice of partitions under containment.
//!
//! For a weight μ, parameters 0 ≤ s ≤ t, and a function k on partitions, the
//! series of interest is
//!
//! ```text
//! F(k; z) = Σ_λ k(λ)·μ(λ)·f_λ^t · z^|λ| / (|λ|!)^s,
//! ```
//!
//! where f_λ counts standard tableaux of shape λ. With μ log-supermodular
//! and g, h comonotone, `F(g;z)·F(h;z) ≪ F(1;z)·F(gh;z)` coefficientwise
//! (reversed for countermonotone). Degree-D coefficients only involve
//! partitions of size ≤ D, so every check here is a finite exact
//! computation on a truncation; hypotheses are likewise certified on the
//! materialized part (the D×D box for weights, sizes ≤ D for monotonicity).

use crate::error::{Error, Result};
use crate::fkg::{Comonotonicity, Direction, Verdict};
use crate::partition::{partitions_in_box, partitions_of, Partition};
use crate::poly::{series_dominance, DominanceReport, QPolynomial, QSeries};
use crate::rat::{factorial, q, q_pow, qstr, Q};
use crate::tables::{Monotonicity, PairMode};
use num::{BigInt, One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Truncation cap for series checks.
pub const MAX_SERIES_DEGREE: usize = 14;
/// Box side cap for weight certification scans.
pub const MAX_BOX_SIDE: usize = 8;
/// All-pairs log-supermodularity cross-check is run only below this element
/// count (the d = 8 box has 12870 elements; quadratic pair scans stop paying
/// past a few thousand).
const ALL_PAIRS_LIMIT: usize = 3500;

/// Closed vocabulary of weights/functions on partitions. Everything here has
/// checkable monotonicity / log-supermodularity, which arbitrary code would
/// not; explicit tables cover the general case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum YoungEval {
    Const(Q),
    /// |λ|
    Size,
    /// λ_1
    FirstPart,
    /// number of parts
    NumParts,
    /// c − |λ| (decreasing; the usual way to get a nonnegative decreasing
    /// function on a truncation is c ≥ D + 1)
    CapMinusSize(Q),
    /// θ^|λ| — log-supermodular for any θ > 0 since |λ| is modular
    ThetaPowSize(Q),
    /// f_λ^p, exact rational for negative p as well (f_λ ≥ 1)
    FPower(i32),
    /// f_λ^t / (|λ|!)^s
    HookWeight { s: u32, t: u32 },
    /// explicit values; evaluation outside the table is an error
    Table(BTreeMap<Partition, Q>),
}

impl YoungEval {
    pub fn eval(&self, lam: &Partition) -> Result<Q> {
        Ok(match self {
            YoungEval::Const(c) => c.clone(),
            YoungEval::Size => q(lam.size() as i64),
            YoungEval::FirstPart => q(lam.first_part() as i64),
            YoungEval::NumParts => q(lam.len() as i64),
            YoungEval::CapMinusSize(c) => c - q(lam.size() as i64),
            YoungEval::ThetaPowSize(theta) => q_pow(theta, lam.size() as i32)?,
            YoungEval::FPower(p) => {
                let f = Q::from_integer(lam.tableaux_count());
                q_pow(&f, *p)?
            }
            YoungEval::HookWeight { s, t } => {
                let f = lam.tableaux_count();
                Q::new(
                    num::pow::pow(f, *t as usize),
                    num::pow::pow(factorial(lam.size()), *s as usize),
                )
            }
            YoungEval::Table(map) => map
                .get(lam)
                .cloned()
                .ok_or_else(|| Error::NotAnElement(lam.to_string()))?,
        })
    }

    /// Parse a descriptor: `1`, `3/2`, `const:3/2`, `size`, `first_part`,
    /// `num_parts`, `cap_minus_size:9`, `theta:1/2`, `f_power:-1`,
    /// `hook:1,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let (head, arg) = match t.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (t, None),
        };
        let need =
            || arg.ok_or_else(|| Error::Parse(format!("descriptor {head:?} needs an argument")));
        let none = |a: Option<&str>, v: YoungEval| match a {
            Some(_) => Err(Error::Parse(format!(
                "descriptor {head:?} takes no argument"
            ))),
            None => Ok(v),
        };
        match head {
            "size" => none(arg, YoungEval::Size),
            "first_part" | "first-part" => none(arg, YoungEval::FirstPart),
            "num_parts" | "parts" => none(arg, YoungEval::NumParts),
            "const" => Ok(YoungEval::Const(crate::rat::parse_q(need()?)?)),
            "cap_minus_size" | "cap-minus-size" => {
                Ok(YoungEval::CapMinusSize(crate::rat::parse_q(need()?)?))
            }
            "theta" => {
                let th = crate::rat::parse_q(need()?)?;
                if !th.is_positive() {
                    return Err(Error::Parse("theta must be positive".into()));
                }
                Ok(YoungEval::ThetaPowSize(th))
            }
            "f_power" | "f-power" => {
                let p: i32 = need()?
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {:?}", arg.unwrap())))?;
                Ok(YoungEval::FPower(p))
            }
            "hook" => {
                let a = need()?;
                let (s, t) = a
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("hook descriptor needs s,t".into()))?;
                let s: u32 = s.trim().parse().map_err(|_| {
                    Error::Parse(format!("bad hook exponent {:?}", s.trim()))
                })?;
                let t: u32 = t.trim().parse().map_err(|_| {
                    Error::Parse(format!("bad hook exponent {:?}", t.trim()))
                })?;
                Ok(YoungEval::HookWeight { s, t })
            }
            _ if arg.is_none() => Ok(YoungEval::Const(crate::rat::parse_q(t)?)),
            _ => Err(Error::Parse(format!("unknown descriptor {head:?}"))),
        }
    }
}

impl fmt::Display for YoungEval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YoungEval::Const(c) => write!(f, "const:{}", crate::rat::format_q(c)),
            YoungEval::Size => write!(f, "size"),
            YoungEval::FirstPart => write!(f, "first_part"),
            YoungEval::NumParts => write!(f, "num_parts"),
            YoungEval::CapMinusSize(c) => {
                write!(f, "cap_minus_size:{}", crate::rat::format_q(c))
            }
            YoungEval::ThetaPowSize(t) => write!(f, "theta:{}", crate::rat::format_q(t)),
            YoungEval::FPower(p) => write!(f, "f_power:{p}"),
            YoungEval::HookWeight { s, t } => write!(f, "hook:{s},{t}"),
            YoungEval::Table(m) => write!(f, "table[{} entries]", m.len()),
        }
    }
}

/// Classify a descriptor by scanning every cover `λ ⋖ σ` with |σ| ≤ max_size.
pub fn young_monotonicity(desc: &YoungEval, max_size: u64) -> Result<Monotonicity> {
    let mut can_increase = true;
    let mut can_decrease = true;
    for n in 0..max_size {
        for lam in partitions_of(n) {
            let lo = desc.eval(&lam)?;
            for sig in lam.covers_up() {
                let hi = desc.eval(&sig)?;
                if lo > hi {
                    can_increase = false;
                }
                if lo < hi {
                    can_decrease = false;
                }
            }
        }
    }
    Ok(match (can_increase, can_decrease) {
        (true, true) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (false, false) => Monotonicity::Neither,
    })
}

fn addable_in_box(lam: &Partition, rows: usize, cols: u32) -> Vec<usize> {
    lam.addable_cells()
        .into_iter()
        .filter(|&(i, _)| i < rows && lam.part(i) < cols)
        .map(|(i, _)| i)
        .collect()
}

/// First violation of `μ(λ)μ(σ) ≤ μ(λ∧σ)μ(λ∨σ)` on the rows×cols box, or
/// None. Semantics of `mode` match the lattice-table checker: the distance-2
/// scan (pairs adding two different cells to a common shape) is complete
/// only for strictly positive weights; `Auto` picks it exactly then.
pub fn young_log_supermodular_violation(
    desc: &YoungEval,
    rows: usize,
    cols: u32,
    mode: PairMode,
) -> Result<Option<(Partition, Partition)>> {
    let elems = partitions_in_box(rows, cols);
    let vals: Vec<Q> = elems
        .iter()
        .map(|lam| desc.eval(lam))
        .collect::<Result<Vec<_>>>()?;
    for (lam, v) in elems.iter().zip(&vals) {
        if v.is_negative() {
            return Err(Error::NegativeWeight {
                element: lam.to_string(),
                value: crate::rat::format_q(v),
            });
        }
    }
    let index: HashMap<&Partition, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let strictly_positive = vals.iter().all(|v| v.is_positive());
    let distance_two = match mode {
        PairMode::Auto => strictly_positive,
        PairMode::AllPairs => false,
        PairMode::DistanceTwo => true,
    };
    if distance_two {
        for (nu_i, nu) in elems.iter().enumerate() {
            let addable = addable_in_box(nu, rows, cols);
            for (a, &r1) in addable.iter().enumerate() {
                for &r2 in &addable[a + 1..] {
                    let lam = nu.with_cell_added(r1);
                    let sig = nu.with_cell_added(r2);
                    let top = lam.join(&sig);
                    let lhs = &vals[index[&lam]] * &vals[index[&sig]];
                    let rhs = &vals[nu_i] * &vals[index[&top]];
                    if lhs > rhs {
                        return Ok(Some((lam, sig)));
                    }
                }
            }
        }
    } else {
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let meet = elems[i].meet(&elems[j]);
                let join = elems[i].join(&elems[j]);
                let lhs = &vals[i] * &vals[j];
                let rhs = &vals[index[&meet]] * &vals[index[&join]];
                if lhs > rhs {
                    return Ok(Some((elems[i].clone(), elems[j].clone())));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct TableauWeightReport {
    pub holds: bool,
    pub element_count: usize,
    /// Whether the quadratic all-pairs scan also ran (smaller boxes only);
    /// when it did, the two modes were asserted to agree.
    pub all_pairs_checked: bool,
    pub witness: Option<(String, String)>,
}

/// Certify log-supermodularity of `λ ↦ f_λ^t/(|λ|!)^s` on the d×d box using
/// the local distance-2 scan, cross-checked against the all-pairs definition
/// where the box is small enough for that to be feasible.
pub fn tableau_weight_check(s: u32, t: u32, d: usize) -> Result<TableauWeightReport> {
    if s > t {
        return Err(Error::BadExponents {
            s: s as i64,
            t: t as i64,
        });
    }
    if d > MAX_BOX_SIDE {
        return Err(Error::BruteForceCap(format!(
            "box side capped at {MAX_BOX_SIDE}, got {d}"
        )));
    }
    let desc = YoungEval::HookWeight { s, t };
    let local = young_log_supermodular_violation(&desc, d, d as u32, PairMode::DistanceTwo)?;
    let element_count = partitions_in_box(d, d as u32).len();
    let all_pairs_checked = element_count <= ALL_PAIRS_LIMIT;
    if all_pairs_checked {
        let global = young_log_supermodular_violation(&desc, d, d as u32, PairMode::AllPairs)?;
        assert_eq!(
            local.is_none(),
            global.is_none(),
            "distance-2 and all-pairs checks must agree for a strictly positive weight"
        );
    }
    Ok(TableauWeightReport {
        holds: local.is_none(),
        element_count,
        all_pairs_checked,
        witness: local.map(|(a, b)| (a.to_string(), b.to_string())),
    })
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > MAX_SERIES_DEGREE {
        return Err(Error::BruteForceCap(format!(
            "series degree capped at {MAX_SERIES_DEGREE}, got {degree}"
        )));
    }
    Ok(())
}

/// Exact truncation of `F(k;z)`: coefficient of z^n is
/// `Σ_{λ⊢n} k(λ)·μ(λ)·f_λ^t/(n!)^s`.
pub fn tableau_series(
    mu: &YoungEval,
    k: &YoungEval,
    s: u32,
    t: u32,
    degree: usize,
) -> Result<QSeries> {
    check_degree(degree)?;
    series_by(degree, |lam| {
        Ok(k.eval(lam)? * mu.eval(lam)? * hook_factor(lam, s, t))
    })
}

fn hook_factor(lam: &Partition, s: u32, t: u32) -> Q {
    Q::new(
        num::pow::pow(lam.tableaux_count(), t as usize),
        num::pow::pow(factorial(lam.size()), s as usize),
    )
}

fn series_by(degree: usize, mut term: impl FnMut(&Partition) -> Result<Q>) -> Result<QSeries> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    for n in 0..=degree as u64 {
        let mut acc = Q::zero();
        for lam in partitions_of(n) {
            acc += term(&lam)?;
        }
        coeffs.push(acc);
    }
    Ok(QSeries::from_fn(degree, |n| coeffs[n].clone()))
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesDominanceReport {
    pub verdict: Verdict,
    pub direction: Direction,
    pub comonotonicity: Comonotonicity,
    pub g_monotonicity: Monotonicity,
    pub h_monotonicity: Monotonicity,
    /// Hypothesis problems found on the materialized truncation. The
    /// dominance check still runs; a verdict with issues present is evidence
    /// about weakened hypotheses, not about the theorem.
    pub hypothesis_issues: Vec<String>,
    pub f_one: QSeries,
    pub f_g: QSeries,
    pub f_h: QSeries,
    pub f_gh: QSeries,
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub dominance: DominanceReport,
}

/// Verify `F(g;z)·F(h;z) ≪ F(1;z)·F(gh;z)` (reversed for countermonotone
/// g, h) to the given degree. Monotonicity is certified on all partitions of
/// size ≤ degree; log-supermodularity of μ on the degree×degree box.
pub fn tableau_series_dominance(
    mu: &YoungEval,
    g: &YoungEval,
    h: &YoungEval,
    s: u32,
    t: u32,
    degree: usize,
) -> Result<SeriesDominanceReport> {
    check_degree(degree)?;
    if s > t {
        return Err(Error::BadExponents {
            s: s as i64,
            t: t as i64,
        });
    }
    let mut issues = Vec::new();
    let box_side = degree.min(MAX_BOX_SIDE);
    match young_log_supermodular_violation(mu, box_side, box_side as u32, PairMode::Auto) {
        Ok(Some((a, b))) => issues.push(format!(
            "mu is not log-supermodular (witness pair {a} , {b})"
        )),
        Ok(None) => {}
        Err(e) => issues.push(format!("mu could not be certified: {e}")),
    }
    let g_mono = young_monotonicity(g, degree as u64)?;
    let h_mono = young_monotonicity(h, degree as u64)?;
    if g_mono == Monotonicity::Neither {
        issues.push("g is not monotone".into());
    }
    if h_mono == Monotonicity::Neither {
        issues.push("h is not monotone".into());
    }
    let comono = Comonotonicity::classify(g_mono, h_mono);
    let direction = match comono {
        Comonotonicity::Countermonotone => Direction::Reversed,
        _ => Direction::Forward,
    };

    let f_one = series_by(degree, |lam| Ok(mu.eval(lam)? * hook_factor(lam, s, t)))?;
    let f_g = series_by(degree, |lam| {
        Ok(g.eval(lam)? * mu.eval(lam)? * hook_factor(lam, s, t))
    })?;
    let f_h = series_by(degree, |lam| {
        Ok(h.eval(lam)? * mu.eval(lam)? * hook_factor(lam, s, t))
    })?;
    let f_gh = series_by(degree, |lam| {
        Ok(g.eval(lam)? * h.eval(lam)? * mu.eval(lam)? * hook_factor(lam, s, t))
    })?;

    let (lhs, rhs) = match direction {
        Direction::Forward => (f_g.mul(&f_h)?, f_one.mul(&f_gh)?),
        Direction::Reversed => (f_one.mul(&f_gh)?, f_g.mul(&f_h)?),
    };
    let dominance = series_dominance(&lhs, &rhs)?;
    Ok(SeriesDominanceReport {
        verdict: if dominance.holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        direction,
        comonotonicity: comono,
        g_monotonicity: g_mono,
        h_monotonicity: h_mono,
        hypothesis_issues: issues,
        f_one,
        f_g,
        f_h,
        f_gh,
        lhs,
        rhs,
        dominance,
    })
}

/// `θ^|λ|·f_λ²/(|λ|!)²` — the poissonized Plancherel mass of λ up to the
/// global `e^{−θ}` factor, which is carried symbolically since it scales
/// both sides of every inequality equally.
pub fn plancherel_weight(theta: &Q, lam: &Partition) -> Result<Q> {
    if !theta.is_positive() {
        return Err(Error::Parse("theta must be positive".into()));
    }
    Ok(q_pow(theta, lam.size() as i32)? * hook_factor(lam, 2, 2))
}

#[derive(Debug, Clone, Serialize)]
pub struct PlancherelReport {
    pub series: SeriesDominanceReport,
    /// z = 1 evaluation of the truncated series product — a finite-sum proxy
    /// for the correlation inequality of the full measure.
    #[serde(with = "qstr")]
    pub scalar_lhs: Q,
    #[serde(with = "qstr")]
    pub scalar_rhs: Q,
    pub scalar_holds: bool,
    pub truncated: bool,
    /// The transcendental factor common to both sides, never evaluated.
    pub symbolic_factor: String,
}

/// Correlation inequality for the poissonized Plancherel family:
/// `P(g;z)·P(h;z) ≪ P(1;z)·P(gh;z)` with `P(k;z) = Σ k(λ)π_θ(λ)z^|λ|`.
/// Equivalent to the tableau-series dominance with μ = θ^|λ| and s = t = 2,
/// after cancelling e^{−2θ} from both sides.
pub fn plancherel_dominance(
    theta: &Q,
    g: &YoungEval,
    h: &YoungEval,
    degree: usize,
) -> Result<PlancherelReport> {
    if !theta.is_positive() {
        return Err(Error::Parse("theta must be positive".into()));
    }
    let series = tableau_series_dominance(
        &YoungEval::ThetaPowSize(theta.clone()),
        g,
        h,
        2,
        2,
        degree,
    )?;
    let scalar_lhs = series.lhs.eval_one();
    let scalar_rhs = series.rhs.eval_one();
    let scalar_holds = scalar_lhs <= scalar_rhs;
    Ok(PlancherelReport {
        scalar_lhs,
        scalar_rhs,
        scalar_holds,
        truncated: true,
        symbolic_factor: format!(
            "e^(-2*({})) scales both sides equally and is not evaluated",
            crate::rat::format_q(theta)
        ),
        series,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerFamilyReport {
    pub verdict: Verdict,
    pub direction: Direction,
    pub s: i64,
    pub t: i64,
    pub series_s: QSeries,
    pub series_t: QSeries,
    pub series_st: QSeries,
    /// Truncation of exp(z + z²/2) = Σ i(n) zⁿ/n! (involution counts).
    pub exp_series: QSeries,
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub dominance: DominanceReport,
}

fn f_power_series(p: i64, degree: usize) -> Result<QSeries> {
    series_by(degree, |lam| {
        let f = Q::from_integer(lam.tableaux_count());
        let p32 = i32::try_from(p).map_err(|_| Error::BadExponents { s: p, t: p })?;
        Ok(q_pow(&f, p32)? / Q::from_integer(factorial(lam.size())))
    })
}

/// The signed power family: with A_p(z) = Σ_λ f_λ^p z^|λ|/|λ|!,
///
/// ```text
/// A_{s+1}(z)·A_{t+1}(z) ≪ exp(z+z²/2)·A_{s+t+1}(z)   when st > 0,
/// ```
///
/// reversed when st < 0 (f^s is increasing for s > 0, decreasing for
/// s < 0, so the sign of st decides comonotonicity). st = 0 is rejected:
/// a constant factor gives equality and no direction.
pub fn f_power_dominance(s: i64, t: i64, degree: usize) -> Result<PowerFamilyReport> {
    check_degree(degree)?;
    if s == 0 || t == 0 {
        return Err(Error::ZeroExponentProduct);
    }
    let series_s = f_power_series(s + 1, degree)?;
    let series_t = f_power_series(t + 1, degree)?;
    let series_st = f_power_series(s + t + 1, degree)?;
    let exp_series = {
        let mut zpoly = QPolynomial::zero();
        zpoly.add_term(&Q::one(), 1);
        zpoly.add_term(&Q::new(BigInt::one(), BigInt::from(2)), 2);
        QSeries::from_poly(&zpoly, degree).exp()?
    };
    let direction = if (s > 0) == (t > 0) {
        Direction::Forward
    } else {
        Direction::Reversed
    };
    let prod_lo = series_s.mul(&series_t)?;
    let prod_hi = exp_series.mul(&series_st)?;
    let (lhs, rhs) = match direction {
        Direction::Forward => (prod_lo, prod_hi),
        Direction::Reversed => (prod_hi, prod_lo),
    };
    let dominance = series_dominance(&lhs, &rhs)?;
    Ok(PowerFamilyReport {
        verdict: if dominance.holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        direction,
        s,
        t,
        series_s,
        series_t,
        series_st,
        exp_series,
        lhs,
        rhs,
        dominance,
    })
}
