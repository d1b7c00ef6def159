//! Dense polynomials and truncated power series over exact rationals.
//!
//! * `QPolynomial` — canonical form (no trailing zero coefficients).
//! * `QSeries` — coefficients 0..=D at a fixed truncation degree D.
//! * `dominance` — the coefficientwise order: `lhs ≪ rhs` iff `rhs − lhs`
//!   has only nonnegative coefficients. Every inequality this crate verifies
//!   bottoms out here.

use crate::error::{Error, Result};
use crate::rat::{format_q, parse_q, Q};
use num::{One, Signed, Zero};
use serde::de::SeqAccess;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in one variable with `BigRational` coefficients, stored densely
/// from degree 0 upward with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<Q>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        QPolynomial::from_coeffs(vec![c])
    }

    /// `c * q^deg`.
    pub fn monomial(c: Q, deg: usize) -> Self {
        let mut coeffs = vec![Q::zero(); deg + 1];
        coeffs[deg] = c;
        QPolynomial::from_coeffs(coeffs)
    }

    /// Builds from coefficients (degree 0 first), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> Q {
        self.coeffs.get(d).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Adds `c * q^deg` in place.
    pub fn add_term(&mut self, c: &Q, deg: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, Q::zero());
        }
        self.coeffs[deg] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluation at an exact rational point.
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at q = 1, i.e. the coefficient sum. The q = 1
    /// specialization of every inequality here is its classical form.
    pub fn eval_one(&self) -> Q {
        self.coeffs.iter().fold(Q::zero(), |a, c| a + c)
    }

    /// Substitutes q ↦ q^k (exponent stretch; k = 2 gives cohomological
    /// grading from combinatorial grading).
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k > 0, "stretch factor must be positive");
        let mut coeffs = vec![Q::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        if self.coeffs.is_empty() {
            return QPolynomial::zero();
        }
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * k] = c.clone();
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// `(1 + q)^n`.
    pub fn one_plus_q_pow(n: usize) -> Self {
        let base = QPolynomial::from_coeffs(vec![Q::one(), Q::one()]);
        let mut acc = QPolynomial::one();
        for _ in 0..n {
            acc = &acc * &base;
        }
        acc
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", format_q(c))?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{}*q", format_q(c))?,
                _ if c.is_one() => write!(f, "q^{d}")?,
                _ => write!(f, "{}*q^{d}", format_q(c))?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for d in 0..n {
            coeffs.push(self.coeff(d) + rhs.coeff(d));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for d in 0..n {
            coeffs.push(self.coeff(d) - rhs.coeff(d));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

// Polynomials serialize as arrays of rational strings, degree 0 first.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_q(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> serde::de::Visitor<'de> for V {
            type Value = QPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<QPolynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    coeffs.push(parse_q(&s).map_err(serde::de::Error::custom)?);
                }
                Ok(QPolynomial::from_coeffs(coeffs))
            }
        }
        d.deserialize_seq(V)
    }
}

/// One violated degree in a dominance comparison: `deficit = rhs_d - lhs_d < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDeficit {
    pub degree: usize,
    #[serde(with = "crate::rat::qstr")]
    pub deficit: Q,
}

/// Outcome of a coefficientwise comparison `lhs ≪ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub holds: bool,
    /// Exact negative coefficients of `rhs - lhs`, in degree order.
    pub violations: Vec<DegreeDeficit>,
}

/// Checks `lhs ≪ rhs`, i.e. `rhs - lhs` has only nonnegative coefficients.
pub fn dominance(lhs: &QPolynomial, rhs: &QPolynomial) -> DominanceReport {
    let diff = rhs - lhs;
    let violations: Vec<DegreeDeficit> = diff
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(degree, c)| DegreeDeficit {
            degree,
            deficit: c.clone(),
        })
        .collect();
    DominanceReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// Power series truncated at a fixed degree: coefficients of z^0 ..= z^D.
/// Arithmetic requires both operands to share the truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Q>, // length = trunc + 1, trailing zeros kept
}

impl QSeries {
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            coeffs: vec![Q::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = QSeries::zero(trunc);
        s.coeffs[0] = Q::one();
        s
    }

    /// Coefficients `f(0), f(1), ..., f(trunc)`.
    pub fn from_fn(trunc: usize, mut f: impl FnMut(usize) -> Q) -> Self {
        QSeries {
            coeffs: (0..=trunc).map(|n| f(n)).collect(),
        }
    }

    /// Truncates a polynomial (extra degrees dropped, missing ones zero).
    pub fn from_poly(p: &QPolynomial, trunc: usize) -> Self {
        QSeries::from_fn(trunc, |n| p.coeff(n))
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.coeffs.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn check_trunc(&self, other: &QSeries) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_trunc(other)?;
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_trunc(other)?;
        let d = self.trunc();
        let mut coeffs = vec![Q::zero(); d + 1];
        for i in 0..=d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(d - i) {
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Ok(QSeries { coeffs })
    }

    /// exp of a series with zero constant term, via f' = g'·f:
    /// `n·f(n) = Σ_{k=1..n} k·g(k)·f(n−k)`.
    pub fn exp(&self) -> Result<QSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let d = self.trunc();
        let mut f = vec![Q::zero(); d + 1];
        f[0] = Q::one();
        for n in 1..=d {
            let mut acc = Q::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += crate::rat::q(k as i64) * &self.coeffs[k] * &f[n - k];
            }
            f[n] = acc / crate::rat::q(n as i64);
        }
        Ok(QSeries { coeffs: f })
    }

    /// Sum of coefficients: evaluation of the truncation at z = 1.
    pub fn eval_one(&self) -> Q {
        self.coeffs.iter().fold(Q::zero(), |a, c| a + c)
    }
}

/// Coefficientwise `lhs ≪ rhs` up to the shared truncation degree.
pub fn series_dominance(lhs: &QSeries, rhs: &QSeries) -> Result<DominanceReport> {
    lhs.check_trunc(rhs)?;
    let violations: Vec<DegreeDeficit> = (0..=lhs.trunc())
        .filter_map(|n| {
            let d = rhs.coeff(n) - lhs.coeff(n);
            d.is_negative().then_some(DegreeDeficit {
                degree: n,
                deficit: d,
            })
        })
        .collect();
    Ok(DominanceReport {
        holds: violations.is_empty(),
        violations,
    })
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_q(c))?;
        }
        seq.end()
    }
}
