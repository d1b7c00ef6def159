//! Weight and function tables on a lattice, and the two hypothesis checks
//! every correlation inequality here rests on: log-supermodularity of the
//! weight and monotonicity of the functions.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::rat::{format_q, Q};
use num::{Signed, Zero};
use serde::Serialize;

/// Nonnegative weight `μ`, one value per lattice element (index-aligned).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    values: Vec<Q>,
}

impl WeightTable {
    /// Rejects negative entries and the identically-zero table.
    pub fn new(values: Vec<Q>) -> Result<Self> {
        let w = Self::new_allow_zero_total(values)?;
        if w.values.iter().all(Zero::is_zero) {
            return Err(Error::ZeroTotalWeight);
        }
        Ok(w)
    }

    /// Rejects negative entries; permits the degenerate all-zero table.
    pub fn new_allow_zero_total(values: Vec<Q>) -> Result<Self> {
        for (i, v) in values.iter().enumerate() {
            if v.is_negative() {
                return Err(Error::NegativeWeight {
                    element: format!("#{i}"),
                    value: format_q(v),
                });
            }
        }
        Ok(WeightTable { values })
    }

    /// μ ≡ 1, the counting measure.
    pub fn ones(len: usize) -> Self {
        WeightTable {
            values: vec![Q::from_integer(1.into()); len],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, x: usize) -> &Q {
        &self.values[x]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
    }

    /// Entrywise product (e.g. an extra log-supermodular factor).
    pub fn pointwise_mul(&self, other: &WeightTable) -> Result<WeightTable> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                got: other.len(),
                want: self.len(),
            });
        }
        WeightTable::new_allow_zero_total(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> Result<WeightTable> {
        WeightTable::new_allow_zero_total(self.values.iter().map(|v| v * c).collect())
    }
}

/// Arbitrary rational-valued function on the lattice (index-aligned).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncTable {
    values: Vec<Q>,
}

impl FuncTable {
    pub fn new(values: Vec<Q>) -> Self {
        FuncTable { values }
    }

    pub fn constant(len: usize, c: Q) -> Self {
        FuncTable {
            values: vec![c; len],
        }
    }

    /// Indicator of a set of element indices.
    pub fn indicator(len: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut values = vec![Q::zero(); len];
        for x in members {
            values[x] = Q::from_integer(1.into());
        }
        FuncTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, x: usize) -> &Q {
        &self.values[x]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn pointwise_mul(&self, other: &FuncTable) -> Result<FuncTable> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                got: other.len(),
                want: self.len(),
            });
        }
        Ok(FuncTable::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Constant,
    Neither,
}

/// Classifies `f` by scanning every cover pair. `Constant` means both
/// weakly increasing and weakly decreasing.
pub fn monotonicity(lat: &impl Lattice, f: &FuncTable) -> Result<Monotonicity> {
    check_len(lat, f.len())?;
    let mut inc = true;
    let mut dec = true;
    for x in 0..lat.len() {
        for &y in lat.upper_covers(x) {
            match f.get(x).cmp(f.get(y)) {
                std::cmp::Ordering::Less => dec = false,
                std::cmp::Ordering::Greater => inc = false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    Ok(match (inc, dec) {
        (true, true) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (false, false) => Monotonicity::Neither,
    })
}

/// Validates a claimed direction, naming the first offending cover pair.
pub fn validate_monotonicity(
    lat: &impl Lattice,
    f: &FuncTable,
    claimed: Monotonicity,
) -> Result<()> {
    check_len(lat, f.len())?;
    let name = match claimed {
        Monotonicity::Increasing => "increasing",
        Monotonicity::Decreasing => "decreasing",
        Monotonicity::Constant => "constant",
        Monotonicity::Neither => return Ok(()),
    };
    for x in 0..lat.len() {
        for &y in lat.upper_covers(x) {
            let ok = match claimed {
                Monotonicity::Increasing => f.get(x) <= f.get(y),
                Monotonicity::Decreasing => f.get(x) >= f.get(y),
                Monotonicity::Constant => f.get(x) == f.get(y),
                Monotonicity::Neither => true,
            };
            if !ok {
                return Err(Error::MonotonicityClaim {
                    claimed: name,
                    lo: lat.element_name(x),
                    hi: lat.element_name(y),
                });
            }
        }
    }
    Ok(())
}

/// Which pairs the log-supermodularity check inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// DistanceTwo for strictly positive weights, AllPairs otherwise.
    Auto,
    /// Every unordered pair (comparable pairs hold with equality trivially).
    AllPairs,
    /// Only incomparable pairs at lattice distance 2, i.e. pairs of distinct
    /// upper covers of a common element. For strictly positive weights this
    /// is equivalent to the full check; with zeros present it is weaker.
    DistanceTwo,
}

/// First pair violating `μ(x)·μ(y) ≤ μ(x ∧ y)·μ(x ∨ y)`, or None.
/// Scan order is deterministic.
pub fn log_supermodular_violation(
    lat: &impl Lattice,
    w: &WeightTable,
    mode: PairMode,
) -> Result<Option<(usize, usize)>> {
    check_len(lat, w.len())?;
    let mode = match mode {
        PairMode::Auto => {
            if w.is_strictly_positive() {
                PairMode::DistanceTwo
            } else {
                PairMode::AllPairs
            }
        }
        m => m,
    };
    match mode {
        PairMode::AllPairs => {
            for x in 0..lat.len() {
                for y in x + 1..lat.len() {
                    let lhs = w.get(x) * w.get(y);
                    let rhs = w.get(lat.meet(x, y)) * w.get(lat.join(x, y));
                    if lhs > rhs {
                        return Ok(Some((x, y)));
                    }
                }
            }
        }
        PairMode::DistanceTwo => {
            // Distinct upper covers x, y of u satisfy x ∧ y = u and, the
            // lattice being graded with modular rank, d(x, y) = 2; every
            // incomparable distance-2 pair arises this way exactly once.
            for u in 0..lat.len() {
                let uc = lat.upper_covers(u);
                for (i, &x) in uc.iter().enumerate() {
                    for &y in &uc[i + 1..] {
                        let lhs = w.get(x) * w.get(y);
                        let rhs = w.get(u) * w.get(lat.join(x, y));
                        if lhs > rhs {
                            return Ok(Some((x, y)));
                        }
                    }
                }
            }
        }
        PairMode::Auto => unreachable!(),
    }
    Ok(None)
}

/// Convenience wrapper around `log_supermodular_violation`.
pub fn is_log_supermodular(lat: &impl Lattice, w: &WeightTable, mode: PairMode) -> Result<bool> {
    Ok(log_supermodular_violation(lat, w, mode)?.is_none())
}

pub(crate) fn check_len(lat: &impl Lattice, got: usize) -> Result<()> {
    if got != lat.len() {
        return Err(Error::LengthMismatch {
            got,
            want: lat.len(),
        });
    }
    Ok(())
}
