//! Integer partitions: containment order, componentwise lattice operations,
//! hook lengths, standard-tableau counts, and enumeration.

use crate::error::{Error, Result};
use crate::rat::factorial;
use num::{BigInt, Integer, One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Cap for the backtracking standard-tableau counter.
pub const MAX_BRUTE_FORCE_CELLS: u64 = 12;

/// A number partition: weakly decreasing positive parts. The empty partition
/// is the bottom of the containment order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!(
                    "parts must be weakly decreasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::Parse("parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parse "3,1" (also accepts "" , "0" and "()" for the empty partition).
    /// Whitespace around parts is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "0" || t == "()" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {piece:?}")))?;
            parts.push(p);
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> u32 {
        self.part(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Diagram containment: `other_i ≤ self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i))
    }

    /// Componentwise minimum (diagram intersection).
    pub fn meet(&self, other: &Partition) -> Partition {
        let parts: Vec<u32> = (0..self.len().min(other.len()))
            .map(|i| self.parts[i].min(other.parts[i]))
            .take_while(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Componentwise maximum (diagram union).
    pub fn join(&self, other: &Partition) -> Partition {
        let parts: Vec<u32> = (0..self.len().max(other.len()))
            .map(|i| self.part(i).max(other.part(i)))
            .collect();
        Partition { parts }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells of the Ferrers diagram, row-major, 0-based `(row, col)`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
            .collect()
    }

    /// Positions where a cell can be added keeping a partition shape.
    /// Returned as `(row, col)` of the new cell.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if i == 0 || self.parts[i - 1] > self.parts[i] {
                out.push((i, self.parts[i] as usize));
            }
        }
        out.push((self.len(), 0));
        out
    }

    /// Corner cells whose removal keeps a partition shape.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.parts[i] as usize - 1))
            .collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    pub fn with_cell_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.remove(row);
        }
        Partition { parts }
    }

    /// Upper covers in the containment order (one addable cell each).
    pub fn covers_up(&self) -> Vec<Partition> {
        self.addable_cells()
            .iter()
            .map(|&(i, _)| self.with_cell_added(i))
            .collect()
    }

    /// Hook length of cell `(i, j)` (0-based): arm + leg + 1.
    /// The cell must lie in the diagram.
    pub fn hook_at(&self, i: usize, j: usize) -> u64 {
        assert!(j < self.part(i) as usize, "cell outside the diagram");
        let arm = self.parts[i] as u64 - 1 - j as u64;
        let leg = self
            .parts
            .iter()
            .skip(i + 1)
            .filter(|&&p| p as usize > j)
            .count() as u64;
        arm + leg + 1
    }

    /// Hook lengths of all cells, row-major.
    pub fn hook_lengths(&self) -> Vec<u64> {
        self.cells()
            .into_iter()
            .map(|(i, j)| self.hook_at(i, j))
            .collect()
    }

    /// Number of standard Young tableaux of this shape, by the hook formula
    /// `|λ|! / Π hooks`. The division is asserted exact — a remainder would
    /// mean the hook computation is wrong.
    pub fn tableaux_count(&self) -> BigInt {
        let mut denom = BigInt::one();
        for h in self.hook_lengths() {
            denom *= BigInt::from(h);
        }
        let num = factorial(self.size());
        let (quot, rem) = num.div_rem(&denom);
        assert!(rem.is_zero(), "hook product must divide |λ|!");
        quot
    }

    /// Standard-tableau count by backtracking over cell-insertion orders —
    /// the independent oracle for the hook formula. Equivalent to counting
    /// saturated chains from ∅ to λ in the containment order.
    pub fn tableaux_count_bruteforce(&self) -> Result<BigInt> {
        if self.size() > MAX_BRUTE_FORCE_CELLS {
            return Err(Error::BruteForceCap(format!(
                "brute-force tableau count limited to {MAX_BRUTE_FORCE_CELLS} cells, got {}",
                self.size()
            )));
        }
        fn go(current: &mut Vec<u32>, target: &[u32], remaining: u64) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut total = 0;
            for i in 0..target.len() {
                let cur = current.get(i).copied().unwrap_or(0);
                let above = if i == 0 {
                    u32::MAX
                } else {
                    current.get(i - 1).copied().unwrap_or(0)
                };
                if cur < target[i] && cur < above {
                    if i == current.len() {
                        current.push(1);
                    } else {
                        current[i] += 1;
                    }
                    total += go(current, target, remaining - 1);
                    if current[i] == 1 && i + 1 == current.len() {
                        current.pop();
                    } else {
                        current[i] -= 1;
                    }
                }
            }
            total
        }
        let mut cur = Vec::new();
        Ok(BigInt::from(go(&mut cur, &self.parts, self.size())))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, parts in decreasing order, enumeration ordered by
/// decreasing first part.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut p = remaining.min(max_part);
        while p >= 1 {
            prefix.push(p as u32);
            go(remaining - p, p, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    go(n, n, &mut prefix, &mut out);
    out
}

/// All partitions of every size `0..=n`, grouped by size.
pub fn partitions_up_to(n: u64) -> Vec<Vec<Partition>> {
    (0..=n).map(partitions_of).collect()
}

/// All partitions fitting in a `rows × cols` box (at most `rows` parts, each
/// at most `cols`), in (size, lexicographic) order.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows_left: usize, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part).rev() {
            prefix.push(p);
            go(rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    go(rows, cols, &mut prefix, &mut out);
    out.sort_unstable_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
    out
}

/// Partition counts p(0..=n) by Euler's pentagonal-number recurrence —
/// independent of the explicit enumeration above.
pub fn partition_counts(n: u64) -> Vec<BigInt> {
    let n = n as usize;
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m {
                break;
            }
            let sign_pos = k % 2 == 1;
            let mut term = p[m - g1 as usize].clone();
            if g2 as usize <= m {
                term += &p[m - g2 as usize];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// Involution counts i(0..=n): i(n) = i(n−1) + (n−1)·i(n−2).
pub fn involution_counts(n: u64) -> Vec<BigInt> {
    let n = n as usize;
    let mut i = vec![BigInt::one(); (n + 1).max(2)];
    for m in 2..=n {
        let prev = i[m - 1].clone();
        i[m] = prev + BigInt::from(m as u64 - 1) * &i[m - 2];
    }
    i.truncate(n + 1);
    i
}
