//! Finite posets on at most 64 labeled elements, stored as bitmask down-sets.
//!
//! A poset here is the set of join-irreducibles of the distributive lattice
//! built from it (see `lattice`). Construction is from an irredundant cover
//! list; the full order relation is derived by transitive closure.

use crate::error::{Error, Result};
use std::collections::HashSet;

/// Hard cap imposed by the u64 bitmask representation.
pub const MAX_POSET_ELEMENTS: usize = 64;

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    /// down[i]: bit j set iff j <= i (includes i itself).
    down: Vec<u64>,
    /// up[i]: bit j set iff j >= i (includes i itself).
    up: Vec<u64>,
    /// Cover pairs (lower, upper), sorted.
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from cover pairs `(lower, upper)` given as element
    /// indices. The cover list must be exactly the covering relation of the
    /// order it generates: duplicates, self-loops, cycles, and transitively
    /// implied pairs are all rejected.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_POSET_ELEMENTS {
            return Err(Error::TooManyIrreducibles { n });
        }
        validate_labels(&labels)?;

        let mut seen = HashSet::new();
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({a}, {b}) references a missing element"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("self-cover on {}", labels[a])));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidPoset(format!(
                    "duplicate cover ({}, {})",
                    labels[a], labels[b]
                )));
            }
        }

        // Topological order; a cycle means the input is not a poset.
        let mut outgoing = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in covers {
            outgoing[a].push(b);
            indegree[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(i) = queue.pop() {
            topo.push(i);
            for &j in &outgoing[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push(j);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }

        // Transitive closure along the topological order.
        let mut down = vec![0u64; n];
        let mut incoming = vec![Vec::new(); n];
        for &(a, b) in covers {
            incoming[b].push(a);
        }
        for &i in &topo {
            let mut m = 1u64 << i;
            for &a in &incoming[i] {
                m |= down[a];
            }
            down[i] = m;
        }
        let mut up = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if down[j] >> i & 1 == 1 {
                    up[i] |= 1 << j;
                }
            }
        }

        // Irredundancy: a cover (a, b) with some z strictly between a and b
        // is transitively implied.
        for &(a, b) in covers {
            let between = up[a] & down[b] & !(1 << a) & !(1 << b);
            if between != 0 {
                return Err(Error::InvalidPoset(format!(
                    "cover ({}, {}) is transitively implied",
                    labels[a], labels[b]
                )));
            }
        }

        let mut covers = covers.to_vec();
        covers.sort_unstable();
        Ok(Poset {
            labels,
            down,
            up,
            covers,
        })
    }

    /// Builds from a strict order given as a full relation matrix
    /// (`rel[i][j]` means `i < j`); covers are recovered by transitive
    /// reduction. The matrix must already be transitive and antisymmetric.
    pub fn from_strict_relation(labels: Vec<String>, rel: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if rel.len() != n || rel.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidPoset("relation matrix shape mismatch".into()));
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] && !(0..n).any(|k| rel[i][k] && rel[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(labels, &covers)
    }

    /// `a`, `b`, ..., `z`, then `e26`, `e27`, ...
    pub fn default_labels(n: usize) -> Vec<String> {
        (0..n)
            .map(|i| {
                if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    format!("e{i}")
                }
            })
            .collect()
    }

    /// Antichain on the given labels (no relations).
    pub fn antichain(labels: Vec<String>) -> Result<Self> {
        Self::from_covers(labels, &[])
    }

    /// Chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(Self::default_labels(n), &covers)
    }

    /// Product of two chains: elements (i, j) with the componentwise order.
    /// Its ideal lattice is the lattice of partitions in a rows x cols box.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        let labels = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| format!("{i}.{j}")))
            .collect();
        let mut covers = Vec::new();
        let at = |i: usize, j: usize| i * cols + j;
        for i in 0..rows {
            for j in 0..cols {
                if i + 1 < rows {
                    covers.push((at(i, j), at(i + 1, j)));
                }
                if j + 1 < cols {
                    covers.push((at(i, j), at(i, j + 1)));
                }
            }
        }
        Self::from_covers(labels, &covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `i <= j` in the partial order.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.down[j] >> i & 1 == 1
    }

    /// Bitmask of elements `<= i`, including `i`.
    pub fn down_mask(&self, i: usize) -> u64 {
        self.down[i]
    }

    /// Bitmask of elements `>= i`, including `i`.
    pub fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    /// Strict down-set of `i` (excludes `i`).
    pub fn strict_down_mask(&self, i: usize) -> u64 {
        self.down[i] & !(1u64 << i)
    }

    /// Strict up-set of `i` (excludes `i`).
    pub fn strict_up_mask(&self, i: usize) -> u64 {
        self.up[i] & !(1u64 << i)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Bitmask with one bit per element.
    pub fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

pub(crate) fn validate_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(Error::InvalidPoset("empty element label".into()));
        }
        if l.contains(',') {
            return Err(Error::InvalidPoset(format!(
                "label {l:?} contains a comma (reserved for ideal keys)"
            )));
        }
        if !seen.insert(l) {
            return Err(Error::InvalidPoset(format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

/// All labeled posets on `n` elements (n <= 5), by filtering every
/// irreflexive relation for antisymmetry and transitivity. Counts are the
/// classical 1, 1, 3, 19, 219, 4231 for n = 0..=5.
pub fn all_labeled_posets(n: usize) -> Result<Vec<Poset>> {
    if n > 5 {
        return Err(Error::BruteForceCap(
            "labeled poset enumeration is capped at n = 5".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = bits >> k & 1 == 1;
        }
        if !is_strict_order(&rel) {
            continue;
        }
        out.push(Poset::from_strict_relation(Poset::default_labels(n), &rel)?);
    }
    Ok(out)
}

/// All posets on `n` elements up to isomorphism (one representative each,
/// deterministic choice). Counts 1, 1, 2, 5, 16, 63 for n = 0..=5.
pub fn all_posets_up_to_iso(n: usize) -> Result<Vec<Poset>> {
    let labeled = all_labeled_posets(n)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in labeled {
        if seen.insert(canonical_relation_key(&p)) {
            out.push(p);
        }
    }
    Ok(out)
}

fn is_strict_order(rel: &[Vec<bool>]) -> bool {
    let n = rel.len();
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] && rel[j][i] {
                return false;
            }
            if rel[i][j] {
                for k in 0..n {
                    if rel[j][k] && !rel[i][k] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Minimum over all relabelings of the strict-order bit matrix, packed
/// row-major into a u64. Two posets are isomorphic iff keys match (n <= 8).
fn canonical_relation_key(p: &Poset) -> u64 {
    let n = p.len();
    assert!(n * n <= 64, "canonical key supports n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |perm| {
        let mut key = 0u64;
        for i in 0..n {
            for j in 0..n {
                if i != j && p.le(perm[i], perm[j]) {
                    key |= 1 << (i * n + j);
                }
            }
        }
        best = best.min(key);
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}
