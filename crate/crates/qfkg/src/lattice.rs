//! Finite distributive lattices.
//!
//! `IdealLattice` realizes the lattice of order ideals (down-sets) of a
//! poset, which by Birkhoff's representation theorem covers every finite
//! distributive lattice. Elements are u64 bitmasks over the poset; meet and
//! join are intersection and union; rank is popcount, so the lattice is
//! graded and the rank function satisfies the modular law
//! `r(x) + r(y) = r(x ∧ y) + r(x ∨ y)`.
//!
//! The `Lattice` trait is the minimal interface the inequality engine needs;
//! the partitions-in-a-box lattice implements it too.

use crate::error::{Error, Result};
use crate::poset::Poset;
use num::bigint::BigInt;
use num::One;
use rand::Rng;
use std::collections::{HashMap, HashSet};

/// Default cap on lattice size during ideal enumeration.
pub const DEFAULT_MAX_LATTICE: usize = 1 << 20;

/// A finite graded lattice with elements indexed `0..len()`.
///
/// Contract: indices are sorted by rank (ties broken deterministically by the
/// implementation), so index order is a linear extension; index 0 is the
/// bottom and `len() - 1` the top; `rank(bottom) == 0` and covers raise rank
/// by exactly 1.
pub trait Lattice {
    fn len(&self) -> usize;
    fn rank(&self, x: usize) -> usize;
    fn meet(&self, x: usize, y: usize) -> usize;
    fn join(&self, x: usize, y: usize) -> usize;
    fn upper_covers(&self, x: usize) -> &[usize];
    fn lower_covers(&self, x: usize) -> &[usize];
    fn element_name(&self, x: usize) -> String;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn bottom(&self) -> usize {
        0
    }

    fn top(&self) -> usize {
        self.len() - 1
    }

    fn le(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    /// Rank of the top element.
    fn height(&self) -> usize {
        self.rank(self.top())
    }

    /// `r(x ∨ y) − r(x ∧ y)`; comparable elements at distance `|r(x) − r(y)|`.
    fn distance(&self, x: usize, y: usize) -> usize {
        self.rank(self.join(x, y)) - self.rank(self.meet(x, y))
    }
}

/// Lattice of order ideals of a poset, enumerated exhaustively.
///
/// Elements are sorted by (cardinality, numeric bitmask value), a fixed
/// deterministic order: rebuilding from the same poset yields the identical
/// element list.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    poset: Poset,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// layer_start[r] = index of the first element of rank r; one sentinel at
    /// the end, so rank-r elements occupy layer_start[r]..layer_start[r+1].
    layer_start: Vec<usize>,
}

impl IdealLattice {
    pub fn from_poset(poset: &Poset) -> Result<Self> {
        Self::from_poset_capped(poset, DEFAULT_MAX_LATTICE)
    }

    /// Enumerates all ideals layer by layer (rank r+1 ideals arise from rank
    /// r ideals by adding one available element), failing once `max_elements`
    /// is exceeded.
    pub fn from_poset_capped(poset: &Poset, max_elements: usize) -> Result<Self> {
        let n = poset.len();
        let mut masks: Vec<u64> = Vec::new();
        let mut layer_start = vec![0usize];
        let mut current = vec![0u64];
        let mut total = 0usize;

        while !current.is_empty() {
            total += current.len();
            if total > max_elements {
                return Err(Error::SizeLimit { max: max_elements });
            }
            current.sort_unstable();
            masks.extend_from_slice(&current);
            layer_start.push(masks.len());

            let mut next = HashSet::new();
            for &m in &current {
                for j in 0..n {
                    let bit = 1u64 << j;
                    if m & bit == 0 && poset.strict_down_mask(j) & !m == 0 {
                        next.insert(m | bit);
                    }
                }
            }
            current = next.into_iter().collect();
        }

        let index: HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();

        // In an ideal lattice, x covers exactly the ideals obtained by
        // deleting one maximal element of x.
        let mut upper = vec![Vec::new(); masks.len()];
        let mut lower = vec![Vec::new(); masks.len()];
        for (x, &m) in masks.iter().enumerate() {
            let mut rest = m;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if poset.strict_up_mask(j) & m == 0 {
                    let y = index[&(m & !(1u64 << j))];
                    lower[x].push(y);
                    upper[y].push(x);
                }
            }
        }
        for adj in upper.iter_mut().chain(lower.iter_mut()) {
            adj.sort_unstable();
        }

        Ok(IdealLattice {
            poset: poset.clone(),
            masks,
            index,
            upper,
            lower,
            layer_start,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn mask(&self, x: usize) -> u64 {
        self.masks[x]
    }

    pub fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// Poset indices belonging to the ideal, ascending.
    pub fn members(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut rest = self.masks[x];
        while rest != 0 {
            out.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        out
    }

    /// Comma-joined member labels; empty string for the bottom ideal.
    pub fn ideal_key(&self, x: usize) -> String {
        self.members(x)
            .iter()
            .map(|&i| self.poset.label(i))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Elements of the closed interval `[u, v]`, ascending by index.
    pub fn interval_elements(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let (mu, mv) = (self.masks[u], self.masks[v]);
        if mu & !mv != 0 {
            return Err(Error::NotComparable(
                self.element_name(u),
                self.element_name(v),
            ));
        }
        let lo = self.layer_start[self.rank(u)];
        let hi = self.layer_start[self.rank(v) + 1];
        Ok((lo..hi)
            .filter(|&z| {
                let m = self.masks[z];
                mu & !m == 0 && m & !mv == 0
            })
            .collect())
    }

    /// The interval `[u, v]` as a standalone ideal lattice: the induced
    /// subposet on the set difference of the two ideals. (That set is convex,
    /// so its covers are the ambient covers restricted to it.)
    pub fn interval(&self, u: usize, v: usize) -> Result<IdealLattice> {
        let (mu, mv) = (self.masks[u], self.masks[v]);
        if mu & !mv != 0 {
            return Err(Error::NotComparable(
                self.element_name(u),
                self.element_name(v),
            ));
        }
        let diff = mv & !mu;
        let mut new_index = HashMap::new();
        let mut labels = Vec::new();
        for j in 0..self.poset.len() {
            if diff >> j & 1 == 1 {
                new_index.insert(j, labels.len());
                labels.push(self.poset.label(j).to_string());
            }
        }
        let covers: Vec<(usize, usize)> = self
            .poset
            .covers()
            .iter()
            .filter(|(a, b)| diff >> a & 1 == 1 && diff >> b & 1 == 1)
            .map(|(a, b)| (new_index[a], new_index[b]))
            .collect();
        IdealLattice::from_poset(&Poset::from_covers(labels, &covers)?)
    }

    /// Unordered pairs {x, y} with `x ∧ y = u` and `x ∨ y = v`.
    ///
    /// In a distributive lattice the relative complement is unique: for
    /// `x ∈ [u, v]` the only candidate is the ideal `u ∪ (v \ x)`, and {x, y}
    /// is a complement pair iff that mask is again an ideal. The pair
    /// {u, v} itself always appears; for `u == v` the output is the single
    /// degenerate pair (u, u).
    pub fn relative_complements(&self, u: usize, v: usize) -> Result<Vec<(usize, usize)>> {
        let (mu, mv) = (self.masks[u], self.masks[v]);
        let mut out = Vec::new();
        for x in self.interval_elements(u, v)? {
            let mx = self.masks[x];
            let t = mu | (mv & !mx);
            if mx <= t {
                if let Some(&y) = self.index.get(&t) {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Complemented elements (those with a complement in `[0̂, 1̂]`), with the
    /// sublattice structure they form.
    ///
    /// Verifies that the result is closed under meet and join and is Boolean
    /// (2^k elements for k atoms); in a distributive lattice this is a
    /// theorem, so a failure panics as an internal error. Pair closure is
    /// checked exhaustively up to 2048 members and on a deterministic sample
    /// beyond that.
    pub fn complemented_elements(&self) -> BooleanSublattice {
        let full = self.masks[self.top()];
        let members: Vec<usize> = (0..self.len())
            .filter(|&x| self.index.contains_key(&(full & !self.masks[x])))
            .collect();

        let member_set: HashSet<usize> = members.iter().copied().collect();
        let closed = |x: usize, y: usize| {
            member_set.contains(&self.meet(x, y)) && member_set.contains(&self.join(x, y))
        };
        if members.len() <= 2048 {
            for (i, &x) in members.iter().enumerate() {
                for &y in &members[i + 1..] {
                    assert!(closed(x, y), "complemented elements not closed under meet/join");
                }
            }
        } else {
            let mut state = 0xC0FFEEu64;
            for _ in 0..10_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let x = members[(state >> 33) as usize % members.len()];
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let y = members[(state >> 33) as usize % members.len()];
                assert!(closed(x, y), "complemented elements not closed under meet/join");
            }
        }

        // Atoms of the sublattice: minimal non-bottom members.
        let atoms: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&c| {
                c != self.bottom()
                    && !members
                        .iter()
                        .any(|&d| d != self.bottom() && d != c && self.le(d, c))
            })
            .collect();
        assert!(
            members.len() == 1usize << atoms.len(),
            "complemented elements do not form a Boolean lattice: {} members, {} atoms",
            members.len(),
            atoms.len()
        );
        BooleanSublattice { members, atoms }
    }
}

/// The Boolean sublattice of complemented elements, as indices into the
/// ambient lattice.
#[derive(Debug, Clone)]
pub struct BooleanSublattice {
    pub members: Vec<usize>,
    pub atoms: Vec<usize>,
}

impl Lattice for IdealLattice {
    fn len(&self) -> usize {
        self.masks.len()
    }

    fn rank(&self, x: usize) -> usize {
        self.masks[x].count_ones() as usize
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.index[&(self.masks[x] & self.masks[y])]
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.index[&(self.masks[x] | self.masks[y])]
    }

    fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    fn element_name(&self, x: usize) -> String {
        format!("{{{}}}", self.ideal_key(x))
    }
}

/// Number of maximal chains from the bottom to each element:
/// `m(0̂) = 1`, `m(x) = Σ m(y)` over lower covers `y`.
pub fn maximal_chain_counts(lat: &impl Lattice) -> Vec<BigInt> {
    let mut m = vec![BigInt::from(0u32); lat.len()];
    m[lat.bottom()] = BigInt::one();
    for x in 0..lat.len() {
        for &y in lat.lower_covers(x) {
            let add = m[y].clone();
            m[x] += add;
        }
    }
    m
}

/// First triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, or None.
/// Exhaustive for lattices with at most 64 elements, otherwise 1000 seeded
/// random triples.
pub fn distributivity_violation(
    lat: &impl Lattice,
    seed: u64,
) -> Option<(usize, usize, usize)> {
    let n = lat.len();
    let check = |x: usize, y: usize, z: usize| {
        lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z))
    };
    if n <= 64 {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !check(x, y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
    } else {
        let mut rng = crate::gen::default_rng(seed);
        for _ in 0..1000 {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !check(x, y, z) {
                return Some((x, y, z));
            }
        }
    }
    None
}

/// First pair violating the rank modular law
/// `r(x) + r(y) = r(x ∧ y) + r(x ∨ y)`, or None. Exhaustive.
pub fn modular_rank_violation(lat: &impl Lattice) -> Option<(usize, usize)> {
    for x in 0..lat.len() {
        for y in x..lat.len() {
            if lat.rank(x) + lat.rank(y)
                != lat.rank(lat.meet(x, y)) + lat.rank(lat.join(x, y))
            {
                return Some((x, y));
            }
        }
    }
    None
}
