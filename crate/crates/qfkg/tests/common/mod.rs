//! Independent brute-force oracles.
//!
//! Everything here recomputes results from first principles — exhaustive
//! subset scans, naive recursion, classical formulas — deliberately sharing
//! no algorithm with the library code under test. Tests compare library
//! output against these, and freeze small hand-checked values.

#![allow(dead_code)]

use num::{BigInt, One, Zero};
use qfkg::complex::SimplicialComplex;
use qfkg::lattice::{IdealLattice, Lattice};
use qfkg::partition::Partition;
use qfkg::poly::QPolynomial;
use qfkg::poset::Poset;
use qfkg::rat::{factorial, Q};
use qfkg::tables::{FuncTable, WeightTable};

// ------------------------------------------------------------ conveniences

pub fn qi(v: i64) -> Q {
    Q::from_integer(v.into())
}

pub fn wt(vals: &[i64]) -> WeightTable {
    WeightTable::new(vals.iter().map(|&v| qi(v)).collect()).expect("test weight")
}

pub fn ft(vals: &[i64]) -> FuncTable {
    FuncTable::new(vals.iter().map(|&v| qi(v)).collect())
}

pub fn poly_i(coeffs: &[i64]) -> QPolynomial {
    QPolynomial::from_coeffs(coeffs.iter().map(|&v| qi(v)).collect())
}

pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("test partition")
}

/// The Boolean lattice 2^n as ideals of an antichain.
pub fn boolean_lattice(n: usize) -> IdealLattice {
    let poset = Poset::antichain(Poset::default_labels(n)).expect("antichain");
    IdealLattice::from_poset(&poset).expect("boolean lattice")
}

// ------------------------------------------------------------ poset/lattice

/// All downward-closed subsets by direct 2^n scan, sorted like the library
/// enumeration order (cardinality, then mask value).
pub fn brute_ideals(poset: &Poset) -> Vec<u64> {
    let n = poset.len();
    assert!(n <= 20, "oracle scan limited to 2^20 subsets");
    let mut out: Vec<u64> = (0..(1u64 << n))
        .filter(|mask| {
            (0..n).all(|i| mask >> i & 1 == 0 || poset.down_mask(i) & !mask == 0)
        })
        .collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

/// Saturated-chain count from bottom by naive recursion, no memoization.
pub fn brute_chain_count(lat: &impl Lattice, x: usize) -> BigInt {
    if x == lat.bottom() {
        return BigInt::one();
    }
    lat.lower_covers(x)
        .iter()
        .map(|&y| brute_chain_count(lat, y))
        .sum()
}

/// Unordered pairs {x, y} with x ∧ y = u and x ∨ y = v, by full scan,
/// canonicalized as (min index, max index) and sorted.
pub fn brute_relative_complements(
    lat: &IdealLattice,
    u: usize,
    v: usize,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..lat.len() {
        for y in x..lat.len() {
            if lat.meet(x, y) == u && lat.join(x, y) == v {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Canonicalize a pair list to (min index, max index), sorted — for
/// comparing against the library's mask-ordered representatives.
pub fn normalize_pairs(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn phi_direct(mu: &WeightTable, g: &FuncTable, h: &FuncTable, x: usize, y: usize) -> Q {
    mu.get(x) * mu.get(y) * (g.get(x) - g.get(y)) * (h.get(x) - h.get(y))
}

/// Degree-d coefficients of `E(1)E(gh) − E(g)E(h)` via the pairwise sum
/// `Σ_{{x,y}, r(x)+r(y)=d} μμ[gΔ][hΔ]` — no polynomial multiplication.
pub fn brute_phi_by_degree(
    lat: &impl Lattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
) -> Vec<Q> {
    let mut out = vec![Q::zero(); 2 * lat.height() + 1];
    for x in 0..lat.len() {
        for y in x + 1..lat.len() {
            out[lat.rank(x) + lat.rank(y)] += phi_direct(mu, g, h, x, y);
        }
    }
    out
}

/// `E(1)E(gh) − E(g)E(h)` by naive coefficient convolution of directly
/// accumulated expectation vectors.
pub fn brute_phi_by_convolution(
    lat: &impl Lattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
) -> Vec<Q> {
    let height = lat.height();
    let mut e_one = vec![Q::zero(); height + 1];
    let mut e_g = e_one.clone();
    let mut e_h = e_one.clone();
    let mut e_gh = e_one.clone();
    for x in 0..lat.len() {
        let r = lat.rank(x);
        e_one[r] += mu.get(x);
        e_g[r] += g.get(x) * mu.get(x);
        e_h[r] += h.get(x) * mu.get(x);
        e_gh[r] += g.get(x) * h.get(x) * mu.get(x);
    }
    let conv = |a: &[Q], b: &[Q]| {
        let mut out = vec![Q::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let lhs = conv(&e_g, &e_h);
    let rhs = conv(&e_one, &e_gh);
    rhs.iter().zip(&lhs).map(|(r, l)| r - l).collect()
}

/// ψ(u, v) by brute pair scan (each unordered complement pair once).
pub fn brute_psi(
    lat: &IdealLattice,
    mu: &WeightTable,
    g: &FuncTable,
    h: &FuncTable,
    u: usize,
    v: usize,
) -> Q {
    brute_relative_complements(lat, u, v)
        .into_iter()
        .map(|(x, y)| phi_direct(mu, g, h, x, y))
        .sum()
}

// ------------------------------------------------------------ partitions

/// Standard-tableaux count by the classical determinant formula
/// `f_λ = n! · det(1 / (λ_i − i + j)!)` — independent of both the hook
/// formula and the insertion-order backtracking.
pub fn syt_count_determinant(lam: &Partition) -> BigInt {
    let k = lam.len();
    if k == 0 {
        return BigInt::one();
    }
    let mat: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let arg = lam.part(i) as i64 - i as i64 + j as i64;
                    if arg < 0 {
                        Q::zero()
                    } else {
                        Q::new(BigInt::one(), factorial(arg as u64))
                    }
                })
                .collect()
        })
        .collect();
    let d = det_q(mat) * Q::from_integer(factorial(lam.size()));
    assert!(d.is_integer(), "determinant formula must give an integer");
    d.to_integer()
}

/// Exact determinant by fraction-free-enough Gaussian elimination over ℚ.
pub fn det_q(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Q::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Involutions of S_n by brute enumeration of partial matchings.
pub fn brute_involutions(n: usize) -> BigInt {
    assert!(n <= 16, "matching enumeration oracle limited to n = 16");
    fn go(used: u32, n: usize) -> u64 {
        let first = (0..n).find(|i| used >> i & 1 == 0);
        match first {
            None => 1,
            Some(i) => {
                let mut total = go(used | 1 << i, n);
                for j in i + 1..n {
                    if used >> j & 1 == 0 {
                        total += go(used | 1 << i | 1 << j, n);
                    }
                }
                total
            }
        }
    }
    BigInt::from(go(0, n))
}

/// Gaussian binomial `[n choose k]_q` by the Pascal recurrence
/// `[n k] = [n−1 k−1] + q^k·[n−1 k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let mut table: Vec<Vec<QPolynomial>> = vec![vec![QPolynomial::zero(); k + 1]; n + 1];
    table[0][0] = QPolynomial::one();
    for m in 1..=n {
        table[m][0] = QPolynomial::one();
        for j in 1..=k.min(m) {
            let carry = QPolynomial::monomial(Q::one(), j);
            let val = &table[m - 1][j - 1] + &(&carry * &table[m - 1][j]);
            table[m][j] = val;
        }
    }
    table[n][k].clone()
}

// ------------------------------------------------------------ complexes

/// All faces by scanning every vertex subset against the facet list.
pub fn brute_faces(c: &SimplicialComplex) -> Vec<u64> {
    let n = c.vertex_count();
    (0..(1u64 << n)).filter(|&m| c.contains_face(m)).collect()
}

/// f-polynomial from the brute face list.
pub fn brute_f_polynomial(c: &SimplicialComplex) -> QPolynomial {
    let mut coeffs = vec![Q::zero(); c.vertex_count() + 1];
    for m in brute_faces(c) {
        coeffs[m.count_ones() as usize] += Q::one();
    }
    QPolynomial::from_coeffs(coeffs)
}
