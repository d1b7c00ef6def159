//! Partitions in a k×m box under containment — the rank-graded distributive
//! lattice indexing Schubert varieties of the classical Grassmannian — and
//! the Poincaré-polynomial dominance
//!
//! ```text
//! P_u(q) · P_v(q)  ≪  P_full(q) · P_{u∧v}(q),
//! ```
//!
//! where `P_u(q) = Σ_{w ≤ u} q^{2|w|}` (even-degree Betti numbers; odd ones
//! vanish) and the intersection of the varieties below u and v is the one
//! below u∧v. Only the type-A (box) family is built here; other minuscule
//! families would need classification data the box model doesn't provide,
//! and any distributive lattice can be fed to the q-FKG engine directly to
//! the same effect.

use crate::error::{Error, Result};
use crate::fkg::{check_qfkg, FkgReport, Verdict};
use crate::lattice::{IdealLattice, Lattice, DEFAULT_MAX_LATTICE};
use crate::partition::{partitions_in_box, Partition};
use crate::poly::{dominance, DominanceReport, QPolynomial};
use crate::poset::Poset;
use crate::rat::{binomial, Q};
use crate::tables::{FuncTable, WeightTable};
use num::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::HashMap;

/// Exponent convention for Poincaré polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// q^{2|w|} — Betti numbers of singular cohomology (the default).
    Cohomological,
    /// q^{|w|} — plain rank generating function.
    Combinatorial,
}

impl Grading {
    fn stretch(self) -> usize {
        match self {
            Grading::Cohomological => 2,
            Grading::Combinatorial => 1,
        }
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, ordered by
/// containment. Element count is C(rows+cols, rows); indices are sorted by
/// (size, parts), so they form a linear extension with ∅ at index 0.
#[derive(Debug, Clone)]
pub struct BoxLattice {
    rows: usize,
    cols: u32,
    elements: Vec<Partition>,
    index: HashMap<Partition, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl BoxLattice {
    pub fn new(rows: usize, cols: u32) -> Result<Self> {
        let expected = binomial(rows as u64 + cols as u64, rows as u64);
        match expected.to_usize() {
            Some(n) if n <= DEFAULT_MAX_LATTICE => {}
            _ => {
                return Err(Error::SizeLimit {
                    max: DEFAULT_MAX_LATTICE,
                })
            }
        }
        let elements = partitions_in_box(rows, cols);
        assert_eq!(
            Some(elements.len()),
            expected.to_usize(),
            "box enumeration must produce C(rows+cols, rows) partitions"
        );
        let index: HashMap<Partition, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut upper = vec![Vec::new(); elements.len()];
        let mut lower = vec![Vec::new(); elements.len()];
        for (i, lam) in elements.iter().enumerate() {
            for (row, _) in lam.addable_cells() {
                if row < rows && lam.part(row) < cols {
                    let j = index[&lam.with_cell_added(row)];
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        for adj in upper.iter_mut().chain(lower.iter_mut()) {
            adj.sort_unstable();
        }
        Ok(BoxLattice {
            rows,
            cols,
            elements,
            index,
            upper,
            lower,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn partition(&self, x: usize) -> &Partition {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        lam.len() <= self.rows && lam.first_part() <= self.cols
    }

    pub fn index_of(&self, lam: &Partition) -> Result<usize> {
        self.index.get(lam).copied().ok_or(Error::OutsideBox {
            rows: self.rows,
            cols: self.cols as usize,
        })
    }

    /// Indices of all elements ≤ u (the principal ideal of u).
    pub fn ideal_of(&self, u: usize) -> Vec<usize> {
        let lam = &self.elements[u];
        (0..self.len())
            .filter(|&w| lam.contains(&self.elements[w]))
            .collect()
    }

    /// `Σ_{w ≤ u} q^{g·|w|}` by direct containment scan — deliberately
    /// independent of the meet/join tables so it can cross-check them.
    pub fn poincare_polynomial(&self, u: &Partition, grading: Grading) -> Result<QPolynomial> {
        let _ = self.index_of(u)?;
        let mut coeffs = vec![Q::zero(); (u.size() as usize) * grading.stretch() + 1];
        for w in &self.elements {
            if u.contains(w) {
                coeffs[w.size() as usize * grading.stretch()] += Q::one();
            }
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    pub fn full_partition(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows]).expect("box corner is a valid partition")
    }

    pub fn full_poincare(&self, grading: Grading) -> QPolynomial {
        self.poincare_polynomial(&self.full_partition(), grading)
            .expect("the full box is in the box")
    }
}

impl Lattice for BoxLattice {
    fn len(&self) -> usize {
        self.elements.len()
    }

    fn rank(&self, x: usize) -> usize {
        self.elements[x].size() as usize
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].meet(&self.elements[y])]
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].join(&self.elements[y])]
    }

    fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    fn element_name(&self, x: usize) -> String {
        self.elements[x].to_string()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SchubertReport {
    pub u: String,
    pub v: String,
    pub meet: String,
    pub p_u: QPolynomial,
    pub p_v: QPolynomial,
    pub p_full: QPolynomial,
    pub p_meet: QPolynomial,
    /// `p_u·p_v` and `p_full·p_meet` in the requested grading.
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub dominance: DominanceReport,
    /// The underlying engine run (μ ≡ 1, principal-ideal indicators),
    /// always in combinatorial grading.
    pub fkg: FkgReport,
}

/// Verify the Poincaré dominance for the pair (u, v) by running the q-FKG
/// engine with μ ≡ 1 and the decreasing indicators of {w ≤ u}, {w ≤ v}:
/// its expectation polynomials are exactly the rank generating functions of
/// the principal ideals, which the directly-computed Poincaré polynomials
/// must match after regrading (asserted).
pub fn check_poincare_dominance(
    lat: &BoxLattice,
    u: &Partition,
    v: &Partition,
    grading: Grading,
) -> Result<SchubertReport> {
    let ui = lat.index_of(u)?;
    let vi = lat.index_of(v)?;
    let g = FuncTable::indicator(lat.len(), lat.ideal_of(ui));
    let h = FuncTable::indicator(lat.len(), lat.ideal_of(vi));
    let mu = WeightTable::ones(lat.len());
    let fkg = check_qfkg(lat, &mu, &g, &h)?;

    let meet = lat.partition(lat.meet(ui, vi)).clone();
    let p_u = lat.poincare_polynomial(u, grading)?;
    let p_v = lat.poincare_polynomial(v, grading)?;
    let p_meet = lat.poincare_polynomial(&meet, grading)?;
    let p_full = lat.full_poincare(grading);
    let k = grading.stretch();
    assert_eq!(p_u, fkg.e_g.stretch(k), "rank series of [∅,u] must regrade to P_u");
    assert_eq!(p_v, fkg.e_h.stretch(k), "rank series of [∅,v] must regrade to P_v");
    assert_eq!(
        p_meet,
        fkg.e_gh.stretch(k),
        "indicator product must be the ideal of the meet"
    );
    assert_eq!(p_full, fkg.e_one.stretch(k), "full-box series must regrade");

    let lhs = &p_u * &p_v;
    let rhs = &p_full * &p_meet;
    let dom = dominance(&lhs, &rhs);
    assert_eq!(
        dom.holds, fkg.dominance.holds,
        "regrading must not change the dominance verdict"
    );
    Ok(SchubertReport {
        u: u.to_string(),
        v: v.to_string(),
        meet: meet.to_string(),
        p_u,
        p_v,
        p_full,
        p_meet,
        lhs,
        rhs,
        dominance: dom,
        fkg,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AllPairsReport {
    pub rows: usize,
    pub cols: u32,
    pub elements: usize,
    pub pairs: usize,
    pub all_hold: bool,
    pub failures: Vec<(String, String)>,
}

/// Run the dominance check over every ordered pair in the box.
pub fn check_all_pairs(lat: &BoxLattice, grading: Grading) -> Result<AllPairsReport> {
    let n = lat.len();
    let mut failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let rep = check_poincare_dominance(
                lat,
                &lat.partition(x).clone(),
                &lat.partition(y).clone(),
                grading,
            )?;
            if rep.fkg.verdict != Verdict::Holds {
                failures.push((rep.u, rep.v));
            }
        }
    }
    Ok(AllPairsReport {
        rows: lat.rows(),
        cols: lat.cols(),
        elements: n,
        pairs: n * n,
        all_hold: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GridIsoReport {
    pub elements: usize,
    pub rank_preserved: bool,
    pub covers_preserved: bool,
    pub meets_preserved: bool,
    pub joins_preserved: bool,
    pub holds: bool,
}

/// Cross-module consistency: the box lattice is isomorphic, as a graded
/// lattice, to the ideal lattice of the rows×cols grid poset, via
/// λ ↦ {cells (i,j) : j < λ_i}. Checks ranks, cover sets, meets and joins
/// through the explicit bijection.
pub fn box_grid_isomorphism(rows: usize, cols: u32) -> Result<GridIsoReport> {
    let boxl = BoxLattice::new(rows, cols)?;
    let grid = Poset::grid(rows, cols as usize)?;
    let ideals = IdealLattice::from_poset(&grid)?;
    assert_eq!(boxl.len(), ideals.len(), "element counts must agree");

    let to_mask = |lam: &Partition| -> u64 {
        let mut m = 0u64;
        for (i, &p) in lam.parts().iter().enumerate() {
            for j in 0..p as usize {
                m |= 1 << (i * cols as usize + j);
            }
        }
        m
    };
    let map: Vec<usize> = (0..boxl.len())
        .map(|x| {
            ideals
                .index_of_mask(to_mask(boxl.partition(x)))
                .expect("every box partition is a grid ideal")
        })
        .collect();

    let n = boxl.len();
    let rank_preserved = (0..n).all(|x| boxl.rank(x) == ideals.rank(map[x]));
    let covers_preserved = (0..n).all(|x| {
        let mut mapped: Vec<usize> = boxl.upper_covers(x).iter().map(|&y| map[y]).collect();
        mapped.sort_unstable();
        mapped == ideals.upper_covers(map[x])
    });
    let mut meets_preserved = true;
    let mut joins_preserved = true;
    for x in 0..n {
        for y in 0..n {
            if map[boxl.meet(x, y)] != ideals.meet(map[x], map[y]) {
                meets_preserved = false;
            }
            if map[boxl.join(x, y)] != ideals.join(map[x], map[y]) {
                joins_preserved = false;
            }
        }
    }
    Ok(GridIsoReport {
        elements: n,
        rank_preserved,
        covers_preserved,
        meets_preserved,
        joins_preserved,
        holds: rank_preserved && covers_preserved && meets_preserved && joins_preserved,
    })
}
