//! Simplicial complexes on a small vertex set, their f-polynomials, and the
//! product/intersection dominance
//!
//! ```text
//! f_Δ(q) · f_Γ(q)  ≪  (1+q)^|V| · f_{Δ∩Γ}(q)
//! ```
//!
//! for complexes on a common vertex set V. The verification routes through
//! the q-FKG engine on the Boolean lattice 2^V with μ ≡ 1 and the (decreasing)
//! face indicators of Δ and Γ; at q = 1 it specializes to Kleitman's
//! inequality |Δ|·|Γ| ≤ 2^|V|·|Δ∩Γ|.

use crate::error::{Error, Result};
use crate::fkg::{check_qfkg, FkgReport, Verdict};
use crate::lattice::{IdealLattice, Lattice};
use crate::poly::{dominance, DominanceReport, QPolynomial};
use crate::poset::Poset;
use crate::rat::{q, Q};
use crate::tables::{FuncTable, WeightTable};
use num::{One, Zero};
use serde::Serialize;
use std::collections::HashSet;
use std::sync::OnceLock;

/// Faces are u64 bitmasks over the vertex list, so a complex can have at
/// most this many vertices (keeps full face materialization ≤ 2^20 sets).
pub const MAX_FACE_VERTICES: usize = 20;

/// A simplicial complex, stored as its inclusion-maximal faces. The full
/// face list is materialized lazily and memoized. A complex with no faces at
/// all (the void complex) is representable but rejected by every verifier
/// that needs an f-polynomial.
#[derive(Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<u64>,
    faces: OnceLock<Vec<u64>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: self.facets.clone(),
            faces: OnceLock::new(),
        }
    }
}

impl SimplicialComplex {
    /// Build from facet vertex-index lists. Redundant (non-maximal) and
    /// duplicate facets are dropped. An empty `facets` list yields the void
    /// complex; a single empty facet yields the complex `{∅}`.
    pub fn from_facets(labels: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_FACE_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_FACE_VERTICES,
            });
        }
        crate::poset::validate_labels(&labels)?;
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for &v in f {
                if v >= n {
                    return Err(Error::NotAnElement(format!("vertex index {v}")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Self::from_facet_masks(labels, masks))
    }

    fn from_facet_masks(labels: Vec<String>, masks: Vec<u64>) -> Self {
        let mut maximal: Vec<u64> = Vec::new();
        for &m in &masks {
            let strictly_contained = masks.iter().any(|&o| o != m && o & m == m);
            if !strictly_contained && !maximal.contains(&m) {
                maximal.push(m);
            }
        }
        maximal.sort_unstable_by_key(|&m| (m.count_ones(), m));
        SimplicialComplex {
            labels,
            facets: maximal,
            faces: OnceLock::new(),
        }
    }

    /// The full simplex 2^V on the given vertices.
    pub fn full_simplex(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        Self::from_facets(labels, &[(0..n).collect()]).map(|c| {
            debug_assert_eq!(c.facets, vec![full]);
            c
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Inclusion-maximal faces, ascending by (cardinality, mask).
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// No faces at all — not even the empty face.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Every face (all subsets of facets), ascending by (cardinality, mask).
    pub fn faces(&self) -> &[u64] {
        self.faces.get_or_init(|| {
            let mut set = HashSet::new();
            for &f in &self.facets {
                // Standard submask walk: visits every subset of f once.
                let mut s = f;
                loop {
                    set.insert(s);
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & f;
                }
            }
            let mut faces: Vec<u64> = set.into_iter().collect();
            faces.sort_unstable_by_key(|&m| (m.count_ones(), m));
            faces
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// Coefficient of q^i counts the faces of cardinality i; constant term 1
    /// for any nonvoid complex.
    pub fn f_polynomial(&self) -> Result<QPolynomial> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut coeffs = vec![Q::zero(); self.vertex_count() + 1];
        for &f in self.faces() {
            coeffs[f.count_ones() as usize] += Q::one();
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Intersection of two complexes on the same labeled vertex set: the
    /// faces lying in both. Facets of the result are the maximal pairwise
    /// facet intersections.
    pub fn intersect(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.labels != other.labels {
            return Err(Error::VertexSetMismatch);
        }
        let mut masks = Vec::new();
        for &f in &self.facets {
            for &g in &other.facets {
                masks.push(f & g);
            }
        }
        Ok(Self::from_facet_masks(self.labels.clone(), masks))
    }

    /// Simplicial join on disjoint vertex sets: faces are unions of a face
    /// of `self` and a face of `other`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        for l in &other.labels {
            if self.labels.contains(l) {
                return Err(Error::VertexSetsOverlap(l.clone()));
            }
        }
        let n = self.vertex_count();
        let total = n + other.vertex_count();
        if total > MAX_FACE_VERTICES {
            return Err(Error::TooManyVertices {
                n: total,
                max: MAX_FACE_VERTICES,
            });
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        let mut masks = Vec::new();
        for &f in &self.facets {
            for &g in &other.facets {
                masks.push(f | (g << n));
            }
        }
        Ok(Self::from_facet_masks(labels, masks))
    }

    /// Same complex with every vertex label suffixed — for building disjoint
    /// copies to feed `join`.
    pub fn with_suffixed_labels(&self, suffix: &str) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.iter().map(|l| format!("{l}{suffix}")).collect(),
            facets: self.facets.clone(),
            faces: OnceLock::new(),
        }
    }

    /// Is every face of `self` a face of `other`? (Same vertex set assumed.)
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|&f| other.contains_face(f))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionDominance {
    pub f_left: QPolynomial,
    pub f_right: QPolynomial,
    pub f_intersection: QPolynomial,
    /// (1+q)^|V|, the f-polynomial of the full simplex.
    pub simplex_poly: QPolynomial,
    pub fkg: FkgReport,
}

/// Verify `f_Δ·f_Γ ≪ (1+q)^|V|·f_{Δ∩Γ}` through the q-FKG engine on the
/// Boolean lattice (μ ≡ 1, face indicators as the two decreasing functions).
/// The engine's four expectation polynomials are cross-checked against
/// independently computed f-polynomials; a mismatch panics, since it would
/// mean the two computation paths disagree.
pub fn check_intersection_dominance(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
) -> Result<IntersectionDominance> {
    if delta.labels != gamma.labels {
        return Err(Error::VertexSetMismatch);
    }
    if delta.is_void() || gamma.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = delta.vertex_count();
    let poset = Poset::antichain(delta.labels.to_vec())?;
    let lat = IdealLattice::from_poset(&poset)?;
    let face_indicator = |c: &SimplicialComplex| {
        FuncTable::indicator(
            lat.len(),
            c.faces()
                .iter()
                .map(|&m| lat.index_of_mask(m).expect("subsets index the Boolean lattice")),
        )
    };
    let g = face_indicator(delta);
    let h = face_indicator(gamma);
    let mu = WeightTable::ones(lat.len());
    let fkg = check_qfkg(&lat, &mu, &g, &h)?;

    let f_left = delta.f_polynomial()?;
    let f_right = gamma.f_polynomial()?;
    let inter = delta.intersect(gamma)?;
    let f_intersection = inter.f_polynomial()?;
    let simplex_poly = QPolynomial::one_plus_q_pow(n);
    assert_eq!(fkg.e_g, f_left, "expectation of the face indicator must be the f-polynomial");
    assert_eq!(fkg.e_h, f_right, "expectation of the face indicator must be the f-polynomial");
    assert_eq!(fkg.e_gh, f_intersection, "indicator product must match the explicit intersection");
    assert_eq!(fkg.e_one, simplex_poly, "total weight must be (1+q)^|V|");
    Ok(IntersectionDominance {
        f_left,
        f_right,
        f_intersection,
        simplex_poly,
        fkg,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinIdentity {
    pub f_left: QPolynomial,
    pub f_right: QPolynomial,
    pub f_join: QPolynomial,
    pub product: QPolynomial,
    pub holds: bool,
}

/// Verify `f_{Δ∗Γ} = f_Δ·f_Γ` for complexes on disjoint vertex sets by
/// constructing the join explicitly.
pub fn join_identity(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
) -> Result<JoinIdentity> {
    let joined = delta.join(gamma)?;
    let f_left = delta.f_polynomial()?;
    let f_right = gamma.f_polynomial()?;
    let f_join = joined.f_polynomial()?;
    let product = &f_left * &f_right;
    let holds = f_join == product;
    Ok(JoinIdentity {
        f_left,
        f_right,
        f_join,
        product,
        holds,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinRestatement {
    pub verdict: Verdict,
    pub f_join: QPolynomial,
    pub f_bound_join: QPolynomial,
    pub dominance: DominanceReport,
}

/// The intersection inequality restated through joins: for Δ, Γ on the same
/// vertex set V, `f_i(Δ∗Γ) ≤ f_i(2^V ∗ (Δ∩Γ))` for all i, with both joins
/// built explicitly on disjoint copies of V.
pub fn join_restatement(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
) -> Result<JoinRestatement> {
    if delta.labels != gamma.labels {
        return Err(Error::VertexSetMismatch);
    }
    if delta.is_void() || gamma.is_void() {
        return Err(Error::VoidComplex);
    }
    let left = delta
        .with_suffixed_labels("'")
        .join(&gamma.with_suffixed_labels("''"))?;
    let simplex = SimplicialComplex::full_simplex(
        delta.labels.iter().map(|l| format!("{l}'")).collect(),
    )?;
    let right = simplex.join(&delta.intersect(gamma)?.with_suffixed_labels("''"))?;
    let f_join = left.f_polynomial()?;
    let f_bound_join = right.f_polynomial()?;
    assert_eq!(
        f_join,
        &delta.f_polynomial()? * &gamma.f_polynomial()?,
        "join f-polynomial must factor"
    );
    assert_eq!(
        f_bound_join,
        &QPolynomial::one_plus_q_pow(delta.vertex_count())
            * &delta.intersect(gamma)?.f_polynomial()?,
        "simplex-join f-polynomial must factor"
    );
    let report = dominance(&f_join, &f_bound_join);
    Ok(JoinRestatement {
        verdict: if report.holds { Verdict::Holds } else { Verdict::Fails },
        f_join,
        f_bound_join,
        dominance: report,
    })
}

/// Kleitman's inequality — the q = 1 shadow of the intersection dominance:
/// `|Δ|·|Γ| ≤ 2^|V|·|Δ∩Γ|` (face counts).
pub fn kleitman_scalar(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
) -> Result<(Q, Q, bool)> {
    if delta.labels != gamma.labels {
        return Err(Error::VertexSetMismatch);
    }
    if delta.is_void() || gamma.is_void() {
        return Err(Error::VoidComplex);
    }
    let lhs = q(delta.face_count() as i64) * q(gamma.face_count() as i64);
    let rhs = q(1i64 << delta.vertex_count())
        * q(delta.intersect(gamma)?.face_count() as i64);
    let holds = lhs <= rhs;
    Ok((lhs, rhs, holds))
}
