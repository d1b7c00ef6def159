//! Exact verification of correlation inequalities on finite distributive
//! lattices, refined by rank.
//!
//! The central object is the weighted, rank-graded expectation polynomial
//!
//! ```text
//! E_μ(k; q) = Σ_x k(x) · μ(x) · q^{rank(x)}
//! ```
//!
//! over a finite distributive lattice, realized throughout as the lattice
//! of order ideals of a poset ([`poset::Poset`] → [`lattice::IdealLattice`])
//! with set intersection and union as meet and join. For a log-supermodular
//! weight μ ≥ 0 and monotone functions g, h, the polynomial inequality
//!
//! ```text
//! E(g) · E(h)  ≪  E(1) · E(g·h)      (coefficientwise)
//! ```
//!
//! holds when g and h are comonotone, and reverses when they are
//! countermonotone; setting q = 1 recovers the classical correlation
//! inequality for distributive lattices. [`fkg::check_qfkg`] verifies it
//! exactly in rational arithmetic, [`fkg::check_psi_decomposition`]
//! recomputes both sides through the pairwise decomposition that proves it,
//! and [`fkg::check_qfkg_fishburn`] runs the variant whose weight is scaled
//! by powers of the maximal-chain count `m(x)^t / (rank(x)!)^s`.
//!
//! Application modules instantiate the same engine:
//!
//! * [`complex`] — face-count dominance for intersections and joins of
//!   simplicial complexes on a common vertex set;
//! * [`schubert`] — Poincaré polynomials of type-A Schubert varieties,
//!   indexed by partitions in a box;
//! * [`young`] — weighted generating series over all partitions with
//!   standard-Young-tableaux weights, their closed forms, and the
//!   poissonized version with its scalar correlation consequence;
//! * [`adsearch`] — randomized search for a counterexample to the graded
//!   four-function inequality, which is open rather than proved.
//!
//! Supporting modules: exact rationals and polynomials ([`rat`], [`poly`]),
//! weight/function tables and hypothesis checks ([`tables`]), partitions
//! and hook arithmetic ([`partition`]), random instance generation
//! ([`gen`]), JSON interchange ([`io`]), and a float-only probe of real
//! chain-weight exponents ([`explore`]) that never participates in
//! verification.

pub mod adsearch;
pub mod complex;
pub mod error;
pub mod explore;
pub mod fkg;
pub mod gen;
pub mod io;
pub mod lattice;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod rat;
pub mod schubert;
pub mod tables;
pub mod young;

pub use error::{Error, Result};
pub use fkg::{check_psi_decomposition, check_qfkg, check_qfkg_fishburn, expectation_poly};
pub use lattice::{IdealLattice, Lattice};
pub use partition::Partition;
pub use poly::{dominance, QPolynomial, QSeries};
pub use poset::Poset;
pub use rat::Q;
pub use tables::{FuncTable, WeightTable};
