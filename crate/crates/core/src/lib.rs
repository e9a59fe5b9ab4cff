//! Numerical semigroups, their factorization invariants, and the rational
//! numerators of plain and augmented Hilbert series.
//!
//! A semigroup is always handled together with a fixed generating set
//! `n_1 < ... < n_k`; divisor complexes, numerators and dissonance points are
//! all relative to that set, minimal or not.

pub mod complex;
pub mod dissonance;
pub mod error;
pub mod factorization;
pub mod gluing;
pub mod hilbert;
pub mod semigroup;
pub mod series;

pub use complex::SquarefreeDivisorComplex;
pub use dissonance::{DissonanceReport, QuasiExtension};
pub use error::{Error, Result};
pub use factorization::{Factorization, InvariantId, InvariantTable};
pub use gluing::{GluingSpec, Validity};
pub use hilbert::{NumeratorForm, NumeratorReport};
pub use semigroup::{MembershipTable, NumericalSemigroup};
pub use series::{SparsePolynomial, TruncatedSeries};
