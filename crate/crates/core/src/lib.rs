//! Exact computer algebra for quasisymmetric functions.
//!
//! The crate covers the monomial (`M`), fundamental (`L`), peak (`K`) and
//! enriched monomial (`η`) bases of QSym, the conversions between them, and
//! their products, coproducts and antipodes. Labelled weighted posets and
//! their enriched P-partitions give generating functions that specialise to
//! all four bases; [`oracle`] expands any element as an honest polynomial in
//! finitely many variables so every symbolic identity can be checked against
//! brute-force enumeration.

pub mod combinatorics;
pub mod error;
pub mod json;
pub mod oracle;
pub mod ppartitions;
pub mod qsym;
pub mod rational;
pub mod verify;

pub use combinatorics::{Composition, IntervalSubset, Permutation};
pub use error::{Error, Result};
pub use oracle::TruncatedPoly;
pub use ppartitions::{LabelledWeightedPoset, SignedValue, ZAlphabet};
pub use qsym::{Basis, QSymElement, TensorElement};
pub use rational::Rational;
