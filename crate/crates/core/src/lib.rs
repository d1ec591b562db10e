//! Exact computation with finite categories: validated presentations,
//! coends by the coequalizer-of-coproducts formula, left Kan extensions
//! via copowers, brute-force colimit oracles, and tensor products of
//! modules over preadditive categories — all over explicit finite data,
//! with every universal property re-checkable by enumeration or exact
//! integer linear algebra.
//!
//! No floating point is used anywhere; abelian-group computations run on
//! arbitrary-precision integers through Smith normal form.

pub mod error;
pub mod fincat;
pub mod finset;
pub mod finab;
pub mod backend;
pub mod brute;
pub mod coend;
pub mod kan;
pub mod cmod;
pub mod corpus;

pub use error::{Error, Result};
