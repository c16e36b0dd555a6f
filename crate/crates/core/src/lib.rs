//! Skew monoidal monoids, symbolically and as finite models.
//!
//! [`term`] is a rewriting and proof engine over the free signature;
//! [`finmon`] holds finite models given by tables. The remaining modules
//! build the structures attached to a finite model: module categories
//! ([`modcat`]), the bialgebroids `G` and `F` ([`bgd`]), and the skew
//! monoidal category of right `A`-sets ([`skewset`]).

pub mod bgd;
pub mod cli;
pub mod error;
pub mod finmon;
pub mod modcat;
pub mod skewset;
pub mod term;

pub use error::{Result, SmmError};
