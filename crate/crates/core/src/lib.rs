//! Verification toolkit for finite gamma-semigroups.
//!
//! The crate models a finite carrier with an operator set and a ternary
//! product, derives the left and right operator semigroups as quotients,
//! moves crisp and intuitionistic fuzzy subsets across the four transfer
//! maps, classifies ideals on every carrier, and machine-checks a catalog of
//! structure theorems over exhaustively enumerated instance populations.

pub mod enumerate;
pub mod error;
pub mod extension;
pub mod format;
pub mod fuzzy;
pub mod operator;
pub mod samples;
pub mod semigroup;
pub mod transfer;
pub mod verify;

pub use error::InputError;
pub use semigroup::GammaSemigroup;
