//! Exact finite-group engine for vanishing conjugacy class sizes.
//!
//! Groups are enumerated from generators, character tables are computed by
//! the Dixon-Schneider method over a prime field and lifted to exact
//! cyclotomic integers, and the resulting zero patterns drive a set of
//! structural classifiers and consistency checks.

pub mod arith;
pub mod catalog;
pub mod chartab;
pub mod constructors;
pub mod dsl;
pub mod error;
pub mod group;
pub mod structure;
pub mod report;
pub mod vanishing;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
