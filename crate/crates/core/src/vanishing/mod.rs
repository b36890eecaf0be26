//! Vanishing classes and the structure they force.
//!
//! A class is vanishing when some irreducible character is exactly zero on
//! it. [`vanishing_profile`] reads this off the exact character table;
//! [`classify_single_vcs`] matches a group with a single vanishing class size
//! against the known structural shapes and records every sub-condition;
//! [`verify_vanishing_invariants`] and
//! [`verify_single_size_characterization`] run the implications between
//! vanishing sizes and group structure as concrete checks.

mod characterization;
mod classify;
mod invariants;
mod profile;
mod same_size;

pub use characterization::{
    verify_single_size_characterization, CharacterizationReport, Direction, Shape,
};
pub use classify::{
    classify_single_vcs, classify_with_profile, CaseLabel, Check, ClassificationResult,
    ClassificationSummary, QuotientFrobenius,
};
pub use invariants::{verify_vanishing_invariants, CheckStatus, InvariantCheck};
pub use profile::{vanishing_profile, VanishingProfile};
pub use same_size::{check_hall_pair, check_same_size_conditions, OutsideScan, SameSizeReport};
