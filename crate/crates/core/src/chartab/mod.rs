//! Exact character tables by the Dixon-Schneider method.
//!
//! The class algebra is split into common eigenlines over a prime field
//! `F_p` with `p = 1 mod exponent(G)`; the resulting modular characters are
//! lifted to `Z[zeta_e]` through the eigenvalue multiplicities read off the
//! power maps.

pub mod algebra;
pub mod cyclotomic;
pub mod dixon;
pub mod lift;
pub mod modp;
mod table;

pub use algebra::{class_structure_constants, ClassAlgebra};
pub use cyclotomic::{cyclotomic_is_zero, CyclotomicField, CyclotomicValue};
pub use dixon::{choose_dixon_prime, dixon_primes, modular_character_table, ModularTable};
pub use lift::{lift_to_cyclotomic, modular_root_of_unity, LiftedRows};
pub use table::{
    character_table, character_table_nth_prime, is_galois_stable, verify_orthogonality,
    CharacterTable, SerializedRow, SerializedTable,
};
