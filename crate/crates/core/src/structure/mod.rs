//! Sylow and Hall subgroups, cores, series, and Frobenius structure.

mod frobenius;
mod series;
mod sylow;

pub use frobenius::{
    hall_complement, is_frobenius_with_kernel, prime_order_classification, FrobeniusWitness,
    PrimeOrderShape,
};
pub use series::{
    chief_series, is_solvable, is_supersolvable, minimal_normal_subgroups, ChiefSeries,
    ChiefSeriesSummary,
};
pub use sylow::{
    fitting_subgroup, is_nilpotent, is_nilpotent_subgroup, normal_hall_subgroup, p_core,
    sylow_subgroup,
};
