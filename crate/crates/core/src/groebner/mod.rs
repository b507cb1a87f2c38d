//! Ideals, Gröbner bases, elimination and dimension.

mod buchberger;
mod ideal;

pub use buchberger::{buchberger, buchberger_with_limits, is_groebner_basis, normal_form, Limits};
pub use ideal::{elimination_ideal, finite_over_kept_vars, ideal_membership, krull_dimension, Ideal};
