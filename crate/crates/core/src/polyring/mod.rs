//! Sparse multivariate polynomials over ℚ(i).

mod context;
mod monomial;
mod order;
pub mod parse;
mod poly;

pub use context::{Slot, VarContext, TWIN_PREFIX};
pub(crate) use context::is_identifier;
pub use monomial::{Monomial, MAX_DEGREE};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Subst};
