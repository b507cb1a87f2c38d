//! Exact computations with real-algebraic subvarieties of ℂⁿ: complexifications,
//! Segre varieties, intrinsic complexifications and images under polynomial
//! maps, all over the Gaussian rationals.
//!
//! ```
//! use segre_toolkit::variety::{Point, RealVariety};
//! use segre_toolkit::segre::classify_point;
//!
//! let cone = RealVariety::parse("vars: z, w\neq: z*conj(z) = w*conj(w)").unwrap();
//! let origin = classify_point(&cone, &Point::origin(2)).unwrap();
//! assert_eq!((origin.segre_dim, origin.degenerate), (2, true));
//! ```

pub mod cli;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod intrinsic;
pub mod linalg;
pub mod polyring;
pub mod pushforward;
pub mod segre;
pub mod variety;

pub use coeff::GaussianRational;
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use polyring::{Monomial, MonomialOrder, Polynomial, Subst, VarContext};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/input-format.md")]
    mod input_format {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/complexification.md")]
    mod complexification {}
    #[doc = include_str!("../../../book/src/segre.md")]
    mod segre {}
    #[doc = include_str!("../../../book/src/intrinsic.md")]
    mod intrinsic {}
    #[doc = include_str!("../../../book/src/pushforward.md")]
    mod pushforward {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
