//! Exact orbifold Euler numbers of log canonical surface pairs.
//!
//! The crate evaluates local orbifold Euler numbers for ordinary points,
//! cyclic and star-shaped quotient singularities and reduced curve germs,
//! assembles them into the global orbifold Euler number of a projective pair
//! `(X, D)`, and checks the inequality `3 e_orb(X, D) >= (K_X + D)^2` along
//! with its consequences for line arrangements, cuspidal curves and
//! canonical degrees. All arithmetic is exact.
//!
//! ```
//! use orbeuler::localsing::{euler_local, LocalSingularity};
//! use orbeuler::ratkit::q;
//!
//! let triple = LocalSingularity::ordinary(vec![q(1, 2), q(1, 2), q(1, 2)]).unwrap();
//! assert_eq!(euler_local(&triple).unwrap().value, q(1, 16));
//! ```

pub mod appbench;
pub mod error;
pub mod germlab;
pub mod localsing;
pub mod pairspace;
pub mod ratkit;

pub use error::{Error, Result};
pub use ratkit::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rationals.md")]
    mod rationals {}
    #[doc = include_str!("../../../book/src/local.md")]
    mod local {}
    #[doc = include_str!("../../../book/src/germs.md")]
    mod germs {}
    #[doc = include_str!("../../../book/src/global.md")]
    mod global {}
    #[doc = include_str!("../../../book/src/applications.md")]
    mod applications {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
