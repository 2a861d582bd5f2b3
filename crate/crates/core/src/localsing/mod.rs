//! Local orbifold Euler numbers for the singularity classes with closed forms.
//!
//! Four classes are covered: ordinary points (smooth transverse branches),
//! cyclic quotients `<n,q; *_1, *_2>`, star-shaped quotients
//! `<b; <n_i,q_i; *_i>>` and reduced curve germs given through their Milnor
//! and Tjurina numbers.

mod ordinary;
mod quotient;
mod sbar;
mod types;

pub use ordinary::euler_ordinary;
pub use quotient::{
    cover_degree, euler_cyclic, euler_star, is_polyhedral, star_invariants, validate_star, MAX_MULTIPLIER,
};
pub use sbar::{sbar_oracle, sbar_record};
pub(crate) use types::check_coefficient;
pub use types::{
    CoverDegreeRecord, EulerValue, Exactness, LcStatus, LocalSingularity, SbarRecord, StarArm, StarInvariants,
    StarValidation,
};

use crate::error::Error;
use crate::ratkit::Rational;

pub fn lc_status(s: &LocalSingularity) -> LcStatus {
    match s {
        LocalSingularity::Ordinary { coeffs } => {
            if coeffs.iter().sum::<Rational>() <= 2 {
                LcStatus::Lc
            } else {
                LcStatus::NotLc
            }
        }
        LocalSingularity::CyclicQuotient { .. } => LcStatus::Lc,
        LocalSingularity::StarQuotient { b, arms } => quotient::star_lc_status(*b, arms),
        // A reduced curve with coefficient one is lc exactly when it is smooth
        // or a node.
        LocalSingularity::ReducedGerm { mu, .. } => {
            if *mu <= 1 {
                LcStatus::Lc
            } else {
                LcStatus::NotLc
            }
        }
    }
}

/// Evaluates the local orbifold Euler number of any supported germ.
pub fn euler_local(s: &LocalSingularity) -> Result<EulerValue, Error> {
    s.validate()?;
    match s {
        LocalSingularity::Ordinary { coeffs } => euler_ordinary(coeffs),
        LocalSingularity::CyclicQuotient { chain, d1, d2 } => euler_cyclic(chain, d1, d2),
        LocalSingularity::StarQuotient { b, arms } => euler_star(*b, arms),
        LocalSingularity::ReducedGerm { mu, tau } => {
            Ok(EulerValue { value: Rational::from(mu - tau), kind: Exactness::Exact, lc: lc_status(s) })
        }
    }
}
