//! Milnor and Tjurina numbers of plane curve germs and what they say about
//! the orbifold Euler number of a reduced curve.

mod local_algebra;
mod polynomial;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

pub use local_algebra::{local_dimension, standard_monomials, truncated_dimension};
pub use polynomial::{parse_poly, CurveGerm, Monomial, Poly};

use crate::error::Error;

/// Truncation cap used when the caller has no better estimate.
pub const DEFAULT_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GermInvariants {
    pub mu: u64,
    pub tau: u64,
    /// Truncation degree at which both dimensions were certified.
    pub truncation_used: usize,
}

fn milnor_with_truncation(f: &CurveGerm, cap: usize) -> Result<(u64, usize), Error> {
    if f.is_smooth_at_origin() {
        return Ok((0, 1));
    }
    let p = f.poly();
    let (dim, n) = local_dimension(&[p.d_dx(), p.d_dy()], cap)?;
    Ok((dim as u64, n))
}

fn tjurina_with_truncation(f: &CurveGerm, cap: usize) -> Result<(u64, usize), Error> {
    if f.is_smooth_at_origin() {
        return Ok((0, 1));
    }
    let p = f.poly();
    let (dim, n) = local_dimension(&[p.clone(), p.d_dx(), p.d_dy()], cap)?;
    Ok((dim as u64, n))
}

/// `mu = dim O / (f_x, f_y)`.
pub fn milnor_number(f: &CurveGerm, cap: usize) -> Result<u64, Error> {
    milnor_with_truncation(f, cap).map(|(mu, _)| mu)
}

/// `tau = dim O / (f, f_x, f_y)`.
pub fn tjurina_number(f: &CurveGerm, cap: usize) -> Result<u64, Error> {
    tjurina_with_truncation(f, cap).map(|(tau, _)| tau)
}

pub fn germ_invariants(f: &CurveGerm, cap: usize) -> Result<GermInvariants, Error> {
    let (mu, n_mu) = milnor_with_truncation(f, cap)?;
    let (tau, n_tau) = tjurina_with_truncation(f, cap)?;
    debug_assert!(mu >= tau);
    Ok(GermInvariants { mu, tau, truncation_used: n_mu.max(n_tau) })
}

/// Orbifold Euler number of `(C^2, C)` at the origin, `mu - tau`.
pub fn euler_reduced_germ(f: &CurveGerm, cap: usize) -> Result<u64, Error> {
    let inv = germ_invariants(f, cap)?;
    Ok(inv.mu - inv.tau)
}

/// `c_2` of the reflexive log cotangent sheaf: `c_2(X) + (K+D)D - sum tau`.
pub fn log_chern_c2(c2_surface: i64, kd_dot_d: i64, taus: &[u64]) -> BigInt {
    BigInt::from(c2_surface) + kd_dot_d - taus.iter().map(|&t| BigInt::from(t)).sum::<BigInt>()
}

/// `e_top(X - D) = c_2(X) + (K+D)D - sum mu`.
pub fn euler_top_complement(c2_surface: i64, kd_dot_d: i64, mus: &[u64]) -> BigInt {
    BigInt::from(c2_surface) + kd_dot_d - mus.iter().map(|&m| BigInt::from(m)).sum::<BigInt>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LctVerdict {
    /// Some singularity is not weighted homogeneous, so the logarithmic
    /// comparison theorem fails.
    LctFails,
    /// Necessary condition met; this does not prove the comparison theorem.
    NoObstruction,
}

impl fmt::Display for LctVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LctVerdict::LctFails => "lct-fails",
            LctVerdict::NoObstruction => "no-obstruction",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LctReport {
    #[serde(serialize_with = "crate::ratkit::serialize_display")]
    pub obstruction: BigInt,
    pub verdict: LctVerdict,
}

/// Sums `mu - tau` over the singular points of a curve.
pub fn lct_obstruction(pairs: &[(u64, u64)]) -> Result<LctReport, Error> {
    let mut obstruction = BigInt::from(0);
    for &(mu, tau) in pairs {
        if mu < tau {
            return Err(Error::InvalidInput(format!("mu = {mu} < tau = {tau}")));
        }
        obstruction += mu - tau;
    }
    let verdict = if obstruction > BigInt::from(0) { LctVerdict::LctFails } else { LctVerdict::NoObstruction };
    Ok(LctReport { obstruction, verdict })
}
