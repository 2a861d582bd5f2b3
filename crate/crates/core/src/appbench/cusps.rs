use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::ratkit::Rational;

/// Local orbifold Euler number of `(C^2, alpha C)` at an ordinary cusp:
/// `1 - 2 alpha` up to `1/6`, `(3/2)(alpha - 5/6)^2` up to `5/6`, then `0`.
pub fn cusp_euler(alpha: &Rational) -> Result<Rational, Error> {
    if !alpha.is_unit_interval() {
        return Err(Error::CoefficientOutOfRange { field: "alpha".into(), value: alpha.to_string() });
    }
    let value = if *alpha <= Rational::new(1, 6) {
        Rational::one() - Rational::from(2) * alpha
    } else if *alpha <= Rational::new(5, 6) {
        Rational::new(3, 2) * (alpha - Rational::new(5, 6)).square()
    } else {
        Rational::zero()
    };
    Ok(value)
}

/// Cost of one cusp on the left of the singular-point inequality:
/// `3 (alpha (mu - 1) + 1 - e_orb)` with `mu = 2`.
pub fn cusp_cost(alpha: &Rational) -> Result<Rational, Error> {
    Ok(Rational::from(3) * (alpha + Rational::one() - cusp_euler(alpha)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspBoundQuery {
    pub d: u64,
    pub alpha: Rational,
}

impl CuspBoundQuery {
    pub fn validate(&self) -> Result<(), Error> {
        if !self.alpha.is_positive() || self.alpha > Rational::new(5, 6) {
            return Err(Error::Precondition(format!("alpha = {} must lie in (0, 5/6]", self.alpha)));
        }
        if &self.alpha * Rational::from(self.d) < Rational::from(3) {
            return Err(Error::Precondition(format!(
                "alpha·d = {} < 3, so K + alpha C is not pseudoeffective",
                &self.alpha * Rational::from(self.d)
            )));
        }
        Ok(())
    }
}

/// Largest `s` such that a plane curve of degree `d` with `s` ordinary
/// cusps is compatible with the inequality at `alpha`:
/// `s · cusp_cost(alpha) <= -3 alpha d + (3 alpha - alpha^2) d^2`.
pub fn cusp_count_bound(query: &CuspBoundQuery) -> Result<BigInt, Error> {
    query.validate()?;
    let alpha = &query.alpha;
    let d = Rational::from(query.d);
    let rhs = Rational::from(-3) * alpha * &d + (Rational::from(3) * alpha - alpha.square()) * d.square();
    let s = (rhs / cusp_cost(alpha)?).floor();
    Ok(if s < BigInt::zero() { BigInt::zero() } else { s })
}

/// Asymptotic ratio `s(d)/d^2` allowed by the bound at `alpha`:
/// `(3 alpha - alpha^2) / cusp_cost(alpha)`.
pub fn cusp_ratio(alpha: &Rational) -> Result<Rational, Error> {
    Ok((Rational::from(3) * alpha - alpha.square()) / cusp_cost(alpha)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspRatioOptimum {
    pub alpha_star: Rational,
    pub ratio_star: Rational,
    pub grid_denominator: u64,
    pub probes: u64,
}

/// Minimizes [`cusp_ratio`] over `alpha = j / grid_denominator` in
/// `(1/6, 5/6]`. Every probe is itself a valid bound, so the result is a
/// certified asymptotic bound whatever the grid.
pub fn cusp_ratio_optimize(grid_denominator: u64) -> Result<CuspRatioOptimum, Error> {
    if grid_denominator < 48 {
        return Err(Error::InvalidInput(format!("grid denominator {grid_denominator} < 48")));
    }
    let lo = grid_denominator / 6 + 1;
    let hi = 5 * u128::from(grid_denominator) / 6;
    let mut best: Option<(Rational, Rational)> = None;
    let mut probes = 0;
    for j in u128::from(lo)..=hi {
        let alpha = Rational::new(BigInt::from(j), BigInt::from(grid_denominator));
        let ratio = cusp_ratio(&alpha)?;
        probes += 1;
        if best.as_ref().is_none_or(|(_, r)| ratio < *r) {
            best = Some((alpha, ratio));
        }
    }
    let (alpha_star, ratio_star) = best.expect("grid is nonempty for denominators >= 48");
    Ok(CuspRatioOptimum { alpha_star, ratio_star, grid_denominator, probes })
}

/// Exact comparison of `x` with `(125 + sqrt 73) / 432`, the infimum of
/// [`cusp_ratio`] over `(1/6, 5/6]`, attained at `alpha = (sqrt 73 - 1)/24`.
pub fn compare_with_cusp_infimum(x: &Rational) -> Ordering {
    // x vs (125 + sqrt 73)/432  <=>  432x - 125 vs sqrt 73
    compare_with_sqrt(&(Rational::from(432) * x - Rational::from(125)), 73)
}

/// Exact sign of `y - sqrt(n)`.
pub fn compare_with_sqrt(y: &Rational, n: u64) -> Ordering {
    if y.is_negative() {
        return Ordering::Less;
    }
    y.square().cmp(&Rational::from(n))
}
