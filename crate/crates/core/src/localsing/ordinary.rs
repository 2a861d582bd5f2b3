use super::types::{check_coefficient, EulerValue};
use crate::error::Error;
use crate::ratkit::Rational;

/// Local orbifold Euler number of `sum a_i L_i` for distinct lines through
/// the origin of `C^2` (more generally, smooth pairwise transverse branches).
///
/// With `a = sum a_i` and `a_n` the largest coefficient:
///
/// * `a > 2`: not lc, value `0`;
/// * `2 a_n >= a`: `(1 - a + a_n)(1 - a_n)`;
/// * otherwise `(1 - a/2)^2`, exact when at most three coefficients are
///   positive and only an upper bound beyond that.
///
/// Zero coefficients are lines that do not belong to the divisor, so they
/// are not counted toward the three-line exactness threshold.
pub fn euler_ordinary(coeffs: &[Rational]) -> Result<EulerValue, Error> {
    if coeffs.is_empty() {
        return Err(Error::InvalidInput("ordinary point needs at least one branch".into()));
    }
    for c in coeffs {
        check_coefficient("coeffs", c)?;
    }
    let total: Rational = coeffs.iter().sum();
    if total > 2 {
        return Ok(EulerValue::not_lc());
    }
    let largest = coeffs.iter().max().cloned().unwrap_or_default();
    let one = Rational::one();
    if &largest * Rational::from(2) >= total {
        let value = (&one - &total + &largest) * (&one - &largest);
        return Ok(EulerValue::exact(value));
    }
    let value = (&one - &total / Rational::from(2)).square();
    let positive = coeffs.iter().filter(|c| c.is_positive()).count();
    if positive <= 3 {
        Ok(EulerValue::exact(value))
    } else {
        Ok(EulerValue::upper_bound(value))
    }
}
