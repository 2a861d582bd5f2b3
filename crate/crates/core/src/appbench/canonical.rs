use crate::error::Error;
use crate::ratkit::Rational;

/// Upper bound on `K_S·C` for a curve `C` of geometric genus `g` on a
/// surface of general type with Chern numbers `c1_sq`, `c2`.
///
/// * `ordinary = false` (any curve, needs `c1_sq > 2 c2`):
///   `((3c2 - c1^2)(c1^2 + c2) + max(0, 6(g-1)c2)) / (c1^2 - 2c2)`.
/// * `ordinary = true` (curve with only ordinary singularities, needs
///   `c1_sq > c2`): `(3c2 - c1^2 + max(0, 4g - 4)) / (c1^2 - c2) · c1^2`.
pub fn canonical_degree_bound(c1_sq: i64, c2: i64, g: u64, ordinary: bool) -> Result<Rational, Error> {
    let c1 = Rational::from(c1_sq);
    let c2 = Rational::from(c2);
    let g1 = Rational::from(g) - Rational::one();
    let zero = Rational::zero();
    if ordinary {
        if c1 <= c2 {
            return Err(Error::Precondition(format!("need c1^2 > c2, got {c1} <= {c2}")));
        }
        let num = Rational::from(3) * &c2 - &c1 + (Rational::from(4) * g1).max(zero);
        Ok(num / (&c1 - &c2) * c1)
    } else {
        if c1 <= Rational::from(2) * &c2 {
            return Err(Error::Precondition(format!("need c1^2 > 2 c2, got {c1} <= 2·{c2}")));
        }
        let num = (Rational::from(3) * &c2 - &c1) * (&c1 + &c2) + (Rational::from(6) * g1 * &c2).max(zero);
        Ok(num / (&c1 - Rational::from(2) * &c2))
    }
}
