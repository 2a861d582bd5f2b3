use super::types::{
    check_coefficient, CoverDegreeRecord, EulerValue, LcStatus, StarArm, StarInvariants, StarValidation,
};
use crate::error::Error;
use crate::ratkit::{ChainDescriptor, Rational};

/// Largest multiplier tried when matching arms against a polyhedral triple.
pub const MAX_MULTIPLIER: u64 = 60;

/// `(1 - d1)(1 - d2) / n`, independent of `q`.
pub fn euler_cyclic(chain: &ChainDescriptor, d1: &Rational, d2: &Rational) -> Result<EulerValue, Error> {
    check_coefficient("d1", d1)?;
    check_coefficient("d2", d2)?;
    let one = Rational::one();
    let value = (&one - d1) * (&one - d2) / Rational::from(chain.order());
    Ok(EulerValue::exact(value))
}

pub fn star_invariants(b: u64, arms: &[StarArm; 3]) -> StarInvariants {
    let one = Rational::one();
    let b0 = Rational::from(b) - arms.iter().map(|a| Rational::new(a.q(), a.n())).sum::<Rational>();
    let weights: Vec<Rational> = arms.iter().map(|a| (&one - &a.d) / Rational::from(a.n())).collect();
    let alpha = weights.iter().sum();
    let beta = weights.into_iter().min().expect("three arms");
    StarInvariants { b0, alpha, beta }
}

pub fn star_lc_status(b: u64, arms: &[StarArm; 3]) -> LcStatus {
    if star_invariants(b, arms).alpha >= 1 {
        LcStatus::Lc
    } else {
        LcStatus::NotLc
    }
}

/// `(2,2,n)` for `n >= 2`, `(2,3,3)`, `(2,3,4)` or `(2,3,5)`, given sorted input.
pub fn is_polyhedral(sorted: [u64; 3]) -> bool {
    matches!(sorted, [2, 2, n] if n >= 2) || matches!(sorted, [2, 3, 3..=5])
}

/// Computes the star invariants and finds multipliers `m_i` making
/// `(n_1 m_1, n_2 m_2, n_3 m_3)` a polyhedral triple.
///
/// The search runs over `(m_1, m_2, m_3)` in lexicographic order and returns
/// the first hit. Fails with [`Error::NotQuotient`] when `b0 <= 0` or no
/// assignment exists.
pub fn validate_star(b: u64, arms: &[StarArm; 3]) -> Result<StarValidation, Error> {
    if b == 0 {
        return Err(Error::InvalidInput("star center needs b >= 1".into()));
    }
    let invariants = star_invariants(b, arms);
    if !invariants.b0.is_positive() {
        return Err(Error::NotQuotient(format!("b0 = {} is not positive", invariants.b0)));
    }
    let ns = [arms[0].n(), arms[1].n(), arms[2].n()];
    let (triple, multipliers) = find_polyhedral(ns)
        .ok_or_else(|| Error::NotQuotient(format!("arms of orders {ns:?} admit no polyhedral triple")))?;
    Ok(StarValidation { invariants, triple, multipliers })
}

fn find_polyhedral(ns: [u64; 3]) -> Option<([u64; 3], [u64; 3])> {
    for m1 in 1..=MAX_MULTIPLIER {
        for m2 in 1..=MAX_MULTIPLIER {
            for m3 in 1..=MAX_MULTIPLIER {
                let (Some(p1), Some(p2), Some(p3)) =
                    (ns[0].checked_mul(m1), ns[1].checked_mul(m2), ns[2].checked_mul(m3))
                else {
                    continue;
                };
                let mut sorted = [p1, p2, p3];
                sorted.sort_unstable();
                if is_polyhedral(sorted) {
                    return Some((sorted, [m1, m2, m3]));
                }
            }
        }
    }
    None
}

/// `deg = 4 s^2 b0` where `1 + 1/s = 1/p_1 + 1/p_2 + 1/p_3`.
pub fn cover_degree(b0: &Rational, triple: [u64; 3]) -> Result<CoverDegreeRecord, Error> {
    if triple.contains(&0) {
        return Err(Error::InvalidInput("triple entries must be positive".into()));
    }
    if !b0.is_positive() {
        return Err(Error::InvalidInput(format!("b0 = {b0} must be positive")));
    }
    let excess: Rational = triple.iter().map(|&p| Rational::new(1, p)).sum::<Rational>() - Rational::one();
    if !excess.is_positive() {
        return Err(Error::InvalidInput(format!("triple {triple:?} is not spherical")));
    }
    let s = excess.recip();
    let degree = Rational::from(4) * s.square() * b0;
    Ok(CoverDegreeRecord { s, degree, triple })
}

/// Local orbifold Euler number of a star-shaped quotient germ.
///
/// With `(b0, alpha, beta)` from [`star_invariants`]:
/// `0` if `alpha < 1`, `(alpha-1)^2 / (4 b0)` if `alpha < 2 beta + 1`,
/// and `(alpha - 1 - beta) beta / b0` otherwise.
pub fn euler_star(b: u64, arms: &[StarArm; 3]) -> Result<EulerValue, Error> {
    for a in arms {
        check_coefficient("arm coefficient", &a.d)?;
    }
    let StarValidation { invariants: StarInvariants { b0, alpha, beta }, .. } = validate_star(b, arms)?;
    let one = Rational::one();
    if alpha < one {
        return Ok(EulerValue::not_lc());
    }
    let value = if alpha < Rational::from(2) * &beta + &one {
        (&alpha - &one).square() / (Rational::from(4) * &b0)
    } else {
        (&alpha - &one - &beta) * &beta / &b0
    };
    Ok(EulerValue::exact(value))
}
