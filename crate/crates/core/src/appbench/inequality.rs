use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::pairspace::Verdict;
use crate::ratkit::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularPointTerm {
    pub mu: u64,
    pub e_orb: Rational,
}

/// A reduced curve `C` on a smooth surface `X`, weighted by `alpha`. The
/// caller warrants that `(X, alpha C)` is lc and `K + alpha C` is
/// pseudoeffective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularPointQuery {
    pub c1_sq: i64,
    pub c2: i64,
    pub alpha: Rational,
    pub k_dot_c: i64,
    pub c_sq: i64,
    #[serde(default)]
    pub points: Vec<SingularPointTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPointReport {
    pub lhs: Rational,
    pub rhs: Rational,
    /// `rhs - lhs`.
    pub slack: Rational,
    pub verdict: Verdict,
    pub equality: bool,
}

/// `sum_P 3(alpha(mu_P - 1) + 1 - e_orb(P)) <= 3c_2 - c_1^2 + alpha K·C + (3 alpha - alpha^2) C^2`.
pub fn check_singular_point_inequality(query: &SingularPointQuery) -> Result<SingularPointReport, Error> {
    let alpha = &query.alpha;
    if !alpha.is_unit_interval() {
        return Err(Error::CoefficientOutOfRange { field: "alpha".into(), value: alpha.to_string() });
    }
    let three = Rational::from(3);
    let mut lhs = Rational::zero();
    for (idx, p) in query.points.iter().enumerate() {
        if p.mu == 0 {
            return Err(Error::InvalidInput(format!("points[{idx}]: mu must be positive at a singular point")));
        }
        lhs += &three * (alpha * (Rational::from(p.mu) - Rational::one()) + Rational::one() - &p.e_orb);
    }
    let rhs = &three * Rational::from(query.c2) - Rational::from(query.c1_sq)
        + alpha * Rational::from(query.k_dot_c)
        + (&three * alpha - alpha.square()) * Rational::from(query.c_sq);
    let verdict = if lhs <= rhs { Verdict::Proved } else { Verdict::Violation };
    Ok(SingularPointReport { slack: &rhs - &lhs, equality: lhs == rhs, lhs, rhs, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratkit::q;

    fn sextic(points: Vec<SingularPointTerm>) -> SingularPointQuery {
        SingularPointQuery { c1_sq: 9, c2: 3, alpha: q(1, 2), k_dot_c: -18, c_sq: 36, points }
    }

    #[test]
    fn nine_cusped_sextic_is_sharp() {
        let r = check_singular_point_inequality(&sextic(vec![SingularPointTerm { mu: 2, e_orb: q(1, 6) }; 9])).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(36, 1), q(36, 1)));
        assert!(r.equality);
        assert_eq!(r.verdict, Verdict::Proved);
    }

    #[test]
    fn empty_and_node() {
        let r = check_singular_point_inequality(&sextic(vec![])).unwrap();
        assert_eq!(r.lhs, q(0, 1));
        assert_eq!(r.verdict, Verdict::Proved);
        let r = check_singular_point_inequality(&sextic(vec![SingularPointTerm { mu: 1, e_orb: q(1, 4) }])).unwrap();
        assert_eq!(r.lhs, q(9, 4));
    }

    #[test]
    fn ten_cusps_violate() {
        let r =
            check_singular_point_inequality(&sextic(vec![SingularPointTerm { mu: 2, e_orb: q(1, 6) }; 10])).unwrap();
        assert_eq!(r.verdict, Verdict::Violation);
    }
}
