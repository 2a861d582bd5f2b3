use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ratkit::{ChainDescriptor, Rational};

/// Whether a reported value is the local orbifold Euler number itself or
/// only an upper bound for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    UpperBound,
}

impl Exactness {
    /// Upper bounds absorb exact values under addition of positive terms.
    pub fn combine(self, other: Exactness) -> Exactness {
        if self == Exactness::UpperBound || other == Exactness::UpperBound {
            Exactness::UpperBound
        } else {
            Exactness::Exact
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::UpperBound => "upper-bound",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LcStatus {
    Lc,
    NotLc,
}

impl fmt::Display for LcStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LcStatus::Lc => "lc",
            LcStatus::NotLc => "not-lc",
        })
    }
}

/// A local orbifold Euler number together with how much we know about it.
///
/// The closed-form classes report `0` outside the log canonical range.
/// Reduced germs carry `mu - tau`, which holds whether or not the germ is lc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerValue {
    pub value: Rational,
    pub kind: Exactness,
    pub lc: LcStatus,
}

impl EulerValue {
    pub fn exact(value: Rational) -> Self {
        EulerValue { value, kind: Exactness::Exact, lc: LcStatus::Lc }
    }

    pub fn upper_bound(value: Rational) -> Self {
        EulerValue { value, kind: Exactness::UpperBound, lc: LcStatus::Lc }
    }

    pub fn not_lc() -> Self {
        EulerValue { value: Rational::zero(), kind: Exactness::Exact, lc: LcStatus::NotLc }
    }
}

/// One arm `<n_i, q_i; d_i>` of a star-shaped resolution graph: a
/// Hirzebruch–Jung chain ending in a boundary curve with coefficient `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarArm {
    pub chain: ChainDescriptor,
    pub d: Rational,
}

impl StarArm {
    pub fn new(n: u64, q: u64, d: Rational) -> Result<Self, Error> {
        check_coefficient("arm coefficient", &d)?;
        Ok(StarArm { chain: ChainDescriptor::new(n, q)?, d })
    }

    pub fn n(&self) -> u64 {
        self.chain.order()
    }

    pub fn q(&self) -> u64 {
        self.chain.q()
    }
}

/// A pair germ `(X, D, x)` in one of the four classes with closed-form
/// local orbifold Euler numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLocal", into = "RawLocal")]
pub enum LocalSingularity {
    /// Distinct smooth, pairwise transverse branches through a smooth point.
    /// A single branch is a smooth point of the support.
    Ordinary { coeffs: Vec<Rational> },
    /// Minimal log resolution of type `<n, q; *_1, *_2>`.
    CyclicQuotient { chain: ChainDescriptor, d1: Rational, d2: Rational },
    /// Minimal log resolution of type `<b; <n_1,q_1;*_1>, <n_2,q_2;*_2>, <n_3,q_3;*_3>>`.
    StarQuotient { b: u64, arms: [StarArm; 3] },
    /// A reduced curve germ with coefficient one, known through `mu` and `tau`.
    ReducedGerm { mu: u64, tau: u64 },
}

pub(crate) fn check_coefficient(field: &str, value: &Rational) -> Result<(), Error> {
    if value.is_unit_interval() {
        Ok(())
    } else {
        Err(Error::CoefficientOutOfRange { field: field.to_string(), value: value.to_string() })
    }
}

impl LocalSingularity {
    pub fn ordinary(coeffs: Vec<Rational>) -> Result<Self, Error> {
        let s = LocalSingularity::Ordinary { coeffs };
        s.validate()?;
        Ok(s)
    }

    pub fn cyclic(n: u64, q: u64, d1: Rational, d2: Rational) -> Result<Self, Error> {
        let s = LocalSingularity::CyclicQuotient { chain: ChainDescriptor::new(n, q)?, d1, d2 };
        s.validate()?;
        Ok(s)
    }

    pub fn star(b: u64, arms: [(u64, u64, Rational); 3]) -> Result<Self, Error> {
        let [a1, a2, a3] = arms;
        let arms = [StarArm::new(a1.0, a1.1, a1.2)?, StarArm::new(a2.0, a2.1, a2.2)?, StarArm::new(a3.0, a3.1, a3.2)?];
        let s = LocalSingularity::StarQuotient { b, arms };
        s.validate()?;
        Ok(s)
    }

    pub fn reduced_germ(mu: u64, tau: u64) -> Result<Self, Error> {
        let s = LocalSingularity::ReducedGerm { mu, tau };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            LocalSingularity::Ordinary { coeffs } => {
                if coeffs.is_empty() {
                    return Err(Error::InvalidInput("ordinary point needs at least one branch".into()));
                }
                coeffs.iter().try_for_each(|c| check_coefficient("coeffs", c))
            }
            LocalSingularity::CyclicQuotient { d1, d2, .. } => {
                check_coefficient("d1", d1)?;
                check_coefficient("d2", d2)
            }
            LocalSingularity::StarQuotient { b, arms } => {
                if *b == 0 {
                    return Err(Error::InvalidInput("star center needs b >= 1".into()));
                }
                arms.iter().try_for_each(|a| check_coefficient("arm coefficient", &a.d))
            }
            LocalSingularity::ReducedGerm { mu, tau } => {
                if mu < tau {
                    return Err(Error::InvalidInput(format!("mu = {mu} < tau = {tau}")));
                }
                Ok(())
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawLocal {
    Ordinary { coeffs: Vec<Rational> },
    Cyclic { n: u64, q: u64, d1: Rational, d2: Rational },
    Star { b: u64, arms: Vec<(u64, u64, Rational)> },
    GermMuTau { mu: u64, tau: u64 },
}

impl TryFrom<RawLocal> for LocalSingularity {
    type Error = Error;

    fn try_from(raw: RawLocal) -> Result<Self, Error> {
        match raw {
            RawLocal::Ordinary { coeffs } => LocalSingularity::ordinary(coeffs),
            RawLocal::Cyclic { n: 1, q: 1, d1, d2 } => {
                let s = LocalSingularity::CyclicQuotient { chain: ChainDescriptor::MinusOneCurve, d1, d2 };
                s.validate()?;
                Ok(s)
            }
            RawLocal::Cyclic { n, q, d1, d2 } => LocalSingularity::cyclic(n, q, d1, d2),
            RawLocal::Star { b, arms } => {
                let arms: [(u64, u64, Rational); 3] = arms
                    .try_into()
                    .map_err(|v: Vec<_>| Error::InvalidInput(format!("star needs exactly 3 arms, got {}", v.len())))?;
                LocalSingularity::star(b, arms)
            }
            RawLocal::GermMuTau { mu, tau } => LocalSingularity::reduced_germ(mu, tau),
        }
    }
}

impl From<LocalSingularity> for RawLocal {
    fn from(s: LocalSingularity) -> Self {
        match s {
            LocalSingularity::Ordinary { coeffs } => RawLocal::Ordinary { coeffs },
            LocalSingularity::CyclicQuotient { chain, d1, d2 } => {
                RawLocal::Cyclic { n: chain.order(), q: chain.q(), d1, d2 }
            }
            LocalSingularity::StarQuotient { b, arms } => {
                RawLocal::Star { b, arms: arms.into_iter().map(|a| (a.n(), a.q(), a.d)).collect() }
            }
            LocalSingularity::ReducedGerm { mu, tau } => RawLocal::GermMuTau { mu, tau },
        }
    }
}

/// `b0 = b - sum q_i/n_i`, `alpha = sum (1-d_i)/n_i`, `beta = min (1-d_i)/n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarInvariants {
    pub b0: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

/// Result of locating a star-shaped graph among the quotient singularities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarValidation {
    pub invariants: StarInvariants,
    /// Sorted polyhedral triple `(p_1, p_2, p_3)`.
    pub triple: [u64; 3],
    /// Multipliers `m_i` with `p_i = n_i m_i`, in arm order.
    pub multipliers: [u64; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverDegreeRecord {
    pub s: Rational,
    pub degree: Rational,
    pub triple: [u64; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SbarRecord {
    pub n: u64,
    pub l: [i64; 3],
    pub e: i64,
    pub p: i64,
    pub sbar: Rational,
}
