use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ratkit::{rat_ceil, serialize_display, Rational};

/// A line arrangement in the plane summarized by its `t_r` vector: `t[r]`
/// points lie on exactly `r` of the `k` lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementData {
    pub k: u64,
    pub t: BTreeMap<u64, u64>,
}

impl ArrangementData {
    pub fn new(k: u64, t: impl IntoIterator<Item = (u64, u64)>) -> Self {
        ArrangementData { k, t: t.into_iter().collect() }
    }

    /// Checks `sum_r t_r r (r - 1) = k (k - 1)`: every pair of lines meets
    /// exactly once.
    pub fn validate(&self) -> Result<(), Error> {
        if self.k == 0 {
            return Err(Error::InvalidArrangement("k must be positive".into()));
        }
        if let Some(r) = self.t.keys().find(|&&r| r < 2) {
            return Err(Error::InvalidArrangement(format!("t_{r}: multiplicities start at r = 2")));
        }
        let pairs: BigInt = self.t.iter().map(|(&r, &t)| BigInt::from(t) * r * (r - 1)).sum();
        let expected = BigInt::from(self.k) * (self.k - 1);
        if pairs != expected {
            return Err(Error::InvalidArrangement(format!("sum t_r r(r-1) = {pairs} but k(k-1) = {expected}")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrangementStatus {
    Holds,
    /// Some point lies on more than `2k/3` lines.
    HypothesisNotMet,
    /// Hypothesis met and an inequality fails; impossible for a realizable
    /// arrangement.
    Violation,
}

impl fmt::Display for ArrangementStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrangementStatus::Holds => "holds",
            ArrangementStatus::HypothesisNotMet => "hypothesis-not-met",
            ArrangementStatus::Violation => "violation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityLine {
    #[serde(serialize_with = "serialize_display")]
    pub sum: BigInt,
    #[serde(serialize_with = "serialize_display")]
    pub bound: BigInt,
    /// `sum - bound`.
    #[serde(serialize_with = "serialize_display")]
    pub slack: BigInt,
    pub equality: bool,
}

impl InequalityLine {
    fn new(sum: BigInt, bound: BigInt) -> Self {
        InequalityLine { slack: &sum - &bound, equality: sum == bound, sum, bound }
    }

    pub fn holds(&self) -> bool {
        !(self.slack < BigInt::zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementReport {
    pub status: ArrangementStatus,
    /// Multiplicities `r > 2k/3` that occur.
    pub large_pencils: Vec<u64>,
    /// `sum r t_r >= ceil(k^2/3 + k)`.
    pub linear: InequalityLine,
    /// `sum r^2 t_r >= ceil(4k^2/3)`.
    pub quadratic: InequalityLine,
}

/// Checks the two lower bounds on `sum r t_r` and `sum r^2 t_r` valid for
/// arrangements without points of multiplicity above `2k/3`.
pub fn check_arrangement(a: &ArrangementData) -> Result<ArrangementReport, Error> {
    a.validate()?;
    let k = Rational::from(a.k);
    let large_pencils: Vec<u64> =
        a.t.iter().filter(|&(&r, &t)| t > 0 && BigInt::from(3) * r > BigInt::from(2) * a.k).map(|(&r, _)| r).collect();
    let sum_rt: BigInt = a.t.iter().map(|(&r, &t)| BigInt::from(r) * t).sum();
    let sum_r2t: BigInt = a.t.iter().map(|(&r, &t)| BigInt::from(r) * r * t).sum();
    let linear = InequalityLine::new(sum_rt, rat_ceil(&(k.square() / Rational::from(3) + &k)));
    let quadratic = InequalityLine::new(sum_r2t, rat_ceil(&(Rational::new(4, 3) * k.square())));
    let status = if !large_pencils.is_empty() {
        ArrangementStatus::HypothesisNotMet
    } else if linear.holds() && quadratic.holds() {
        ArrangementStatus::Holds
    } else {
        ArrangementStatus::Violation
    };
    Ok(ArrangementReport { status, large_pencils, linear, quadratic })
}

/// The reflection arrangement with `k = 3m`, `t_3 = m^2`, `t_m = 3`
/// (merged into `t_3` when `m = 3`).
pub fn fermat_arrangement(m: u64) -> ArrangementData {
    let mut t = BTreeMap::new();
    *t.entry(3).or_insert(0) += m * m;
    *t.entry(m).or_insert(0) += 3;
    ArrangementData { k: 3 * m, t }
}
