use std::fmt;

use serde::Serialize;

use super::assembly::{effectivity, euler_orbifold_global, pair_kd_squared};
use super::types::PairDescription;
use crate::error::Error;
use crate::localsing::{lc_status, Exactness, LcStatus, LocalSingularity};
use crate::ratkit::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The inequality holds with exact values on both sides.
    Proved,
    /// The inequality holds for an upper bound of the true left side; the
    /// theorem supplies the other direction.
    ConsistentUpperBound,
    /// Preconditions held and the inequality fails. For a theorem this
    /// means bad input or a bug.
    Violation,
    PreconditionFailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Proved => "proved",
            Verdict::ConsistentUpperBound => "consistent-upper-bound",
            Verdict::Violation => "violation",
            Verdict::PreconditionFailed => "precondition-failed",
        })
    }
}

fn preconditions(pair: &PairDescription) -> Vec<String> {
    let mut failed = Vec::new();
    for p in &pair.points {
        if lc_status(&p.local) == LcStatus::NotLc {
            failed.push(format!("pair is not log canonical at {:?}", p.id));
        }
    }
    if !effectivity(pair) {
        failed.push("no multiple of K+D is known to be effective".to_string());
    }
    failed
}

/// `3 e_orb(X, D)` against `(K + D)^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BmyReport {
    pub e_orb: Rational,
    pub lhs: Rational,
    pub lhs_kind: Exactness,
    pub rhs: Rational,
    pub verdict: Verdict,
    /// Exact equality; `K + D` is then nef (asserted, not checked here).
    pub equality_flag: bool,
    /// `lhs - rhs`.
    pub slack: Rational,
    pub failed_preconditions: Vec<String>,
}

pub fn check_bmy(pair: &PairDescription) -> Result<BmyReport, Error> {
    let e = euler_orbifold_global(pair)?;
    let lhs = Rational::from(3) * &e.value;
    let rhs = pair_kd_squared(pair)?;
    let failed = preconditions(pair);
    let holds = lhs >= rhs;
    let verdict = match (failed.is_empty(), holds, e.kind) {
        (false, _, _) => Verdict::PreconditionFailed,
        (true, true, Exactness::Exact) => Verdict::Proved,
        (true, true, Exactness::UpperBound) => Verdict::ConsistentUpperBound,
        (true, false, _) => Verdict::Violation,
    };
    Ok(BmyReport {
        slack: &lhs - &rhs,
        equality_flag: e.kind == Exactness::Exact && lhs == rhs,
        e_orb: e.value,
        lhs,
        lhs_kind: e.kind,
        rhs,
        verdict,
        failed_preconditions: failed,
    })
}

/// `(K + D)^2` against
/// `3 (c_2 + sum a_i (2 g_i - 2) + sum_P (r_P - m_P + m_P^2 / 4))`
/// on a smooth surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityBoundReport {
    pub lhs: Rational,
    pub rhs: Rational,
    /// `rhs - lhs`.
    pub slack: Rational,
    pub verdict: Verdict,
    pub equality_flag: bool,
    pub failed_preconditions: Vec<String>,
}

fn point_multiplicity(pair: &PairDescription, p: &super::types::SingularPointData) -> Result<Rational, Error> {
    if let Some(m) = &p.m_p {
        return Ok(m.clone());
    }
    match &p.local {
        // smooth branches: each contributes its coefficient once
        LocalSingularity::Ordinary { .. } => {
            p.incident.iter().map(|(cid, r)| Ok(&pair.component(cid)?.a * Rational::from(*r))).sum()
        }
        _ => Err(Error::InvalidInput(format!("point {:?}: m_P is required for non-ordinary points", p.id))),
    }
}

fn is_support_singular(p: &super::types::SingularPointData) -> bool {
    if p.incident.is_empty() {
        return false;
    }
    let branches: u64 = p.incident.iter().map(|(_, r)| r).sum();
    !(branches == 1 && matches!(p.local, LocalSingularity::Ordinary { .. }))
}

pub fn check_multiplicity_bound(pair: &PairDescription) -> Result<MultiplicityBoundReport, Error> {
    pair.validate()?;
    let lhs = pair_kd_squared(pair)?;
    let mut inner = Rational::from(pair.surface.e_top);
    for c in &pair.components {
        inner += &c.a * (Rational::from(2) * Rational::from(c.genus) - Rational::from(2));
    }
    for p in pair.points.iter().filter(|p| is_support_singular(p)) {
        let m = point_multiplicity(pair, p)?;
        let r: Rational = p
            .incident
            .iter()
            .map(|(cid, branches)| Ok(&pair.component(cid)?.a * Rational::from(*branches)))
            .sum::<Result<Rational, Error>>()?;
        inner += r - &m + m.square() / Rational::from(4);
    }
    let rhs = Rational::from(3) * inner;
    let failed = preconditions(pair);
    let verdict = match (failed.is_empty(), lhs <= rhs) {
        (false, _) => Verdict::PreconditionFailed,
        (true, true) => Verdict::Proved,
        (true, false) => Verdict::Violation,
    };
    Ok(MultiplicityBoundReport {
        slack: &rhs - &lhs,
        equality_flag: lhs == rhs,
        lhs,
        rhs,
        verdict,
        failed_preconditions: failed,
    })
}

/// Largest `K·C` allowed for a curve of geometric genus `g` on a surface
/// with `K^2 = 3 c_2 > 0`: `3(g - 1) + (3/2) sum (r_P - m_P)`.
///
/// `points` holds `(r_P, m_P)`, branch count and multiplicity.
pub fn max_curve_canonical_degree(g: u64, points: &[(u64, u64)]) -> Result<Rational, Error> {
    let mut total = Rational::from(3) * (Rational::from(g) - Rational::one());
    for &(r, m) in points {
        if r > m {
            return Err(Error::InvalidInput(format!("r_P = {r} exceeds m_P = {m}")));
        }
        total += Rational::new(3, 2) * (Rational::from(r) - Rational::from(m));
    }
    Ok(total)
}
