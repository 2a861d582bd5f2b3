use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::localsing::{check_coefficient, LocalSingularity};
use crate::ratkit::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceMode {
    /// The projective plane; intersection numbers come from degrees.
    Plane,
    /// Any projective surface; pairings are supplied explicitly.
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSurface")]
pub struct SurfaceData {
    pub mode: SurfaceMode,
    /// Topological Euler number, `c_2` for a smooth surface.
    pub e_top: i64,
    /// `K^2`.
    pub c1_sq: i64,
}

impl SurfaceData {
    pub fn plane() -> Self {
        SurfaceData { mode: SurfaceMode::Plane, e_top: 3, c1_sq: 9 }
    }

    pub fn generic(e_top: i64, c1_sq: i64) -> Self {
        SurfaceData { mode: SurfaceMode::Generic, e_top, c1_sq }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    mode: SurfaceMode,
    e_top: Option<i64>,
    c1_sq: Option<i64>,
}

impl TryFrom<RawSurface> for SurfaceData {
    type Error = Error;

    fn try_from(raw: RawSurface) -> Result<Self, Error> {
        match raw.mode {
            SurfaceMode::Plane => {
                if raw.e_top.is_some_and(|e| e != 3) || raw.c1_sq.is_some_and(|c| c != 9) {
                    return Err(Error::InvalidInput("surface: plane mode fixes e_top = 3 and c1_sq = 9".into()));
                }
                Ok(SurfaceData::plane())
            }
            SurfaceMode::Generic => {
                let e_top = raw.e_top.ok_or_else(|| Error::InvalidInput("surface.e_top is required".into()))?;
                let c1_sq = raw.c1_sq.ok_or_else(|| Error::InvalidInput("surface.c1_sq is required".into()))?;
                Ok(SurfaceData::generic(e_top, c1_sq))
            }
        }
    }
}

/// Intersection data of one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Intersections {
    /// Degree of a plane curve.
    Degree(u64),
    /// `"K"` maps to `K·D_i`; a component id maps to `D_i·D_j`
    /// (the own id gives the self-intersection).
    Pairings(BTreeMap<String, i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentData {
    pub id: String,
    pub a: Rational,
    /// Geometric genus.
    pub genus: u64,
    #[serde(flatten)]
    pub intersections: Intersections,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularPointData {
    pub id: String,
    pub local: LocalSingularity,
    /// `(component id, number of analytic branches of that component here)`.
    #[serde(default)]
    pub incident: Vec<(String, u64)>,
    /// Coefficient-weighted multiplicity of `D` at the point. Derived for
    /// ordinary points when omitted.
    #[serde(rename = "m_P", default, skip_serializing_if = "Option::is_none")]
    pub m_p: Option<Rational>,
}

/// A projective surface with boundary `D = sum a_i D_i` and its special
/// points. The point list is trusted to contain every point of `Sing(X, D)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDescription {
    pub surface: SurfaceData,
    #[serde(default)]
    pub components: Vec<ComponentData>,
    #[serde(default)]
    pub points: Vec<SingularPointData>,
    /// User assertion that a multiple of `K + D` is effective. Ignored in
    /// plane mode, where the total degree decides it.
    #[serde(default)]
    pub effective: bool,
}

impl PairDescription {
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let pair: PairDescription = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        pair.validate()?;
        Ok(pair)
    }

    pub fn component(&self, id: &str) -> Result<&ComponentData, Error> {
        self.components.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    pub fn validate(&self) -> Result<(), Error> {
        let mut ids = BTreeSet::new();
        for c in &self.components {
            if !ids.insert(c.id.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate component id {:?}", c.id)));
            }
            check_coefficient(&format!("components[{}].a", c.id), &c.a)?;
            match (&c.intersections, self.surface.mode) {
                (Intersections::Degree(0), _) => {
                    return Err(Error::InvalidInput(format!("component {:?} has degree 0", c.id)))
                }
                (Intersections::Degree(_), SurfaceMode::Plane) | (Intersections::Pairings(_), SurfaceMode::Generic) => {
                }
                (Intersections::Degree(_), SurfaceMode::Generic) => {
                    return Err(Error::InvalidInput(format!("component {:?}: generic mode needs pairings", c.id)))
                }
                (Intersections::Pairings(_), SurfaceMode::Plane) => {
                    return Err(Error::InvalidInput(format!("component {:?}: plane mode needs a degree", c.id)))
                }
            }
        }
        let mut point_ids = BTreeSet::new();
        for p in &self.points {
            if !point_ids.insert(p.id.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate point id {:?}", p.id)));
            }
            p.local.validate()?;
            let mut seen = BTreeSet::new();
            for (cid, r) in &p.incident {
                self.component(cid)?;
                if *r == 0 {
                    return Err(Error::InvalidInput(format!("point {:?}: zero branches of {cid:?}", p.id)));
                }
                if !seen.insert(cid.as_str()) {
                    return Err(Error::InvalidInput(format!("point {:?}: {cid:?} listed twice", p.id)));
                }
            }
            if let Some(m) = &p.m_p {
                if m.is_negative() {
                    return Err(Error::InvalidInput(format!("point {:?}: negative m_P", p.id)));
                }
            }
            if let LocalSingularity::Ordinary { coeffs } = &p.local {
                if !p.incident.is_empty() {
                    let mut expected: Vec<Rational> = Vec::new();
                    for (cid, r) in &p.incident {
                        let a = &self.component(cid)?.a;
                        expected.extend(std::iter::repeat_n(a.clone(), *r as usize));
                    }
                    let mut given = coeffs.clone();
                    expected.sort();
                    given.sort();
                    if expected != given {
                        return Err(Error::InvalidInput(format!(
                            "point {:?}: ordinary coefficients {given:?} do not match incident branches {expected:?}",
                            p.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Points that look like input mistakes.
    pub fn warnings(&self) -> Vec<String> {
        self.points
            .iter()
            .filter(|p| p.incident.is_empty())
            .map(|p| format!("point {:?} lies on no component of D", p.id))
            .collect()
    }
}
