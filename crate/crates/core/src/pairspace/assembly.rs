use num_bigint::BigInt;

use super::types::{ComponentData, Intersections, PairDescription, SurfaceMode};
use crate::error::Error;
use crate::localsing::{euler_local, EulerValue, Exactness, LcStatus};
use crate::ratkit::Rational;

/// `e_top` of a curve of geometric genus `g` whose singular points have the
/// given branch counts: `2 - 2g - sum (r - 1)`.
pub fn euler_top_curve(g: u64, branch_counts: &[u64]) -> BigInt {
    let drop: BigInt = branch_counts.iter().map(|&r| BigInt::from(r) - 1).sum();
    BigInt::from(2) - BigInt::from(2) * g - drop
}

/// Branch counts of component `id` over all points of the pair.
fn incidences<'a>(pair: &'a PairDescription, id: &'a str) -> impl Iterator<Item = u64> + 'a {
    pair.points.iter().flat_map(move |p| p.incident.iter().filter(move |(c, _)| c == id).map(|(_, r)| *r))
}

pub fn component_euler_top(pair: &PairDescription, c: &ComponentData) -> BigInt {
    let branches: Vec<u64> = incidences(pair, &c.id).collect();
    euler_top_curve(c.genus, &branches)
}

/// Global orbifold Euler number
/// `e_top(X) - sum a_i e_top(D_i - Sing) + sum_x (e_orb(x) - 1)`.
///
/// The result is an upper bound as soon as one local value is.
pub fn euler_orbifold_global(pair: &PairDescription) -> Result<EulerValue, Error> {
    pair.validate()?;
    let mut total = Rational::from(pair.surface.e_top);
    for c in &pair.components {
        let removed = incidences(pair, &c.id).count() as u64;
        let open_part = Rational::from(component_euler_top(pair, c)) - Rational::from(removed);
        total -= &c.a * open_part;
    }
    let mut kind = Exactness::Exact;
    let mut lc = LcStatus::Lc;
    for p in &pair.points {
        let local = euler_local(&p.local)?;
        kind = kind.combine(local.kind);
        if local.lc == LcStatus::NotLc {
            lc = LcStatus::NotLc;
        }
        total += local.value - Rational::one();
    }
    Ok(EulerValue { value: total, kind, lc })
}

fn pairing(i: &ComponentData, j: &ComponentData) -> Result<Rational, Error> {
    let lookup = |c: &ComponentData, key: &str| match &c.intersections {
        Intersections::Pairings(m) => m.get(key).copied(),
        Intersections::Degree(_) => None,
    };
    match (lookup(i, &j.id), lookup(j, &i.id)) {
        (Some(x), Some(y)) if x != y => {
            Err(Error::InvalidInput(format!("{}·{} given as both {x} and {y}", i.id, j.id)))
        }
        (Some(x), _) | (None, Some(x)) => Ok(Rational::from(x)),
        (None, None) => Err(Error::MissingPairing(format!("{}·{}", i.id, j.id))),
    }
}

/// `sum a_i deg D_i` in plane mode.
pub fn total_degree(pair: &PairDescription) -> Option<Rational> {
    pair.components
        .iter()
        .map(|c| match c.intersections {
            Intersections::Degree(d) => Some(&c.a * Rational::from(d)),
            Intersections::Pairings(_) => None,
        })
        .sum()
}

/// `(K + D)^2` by bilinear expansion.
pub fn pair_kd_squared(pair: &PairDescription) -> Result<Rational, Error> {
    match pair.surface.mode {
        SurfaceMode::Plane => {
            let deg = total_degree(pair)
                .ok_or_else(|| Error::InvalidInput("plane mode needs a degree on every component".into()))?;
            Ok((deg - Rational::from(3)).square())
        }
        SurfaceMode::Generic => {
            let mut total = Rational::from(pair.surface.c1_sq);
            for c in &pair.components {
                let k_dot = match &c.intersections {
                    Intersections::Pairings(m) => m.get("K").copied(),
                    Intersections::Degree(_) => None,
                }
                .ok_or_else(|| Error::MissingPairing(format!("K·{}", c.id)))?;
                total += Rational::from(2) * &c.a * Rational::from(k_dot);
            }
            for ci in &pair.components {
                for cj in &pair.components {
                    total += &ci.a * &cj.a * pairing(ci, cj)?;
                }
            }
            Ok(total)
        }
    }
}

/// Whether a multiple of `K + D` is known to be effective: decided by degree
/// in plane mode, asserted by the user otherwise.
pub fn effectivity(pair: &PairDescription) -> bool {
    match pair.surface.mode {
        SurfaceMode::Plane => total_degree(pair).is_some_and(|d| d >= 3),
        SurfaceMode::Generic => pair.effective,
    }
}
