//! Dimensions of local algebras `O_0 / I` for ideals `I` of finite colength
//! at the origin, computed as `dim k[x,y] / (I + (x,y)^N)` for growing `N`.
//!
//! Once `dim(N) == dim(N+1)` we have `(x,y)^N ⊆ I + (x,y)^(N+1)`, so by
//! Nakayama `(x,y)^N ⊆ I` in the local ring and `dim(N)` is the local
//! colength.

use std::collections::BTreeMap;

use super::polynomial::{Monomial, Poly};
use crate::error::Error;
use crate::ratkit::Rational;

/// Column key ordered by total degree, then by `x` exponent, so the pivot of
/// every row is its lowest-degree monomial.
type Key = (u32, u32);

fn key((i, j): Monomial) -> Key {
    (i + j, i)
}

fn monomial((deg, i): Key) -> Monomial {
    (i, deg - i)
}

type Row = BTreeMap<Key, Rational>;

/// Incrementally row-reduced span of vectors in `k[x,y] / (x,y)^N`.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<Key, Row>,
}

impl Echelon {
    fn insert(&mut self, mut row: Row) {
        while let Some((lead, coeff)) = row.iter().next().map(|(k, c)| (*k, c.clone())) {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = coeff.recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                self.pivots.insert(lead, row);
                return;
            };
            for (k, v) in pivot {
                let entry = row.entry(*k).or_default();
                *entry -= &coeff * v;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn reduce(generators: &[Poly], n: u32) -> Echelon {
    let mut echelon = Echelon::default();
    for g in generators {
        let Some(order) = g.order() else { continue };
        if order >= n {
            continue;
        }
        // multiply by every monomial x^a y^b that keeps some term below degree n
        for deg in 0..n - order {
            for a in 0..=deg {
                let b = deg - a;
                let row: Row = g
                    .terms()
                    .filter(|((i, j), _)| i + j + deg < n)
                    .map(|(&(i, j), c)| (key((i + a, j + b)), c.clone()))
                    .collect();
                if !row.is_empty() {
                    echelon.insert(row);
                }
            }
        }
    }
    echelon
}

/// `dim k[x,y] / (generators + (x,y)^N)`.
pub fn truncated_dimension(generators: &[Poly], n: u32) -> usize {
    let rank = reduce(generators, n).rank();
    let n = n as usize;
    n * (n + 1) / 2 - rank
}

/// Local colength of the ideal at the origin, with the truncation degree
/// `N` that certified it.
pub fn local_dimension(generators: &[Poly], cap: usize) -> Result<(usize, usize), Error> {
    let cap_u32 = u32::try_from(cap).map_err(|_| Error::InvalidInput("cap too large".into()))?;
    let mut previous = truncated_dimension(generators, 1);
    for n in 1..=cap_u32 {
        let next = truncated_dimension(generators, n + 1);
        if next == previous {
            return Ok((previous, n as usize));
        }
        previous = next;
    }
    Err(Error::NotIsolated { cap })
}

/// Monomials spanning the quotient at truncation `n`, i.e. those not
/// appearing as pivots. Used for reporting.
pub fn standard_monomials(generators: &[Poly], n: u32) -> Vec<Monomial> {
    let echelon = reduce(generators, n);
    (0..n)
        .flat_map(|d| (0..=d).map(move |i| (d, i)))
        .filter(|k| !echelon.pivots.contains_key(k))
        .map(monomial)
        .collect()
}
