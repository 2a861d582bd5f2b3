//! Hirzebruch–Jung continued fractions.
//!
//! A cyclic quotient singularity of type `<n, q>` is resolved by a chain of
//! rational curves with self-intersections `-b_1, ..., -b_r`, where
//! `n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r))` and every `b_i >= 2`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::Error;

/// The exceptional chain `<n, q>` of a cyclic quotient singularity.
///
/// `<1, 0>` is the empty chain. A single `(-1)`-curve is written `<1, 1>` in
/// resolution bookkeeping; it breaks the `b_i >= 2` rule and gets its own
/// variant so it can never reach [`hj_expand`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainDescriptor {
    Chain { n: u64, q: u64 },
    MinusOneCurve,
}

impl ChainDescriptor {
    pub fn new(n: u64, q: u64) -> Result<Self, Error> {
        validate_pair(n, q)?;
        Ok(ChainDescriptor::Chain { n, q })
    }

    pub fn empty() -> Self {
        ChainDescriptor::Chain { n: 1, q: 0 }
    }

    /// Order `n` of the cyclic group; the `(-1)`-curve token has order 1.
    pub fn order(&self) -> u64 {
        match *self {
            ChainDescriptor::Chain { n, .. } => n,
            ChainDescriptor::MinusOneCurve => 1,
        }
    }

    pub fn q(&self) -> u64 {
        match *self {
            ChainDescriptor::Chain { q, .. } => q,
            ChainDescriptor::MinusOneCurve => 1,
        }
    }

    /// The self-intersection sequence of the chain.
    pub fn expand(&self) -> Result<Vec<u64>, Error> {
        match *self {
            ChainDescriptor::Chain { n, q } => hj_expand(n, q),
            ChainDescriptor::MinusOneCurve => {
                Err(Error::InvalidChain("the <1,1> token is not a Hirzebruch-Jung chain".into()))
            }
        }
    }
}

impl fmt::Display for ChainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainDescriptor::Chain { n, q } => write!(f, "<{n},{q}>"),
            ChainDescriptor::MinusOneCurve => f.write_str("<1,1>"),
        }
    }
}

fn validate_pair(n: u64, q: u64) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidChain("n must be positive".into()));
    }
    if q >= n {
        return Err(Error::InvalidChain(format!("<{n},{q}>: need q < n")));
    }
    if n.gcd(&q) != 1 {
        return Err(Error::InvalidChain(format!("<{n},{q}>: gcd(n,q) != 1")));
    }
    Ok(())
}

/// Expands `n/q` into its Hirzebruch–Jung continued fraction.
///
/// Greedy: `b = ceil(n/q)`, then recurse on `(q, b*q - n)` until the
/// remainder vanishes. `(1, 0)` gives the empty chain.
pub fn hj_expand(n: u64, q: u64) -> Result<Vec<u64>, Error> {
    validate_pair(n, q)?;
    let (mut num, mut den) = (u128::from(n), u128::from(q));
    let mut out = Vec::new();
    while den != 0 {
        let b = num.div_ceil(den);
        out.push(b as u64);
        (num, den) = (den, b * den - num);
    }
    Ok(out)
}

/// Evaluates `b_1 - 1/(b_2 - 1/(...))`.
///
/// The empty sequence is the empty chain and evaluates to `None`
/// (the chain `<1,0>` has no finite value `n/q`).
pub fn hj_eval(bs: &[u64]) -> Result<Option<Rational>, Error> {
    if let Some(bad) = bs.iter().find(|&&b| b < 2) {
        return Err(Error::InvalidChain(format!("entry {bad} < 2")));
    }
    let mut iter = bs.iter().rev();
    let Some(&last) = iter.next() else {
        return Ok(None);
    };
    let mut value = Rational::from(last);
    for &b in iter {
        value = Rational::from(b) - value.recip();
    }
    Ok(Some(value))
}

/// Recovers the descriptor `<n, q>` from a self-intersection sequence.
pub fn hj_descriptor(bs: &[u64]) -> Result<ChainDescriptor, Error> {
    match hj_eval(bs)? {
        None => Ok(ChainDescriptor::empty()),
        Some(v) => {
            let n = u64::try_from(v.numer()).map_err(|_| Error::InvalidChain("n too large".into()))?;
            let q = u64::try_from(v.denom()).map_err(|_| Error::InvalidChain("q too large".into()))?;
            ChainDescriptor::new(n, q)
        }
    }
}
