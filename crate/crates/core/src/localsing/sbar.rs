//! Independent re-derivation of the three-line formula.
//!
//! Write `a_i = 1 - l_i/n` and pull the pair back along the degree-`n`
//! cover branched over the three lines. The log cotangent sheaf upstairs is
//! `phi^* E` for a rank-two bundle `E` on the Fermat curve of degree `n`,
//! with `deg E = e = n - l_1 - l_2 - l_3`. Its maximal destabilizing slope is
//! `s = max(p, e/2)` with `p = max(-l_1, -l_2, -l_3, e)`, and the local second
//! Chern class contribution is `s (e - s)`. The normalization `1/n^2` is the
//! one global constant fixed by matching the closed form on both exact
//! branches.

use super::types::SbarRecord;
use crate::error::Error;
use crate::ratkit::Rational;

pub fn sbar_record(n: u64, l: [u64; 3]) -> Result<SbarRecord, Error> {
    if n < 2 || l.iter().any(|&li| li == 0 || li >= n) {
        return Err(Error::InvalidInput(format!("need 1 <= l_i <= n-1, got n = {n}, l = {l:?}")));
    }
    let n_i = i64::try_from(n).map_err(|_| Error::InvalidInput("n too large".into()))?;
    let l = l.map(|li| li as i64);
    let e = n_i - l.iter().sum::<i64>();
    let p = l.iter().map(|li| -li).chain([e]).max().expect("nonempty");
    let sbar = Rational::from(p).max(Rational::new(e, 2));
    Ok(SbarRecord { n, l, e, p, sbar })
}

/// `s (e - s) / n^2` for the bundle attached to `(n; l_1, l_2, l_3)`.
pub fn sbar_oracle(n: u64, l: [u64; 3]) -> Result<Rational, Error> {
    let r = sbar_record(n, l)?;
    let value = &r.sbar * (Rational::from(r.e) - &r.sbar);
    Ok(value / Rational::from(n).square())
}
