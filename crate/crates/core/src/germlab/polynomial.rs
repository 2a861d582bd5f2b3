use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ratkit::Rational;

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Monomial = (u32, u32);

/// A polynomial in `x, y` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn d_dx(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * Rational::from(i64::from(i)))),
        )
    }

    pub fn d_dy(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * Rational::from(i64::from(j)))),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first, x-heavy first within a degree
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(*i)));
        for (k, (&(i, j), c)) in terms.into_iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let is_one = mag == Rational::one();
            let mut parts = Vec::new();
            if !is_one || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// A plane curve germ `f(x, y) = 0` at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGerm", into = "RawGerm")]
pub struct CurveGerm {
    poly: Poly,
}

impl CurveGerm {
    pub fn new(poly: Poly) -> Result<Self, Error> {
        if poly.is_zero() {
            return Err(Error::InvalidInput("germ polynomial is identically zero".into()));
        }
        if !poly.coefficient((0, 0)).is_zero() {
            return Err(Error::InvalidInput("germ does not pass through the origin (nonzero constant term)".into()));
        }
        Ok(CurveGerm { poly })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_smooth_at_origin(&self) -> bool {
        self.poly.order() == Some(1)
    }
}

impl fmt::Display for CurveGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGerm {
    terms: Vec<(u32, u32, Rational)>,
}

impl TryFrom<RawGerm> for CurveGerm {
    type Error = Error;

    fn try_from(raw: RawGerm) -> Result<Self, Error> {
        CurveGerm::new(Poly::from_terms(raw.terms.into_iter().map(|(i, j, c)| ((i, j), c))))
    }
}

impl From<CurveGerm> for RawGerm {
    fn from(g: CurveGerm) -> Self {
        RawGerm { terms: g.poly.terms.into_iter().map(|((i, j), c)| (i, j, c)).collect() }
    }
}

impl FromStr for CurveGerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CurveGerm::new(parse_poly(s)?)
    }
}

/// Parses text such as `x^4 + y^5 - 3/2*x^2y^3`.
///
/// Terms are an optional integer or `p/q` coefficient followed by factors
/// `x` or `y` with optional `^exponent`, separated by optional `*`.
pub fn parse_poly(s: &str) -> Result<Poly, Error> {
    let chars: Vec<char> = s.chars().map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
    let mut p = Parser { chars: &chars, pos: 0 };
    let mut poly = Poly::default();
    p.skip_ws();
    let mut sign = Rational::one();
    if p.eat('-') {
        sign = -sign;
    } else {
        p.eat('+');
    }
    loop {
        let (m, c) = p.term()?;
        poly.add_term(m, c * &sign);
        p.skip_ws();
        if p.at_end() {
            break;
        }
        sign = if p.eat('+') {
            Rational::one()
        } else if p.eat('-') {
            -Rational::one()
        } else {
            return Err(p.error("expected '+' or '-'"));
        };
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("polynomial: {msg} at position {}", self.pos))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<(Monomial, Rational), Error> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut seen = false;
        if let Some(num) = self.digits() {
            seen = true;
            let mut lit = num;
            self.skip_ws();
            if self.eat('/') {
                self.skip_ws();
                let den = self.digits().ok_or_else(|| self.error("expected denominator"))?;
                lit = format!("{lit}/{den}");
            }
            coeff = lit.parse()?;
        }
        let (mut i, mut j) = (0u32, 0u32);
        loop {
            self.skip_ws();
            let save = self.pos;
            if seen {
                self.eat('*');
                self.skip_ws();
            }
            let var = match self.peek() {
                Some(v @ ('x' | 'y')) => v,
                _ => {
                    self.pos = save;
                    break;
                }
            };
            self.pos += 1;
            seen = true;
            self.skip_ws();
            let exp = if self.eat('^') {
                self.skip_ws();
                let d = self.digits().ok_or_else(|| self.error("expected exponent"))?;
                d.parse::<u32>().map_err(|_| self.error("exponent too large"))?
            } else {
                1
            };
            if var == 'x' {
                i = i.checked_add(exp).ok_or_else(|| self.error("exponent overflow"))?;
            } else {
                j = j.checked_add(exp).ok_or_else(|| self.error("exponent overflow"))?;
            }
        }
        if !seen {
            return Err(self.error("expected a term"));
        }
        Ok(((i, j), coeff))
    }
}
