//! Fractional Laurent polynomials `sum n_a t^a` with integer coefficients and
//! rational exponents.
//!
//! Terms are kept in a `BTreeMap` keyed by the reduced exponent, so iteration
//! is in increasing exponent order and zero coefficients are never stored.
//! Two spectra are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rational exponent of `t`, always in lowest terms.
pub type Exponent = Rational64;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Spectrum {
    terms: BTreeMap<Exponent, BigInt>,
}

/// Output style for [`Spectrum::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTerm {
    alpha: String,
    n: i128,
}

impl Spectrum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `t^0`.
    pub fn one() -> Self {
        Self::monomial(1, Exponent::zero())
    }

    pub fn monomial(coef: impl Into<BigInt>, exponent: Exponent) -> Self {
        let mut s = Self::zero();
        s.add_term(exponent, coef.into());
        s
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero();
        for (e, c) in terms {
            s.add_term(e, c.into());
        }
        s
    }

    /// Adds `coef * t^exponent`, merging with an existing term.
    pub fn add_term(&mut self, exponent: Exponent, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &Exponent) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Terms in strictly increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    /// Formal product of two fractional polynomials.
    pub fn mul(&self, other: &Spectrum) -> Spectrum {
        let mut out = Spectrum::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Spectrum of the same polynomial with one extra unused variable: `-t * self`.
    pub fn dummy_shift(&self) -> Spectrum {
        Spectrum {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + Exponent::one(), -c))
                .collect(),
        }
    }

    /// Value at `t = 1`, the Milnor number for isolated singularities.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `true` if every exponent lies in `(0, upper]` and is a multiple of `1/d`.
    pub fn support_within(&self, upper: i64, d: i64) -> bool {
        self.terms.keys().all(|e| {
            *e > Exponent::zero()
                && *e <= Exponent::from_integer(upper)
                && (e * Exponent::from_integer(d)).is_integer()
        })
    }

    pub fn render(&self, style: Style) -> String {
        match style {
            Style::Plain => self.to_string(),
            Style::Latex => self.to_latex(),
            Style::Json => self.to_json(),
        }
    }

    /// LaTeX form without spaces, e.g. `2t+2t^{5/4}-t^{2}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.abs();
            if e.is_zero() {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push('t');
            if !e.is_one() {
                out.push_str(&format!("^{{{}}}", fraction(e)));
            }
        }
        out
    }

    /// JSON array of `{"alpha": "p/q", "n": int}` sorted by `alpha`.
    pub fn to_json(&self) -> String {
        let items: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(e, c)| JsonTerm {
                alpha: format!("{}/{}", e.numer(), e.denom()),
                n: c.to_i128().expect("spectrum coefficient exceeds i128"),
            })
            .collect();
        serde_json::to_string(&items).expect("serializing plain data")
    }

    pub fn from_json(text: &str) -> Result<Spectrum> {
        let items: Vec<JsonTerm> = serde_json::from_str(text)?;
        let mut s = Spectrum::zero();
        for item in items {
            let e = parse_fraction(&item.alpha).ok_or_else(|| Error::Parse {
                pos: 0,
                token: item.alpha.clone(),
                message: "expected p/q".into(),
            })?;
            s.add_term(e, BigInt::from(item.n));
        }
        Ok(s)
    }
}

fn fraction(e: &Exponent) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

fn parse_fraction(s: &str) -> Option<Exponent> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    (q != 0).then(|| Exponent::new(p, q))
}

/// Plain style: `t + 2*t^(4/3) - t^2`.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("t")?;
            if e.is_one() {
                continue;
            }
            if e.is_integer() && e.is_positive() {
                write!(f, "^{}", e.numer())?;
            } else {
                write!(f, "^({})", fraction(e))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Spectrum> {
        Parser { src: s, pos: 0 }.spectrum()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        let token: String = self.src[self.pos..]
            .chars()
            .take_while(|c| !c.is_whitespace())
            .take(12)
            .collect();
        Err(Error::Parse {
            pos: self.pos,
            token: if token.is_empty() {
                "<end>".into()
            } else {
                token
            },
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let Some(d) = self.digits() else {
            return self.error("expected integer");
        };
        let v: i64 = match d.parse() {
            Ok(v) => v,
            Err(_) => return self.error("integer out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat('(') {
            let p = self.signed_int()?;
            let q = if self.eat('/') { self.signed_int()? } else { 1 };
            if q == 0 {
                return self.error("zero denominator");
            }
            if !self.eat(')') {
                return self.error("expected ')'");
            }
            Ok(Exponent::new(p, q))
        } else {
            Ok(Exponent::from_integer(self.signed_int()?))
        }
    }

    fn spectrum(mut self) -> Result<Spectrum> {
        let mut out = Spectrum::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return self.error("expected '+' or '-'");
            };
            first = false;
            let coef = match self.digits() {
                Some(d) => match d.parse::<BigInt>() {
                    Ok(c) => Some(c),
                    Err(_) => return self.error("bad coefficient"),
                },
                None => None,
            };
            let has_star = coef.is_some() && self.eat('*');
            let exponent = if self.eat('t') {
                if self.eat('^') {
                    self.exponent()?
                } else {
                    Exponent::one()
                }
            } else if has_star {
                return self.error("expected 't' after '*'");
            } else if coef.is_some() {
                Exponent::zero()
            } else {
                return self.error("expected coefficient or 't'");
            };
            let mut c = coef.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            out.add_term(exponent, c);
        }
        Ok(out)
    }
}

impl Add for &Spectrum {
    type Output = Spectrum;
    fn add(self, rhs: &Spectrum) -> Spectrum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Spectrum> for Spectrum {
    fn add_assign(&mut self, rhs: &Spectrum) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &Spectrum {
    type Output = Spectrum;
    fn sub(self, rhs: &Spectrum) -> Spectrum {
        self + &-rhs
    }
}

impl Neg for &Spectrum {
    type Output = Spectrum;
    fn neg(self) -> Spectrum {
        Spectrum {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Spectrum {
    type Output = Spectrum;
    fn mul(self, rhs: &Spectrum) -> Spectrum {
        Spectrum::mul(self, rhs)
    }
}
