//! Line arrangements given by explicit linear forms `a x + b y + c z`.
//!
//! Lines and points of the projective plane are both stored as primitive
//! integer triples with positive leading entry, so equality of projective
//! objects is equality of triples and no floating point is involved.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ArrangementGraph, Branch, Component, SingularPoint};

/// Primitive integer triple up to sign, the canonical representative of a
/// projective line or point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homogeneous([BigInt; 3]);

pub type LinearForm = Homogeneous;
pub type ProjectivePoint = Homogeneous;

impl Homogeneous {
    /// Clears denominators, divides by the content and makes the first
    /// nonzero entry positive.
    pub fn normalize(raw: &[BigRational; 3]) -> Result<Self> {
        if raw.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        let lcm = raw.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints = raw
            .clone()
            .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer());
        Self::from_integers(ints)
    }

    pub fn from_integers(v: [BigInt; 3]) -> Result<Self> {
        let content = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() {
            return Err(Error::ZeroForm);
        }
        let lead_negative = v
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        let unit = if lead_negative { -content } else { content };
        Ok(Self(v.map(|x| x / &unit)))
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_integers([a.into(), b.into(), c.into()])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Meet of two distinct lines (or join of two distinct points).
    pub fn cross(&self, other: &Self) -> Result<Self> {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        Self::from_integers([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    /// Form `l'(p) = l(M p)` after substituting `p -> M p`, i.e. the row
    /// vector `l M`.
    pub fn pull_back(&self, m: &[[i64; 3]; 3]) -> Result<Self> {
        let v: [BigInt; 3] =
            std::array::from_fn(|col| (0..3).map(|row| &self.0[row] * m[row][col]).sum());
        Self::from_integers(v)
    }
}

impl fmt::Display for Homogeneous {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Three lines pass through a common point iff their coefficient matrix is singular.
pub fn concurrent(a: &LinearForm, b: &LinearForm, c: &LinearForm) -> bool {
    determinant(a.coords(), b.coords(), c.coords()).is_zero()
}

fn determinant(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Int(i64),
    Text(String),
}

impl RawNumber {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            RawNumber::Int(n) => Ok(BigRational::from_integer((*n).into())),
            RawNumber::Text(s) => {
                let bad = || Error::Parse {
                    pos: 0,
                    token: s.clone(),
                    message: "expected integer or p/q".into(),
                };
                let (p, q) = match s.split_once('/') {
                    Some((p, q)) => (p.trim(), q.trim()),
                    None => (s.trim(), "1"),
                };
                let p: BigInt = p.parse().map_err(|_| bad())?;
                let q: BigInt = q.parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(p, q))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct LineEntry {
    form: [RawNumber; 3],
    #[serde(default = "one")]
    multiplicity: i64,
}

fn one() -> i64 {
    1
}

/// Parses the line-arrangement file: a JSON array of
/// `{"form": [a, b, c], "multiplicity": m}` with integer or `"p/q"` entries.
pub fn parse_lines(text: &str) -> Result<Vec<(LinearForm, i64)>> {
    let entries: Vec<LineEntry> = serde_json::from_str(text)?;
    entries
        .iter()
        .map(|e| {
            let raw = [
                e.form[0].to_rational()?,
                e.form[1].to_rational()?,
                e.form[2].to_rational()?,
            ];
            Ok((Homogeneous::normalize(&raw)?, e.multiplicity))
        })
        .collect()
}

pub fn load_lines(path: impl AsRef<Path>) -> Result<Vec<(LinearForm, i64)>> {
    parse_lines(&std::fs::read_to_string(path)?)
}

/// Incidence graph of a line arrangement with multiplicities.
///
/// Proportional forms are merged with their multiplicities added. Every
/// intersection point of two distinct lines becomes a point of the graph,
/// including ordinary nodes; the spectrum does not depend on whether those
/// are listed.
pub fn incidence_graph(forms: &[(LinearForm, i64)]) -> Result<ArrangementGraph> {
    if forms.is_empty() {
        return Err(Error::Empty("line arrangement needs at least one form"));
    }
    let mut lines: Vec<(LinearForm, i64)> = Vec::new();
    for (form, m) in forms {
        match lines.iter_mut().find(|(l, _)| l == form) {
            Some((_, total)) => *total += m,
            None => lines.push((form.clone(), *m)),
        }
    }

    let mut meets: BTreeMap<ProjectivePoint, Vec<usize>> = BTreeMap::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let p = lines[a].0.cross(&lines[b].0)?;
            meets.entry(p).or_default();
        }
    }
    for (p, through) in meets.iter_mut() {
        through.extend((0..lines.len()).filter(|&l| lines[l].0.dot(p).is_zero()));
    }

    let name = |l: usize| format!("l{}", l + 1);
    let components = lines
        .iter()
        .enumerate()
        .map(|(l, (_, m))| Component {
            id: name(l),
            degree: 1,
            multiplicity: *m,
        })
        .collect();
    let points = meets
        .into_iter()
        .map(|(p, through)| SingularPoint {
            id: p.to_string(),
            branches: through
                .into_iter()
                .map(|l| Branch {
                    component: name(l),
                    mult: 1,
                })
                .collect(),
        })
        .collect();
    Ok(ArrangementGraph::new(components, points))
}
