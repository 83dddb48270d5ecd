//! Rational cohomology ring of the plane blown up at finitely many points.
//!
//! Basis `{1, e0, e_v, e0^2}` where `e0 = -[H]` is minus the pull-back of a
//! general line and `e_v` is the class of the exceptional curve over point
//! `v`. Relations: `e0 e_v = 0`, `e_v e_w = 0` for `v != w`, `e_v^2 = -e0^2`,
//! and everything of degree above 4 vanishes. The `e_v^2` are rewritten
//! immediately, so a class needs a single top-degree coefficient.
//!
//! `e0^2` is the class of a point, so integration reads off that coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohClass {
    a: BigRational,
    b0: BigRational,
    /// Point index to coefficient; zeros are not stored.
    bv: BTreeMap<usize, BigRational>,
    c: BigRational,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl CohClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(rat(1))
    }

    pub fn scalar(a: BigRational) -> Self {
        Self {
            a,
            ..Self::default()
        }
    }

    pub fn e0() -> Self {
        Self {
            b0: rat(1),
            ..Self::default()
        }
    }

    pub fn ev(v: usize) -> Self {
        let mut x = Self::default();
        x.bv.insert(v, rat(1));
        x
    }

    /// The point class `e0^2`.
    pub fn point() -> Self {
        Self {
            c: rat(1),
            ..Self::default()
        }
    }

    /// Builds `a + b0 e0 + sum bv e_v + c e0^2`.
    pub fn from_parts<I>(a: BigRational, b0: BigRational, bv: I, c: BigRational) -> Self
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut x = Self {
            a,
            b0,
            bv: BTreeMap::new(),
            c,
        };
        for (v, q) in bv {
            x.add_ev(v, q);
        }
        x
    }

    fn add_ev(&mut self, v: usize, q: BigRational) {
        let slot = self.bv.entry(v).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.bv.remove(&v);
        }
    }

    pub fn constant(&self) -> &BigRational {
        &self.a
    }

    pub fn coeff_e0(&self) -> &BigRational {
        &self.b0
    }

    pub fn coeff_ev(&self, v: usize) -> BigRational {
        self.bv.get(&v).cloned().unwrap_or_default()
    }

    /// Coefficient of `e0^2`, after rewriting every `e_v^2` as `-e0^2`.
    pub fn coeff_top(&self) -> &BigRational {
        &self.c
    }

    /// Degree-2 (real) part.
    pub fn linear_part(&self) -> CohClass {
        Self {
            a: rat(0),
            b0: self.b0.clone(),
            bv: self.bv.clone(),
            c: rat(0),
        }
    }

    /// Degree-4 (real) part.
    pub fn top_part(&self) -> CohClass {
        Self {
            c: self.c.clone(),
            ..Self::default()
        }
    }

    pub fn is_divisor_class(&self) -> bool {
        self.a.is_zero() && self.c.is_zero()
    }

    pub fn scale(&self, q: &BigRational) -> CohClass {
        Self {
            a: &self.a * q,
            b0: &self.b0 * q,
            bv: self
                .bv
                .iter()
                .map(|(v, x)| (*v, x * q))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
            c: &self.c * q,
        }
    }

    pub fn pow(&self, n: u32) -> CohClass {
        (0..n).fold(CohClass::one(), |acc, _| &acc * self)
    }

    /// Truncated inverse of a class with invertible constant term.
    pub fn inv_unit(&self) -> Result<CohClass> {
        if self.a.is_zero() {
            return Err(Error::NotAUnit);
        }
        // x = a (1 + n) with n nilpotent of order 3: 1/x = (1 - n + n^2) / a
        let inv_a = self.a.recip();
        let mut n = self.scale(&inv_a);
        n.a = rat(0);
        let n2 = &n * &n;
        Ok((&(&CohClass::one() - &n) + &n2).scale(&inv_a))
    }

    /// Truncated exponential of a class without constant term.
    pub fn exp_nilpotent(&self) -> CohClass {
        debug_assert!(self.a.is_zero());
        let sq = self * self;
        &(&CohClass::one() + self) + &sq.scale(&frac(1, 2))
    }

    /// Integral over the surface: the point class `e0^2` integrates to 1.
    pub fn integrate(&self) -> BigRational {
        self.c.clone()
    }
}

/// Writes e.g. `1 - 3*e0 - e1 + 4*e0^2`; `e{v}` is the exceptional curve over point `v`.
impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(String, &BigRational)> =
            vec![(String::new(), &self.a), ("e0".into(), &self.b0)];
        terms.extend(self.bv.iter().map(|(v, q)| (format!("e{}", v + 1), q)));
        terms.push(("e0^2".into(), &self.c));
        let mut first = true;
        for (name, q) in terms.into_iter().filter(|(_, q)| !q.is_zero()) {
            let neg = *q < BigRational::zero();
            let mag = if neg { -q } else { q.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if name.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == rat(1) {
                f.write_str(&name)?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        let mut out = self.clone();
        out.a += &rhs.a;
        out.b0 += &rhs.b0;
        for (v, q) in &rhs.bv {
            out.add_ev(*v, q.clone());
        }
        out.c += &rhs.c;
        out
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.scale(&rat(-1))
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        self + &-rhs
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        let a = &self.a * &rhs.a;
        let b0 = &self.a * &rhs.b0 + &self.b0 * &rhs.a;
        let mut bv = BTreeMap::new();
        for v in self.bv.keys().chain(rhs.bv.keys()) {
            if bv.contains_key(v) {
                continue;
            }
            let x = &self.a * rhs.coeff_ev(*v) + self.coeff_ev(*v) * &rhs.a;
            bv.insert(*v, x);
        }
        bv.retain(|_, x: &mut BigRational| !x.is_zero());
        let mut c = &self.a * &rhs.c + &self.c * &rhs.a + &self.b0 * &rhs.b0;
        for (v, x) in &self.bv {
            if let Some(y) = rhs.bv.get(v) {
                c -= x * y;
            }
        }
        CohClass { a, b0, bv, c }
    }
}

impl One for CohClass {
    fn one() -> Self {
        CohClass::one()
    }
}

impl Mul for CohClass {
    type Output = CohClass;
    fn mul(self, rhs: CohClass) -> CohClass {
        &self * &rhs
    }
}
