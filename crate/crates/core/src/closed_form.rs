//! Closed-form spectrum formulas evaluated on the combinatorial data.
//!
//! Every formula produces, for `j = 1..=d`, the three multiplicities at
//! `j/d`, `1 + j/d` and `2 + j/d`. The special cases are evaluated from their
//! own displays rather than by calling [`spectrum_general`], so that the
//! agreement tests compare independent code paths.

use num_bigint::BigInt;

use crate::binom::{binom, ceil_div};
use crate::error::{Error, Result};
use crate::graph::{ArrangementGraph, Resolved};
use crate::spectrum::{Exponent, Spectrum};

/// The coefficients `u_{0,j}` and `u_{v,j}` of the twisting class at index `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCoefficients {
    pub j: i64,
    pub u0: i64,
    /// One entry per point, in graph order.
    pub uv: Vec<i64>,
}

pub(crate) fn u_coeffs_resolved(r: &Resolved, j: i64) -> Result<UCoefficients> {
    let d = r.derived.degree;
    if !(1..=d).contains(&j) {
        return Err(Error::IndexOutOfRange { j, d });
    }
    let lifted: Vec<i64> = r
        .components
        .iter()
        .map(|&(_, m)| ceil_div(j * m, d))
        .collect();
    let u0 = r
        .components
        .iter()
        .zip(&lifted)
        .map(|(&(deg, _), c)| c * deg)
        .sum::<i64>()
        - j;
    let uv = r
        .points
        .iter()
        .zip(&r.derived.points)
        .map(|(branches, pd)| {
            branches.iter().map(|&(l, k)| lifted[l] * k).sum::<i64>() - ceil_div(j * pd.mult, d)
        })
        .collect();
    Ok(UCoefficients { j, u0, uv })
}

pub fn u_coeffs(g: &ArrangementGraph, j: i64) -> Result<UCoefficients> {
    u_coeffs_resolved(&g.resolve()?, j)
}

fn emit(out: &mut Spectrum, j: i64, d: i64, levels: [BigInt; 3]) {
    for (k, n) in (0i64..).zip(levels) {
        out.add_term(Exponent::from_integer(k) + Exponent::new(j, d), n);
    }
}

fn delta(a: i64, b: i64) -> BigInt {
    BigInt::from((a == b) as i64)
}

fn pair_sum<I: IntoIterator<Item = i64>>(values: I) -> BigInt {
    values.into_iter().map(|x| binom(x, 2)).sum()
}

/// Main formula for `f = prod f_l^{m_l}`, reduced or not.
pub fn spectrum_general(g: &ArrangementGraph) -> Result<Spectrum> {
    let r = g.resolve()?;
    Ok(general_resolved(&r))
}

pub(crate) fn general_resolved(r: &Resolved) -> Spectrum {
    let d = r.derived.degree;
    let d_red = r.derived.degree_red;
    let genus_term = pair_sum(r.components.iter().map(|&(dl, _)| dl));
    let branch_terms: Vec<BigInt> = r
        .points
        .iter()
        .map(|b| pair_sum(b.iter().map(|&(_, k)| k)))
        .collect();

    let mut out = Spectrum::zero();
    for j in 1..=d {
        let u = u_coeffs_resolved(r, j).expect("j in range");
        let u0 = u.u0;
        let mut n0 = binom(d_red - u0 - 1, 2);
        let mut n1 = BigInt::from((u0 - 1) * (d_red - u0 - 1)) + &genus_term;
        let mut n2 = binom(u0 - 1, 2) - delta(j, d);
        for ((&uv, pd), bt) in u.uv.iter().zip(&r.derived.points).zip(&branch_terms) {
            let mr = pd.mult_red;
            n0 -= binom(mr - uv - 1, 2);
            n1 -= BigInt::from(uv * (mr - uv - 1)) + bt;
            n2 -= binom(uv, 2);
        }
        emit(&mut out, j, d, [n0, n1, n2]);
    }
    out
}

/// Formula for reduced `f` (every `m_l = 1`), written with `ceil(j m_v / d)`.
pub fn spectrum_reduced(g: &ArrangementGraph) -> Result<Spectrum> {
    let r = g.resolve()?;
    if !r.is_reduced() {
        return Err(Error::Domain(
            "reduced formula needs every component multiplicity equal to 1".into(),
        ));
    }
    let d = r.derived.degree;
    let genus_term = pair_sum(r.components.iter().map(|&(dl, _)| dl));
    let mut out = Spectrum::zero();
    for j in 1..=d {
        let mut n0 = binom(j - 1, 2);
        let mut n1 = BigInt::from((j - 1) * (d - j - 1)) + &genus_term;
        let mut n2 = binom(d - j - 1, 2) - delta(j, d);
        for (branches, pd) in r.points.iter().zip(&r.derived.points) {
            let mv = pd.mult;
            let c = ceil_div(j * mv, d);
            n0 -= binom(c - 1, 2);
            n1 -= BigInt::from((c - 1) * (mv - c)) + pair_sum(branches.iter().map(|&(_, k)| k));
            n2 -= binom(mv - c, 2);
        }
        emit(&mut out, j, d, [n0, n1, n2]);
    }
    Ok(out)
}

/// Every component is a smooth curve, so every branch multiplicity is 1.
pub fn spectrum_smooth_components(g: &ArrangementGraph) -> Result<Spectrum> {
    let r = g.resolve()?;
    if r.points.iter().flatten().any(|&(_, k)| k != 1) {
        return Err(Error::Domain(
            "smooth-component formula needs every branch multiplicity equal to 1".into(),
        ));
    }
    let d = r.derived.degree;
    let d_red = r.derived.degree_red;
    let genus_term = pair_sum(r.components.iter().map(|&(dl, _)| dl));
    let mut out = Spectrum::zero();
    for j in 1..=d {
        let lifted: Vec<i64> = r
            .components
            .iter()
            .map(|&(_, m)| ceil_div(j * m, d))
            .collect();
        let u0: i64 = r
            .components
            .iter()
            .zip(&lifted)
            .map(|(&(dl, _), c)| c * dl)
            .sum::<i64>()
            - j;
        let mut n0 = binom(d_red - u0 - 1, 2);
        let mut n1 = BigInt::from((u0 - 1) * (d_red - u0 - 1)) + &genus_term;
        let mut n2 = binom(u0 - 1, 2) - delta(j, d);
        for (branches, pd) in r.points.iter().zip(&r.derived.points) {
            let uv: i64 =
                branches.iter().map(|&(l, _)| lifted[l]).sum::<i64>() - ceil_div(j * pd.mult, d);
            let mr = pd.mult_red;
            n0 -= binom(mr - uv - 1, 2);
            n1 -= uv * (mr - uv - 1);
            n2 -= binom(uv, 2);
        }
        emit(&mut out, j, d, [n0, n1, n2]);
    }
    Ok(out)
}

/// Line arrangements: every component has degree 1.
pub fn spectrum_hyperplane(g: &ArrangementGraph) -> Result<Spectrum> {
    let r = g.resolve()?;
    if r.components.iter().any(|&(dl, _)| dl != 1) {
        return Err(Error::Domain(
            "hyperplane formula needs every component of degree 1".into(),
        ));
    }
    let d = r.derived.degree;
    let d_red = r.derived.degree_red;
    let mut out = Spectrum::zero();
    for j in 1..=d {
        let lifted: Vec<i64> = r
            .components
            .iter()
            .map(|&(_, m)| ceil_div(j * m, d))
            .collect();
        let u0: i64 = lifted.iter().sum::<i64>() - j;
        let mut n0 = binom(d_red - u0 - 1, 2);
        let mut n1 = BigInt::from((u0 - 1) * (d_red - u0 - 1));
        let mut n2 = binom(u0 - 1, 2) - delta(j, d);
        for (branches, pd) in r.points.iter().zip(&r.derived.points) {
            let uv: i64 =
                branches.iter().map(|&(l, _)| lifted[l]).sum::<i64>() - ceil_div(j * pd.mult, d);
            let mr = pd.mult_red;
            n0 -= binom(mr - uv - 1, 2);
            n1 -= uv * (mr - uv - 1);
            n2 -= binom(uv, 2);
        }
        emit(&mut out, j, d, [n0, n1, n2]);
    }
    Ok(out)
}

/// Power `f^m` of one irreducible curve of degree `degree` whose singular
/// points are ordinary with the given multiplicities (each in `2..=degree`).
pub fn spectrum_irreducible_power(degree: i64, m: i64, point_mults: &[i64]) -> Result<Spectrum> {
    if degree < 1 || m < 1 {
        return Err(Error::Domain(format!(
            "degree {degree} and power {m} must be positive"
        )));
    }
    if let Some(bad) = point_mults.iter().find(|&&k| !(2..=degree).contains(&k)) {
        return Err(Error::Domain(format!(
            "point multiplicity {bad} outside 2..={degree}"
        )));
    }
    let total = m * degree;
    let mut out = Spectrum::zero();
    for j in 1..=total {
        let lift = ceil_div(j, degree);
        let u0 = lift * degree - j;
        let mut n0 = binom(degree - u0 - 1, 2);
        let mut n1 = BigInt::from((u0 - 1) * (degree - u0 - 1)) + binom(degree, 2);
        let mut n2 = binom(u0 - 1, 2) - delta(j, total);
        for &mv in point_mults {
            let uv = lift * mv - ceil_div(j * mv, degree);
            n0 -= binom(mv - uv - 1, 2);
            n1 -= BigInt::from(uv * (mv - uv - 1)) + binom(mv, 2);
            n2 -= binom(uv, 2);
        }
        emit(&mut out, j, total, [n0, n1, n2]);
    }
    Ok(out)
}

/// Germ in two variables: a product of pairwise distinct linear forms raised
/// to the given powers. Exponents lie in `(0, 2]`.
pub fn spectrum_binary_linear(mults: &[i64]) -> Result<Spectrum> {
    if mults.is_empty() {
        return Err(Error::Empty("binary form needs at least one linear factor"));
    }
    if let Some(bad) = mults.iter().find(|&&m| m < 1) {
        return Err(Error::Domain(format!("multiplicity {bad} is not positive")));
    }
    let d: i64 = mults.iter().sum();
    let d_red = mults.len() as i64;
    let mut out = Spectrum::zero();
    for j in 1..=d {
        let lifted: i64 = mults.iter().map(|&m| ceil_div(j * m, d)).sum();
        out.add_term(Exponent::new(j, d), BigInt::from(d_red - lifted + j - 1));
        out.add_term(
            Exponent::new(d + j, d),
            BigInt::from(lifted - j - 1) + delta(j, d),
        );
    }
    Ok(out)
}

/// Isolated homogeneous singularity of degree `d` in `n` variables:
/// `((t^{1/d} - t) / (1 - t^{1/d}))^n`, i.e. the `n`-th power of
/// `t^{1/d} + ... + t^{(d-1)/d}`.
pub fn spectrum_isolated(d: i64, n: u32) -> Spectrum {
    assert!(d >= 1, "degree must be positive");
    let base = Spectrum::from_terms((1..d).map(|i| (Exponent::new(i, d), 1)));
    (0..n).fold(Spectrum::one(), |acc, _| acc.mul(&base))
}
