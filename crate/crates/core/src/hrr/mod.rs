//! Spectrum via Hirzebruch–Riemann–Roch on the blow-up of the plane at the
//! singular points.
//!
//! Blowing up every point of `V` turns the total transform of the curve into
//! a normal-crossing divisor. Each spectral multiplicity is then an Euler
//! characteristic of a twisted sheaf of logarithmic forms,
//!
//! ```text
//! n_{k + j/d} = (-1)^k ( chi_{2-k}(u_j) - [k + j/d == 3] )
//! chi_p(u)    = integral of ch(wedge^p Omega^1(log Z)) ch(O(u)) Td
//! ```
//!
//! where `u_j = -(d - j)[H] + sum_w floor((d - j) m_w / d) [E_w]`.
//!
//! Everything here is recomputed from product formulas for the total Chern
//! classes. The expanded expressions in [`closed`] are used only by tests and
//! the check harness to confirm the products.

pub mod closed;
pub mod cohomology;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::binom::floor_div;
use crate::error::{Error, Result};
use crate::graph::{ArrangementGraph, Resolved};
use crate::spectrum::{Exponent, Spectrum};

pub use cohomology::{frac, rat, CohClass};

fn one_plus(x: &CohClass) -> CohClass {
    &CohClass::one() + x
}

/// Class of the strict transform of component `l`:
/// `[E_l] = -(d_l e0 + sum_v m_{v,l} e_v)`.
pub fn strict_transform(r: &Resolved, l: usize) -> CohClass {
    let (dl, _) = r.components[l];
    let ev = r.points.iter().enumerate().filter_map(|(v, branches)| {
        branches
            .iter()
            .find(|&&(c, _)| c == l)
            .map(|&(_, k)| (v, rat(-k)))
    });
    CohClass::from_parts(rat(0), rat(-dl), ev, rat(0))
}

/// `c(T) = (1 - e0)^3 prod_v (1 + e_v) ((1 - e0 - e_v) / (1 - e0))^2`.
pub fn chern_tangent_resolved(r: &Resolved) -> CohClass {
    let one_minus_e0 = &CohClass::one() - &CohClass::e0();
    let inv = one_minus_e0.inv_unit().expect("unit");
    let mut c = one_minus_e0.pow(3);
    for v in 0..r.points.len() {
        let ev = CohClass::ev(v);
        let ratio = &(&one_minus_e0 - &ev) * &inv;
        c = &(&c * &one_plus(&ev)) * &ratio.pow(2);
    }
    c
}

/// `c(Omega^1) = (1 + e0)^3 prod_v (1 - e_v) ((1 + e0 + e_v) / (1 + e0))^2`.
pub fn chern_cotangent_resolved(r: &Resolved) -> CohClass {
    let one_plus_e0 = one_plus(&CohClass::e0());
    let inv = one_plus_e0.inv_unit().expect("unit");
    let mut c = one_plus_e0.pow(3);
    for v in 0..r.points.len() {
        let ev = CohClass::ev(v);
        let ratio = &(&one_plus_e0 + &ev) * &inv;
        c = &(&c * &(&CohClass::one() - &ev)) * &ratio.pow(2);
    }
    c
}

/// `c(Omega^1(log Z)) = c(Omega^1) prod_w c(O(-E_w))^{-1}` over all
/// exceptional curves and strict transforms.
pub fn chern_cotangent_log_resolved(r: &Resolved) -> CohClass {
    let mut c = chern_cotangent_resolved(r);
    for v in 0..r.points.len() {
        let factor = &CohClass::one() - &CohClass::ev(v);
        c = &c * &factor.inv_unit().expect("unit");
    }
    for l in 0..r.components.len() {
        let factor = &CohClass::one() - &strict_transform(r, l);
        c = &c * &factor.inv_unit().expect("unit");
    }
    c
}

/// Chern character of `wedge^p A` for a rank-2 bundle `A` with total Chern
/// class `c_total`.
pub fn wedge_ch(c_total: &CohClass, p: u32) -> Result<CohClass> {
    if *c_total.constant() != rat(1) {
        return Err(Error::Domain(
            "total Chern class must have constant term 1".into(),
        ));
    }
    let c1 = c_total.linear_part();
    let c2 = c_total.top_part();
    let c1_sq = &c1 * &c1;
    match p {
        0 => Ok(CohClass::one()),
        1 => {
            let second = (&c1_sq - &c2.scale(&rat(2))).scale(&frac(1, 2));
            Ok(&(&CohClass::scalar(rat(2)) + &c1) + &second)
        }
        2 => Ok(&one_plus(&c1) + &c1_sq.scale(&frac(1, 2))),
        _ => Err(Error::Domain(format!("wedge power {p} of a rank-2 bundle"))),
    }
}

/// `Td = 1 + c1/2 + (c1^2 + c2)/12` from the total Chern class of the tangent bundle.
pub fn todd_from_chern(c_total: &CohClass) -> CohClass {
    let c1 = c_total.linear_part();
    let c2 = c_total.top_part();
    let second = (&(&c1 * &c1) + &c2).scale(&frac(1, 12));
    &one_plus(&c1.scale(&frac(1, 2))) + &second
}

/// Twisting class `u_j = -(d - j)[H] + sum_w floor((d - j) m_w / d) [E_w]`
/// in the `(e0, e_v)` basis, assembled divisor by divisor.
pub fn u_class_resolved(r: &Resolved, j: i64) -> Result<CohClass> {
    let d = r.derived.degree;
    if !(1..=d).contains(&j) {
        return Err(Error::IndexOutOfRange { j, d });
    }
    let i = d - j;
    // [H] = -e0
    let mut u = CohClass::e0().scale(&rat(i));
    for (v, pd) in r.derived.points.iter().enumerate() {
        u = &u + &CohClass::ev(v).scale(&rat(floor_div(i * pd.mult, d)));
    }
    for (l, &(_, ml)) in r.components.iter().enumerate() {
        u = &u + &strict_transform(r, l).scale(&rat(floor_div(i * ml, d)));
    }
    Ok(u)
}

/// Characteristic classes of the blown-up plane that do not depend on the
/// twist, computed once per graph.
#[derive(Clone, Debug)]
pub struct HrrContext {
    resolved: Resolved,
    chern_log: CohClass,
    todd: CohClass,
    /// `ch(wedge^p Omega^1(log Z)) * Td` for `p = 0, 1, 2`.
    weighted: [CohClass; 3],
}

impl HrrContext {
    pub fn new(g: &ArrangementGraph) -> Result<Self> {
        Ok(Self::from_resolved(g.resolve()?))
    }

    pub fn from_resolved(resolved: Resolved) -> Self {
        let todd = todd_from_chern(&chern_tangent_resolved(&resolved));
        let chern_log = chern_cotangent_log_resolved(&resolved);
        let weighted = [0, 1, 2].map(|p| &wedge_ch(&chern_log, p).expect("rank 2") * &todd);
        Self {
            resolved,
            chern_log,
            todd,
            weighted,
        }
    }

    pub fn resolved(&self) -> &Resolved {
        &self.resolved
    }

    pub fn chern_log(&self) -> &CohClass {
        &self.chern_log
    }

    pub fn todd(&self) -> &CohClass {
        &self.todd
    }

    pub fn u_class(&self, j: i64) -> Result<CohClass> {
        u_class_resolved(&self.resolved, j)
    }

    /// `chi(wedge^p Omega^1(log Z) (x) O(U))` for a divisor class `u`.
    pub fn chi(&self, p: u32, u: &CohClass) -> Result<BigInt> {
        if !u.is_divisor_class() {
            return Err(Error::Domain("twist must be a divisor class".into()));
        }
        let Some(w) = self.weighted.get(p as usize) else {
            return Err(Error::Domain(format!("wedge power {p} of a rank-2 bundle")));
        };
        let value: BigRational = (w * &u.exp_nilpotent()).integrate();
        if !value.is_integer() {
            return Err(Error::NonIntegral(value.to_string()));
        }
        Ok(value.to_integer())
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        let d = self.resolved.derived.degree;
        let mut out = Spectrum::zero();
        for j in 1..=d {
            let u = self.u_class(j)?;
            for k in 0..3i64 {
                let alpha = Exponent::from_integer(k) + Exponent::new(j, d);
                let mut chi = self.chi((2 - k) as u32, &u)?;
                if alpha == Exponent::from_integer(3) {
                    chi -= 1;
                }
                if k % 2 == 1 {
                    chi = -chi;
                }
                if !chi.is_zero() {
                    out.add_term(alpha, chi);
                }
            }
        }
        Ok(out)
    }
}

pub fn chern_tangent(g: &ArrangementGraph) -> Result<CohClass> {
    Ok(chern_tangent_resolved(&g.resolve()?))
}

pub fn chern_cotangent_log(g: &ArrangementGraph) -> Result<CohClass> {
    Ok(chern_cotangent_log_resolved(&g.resolve()?))
}

pub fn todd(g: &ArrangementGraph) -> Result<CohClass> {
    Ok(todd_from_chern(&chern_tangent(g)?))
}

pub fn u_class(g: &ArrangementGraph, j: i64) -> Result<CohClass> {
    u_class_resolved(&g.resolve()?, j)
}

pub fn chi_p(g: &ArrangementGraph, p: u32, u: &CohClass) -> Result<BigInt> {
    HrrContext::new(g)?.chi(p, u)
}

pub fn spectrum_via_hrr(g: &ArrangementGraph) -> Result<Spectrum> {
    HrrContext::new(g)?.spectrum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::u_coeffs;
    use crate::graph::GraphBuilder;

    fn sp(s: &str) -> Spectrum {
        s.parse().unwrap()
    }

    fn nodal_cubic() -> ArrangementGraph {
        GraphBuilder::new()
            .component("c", 3, 1)
            .point("v", &[("c", 2)])
            .build()
    }

    fn conic() -> ArrangementGraph {
        GraphBuilder::new().component("q", 2, 1).build()
    }

    #[test]
    fn tangent_chern_class() {
        let c = chern_tangent(&conic()).unwrap();
        let expected = CohClass::from_parts(rat(1), rat(-3), [], rat(3));
        assert_eq!(c, expected);
        let c = chern_tangent(&nodal_cubic()).unwrap();
        assert_eq!(*c.coeff_top(), rat(4));
        assert_eq!(c.coeff_ev(0), rat(-1));
    }

    #[test]
    fn cotangent_is_dual() {
        let g = GraphBuilder::new()
            .component("a", 2, 1)
            .component("b", 1, 1)
            .point("p", &[("a", 1), ("b", 1)])
            .point("q", &[("a", 2)])
            .build();
        let r = g.resolve().unwrap();
        let t = chern_tangent_resolved(&r);
        let o = chern_cotangent_resolved(&r);
        assert_eq!(o.linear_part(), -&t.linear_part());
        assert_eq!(o.top_part(), t.top_part());
    }

    #[test]
    fn log_first_chern_class() {
        let c = chern_cotangent_log(&conic()).unwrap();
        assert_eq!(*c.coeff_e0(), rat(1));
        let c = chern_cotangent_log(&nodal_cubic()).unwrap();
        assert_eq!(*c.coeff_e0(), rat(0));
        assert_eq!(c.coeff_ev(0), rat(0));
    }

    #[test]
    fn wedge_powers() {
        assert_eq!(
            wedge_ch(&CohClass::one(), 1).unwrap(),
            CohClass::scalar(rat(2))
        );
        let d = 5;
        let c = chern_cotangent_log(&GraphBuilder::new().component("c", d, 1).build()).unwrap();
        let expected = CohClass::from_parts(rat(1), rat(-(d - 3)), [], frac((d - 3) * (d - 3), 2));
        assert_eq!(wedge_ch(&c, 2).unwrap(), expected);
        assert_eq!(wedge_ch(&c, 0).unwrap(), CohClass::one());
        assert!(wedge_ch(&c, 3).is_err());
        assert!(wedge_ch(&CohClass::e0(), 1).is_err());
    }

    #[test]
    fn wedge_determinant_is_exponential_of_c1() {
        let c = chern_cotangent_log(&nodal_cubic()).unwrap();
        assert_eq!(wedge_ch(&c, 2).unwrap(), c.linear_part().exp_nilpotent());
        let rank_sum =
            &(&wedge_ch(&c, 0).unwrap() + &wedge_ch(&c, 2).unwrap()) - &wedge_ch(&c, 1).unwrap();
        assert!(rank_sum.constant().is_zero());
    }

    #[test]
    fn todd_class() {
        let t = todd(&conic()).unwrap();
        assert_eq!(t, CohClass::from_parts(rat(1), frac(-3, 2), [], rat(1)));
        let two_points = GraphBuilder::new()
            .component("a", 1, 1)
            .component("b", 1, 1)
            .component("c", 1, 1)
            .point("p", &[("a", 1), ("b", 1)])
            .point("q", &[("a", 1), ("c", 1)])
            .build();
        let t = todd(&two_points).unwrap();
        assert_eq!(*t.coeff_top(), rat(1));
        assert_eq!(t.integrate(), rat(1));
    }

    #[test]
    fn twisting_class() {
        let g = nodal_cubic();
        let u = u_class(&g, 1).unwrap();
        assert_eq!(
            u,
            CohClass::from_parts(rat(0), rat(2), [(0, rat(1))], rat(0))
        );
        let u = u_class(&g, 3).unwrap();
        assert!(u.coeff_e0().is_zero());
        assert!(u_class(&g, 4).is_err());

        let g = GraphBuilder::new()
            .component("x", 1, 2)
            .component("y", 1, 3)
            .component("c", 2, 1)
            .point("p", &[("x", 1), ("y", 1), ("c", 1)])
            .build();
        for j in 1..=7 {
            let u = u_class(&g, j).unwrap();
            let k = u_coeffs(&g, j).unwrap();
            assert_eq!(*u.coeff_e0(), rat(k.u0));
            assert_eq!(u.coeff_ev(0), rat(k.uv[0]));
        }
    }

    #[test]
    fn euler_characteristics() {
        let g = nodal_cubic();
        assert_eq!(chi_p(&g, 0, &CohClass::zero()).unwrap(), BigInt::from(1));
        assert_eq!(chi_p(&g, 2, &CohClass::zero()).unwrap(), BigInt::from(1));
        assert!(chi_p(&g, 0, &CohClass::one()).is_err());
        assert!(chi_p(&g, 3, &CohClass::zero()).is_err());
    }

    #[test]
    fn hrr_reproduces_fixtures() {
        assert_eq!(
            spectrum_via_hrr(&nodal_cubic()).unwrap(),
            sp("t + 2*t^(4/3) + 2*t^(5/3)")
        );
        let g = GraphBuilder::new()
            .component("f1", 1, 1)
            .component("f3", 3, 1)
            .point("v1", &[("f1", 1), ("f3", 2)])
            .point("v2", &[("f1", 1), ("f3", 1)])
            .build();
        assert_eq!(
            spectrum_via_hrr(&g).unwrap(),
            sp("2*t + 2*t^(5/4) + 2*t^(3/2) + 2*t^(7/4) - t^2")
        );
        let g = GraphBuilder::new()
            .component("x", 1, 2)
            .component("y", 1, 2)
            .point("o", &[("x", 1), ("y", 1)])
            .build();
        assert_eq!(
            spectrum_via_hrr(&g).unwrap(),
            sp("-t^(3/2) - t^2 + t^(5/2)")
        );
    }
}
