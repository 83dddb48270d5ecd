//! Fully expanded characteristic classes and Euler characteristics.
//!
//! These are the regression targets for the product computations in the
//! parent module; they are never used to produce a spectrum.

use num_bigint::BigInt;

use super::cohomology::{frac, rat, CohClass};
use crate::binom::binom;
use crate::graph::Resolved;

/// `1 - (sum_v e_v + 3 e0) + (-sum_v e_v^2 + 3 e0^2)`.
pub fn chern_tangent(r: &Resolved) -> CohClass {
    let n = r.points.len() as i64;
    CohClass::from_parts(
        rat(1),
        rat(-3),
        (0..r.points.len()).map(|v| (v, rat(-1))),
        rat(3 + n),
    )
}

/// `1 - (sum_v (m_{v,red} - 2) e_v + (d_red - 3) e0)
///    + sum_v ((m_{v,red}^2 + sum_l m_{v,l}^2)/2 - 2 m_{v,red} + 1) e_v^2
///    + ((d_red^2 + sum_l d_l^2)/2 + 3 (1 - d_red)) e0^2`.
pub fn chern_cotangent_log(r: &Resolved) -> CohClass {
    let d_red = r.derived.degree_red;
    let sum_dl_sq: i64 = r.components.iter().map(|&(dl, _)| dl * dl).sum();
    let mut top = frac(d_red * d_red + sum_dl_sq, 2) + rat(3 * (1 - d_red));
    let mut linear = Vec::new();
    for (v, (branches, pd)) in r.points.iter().zip(&r.derived.points).enumerate() {
        let mr = pd.mult_red;
        let sum_sq: i64 = branches.iter().map(|&(_, k)| k * k).sum();
        linear.push((v, rat(-(mr - 2))));
        // e_v^2 = -e0^2
        top -= frac(mr * mr + sum_sq, 2) - rat(2 * mr) + rat(1);
    }
    CohClass::from_parts(rat(1), rat(-(d_red - 3)), linear, top)
}

/// `1 - (sum_v e_v + 3 e0) / 2 + e0^2`.
pub fn todd(r: &Resolved) -> CohClass {
    CohClass::from_parts(
        rat(1),
        frac(-3, 2),
        (0..r.points.len()).map(|v| (v, frac(-1, 2))),
        rat(1),
    )
}

/// Expanded `chi_p(u)` for `u = u0 e0 + sum_v uv[v] e_v`.
pub fn chi(r: &Resolved, p: u32, u0: i64, uv: &[i64]) -> BigInt {
    let d_red = r.derived.degree_red;
    let pts = || uv.iter().zip(&r.derived.points);
    match p {
        0 => binom(u0 - 1, 2) - uv.iter().map(|&x| binom(x, 2)).sum::<BigInt>(),
        1 => {
            let mut acc = BigInt::from(-(u0 - 1) * (d_red - u0 - 1));
            for (&x, pd) in pts() {
                acc += x * (pd.mult_red - x - 1);
            }
            for &(dl, _) in &r.components {
                acc -= binom(dl, 2);
            }
            for branches in &r.points {
                for &(_, k) in branches {
                    acc += binom(k, 2);
                }
            }
            acc
        }
        2 => {
            binom(d_red - u0 - 1, 2)
                - pts()
                    .map(|(&x, pd)| binom(pd.mult_red - x - 1, 2))
                    .sum::<BigInt>()
        }
        _ => panic!("wedge power {p} of a rank-2 bundle"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::hrr::{
        chern_cotangent_log_resolved, chern_tangent_resolved, todd_from_chern, HrrContext,
    };

    #[test]
    fn products_match_expansions() {
        let g = GraphBuilder::new()
            .component("line", 1, 3)
            .component("cubic", 3, 1)
            .component("conic", 2, 2)
            .point("a", &[("line", 1), ("cubic", 2)])
            .point("b", &[("line", 1), ("cubic", 1), ("conic", 1)])
            .point("c", &[("cubic", 3)])
            .point("s", &[("conic", 1)])
            .build();
        let r = g.resolve().unwrap();
        assert_eq!(chern_tangent_resolved(&r), chern_tangent(&r));
        assert_eq!(chern_cotangent_log_resolved(&r), chern_cotangent_log(&r));
        assert_eq!(todd_from_chern(&chern_tangent_resolved(&r)), todd(&r));

        let ctx = HrrContext::from_resolved(r.clone());
        for u0 in -3..6 {
            for x in -2..4 {
                let uv = [x, 1 - x, 2, 0];
                let u = CohClass::from_parts(
                    rat(0),
                    rat(u0),
                    uv.iter().enumerate().map(|(v, &c)| (v, rat(c))),
                    rat(0),
                );
                for p in 0..3 {
                    assert_eq!(
                        ctx.chi(p, &u).unwrap(),
                        chi(&r, p, u0, &uv),
                        "p={p} u0={u0} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn structure_sheaf_has_euler_characteristic_one() {
        let g = GraphBuilder::new()
            .component("c", 4, 1)
            .point("a", &[("c", 2)])
            .point("b", &[("c", 3)])
            .build();
        let r = g.resolve().unwrap();
        assert_eq!(chi(&r, 0, 0, &[0, 0]), BigInt::from(1));
        // chi_2(0) = C(d_red - 1, 2) - sum C(m_{v,red} - 1, 2)
        assert_eq!(
            chi(&r, 2, 0, &[0, 0]),
            binom(3, 2) - binom(1, 2) - binom(2, 2)
        );
    }
}
