//! Acceptance gate: every criterion runs at its stated tolerance (exact
//! equality throughout) and prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use arrspec::check::{run_check, with_normal_crossing, with_smooth_point, CheckConfig};
use arrspec::graph::GraphBuilder;
use arrspec::hrr::{self, closed, HrrContext};
use arrspec::lines::{incidence_graph, LinearForm};
use arrspec::random::{
    random_binary_mults, random_graph, random_unimodular, Family, GraphBounds, Rng,
};
use arrspec::{
    spectrum_binary_linear, spectrum_general, spectrum_hyperplane, spectrum_irreducible_power,
    spectrum_isolated, spectrum_reduced, spectrum_smooth_components, spectrum_via_hrr,
    ArrangementGraph, Exponent, Spectrum,
};
use num_bigint::BigInt;

type Outcome = Result<(), String>;

fn sp(s: &str) -> Spectrum {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn monomial_xy(m1: i64, m2: i64) -> ArrangementGraph {
    GraphBuilder::new()
        .component("x", 1, m1)
        .component("y", 1, m2)
        .point("o", &[("x", 1), ("y", 1)])
        .build()
}

/// `-t^{1+1/g} (1-t)^2 / (1 - t^{1/g}) - t^3`, expanded by polynomial algebra.
fn monomial_oracle(g: i64) -> Spectrum {
    let t = |p: i64, q: i64| Spectrum::monomial(1, Exponent::new(p, q));
    let one_minus_t = &Spectrum::one() - &t(1, 1);
    let divisor = &Spectrum::one() - &t(1, g);
    // (1 - t) / (1 - t^{1/g}) = 1 + t^{1/g} + ... + t^{(g-1)/g}
    let geometric = Spectrum::from_terms((0..g).map(|i| (Exponent::new(i, g), 1)));
    assert_eq!(geometric.mul(&divisor), one_minus_t, "quotient is exact");
    let quotient = one_minus_t.mul(&geometric);
    let lead = Spectrum::monomial(-1, Exponent::new(g + 1, g));
    &lead.mul(&quotient) - &t(3, 1)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let nodal = GraphBuilder::new()
        .component("f3", 3, 1)
        .point("v", &[("f3", 2)])
        .build();
    let got = spectrum_general(&nodal).map_err(|e| e.to_string())?;
    ensure(got == sp("t + 2*t^(4/3) + 2*t^(5/3)"), || {
        format!("nodal cubic: {got}")
    })?;

    let line_cubic = GraphBuilder::new()
        .component("f1", 1, 1)
        .component("f3", 3, 1)
        .point("v1", &[("f1", 1), ("f3", 2)])
        .point("v2", &[("f1", 1), ("f3", 1)])
        .build();
    let got = spectrum_reduced(&line_cubic).map_err(|e| e.to_string())?;
    let want = sp("2*t + 2*t^(5/4) + 2*t^(6/4) + 2*t^(7/4) - t^2");
    ensure(got == want, || format!("line and cubic: {got}"))?;

    let got = spectrum_general(&monomial_xy(1, 1)).map_err(|e| e.to_string())?;
    ensure(got == sp("-t^2"), || format!("xy: {got}"))?;
    ensure(monomial_oracle(1) == sp("-t^2"), || "oracle at g=1".into())?;
    for (m1, m2, g) in [(2, 2, 2), (2, 4, 2), (3, 6, 3)] {
        let got = spectrum_general(&monomial_xy(m1, m2)).map_err(|e| e.to_string())?;
        let want = monomial_oracle(g);
        ensure(got == want, || format!("x^{m1} y^{m2}: {got} vs {want}"))?;
    }
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let report = run_check(
        &CheckConfig {
            count: 200,
            seed: 1,
            bounds: GraphBounds::default(),
        },
        spectrum_general,
    );
    ensure(report.ok() && report.render() == "200/200 ok\n", || {
        report.render()
    })?;
    within(start, Duration::from_secs(10))
}

const SPECIAL_SEED: u64 = 3;
const INVARIANCE_SEED: u64 = 5;
const CLASSES_SEED: u64 = 7;

fn family_graphs(seed: u64, family: Family, n: usize) -> Vec<ArrangementGraph> {
    let mut rng = Rng::new(seed);
    (0..n)
        .map(|_| random_graph(&mut rng, GraphBounds::default(), family))
        .collect()
}

/// Lines through one point with the given multiplicities: the cone over a
/// binary form.
fn pencil(mults: &[i64]) -> ArrangementGraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<String> = (0..mults.len()).map(|i| format!("l{i}")).collect();
    for (id, &m) in ids.iter().zip(mults) {
        b = b.component(id, 1, m);
    }
    let branches: Vec<(&str, i64)> = ids.iter().map(|id| (id.as_str(), 1)).collect();
    b.point("o", &branches).build()
}

fn special_graphs() -> Vec<(Family, Vec<ArrangementGraph>)> {
    [
        Family::Reduced,
        Family::SmoothComponents,
        Family::Lines,
        Family::IrreduciblePower,
    ]
    .into_iter()
    .enumerate()
    .map(|(i, f)| (f, family_graphs(SPECIAL_SEED + i as u64 * 100, f, 100)))
    .collect()
}

fn binary_samples() -> Vec<Vec<i64>> {
    let mut rng = Rng::new(SPECIAL_SEED + 1000);
    (0..100)
        .map(|_| random_binary_mults(&mut rng, 6, 4))
        .collect()
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for (family, graphs) in special_graphs() {
        for g in &graphs {
            let general = spectrum_general(g).map_err(|e| e.to_string())?;
            let special = match family {
                Family::Reduced => spectrum_reduced(g),
                Family::SmoothComponents => spectrum_smooth_components(g),
                Family::Lines => spectrum_hyperplane(g),
                Family::IrreduciblePower => {
                    let c = &g.components[0];
                    let mults: Vec<i64> = g.points.iter().map(|p| p.branches[0].mult).collect();
                    spectrum_irreducible_power(c.degree, c.multiplicity, &mults)
                }
                Family::Any => unreachable!(),
            }
            .map_err(|e| e.to_string())?;
            ensure(special == general, || {
                format!("{family:?}: {special} vs {general}\n{}", g.to_json())
            })?;
        }
    }
    for mults in binary_samples() {
        let shifted = spectrum_binary_linear(&mults)
            .map_err(|e| e.to_string())?
            .dummy_shift();
        let general = spectrum_general(&pencil(&mults)).map_err(|e| e.to_string())?;
        ensure(shifted == general, || {
            format!("binary {mults:?}: {shifted} vs {general}")
        })?;
    }
    within(start, Duration::from_secs(10))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for d in 1..=12 {
        let g = GraphBuilder::new().component("c", d, 1).build();
        let general = spectrum_general(&g).map_err(|e| e.to_string())?;
        let isolated = spectrum_isolated(d, 3);
        ensure(general == isolated, || {
            format!("d={d}: {general} vs {isolated}")
        })?;
        let mu = general.eval_at_one();
        ensure(mu == BigInt::from((d - 1).pow(3)), || {
            format!("d={d}: Milnor number {mu}")
        })?;
    }
    within(start, Duration::from_secs(1))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut crossings = 0;
    for g in family_graphs(INVARIANCE_SEED, Family::Any, 100) {
        let base = spectrum_general(&g).map_err(|e| e.to_string())?;
        for c in &g.components {
            let s = spectrum_general(&with_smooth_point(&g, &c.id)).map_err(|e| e.to_string())?;
            ensure(s == base, || {
                format!("smooth point on {}: {s} vs {base}", c.id)
            })?;
        }
        if let Some(h) = with_normal_crossing(&g) {
            crossings += 1;
            let s = spectrum_general(&h).map_err(|e| e.to_string())?;
            ensure(s == base, || {
                format!("normal crossing: {s} vs {base}\n{}", h.to_json())
            })?;
        }
    }
    ensure(crossings >= 50, || {
        format!("only {crossings} graphs admitted a crossing")
    })?;
    within(start, Duration::from_secs(5))
}

fn criterion_6() -> Outcome {
    for g in family_graphs(CLASSES_SEED, Family::Any, 100) {
        let r = g.resolve().map_err(|e| e.to_string())?;
        let ctx = HrrContext::from_resolved(r.clone());
        ensure(*ctx.chern_log() == closed::chern_cotangent_log(&r), || {
            format!("log Chern class\n{}", g.to_json())
        })?;
        ensure(*ctx.todd() == closed::todd(&r), || {
            format!("Todd class\n{}", g.to_json())
        })?;
        ensure(
            hrr::chern_tangent_resolved(&r) == closed::chern_tangent(&r),
            || format!("tangent Chern class\n{}", g.to_json()),
        )?;
    }
    // every chi_p evaluation behind criteria 2-5; a non-integral value is an error
    let mut rng = Rng::new(1);
    let mut graphs: Vec<ArrangementGraph> = (0..200)
        .map(|_| random_graph(&mut rng, GraphBounds::default(), Family::Any))
        .collect();
    graphs.extend(special_graphs().into_iter().flat_map(|(_, gs)| gs));
    graphs.extend(binary_samples().iter().map(|m| pencil(m)));
    graphs.extend((1..=12).map(|d| GraphBuilder::new().component("c", d, 1).build()));
    for g in family_graphs(INVARIANCE_SEED, Family::Any, 100) {
        graphs.extend(with_normal_crossing(&g));
        graphs.push(with_smooth_point(&g, &g.components[0].id));
        graphs.push(g);
    }
    let mut evaluations = 0usize;
    for g in &graphs {
        let ctx = HrrContext::new(g).map_err(|e| e.to_string())?;
        let d = ctx.resolved().derived.degree;
        for j in 1..=d {
            let u = ctx.u_class(j).map_err(|e| e.to_string())?;
            for p in 0..3 {
                ctx.chi(p, &u)
                    .map_err(|e| format!("{e}\n{}", g.to_json()))?;
                evaluations += 1;
            }
        }
    }
    ensure(evaluations > 10_000, || {
        format!("only {evaluations} evaluations")
    })
}

fn criterion_7() -> Outcome {
    for d in 2..=10 {
        let s = spectrum_binary_linear(&vec![1; d as usize]).map_err(|e| e.to_string())?;
        ensure(s == spectrum_isolated(d, 2), || format!("d={d}: {s}"))?;
    }
    let s = spectrum_binary_linear(&[1, 1])
        .map_err(|e| e.to_string())?
        .dummy_shift();
    ensure(s == sp("-t^2"), || format!("shifted xy: {s}"))
}

fn form(a: i64, b: i64, c: i64) -> LinearForm {
    LinearForm::from_i64(a, b, c).unwrap()
}

/// Sorted branch counts of the points, a coordinate-free fingerprint.
fn point_profile(g: &ArrangementGraph) -> Vec<usize> {
    let mut v: Vec<usize> = g.points.iter().map(|p| p.branches.len()).collect();
    v.sort_unstable();
    v
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let triangle = [(form(1, 0, 0), 1), (form(0, 1, 0), 1), (form(0, 0, 1), 1)];
    let pencil = [(form(1, 0, 0), 1), (form(0, 1, 0), 1), (form(1, -1, 0), 1)];

    let g = incidence_graph(&triangle).map_err(|e| e.to_string())?;
    ensure(point_profile(&g) == vec![2, 2, 2], || {
        format!("triangle points {:?}", point_profile(&g))
    })?;
    let s = spectrum_hyperplane(&g).map_err(|e| e.to_string())?;
    ensure(s == sp("t - 2*t^2"), || format!("triangle: {s}"))?;
    let h = spectrum_via_hrr(&g).map_err(|e| e.to_string())?;
    ensure(h == s, || format!("triangle via Riemann-Roch: {h}"))?;

    let g = incidence_graph(&pencil).map_err(|e| e.to_string())?;
    ensure(point_profile(&g) == vec![3], || {
        format!("pencil points {:?}", point_profile(&g))
    })?;
    let pencil_spectrum = spectrum_hyperplane(&g).map_err(|e| e.to_string())?;

    let mut rng = Rng::new(2024);
    for _ in 0..20 {
        let m = random_unimodular(&mut rng);
        for (forms, profile, want) in [
            (&triangle, vec![2, 2, 2], &s),
            (&pencil, vec![3], &pencil_spectrum),
        ] {
            let moved: Vec<(LinearForm, i64)> = forms
                .iter()
                .map(|(f, k)| Ok((f.pull_back(&m)?, *k)))
                .collect::<arrspec::Result<_>>()
                .map_err(|e| e.to_string())?;
            let g = incidence_graph(&moved).map_err(|e| e.to_string())?;
            ensure(point_profile(&g) == profile, || {
                format!("{m:?} changed incidences")
            })?;
            let got = spectrum_hyperplane(&g).map_err(|e| e.to_string())?;
            ensure(&got == want, || format!("{m:?}: {got} vs {want}"))?;
        }
    }
    within(start, Duration::from_secs(2))
}

type Criterion = fn() -> Outcome;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 worked examples reproduced exactly", criterion_1),
        (
            "2 closed formula equals Riemann-Roch on 200 random graphs",
            criterion_2,
        ),
        (
            "3 special-case formulas equal the general formula",
            criterion_3,
        ),
        (
            "4 smooth curves match the isolated closed form",
            criterion_4,
        ),
        (
            "5 adding nodes or smooth points leaves the spectrum unchanged",
            criterion_5,
        ),
        (
            "6 characteristic classes agree two ways; chi is integral",
            criterion_6,
        ),
        ("7 binary forms and the dummy-variable shift", criterion_7),
        ("8 line geometry and coordinate invariance", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match &outcome {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(msg) => {
                println!("FAIL  {name}  ({took:.2?})\n      {msg}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
