//! Randomized cross-validation of the closed formulas against the
//! Riemann–Roch computation, the special-case formulas, and insertion of
//! points that must not change the spectrum.

use std::fmt::Write as _;

use crate::closed_form::{
    spectrum_hyperplane, spectrum_irreducible_power, spectrum_reduced, spectrum_smooth_components,
};
use crate::error::Result;
use crate::graph::{ArrangementGraph, Branch, SingularPoint};
use crate::hrr::{closed, HrrContext};
use crate::random::{random_graph, Family, GraphBounds, Rng};
use crate::spectrum::Spectrum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub count: usize,
    pub seed: u64,
    pub bounds: GraphBounds,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            count: 200,
            seed: 1,
            bounds: GraphBounds::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub index: usize,
    pub reason: String,
    pub graph: ArrangementGraph,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failures with their graphs as arrangement files, then `passed/total ok`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            let _ = writeln!(out, "instance {}: {}", f.index, f.reason);
            let _ = writeln!(out, "{}", f.graph.to_json());
        }
        let _ = writeln!(out, "{}/{} ok", self.passed, self.total);
        out
    }
}

/// Joint budget `d_a d_b` minus the intersection multiplicity already used by
/// listed common points.
pub fn bezout_slack(g: &ArrangementGraph, a: &str, b: &str) -> Option<i64> {
    let deg = |id: &str| g.components.iter().find(|c| c.id == id).map(|c| c.degree);
    let mut slack = deg(a)? * deg(b)?;
    for p in &g.points {
        let m = |id: &str| {
            p.branches
                .iter()
                .find(|br| br.component == id)
                .map(|br| br.mult)
        };
        if let (Some(x), Some(y)) = (m(a), m(b)) {
            slack -= x * y;
        }
    }
    Some(slack)
}

fn fresh_point_id(g: &ArrangementGraph, stem: &str) -> String {
    (0..)
        .map(|i| format!("{stem}{i}"))
        .find(|id| g.points.iter().all(|p| &p.id != id))
        .expect("unbounded")
}

/// Adds a point lying on `component` only, with a smooth branch.
pub fn with_smooth_point(g: &ArrangementGraph, component: &str) -> ArrangementGraph {
    let mut out = g.clone();
    out.points.push(SingularPoint {
        id: fresh_point_id(g, "smooth"),
        branches: vec![Branch {
            component: component.into(),
            mult: 1,
        }],
    });
    out
}

/// Adds a transversal crossing of the first pair of components that still
/// has room for another intersection point, if any.
pub fn with_normal_crossing(g: &ArrangementGraph) -> Option<ArrangementGraph> {
    let ids: Vec<&str> = g.components.iter().map(|c| c.id.as_str()).collect();
    let (a, b) = ids
        .iter()
        .enumerate()
        .flat_map(|(i, a)| ids[i + 1..].iter().map(move |b| (*a, *b)))
        .find(|(a, b)| bezout_slack(g, a, b).is_some_and(|s| s > 0))?;
    let mut out = g.clone();
    out.points.push(SingularPoint {
        id: fresh_point_id(g, "node"),
        branches: [a, b]
            .map(|c| Branch {
                component: c.into(),
                mult: 1,
            })
            .to_vec(),
    });
    Some(out)
}

/// Every check for one graph; returns the first disagreement.
pub fn check_graph<F>(g: &ArrangementGraph, general: &F) -> Result<Option<String>>
where
    F: Fn(&ArrangementGraph) -> Result<Spectrum>,
{
    let base = general(g)?;
    let ctx = HrrContext::new(g)?;
    let r = ctx.resolved();

    let hrr = ctx.spectrum()?;
    if hrr != base {
        return Ok(Some(format!(
            "formula gives {base} but Riemann-Roch gives {hrr}"
        )));
    }
    if *ctx.chern_log() != closed::chern_cotangent_log(r) {
        return Ok(Some("log Chern class disagrees with its expansion".into()));
    }
    if *ctx.todd() != closed::todd(r) {
        return Ok(Some("Todd class disagrees with its expansion".into()));
    }

    let mut special: Vec<(&str, Spectrum)> = Vec::new();
    if g.is_reduced() {
        special.push(("reduced", spectrum_reduced(g)?));
    }
    if g.points
        .iter()
        .flat_map(|p| &p.branches)
        .all(|b| b.mult == 1)
    {
        special.push(("smooth-components", spectrum_smooth_components(g)?));
    }
    if g.components.iter().all(|c| c.degree == 1) {
        special.push(("hyperplane", spectrum_hyperplane(g)?));
    }
    if let [c] = g.components.as_slice() {
        let mults: Vec<i64> = g
            .points
            .iter()
            .map(|p| p.branches[0].mult)
            .filter(|&k| k >= 2)
            .collect();
        special.push((
            "irreducible-power",
            spectrum_irreducible_power(c.degree, c.multiplicity, &mults)?,
        ));
    }
    for (name, s) in special {
        if s != base {
            return Ok(Some(format!(
                "{name} formula gives {s}, general gives {base}"
            )));
        }
    }

    let smooth = with_smooth_point(g, &g.components[0].id);
    if general(&smooth)? != base {
        return Ok(Some("adding a smooth point changed the spectrum".into()));
    }
    if let Some(node) = with_normal_crossing(g) {
        if general(&node)? != base {
            return Ok(Some("adding a normal crossing changed the spectrum".into()));
        }
    }
    Ok(None)
}

/// Runs `cfg.count` random instances, comparing `general` to everything else.
///
/// `general` is a parameter so the harness can be tested against a
/// deliberately broken formula.
pub fn run_check<F>(cfg: &CheckConfig, general: F) -> CheckReport
where
    F: Fn(&ArrangementGraph) -> Result<Spectrum>,
{
    let mut rng = Rng::new(cfg.seed);
    let mut report = CheckReport {
        total: cfg.count,
        ..CheckReport::default()
    };
    for index in 0..cfg.count {
        let graph = random_graph(&mut rng, cfg.bounds, Family::Any);
        let reason = match check_graph(&graph, &general) {
            Ok(None) => {
                report.passed += 1;
                continue;
            }
            Ok(Some(reason)) => reason,
            Err(e) => e.to_string(),
        };
        report.failures.push(Failure {
            index,
            reason,
            graph,
        });
    }
    report
}
