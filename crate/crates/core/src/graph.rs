//! Decorated incidence graph of a plane curve arrangement.
//!
//! Components carry their degree `d_l` and multiplicity `m_l` in the defining
//! polynomial; singular points carry the multiplicity `m_{v,l}` of each branch
//! through them. Nothing else about the curve is needed.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: String,
    pub degree: i64,
    #[serde(default = "one")]
    pub multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub component: String,
    #[serde(default = "one")]
    pub mult: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub id: String,
    pub branches: Vec<Branch>,
}

/// The arrangement file format: `{"components": [...], "points": [...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementGraph {
    pub components: Vec<Component>,
    #[serde(default)]
    pub points: Vec<SingularPoint>,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub code: &'static str,
    pub message: String,
    pub location: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Issue>,
    pub warnings: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }

    fn error(&mut self, code: &'static str, location: impl Into<String>, message: String) {
        self.errors.push(Issue {
            code,
            message,
            location: location.into(),
        });
    }

    fn warn(&mut self, code: &'static str, location: impl Into<String>, message: String) {
        self.warnings.push(Issue {
            code,
            message,
            location: location.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (kind, list) in [("error", &self.errors), ("warning", &self.warnings)] {
            for i in list {
                writeln!(f, "{kind}[{}] {}: {}", i.code, i.location, i.message)?;
            }
        }
        Ok(())
    }
}

/// Aggregate multiplicities at one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointData {
    /// `m_v = sum_l m_l m_{v,l}`, multiplicity of `f`.
    pub mult: i64,
    /// `m_{v,red} = sum_l m_{v,l}`, multiplicity of the reduced curve.
    pub mult_red: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    /// `d = sum_l m_l d_l`
    pub degree: i64,
    /// `d_red = sum_l d_l`
    pub degree_red: i64,
    /// One entry per point, in graph order.
    pub points: Vec<PointData>,
}

/// Graph with component references resolved to indices.
///
/// Only constructed from graphs that passed validation, so all the indices
/// are in range and all the numbers are positive.
#[derive(Clone, Debug)]
pub struct Resolved {
    /// `(d_l, m_l)` per component.
    pub components: Vec<(i64, i64)>,
    /// `(component index, m_{v,l})` per point.
    pub points: Vec<Vec<(usize, i64)>>,
    pub derived: Derived,
}

impl Resolved {
    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|&(_, m)| m == 1)
    }
}

impl ArrangementGraph {
    pub fn new(components: Vec<Component>, points: Vec<SingularPoint>) -> Self {
        Self { components, points }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializing plain data")
    }

    /// Reports every violated invariant; never fails.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.components.is_empty() {
            report.error(
                "no-components",
                "graph",
                "at least one component is required".into(),
            );
        }

        let mut degrees = HashMap::new();
        for c in &self.components {
            let loc = format!("component {}", c.id);
            if degrees.insert(c.id.as_str(), c.degree).is_some() {
                report.error(
                    "duplicate-component",
                    &loc,
                    "component id used twice".into(),
                );
            }
            if c.degree < 1 {
                report.error(
                    "degree",
                    &loc,
                    format!("degree {} is not positive", c.degree),
                );
            }
            if c.multiplicity < 1 {
                report.error(
                    "multiplicity",
                    &loc,
                    format!("multiplicity {} is not positive", c.multiplicity),
                );
            }
        }

        let mut point_ids = HashSet::new();
        for p in &self.points {
            let loc = format!("point {}", p.id);
            if !point_ids.insert(p.id.as_str()) {
                report.error("duplicate-point", &loc, "point id used twice".into());
            }
            if p.branches.is_empty() {
                report.error("no-branches", &loc, "point lies on no component".into());
                continue;
            }
            let mut seen = BTreeSet::new();
            let mut bad = false;
            for b in &p.branches {
                if !seen.insert(b.component.as_str()) {
                    bad = true;
                    report.error(
                        "duplicate-branch",
                        &loc,
                        format!("component {} listed twice", b.component),
                    );
                }
                if b.mult < 1 {
                    bad = true;
                    report.error(
                        "branch-mult",
                        &loc,
                        format!(
                            "branch multiplicity {} on {} is not positive",
                            b.mult, b.component
                        ),
                    );
                }
                match degrees.get(b.component.as_str()) {
                    None => {
                        bad = true;
                        report.error(
                            "unknown-component",
                            &loc,
                            format!("references missing component {}", b.component),
                        );
                    }
                    Some(&d) if b.mult > d && d >= 1 => {
                        bad = true;
                        report.error(
                            "branch-exceeds-degree",
                            &loc,
                            format!(
                                "multiplicity {} on {} exceeds its degree {d}",
                                b.mult, b.component
                            ),
                        );
                    }
                    Some(_) => {}
                }
            }
            if bad {
                continue;
            }
            let mult_red: i64 = p.branches.iter().map(|b| b.mult).sum();
            if mult_red == 1 {
                report.warn(
                    "smooth-point",
                    &loc,
                    "point is smooth on the curve and contributes nothing".into(),
                );
            } else if p.branches.len() == 2 && p.branches.iter().all(|b| b.mult == 1) {
                report.warn(
                    "snc-node",
                    &loc,
                    "normal crossing of two components; may be omitted".into(),
                );
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report))
        }
    }

    pub fn resolve(&self) -> Result<Resolved> {
        self.ensure_valid()?;
        let index: HashMap<&str, usize> = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.as_str(), i))
            .collect();
        let components: Vec<(i64, i64)> = self
            .components
            .iter()
            .map(|c| (c.degree, c.multiplicity))
            .collect();
        let points: Vec<Vec<(usize, i64)>> = self
            .points
            .iter()
            .map(|p| {
                p.branches
                    .iter()
                    .map(|b| (index[b.component.as_str()], b.mult))
                    .collect()
            })
            .collect();
        let derived = Derived {
            degree: components.iter().map(|(d, m)| d * m).sum(),
            degree_red: components.iter().map(|(d, _)| d).sum(),
            points: points
                .iter()
                .map(|branches| PointData {
                    mult: branches.iter().map(|&(l, k)| components[l].1 * k).sum(),
                    mult_red: branches.iter().map(|&(_, k)| k).sum(),
                })
                .collect(),
        };
        Ok(Resolved {
            components,
            points,
            derived,
        })
    }

    /// `d`, `d_red`, and per-point `m_v`, `m_{v,red}`.
    pub fn derived(&self) -> Result<Derived> {
        Ok(self.resolve()?.derived)
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.multiplicity == 1)
    }
}

/// Small builder used by tests and examples.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    graph: ArrangementGraph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn component(mut self, id: &str, degree: i64, multiplicity: i64) -> Self {
        self.graph.components.push(Component {
            id: id.into(),
            degree,
            multiplicity,
        });
        self
    }

    pub fn point(mut self, id: &str, branches: &[(&str, i64)]) -> Self {
        self.graph.points.push(SingularPoint {
            id: id.into(),
            branches: branches
                .iter()
                .map(|&(c, mult)| Branch {
                    component: c.into(),
                    mult,
                })
                .collect(),
        });
        self
    }

    pub fn build(self) -> ArrangementGraph {
        self.graph
    }
}
