//! Reproducible random arrangement graphs.
//!
//! The stream is SplitMix64 seeded with the user's 64-bit seed. Every draw is
//! `lo + next_u64() % (hi - lo + 1)`, and draws happen in the order written
//! in [`random_graph`], so the same seed gives the same graphs in any
//! language that follows these steps.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{ArrangementGraph, Branch, Component, SingularPoint};

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `lo..=hi` (modulo reduction).
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }
}

/// Size limits for generated graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphBounds {
    pub max_components: usize,
    pub max_points: usize,
    pub max_degree: i64,
    pub max_mult: i64,
}

impl Default for GraphBounds {
    fn default() -> Self {
        Self {
            max_components: 5,
            max_points: 8,
            max_degree: 4,
            max_mult: 4,
        }
    }
}

/// Which family of graphs to draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Any,
    /// every `m_l = 1`
    Reduced,
    /// every `m_{v,l} = 1`
    SmoothComponents,
    /// every `d_l = 1`
    Lines,
    /// one component, every point of multiplicity `>= 2` on it
    IrreduciblePower,
}

/// Draws one graph:
///
/// 1. component count in `1..=max_components` (1 for `IrreduciblePower`);
/// 2. per component, degree in `1..=max_degree` then multiplicity in
///    `1..=max_mult` (skipped draws are fixed to 1 by the family);
/// 3. point count in `1..=max_points` (0 if `max_points == 0`);
/// 4. per point, a nonempty component subset as a bit mask in
///    `1..=2^L - 1`, then per chosen component a branch multiplicity in
///    `1..=d_l` (`2..=d_l` for `IrreduciblePower`);
/// 5. if the first point is a node of two smooth branches, it is made
///    non-normal-crossing by adding the first unused component, or failing
///    that by raising the first branch on a curve of degree `>= 2` to 2.
pub fn random_graph(rng: &mut Rng, bounds: GraphBounds, family: Family) -> ArrangementGraph {
    let n_comp = match family {
        Family::IrreduciblePower => 1,
        _ => rng.range(1, bounds.max_components.max(1) as i64) as usize,
    };
    let mut components = Vec::with_capacity(n_comp);
    for l in 0..n_comp {
        let degree = match family {
            Family::Lines => 1,
            Family::IrreduciblePower => rng.range(2, bounds.max_degree.max(2)),
            _ => rng.range(1, bounds.max_degree.max(1)),
        };
        let multiplicity = match family {
            Family::Reduced => 1,
            _ => rng.range(1, bounds.max_mult.max(1)),
        };
        components.push(Component {
            id: format!("c{l}"),
            degree,
            multiplicity,
        });
    }

    let n_points = if bounds.max_points == 0 {
        0
    } else {
        rng.range(1, bounds.max_points as i64) as usize
    };
    let mut incidences: Vec<Vec<(usize, i64)>> = Vec::with_capacity(n_points);
    for _ in 0..n_points {
        let mask = rng.range(1, (1i64 << n_comp) - 1);
        let mut branches = Vec::new();
        for (l, c) in components.iter().enumerate() {
            if mask & (1 << l) == 0 {
                continue;
            }
            let mult = match family {
                Family::SmoothComponents | Family::Lines => 1,
                Family::IrreduciblePower => rng.range(2, c.degree),
                _ => rng.range(1, c.degree),
            };
            branches.push((l, mult));
        }
        incidences.push(branches);
    }

    if let Some(first) = incidences.first_mut() {
        let is_node = first.len() == 2 && first.iter().all(|&(_, k)| k == 1);
        if is_node {
            if let Some(l) = (0..n_comp).find(|l| first.iter().all(|(c, _)| c != l)) {
                first.push((l, 1));
                first.sort_unstable();
            } else if !matches!(family, Family::SmoothComponents | Family::Lines) {
                if let Some(b) = first.iter_mut().find(|(l, _)| components[*l].degree >= 2) {
                    b.1 = 2;
                }
            }
        }
    }

    let points = incidences
        .into_iter()
        .enumerate()
        .map(|(v, branches)| SingularPoint {
            id: format!("p{v}"),
            branches: branches
                .into_iter()
                .map(|(l, mult)| Branch {
                    component: components[l].id.clone(),
                    mult,
                })
                .collect(),
        })
        .collect();
    ArrangementGraph::new(components, points)
}

/// Multiplicities of `1..=max_forms` distinct binary linear forms.
pub fn random_binary_mults(rng: &mut Rng, max_forms: usize, max_mult: i64) -> Vec<i64> {
    let n = rng.range(1, max_forms.max(1) as i64);
    (0..n).map(|_| rng.range(1, max_mult.max(1))).collect()
}

/// Product of 12 random elementary integer matrices, hence determinant 1.
pub fn random_unimodular(rng: &mut Rng) -> [[i64; 3]; 3] {
    let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..12 {
        let i = rng.range(0, 2) as usize;
        let j = (i + rng.range(1, 2) as usize) % 3;
        let k = rng.range(-2, 2);
        // row_i += k * row_j
        let src = m[j];
        for (dst, s) in m[i].iter_mut().zip(src) {
            *dst += k * s;
        }
    }
    m
}
