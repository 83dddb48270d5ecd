//! Exact Hodge spectra of homogeneous polynomials in three variables whose
//! reduced zero locus is a plane curve arrangement with only ordinary
//! multiple points.
//!
//! The input is purely combinatorial ([`ArrangementGraph`]). Spectra are
//! computed by the closed formulas in [`closed_form`] and, independently, by
//! Hirzebruch–Riemann–Roch on the blown-up plane in [`hrr`].

pub mod binom;
pub mod check;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod hrr;
pub mod lines;
pub mod random;
pub mod spectrum;

pub use closed_form::{
    spectrum_binary_linear, spectrum_general, spectrum_hyperplane, spectrum_irreducible_power,
    spectrum_isolated, spectrum_reduced, spectrum_smooth_components, u_coeffs, UCoefficients,
};
pub use error::{Error, Result};
pub use graph::{
    ArrangementGraph, Branch, Component, GraphBuilder, SingularPoint, ValidationReport,
};
pub use hrr::{spectrum_via_hrr, CohClass, HrrContext};
pub use spectrum::{Exponent, Spectrum, Style};
