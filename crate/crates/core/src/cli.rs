//! Command-line front end. Kept in the library so the exit-code contract can
//! be tested without spawning processes.
//!
//! Exit codes: 0 success, 1 unreadable or unparsable input, 2 invalid
//! arrangement or formula not applicable, 3 cross-check mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::check::{run_check, CheckConfig};
use crate::closed_form::{
    spectrum_general, spectrum_hyperplane, spectrum_irreducible_power, spectrum_reduced,
    spectrum_smooth_components,
};
use crate::error::Error;
use crate::graph::{ArrangementGraph, GraphBuilder};
use crate::hrr::spectrum_via_hrr;
use crate::lines::{incidence_graph, load_lines};
use crate::random::GraphBounds;
use crate::spectrum::{Spectrum, Style};

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "arrspec",
    version,
    about = "Hodge spectra of plane curve arrangements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Auto,
    General,
    Reduced,
    Smooth,
    Hyperplane,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum of an arrangement file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Formula::Auto)]
        formula: Formula,
        #[arg(long, value_enum, default_value_t = Style::Plain)]
        style: Style,
        /// Also run the Riemann-Roch computation and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Randomized cross-validation of all formulas.
    Check {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_components: usize,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
        #[arg(long, default_value_t = 4)]
        max_mult: i64,
    },
    /// Spectrum of a line arrangement given by linear forms.
    Lines {
        file: PathBuf,
        /// Write the computed incidence graph as an arrangement file.
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Style::Plain)]
        style: Style,
    },
    /// Print the built-in worked examples with expected spectra.
    Examples,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, e: &Error) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        code
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidGraph(_) | Error::Domain(_) | Error::Empty(_) | Error::ZeroForm => {
            EXIT_INVALID
        }
        Error::NonIntegral(_) | Error::Mismatch(_) => EXIT_MISMATCH,
        _ => EXIT_PARSE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    let mut io = Io { out, err };
    match cli.command {
        Command::Compute {
            file,
            formula,
            style,
            verify,
        } => compute(&mut io, &file, formula, style, verify),
        Command::Check {
            count,
            seed,
            max_components,
            max_points,
            max_degree,
            max_mult,
        } => {
            let cfg = CheckConfig {
                count,
                seed,
                bounds: GraphBounds {
                    max_components,
                    max_points,
                    max_degree,
                    max_mult,
                },
            };
            check_command(&cfg, spectrum_general, io.out)
        }
        Command::Lines {
            file,
            emit_graph,
            style,
        } => lines(&mut io, &file, emit_graph, style),
        Command::Examples => examples(&mut io),
    }
}

/// Most specific applicable formula, always compared against the general one.
pub fn auto_spectrum(g: &ArrangementGraph) -> Result<Spectrum, Error> {
    let general = spectrum_general(g)?;
    let single_branch = g
        .points
        .iter()
        .flat_map(|p| &p.branches)
        .all(|b| b.mult == 1);
    let specific = if g.components.iter().all(|c| c.degree == 1) {
        spectrum_hyperplane(g)?
    } else if single_branch {
        spectrum_smooth_components(g)?
    } else if let [c] = g.components.as_slice() {
        let mults: Vec<i64> = g
            .points
            .iter()
            .map(|p| p.branches[0].mult)
            .filter(|&k| k >= 2)
            .collect();
        spectrum_irreducible_power(c.degree, c.multiplicity, &mults)?
    } else if g.is_reduced() {
        spectrum_reduced(g)?
    } else {
        return Ok(general);
    };
    if specific != general {
        return Err(Error::Mismatch(format!(
            "specialized formula gives {specific}, general gives {general}"
        )));
    }
    Ok(general)
}

fn compute(io: &mut Io, file: &PathBuf, formula: Formula, style: Style, verify: bool) -> i32 {
    let g = match ArrangementGraph::load(file) {
        Ok(g) => g,
        Err(e) => return io.fail(EXIT_PARSE, &e),
    };
    let report = g.validate();
    if !report.is_ok() {
        let _ = write!(io.err, "{report}");
        return EXIT_INVALID;
    }
    let _ = write!(io.err, "{report}");

    let result = match formula {
        Formula::Auto => auto_spectrum(&g),
        Formula::General => spectrum_general(&g),
        Formula::Reduced => spectrum_reduced(&g),
        Formula::Smooth => spectrum_smooth_components(&g),
        Formula::Hyperplane => spectrum_hyperplane(&g),
    };
    let spectrum = match result {
        Ok(s) => s,
        Err(e) => return io.fail(exit_code(&e), &e),
    };
    if verify {
        match spectrum_via_hrr(&g) {
            Ok(h) if h == spectrum => {}
            Ok(h) => {
                let _ = writeln!(io.err, "mismatch: formula {spectrum}, Riemann-Roch {h}");
                return EXIT_MISMATCH;
            }
            Err(e) => return io.fail(EXIT_MISMATCH, &e),
        }
    }
    let _ = writeln!(io.out, "{}", spectrum.render(style));
    0
}

/// The `check` subcommand with the formula under test passed in.
pub fn check_command<F>(cfg: &CheckConfig, general: F, out: &mut dyn Write) -> i32
where
    F: Fn(&ArrangementGraph) -> Result<Spectrum, Error>,
{
    let report = run_check(cfg, general);
    let _ = write!(out, "{}", report.render());
    if report.ok() {
        0
    } else {
        EXIT_MISMATCH
    }
}

fn lines(io: &mut Io, file: &PathBuf, emit_graph: Option<PathBuf>, style: Style) -> i32 {
    let forms = match load_lines(file) {
        Ok(f) => f,
        Err(e) => return io.fail(EXIT_PARSE, &e),
    };
    let g = match incidence_graph(&forms) {
        Ok(g) => g,
        Err(e) => return io.fail(exit_code(&e), &e),
    };
    if let Some(path) = emit_graph {
        if let Err(e) = std::fs::write(&path, g.to_json() + "\n") {
            return io.fail(EXIT_PARSE, &e.into());
        }
    }
    match spectrum_hyperplane(&g) {
        Ok(s) => {
            let _ = writeln!(io.out, "{}", s.render(style));
            0
        }
        Err(e) => io.fail(exit_code(&e), &e),
    }
}

/// The three worked examples: a nodal cubic, a line through its node and
/// another point, and the monomial `x^2 y^2`.
pub fn example_fixtures() -> Vec<(&'static str, ArrangementGraph, &'static str)> {
    vec![
        (
            "nodal cubic x^2z + y^2z - y^3",
            GraphBuilder::new()
                .component("f3", 3, 1)
                .point("v", &[("f3", 2)])
                .build(),
            "t + 2*t^(4/3) + 2*t^(5/3)",
        ),
        (
            "line x times the nodal cubic",
            GraphBuilder::new()
                .component("f1", 1, 1)
                .component("f3", 3, 1)
                .point("v1", &[("f1", 1), ("f3", 2)])
                .point("v2", &[("f1", 1), ("f3", 1)])
                .build(),
            "2*t + 2*t^(5/4) + 2*t^(3/2) + 2*t^(7/4) - t^2",
        ),
        (
            "monomial x^2 y^2",
            GraphBuilder::new()
                .component("x", 1, 2)
                .component("y", 1, 2)
                .point("o", &[("x", 1), ("y", 1)])
                .build(),
            "-t^(3/2) - t^2 + t^(5/2)",
        ),
    ]
}

fn examples(io: &mut Io) -> i32 {
    let mut code = 0;
    for (name, g, expected) in example_fixtures() {
        let got = match spectrum_general(&g) {
            Ok(s) => s.to_string(),
            Err(e) => e.to_string(),
        };
        let status = if got == expected { "ok" } else { "MISMATCH" };
        if got != expected {
            code = EXIT_MISMATCH;
        }
        let _ = writeln!(
            io.out,
            "{name}\n  computed: {got}\n  expected: {expected}  [{status}]"
        );
    }
    code
}
