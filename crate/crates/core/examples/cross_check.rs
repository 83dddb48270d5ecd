//! Randomized agreement of every formula with the Riemann–Roch computation.
//!
//!     cargo run --release --example cross_check -- 1000 7

use arrspec::check::{run_check, CheckConfig};
use arrspec::spectrum_general;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let cfg = CheckConfig {
        count,
        seed,
        ..CheckConfig::default()
    };
    let report = run_check(&cfg, spectrum_general);
    print!("{}", report.render());
    if !report.ok() {
        std::process::exit(3);
    }
}
