//! Loads an arrangement file, reports validation findings and prints the
//! spectrum in all three output styles.
//!
//!     cargo run --example arrangement_file -- crates/core/data/line_and_nodal_cubic.json

use arrspec::{spectrum_general, ArrangementGraph, Style};

fn main() -> arrspec::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/data/line_and_nodal_cubic.json"
        )
        .into()
    });
    let g = ArrangementGraph::load(&path)?;
    print!("{}", g.validate());
    let d = g.derived()?;
    println!("d = {}, d_red = {}", d.degree, d.degree_red);
    let s = spectrum_general(&g)?;
    for style in [Style::Plain, Style::Latex, Style::Json] {
        println!("{}", s.render(style));
    }
    Ok(())
}
