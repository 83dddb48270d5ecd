//! Builds the incidence graph of an explicit line arrangement and computes
//! its spectrum; then moves the lines by a coordinate change.
//!
//!     cargo run --example line_arrangement

use arrspec::lines::{incidence_graph, LinearForm};
use arrspec::random::{random_unimodular, Rng};
use arrspec::{spectrum_hyperplane, spectrum_via_hrr};

fn main() -> arrspec::Result<()> {
    // x y z (x - y) (x - z) (y - z), with (x - y) doubled
    let forms = vec![
        (LinearForm::from_i64(1, 0, 0)?, 1),
        (LinearForm::from_i64(0, 1, 0)?, 1),
        (LinearForm::from_i64(0, 0, 1)?, 1),
        (LinearForm::from_i64(1, -1, 0)?, 2),
        (LinearForm::from_i64(1, 0, -1)?, 1),
        (LinearForm::from_i64(0, 1, -1)?, 1),
    ];
    let g = incidence_graph(&forms)?;
    for p in &g.points {
        let on: Vec<&str> = p.branches.iter().map(|b| b.component.as_str()).collect();
        println!("{:>10}  on {}", p.id, on.join(", "));
    }
    let s = spectrum_hyperplane(&g)?;
    println!("spectrum: {s}");
    assert_eq!(s, spectrum_via_hrr(&g)?);

    let m = random_unimodular(&mut Rng::new(42));
    let moved = forms
        .iter()
        .map(|(f, k)| Ok((f.pull_back(&m)?, *k)))
        .collect::<arrspec::Result<Vec<_>>>()?;
    let moved_graph = incidence_graph(&moved)?;
    println!("after {m:?}: {}", spectrum_hyperplane(&moved_graph)?);
    Ok(())
}
