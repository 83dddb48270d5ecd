//! The three classic fixtures: a nodal cubic, a line through the node of
//! that cubic, and the monomials `x^a y^b`.
//!
//!     cargo run --example worked_examples

use arrspec::{spectrum_general, spectrum_reduced, spectrum_via_hrr, GraphBuilder};

fn main() -> arrspec::Result<()> {
    // f = x^2 z + y^2 z - y^3: one node at (0:0:1)
    let nodal = GraphBuilder::new()
        .component("f3", 3, 1)
        .point("node", &[("f3", 2)])
        .build();
    println!("nodal cubic:        {}", spectrum_general(&nodal)?);

    // x * f3 meets the cubic at the node (triple point) and once more transversally
    let line_cubic = GraphBuilder::new()
        .component("x", 1, 1)
        .component("f3", 3, 1)
        .point("v1", &[("x", 1), ("f3", 2)])
        .point("v2", &[("x", 1), ("f3", 1)])
        .build();
    println!("line and cubic:     {}", spectrum_reduced(&line_cubic)?);

    for (a, b) in [(1, 1), (2, 2), (2, 4), (3, 6), (2, 3)] {
        let g = GraphBuilder::new()
            .component("x", 1, a)
            .component("y", 1, b)
            .point("o", &[("x", 1), ("y", 1)])
            .build();
        let s = spectrum_general(&g)?;
        assert_eq!(s, spectrum_via_hrr(&g)?);
        println!(
            "x^{a} y^{b}:{:width$}{s}",
            "",
            width = 14 - format!("{a}{b}").len()
        );
    }
    Ok(())
}
