//! The special-case formulas next to the general one, plus the isolated
//! homogeneous singularities and their Milnor numbers.
//!
//!     cargo run --example special_formulas

use arrspec::{
    spectrum_binary_linear, spectrum_general, spectrum_irreducible_power, spectrum_isolated,
    spectrum_smooth_components, GraphBuilder,
};

fn main() -> arrspec::Result<()> {
    // conic times the cube of a secant line
    let g = GraphBuilder::new()
        .component("q", 2, 1)
        .component("l", 1, 3)
        .point("a", &[("q", 1), ("l", 1)])
        .point("b", &[("q", 1), ("l", 1)])
        .build();
    println!(
        "conic * line^3, smooth components: {}",
        spectrum_smooth_components(&g)?
    );
    println!(
        "                general:           {}",
        spectrum_general(&g)?
    );

    // square of a quartic with a triple point and a node
    println!(
        "(quartic)^2:   {}",
        spectrum_irreducible_power(4, 2, &[3, 2])?
    );

    // germs in two variables, and the extra-variable shift back to three
    let binary = spectrum_binary_linear(&[2, 1, 1])?;
    println!("x^2 y (x+y):   {binary}   in C^2");
    println!("               {}   in C^3", binary.dummy_shift());

    for d in 2..=5 {
        let s = spectrum_isolated(d, 3);
        println!("smooth curve of degree {d}: mu = {}  {s}", s.eval_at_one());
    }
    Ok(())
}
