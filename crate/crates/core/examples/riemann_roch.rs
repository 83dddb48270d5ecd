//! Walks through the Riemann–Roch computation on the blown-up plane for a
//! small non-reduced arrangement and prints every intermediate class.
//!
//!     cargo run --example riemann_roch

use arrspec::hrr::{wedge_ch, HrrContext};
use arrspec::{spectrum_general, GraphBuilder};

fn main() -> arrspec::Result<()> {
    // a double line through the node of a cubic
    let g = GraphBuilder::new()
        .component("line", 1, 2)
        .component("cubic", 3, 1)
        .point("v1", &[("line", 1), ("cubic", 2)])
        .point("v2", &[("line", 1), ("cubic", 1)])
        .build();
    let ctx = HrrContext::new(&g)?;
    let d = ctx.resolved().derived.degree;

    println!("c(Omega^1(log Z)) = {}", ctx.chern_log());
    println!("Td                = {}", ctx.todd());
    for p in 0..3 {
        println!("ch(wedge^{p})      = {}", wedge_ch(ctx.chern_log(), p)?);
    }
    println!();
    println!(
        "{:>3}  {:<24} {:>6} {:>6} {:>6}",
        "j", "u_j", "chi_0", "chi_1", "chi_2"
    );
    for j in 1..=d {
        let u = ctx.u_class(j)?;
        let chi: Vec<_> = (0..3).map(|p| ctx.chi(p, &u)).collect::<Result<_, _>>()?;
        println!(
            "{j:>3}  {:<24} {:>6} {:>6} {:>6}",
            u.to_string(),
            chi[0],
            chi[1],
            chi[2]
        );
    }
    println!();
    let s = ctx.spectrum()?;
    println!("spectrum via Riemann-Roch: {s}");
    println!("closed formula:            {}", spectrum_general(&g)?);
    Ok(())
}
