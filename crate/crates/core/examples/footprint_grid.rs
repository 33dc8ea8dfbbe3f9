//! Footprint values over F_9 x F_3 and the improved defining set L(4).

use cartqec::footprint::{self, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProductSpec::new(3, &[2, 1])?;
    print!("{}", footprint::sigma_grid(&spec)?.render());

    let delta = 4;
    let l = footprint::improved_defining_set(&spec, delta)?;
    let l_perp = footprint::dual_defining_set(&spec, delta)?;
    println!("|L({delta})| = {}, |L_perp({delta})| = {}", l.len(), l_perp.len());
    println!("L_perp members: {}", l_perp.members().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
    println!("dual-containing: {}", footprint::is_dual_containing(&spec, delta)?);
    Ok(())
}
