//! Exact enlargement increases tau(s) next to the closed-form lower bounds.

use cartqec::footprint::{self, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProductSpec::new(2, &[4, 4, 2])?;
    println!("{spec}");
    println!("{:>3} {:>4} {:>6} {:>3} {:>6}", "s", "tau", "calls", "K", "bound");
    for s in 2..=16 {
        let (tau, calls) = footprint::tau_with_calls(&spec, s);
        let b = footprint::tau_lower_bound(&spec, s)?;
        let mark = if b.exact { "*" } else { "" };
        println!("{s:>3} {tau:>4} {calls:>6} {:>3} {:>5}{mark}", b.k, b.bound);
    }
    let total: u64 = (1..=spec.n()).map(|s| footprint::tau(&spec, s)).sum();
    println!("sum over all s = {total} = n");
    Ok(())
}
