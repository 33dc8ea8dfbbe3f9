//! Classical, CSS and enlarged parameters for the length-243 codes over F_9.

use cartqec::footprint::ProductSpec;
use cartqec::quantum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProductSpec::new(3, &[2, 2, 1])?;
    for delta in [4, 7] {
        let c = quantum::classical_params(&spec, delta)?;
        let css = quantum::css_params(&spec, delta)?;
        let st = quantum::steane_params(&spec, delta)?;
        println!(
            "delta={delta}: {c} -> {css} -> {} (increase {}, edge guarantee {:?})",
            st.params,
            st.increase,
            quantum::enlarge_guarantee(&spec, delta)
        );
    }
    match quantum::steane_params(&ProductSpec::new(3, &[2, 1])?, 6) {
        Ok(_) => unreachable!(),
        Err(e) => println!("p=3 r=(2,1) delta=6: {e}"),
    }
    Ok(())
}
