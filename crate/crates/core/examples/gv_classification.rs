//! Gilbert-Varshamov verdicts and Singleton slack for the length-27 codes.

use cartqec::footprint::ProductSpec;
use cartqec::quantum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProductSpec::new(3, &[2, 1])?;
    for delta in 3..=7 {
        let css = quantum::css_params(&spec, delta)?;
        let Ok(st) = quantum::steane_params(&spec, delta) else {
            println!("delta={delta}: {css}, no enlargement");
            continue;
        };
        for p in [css, st.params] {
            let gv = quantum::gv_classify(&p)?;
            println!(
                "delta={delta}: {p:<16} gv={:<8} (k used {}) singleton slack {}",
                gv.verdict,
                gv.applied_k,
                quantum::singleton_slack(&p)
            );
        }
    }
    println!("GV holds at [[64,58,3]]_8: {}", quantum::gv_satisfied(64, 58, 3, 8)?);
    println!("GV holds at [[1024,900,13]]_16: {}", quantum::gv_satisfied(1024, 900, 13, 16)?);
    Ok(())
}
