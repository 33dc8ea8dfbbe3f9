//! Explicit generator matrices checked against the combinatorics: rank,
//! duality, exhaustive distance and minimum-weight witnesses.

use cartqec::evalcode::{self, EvalCode, PointSet};
use cartqec::footprint::{self, Exponent, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProductSpec::new(2, &[2, 1])?;
    let points = PointSet::new(&spec)?;
    let l = footprint::improved_defining_set(&spec, 3)?;
    let code = EvalCode::new(&points, &l)?;
    println!("C(L(3)) over F_4: k = {} rank = {}", l.len(), code.rank());
    println!("brute-force distance {}", evalcode::brute_min_distance(&code)?);
    evalcode::write_matrix_dump(std::io::stdout().lock(), points.field().q(), code.generator())?;

    let a = Exponent::new(vec![1, 1]);
    let w = evalcode::min_weight_witness(&points, &a)?;
    println!("witness for {a}: weight {} = sigma {}", evalcode::hamming_weight(&w), footprint::sigma(&spec, &a)?);

    let spec = ProductSpec::new(3, &[2, 1])?;
    let sweep = evalcode::duality_sweep(&PointSet::new(&spec)?)?;
    println!("p=3 r=(2,1): orthogonality mismatches {}", sweep.orthogonality_mismatches.len());
    for c in &sweep.checks {
        println!(
            "delta={:>2} rank G={:>2} rank H={:>2} dual identity {} contains dual {:?}",
            c.delta,
            c.rank_g,
            c.rank_h,
            c.dual_identity(sweep.n),
            c.dual_contained(sweep.n)
        );
    }
    Ok(())
}
