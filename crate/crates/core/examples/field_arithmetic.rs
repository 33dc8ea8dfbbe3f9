//! Arithmetic in F_9 and F_16, and the subfield F_4 inside F_16.

use cartqec::field::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = Field::new(3, 2)?;
    println!("F_9 modulus (constant first): {:?}", f9.modulus());
    let x = f9.from_coeffs(&[0, 1])?;
    println!("x = {x}, x^2 = {}, x^-1 = {}", f9.mul(x, x), f9.inv(x).unwrap());
    println!("generator {} has order {}", f9.generator(), f9.q() - 1);

    let f16 = Field::new(2, 4)?;
    println!("F_16 modulus: {:?}", f16.modulus());
    let f4: Vec<u32> = f16.subfield_elements(2)?.iter().map(|e| e.encoding()).collect();
    println!("F_4 inside F_16: {f4:?}");

    let m = Matrix::from_rows(
        vec![
            vec![f9.one(), x, f9.zero()],
            vec![x, f9.mul(x, x), f9.zero()],
            vec![f9.zero(), f9.one(), f9.one()],
        ],
        3,
    )?;
    println!("rank over F_9: {}", m.rank(&f9));
    println!("nullspace basis: {:?}", m.nullspace(&f9).iter_rows().map(|r| r.iter().map(|e| e.encoding()).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok(())
}
