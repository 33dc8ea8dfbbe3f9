//! The four enlargement tables, as text and as CSV.

use cartqec::footprint::ProductSpec;
use cartqec::report::{self, TableRecord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let configs: [(u64, &[u32], u64, u64); 4] = [
        (2, &[3, 3], 3, 8),
        (5, &[1, 1, 1, 1], 3, 6),
        (2, &[4, 4, 2], 3, 17),
        (2, &[3, 3, 3, 1], 3, 9),
    ];
    for (p, r, lo, hi) in configs {
        let spec = ProductSpec::new(p, r)?;
        println!("{spec} q={}", spec.q()?);
        println!("{}", report::text_header());
        let mut csv = csv::Writer::from_writer(Vec::new());
        for (delta, row) in report::table(&spec, lo, hi) {
            match row {
                Ok(row) => {
                    println!("{}", report::render_text_row(&row));
                    csv.serialize(TableRecord::from(&row))?;
                }
                Err(e) => println!("delta={delta} skipped: {e}"),
            }
        }
        println!("{}", String::from_utf8(csv.into_inner()?)?);
    }
    Ok(())
}
