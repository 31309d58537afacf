//! Lists every Hilbert function with `K_F² = 1`, `K_F·K_X = 0`, index 2 and
//! `χ = 1`, for baskets with at most two Q-Gorenstein points and one cusp.

use folcan::{enumerate_hilbert_with_workers, EnumerationQuery, Rational};

fn main() -> folcan::Result<()> {
    let query = EnumerationQuery::new(Rational::one(), Rational::zero(), 2)
        .chi([1])
        .cap(2)
        .max_cusps(1);
    let found = enumerate_hilbert_with_workers(&query, 2)?;
    println!("{} functions", found.len());
    for f in found {
        let values: Vec<String> = f
            .function
            .values(0..=6)
            .iter()
            .map(ToString::to_string)
            .collect();
        let witnesses: Vec<String> = f.witnesses.iter().map(|b| b.label()).collect();
        println!("P = {} ...", values.join(", "));
        println!("    realized by {}", witnesses.join(" "));
    }
    Ok(())
}
