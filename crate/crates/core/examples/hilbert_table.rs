//! Tabulates `P(m) = χ(mK_F)` for a handful of baskets, flags the ones that
//! fail integrality, and prints the periodic form of the rest.

use folcan::{Basket, LocalProfile, ModelNumerics, Rational};

fn main() -> folcan::Result<()> {
    let t2 = LocalProfile::terminal(2)?;
    let baskets = [
        ("empty", Basket::empty()),
        ("T2", Basket::new(vec![t2.clone()])),
        ("T2 T2", Basket::new(vec![t2.clone(), t2])),
        ("DH", Basket::new(vec![LocalProfile::dihedral_half()])),
        (
            "DH cusp",
            Basket::new(vec![LocalProfile::dihedral_half(), LocalProfile::cusp()]),
        ),
        ("T3 T3 T3", Basket::new(vec![LocalProfile::terminal(3)?; 3])),
    ];
    for (name, basket) in baskets {
        let num = ModelNumerics::new(Rational::one(), Rational::zero(), 1, basket);
        let row: Vec<String> = (0..=8).map(|m| num.hilbert_value(m).to_string()).collect();
        print!("{name:>9} | {}", row.join(" "));
        match num.to_hilbert_function() {
            Ok(h) => {
                let c: Vec<String> = h.correction.iter().map(ToString::to_string).collect();
                println!("  | period {} correction [{}]", h.period, c.join(", "));
            }
            Err(e) => println!("  | {e}"),
        }
    }
    Ok(())
}
