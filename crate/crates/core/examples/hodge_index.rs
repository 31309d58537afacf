//! Signature of a few small lattices and the Hodge index comparison on them.

use folcan::{hodge_check, Rational, RationalVector, SymmetricPairing};

fn main() -> folcan::Result<()> {
    // H = ⟨e, f⟩ with e² = f² = 0, e·f = 1
    let hyperbolic = SymmetricPairing::from_ints(&[&[0, 1], &[1, 0]])?;
    let ruled = SymmetricPairing::from_ints(&[&[-2, 1], &[1, 0]])?;
    let definite = SymmetricPairing::from_ints(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]])?;

    for (name, form) in [("H", &hyperbolic), ("ruled k=2", &ruled), ("A3", &definite)] {
        let s = form.signature();
        println!(
            "{name:>10}: (+{}, -{}, 0x{}) det = {} negative definite: {}",
            s.positives,
            s.negatives,
            s.zeros,
            form.determinant(),
            form.is_negative_definite()
        );
    }

    let d1 = RationalVector::from_ints(&[1, 1]);
    let d2 = RationalVector::from_ints(&[1, 3]);
    let one = Rational::one();
    let verdict = hodge_check(&hyperbolic, &d1, &d2, &one, &one)?;
    println!(
        "D1 = e+f, D2 = e+3f: D1²·D2² = {}, (D1·D2)² = {}, {verdict:?}",
        hyperbolic.square(&d1)? * hyperbolic.square(&d2)?,
        hyperbolic.pair(&d1, &d2)?.square()
    );

    let d2 = RationalVector::from_ints(&[2, 2]);
    println!(
        "D2 = 2D1: {:?}",
        hodge_check(&hyperbolic, &d1, &d2, &one, &Rational::zero())?
    );
    Ok(())
}
