//! Walks the K_X² bound chain for one set of invariants: the admissible
//! interval, the lattice candidates in it, and the numerics of `D = 4sK_F + K_X`.

use folcan::bounds::kx2_candidates;
use folcan::{km_envelope, kx2_bounds, Rational};

fn main() -> folcan::Result<()> {
    let (k1, k2, s) = (Rational::one(), Rational::integer(-3), 1);
    let report = kx2_bounds(&k1, &k2, s)?;
    println!(
        "{} < K_X² ≤ {}",
        report.kx2_lower_exclusive, report.kx2_upper
    );
    if let Some(printed) = &report.printed_lower_exclusive {
        println!("(linear-in-s lower bound: {printed})");
    }

    for kx2 in kx2_candidates(&report, s) {
        let full = report.clone().with_kx2(&k1, &k2, &kx2, s);
        let d2 = full.d_squared.unwrap();
        println!(
            "K_X² = {kx2:>3}: D² = {d2}, D·K_X = {}",
            full.d_dot_kx.unwrap()
        );
    }

    // h0(mD) ~ m²D²/2 within a linear envelope
    let d2 = Rational::integer(4);
    for m in 1..=4u64 {
        let h0 = Rational::integer(2 * (m * m) as i64 + 1);
        let ok = km_envelope(&d2, m, &Rational::integer(1), &Rational::zero(), &h0);
        println!("m = {m}: h0 = {h0} within envelope: {ok}");
    }
    Ok(())
}
