//! Double covers of ruled surfaces: invariants over a small grid, plus the
//! fibration identities for one of them.

use folcan::{fibration_identities, ruled_double_cover, RuledCoverInput};

fn main() -> folcan::Result<()> {
    println!("  k  g  q | K_F²  K_F·K_X  K_X²");
    for k in [2, 4] {
        for g in 2..=4 {
            for q in 0..=2 {
                let r = ruled_double_cover(RuledCoverInput { k, g, q })?;
                println!(
                    "{k:>3}{g:>3}{q:>3} | {:>4} {:>8} {:>5}",
                    r.kf2, r.kf_dot_kx, r.kx2
                );
            }
        }
    }

    let report = ruled_double_cover(RuledCoverInput { k: 2, g: 2, q: 3 })?;
    for (name, value) in &report.numbers {
        println!("{name} = {value}");
    }
    let fib = fibration_identities(&report.kx2, report.fiber_genus, 3)?;
    println!("K_X/C² = {}, K_F·K_X = {}", fib.kxc2, fib.kf_dot_kx);
    println!("assumed: {}", report.assumptions.join("; "));
    Ok(())
}
