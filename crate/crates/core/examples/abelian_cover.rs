//! Double covers of `E × E` branched along a divisor pulled back from the
//! graph of `[n]`, and the fibre genus from Riemann–Hurwitz.

use folcan::{abelian_double_cover, riemann_hurwitz, AbelianCoverInput};

fn main() -> folcan::Result<()> {
    for d in 2..=4 {
        for n in 0..=3 {
            let r = abelian_double_cover(AbelianCoverInput { d, n })?;
            println!(
                "d = {d}, n = {n}: K_F² = {}, K_F·K_X = {}, fibre genus {}",
                r.kf2, r.kf_dot_kx, r.fiber_genus
            );
        }
    }
    // a double cover of an elliptic curve branched in 8 points
    println!(
        "genus of a double cover of E branched in 8 points: {}",
        riemann_hurwitz(1, 2, 8)?
    );
    Ok(())
}
