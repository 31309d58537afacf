//! Pulls a line through an A_n point back to its minimal resolution and
//! reads off the rational self-intersection of its image.

use folcan::{RationalVector, ResolutionData, SurfaceModel, SymmetricPairing};

fn chain(len: usize) -> folcan::Result<ResolutionData> {
    let n = len + 1;
    let mut rows = vec![vec![0i64; n]; n];
    rows[0][1] = 1;
    rows[1][0] = 1;
    for i in 1..n {
        rows[i][i] = -2;
        if i + 1 < n {
            rows[i][i + 1] = 1;
            rows[i + 1][i] = 1;
        }
    }
    let rows: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let mut labels = vec!["L".to_string()];
    labels.extend((1..n).map(|i| format!("E{i}")));
    let model = SurfaceModel::new(labels, SymmetricPairing::from_ints(&rows)?)?;
    ResolutionData::new(model, (1..n).collect())
}

fn main() -> folcan::Result<()> {
    for len in 1..=5 {
        let res = chain(len)?;
        let line = res.ambient().generator(0);
        let coeffs = res.pullback_coefficients(&line)?;
        let shown: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
        println!(
            "A{len}: f*L = L + ({}) · E, L·L = {}",
            shown.join(", "),
            res.weil_intersect(&line, &line)?
        );
    }

    // Two lines through the same A2 point meeting the two ends of the chain.
    let model = SurfaceModel::new(
        vec!["L1".into(), "L2".into(), "E1".into(), "E2".into()],
        SymmetricPairing::from_ints(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, -2, 1],
            &[0, 1, 1, -2],
        ])?,
    )?;
    let res = ResolutionData::new(model, vec![2, 3])?;
    let l1 = RationalVector::from_ints(&[1, 0, 0, 0]);
    let l2 = RationalVector::from_ints(&[0, 1, 0, 0]);
    println!(
        "A2, opposite ends: L1·L2 = {}",
        res.weil_intersect(&l1, &l2)?
    );
    Ok(())
}
