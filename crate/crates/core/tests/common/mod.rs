#![allow(dead_code)]

use std::collections::BTreeMap;

use folcan::io::{ModelDocument, ResolutionBlock};
use folcan::{
    Basket, LocalProfile, ModelNumerics, Rational, RationalVector, ResolutionData, SurfaceModel,
    SymmetricPairing,
};
use rand::Rng;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// `−BᵀB − I` for a random integer `B`: always negative definite.
pub fn negative_definite_gram(rng: &mut impl Rng, dim: usize) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=dim + 1);
    let b = int_matrix(rng, rows, dim, 3);
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let btb: i64 = (0..rows).map(|r| b[r][i] * b[r][j]).sum();
                    -btb - i64::from(i == j)
                })
                .collect()
        })
        .collect()
}

/// A smooth model with `extra` non-exceptional classes followed by `exc.len()`
/// exceptional ones; cross terms and the non-exceptional block are random.
pub fn resolution_with_gram(rng: &mut impl Rng, extra: usize, exc: &[Vec<i64>]) -> ResolutionData {
    let k = exc.len();
    let n = extra + k;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = if i >= extra && j >= extra {
                exc[i - extra][j - extra]
            } else {
                rng.gen_range(-4..=4)
            };
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let model = SurfaceModel::new(labels, SymmetricPairing::from_ints(&rows).unwrap()).unwrap();
    ResolutionData::new(model, (extra..n).collect()).unwrap()
}

/// Chain of `len` (−2)-curves with one extra class meeting the first curve once.
pub fn a_chain(len: usize) -> ResolutionData {
    let n = len + 1;
    let mut m = vec![vec![0i64; n]; n];
    m[0][1] = 1;
    m[1][0] = 1;
    for i in 1..n {
        m[i][i] = -2;
        if i + 1 < n {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let model = SurfaceModel::new(labels, SymmetricPairing::from_ints(&rows).unwrap()).unwrap();
    ResolutionData::new(model, (1..n).collect()).unwrap()
}

pub fn small_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_vector(rng: &mut impl Rng, len: usize, bound: i64) -> RationalVector {
    RationalVector::new((0..len).map(|_| small_rational(rng, bound)).collect())
}

pub fn int_vector(rng: &mut impl Rng, len: usize, bound: i64) -> RationalVector {
    RationalVector::new(
        (0..len)
            .map(|_| Rational::integer(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

/// A rational whose numerator and denominator may exceed 64 bits.
pub fn wide_rational(rng: &mut impl Rng) -> Rational {
    let mut numer = num_bigint::BigInt::from(rng.gen_range(-1_000_000_007i64..=1_000_000_007));
    let mut denom = num_bigint::BigInt::from(rng.gen_range(1i64..=1_000_000_007));
    for _ in 0..rng.gen_range(0..4) {
        numer *= rng.gen_range(1i64..=i64::MAX);
        denom *= rng.gen_range(1i64..=i64::MAX);
    }
    Rational::from_bigints(numer, denom).unwrap()
}

pub fn random_profile(rng: &mut impl Rng) -> LocalProfile {
    match rng.gen_range(0..5) {
        0 => LocalProfile::terminal(rng.gen_range(2..=7)).unwrap(),
        1 => LocalProfile::dihedral_zero(rng.gen_range(1..=2)).unwrap(),
        2 => LocalProfile::dihedral_half(),
        3 => LocalProfile::cusp(),
        _ => {
            let n = rng.gen_range(2..=5u64);
            let mut table = vec![Rational::zero()];
            table
                .extend((1..n).map(|_| Rational::new(-rng.gen_range(0..=6), rng.gen_range(1..=6))));
            LocalProfile::terminal_with_override(n, table).unwrap()
        }
    }
}

pub fn random_basket(rng: &mut impl Rng, max_len: usize) -> Basket {
    let len = rng.gen_range(0..=max_len);
    Basket::new((0..len).map(|_| random_profile(rng)).collect())
}

pub fn random_numerics(rng: &mut impl Rng) -> ModelNumerics {
    let k1 = Rational::new(rng.gen_range(1..=40), rng.gen_range(1..=6));
    let k2 = small_rational(rng, 30);
    ModelNumerics::new(k1, k2, rng.gen_range(-20..=20), random_basket(rng, 4))
}

pub fn random_model_document(rng: &mut impl Rng) -> ModelDocument {
    let extra = rng.gen_range(1..=3);
    let exc = rng.gen_range(0..=3);
    let gram = negative_definite_gram(rng, exc);
    let res = resolution_with_gram(rng, extra, &gram);
    let n = extra + exc;
    let model = res.ambient();
    let mut distinguished = BTreeMap::new();
    for i in 0..rng.gen_range(0..=3) {
        distinguished.insert(format!("D{i}"), random_vector(rng, n, 9));
    }
    let mut strict = BTreeMap::new();
    for i in 0..rng.gen_range(0..=3) {
        let mut v = random_vector(rng, n, 9);
        for j in extra..n {
            v.0[j] = Rational::zero();
        }
        strict.insert(format!("S{i}"), v);
    }
    ModelDocument {
        basis_labels: model.basis_labels().to_vec(),
        pairing: model.pairing().rows(),
        canonical_class: rng.gen_bool(0.5).then(|| random_vector(rng, n, 5)),
        distinguished_classes: distinguished,
        resolution: (exc > 0).then(|| ResolutionBlock {
            exceptional_indices: (extra..n).collect(),
            strict_transforms: strict,
        }),
    }
}
