//! Two double-cover families of fibred foliated surfaces, computed on small
//! lattices, and the numerical identities of a fibration with reduced fibres.
//!
//! Everything of interest on the cover `S` is a pullback from the base
//! surface `P`, so intersection numbers on `S` come from the rule
//! `(σ*W)·(σ*V) = 2 (W·V)` on `P`'s lattice.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basket::Basket;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector, SymmetricPairing};
use crate::riemann_roch::ModelNumerics;
use crate::surface::SurfaceModel;

/// Double cover of the ruled surface `P(O ⊕ O(D))` over a curve of genus `q`,
/// branched along `R = (2g+2)C0 + (2g+1)k·F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuledCoverInput {
    /// `deg D`; even and positive.
    pub k: i64,
    /// Fibre genus, at least 2.
    pub g: i64,
    /// Genus of the base curve.
    pub q: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbelianCoverInput {
    /// Degree of `D` on the elliptic curve, at least 2.
    pub d: i64,
    /// Multiplication map `[n]` used for the projection `(x, y) ↦ y − n·x`.
    pub n: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub kf2: Rational,
    pub kf_dot_kx: Rational,
    /// `K_S²`, recomputed on the lattice.
    pub kx2: Rational,
    pub fiber_genus: i64,
    /// Basis labels of the lattice the classes below live in.
    pub basis: Vec<String>,
    pub classes: BTreeMap<String, RationalVector>,
    pub numbers: BTreeMap<String, Rational>,
    /// Genericity hypotheses taken on trust.
    pub assumptions: Vec<String>,
}

impl ConstructionReport {
    /// Numerics of the (smooth, empty-basket) surface with the given `χ(O_S)`.
    pub fn numerics(&self, chi: i64) -> ModelNumerics {
        ModelNumerics::new(
            self.kf2.clone(),
            self.kf_dot_kx.clone(),
            chi,
            Basket::empty(),
        )
        .with_kx2(self.kx2.clone())
    }
}

/// `(σ*W)·(σ*V)` for a double cover `σ`.
pub fn double_cover_pair(
    model: &SurfaceModel,
    w: &RationalVector,
    v: &RationalVector,
) -> Result<Rational> {
    Ok(Rational::integer(2) * model.intersect(w, v)?)
}

pub fn ruled_double_cover(input: RuledCoverInput) -> Result<ConstructionReport> {
    let RuledCoverInput { k, g, q } = input;
    if k <= 0 || k % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "k must be even and positive, got {k}"
        )));
    }
    if g < 2 {
        return Err(Error::InvalidInput(format!(
            "fibre genus g must be at least 2, got {g}"
        )));
    }
    if q < 0 {
        return Err(Error::InvalidInput(format!(
            "base genus q must be nonnegative, got {q}"
        )));
    }
    let r = Rational::integer;
    let lattice = SurfaceModel::new(
        vec!["C0".into(), "F".into()],
        SymmetricPairing::from_ints(&[&[-k, 1], &[1, 0]])?,
    )?;
    let c0 = lattice.generator(0);
    let fibre = lattice.generator(1);

    let k_p = RationalVector::new(vec![r(-2), r(2 * q - 2 - k)]);
    // adjunction on C0 and F pins K_P
    debug_assert_eq!(lattice.intersect(&k_p.checked_add(&fibre)?, &fibre)?, r(-2));
    debug_assert_eq!(
        lattice.intersect(&k_p.checked_add(&c0)?, &c0)?,
        r(2 * q - 2)
    );
    let branch = RationalVector::new(vec![r(2 * g + 2), r((2 * g + 1) * k)]);
    let k_s = k_p.combine(&Rational::one(), &branch, &Rational::half())?;
    let k_c = fibre.scale(&r(2 * q - 2));
    let k_f = k_s.combine(&Rational::one(), &k_c, &r(-1))?;

    let kf2 = double_cover_pair(&lattice, &k_f, &k_f)?;
    let kf_dot_kx = double_cover_pair(&lattice, &k_f, &k_s)?;
    let kx2 = double_cover_pair(&lattice, &k_s, &k_s)?;
    let branch_on_fibre = lattice.intersect(&branch, &fibre)?;
    let fiber_genus = riemann_hurwitz(0, 2, to_count(&branch_on_fibre)?)?;

    let mut numbers = BTreeMap::new();
    numbers.insert("R.F".into(), branch_on_fibre);
    numbers.insert("R^2".into(), lattice.pairing().square(&branch)?);
    numbers.insert("K_P^2".into(), lattice.pairing().square(&k_p)?);
    let classes = BTreeMap::from([
        ("K_P".to_string(), k_p),
        ("R".to_string(), branch),
        ("K_P+R/2".to_string(), k_s),
        ("K_F".to_string(), k_f),
    ]);
    Ok(ConstructionReport {
        kf2,
        kf_dot_kx,
        kx2,
        fiber_genus,
        basis: lattice.basis_labels().to_vec(),
        classes,
        numbers,
        assumptions: vec![
            "|(2g+1)D| is basepoint free on the base curve".into(),
            "a smooth irreducible member of |(2g+1)C1| exists (Bertini)".into(),
            "the branch divisor R = B + C0 is smooth and reduced".into(),
        ],
    })
}

pub fn abelian_double_cover(input: AbelianCoverInput) -> Result<ConstructionReport> {
    let AbelianCoverInput { d, n } = input;
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "degree d must be at least 2, got {d}"
        )));
    }
    if n < 0 {
        return Err(Error::InvalidInput(format!(
            "n must be nonnegative, got {n}"
        )));
    }
    let r = Rational::integer;
    // f1 = {pt} x E, f2 = E x {pt}, Γ_n = graph of [n]
    let lattice = SurfaceModel::new(
        vec!["f1".into(), "f2".into(), "Gamma_n".into()],
        SymmetricPairing::from_ints(&[&[0, 1, 1], &[1, 0, n * n], &[1, n * n, 0]])?,
    )?;
    let gamma = lattice.generator(2);
    let branch = RationalVector::new(vec![r(2 * d), r(2 * d), r(0)]);
    let half_branch = branch.scale(&Rational::half());

    let a_dot_fibre = lattice.intersect(&branch, &gamma)?;
    let fiber_genus = riemann_hurwitz(1, 2, to_count(&a_dot_fibre)?)?;
    let a2 = lattice.pairing().square(&branch)?;
    // K_P and K_E vanish, so K_S = K_F = σ*(A/2)
    let kf2 = double_cover_pair(&lattice, &half_branch, &half_branch)?;
    let kf_dot_kx = kf2.clone();

    let mut numbers = BTreeMap::new();
    numbers.insert("A.F".into(), a_dot_fibre);
    numbers.insert("A^2".into(), a2);
    let classes = BTreeMap::from([
        ("A".to_string(), branch),
        ("K_F".to_string(), half_branch.clone()),
        ("K_S".to_string(), half_branch),
    ]);
    Ok(ConstructionReport {
        kx2: kf2.clone(),
        kf2,
        kf_dot_kx,
        fiber_genus,
        basis: lattice.basis_labels().to_vec(),
        classes,
        numbers,
        assumptions: vec![
            "A is very ample and has a smooth irreducible member (Bertini)".into(),
            "translates of Gamma_n are disjoint, so Gamma_n^2 = 0".into(),
        ],
    })
}

fn to_count(r: &Rational) -> Result<u64> {
    r.to_i64()
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(|| {
            Error::InvalidInput(format!(
                "ramification degree {r} is not a nonnegative integer"
            ))
        })
}

/// Genus of a cover from `2g − 2 = degree·(2g_base − 2) + ram_degree`.
pub fn riemann_hurwitz(g_base: u64, degree: u64, ram_degree: u64) -> Result<i64> {
    let twice_g_minus_2 = degree as i64 * (2 * g_base as i64 - 2) + ram_degree as i64;
    if twice_g_minus_2 % 2 != 0 {
        return Err(Error::NonIntegralGenus(twice_g_minus_2.to_string()));
    }
    let g = (twice_g_minus_2 + 2) / 2;
    if g < 0 {
        return Err(Error::NegativeGenus(g.to_string()));
    }
    Ok(g)
}

/// Numerical identities of a fibration `X → C` with reduced fibres and `K_F = K_{X/C}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationNumbers {
    /// `K_{X/C}² = K_F²`
    pub kxc2: Rational,
    pub kf_dot_kx: Rational,
    /// `2·K_F·K_X − K_F²`, equal to the input `K_X²`.
    pub kx2_back: Rational,
}

pub fn fibration_identities(kx2: &Rational, g_fibre: i64, g_base: i64) -> Result<FibrationNumbers> {
    if g_fibre < 2 {
        return Err(Error::InvalidInput(format!(
            "fibre genus must be at least 2, got {g_fibre}"
        )));
    }
    if g_base < 0 {
        return Err(Error::InvalidInput(format!(
            "base genus must be nonnegative, got {g_base}"
        )));
    }
    let product = Rational::integer((g_fibre - 1) * (g_base - 1));
    let kxc2 = kx2 - Rational::integer(8) * &product;
    let kf_dot_kx = kx2 - Rational::integer(4) * &product;
    let kx2_back = Rational::integer(2) * &kf_dot_kx - &kxc2;
    assert_eq!(&kx2_back, kx2, "K_X^2 round trip");
    Ok(FibrationNumbers {
        kxc2,
        kf_dot_kx,
        kx2_back,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn ruled_examples() {
        let rep = ruled_double_cover(RuledCoverInput { k: 2, g: 2, q: 2 }).unwrap();
        assert_eq!(rep.kf2, q("8"));
        assert_eq!(rep.fiber_genus, 2);
        assert_eq!(rep.kf_dot_kx, q("12"));
        let rep = ruled_double_cover(RuledCoverInput { k: 2, g: 2, q: 5 }).unwrap();
        assert_eq!((rep.kf2, rep.kf_dot_kx), (q("8"), q("24")));
    }

    #[test]
    fn ruled_k_f_class() {
        let rep = ruled_double_cover(RuledCoverInput { k: 4, g: 3, q: 0 }).unwrap();
        // (g-1) C0 + k(2g-1)/2 F
        assert_eq!(rep.classes["K_F"], RationalVector::from_ints(&[2, 10]));
        assert_eq!(rep.numbers["R.F"], q("8"));
    }

    #[test]
    fn ruled_rejects_bad_input() {
        for (k, g, q) in [(3, 2, 0), (0, 2, 0), (2, 1, 0), (2, 2, -1)] {
            assert!(matches!(
                ruled_double_cover(RuledCoverInput { k, g, q }),
                Err(Error::InvalidInput(_))
            ));
        }
    }

    #[test]
    fn abelian_examples() {
        let rep = abelian_double_cover(AbelianCoverInput { d: 2, n: 1 }).unwrap();
        assert_eq!(
            (rep.fiber_genus, rep.numbers["A.F"].clone(), rep.kf2.clone()),
            (5, q("8"), q("16"))
        );
        assert_eq!(rep.numbers["A^2"], q("32"));
        let rep = abelian_double_cover(AbelianCoverInput { d: 2, n: 3 }).unwrap();
        assert_eq!((rep.fiber_genus, rep.kf2), (21, q("16")));
        let rep = abelian_double_cover(AbelianCoverInput { d: 2, n: 0 }).unwrap();
        assert_eq!((rep.fiber_genus, rep.numbers["A.F"].clone()), (3, q("4")));
        assert!(abelian_double_cover(AbelianCoverInput { d: 1, n: 0 }).is_err());
    }

    #[test]
    fn hurwitz() {
        assert_eq!(riemann_hurwitz(0, 2, 6).unwrap(), 2);
        assert_eq!(riemann_hurwitz(1, 2, 10).unwrap(), 6);
        for g in 0..10 {
            assert_eq!(riemann_hurwitz(0, 2, 2 * g + 2).unwrap(), g as i64);
        }
        assert!(matches!(
            riemann_hurwitz(0, 2, 3),
            Err(Error::NonIntegralGenus(_))
        ));
        assert!(matches!(
            riemann_hurwitz(0, 3, 0),
            Err(Error::NegativeGenus(_))
        ));
    }

    #[test]
    fn fibration_examples() {
        let f = fibration_identities(&q("16"), 2, 2).unwrap();
        assert_eq!(
            (f.kxc2, f.kf_dot_kx, f.kx2_back),
            (q("8"), q("12"), q("16"))
        );
        let f = fibration_identities(&q("7/3"), 5, 1).unwrap();
        assert_eq!((f.kxc2, f.kf_dot_kx), (q("7/3"), q("7/3")));
        let f = fibration_identities(&q("0"), 3, 0).unwrap();
        assert_eq!((f.kxc2, f.kf_dot_kx), (q("16"), q("8")));
    }

    #[test]
    fn ruled_cover_satisfies_fibration_identities() {
        for (k, g, base) in [(2, 2, 0), (4, 3, 2), (6, 4, 5)] {
            let rep = ruled_double_cover(RuledCoverInput { k, g, q: base }).unwrap();
            let f = fibration_identities(&rep.kx2, g, base).unwrap();
            assert_eq!(f.kxc2, rep.kf2);
            assert_eq!(f.kf_dot_kx, rep.kf_dot_kx);
        }
    }

    #[test]
    fn numerics_conversion() {
        let rep = ruled_double_cover(RuledCoverInput { k: 2, g: 2, q: 2 }).unwrap();
        let num = rep.numerics(3);
        assert!(num.integrality_check());
        assert_eq!(num.kx2, Some(rep.kx2));
    }
}
