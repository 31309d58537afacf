mod common;

use folcan::riemann_roch::HilbertFunction;
use folcan::{
    enumerate_hilbert, solve_linear, Basket, EnumerationQuery, LocalProfile, ModelNumerics,
    Rational, RationalVector, SymmetricPairing,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn entries(dim: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-10i64..=10, dim * dim)
}

fn symmetric(dim: usize, raw: &[i64]) -> SymmetricPairing {
    let mut rows = vec![vec![Rational::zero(); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v = Rational::integer(raw[i * dim + j]);
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
    }
    SymmetricPairing::new(rows).unwrap()
}

fn columns(dim: usize, raw: &[i64]) -> Vec<RationalVector> {
    (0..dim)
        .map(|c| {
            RationalVector::new(
                (0..dim)
                    .map(|r| Rational::integer(raw[r * dim + c]))
                    .collect(),
            )
        })
        .collect()
}

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_reproduces_rhs(dim in 1usize..=5, raw in entries(5), b in prop::collection::vec(-10i64..=10, 5)) {
        let a = symmetric(dim, &raw[..dim * dim]);
        let b = RationalVector::from_ints(&b[..dim]);
        match solve_linear(&a, &b) {
            Ok(x) => prop_assert_eq!(a.apply(&x).unwrap(), b),
            Err(_) => prop_assert!(a.determinant().is_zero()),
        }
    }

    #[test]
    fn signature_congruence_invariant(dim in 1usize..=4, raw in entries(4), p in entries(4)) {
        let a = symmetric(dim, &raw[..dim * dim]);
        let cols = columns(dim, &p[..dim * dim]);
        let pm = SymmetricPairing::identity(dim).gram(&cols).unwrap(); // PᵀP, only used for invertibility
        prop_assume!(!pm.determinant().is_zero());
        let b = a.congruent(&cols).unwrap();
        prop_assert_eq!(a.signature(), b.signature());
        prop_assert_eq!(a.signature().dim(), dim);
    }

    #[test]
    fn pullback_orthogonal_and_pairing_bilinear(seed in any::<u64>()) {
        let mut r = rng_from(seed);
        use rand::Rng;
        let dim = r.gen_range(1..=4);
        let extra = r.gen_range(1..=3);
        let gram = negative_definite_gram(&mut r, dim);
        let res = resolution_with_gram(&mut r, extra, &gram);
        let n = extra + dim;
        let a = random_vector(&mut r, n, 9);
        let b = random_vector(&mut r, n, 9);
        let c = random_vector(&mut r, n, 9);
        let pulled = res.mumford_pullback(&a).unwrap();
        for e in res.exceptional_curves() {
            prop_assert!(res.ambient().intersect(&pulled, &e).unwrap().is_zero());
        }
        prop_assert_eq!(res.weil_intersect(&a, &b).unwrap(), res.weil_intersect(&b, &a).unwrap());
        let (s, t) = (small_rational(&mut r, 6), small_rational(&mut r, 6));
        let combo = a.combine(&s, &b, &t).unwrap();
        let lhs = res.weil_intersect(&combo, &c).unwrap();
        let rhs = &s * res.weil_intersect(&a, &c).unwrap() + &t * res.weil_intersect(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn local_terms_nonpositive_and_periodic(seed in any::<u64>(), m in 1u64..60, t in 0u64..5) {
        let mut r = rng_from(seed);
        let p = random_profile(&mut r);
        prop_assert_eq!(p.local_term(0), Rational::zero());
        prop_assert!(!p.local_term(m).is_positive());
        match p.local_index() {
            Some(n) => {
                prop_assert_eq!(p.local_term(m), p.local_term(m + n * t));
                prop_assert_eq!(p.local_term(n * (t + 1)), Rational::zero());
            }
            None => prop_assert_eq!(p.local_term(m), Rational::integer(-1)),
        }
    }

    #[test]
    fn q_index_is_least_cartier_multiple(seed in any::<u64>()) {
        let mut r = rng_from(seed);
        let basket = random_basket(&mut r, 4);
        let qgor: Vec<&LocalProfile> = basket.profiles().iter().filter(|p| p.is_q_gorenstein()).collect();
        let cartier_at = |m: u64| qgor.iter().all(|p| m.is_multiple_of(p.local_index().unwrap()));
        let least = (1..).find(|&m| cartier_at(m)).unwrap();
        prop_assert_eq!(basket.q_index(), least);
    }

    #[test]
    fn hilbert_function_round_trip(seed in any::<u64>()) {
        let mut r = rng_from(seed);
        let num = random_numerics(&mut r);
        prop_assert_eq!(num.hilbert_value(0), Rational::integer(num.chi));
        let bare = ModelNumerics::new(num.k1.clone(), num.k2.clone(), num.chi, Basket::empty());
        for m in 0..20 {
            prop_assert_eq!(num.hilbert_value(m) - bare.hilbert_value(m), num.basket.basket_term(m));
        }
        if let Ok(h) = num.to_hilbert_function() {
            let l = num.integrality_window();
            for m in 0..=3 * l {
                prop_assert_eq!(h.value(m), num.hilbert_value(m));
            }
            prop_assert!(h.second_difference_check());
        } else {
            prop_assert!(!num.integrality_check());
        }
    }

    #[test]
    fn rational_text_round_trip(n in any::<i64>(), d in 1i64..=i64::MAX) {
        let x = Rational::new(n, d);
        let text = x.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), text);
    }
}

/// Integrality on the window agrees with a much longer scan.
#[test]
fn integrality_window_suffices() {
    let mut r = rng_from(11);
    for _ in 0..300 {
        let num = random_numerics(&mut r);
        let long = (0..4 * num.integrality_window() + 7).all(|m| num.hilbert_value(m).is_integer());
        assert_eq!(num.integrality_check(), long, "{num:?}");
    }
}

/// Equality of Hilbert functions is an equivalence relation and matches
/// pointwise equality on [0, 3·lcm of periods].
#[test]
fn hilbert_equality_exhaustive() {
    let mut functions: Vec<HilbertFunction> = Vec::new();
    let t2 = LocalProfile::terminal(2).unwrap();
    let dz2 = LocalProfile::dihedral_zero(2).unwrap();
    let baskets = [
        vec![],
        vec![t2.clone(), t2.clone()],
        vec![LocalProfile::dihedral_half()],
        vec![LocalProfile::dihedral_half(), dz2.clone()],
        vec![LocalProfile::dihedral_half(), LocalProfile::cusp()],
        vec![t2.clone(), t2.clone(), LocalProfile::cusp()],
        vec![dz2.clone()],
        vec![LocalProfile::terminal(3).unwrap(); 3],
        vec![LocalProfile::terminal(3).unwrap(); 3]
            .into_iter()
            .chain([dz2])
            .collect(),
    ];
    for basket in baskets {
        for chi in [0, 1] {
            let num = ModelNumerics::new(q("1"), q("0"), chi, Basket::new(basket.clone()));
            if let Ok(h) = num.to_hilbert_function() {
                functions.push(h);
            }
        }
    }
    assert!(functions.len() >= 10);
    for a in &functions {
        assert_eq!(a, a);
        for b in &functions {
            let l = num_integer::lcm(a.period, b.period);
            let pointwise = (0..=3 * l).all(|m| a.value(m) == b.value(m));
            assert_eq!(a == b, pointwise, "{a:?} vs {b:?}");
            assert_eq!(a == b, b == a);
            for c in &functions {
                if a == b && b == c {
                    assert_eq!(a, c);
                }
            }
        }
    }
}

fn function_set(query: &EnumerationQuery) -> Vec<HilbertFunction> {
    enumerate_hilbert(query)
        .unwrap()
        .into_iter()
        .map(|f| f.function)
        .collect()
}

#[test]
fn enumeration_monotone_in_caps() {
    for s in [2u64, 3, 4] {
        let base = EnumerationQuery::new(q("1"), q("1"), s)
            .chi([1])
            .cap(1)
            .max_cusps(0);
        let small = function_set(&base);
        let bigger = [
            base.clone().cap(3),
            base.clone().max_cusps(2),
            base.clone().chi([0, 2]),
        ];
        for query in bigger {
            let large = function_set(&query);
            assert!(small.iter().all(|h| large.contains(h)), "s={s}: {query:?}");
        }
    }
}

#[test]
fn emitted_functions_are_sane() {
    for s in 1..=6u64 {
        let query = EnumerationQuery::new(q("2"), q("0"), s)
            .chi([0, 1])
            .cap(3)
            .max_cusps(1);
        for f in enumerate_hilbert(&query).unwrap() {
            assert!(f.function.second_difference_check());
            assert!(!f.witnesses.is_empty());
            for w in &f.witnesses {
                assert_eq!(w.q_index(), s);
                let num = ModelNumerics::new(q("2"), q("0"), f.function.chi, w.clone());
                assert!(num.integrality_check());
                assert_eq!(num.to_hilbert_function().unwrap(), f.function);
            }
        }
    }
}
