//! Hilbert functions `P(m) = χ(X, mK_F)` from numerical data.
//!
//! `P(m) = ½(m²·K_F² − m·K_F·K_X) + χ(O_X) + Σ_x a(x, mK_F)`.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use crate::basket::Basket;
use crate::error::{Error, Result};
use crate::exact::{lcm_all, Rational};

/// The data that determines a Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelNumerics {
    /// `K_F²`
    pub k1: Rational,
    /// `K_F · K_X`
    pub k2: Rational,
    /// `χ(O_X)`
    pub chi: i64,
    pub basket: Basket,
    /// `K_X²`, when known.
    pub kx2: Option<Rational>,
}

impl ModelNumerics {
    pub fn new(k1: Rational, k2: Rational, chi: i64, basket: Basket) -> Self {
        ModelNumerics {
            k1,
            k2,
            chi,
            basket,
            kx2: None,
        }
    }

    pub fn with_kx2(mut self, kx2: Rational) -> Self {
        self.kx2 = Some(kx2);
        self
    }

    /// The quadratic part `½(m²k1 − m·k2) + χ`.
    pub fn quadratic_part(&self, m: u64) -> Rational {
        quadratic(&self.k1, &self.k2, self.chi, m)
    }

    pub fn hilbert_value(&self, m: u64) -> Rational {
        self.quadratic_part(m) + self.basket.basket_term(m)
    }

    /// Period of the basket correction on `m ≥ 1`.
    pub fn period(&self) -> u64 {
        self.basket.q_index()
    }

    /// `L = lcm(T, 2·den(k1), 2·den(k2))`. Integrality on `[0, L)` implies it everywhere.
    pub fn integrality_window(&self) -> u64 {
        integrality_window(self.period(), &self.k1, &self.k2)
    }

    /// First `m` in the integrality window with `P(m) ∉ ℤ`.
    pub fn first_non_integral(&self) -> Option<u64> {
        (0..self.integrality_window()).find(|&m| !self.hilbert_value(m).is_integer())
    }

    pub fn integrality_check(&self) -> bool {
        self.first_non_integral().is_none()
    }

    /// Advisory: `q²·k1 ∈ ℤ` and `q·k2 ∈ ℤ` for `q = q_index(basket)`.
    pub fn denominators_consistent(&self) -> bool {
        let q = Rational::integer(self.period() as i64);
        (&q * &q * &self.k1).is_integer() && (q * &self.k2).is_integer()
    }

    /// Compact periodic form; fails with `NotIntegral` unless every value is an integer.
    pub fn to_hilbert_function(&self) -> Result<HilbertFunction> {
        if let Some(m) = self.first_non_integral() {
            return Err(Error::NotIntegral { m });
        }
        let period = self.period();
        let correction = (0..period)
            .map(|r| self.basket.basket_term(if r == 0 { period } else { r }))
            .collect();
        let extrapolated = (1..=period).any(|m| self.basket.is_extrapolated(m));
        Ok(HilbertFunction {
            k1: self.k1.clone(),
            k2: self.k2.clone(),
            chi: self.chi,
            period,
            correction,
            extrapolated,
        })
    }
}

fn quadratic(k1: &Rational, k2: &Rational, chi: i64, m: u64) -> Rational {
    let m = Rational::integer(m as i64);
    (&m * &m * k1 - &m * k2) * Rational::half() + Rational::integer(chi)
}

fn integrality_window(period: u64, k1: &Rational, k2: &Rational) -> u64 {
    let den = |r: &Rational| {
        r.denom_u64()
            .expect("denominator too large for an integrality window")
    };
    lcm_all([period, 2 * den(k1), 2 * den(k2)])
}

/// `P(m)` as a quadratic plus a periodic correction on `m ≥ 1`.
///
/// Equality, ordering and hashing go through [`HilbertFunction::canonical`],
/// so two values compare equal exactly when they define the same function,
/// whatever period they were built with.
#[derive(Debug, Clone)]
pub struct HilbertFunction {
    pub k1: Rational,
    pub k2: Rational,
    pub chi: i64,
    pub period: u64,
    /// `correction[r]` applies to `m ≥ 1` with `m ≡ r (mod period)`.
    pub correction: Vec<Rational>,
    /// Some correction used the extrapolated terminal table. Not part of equality.
    pub extrapolated: bool,
}

impl HilbertFunction {
    pub fn value(&self, m: u64) -> Rational {
        if m == 0 {
            return Rational::integer(self.chi);
        }
        quadratic(&self.k1, &self.k2, self.chi, m) + &self.correction[(m % self.period) as usize]
    }

    pub fn values(&self, range: std::ops::RangeInclusive<u64>) -> Vec<Rational> {
        range.map(|m| self.value(m)).collect()
    }

    pub fn integrality_window(&self) -> u64 {
        integrality_window(self.period, &self.k1, &self.k2)
    }

    /// Correction vector re-expressed with period `new_period`, a multiple of the current one.
    pub fn correction_with_period(&self, new_period: u64) -> Vec<Rational> {
        assert!(
            new_period.is_multiple_of(self.period),
            "{new_period} is not a multiple of {}",
            self.period
        );
        (0..new_period)
            .map(|r| self.correction[(r % self.period) as usize].clone())
            .collect()
    }

    /// The same function with the smallest period its correction admits.
    pub fn canonical(&self) -> HilbertFunction {
        let period = (1..=self.period)
            .filter(|&d| self.period.is_multiple_of(d))
            .find(|&d| {
                (0..self.period)
                    .all(|r| self.correction[r as usize] == self.correction[(r % d) as usize])
            })
            .unwrap_or(self.period);
        HilbertFunction {
            period,
            correction: self.correction[..period as usize].to_vec(),
            ..self.clone()
        }
    }

    fn key(&self) -> (Rational, Rational, i64, u64, Vec<Rational>) {
        let c = self.canonical();
        (c.k1, c.k2, c.chi, c.period, c.correction)
    }

    /// Structural sanity plus `P(m+2T) − 2P(m+T) + P(m) = T²·k1` on `m ∈ [1, 2T]`.
    ///
    /// The structural part checks the correction has length `T`, is
    /// nonpositive, and that `P` is integer-valued on its integrality window.
    pub fn second_difference_check(&self) -> bool {
        let t = self.period;
        if t == 0 || self.correction.len() as u64 != t {
            return false;
        }
        if self.correction.iter().any(Rational::is_positive) {
            return false;
        }
        if !(0..self.integrality_window()).all(|m| self.value(m).is_integer()) {
            return false;
        }
        let expected = Rational::integer((t * t) as i64) * &self.k1;
        (1..=2 * t).all(|m| {
            let d2 =
                self.value(m + 2 * t) - self.value(m + t) * Rational::integer(2) + self.value(m);
            d2 == expected
        })
    }

    /// Equality after reducing both sides to the lcm of their periods.
    pub fn same_function(&self, other: &HilbertFunction) -> bool {
        if self.k1 != other.k1 || self.k2 != other.k2 || self.chi != other.chi {
            return false;
        }
        let l = self.period.lcm(&other.period);
        self.correction_with_period(l) == other.correction_with_period(l)
    }
}

impl PartialEq for HilbertFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

impl Eq for HilbertFunction {}

impl Hash for HilbertFunction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for HilbertFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HilbertFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}
