//! The numerical bound chain for `K_X²` and the ample divisor `D = 4s·K_F + K_X`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Admissible range `lower < K_X² ≤ upper`, plus `D`-numerics once `K_X²` is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `k2² / k1`, from Hodge index applied to `K_F` and `K_X`.
    pub kx2_upper: Rational,
    /// `-(16s²·k1 + 8s·k2)`, from `(4sK_F + K_X)² > 0`.
    pub kx2_lower_exclusive: Rational,
    /// `-(16s·k1 + 8s·k2)`, the lower bound with a linear `s` in the first
    /// term. Present only when it differs from `kx2_lower_exclusive`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_lower_exclusive: Option<Rational>,
    /// True exactly when `k2 = -4s·k1`: the bounds coincide and the strict
    /// lower bound excludes the only candidate.
    pub interval_empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_squared: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_dot_kx: Option<Rational>,
}

impl BoundReport {
    /// Whether `kx2` lies in the admissible half-open interval.
    pub fn admits(&self, kx2: &Rational) -> bool {
        &self.kx2_lower_exclusive < kx2 && kx2 <= &self.kx2_upper
    }

    /// Fills in `D²` and `D·K_X` for a chosen `K_X²`.
    pub fn with_kx2(mut self, k1: &Rational, k2: &Rational, kx2: &Rational, s: u64) -> Self {
        let (d2, dk) = ample_divisor_numerics(k1, k2, kx2, s);
        self.d_squared = Some(d2);
        self.d_dot_kx = Some(dk);
        self
    }
}

pub fn kx2_bounds(k1: &Rational, k2: &Rational, s: u64) -> Result<BoundReport> {
    if !k1.is_positive() {
        return Err(Error::NonPositiveVolume(k1.to_string()));
    }
    if s == 0 {
        return Err(Error::InvalidInput("Q-index s must be positive".into()));
    }
    let s_q = Rational::integer(s as i64);
    let upper = k2.square() / k1;
    let lower = -(Rational::integer(16) * &s_q * &s_q * k1 + Rational::integer(8) * &s_q * k2);
    let printed = -(Rational::integer(16) * &s_q * k1 + Rational::integer(8) * &s_q * k2);
    Ok(BoundReport {
        interval_empty: lower >= upper,
        printed_lower_exclusive: (printed != lower).then_some(printed),
        kx2_upper: upper,
        kx2_lower_exclusive: lower,
        d_squared: None,
        d_dot_kx: None,
    })
}

/// `(D², D·K_X)` for `D = 4s·K_F + K_X`.
pub fn ample_divisor_numerics(
    k1: &Rational,
    k2: &Rational,
    kx2: &Rational,
    s: u64,
) -> (Rational, Rational) {
    let s = Rational::integer(s as i64);
    let d_squared = Rational::integer(16) * &s * &s * k1 + Rational::integer(8) * &s * k2 + kx2;
    let d_dot_kx = Rational::integer(4) * &s * k2 + kx2;
    (d_squared, d_dot_kx)
}

/// `|h0 − m²·D²/2| ≤ q1·m + q0` for a caller-supplied linear envelope.
pub fn km_envelope(
    d_squared: &Rational,
    m: u64,
    q0: &Rational,
    q1: &Rational,
    h0: &Rational,
) -> bool {
    let m = Rational::integer(m as i64);
    let leading = &m * &m * d_squared * Rational::half();
    (h0 - leading).abs() <= q1 * &m + q0
}

/// Values of `K_X²` in the admissible interval lying on the lattice `(1/s²)ℤ`.
///
/// `s·K_X` is Cartier whenever the index of `K_X` divides `s`, which puts
/// `K_X²` in `(1/s²)ℤ`.
pub fn kx2_candidates(report: &BoundReport, s: u64) -> Vec<Rational> {
    let step_den = (s * s) as i64;
    let scaled_lower = &report.kx2_lower_exclusive * Rational::integer(step_den);
    let scaled_upper = &report.kx2_upper * Rational::integer(step_den);
    let first = floor(&scaled_lower) + 1;
    let last = floor(&scaled_upper);
    (first..=last).map(|k| Rational::new(k, step_den)).collect()
}

fn floor(r: &Rational) -> i64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    r.numer()
        .div_floor(r.denom())
        .to_i64()
        .expect("bound fits in i64")
}
