//! Exact rational scalars, coordinate vectors and symmetric bilinear forms.
//!
//! Nothing in here ever rounds. Rationals are kept in lowest terms after
//! every operation, and the linear algebra is plain Gaussian elimination
//! over the rationals.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ParseRational {
                input: format!("{numer}/0"),
                reason: "zero denominator",
            });
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Denominator as a machine integer, if it fits.
    pub fn denom_u64(&self) -> Option<u64> {
        self.0.denom().to_u64()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, input: &str) -> Result<BigInt> {
    let bad = |reason| Error::ParseRational {
        input: input.to_string(),
        reason,
    };
    if s.is_empty() {
        return Err(bad("missing digits"));
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected decimal digits"));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(bad("leading zero"));
    }
    Ok(s.parse().expect("validated digit string"))
}

/// Accepts `p` or `p/q` with an optional leading `-` on `p` only.
///
/// Rejects `q = 0`, a `+` sign, signed denominators, `-0` and leading zeros.
/// Fractions that are not in lowest terms are accepted and reduced.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason| Error::ParseRational {
            input: input.to_string(),
            reason,
        };
        let (negative, body) = match input.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, input),
        };
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (body, None),
        };
        let mut numer = parse_digits(p, input)?;
        if negative {
            if numer.is_zero() {
                return Err(bad("negative zero"));
            }
            numer = -numer;
        }
        let denom = match q {
            Some(q) => {
                let d = parse_digits(q, input)?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Least common multiple of a sequence of positive integers; 1 for the empty sequence.
pub fn lcm_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v))
}

/// Coordinates of a divisor class in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        RationalVector(vec![Rational::zero(); len])
    }

    /// The `index`-th standard basis vector of length `len`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalVector(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(RationalVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &Rational, other: &Self, b: &Rational) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(v: Vec<Rational>) -> Self {
        RationalVector(v)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// A symmetric bilinear form on `Q^n`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricPairing {
    dim: usize,
    entries: Vec<Rational>,
}

impl SymmetricPairing {
    /// Builds a pairing from its rows, rejecting non-square or non-symmetric input.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_len(dim, row.len())?;
            entries.extend(row);
        }
        let pairing = SymmetricPairing { dim, entries };
        for i in 0..dim {
            for j in (i + 1)..dim {
                if pairing.get(i, j) != pairing.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(pairing)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::integer(x)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Rational::one()).collect())
    }

    pub fn diagonal(values: Vec<Rational>) -> Self {
        let dim = values.len();
        let mut entries = vec![Rational::zero(); dim * dim];
        for (i, v) in values.into_iter().enumerate() {
            entries[i * dim + i] = v;
        }
        SymmetricPairing { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        SymmetricPairing {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[_]>::to_vec)
            .take(self.dim)
            .collect()
    }

    /// `u · v` under this form.
    pub fn pair(&self, u: &RationalVector, v: &RationalVector) -> Result<Rational> {
        check_len(self.dim, u.len())?;
        check_len(self.dim, v.len())?;
        let mut total = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let row: Rational = (0..self.dim)
                .filter(|&j| !v[j].is_zero())
                .map(|j| self.get(i, j) * &v[j])
                .sum();
            total += &(ui * row);
        }
        Ok(total)
    }

    pub fn square(&self, u: &RationalVector) -> Result<Rational> {
        self.pair(u, u)
    }

    /// Matrix-vector product `A·x`.
    pub fn apply(&self, x: &RationalVector) -> Result<RationalVector> {
        check_len(self.dim, x.len())?;
        Ok(RationalVector(
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j) * &x[j]).sum())
                .collect(),
        ))
    }

    /// Restriction of the form to the span of the given basis positions.
    pub fn restrict(&self, indices: &[usize]) -> Self {
        let dim = indices.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for &i in indices {
            for &j in indices {
                entries.push(self.get(i, j).clone());
            }
        }
        SymmetricPairing { dim, entries }
    }

    /// Gram matrix of a list of vectors under this form.
    pub fn gram(&self, vectors: &[RationalVector]) -> Result<Self> {
        let n = vectors.len();
        let mut entries = Vec::with_capacity(n * n);
        for u in vectors {
            for v in vectors {
                entries.push(self.pair(u, v)?);
            }
        }
        Ok(SymmetricPairing { dim: n, entries })
    }

    /// The congruent form `Pᵀ A P`, where `columns` are the columns of `P`.
    pub fn congruent(&self, columns: &[RationalVector]) -> Result<Self> {
        check_len(self.dim, columns.len())?;
        self.gram(columns)
    }

    /// Determinant by fraction-free-in-spirit elimination over the rationals.
    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut m = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for k in 0..n {
                    m.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det = det * &p;
            for r in (col + 1)..n {
                let factor = &m[r * n + col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let delta = &factor * &m[col * n + k];
                    m[r * n + k] -= &delta;
                }
            }
        }
        det
    }

    pub fn signature(&self) -> Inertia {
        signature(self)
    }

    pub fn is_negative_definite(&self) -> bool {
        is_negative_definite(self)
    }
}

impl fmt::Debug for SymmetricPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Solves `A·x = b` exactly by Gaussian elimination with row exchanges.
pub fn solve_linear(a: &SymmetricPairing, b: &RationalVector) -> Result<RationalVector> {
    let n = a.dim;
    check_len(n, b.len())?;
    // augmented rows [A | b]
    let width = n + 1;
    let mut m: Vec<Rational> = Vec::with_capacity(n * width);
    for i in 0..n {
        m.extend((0..n).map(|j| a.get(i, j).clone()));
        m.push(b[i].clone());
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r * width + col].is_zero())
            .ok_or(Error::SingularMatrix { column: col })?;
        if pivot != col {
            for k in 0..width {
                m.swap(pivot * width + k, col * width + k);
            }
        }
        let inv = Rational::one() / &m[col * width + col];
        for k in col..width {
            m[col * width + k] = &m[col * width + k] * &inv;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r * width + col].clone();
            if factor.is_zero() {
                continue;
            }
            for k in col..width {
                let delta = &factor * &m[col * width + k];
                m[r * width + k] -= &delta;
            }
        }
    }
    Ok(RationalVector(
        (0..n).map(|i| m[i * width + n].clone()).collect(),
    ))
}

/// Inertia of a real symmetric form: counts of positive, negative and zero squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }
}

/// Computes the inertia by exact symmetric (congruence) reduction.
///
/// At each step a nonzero diagonal pivot is used if one exists. Otherwise an
/// off-diagonal entry `a_ij != 0` with `a_ii = a_jj = 0` is promoted by the
/// congruence `e_i -> e_i + e_j`, which puts `2 a_ij` on the diagonal. A
/// remaining block that is identically zero contributes to `zeros`.
pub fn signature(a: &SymmetricPairing) -> Inertia {
    let n = a.dim;
    let mut m = a.entries.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia {
        positives: 0,
        negatives: 0,
        zeros: 0,
    };
    while !active.is_empty() {
        let diag = active.iter().copied().find(|&i| !m[i * n + i].is_zero());
        let pivot = match diag {
            Some(p) => p,
            None => {
                let off = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !m[i * n + j].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = off else {
                    inertia.zeros += active.len();
                    break;
                };
                // row_i += row_j, then col_i += col_j
                for k in 0..n {
                    let v = m[j * n + k].clone();
                    m[i * n + k] += &v;
                }
                for k in 0..n {
                    let v = m[k * n + j].clone();
                    m[k * n + i] += &v;
                }
                i
            }
        };
        let p = m[pivot * n + pivot].clone();
        if p.is_positive() {
            inertia.positives += 1;
        } else {
            inertia.negatives += 1;
        }
        active.retain(|&i| i != pivot);
        for &r in &active {
            let factor = &m[r * n + pivot] / &p;
            if factor.is_zero() {
                continue;
            }
            for &c in &active {
                let delta = &factor * &m[pivot * n + c];
                m[r * n + c] -= &delta;
            }
        }
    }
    inertia
}

pub fn is_negative_definite(a: &SymmetricPairing) -> bool {
    let s = signature(a);
    s.positives == 0 && s.zeros == 0
}

/// Outcome of the Hodge index comparison for two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeVerdict {
    /// Some combination `a1·D1 + a2·D2` has positive square.
    pub hypothesis_met: bool,
    /// `D1²·D2² ≤ (D1·D2)²`; only meaningful when the hypothesis holds.
    pub inequality_holds: bool,
    /// The two sides agree exactly.
    pub equality: bool,
}

pub fn hodge_check(
    a: &SymmetricPairing,
    d1: &RationalVector,
    d2: &RationalVector,
    a1: &Rational,
    a2: &Rational,
) -> Result<HodgeVerdict> {
    let combo = d1.combine(a1, d2, a2)?;
    let hypothesis_met = a.square(&combo)?.is_positive();
    let lhs = a.square(d1)? * a.square(d2)?;
    let rhs = a.pair(d1, d2)?.square();
    Ok(HodgeVerdict {
        hypothesis_met,
        inequality_holds: hypothesis_met && lhs <= rhs,
        equality: lhs == rhs,
    })
}
