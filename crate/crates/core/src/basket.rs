//! Local Riemann–Roch correction terms `a(x, mK_F)` at canonical foliation
//! singularities, and baskets of such points.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{lcm_all, Rational};

/// The numerical classes of canonical foliation singularities.
///
/// The declaration order is the canonical sort order used for basket keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SingularityKind {
    /// Terminal cyclic quotient point of index `n ≥ 2`.
    TerminalCyclic,
    /// Canonical Q-Gorenstein point with `a(x, mK_F) = 0` for all `m`.
    DihedralZero,
    /// Canonical Q-Gorenstein point with `a = -1/2` at odd `m`, index 2.
    DihedralHalf,
    /// Canonical point where `K_F` is not Q-Cartier.
    NonQGorCusp,
}

impl SingularityKind {
    pub fn name(self) -> &'static str {
        match self {
            SingularityKind::TerminalCyclic => "TerminalCyclic",
            SingularityKind::DihedralZero => "DihedralZero",
            SingularityKind::DihedralHalf => "DihedralHalf",
            SingularityKind::NonQGorCusp => "NonQGorCusp",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "TerminalCyclic" => Ok(SingularityKind::TerminalCyclic),
            "DihedralZero" => Ok(SingularityKind::DihedralZero),
            "DihedralHalf" => Ok(SingularityKind::DihedralHalf),
            "NonQGorCusp" => Ok(SingularityKind::NonQGorCusp),
            other => Err(Error::InvalidProfile(format!(
                "unknown singularity kind {other:?}"
            ))),
        }
    }
}

/// One singular point, recorded only through its local-term behaviour.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalProfile {
    kind: SingularityKind,
    local_index: Option<u64>,
    override_table: Option<Vec<Rational>>,
}

impl LocalProfile {
    /// Terminal cyclic quotient point of index `n`, default local-term table.
    pub fn terminal(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidProfile(format!(
                "terminal cyclic point needs index n >= 2, got {n}"
            )));
        }
        Ok(LocalProfile {
            kind: SingularityKind::TerminalCyclic,
            local_index: Some(n),
            override_table: None,
        })
    }

    /// Terminal point with a caller-supplied table `table[r] = a(x, mK_F)` for `m ≡ r (mod n)`.
    pub fn terminal_with_override(n: u64, table: Vec<Rational>) -> Result<Self> {
        let mut profile = Self::terminal(n)?;
        if table.len() as u64 != n {
            return Err(Error::InvalidOverride(format!(
                "table has length {} but the index is {n}",
                table.len()
            )));
        }
        if !table[0].is_zero() {
            return Err(Error::InvalidOverride(format!(
                "value at residue 0 must be 0, got {}",
                table[0]
            )));
        }
        if let Some((r, v)) = table.iter().enumerate().find(|(_, v)| v.is_positive()) {
            return Err(Error::InvalidOverride(format!(
                "value at residue {r} is positive ({v})"
            )));
        }
        profile.override_table = Some(table);
        Ok(profile)
    }

    /// Dihedral point with vanishing local terms; `index` must be 1 or 2.
    pub fn dihedral_zero(index: u64) -> Result<Self> {
        if index != 1 && index != 2 {
            return Err(Error::InvalidProfile(format!(
                "DihedralZero index must be 1 or 2, got {index}"
            )));
        }
        Ok(LocalProfile {
            kind: SingularityKind::DihedralZero,
            local_index: Some(index),
            override_table: None,
        })
    }

    pub fn dihedral_half() -> Self {
        LocalProfile {
            kind: SingularityKind::DihedralHalf,
            local_index: Some(2),
            override_table: None,
        }
    }

    pub fn cusp() -> Self {
        LocalProfile {
            kind: SingularityKind::NonQGorCusp,
            local_index: None,
            override_table: None,
        }
    }

    pub fn kind(&self) -> SingularityKind {
        self.kind
    }

    /// Cartier index of `K_F` at the point; `None` for cusps.
    pub fn local_index(&self) -> Option<u64> {
        self.local_index
    }

    pub fn override_table(&self) -> Option<&[Rational]> {
        self.override_table.as_deref()
    }

    pub fn is_q_gorenstein(&self) -> bool {
        self.kind != SingularityKind::NonQGorCusp
    }

    /// `a(x, mK_F)`.
    ///
    /// For terminal points without an override, residues other than
    /// `0, ±1 (mod n)` use the extrapolated table `-r(n-r)/(2n)`; see
    /// [`LocalProfile::is_extrapolated`].
    pub fn local_term(&self, m: u64) -> Rational {
        if m == 0 {
            return Rational::zero();
        }
        match self.kind {
            SingularityKind::NonQGorCusp => Rational::integer(-1),
            SingularityKind::DihedralZero => Rational::zero(),
            SingularityKind::DihedralHalf => {
                if m.is_odd() {
                    Rational::new(-1, 2)
                } else {
                    Rational::zero()
                }
            }
            SingularityKind::TerminalCyclic => {
                let n = self.local_index.expect("terminal profiles carry an index");
                let r = m % n;
                if let Some(table) = &self.override_table {
                    return table[r as usize].clone();
                }
                let (r, n) = (r as i64, n as i64);
                Rational::new(-r * (n - r), 2 * n)
            }
        }
    }

    /// True when `local_term(m)` came from the default extrapolated table
    /// rather than from a known closed form or a caller override.
    pub fn is_extrapolated(&self, m: u64) -> bool {
        if self.kind != SingularityKind::TerminalCyclic || self.override_table.is_some() || m == 0 {
            return false;
        }
        let n = self.local_index.expect("terminal profiles carry an index");
        let r = m % n;
        !(r == 0 || r == 1 || r == n - 1)
    }
}

impl fmt::Display for LocalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.local_index) {
            (SingularityKind::TerminalCyclic, Some(n)) => {
                write!(f, "T{n}")?;
                if self.override_table.is_some() {
                    write!(f, "*")?;
                }
                Ok(())
            }
            (SingularityKind::DihedralZero, Some(i)) => write!(f, "DZ{i}"),
            (SingularityKind::DihedralHalf, _) => write!(f, "DH"),
            _ => write!(f, "cusp"),
        }
    }
}

/// A finite multiset of singular points, kept in canonical sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Basket {
    profiles: Vec<LocalProfile>,
}

impl Basket {
    pub fn new(mut profiles: Vec<LocalProfile>) -> Self {
        profiles.sort();
        Basket { profiles }
    }

    pub fn empty() -> Self {
        Basket::default()
    }

    pub fn profiles(&self) -> &[LocalProfile] {
        &self.profiles
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn cusp_count(&self) -> usize {
        self.profiles
            .iter()
            .filter(|p| !p.is_q_gorenstein())
            .count()
    }

    pub fn q_gorenstein_count(&self) -> usize {
        self.len() - self.cusp_count()
    }

    /// `Σ_x a(x, mK_F)`.
    pub fn basket_term(&self, m: u64) -> Rational {
        self.profiles.iter().map(|p| p.local_term(m)).sum()
    }

    pub fn is_extrapolated(&self, m: u64) -> bool {
        self.profiles.iter().any(|p| p.is_extrapolated(m))
    }

    /// Least `m ≥ 1` with `mK_F` Cartier at every Q-Gorenstein point.
    pub fn q_index(&self) -> u64 {
        lcm_all(self.profiles.iter().filter_map(LocalProfile::local_index))
    }

    /// Diagnostics for the basket-size inequality `-Σ_{x∈Σ} a(x,K_F) ≥ |Σ|/2`,
    /// where `Σ` is the set of terminal and `DihedralHalf` points.
    pub fn size_bound(&self) -> BasketSizeBound {
        let sigma: Vec<&LocalProfile> = self
            .profiles
            .iter()
            .filter(|p| {
                matches!(
                    p.kind,
                    SingularityKind::TerminalCyclic | SingularityKind::DihedralHalf
                )
            })
            .collect();
        let sigma_neg_a: Rational = sigma.iter().map(|p| -p.local_term(1)).sum();
        let size = sigma.len();
        let bound_holds = sigma_neg_a >= Rational::new(size as i64, 2);
        BasketSizeBound {
            sum_neg_a: -self.basket_term(1),
            sigma_neg_a,
            size,
            bound_holds,
        }
    }

    /// Compact human-readable key such as `{DH,T2,cusp}`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.profiles.iter().map(ToString::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromIterator<LocalProfile> for Basket {
    fn from_iter<I: IntoIterator<Item = LocalProfile>>(iter: I) -> Self {
        Basket::new(iter.into_iter().collect())
    }
}

/// Report of the basket-size inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasketSizeBound {
    /// `-Σ a(x, K_F)` over the whole basket, cusps included.
    pub sum_neg_a: Rational,
    /// `-Σ a(x, K_F)` over terminal and `DihedralHalf` points only.
    pub sigma_neg_a: Rational,
    /// Number of terminal and `DihedralHalf` points.
    pub size: usize,
    /// `sigma_neg_a ≥ size / 2`.
    pub bound_holds: bool,
}

/// `local_term` for a whole basket; free-function form of [`Basket::basket_term`].
pub fn basket_term(basket: &Basket, m: u64) -> Rational {
    basket.basket_term(m)
}

pub fn q_index(basket: &Basket) -> u64 {
    basket.q_index()
}
