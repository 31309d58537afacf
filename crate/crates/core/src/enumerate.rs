//! Enumeration of the finite set of Hilbert functions with fixed
//! `(K_F², K_F·K_X, i_Q(F))`, given caps on `χ(O_X)` and on the basket.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use crate::basket::{Basket, LocalProfile};
use crate::bounds::kx2_bounds;
use crate::error::Result;
use crate::exact::Rational;
use crate::riemann_roch::{HilbertFunction, ModelNumerics};

/// How the basket's Q-index must relate to `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QIndexRule {
    #[default]
    Equal,
    Divides,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub k1: Rational,
    pub k2: Rational,
    pub s: u64,
    pub chi_set: BTreeSet<i64>,
    /// Maximum number of Q-Gorenstein points.
    pub basket_cap: usize,
    pub include_cusps: bool,
    pub max_cusps: usize,
    pub q_index_rule: QIndexRule,
}

impl EnumerationQuery {
    pub fn new(k1: Rational, k2: Rational, s: u64) -> Self {
        EnumerationQuery {
            k1,
            k2,
            s,
            chi_set: BTreeSet::new(),
            basket_cap: 0,
            include_cusps: true,
            max_cusps: 0,
            q_index_rule: QIndexRule::Equal,
        }
    }

    pub fn chi(mut self, chi: impl IntoIterator<Item = i64>) -> Self {
        self.chi_set.extend(chi);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.basket_cap = cap;
        self
    }

    pub fn max_cusps(mut self, max_cusps: usize) -> Self {
        self.max_cusps = max_cusps;
        self
    }

    pub fn q_index_rule(mut self, rule: QIndexRule) -> Self {
        self.q_index_rule = rule;
        self
    }

    fn effective_max_cusps(&self) -> usize {
        if self.include_cusps {
            self.max_cusps
        } else {
            0
        }
    }

    fn accepts_q_index(&self, q: u64) -> bool {
        match self.q_index_rule {
            QIndexRule::Equal => q == self.s,
            QIndexRule::Divides => self.s.is_multiple_of(q),
        }
    }
}

/// One element of the enumerated set together with every basket realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedFunction {
    /// Canonical (minimal period) form.
    pub function: HilbertFunction,
    /// Witness baskets in canonical order.
    pub witnesses: Vec<Basket>,
}

/// Q-Gorenstein profile types whose local index divides `s`, in canonical order.
pub fn admissible_profiles(s: u64) -> Vec<LocalProfile> {
    let mut out: Vec<LocalProfile> = (2..=s)
        .filter(|&n| s.is_multiple_of(n))
        .map(|n| LocalProfile::terminal(n).expect("n >= 2"))
        .collect();
    out.push(LocalProfile::dihedral_zero(1).expect("valid index"));
    if s.is_multiple_of(2) {
        out.push(LocalProfile::dihedral_zero(2).expect("valid index"));
        out.push(LocalProfile::dihedral_half());
    }
    out.sort();
    out
}

fn multisets(
    items: &[LocalProfile],
    size: usize,
    start: usize,
    current: &mut Vec<LocalProfile>,
    out: &mut Vec<Vec<LocalProfile>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for i in start..items.len() {
        current.push(items[i].clone());
        multisets(items, size, i, current, out);
        current.pop();
    }
}

/// Baskets with exactly `size` Q-Gorenstein points and up to `max_cusps` cusps.
pub fn baskets_in_stratum(s: u64, size: usize, max_cusps: usize) -> Vec<Basket> {
    let profiles = admissible_profiles(s);
    let mut qgor = Vec::new();
    multisets(&profiles, size, 0, &mut Vec::new(), &mut qgor);
    let mut out = Vec::with_capacity(qgor.len() * (max_cusps + 1));
    for base in qgor {
        for cusps in 0..=max_cusps {
            let mut points = base.clone();
            points.extend(std::iter::repeat_n(LocalProfile::cusp(), cusps));
            out.push(Basket::new(points));
        }
    }
    out
}

/// Every basket with at most `cap` Q-Gorenstein points of index dividing `s`
/// and at most `max_cusps` cusps, each exactly once, in canonical order.
pub fn enumerate_baskets(s: u64, cap: usize, max_cusps: usize) -> Vec<Basket> {
    let all: BTreeSet<Basket> = (0..=cap)
        .flat_map(|size| baskets_in_stratum(s, size, max_cusps))
        .collect();
    all.into_iter().collect()
}

/// Witness baskets per function, plus whether any witness used extrapolated local terms.
type Accumulator = BTreeMap<HilbertFunction, (bool, BTreeSet<Basket>)>;

fn scan_stratum(query: &EnumerationQuery, size: usize, acc: &mut Accumulator) {
    for basket in baskets_in_stratum(query.s, size, query.effective_max_cusps()) {
        if !query.accepts_q_index(basket.q_index()) {
            continue;
        }
        for &chi in &query.chi_set {
            let numerics =
                ModelNumerics::new(query.k1.clone(), query.k2.clone(), chi, basket.clone());
            if let Ok(h) = numerics.to_hilbert_function() {
                let entry = acc.entry(h.canonical()).or_default();
                entry.0 |= h.extrapolated;
                entry.1.insert(basket.clone());
            }
        }
    }
}

fn finish(acc: Accumulator) -> Vec<EnumeratedFunction> {
    acc.into_iter()
        .map(|(function, (extrapolated, witnesses))| EnumeratedFunction {
            function: HilbertFunction {
                extrapolated,
                ..function
            },
            witnesses: witnesses.into_iter().collect(),
        })
        .collect()
}

fn check_query(query: &EnumerationQuery) -> Result<()> {
    kx2_bounds(&query.k1, &query.k2, query.s).map(drop)
}

/// Deduplicated set of Hilbert functions, sorted by canonical form.
pub fn enumerate_hilbert(query: &EnumerationQuery) -> Result<Vec<EnumeratedFunction>> {
    enumerate_hilbert_with_workers(query, 1)
}

/// As [`enumerate_hilbert`], splitting basket-size strata across `workers` threads.
///
/// The result does not depend on `workers`.
pub fn enumerate_hilbert_with_workers(
    query: &EnumerationQuery,
    workers: usize,
) -> Result<Vec<EnumeratedFunction>> {
    check_query(query)?;
    let workers = workers.max(1);
    let strata: Vec<usize> = (0..=query.basket_cap).collect();
    if workers == 1 {
        let mut acc = Accumulator::new();
        for &size in &strata {
            scan_stratum(query, size, &mut acc);
        }
        return Ok(finish(acc));
    }
    let partials: Vec<Accumulator> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let mine: Vec<usize> = strata.iter().copied().skip(w).step_by(workers).collect();
                scope.spawn(move || {
                    let mut acc = Accumulator::new();
                    for size in mine {
                        scan_stratum(query, size, &mut acc);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    let mut merged = Accumulator::new();
    for partial in partials {
        for (h, (extrapolated, baskets)) in partial {
            let entry = merged.entry(h).or_default();
            entry.0 |= extrapolated;
            entry.1.extend(baskets);
        }
    }
    Ok(finish(merged))
}
