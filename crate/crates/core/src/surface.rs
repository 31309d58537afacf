//! Numerical divisor lattices, Mumford pullback and the Weil-divisor pairing.
//!
//! A singular surface is never represented directly. Divisors downstairs are
//! given by their strict transforms on a smooth model `Y`, together with the
//! positions of the exceptional curves in `Y`'s basis.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{solve_linear, Rational, RationalVector, SymmetricPairing};

/// A finite lattice of curve classes with its intersection form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    basis_labels: Vec<String>,
    pairing: SymmetricPairing,
    canonical_class: Option<RationalVector>,
    distinguished: BTreeMap<String, RationalVector>,
}

impl SurfaceModel {
    pub fn new(basis_labels: Vec<String>, pairing: SymmetricPairing) -> Result<Self> {
        if basis_labels.len() != pairing.dim() {
            return Err(Error::DimensionMismatch {
                expected: pairing.dim(),
                found: basis_labels.len(),
            });
        }
        Ok(SurfaceModel {
            basis_labels,
            pairing,
            canonical_class: None,
            distinguished: BTreeMap::new(),
        })
    }

    pub fn with_canonical_class(mut self, class: RationalVector) -> Result<Self> {
        self.check_dim(&class)?;
        self.canonical_class = Some(class);
        Ok(self)
    }

    pub fn with_class(mut self, label: impl Into<String>, class: RationalVector) -> Result<Self> {
        self.check_dim(&class)?;
        self.distinguished.insert(label.into(), class);
        Ok(self)
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn pairing(&self) -> &SymmetricPairing {
        &self.pairing
    }

    pub fn dim(&self) -> usize {
        self.pairing.dim()
    }

    pub fn canonical_class(&self) -> Option<&RationalVector> {
        self.canonical_class.as_ref()
    }

    pub fn distinguished_classes(&self) -> &BTreeMap<String, RationalVector> {
        &self.distinguished
    }

    pub fn class(&self, label: &str) -> Option<&RationalVector> {
        self.distinguished.get(label)
    }

    /// Class of the `index`-th generator.
    pub fn generator(&self, index: usize) -> RationalVector {
        RationalVector::unit(self.dim(), index)
    }

    pub fn intersect(&self, a: &RationalVector, b: &RationalVector) -> Result<Rational> {
        self.pairing.pair(a, b)
    }

    fn check_dim(&self, v: &RationalVector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Checks `D² > 0` and `D·C > 0` for each supplied curve class.
    ///
    /// The answer is relative to `curves`; nothing is claimed about curves
    /// not in the list.
    pub fn numerical_amplitude_check(
        &self,
        d: &RationalVector,
        curves: &[RationalVector],
    ) -> Result<AmplitudeVerdict> {
        let big = self.pairing.square(d)?.is_positive();
        let mut strictly_positive_on_curves = true;
        for c in curves {
            if !self.intersect(d, c)?.is_positive() {
                strictly_positive_on_curves = false;
            }
        }
        Ok(AmplitudeVerdict {
            big,
            strictly_positive_on_curves,
        })
    }

    /// `D·C ≥ 0` for every supplied curve class.
    pub fn nef_check(&self, d: &RationalVector, curves: &[RationalVector]) -> Result<bool> {
        let mut nef = true;
        for c in curves {
            if self.intersect(d, c)?.is_negative() {
                nef = false;
            }
        }
        Ok(nef)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmplitudeVerdict {
    pub big: bool,
    pub strictly_positive_on_curves: bool,
}

/// A resolution `f: Y -> X` given numerically: the smooth model `Y`, the
/// basis positions of the exceptional curves, and named strict transforms.
///
/// Construction fails unless the exceptional Gram matrix is negative definite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionData {
    ambient: SurfaceModel,
    exceptional_indices: Vec<usize>,
    exceptional_gram: SymmetricPairing,
    strict_transforms: BTreeMap<String, RationalVector>,
}

impl ResolutionData {
    pub fn new(ambient: SurfaceModel, exceptional_indices: Vec<usize>) -> Result<Self> {
        let dim = ambient.dim();
        for (pos, &i) in exceptional_indices.iter().enumerate() {
            if i >= dim {
                return Err(Error::InvalidInput(format!(
                    "exceptional index {i} out of range for a basis of size {dim}"
                )));
            }
            if exceptional_indices[..pos].contains(&i) {
                return Err(Error::InvalidInput(format!(
                    "exceptional index {i} listed twice"
                )));
            }
        }
        let exceptional_gram = ambient.pairing().restrict(&exceptional_indices);
        let res = ResolutionData {
            ambient,
            exceptional_indices,
            exceptional_gram,
            strict_transforms: BTreeMap::new(),
        };
        res.validate()?;
        Ok(res)
    }

    pub fn with_strict_transform(
        mut self,
        label: impl Into<String>,
        class: RationalVector,
    ) -> Result<Self> {
        self.ambient.check_dim(&class)?;
        self.strict_transforms.insert(label.into(), class);
        Ok(self)
    }

    /// Succeeds iff the exceptional curves span a negative definite lattice.
    pub fn validate(&self) -> Result<()> {
        let inertia = self.exceptional_gram.signature();
        if inertia.positives != 0 || inertia.zeros != 0 {
            return Err(Error::NotNegativeDefinite(inertia));
        }
        Ok(())
    }

    pub fn ambient(&self) -> &SurfaceModel {
        &self.ambient
    }

    pub fn exceptional_indices(&self) -> &[usize] {
        &self.exceptional_indices
    }

    pub fn exceptional_gram(&self) -> &SymmetricPairing {
        &self.exceptional_gram
    }

    pub fn exceptional_curves(&self) -> Vec<RationalVector> {
        self.exceptional_indices
            .iter()
            .map(|&i| self.ambient.generator(i))
            .collect()
    }

    pub fn strict_transforms(&self) -> &BTreeMap<String, RationalVector> {
        &self.strict_transforms
    }

    pub fn strict_transform(&self, label: &str) -> Option<&RationalVector> {
        self.strict_transforms.get(label)
    }

    /// Coefficients `x_i` with `(strict + Σ x_i E_i)·E_j = 0` for every `j`.
    pub fn pullback_coefficients(&self, strict: &RationalVector) -> Result<RationalVector> {
        self.ambient.check_dim(strict)?;
        let pairing = self.ambient.pairing();
        let rhs: Vec<Rational> = self
            .exceptional_indices
            .iter()
            .map(|&j| {
                -pairing
                    .pair(strict, &self.ambient.generator(j))
                    .expect("dims checked")
            })
            .collect();
        solve_linear(&self.exceptional_gram, &RationalVector::new(rhs))
    }

    /// Mumford pullback `f*D = strict + Σ x_i E_i`.
    pub fn mumford_pullback(&self, strict: &RationalVector) -> Result<RationalVector> {
        let coefficients = self.pullback_coefficients(strict)?;
        let mut pulled = strict.0.clone();
        for (x, &i) in coefficients.iter().zip(&self.exceptional_indices) {
            pulled[i] += x;
        }
        Ok(RationalVector::new(pulled))
    }

    /// `D1 · D2 := f*D1 · f*D2` on the smooth model.
    pub fn weil_intersect(
        &self,
        strict1: &RationalVector,
        strict2: &RationalVector,
    ) -> Result<Rational> {
        let p1 = self.mumford_pullback(strict1)?;
        let p2 = self.mumford_pullback(strict2)?;
        self.ambient.intersect(&p1, &p2)
    }
}
