//! JSON document formats: surface models and Hilbert-function numerics.
//!
//! Every rational is written as a `"p/q"` string (`"p"` when `q = 1`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::basket::{Basket, LocalProfile, SingularityKind};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector, SymmetricPairing};
use crate::riemann_roch::{HilbertFunction, ModelNumerics};
use crate::surface::{ResolutionData, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub basis_labels: Vec<String>,
    pub pairing: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_class: Option<RationalVector>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub distinguished_classes: BTreeMap<String, RationalVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<ResolutionBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionBlock {
    pub exceptional_indices: Vec<usize>,
    #[serde(default)]
    pub strict_transforms: BTreeMap<String, RationalVector>,
}

impl ModelDocument {
    pub fn surface_model(&self) -> Result<SurfaceModel> {
        let mut model = SurfaceModel::new(
            self.basis_labels.clone(),
            SymmetricPairing::new(self.pairing.clone())?,
        )?;
        if let Some(k) = &self.canonical_class {
            model = model.with_canonical_class(k.clone())?;
        }
        for (label, class) in &self.distinguished_classes {
            model = model.with_class(label.clone(), class.clone())?;
        }
        Ok(model)
    }

    /// The resolution described by the document, validated.
    pub fn resolution_data(&self) -> Result<Option<ResolutionData>> {
        let Some(block) = &self.resolution else {
            return Ok(None);
        };
        let mut res =
            ResolutionData::new(self.surface_model()?, block.exceptional_indices.clone())?;
        for (label, class) in &block.strict_transforms {
            res = res.with_strict_transform(label.clone(), class.clone())?;
        }
        Ok(Some(res))
    }

    pub fn from_model(model: &SurfaceModel) -> Self {
        ModelDocument {
            basis_labels: model.basis_labels().to_vec(),
            pairing: model.pairing().rows(),
            canonical_class: model.canonical_class().cloned(),
            distinguished_classes: model.distinguished_classes().clone(),
            resolution: None,
        }
    }

    pub fn from_resolution(res: &ResolutionData) -> Self {
        ModelDocument {
            resolution: Some(ResolutionBlock {
                exceptional_indices: res.exceptional_indices().to_vec(),
                strict_transforms: res.strict_transforms().clone(),
            }),
            ..Self::from_model(res.ambient())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileEntry {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, rename = "override", skip_serializing_if = "Option::is_none")]
    pub override_table: Option<Vec<Rational>>,
}

impl ProfileEntry {
    pub fn to_profile(&self) -> Result<LocalProfile> {
        let kind = SingularityKind::from_name(&self.kind)?;
        if self.override_table.is_some() && kind != SingularityKind::TerminalCyclic {
            return Err(Error::InvalidOverride(format!(
                "{} profiles do not take an override table",
                self.kind
            )));
        }
        match kind {
            SingularityKind::TerminalCyclic => {
                let n = self.n.ok_or_else(|| {
                    Error::InvalidProfile("TerminalCyclic requires an index n".into())
                })?;
                match &self.override_table {
                    Some(table) => LocalProfile::terminal_with_override(n, table.clone()),
                    None => LocalProfile::terminal(n),
                }
            }
            SingularityKind::DihedralZero => LocalProfile::dihedral_zero(self.n.unwrap_or(2)),
            SingularityKind::DihedralHalf => match self.n {
                None | Some(2) => Ok(LocalProfile::dihedral_half()),
                Some(n) => Err(Error::InvalidProfile(format!(
                    "DihedralHalf has index 2, got {n}"
                ))),
            },
            SingularityKind::NonQGorCusp => match self.n {
                None => Ok(LocalProfile::cusp()),
                Some(_) => Err(Error::InvalidProfile("NonQGorCusp takes no index".into())),
            },
        }
    }

    pub fn from_profile(p: &LocalProfile) -> Self {
        ProfileEntry {
            kind: p.kind().name().to_string(),
            n: p.local_index()
                .filter(|_| p.kind() != SingularityKind::DihedralHalf),
            override_table: p.override_table().map(<[_]>::to_vec),
        }
    }
}

pub fn basket_from_entries(entries: &[ProfileEntry]) -> Result<Basket> {
    entries
        .iter()
        .map(ProfileEntry::to_profile)
        .collect::<Result<Vec<_>>>()
        .map(Basket::new)
}

pub fn basket_entries(basket: &Basket) -> Vec<ProfileEntry> {
    basket
        .profiles()
        .iter()
        .map(ProfileEntry::from_profile)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericsDocument {
    pub k1: Rational,
    pub k2: Rational,
    pub chi: i64,
    #[serde(default)]
    pub basket: Vec<ProfileEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kx2: Option<Rational>,
}

impl NumericsDocument {
    pub fn numerics(&self) -> Result<ModelNumerics> {
        Ok(ModelNumerics {
            k1: self.k1.clone(),
            k2: self.k2.clone(),
            chi: self.chi,
            basket: basket_from_entries(&self.basket)?,
            kx2: self.kx2.clone(),
        })
    }

    pub fn from_numerics(num: &ModelNumerics) -> Self {
        NumericsDocument {
            k1: num.k1.clone(),
            k2: num.k2.clone(),
            chi: num.chi,
            basket: basket_entries(&num.basket),
            kx2: num.kx2.clone(),
        }
    }
}

/// Serialized form of a [`HilbertFunction`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunctionDocument {
    pub k1: Rational,
    pub k2: Rational,
    pub chi: i64,
    pub period: u64,
    pub correction: Vec<Rational>,
    #[serde(default)]
    pub extrapolated: bool,
}

impl HilbertFunctionDocument {
    pub fn from_function(h: &HilbertFunction) -> Self {
        HilbertFunctionDocument {
            k1: h.k1.clone(),
            k2: h.k2.clone(),
            chi: h.chi,
            period: h.period,
            correction: h.correction.clone(),
            extrapolated: h.extrapolated,
        }
    }

    pub fn function(&self) -> Result<HilbertFunction> {
        if self.period == 0 || self.correction.len() as u64 != self.period {
            return Err(Error::InvalidInput(format!(
                "correction has length {} for period {}",
                self.correction.len(),
                self.period
            )));
        }
        Ok(HilbertFunction {
            k1: self.k1.clone(),
            k2: self.k2.clone(),
            chi: self.chi,
            period: self.period,
            correction: self.correction.clone(),
            extrapolated: self.extrapolated,
        })
    }
}

/// Pretty JSON with a trailing newline; deterministic for a given value.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
