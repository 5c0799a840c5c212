//! JSON file formats for objects, groupoids, simplicial data, monomial
//! sets, and enumeration results.
//!
//! Formats are UTF-8 JSON, human-diffable, with every list in canonical
//! order, so writing and re-reading a value is the identity. Multiplication
//! rows `[x, y, z]` mean `((x, y), z)` and comultiplication rows mean
//! `(x, (y, z))`; groupoid composition rows `[g, h, gh]` follow the
//! target-first convention `s(g) = t(h)`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::Classification;
use crate::exterior::{ExteriorError, SignedMonomial, SubsetSpec};
use crate::frobenius::{FrobeniusError, FrobeniusObject};
use crate::groupoid::{ArrowDecl, Groupoid, GroupoidError};
use crate::rel::{FiniteSet, RelError};
use crate::simplicial::{AlphaSimplicial, LevelMaps, SimplicialError, TruncSimplicialSet2};

/// Errors from reading or writing data files.
#[derive(Debug, Error)]
pub enum FileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Labels(#[from] RelError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error("the simplicial file carries no alpha_hat table")]
    MissingAlpha,
}

/// A Frobenius object file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusFile {
    pub elements: Vec<String>,
    pub eta: Vec<String>,
    pub epsilon: Vec<String>,
    pub mu: Vec<[String; 3]>,
    pub delta: Vec<[String; 3]>,
}

impl FrobeniusFile {
    pub fn from_object(f: &FrobeniusObject) -> Self {
        let own3 = |t: [&str; 3]| t.map(str::to_owned);
        FrobeniusFile {
            elements: f.carrier().labels().to_vec(),
            eta: f.eta_labels().into_iter().map(str::to_owned).collect(),
            epsilon: f.epsilon_labels().into_iter().map(str::to_owned).collect(),
            mu: f.mu_triples().into_iter().map(own3).collect(),
            delta: f.delta_triples().into_iter().map(own3).collect(),
        }
    }

    pub fn to_object(&self) -> Result<FrobeniusObject, FileError> {
        let carrier = FiniteSet::new(self.elements.iter().cloned())?;
        Ok(FrobeniusObject::new(
            carrier,
            self.eta.iter().map(String::as_str),
            self.epsilon.iter().map(String::as_str),
            self.mu.iter().map(|t| [&*t[0], &*t[1], &*t[2]]),
            self.delta.iter().map(|t| [&*t[0], &*t[1], &*t[2]]),
        )?)
    }
}

/// One arrow of a groupoid file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// A groupoid file. Identities and inverses are optional: they are derived
/// from the composition table when absent and cross-checked when present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidFile {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    pub compose: Vec<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverses: Option<BTreeMap<String, String>>,
}

impl GroupoidFile {
    pub fn from_groupoid(g: &Groupoid) -> Self {
        let arrows = g
            .arrows()
            .iter()
            .map(|name| ArrowEntry {
                name: name.to_owned(),
                src: g.source_of(name).expect("arrow exists").to_owned(),
                tgt: g.target_of(name).expect("arrow exists").to_owned(),
            })
            .collect();
        let mut compose = Vec::new();
        for (a, b) in g.composable_pairs() {
            if let Ok(ab) = g.compose_arrows(a, b) {
                compose.push([a.to_owned(), b.to_owned(), ab.to_owned()]);
            }
        }
        let identities = g
            .objects()
            .iter()
            .map(|p| (p.to_owned(), g.identity_of(p).expect("object exists").to_owned()))
            .collect();
        let inverses = g
            .arrows()
            .iter()
            .map(|a| (a.to_owned(), g.inverse_of(a).expect("arrow exists").to_owned()))
            .collect();
        GroupoidFile {
            objects: g.objects().labels().to_vec(),
            arrows,
            compose,
            identities: Some(identities),
            inverses: Some(inverses),
        }
    }

    pub fn to_groupoid(&self) -> Result<Groupoid, FileError> {
        let objects = FiniteSet::new(self.objects.iter().cloned())?;
        let arrows = self
            .arrows
            .iter()
            .map(|a| ArrowDecl::new(a.name.clone(), a.src.clone(), a.tgt.clone()))
            .collect();
        Ok(Groupoid::new(
            objects,
            arrows,
            self.compose.clone(),
            self.identities.clone(),
            self.inverses.clone(),
        )?)
    }
}

/// A 2-truncated simplicial set file, optionally with the automorphism
/// table needed to pass to the object side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialFile {
    pub x0: Vec<String>,
    pub x1: Vec<String>,
    pub x2: Vec<String>,
    pub d10: BTreeMap<String, String>,
    pub d11: BTreeMap<String, String>,
    pub d20: BTreeMap<String, String>,
    pub d21: BTreeMap<String, String>,
    pub d22: BTreeMap<String, String>,
    pub s00: BTreeMap<String, String>,
    pub s10: BTreeMap<String, String>,
    pub s11: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_hat: Option<BTreeMap<String, String>>,
}

impl SimplicialFile {
    pub fn from_base(t: &TruncSimplicialSet2) -> Self {
        let maps = t.level_maps();
        SimplicialFile {
            x0: t.x0().labels().to_vec(),
            x1: t.x1().labels().to_vec(),
            x2: t.x2().labels().to_vec(),
            d10: maps.d10,
            d11: maps.d11,
            d20: maps.d20,
            d21: maps.d21,
            d22: maps.d22,
            s00: maps.s00,
            s10: maps.s10,
            s11: maps.s11,
            alpha_hat: None,
        }
    }

    pub fn from_alpha(a: &AlphaSimplicial) -> Self {
        let mut file = SimplicialFile::from_base(a.base());
        file.alpha_hat = Some(
            a.alpha_hat()
                .pairs()
                .into_iter()
                .map(|(x, y)| (x.to_owned(), y.to_owned()))
                .collect(),
        );
        file
    }

    pub fn to_base(&self) -> Result<TruncSimplicialSet2, FileError> {
        let maps = LevelMaps {
            d10: self.d10.clone(),
            d11: self.d11.clone(),
            d20: self.d20.clone(),
            d21: self.d21.clone(),
            d22: self.d22.clone(),
            s00: self.s00.clone(),
            s10: self.s10.clone(),
            s11: self.s11.clone(),
        };
        Ok(TruncSimplicialSet2::new(
            FiniteSet::new(self.x0.iter().cloned())?,
            FiniteSet::new(self.x1.iter().cloned())?,
            FiniteSet::new(self.x2.iter().cloned())?,
            &maps,
        )?)
    }

    pub fn to_alpha(&self) -> Result<AlphaSimplicial, FileError> {
        let base = self.to_base()?;
        let table = self.alpha_hat.as_ref().ok_or(FileError::MissingAlpha)?;
        Ok(AlphaSimplicial::from_pairs(
            base,
            table.iter().map(|(k, v)| (k.as_str(), v.as_str())),
        )?)
    }
}

/// One signed monomial of a candidate-set file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialEntry {
    pub sign: i8,
    pub subset: Vec<u8>,
}

/// A candidate set of signed monomials over an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSpecFile {
    pub n: u8,
    pub members: Vec<MonomialEntry>,
}

impl SubsetSpecFile {
    pub fn from_spec(spec: &SubsetSpec) -> Self {
        SubsetSpecFile {
            n: spec.dim(),
            members: spec
                .members()
                .map(|m| MonomialEntry {
                    sign: m.sign(),
                    subset: m.subset().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_spec(&self) -> Result<SubsetSpec, FileError> {
        let members = self
            .members
            .iter()
            .map(|m| SignedMonomial::new(m.sign, &m.subset, self.n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubsetSpec::new(self.n, members)?)
    }
}

/// Property tallies inside a results file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub total: usize,
    pub commutative: usize,
    pub special: usize,
    pub dagger: usize,
    pub special_and_dagger: usize,
    pub nontrivial_nakayama: usize,
}

impl From<Classification> for ClassificationEntry {
    fn from(c: Classification) -> Self {
        ClassificationEntry {
            total: c.total,
            commutative: c.commutative,
            special: c.special,
            dagger: c.dagger,
            special_and_dagger: c.special_and_dagger,
            nontrivial_nakayama: c.nontrivial_nakayama,
        }
    }
}

/// Frozen enumeration results: counts plus canonical representatives up to
/// isomorphism. Written on the first oracle run, compared on later runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultsFile {
    pub carrier_size: usize,
    pub counts: ClassificationEntry,
    pub up_to_iso: usize,
    pub representatives: Vec<FrobeniusFile>,
}

/// Reads a JSON value from a file.
pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, FileError> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Writes a JSON value to a file, pretty-printed with a trailing newline.
pub fn save<T: Serialize>(path: &Path, value: &T) -> Result<(), FileError> {
    fs::write(path, to_pretty_string(value)?)?;
    Ok(())
}

/// The canonical pretty rendering used for files and standard output.
pub fn to_pretty_string<T: Serialize>(value: &T) -> Result<String, FileError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::one_volume_pair;

    #[test]
    fn object_files_round_trip() {
        let f = one_volume_pair();
        let file = FrobeniusFile::from_object(&f);
        assert_eq!(file.to_object().unwrap(), f);
        let json = to_pretty_string(&file).unwrap();
        let reread: FrobeniusFile = serde_json::from_str(&json).unwrap();
        assert_eq!(reread, file);
    }

    #[test]
    fn groupoid_files_round_trip_and_cross_check() {
        let g = Groupoid::pair_groupoid(2);
        let file = GroupoidFile::from_groupoid(&g);
        assert_eq!(file.to_groupoid().unwrap(), g);

        // Dropping the derived tables still loads.
        let mut bare = file.clone();
        bare.identities = None;
        bare.inverses = None;
        assert_eq!(bare.to_groupoid().unwrap(), g);

        // A lying inverse table is caught at load time.
        let mut lying = file;
        lying
            .inverses
            .as_mut()
            .unwrap()
            .insert("a01".to_owned(), "a01".to_owned());
        assert!(matches!(
            lying.to_groupoid(),
            Err(FileError::Groupoid(GroupoidError::CrossCheck { .. }))
        ));
    }

    #[test]
    fn simplicial_files_round_trip() {
        let a = crate::correspondence::frob_to_simplicial(&one_volume_pair()).unwrap();
        let file = SimplicialFile::from_alpha(&a);
        let reread = file.to_alpha().unwrap();
        assert_eq!(reread.base(), a.base());
        assert_eq!(reread.alpha_hat(), a.alpha_hat());

        let mut missing = file;
        missing.alpha_hat = None;
        assert!(missing.to_base().is_ok());
        assert!(matches!(missing.to_alpha(), Err(FileError::MissingAlpha)));
    }

    #[test]
    fn subset_spec_files_round_trip() {
        let spec = SubsetSpec::torus();
        let file = SubsetSpecFile::from_spec(&spec);
        assert_eq!(file.to_spec().unwrap(), spec);
        assert_eq!(file.n, 2);
        assert_eq!(file.members.len(), 8);
    }
}
