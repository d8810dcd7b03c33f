//! File formats: semigroups, subsets and homomorphisms.
//!
//! Semigroups are either lists of partial bijections or raw tables. A pbij
//! file may list its maps in any order; ids always follow the sorted order.

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{IsqError, Result};
use crate::pbij::PartialBijection;
use crate::semigroup::{Homomorphism, InverseSemigroup, RawTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SemigroupJson {
    Pbij {
        degree: usize,
        elements: Vec<Vec<u8>>,
    },
    Table {
        n: usize,
        mul: Vec<Vec<usize>>,
        inv: Vec<usize>,
    },
}

impl SemigroupJson {
    pub fn from_semigroup(s: &InverseSemigroup) -> Self {
        match (s.maps(), s.degree()) {
            (Some(maps), Some(degree)) => SemigroupJson::Pbij {
                degree,
                elements: maps.iter().map(|m| m.images().to_vec()).collect(),
            },
            _ => {
                let RawTable { mul, inv } = s.raw_table();
                SemigroupJson::Table {
                    n: s.len(),
                    mul,
                    inv,
                }
            }
        }
    }

    pub fn into_semigroup(self) -> Result<InverseSemigroup> {
        match self {
            SemigroupJson::Pbij { degree, elements } => {
                let maps = elements
                    .into_iter()
                    .map(|images| {
                        if images.len() != degree {
                            return Err(IsqError::Input(format!(
                                "map {images:?} does not have degree {degree}"
                            )));
                        }
                        PartialBijection::new(images)
                    })
                    .collect::<Result<Vec<_>>>()?;
                InverseSemigroup::from_partial_bijections(maps)
            }
            SemigroupJson::Table { n, mul, inv } => {
                if mul.len() != n || inv.len() != n {
                    return Err(IsqError::Input(format!("table does not have {n} rows")));
                }
                InverseSemigroup::from_table(RawTable { mul, inv })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetJson {
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomJson {
    pub map: Vec<usize>,
}

pub fn parse_semigroup(text: &str) -> Result<InverseSemigroup> {
    serde_json::from_str::<SemigroupJson>(text)?.into_semigroup()
}

pub fn semigroup_to_json(s: &InverseSemigroup) -> String {
    serde_json::to_string(&SemigroupJson::from_semigroup(s)).expect("serializable")
}

pub fn subset_from_indices(s: &InverseSemigroup, indices: &[usize]) -> Result<ElemSet> {
    for &i in indices {
        s.check(i)?;
    }
    Ok(ElemSet::from_ids(s.len(), indices.iter().copied()))
}

/// A subset of `s`, given either as `{"indices": [..]}` or as a semigroup
/// whose partial bijections all lie in `s`.
pub fn parse_subset(s: &InverseSemigroup, text: &str) -> Result<ElemSet> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("indices").is_some() {
        let sub: SubsetJson = serde_json::from_value(value)?;
        return subset_from_indices(s, &sub.indices);
    }
    let other = serde_json::from_value::<SemigroupJson>(value)?.into_semigroup()?;
    match other.maps() {
        Some(maps) => {
            let ids = maps
                .iter()
                .map(|m| {
                    s.find_map(m)
                        .ok_or_else(|| IsqError::Input(format!("map {m} is not an element")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ElemSet::from_ids(s.len(), ids))
        }
        None if other.raw_table() == s.raw_table() => Ok(ElemSet::full(s.len())),
        None => Err(IsqError::Input(
            "a table semigroup can only stand for the whole semigroup".into(),
        )),
    }
}

pub fn parse_hom(
    source: &InverseSemigroup,
    target: &InverseSemigroup,
    text: &str,
) -> Result<Homomorphism> {
    let h: HomJson = serde_json::from_str(text)?;
    Homomorphism::new(source, target, h.map)
}
