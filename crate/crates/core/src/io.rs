//! JSON documents for solutions and theta families.
//!
//! Emission is canonical: object keys sorted, no insignificant whitespace.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::kgraph::ThetaFamily;
use crate::solution::Solution;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDocument {
    pub format_version: String,
    pub size: usize,
    /// Row-major by `(x, y)`, 1-based.
    pub table: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaDocument {
    pub format_version: String,
    pub k: usize,
    pub sizes: Vec<usize>,
    /// Keyed `"i,j"` with `i < j`; each map is row-major by `(s, t)`.
    pub maps: BTreeMap<String, Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Value>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            Error::Schema(e.to_string())
        } else {
            Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        }
    })
}

fn canonical<T: Serialize>(doc: &T) -> String {
    // serde_json's Map keeps keys sorted, so going through Value sorts them.
    let value = serde_json::to_value(doc).expect("documents serialize");
    serde_json::to_string(&value).expect("values serialize")
}

fn check_version(v: &str) -> Result<()> {
    if v != FORMAT_VERSION {
        return Err(Error::Schema(format!("unsupported format_version `{v}`")));
    }
    Ok(())
}

fn pairs(table: &[[u32; 2]]) -> Vec<(u32, u32)> {
    table.iter().map(|&[a, b]| (a, b)).collect()
}

fn arrays(table: &[(u32, u32)]) -> Vec<[u32; 2]> {
    table.iter().map(|&(a, b)| [a, b]).collect()
}

impl SolutionDocument {
    pub fn parse(text: &str) -> Result<SolutionDocument> {
        let doc: SolutionDocument = from_json(text)?;
        check_version(&doc.format_version)?;
        if doc.table.len() != doc.size * doc.size {
            return Err(Error::Schema(format!(
                "size {} needs {} table entries, found {}",
                doc.size,
                doc.size * doc.size,
                doc.table.len()
            )));
        }
        if let Some(labels) = &doc.labels {
            if labels.len() != doc.size {
                return Err(Error::Schema(format!(
                    "expected {} labels, found {}",
                    doc.size,
                    labels.len()
                )));
            }
        }
        Ok(doc)
    }

    pub fn from_solution(r: &Solution) -> SolutionDocument {
        SolutionDocument {
            format_version: FORMAT_VERSION.into(),
            size: r.size(),
            table: arrays(r.table()),
            labels: None,
            name: None,
            metadata: None,
        }
    }

    pub fn to_solution(&self) -> Result<Solution> {
        Solution::new(self.size, pairs(&self.table))
    }

    pub fn emit(&self) -> String {
        canonical(self)
    }

    /// Label of element `x`, or its number when unlabeled.
    pub fn label(&self, x: u32) -> String {
        self.labels
            .as_ref()
            .and_then(|l| l.get(x as usize - 1).cloned())
            .unwrap_or_else(|| x.to_string())
    }
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

impl ThetaDocument {
    pub fn parse(text: &str) -> Result<ThetaDocument> {
        let doc: ThetaDocument = from_json(text)?;
        check_version(&doc.format_version)?;
        if doc.sizes.len() != doc.k {
            return Err(Error::Schema(format!(
                "k = {} but {} sizes given",
                doc.k,
                doc.sizes.len()
            )));
        }
        let mut expected = 0;
        for i in 1..=doc.k {
            for j in i + 1..=doc.k {
                expected += 1;
                let key = pair_key(i, j);
                let map = doc
                    .maps
                    .get(&key)
                    .ok_or_else(|| Error::Schema(format!("missing map \"{key}\"")))?;
                let want = doc.sizes[i - 1] * doc.sizes[j - 1];
                if map.len() != want {
                    return Err(Error::Schema(format!(
                        "map \"{key}\" needs {want} entries, found {}",
                        map.len()
                    )));
                }
            }
        }
        if doc.maps.len() != expected {
            let extra = doc
                .maps
                .keys()
                .find(|key| !(1..=doc.k).any(|i| (i + 1..=doc.k).any(|j| **key == pair_key(i, j))))
                .cloned()
                .unwrap_or_default();
            return Err(Error::Schema(format!("unexpected map key \"{extra}\"")));
        }
        Ok(doc)
    }

    pub fn from_family(family: &ThetaFamily) -> ThetaDocument {
        let k = family.k();
        let mut maps = BTreeMap::new();
        for i in 1..=k {
            for j in i + 1..=k {
                maps.insert(pair_key(i, j), arrays(family.map(i, j).table()));
            }
        }
        ThetaDocument {
            format_version: FORMAT_VERSION.into(),
            k,
            sizes: family.sizes().to_vec(),
            maps,
            name: None,
            metadata: None,
        }
    }

    pub fn to_family(&self) -> Result<ThetaFamily> {
        let mut tables = Vec::new();
        for i in 1..=self.k {
            for j in i + 1..=self.k {
                let key = pair_key(i, j);
                let map = self
                    .maps
                    .get(&key)
                    .ok_or_else(|| Error::Schema(format!("missing map \"{key}\"")))?;
                tables.push(pairs(map));
            }
        }
        ThetaFamily::from_tables(self.sizes.clone(), tables)
    }

    pub fn emit(&self) -> String {
        canonical(self)
    }
}

/// Re-serializes any JSON text canonically.
pub fn canonicalize(text: &str) -> Result<String> {
    let value: Value = from_json(text)?;
    Ok(serde_json::to_string(&value).expect("values serialize"))
}
