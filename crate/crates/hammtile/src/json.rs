//! JSON text formats for the domain types.
//!
//! Vectors are bitstrings with coordinate 1 leftmost. All formats are plain
//! serde structs convertible to and from the richer domain types.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covering::{CoveringError, CoveringFamily};
use crate::hypercube::{HypercubeError, Subset, Vector};
use crate::poset::{Poset, PosetError};
use crate::tilings::Tiling;
use crate::weights::{ValidationReport, WeightError, WeightTable};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error(transparent)]
    Vector(#[from] HypercubeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Covering(#[from] CoveringError),
    #[error(transparent)]
    Tiling(#[from] crate::tilings::TilingError),
    #[error("metric descriptor must contain exactly one of \"poset\", \"covering\", \"table\"")]
    AmbiguousMetric,
}

/// `{"n": int, "vectors": ["bitstring", ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubsetJson {
    pub n: usize,
    pub vectors: Vec<String>,
}

impl SubsetJson {
    pub fn to_subset(&self) -> Result<Subset, JsonError> {
        let vectors = self
            .vectors
            .iter()
            .map(|s| s.parse::<Vector>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subset::new(self.n, vectors)?)
    }

    pub fn from_subset(s: &Subset) -> SubsetJson {
        SubsetJson {
            n: s.dim(),
            vectors: s.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// `{"n": int, "values": [2^n ints]}` with index `Σ x_i 2^(i-1)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightTableJson {
    pub n: usize,
    pub values: Vec<u32>,
}

impl WeightTableJson {
    pub fn to_table(&self) -> Result<WeightTable, JsonError> {
        Ok(WeightTable::from_values(self.n, self.values.clone())?)
    }

    pub fn from_table(w: &WeightTable) -> WeightTableJson {
        WeightTableJson {
            n: w.dim(),
            values: w.values().to_vec(),
        }
    }
}

/// `{"n": int, "relations": [[a, b], ...]}` meaning `a ⪯ b`; the closure is
/// applied on load.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<Poset, JsonError> {
        let relations: Vec<(usize, usize)> = self.relations.iter().map(|r| (r[0], r[1])).collect();
        Ok(Poset::from_relations(self.n, &relations)?)
    }

    /// Serializes using the covering pairs, the sparsest faithful
    /// presentation.
    pub fn from_poset(p: &Poset) -> PosetJson {
        PosetJson {
            n: p.n(),
            relations: p.covering_pairs().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// `{"n": int, "sets": [[ints]]}`, 1-indexed coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoveringJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl CoveringJson {
    pub fn to_family(&self) -> Result<CoveringFamily, JsonError> {
        Ok(CoveringFamily::new(self.n, &self.sets)?)
    }

    pub fn from_family(f: &CoveringFamily) -> CoveringJson {
        CoveringJson {
            n: f.n(),
            sets: f.sets(),
        }
    }
}

/// `{"n": int, "D": [bitstrings], "C": [bitstrings]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TilingJson {
    pub n: usize,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
}

impl TilingJson {
    pub fn tile(&self) -> Result<Subset, JsonError> {
        SubsetJson {
            n: self.n,
            vectors: self.d.clone(),
        }
        .to_subset()
    }

    pub fn code(&self) -> Result<Subset, JsonError> {
        SubsetJson {
            n: self.n,
            vectors: self.c.clone(),
        }
        .to_subset()
    }

    pub fn to_tiling(&self) -> Result<Tiling, JsonError> {
        Ok(Tiling::new(&self.tile()?, &self.code()?)?)
    }

    pub fn from_tiling(t: &Tiling) -> TilingJson {
        TilingJson {
            n: t.dim(),
            d: t.tile().iter().map(|v| v.to_string()).collect(),
            c: t.code().iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// `{"valid": bool, "violations": [{"axiom": ..., "witness": [x, y]}]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReportJson {
    pub valid: bool,
    pub violations: Vec<ViolationJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ViolationJson {
    pub axiom: String,
    pub witness: [String; 2],
}

impl ValidationReportJson {
    pub fn from_report(r: &ValidationReport) -> ValidationReportJson {
        ValidationReportJson {
            valid: r.is_valid(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationJson {
                    axiom: v.axiom.as_str().to_string(),
                    witness: [v.witness.0.to_string(), v.witness.1.to_string()],
                })
                .collect(),
        }
    }
}

/// A metric descriptor: exactly one of a poset, a covering family, or an
/// explicit weight table.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct MetricJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covering: Option<CoveringJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<WeightTableJson>,
}

impl MetricJson {
    pub fn to_weight_table(&self) -> Result<WeightTable, JsonError> {
        match (&self.poset, &self.covering, &self.table) {
            (Some(p), None, None) => Ok(p.to_poset()?.p_weight_table()),
            (None, Some(c), None) => Ok(c.to_family()?.f_weight_table()),
            (None, None, Some(t)) => t.to_table(),
            _ => Err(JsonError::AmbiguousMetric),
        }
    }

    pub fn covering_family(&self) -> Result<Option<CoveringFamily>, JsonError> {
        match &self.covering {
            Some(c) => Ok(Some(c.to_family()?)),
            None => Ok(None),
        }
    }
}
