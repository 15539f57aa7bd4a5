//! The bundled reference catalog of the fifteen representative size-8 tiles.
//!
//! Nine entries can never be a TS-ball (each carries a counter-example
//! vector whose support sits inside a member's support but which is missing
//! from the set); six are balls, each with a realizing poset or covering
//! family and radius. The catalog is shipped as a JSON data file with a schema version,
//! parsed once, and integrity-checked on load: every stored metric must
//! reconstruct its tile exactly and every counter-example must actually
//! violate support closure.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::covering::CoveringFamily;
use crate::hypercube::{Subset, Vector};
use crate::json::{CoveringJson, PosetJson, SubsetJson};
use crate::poset::Poset;
use crate::tilings::canonical_form;
use crate::weights::WeightTable;

pub const SCHEMA_VERSION: u32 = 1;

static CATALOG_JSON: &str = include_str!("../data/catalog.json");
static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The realizing metric stored with a BALL entry.
#[derive(Clone, Debug)]
pub enum MetricWitness {
    Poset(Poset),
    Covering(CoveringFamily),
}

impl MetricWitness {
    pub fn weight_table(&self) -> WeightTable {
        match self {
            MetricWitness::Poset(p) => p.p_weight_table(),
            MetricWitness::Covering(f) => f.f_weight_table(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    /// The tile is the stored metric's ball of the stored radius at 0.
    Ball { metric: MetricWitness, radius: u32 },
    /// The tile misses this vector although its support lies inside a
    /// member's support, so no TS-metric can realize it as a ball.
    NotBall { witness: Vector },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub table: String,
    pub rank: usize,
    pub members: Subset,
    pub verdict: Verdict,
    canonical: Subset,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.members.dim()
    }

    pub fn is_ball(&self) -> bool {
        matches!(self.verdict, Verdict::Ball { .. })
    }

    /// The canonical form of the member set, precomputed on load.
    pub fn canonical(&self) -> &Subset {
        &self.canonical
    }
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn ball_entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.is_ball())
    }

    pub fn by_name(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Looks a subset up by canonical form at matching dimension.
    pub fn lookup(&self, dim: usize, canonical: &Subset) -> Option<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.dim() == dim && &e.canonical == canonical)
    }
}

/// The raw JSON shape of the data file.
#[derive(Serialize, Deserialize)]
struct CatalogJson {
    schema_version: u32,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    name: String,
    table: String,
    n: usize,
    rank: usize,
    members: Vec<String>,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poset: Option<PosetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    covering: Option<CoveringJson>,
}

/// The bundled catalog, parsed and integrity-checked on first use.
///
/// Panics if the bundled data is inconsistent; the data ships with the
/// binary, so an inconsistency is a build defect, and the same checks run as
/// a test.
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| load().expect("bundled catalog data is consistent"))
}

/// The raw JSON text of the bundled catalog.
pub fn catalog_json() -> &'static str {
    CATALOG_JSON
}

fn load() -> Result<Catalog, String> {
    let raw: CatalogJson =
        serde_json::from_str(CATALOG_JSON).map_err(|e| format!("catalog parse: {e}"))?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(format!(
            "unsupported catalog schema version {}",
            raw.schema_version
        ));
    }
    let mut entries = Vec::with_capacity(raw.entries.len());
    for e in raw.entries {
        let members = SubsetJson {
            n: e.n,
            vectors: e.members,
        }
        .to_subset()
        .map_err(|err| format!("{}: {err}", e.name))?;
        let verdict = match e.verdict.as_str() {
            "BALL" => {
                let radius = e
                    .radius
                    .ok_or(format!("{}: BALL entry without radius", e.name))?;
                let metric = match (e.poset, e.covering) {
                    (Some(p), None) => MetricWitness::Poset(
                        p.to_poset().map_err(|err| format!("{}: {err}", e.name))?,
                    ),
                    (None, Some(c)) => MetricWitness::Covering(
                        c.to_family().map_err(|err| format!("{}: {err}", e.name))?,
                    ),
                    _ => return Err(format!("{}: BALL entry needs one realizing metric", e.name)),
                };
                Verdict::Ball { metric, radius }
            }
            "NOT_BALL" => {
                let witness = e
                    .witness
                    .ok_or(format!("{}: NOT_BALL entry without witness", e.name))?
                    .parse::<Vector>()
                    .map_err(|err| format!("{}: {err}", e.name))?;
                Verdict::NotBall { witness }
            }
            other => return Err(format!("{}: unknown verdict {other}", e.name)),
        };
        let canonical = canonical_form(&members).map_err(|err| format!("{}: {err}", e.name))?;
        entries.push(CatalogEntry {
            name: e.name,
            table: e.table,
            rank: e.rank,
            members,
            verdict,
            canonical,
        });
    }
    let catalog = Catalog { entries };
    integrity_check(&catalog)?;
    Ok(catalog)
}

fn integrity_check(catalog: &Catalog) -> Result<(), String> {
    if catalog.entries.len() != 15 {
        return Err(format!(
            "expected 15 entries, found {}",
            catalog.entries.len()
        ));
    }
    for e in &catalog.entries {
        if e.members.len() != 8 {
            return Err(format!("{}: entry is not a size-8 tile", e.name));
        }
        if !e.members.contains_zero() {
            return Err(format!("{}: tile does not contain 0", e.name));
        }
        if e.members.gf2_rank() != e.rank || e.rank != e.dim() {
            return Err(format!("{}: stored rank is wrong", e.name));
        }
        match &e.verdict {
            Verdict::Ball { metric, radius } => {
                let zero = Vector::zero(e.dim()).expect("positive dimension");
                let ball = metric.weight_table().ball(&zero, *radius);
                if ball.members != e.members {
                    return Err(format!(
                        "{}: stored metric does not reconstruct the tile",
                        e.name
                    ));
                }
            }
            Verdict::NotBall { witness } => {
                if e.members.contains(witness) {
                    return Err(format!("{}: witness is a member", e.name));
                }
                let covered = e.members.iter().any(|m| witness.support_subseteq(&m));
                if !covered {
                    return Err(format!(
                        "{}: witness support is not inside any member",
                        e.name
                    ));
                }
            }
        }
    }
    for (i, a) in catalog.entries.iter().enumerate() {
        for b in &catalog.entries[i + 1..] {
            if a.dim() == b.dim() && a.canonical == b.canonical {
                return Err(format!(
                    "{} and {} are permutation-equivalent",
                    a.name, b.name
                ));
            }
        }
    }
    Ok(())
}
