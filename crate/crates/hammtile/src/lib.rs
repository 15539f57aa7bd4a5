//! Tilings of the binary Hamming cube and the perfect codes they induce.
//!
//! A tiling of `F_2^n` is a pair of subsets `(D, C)` such that the translates
//! of the tile `D` by the codewords of `C` partition the whole space. When the
//! tile is a metric ball of a translation-invariant, support-respecting
//! (TS) metric, the code `C` is a perfect code for that metric. This crate
//! provides:
//!
//! * bit-level arithmetic and geometry on `F_2^n` ([`hypercube`]),
//! * explicit weight tables as the universal TS-metric representation,
//!   with axiom validation, balls, and concatenation constructions
//!   ([`weights`]),
//! * poset metrics and bounded poset search ([`poset`]),
//! * combinatorial metrics from covering families, with exact minimum
//!   set cover ([`covering`]),
//! * tiling verification, complement search by exact cover, canonical
//!   forms under coordinate permutation, extension and concatenation
//!   ([`tilings`]),
//! * TS-ball recognition, perfect-code certificates, and classification
//!   of size-8 tiles against a bundled reference catalog ([`perfect`],
//!   [`catalog`]),
//! * enumeration of support-closed subsets ([`enumerate`]) and the JSON
//!   text formats used by the CLI ([`json`]).
//!
//! Everything is exact integer arithmetic at desk scale: dimensions up to 63
//! for pointwise vector operations, up to 16 for full weight tables, and
//! smaller bounds for the exhaustive searches (documented per function).

pub mod catalog;
pub mod covering;
pub mod enumerate;
pub mod hypercube;
pub mod json;
pub mod perfect;
pub mod poset;
pub mod tilings;
pub mod weights;

pub use covering::CoveringFamily;
pub use hypercube::{Subset, Vector};
pub use poset::Poset;
pub use tilings::{Permutation, Tiling};
pub use weights::{Ball, WeightTable};
