//! TS-ball recognition, perfect-code verification, and classification of
//! small tiles against the bundled catalog.
//!
//! A set containing 0 is a ball of some TS-metric exactly when it is
//! support-closed: necessity comes from the support axiom, sufficiency from
//! the flat witness that assigns weight 1 inside the set and 2 outside. The
//! classification routines reduce a candidate tile to a canonical form and
//! compare against the catalog.

use thiserror::Error;

use crate::catalog::{catalog, CatalogEntry};
use crate::covering::CoveringFamily;
use crate::hypercube::{Subset, Vector};
use crate::tilings::{canonical_form, d_n_tile, TilingError};
use crate::weights::{WeightTable, MAX_TABLE_DIM};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PerfectError {
    #[error("the set must contain 0")]
    ZeroMissing,
    #[error("dimension {0} exceeds the bound {1} for this operation")]
    DimensionTooLarge(usize, usize),
    #[error("expected a set of cardinality 2 or 4, got {0}")]
    WrongCardinality(usize),
    #[error("expected a size-8 tile, got {0} elements")]
    NotSizeEight(usize),
    #[error("tile rank {rank} is below the ambient dimension {dim}")]
    NotFullRank { rank: usize, dim: usize },
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

/// Finds a vector whose support lies inside some member's support yet which
/// is missing from `D`, or `None` when `D` is support-closed. Among all such
/// vectors the one of maximal support deficiency is reported: smallest
/// Hamming weight first, then smallest integer value.
pub fn support_closure_witness(d: &Subset) -> Result<Option<Vector>, PerfectError> {
    if !d.contains_zero() {
        return Err(PerfectError::ZeroMissing);
    }
    let n = d.dim();
    let mut best: Option<(u32, u64)> = None;
    for &m in d.masks() {
        let mut sub = m;
        loop {
            if !d.contains_mask(sub) {
                let key = (sub.count_ones(), sub);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    Ok(best.map(|(_, mask)| Vector::new(mask, n).expect("mask in range")))
}

/// True iff every sub-support of every member is present.
pub fn is_support_closed(d: &Subset) -> Result<bool, PerfectError> {
    Ok(support_closure_witness(d)?.is_none())
}

/// Decides whether `D` is a ball of some TS-metric centered at 0, returning
/// a constructive witness: the flat weight (1 on `D \ {0}`, 2 outside) with
/// radius 1. Support closure is exactly the criterion, so the answer is
/// `None` iff [`support_closure_witness`] finds a missing vector.
///
/// The witness radius proves existence only; catalogued tiles carry their
/// reference metric and radius separately.
pub fn is_ts_ball(d: &Subset) -> Result<Option<(WeightTable, u32)>, PerfectError> {
    let n = d.dim();
    if n > MAX_TABLE_DIM {
        return Err(PerfectError::DimensionTooLarge(n, MAX_TABLE_DIM));
    }
    if support_closure_witness(d)?.is_some() {
        return Ok(None);
    }
    let values = (0..1u64 << n)
        .map(|m| match m {
            0 => 0,
            m if d.contains_mask(m) => 1,
            _ => 2,
        })
        .collect();
    let w = WeightTable::from_values(n, values).expect("dimension checked");
    let zero = Vector::zero(n).expect("positive dimension");
    debug_assert_eq!(w.ball(&zero, 1).members, *d);
    Ok(Some((w, 1)))
}

/// Checks that the radius-`r` balls around the codewords of `C` partition
/// the space, i.e. that `C` is a `(d, r)`-perfect code.
pub fn verify_perfect(code: &Subset, w: &WeightTable, radius: u32) -> bool {
    assert_eq!(code.dim(), w.dim(), "perfect-code check across dimensions");
    let n = w.dim();
    let cells = 1usize << n;
    let mut seen = vec![false; cells];
    let mut count = 0usize;
    for &c in code.masks() {
        for m in 0..cells as u64 {
            if w.value(m ^ c) <= radius {
                if seen[m as usize] {
                    return false;
                }
                seen[m as usize] = true;
                count += 1;
            }
        }
    }
    count == cells
}

/// The three shapes a TS-ball of cardinality 2 or 4 can take, up to
/// coordinate labels (1-based coordinates reported).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallBallClass {
    /// `{0, e_i}`
    B1 {
        i: usize,
    },
    /// `{0, e_i, e_j, e_k}`
    B2 {
        i: usize,
        j: usize,
        k: usize,
    },
    /// `{0, e_i, e_j, e_i + e_j}`
    B3 {
        i: usize,
        j: usize,
    },
    NotTsBall,
}

impl SmallBallClass {
    pub fn label(&self) -> &'static str {
        match self {
            SmallBallClass::B1 { .. } => "B1",
            SmallBallClass::B2 { .. } => "B2",
            SmallBallClass::B3 { .. } => "B3",
            SmallBallClass::NotTsBall => "NOT_A_TS_BALL",
        }
    }

    /// A poset realizing the shape as a ball at 0, with its radius: the
    /// shape's coordinates are placed below every other coordinate.
    pub fn realizing_poset(&self, n: usize) -> Option<(crate::poset::Poset, u32)> {
        let below_rest = |low: &[usize]| {
            let mut relations = Vec::new();
            for &t in low {
                for l in 1..=n {
                    if !low.contains(&l) {
                        relations.push((t, l));
                    }
                }
            }
            crate::poset::Poset::from_relations(n, &relations).ok()
        };
        match self {
            SmallBallClass::B1 { i } => below_rest(&[*i]).map(|p| (p, 1)),
            SmallBallClass::B2 { i, j, k } => below_rest(&[*i, *j, *k]).map(|p| (p, 1)),
            SmallBallClass::B3 { i, j } => below_rest(&[*i, *j]).map(|p| (p, 2)),
            SmallBallClass::NotTsBall => None,
        }
    }
}

/// Matches a set of cardinality 2 or 4 containing 0 against the three
/// possible TS-ball shapes.
pub fn classify_small_ball(d: &Subset) -> Result<SmallBallClass, PerfectError> {
    if !d.contains_zero() {
        return Err(PerfectError::ZeroMissing);
    }
    if d.len() != 2 && d.len() != 4 {
        return Err(PerfectError::WrongCardinality(d.len()));
    }
    let nonzero: Vec<u64> = d.masks().iter().copied().filter(|&m| m != 0).collect();
    let coord = |m: u64| m.trailing_zeros() as usize + 1;
    match nonzero.as_slice() {
        [x] if x.count_ones() == 1 => Ok(SmallBallClass::B1 { i: coord(*x) }),
        [a, b, c] if [a, b, c].iter().all(|m| m.count_ones() == 1) => Ok(SmallBallClass::B2 {
            i: coord(*a),
            j: coord(*b),
            k: coord(*c),
        }),
        [a, b, c] if a.count_ones() == 1 && b.count_ones() == 1 && *c == a | b => {
            Ok(SmallBallClass::B3 {
                i: coord(*a),
                j: coord(*b),
            })
        }
        _ => Ok(SmallBallClass::NotTsBall),
    }
}

/// Outcome of classifying a full-rank size-8 tile.
#[derive(Clone, Debug)]
pub enum Tile8Classification {
    Catalogued(&'static CatalogEntry),
    /// The catalog covers only full-rank size-8 tiles; anything else is
    /// reported as such rather than guessed at.
    Uncatalogued,
}

/// Looks a size-8, full-rank tile up in the bundled catalog by canonical
/// form.
pub fn classify_tile8(d: &Subset) -> Result<Tile8Classification, PerfectError> {
    if !d.contains_zero() {
        return Err(PerfectError::ZeroMissing);
    }
    if d.len() != 8 {
        return Err(PerfectError::NotSizeEight(d.len()));
    }
    let rank = d.gf2_rank();
    if rank != d.dim() {
        return Err(PerfectError::NotFullRank { rank, dim: d.dim() });
    }
    let canonical = canonical_form(d)?;
    Ok(match catalog().lookup(d.dim(), &canonical) {
        Some(entry) => Tile8Classification::Catalogued(entry),
        None => Tile8Classification::Uncatalogued,
    })
}

/// The covering family realizing `D_n(x)` as a radius-1 ball, which exists
/// exactly when `ω_H(x) = 2`: all singletons plus the support of `x`. For
/// heavier `x` the set is not support-closed (a proper sub-support of `x` is
/// missing), so no TS-metric realizes it and `None` is returned.
pub fn dn_perfect_metric(n: usize, x: &Vector) -> Result<Option<CoveringFamily>, PerfectError> {
    let tile = d_n_tile(n, x)?;
    if x.weight() != 2 {
        debug_assert!(support_closure_witness(&tile)?.is_some());
        return Ok(None);
    }
    let masks = (0..n).map(|i| 1u32 << i).chain([x.bits() as u32]);
    let family = CoveringFamily::from_masks(n, masks).expect("covers the ground set");
    let zero = Vector::zero(n).expect("positive dimension");
    debug_assert_eq!(family.f_weight_table().ball(&zero, 1).members, tile);
    Ok(Some(family))
}
