//! Combinatorial metrics from covering families of `[n]`.
//!
//! The F-weight of a vector is the minimum number of family members whose
//! union contains its support; the minimum is computed exactly by
//! branch-and-bound set cover. Exactness matters: every ball identity in this
//! crate is asserted as literal set equality.

use thiserror::Error;

use crate::hypercube::{Subset, Vector};
use crate::weights::WeightTable;

pub const MAX_COVERING_DIM: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error("ground set size {0} exceeds the supported maximum of {max}", max = MAX_COVERING_DIM)]
    GroundSetTooLarge(usize),
    #[error("ground set must be nonempty")]
    GroundSetEmpty,
    #[error("family member {0} contains element {1} outside 1..={2}")]
    ElementOutOfRange(usize, usize, usize),
    #[error("family members must be nonempty")]
    EmptyMember,
    #[error("the family does not cover the ground set: coordinate {0} is missed")]
    NotACovering(usize),
    #[error("the set is not a ball of this family centered at 0")]
    NotAFamilyBall,
}

/// A family of subsets of `[n]` whose union is all of `[n]`, each stored as a
/// bitmask. Duplicates are removed; members contained in other members are
/// kept, since redundant sets never change the F-weight. Use
/// [`CoveringFamily::minimize`] to strip dominated members for display.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoveringFamily {
    n: u8,
    sets: Vec<u32>,
}

impl CoveringFamily {
    /// Builds a family from 1-indexed coordinate lists.
    pub fn new(n: usize, sets: &[Vec<usize>]) -> Result<Self, CoveringError> {
        let masks = sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let mut mask = 0u32;
                for &e in set {
                    if e == 0 || e > n {
                        return Err(CoveringError::ElementOutOfRange(i, e, n));
                    }
                    mask |= 1 << (e - 1);
                }
                Ok(mask)
            })
            .collect::<Result<Vec<_>, _>>()?;
        CoveringFamily::from_masks(n, masks)
    }

    pub fn from_masks(
        n: usize,
        masks: impl IntoIterator<Item = u32>,
    ) -> Result<Self, CoveringError> {
        if n == 0 {
            return Err(CoveringError::GroundSetEmpty);
        }
        if n > MAX_COVERING_DIM {
            return Err(CoveringError::GroundSetTooLarge(n));
        }
        let mut sets: Vec<u32> = masks.into_iter().collect();
        if sets.contains(&0) {
            return Err(CoveringError::EmptyMember);
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if let Some(&bad) = sets.iter().find(|&&s| s & !full != 0) {
            let e = (bad & !full).trailing_zeros() as usize + 1;
            return Err(CoveringError::ElementOutOfRange(0, e, n));
        }
        sets.sort_unstable();
        sets.dedup();
        let union = sets.iter().fold(0u32, |acc, s| acc | s);
        if union != full {
            let missed = (!union & full).trailing_zeros() as usize + 1;
            return Err(CoveringError::NotACovering(missed));
        }
        Ok(CoveringFamily { n: n as u8, sets })
    }

    /// The singleton covering `{{1}, ..., {n}}`, which induces the Hamming
    /// weight.
    pub fn singletons(n: usize) -> Result<Self, CoveringError> {
        CoveringFamily::from_masks(n, (0..n).map(|i| 1u32 << i))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Member masks, ascending.
    pub fn masks(&self) -> &[u32] {
        &self.sets
    }

    /// Members as sorted 1-indexed coordinate lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|&m| (1..=self.n()).filter(|&i| m >> (i - 1) & 1 == 1).collect())
            .collect()
    }

    /// Removes members contained in other members. The induced weight is
    /// unchanged; this is a display helper.
    pub fn minimize(&self) -> CoveringFamily {
        let kept: Vec<u32> = self
            .sets
            .iter()
            .copied()
            .filter(|&s| !self.sets.iter().any(|&t| t != s && s & !t == 0))
            .collect();
        CoveringFamily {
            n: self.n,
            sets: kept,
        }
    }

    /// `ω_F(x)`: the minimum number of members whose union contains
    /// `supp(x)`, by branch-and-bound on the lowest-index uncovered
    /// coordinate.
    pub fn f_weight(&self, x: &Vector) -> u32 {
        assert_eq!(x.dim(), self.n(), "f-weight across dimensions");
        self.min_cover(x.bits() as u32)
    }

    fn min_cover(&self, target: u32) -> u32 {
        if target == 0 {
            return 0;
        }
        // greedy upper bound
        let mut best = {
            let mut rest = target;
            let mut count = 0u32;
            while rest != 0 {
                let s = self
                    .sets
                    .iter()
                    .copied()
                    .max_by_key(|s| (s & rest).count_ones())
                    .expect("family is nonempty");
                rest &= !s;
                count += 1;
            }
            count
        };
        self.branch(target, 0, &mut best);
        best
    }

    fn branch(&self, rest: u32, used: u32, best: &mut u32) {
        if rest == 0 {
            *best = (*best).min(used);
            return;
        }
        if used + self.disjoint_lower_bound(rest) >= *best {
            return;
        }
        let pivot = 1u32 << rest.trailing_zeros();
        for &s in &self.sets {
            if s & pivot != 0 {
                self.branch(rest & !s, used + 1, best);
            }
        }
    }

    /// Coordinates no two of which share a family member give a lower bound
    /// on the cover size.
    fn disjoint_lower_bound(&self, rest: u32) -> u32 {
        let mut bound = 0u32;
        let mut blocked = 0u32;
        let mut todo = rest;
        while todo != 0 {
            let c = 1u32 << todo.trailing_zeros();
            todo &= !c;
            if c & blocked != 0 {
                continue;
            }
            bound += 1;
            for &s in &self.sets {
                if s & c != 0 {
                    blocked |= s;
                }
            }
        }
        bound
    }

    /// The full table of `ω_F` over `F_2^n`, by dynamic programming over
    /// support masks; always a valid TS-weight. Agreement with the
    /// per-vector branch-and-bound is checked in tests.
    pub fn f_weight_table(&self) -> WeightTable {
        let n = self.n();
        let size = 1usize << n;
        let mut values = vec![u32::MAX; size];
        values[0] = 0;
        for m in 1..size {
            let mut best = u32::MAX;
            let pivot = 1usize << (m as u32).trailing_zeros();
            for &s in &self.sets {
                if s as usize & pivot != 0 {
                    best = best.min(values[m & !(s as usize)].saturating_add(1));
                }
            }
            values[m] = best;
        }
        WeightTable::from_values(n, values).expect("covering dimensions fit a table")
    }
}

/// The covering product `F_1 ∗ F_2` on `[n + m]`: all unions of a member of
/// `F_1` with a shifted member of `F_2`. Its weight is the maximum of the two
/// component weights, so its radius-`r` ball is the concatenation of the two
/// radius-`r` balls for every `r`.
pub fn covering_product(
    f1: &CoveringFamily,
    f2: &CoveringFamily,
) -> Result<CoveringFamily, CoveringError> {
    let n = f1.n();
    let m = f2.n();
    if n + m > MAX_COVERING_DIM {
        return Err(CoveringError::GroundSetTooLarge(n + m));
    }
    let masks = f1
        .sets
        .iter()
        .flat_map(|&a| f2.sets.iter().map(move |&b| a | b << n));
    CoveringFamily::from_masks(n + m, masks)
}

/// Augments `F` with the supports of all members of `D`, where `D` must be an
/// `F`-ball of some radius `r ≥ 1` centered at 0. The saturated family
/// realizes `D` as its ball of radius 1.
pub fn saturate_covering(f: &CoveringFamily, d: &Subset) -> Result<CoveringFamily, CoveringError> {
    assert_eq!(f.n(), d.dim(), "saturation across dimensions");
    let table = f.f_weight_table();
    let radius = d.masks().iter().map(|&m| table.value(m)).max().unwrap_or(0);
    if radius < 1 {
        return Err(CoveringError::NotAFamilyBall);
    }
    let zero = Vector::zero(d.dim()).expect("positive dimension");
    if table.ball(&zero, radius).members != *d {
        return Err(CoveringError::NotAFamilyBall);
    }
    let masks = f
        .sets
        .iter()
        .copied()
        .chain(d.masks().iter().filter(|&&m| m != 0).map(|&m| m as u32));
    CoveringFamily::from_masks(f.n(), masks)
}

/// Recognizes `D` as a radius-1 ball of a combinatorial metric. Succeeds
/// exactly when `D` contains 0 and every basis vector and is support-closed;
/// the family is then the set of maximal supports of `D`, and the
/// reconstruction `D = B_{d_F}(0, 1)` is verified before returning.
pub fn recognize_radius1_covering(d: &Subset) -> Option<CoveringFamily> {
    if !d.contains_zero() || d.dim() > MAX_COVERING_DIM {
        return None;
    }
    let n = d.dim();
    for i in 0..n {
        if !d.contains_mask(1 << i) {
            return None;
        }
    }
    let supports: Vec<u32> = d
        .masks()
        .iter()
        .filter(|&&m| m != 0)
        .map(|&m| m as u32)
        .collect();
    let maximal: Vec<u32> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && s & !t == 0))
        .collect();
    let family = CoveringFamily::from_masks(n, maximal).ok()?;
    let zero = Vector::zero(n).expect("positive dimension");
    (family.f_weight_table().ball(&zero, 1).members == *d).then_some(family)
}
