//! Core arithmetic and geometry of `F_2^n`.
//!
//! Vectors are stored as bit masks in a single machine word: coordinate
//! `i ∈ [n]` maps to bit position `i - 1`, so the integer value of a mask
//! equals `Σ x_i 2^(i-1)` and can index a weight table directly. The text
//! form is a string of `'0'`/`'1'` of length `n` whose *leftmost* character
//! is coordinate 1, so `"1100"` in `F_2^4` is `e_1 + e_2`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported dimension for a single vector.
pub const MAX_DIM: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypercubeError {
    #[error("dimension {0} exceeds the supported maximum of {max}", max = MAX_DIM)]
    DimensionTooLarge(usize),
    #[error("dimension must be positive")]
    DimensionZero,
    #[error("mask {mask:#x} has bits outside coordinates 1..={dim}")]
    BitsOutOfRange { mask: u64, dim: usize },
    #[error("coordinate {0} is outside 1..={1}")]
    CoordinateOutOfRange(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("bitstring {0:?} is not a string of '0'/'1'")]
    BadBitstring(String),
    #[error("consecutive path points at index {0} are not at Hamming distance 1")]
    InvalidStep(usize),
    #[error("a path needs at least one point")]
    EmptyPath,
}

/// An element of `F_2^n`, `n ≤ 63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    dim: u8,
    bits: u64,
}

impl Vector {
    pub fn new(bits: u64, dim: usize) -> Result<Self, HypercubeError> {
        check_dim(dim)?;
        if dim < 64 && bits >> dim != 0 {
            return Err(HypercubeError::BitsOutOfRange { mask: bits, dim });
        }
        Ok(Vector {
            dim: dim as u8,
            bits,
        })
    }

    pub fn zero(dim: usize) -> Result<Self, HypercubeError> {
        Vector::new(0, dim)
    }

    /// The standard basis vector `e_i` (1-based coordinate).
    pub fn basis(i: usize, dim: usize) -> Result<Self, HypercubeError> {
        check_dim(dim)?;
        if i == 0 || i > dim {
            return Err(HypercubeError::CoordinateOutOfRange(i, dim));
        }
        Vector::new(1u64 << (i - 1), dim)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The integer index `Σ x_i 2^(i-1)`, usable directly in a weight table.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Hamming weight `ω_H(x) = |supp(x)|`.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Support as 1-based coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.dim())
            .filter(|&i| self.bits >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Bitwise XOR; addition in `F_2^n`. Panics on mismatched dimensions.
    pub fn xor(&self, other: &Vector) -> Vector {
        assert_eq!(
            self.dim, other.dim,
            "xor of vectors with different dimensions"
        );
        Vector {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        }
    }

    /// `supp(self) ⊆ supp(other)`. Panics on mismatched dimensions.
    pub fn support_subseteq(&self, other: &Vector) -> bool {
        assert_eq!(self.dim, other.dim, "support comparison across dimensions");
        self.bits & !other.bits == 0
    }

    /// Hamming distance to `other`.
    pub fn hamming_distance(&self, other: &Vector) -> u32 {
        assert_eq!(self.dim, other.dim, "distance across dimensions");
        (self.bits ^ other.bits).count_ones()
    }

    /// Concatenation `self | other` in `F_2^(n+m)`.
    pub fn concat(&self, other: &Vector) -> Result<Vector, HypercubeError> {
        let dim = self.dim() + other.dim();
        check_dim(dim)?;
        Vector::new(self.bits | other.bits << self.dim(), dim)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({})", self)
    }
}

impl FromStr for Vector {
    type Err = HypercubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let dim = s.len();
        check_dim(dim)?;
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return Err(HypercubeError::BadBitstring(s.to_string())),
            }
        }
        Vector::new(bits, dim)
    }
}

fn check_dim(dim: usize) -> Result<(), HypercubeError> {
    if dim == 0 {
        Err(HypercubeError::DimensionZero)
    } else if dim > MAX_DIM {
        Err(HypercubeError::DimensionTooLarge(dim))
    } else {
        Ok(())
    }
}

/// A finite subset of `F_2^n` with set semantics.
///
/// Members are kept sorted and duplicate-free, so equality is set equality
/// and membership queries are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    dim: u8,
    members: Vec<u64>,
}

impl Subset {
    pub fn new(
        dim: usize,
        vectors: impl IntoIterator<Item = Vector>,
    ) -> Result<Self, HypercubeError> {
        check_dim(dim)?;
        let mut members = Vec::new();
        for v in vectors {
            if v.dim() != dim {
                return Err(HypercubeError::DimensionMismatch(v.dim(), dim));
            }
            members.push(v.bits());
        }
        members.sort_unstable();
        members.dedup();
        Ok(Subset {
            dim: dim as u8,
            members,
        })
    }

    /// Builds a subset directly from masks, validating the bit range.
    pub fn from_masks(
        dim: usize,
        masks: impl IntoIterator<Item = u64>,
    ) -> Result<Self, HypercubeError> {
        check_dim(dim)?;
        let mut members = Vec::new();
        for m in masks {
            if dim < 64 && m >> dim != 0 {
                return Err(HypercubeError::BitsOutOfRange { mask: m, dim });
            }
            members.push(m);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Subset {
            dim: dim as u8,
            members,
        })
    }

    pub fn empty(dim: usize) -> Result<Self, HypercubeError> {
        Subset::from_masks(dim, [])
    }

    /// The full cube `F_2^n` (requires `n ≤ 16` to stay desk-scale).
    pub fn full(dim: usize) -> Result<Self, HypercubeError> {
        check_dim(dim)?;
        if dim > 16 {
            return Err(HypercubeError::DimensionTooLarge(dim));
        }
        Ok(Subset {
            dim: dim as u8,
            members: (0..1u64 << dim).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.dim() && self.contains_mask(v.bits())
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    /// Member masks in ascending order.
    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Vector> + '_ {
        let dim = self.dim;
        self.members.iter().map(move |&bits| Vector { dim, bits })
    }

    pub fn contains_zero(&self) -> bool {
        self.members.first() == Some(&0)
    }

    /// Translate by `t`: `{ t + x : x ∈ self }`.
    pub fn translate(&self, t: &Vector) -> Subset {
        assert_eq!(t.dim(), self.dim(), "translate across dimensions");
        let mut members: Vec<u64> = self.members.iter().map(|m| m ^ t.bits()).collect();
        members.sort_unstable();
        Subset {
            dim: self.dim,
            members,
        }
    }

    /// Dimension of the GF(2) span of the members, by elimination over masks.
    pub fn gf2_rank(&self) -> usize {
        let mut basis: Vec<u64> = Vec::new();
        for &m in &self.members {
            let mut v = m;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis.len()
    }

    /// Concatenation `self | other` as subsets of `F_2^(n+m)`.
    pub fn concat(&self, other: &Subset) -> Result<Subset, HypercubeError> {
        let dim = self.dim() + other.dim();
        check_dim(dim)?;
        let mut members = Vec::with_capacity(self.len() * other.len());
        for &b in &other.members {
            for &a in &self.members {
                members.push(a | b << self.dim());
            }
        }
        members.sort_unstable();
        Ok(Subset {
            dim: dim as u8,
            members,
        })
    }

    /// True iff for every pair `x, y` in the set there is a geodesic path
    /// between them that stays inside the set.
    ///
    /// Geodesics in the Hamming cube flip each differing coordinate exactly
    /// once, so the search is a reachability check inside the subcube spanned
    /// by `x ⊕ y`, stepping only toward the target.
    pub fn is_polyhedromino(&self) -> Result<bool, HypercubeError> {
        if self.is_empty() {
            return Err(HypercubeError::EmptySet);
        }
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                if !self.geodesic_reachable(x, y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn geodesic_reachable(&self, x: u64, y: u64) -> bool {
        if x == y {
            return true;
        }
        let mut frontier = vec![x];
        let mut visited = vec![x];
        while let Some(v) = frontier.pop() {
            let mut todo = v ^ y;
            while todo != 0 {
                let bit = todo & todo.wrapping_neg();
                todo ^= bit;
                let next = v ^ bit;
                if next == y {
                    return true;
                }
                if self.contains_mask(next) && !visited.contains(&next) {
                    visited.push(next);
                    frontier.push(next);
                }
            }
        }
        false
    }

    /// True iff every geodesic between two members stays inside the set;
    /// equivalently, `interval(x, y) ⊆ self` for all members `x, y`.
    pub fn is_convex_polyhedromino(&self) -> Result<bool, HypercubeError> {
        if self.is_empty() {
            return Err(HypercubeError::EmptySet);
        }
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                let diff = x ^ y;
                // every point of the subcube x ⊕ (submask of diff)
                let mut sub = diff;
                loop {
                    if !self.contains_mask(x ^ sub) {
                        return Ok(false);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & diff;
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_set();
        for v in self.iter() {
            list.entry(&format_args!("{}", v));
        }
        list.finish()
    }
}

/// The metric interval between `x` and `y`: all points lying on some geodesic
/// from `x` to `y`, i.e. the subcube spanned by the differing coordinates.
/// Has exactly `2^d_H(x,y)` elements.
pub fn interval(x: &Vector, y: &Vector) -> Subset {
    assert_eq!(x.dim(), y.dim(), "interval across dimensions");
    let diff = x.bits() ^ y.bits();
    let mut members = Vec::with_capacity(1 << diff.count_ones());
    let mut sub = diff;
    loop {
        members.push(x.bits() ^ sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & diff;
    }
    members.sort_unstable();
    Subset {
        dim: x.dim() as u8,
        members,
    }
}

/// A path in `F_2^n`: consecutive points at Hamming distance exactly 1.
/// Validated on construction; an invalid step sequence is an error, not a
/// silent repair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    dim: u8,
    points: Vec<u64>,
}

impl Path {
    pub fn new(points: Vec<Vector>) -> Result<Self, HypercubeError> {
        let first = points.first().ok_or(HypercubeError::EmptyPath)?;
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(HypercubeError::DimensionMismatch(p.dim(), dim));
            }
        }
        for (i, pair) in points.windows(2).enumerate() {
            if pair[0].hamming_distance(&pair[1]) != 1 {
                return Err(HypercubeError::InvalidStep(i));
            }
        }
        Ok(Path {
            dim: dim as u8,
            points: points.iter().map(Vector::bits).collect(),
        })
    }

    /// Number of steps, `|γ|` = number of points minus one.
    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // a path always has at least one point
    }

    pub fn points(&self) -> impl Iterator<Item = Vector> + '_ {
        let dim = self.dim;
        self.points.iter().map(move |&bits| Vector { dim, bits })
    }

    /// A path is geodesic iff its length equals the Hamming distance between
    /// its endpoints.
    pub fn is_geodesic(&self) -> bool {
        let first = *self.points.first().expect("nonempty");
        let last = *self.points.last().expect("nonempty");
        (first ^ last).count_ones() as usize == self.len()
    }
}
