//! Explicit weight tables: the universal representation of a TS-metric.
//!
//! A weight `ω` on `F_2^n` satisfies `ω(0) = 0`, `ω(x) > 0` for `x ≠ 0`, and
//! the triangle inequality `ω(x + y) ≤ ω(x) + ω(y)`; it induces the
//! translation-invariant metric `d(x, y) = ω(x - y)`. The metric additionally
//! *respects support* when `supp(x) ⊆ supp(y)` implies `ω(x) ≤ ω(y)`.
//! A table over all `2^n` vectors can express any such metric exactly, which
//! keeps every check in this module a finite, integer-exact computation.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::hypercube::{Subset, Vector};

/// Largest dimension for which a full table (2^n entries) is kept.
pub const MAX_TABLE_DIM: usize = 16;

/// Largest dimension for which a distance matrix (2^n × 2^n) is materialized.
pub const MAX_DENSE_MATRIX_DIM: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("dimension {0} exceeds the table bound of {max}", max = MAX_TABLE_DIM)]
    DimensionTooLarge(usize),
    #[error("table has {got} entries, expected 2^{dim}")]
    WrongLength { got: usize, dim: usize },
    #[error("input weight is not a valid TS-weight: {0}")]
    InvalidInputWeight(Violation),
    #[error("extension target {target} is smaller than the source dimension {src}")]
    ShrinkingExtension { target: usize, src: usize },
    #[error("the set is not support-closed: {witness} is missing")]
    NotSupportClosed { witness: Vector },
    #[error("0 must belong to the ball")]
    ZeroMissing,
    #[error("partial assignment does not cover exactly the given set")]
    PartialDomainMismatch,
    #[error("partial value {value} at {vector} exceeds the radius {radius}")]
    ValueExceedsRadius {
        vector: Vector,
        value: u32,
        radius: u32,
    },
    #[error("partial assignment violates an axiom on the set: {0}")]
    PartialViolation(Violation),
    #[error("partial values {x} and {y} sum below the exterior level {level}")]
    BoundaryTooLow { x: Vector, y: Vector, level: u32 },
}

/// An explicit weight function on all of `F_2^n`, `n ≤ 16`.
///
/// Construction only checks the shape; use [`WeightTable::validate`] to check
/// the weight axioms and the support condition, which reports violations
/// instead of failing.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightTable {
    dim: u8,
    values: Vec<u32>,
}

impl WeightTable {
    pub fn from_values(dim: usize, values: Vec<u32>) -> Result<Self, WeightError> {
        if dim == 0 || dim > MAX_TABLE_DIM {
            return Err(WeightError::DimensionTooLarge(dim));
        }
        if values.len() != 1 << dim {
            return Err(WeightError::WrongLength {
                got: values.len(),
                dim,
            });
        }
        Ok(WeightTable {
            dim: dim as u8,
            values,
        })
    }

    /// The Hamming weight table on `F_2^n`.
    pub fn hamming(dim: usize) -> Result<Self, WeightError> {
        if dim == 0 || dim > MAX_TABLE_DIM {
            return Err(WeightError::DimensionTooLarge(dim));
        }
        Ok(WeightTable {
            dim: dim as u8,
            values: (0..1u64 << dim).map(|m| m.count_ones()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, mask: u64) -> u32 {
        self.values[mask as usize]
    }

    pub fn value_of(&self, v: &Vector) -> u32 {
        assert_eq!(v.dim(), self.dim(), "weight lookup across dimensions");
        self.values[v.index()]
    }

    pub fn max_value(&self) -> u32 {
        *self.values.iter().max().expect("table is nonempty")
    }

    /// Checks the weight axioms and the support condition, reporting each
    /// violated axiom with a deterministic witness pair. Never fails: an
    /// arbitrary table is a legitimate input and the report is the result.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let size = 1u64 << n;
        let mut violations = Vec::new();

        let positivity = if self.values[0] != 0 {
            Some((0, 0))
        } else {
            (1..size)
                .find(|&v| self.values[v as usize] == 0)
                .map(|v| (v, v))
        };
        if let Some((x, y)) = positivity {
            violations.push(Violation::new(Axiom::Positivity, x, y, n));
        }

        'triangle: for x in 0..size {
            for y in x..size {
                if self.values[(x ^ y) as usize] > self.values[x as usize] + self.values[y as usize]
                {
                    violations.push(Violation::new(Axiom::Triangle, x, y, n));
                    break 'triangle;
                }
            }
        }

        'support: for y in 0..size {
            // submasks of y, ascending
            let mut x = 0u64;
            loop {
                if x != y && self.values[x as usize] > self.values[y as usize] {
                    violations.push(Violation::new(Axiom::Support, x, y, n));
                    break 'support;
                }
                x = x.wrapping_sub(y) & y;
                if x == 0 {
                    break;
                }
            }
        }

        ValidationReport { violations }
    }

    /// The closed metric ball `B_d(center, r) = { y : d(center, y) ≤ r }`,
    /// enumerated exactly over all `2^n` vectors.
    pub fn ball(&self, center: &Vector, radius: u32) -> Ball {
        assert_eq!(center.dim(), self.dim(), "ball center across dimensions");
        let c = center.bits();
        let members = (0..1u64 << self.dim()).filter(|&m| self.values[(m ^ c) as usize] <= radius);
        Ball {
            center: *center,
            radius,
            members: Subset::from_masks(self.dim(), members).expect("masks in range"),
        }
    }
}

impl fmt::Debug for WeightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightTable(n={}, values={:?})", self.dim, self.values)
    }
}

/// A metric ball with its exact member set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Vector,
    pub radius: u32,
    pub members: Subset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Positivity,
    Triangle,
    Support,
}

impl Axiom {
    pub fn as_str(&self) -> &'static str {
        match self {
            Axiom::Positivity => "positivity",
            Axiom::Triangle => "triangle",
            Axiom::Support => "support",
        }
    }
}

/// One violated axiom together with a witness pair of vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (Vector, Vector),
}

impl Violation {
    fn new(axiom: Axiom, x: u64, y: u64, dim: usize) -> Self {
        Violation {
            axiom,
            witness: (
                Vector::new(x, dim).expect("witness in range"),
                Vector::new(y, dim).expect("witness in range"),
            ),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at ({}, {})",
            self.axiom.as_str(),
            self.witness.0,
            self.witness.1
        )
    }
}

/// Result of [`WeightTable::validate`]: empty iff the table is a TS-weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Decoding equivalence of two translation-invariant metrics: the induced
/// strict order on weights agrees, `ω_1(a) < ω_1(b) ⟺ ω_2(a) < ω_2(b)` for
/// all vectors. For translation-invariant metrics this is exactly the
/// condition that both give identical minimum-distance decoding, since every
/// distance comparison reduces to a weight comparison.
pub fn decoding_equivalent(w1: &WeightTable, w2: &WeightTable) -> bool {
    assert_eq!(w1.dim(), w2.dim(), "equivalence across dimensions");
    let mut pairs: Vec<(u32, u32)> = w1
        .values
        .iter()
        .copied()
        .zip(w2.values.iter().copied())
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    // the value map must be a well-defined, strictly increasing bijection on
    // the realized values in both directions
    pairs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
}

/// The distance matrix `m[x][y] = d(x, y)` of a translation-invariant metric.
///
/// The matrix is symmetric and row-generated by translation
/// (`m[x][y] = m[x ⊕ y][0]`) by construction. Dense storage is only used for
/// `n ≤ 8`; larger dimensions answer entry queries from the weight directly.
pub struct DistanceMatrix {
    weight: WeightTable,
    dense: Option<Vec<u32>>,
}

impl DistanceMatrix {
    pub fn from_weight(weight: &WeightTable) -> DistanceMatrix {
        let n = weight.dim();
        let dense = (n <= MAX_DENSE_MATRIX_DIM).then(|| {
            let size = 1usize << n;
            let mut m = vec![0u32; size * size];
            for x in 0..size {
                for y in 0..size {
                    m[x * size + y] = weight.values[x ^ y];
                }
            }
            m
        });
        DistanceMatrix {
            weight: weight.clone(),
            dense,
        }
    }

    /// Number of rows, `N = 2^n`.
    pub fn order(&self) -> usize {
        1 << self.weight.dim()
    }

    pub fn entry(&self, x: u64, y: u64) -> u32 {
        match &self.dense {
            Some(m) => m[x as usize * self.order() + y as usize],
            None => self.weight.value(x ^ y),
        }
    }

    pub fn is_dense(&self) -> bool {
        self.dense.is_some()
    }
}

/// Completes a partial weight prescribed on a support-closed set `D ∋ 0` to a
/// full TS-weight whose radius-`r` ball at 0 is exactly `D`, by assigning the
/// flat level `r + 1` outside `D`.
///
/// The partial values must be consistent with *some* TS-weight realizing `D`
/// as its radius-`r` ball: zero exactly at 0, at most `r` everywhere,
/// support-monotone and triangle-consistent on `D`, and for members `x, y`
/// whose sum leaves `D` the sum of their values must reach `r + 1` (otherwise
/// the flat exterior would undercut the triangle inequality).
pub fn complete_ball_to_ts_weight(
    d: &Subset,
    partial: &BTreeMap<Vector, u32>,
    radius: u32,
) -> Result<WeightTable, WeightError> {
    let n = d.dim();
    if n > MAX_TABLE_DIM {
        return Err(WeightError::DimensionTooLarge(n));
    }
    if !d.contains_zero() {
        return Err(WeightError::ZeroMissing);
    }
    if let Some(witness) =
        crate::perfect::support_closure_witness(d).map_err(|_| WeightError::ZeroMissing)?
    {
        return Err(WeightError::NotSupportClosed { witness });
    }
    if partial.len() != d.len() || !partial.keys().all(|v| v.dim() == n && d.contains(v)) {
        return Err(WeightError::PartialDomainMismatch);
    }

    let value = |mask: u64| -> u32 {
        let v = Vector::new(mask, n).expect("mask in range");
        *partial.get(&v).expect("domain checked")
    };

    for (v, &val) in partial {
        if (val == 0) != v.is_zero() {
            return Err(WeightError::PartialViolation(Violation::new(
                Axiom::Positivity,
                v.bits(),
                v.bits(),
                n,
            )));
        }
        if val > radius {
            return Err(WeightError::ValueExceedsRadius {
                vector: *v,
                value: val,
                radius,
            });
        }
    }
    // support monotonicity within D
    for &y in d.masks() {
        let mut x = 0u64;
        loop {
            x = x.wrapping_sub(y) & y;
            if x == y {
                break;
            }
            if value(x) > value(y) {
                return Err(WeightError::PartialViolation(Violation::new(
                    Axiom::Support,
                    x,
                    y,
                    n,
                )));
            }
        }
    }
    // triangle within D, including the boundary condition against the flat
    // exterior level r + 1
    for (i, &x) in d.masks().iter().enumerate() {
        for &y in &d.masks()[i..] {
            let z = x ^ y;
            if d.contains_mask(z) {
                if value(z) > value(x) + value(y) {
                    return Err(WeightError::PartialViolation(Violation::new(
                        Axiom::Triangle,
                        x,
                        y,
                        n,
                    )));
                }
            } else if value(x) + value(y) < radius + 1 {
                return Err(WeightError::BoundaryTooLow {
                    x: Vector::new(x, n).expect("in range"),
                    y: Vector::new(y, n).expect("in range"),
                    level: radius + 1,
                });
            }
        }
    }

    let values = (0..1u64 << n)
        .map(|m| {
            if d.contains_mask(m) {
                value(m)
            } else {
                radius + 1
            }
        })
        .collect();
    Ok(WeightTable {
        dim: n as u8,
        values,
    })
}

fn require_valid(w: &WeightTable) -> Result<(), WeightError> {
    let report = w.validate();
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(WeightError::InvalidInputWeight(*v)),
    }
}

/// The weight of the maximum metric on `F_2^(n+m)`:
/// `ω(x_1 | x_2) = max(ω_1(x_1), ω_2(x_2))`. Always a TS-weight when the
/// inputs are, and its radius-`r` ball is the concatenation of the two
/// radius-`r` balls for every `r`.
pub fn d_max_weight(w1: &WeightTable, w2: &WeightTable) -> Result<WeightTable, WeightError> {
    require_valid(w1)?;
    require_valid(w2)?;
    let (n, m) = (w1.dim(), w2.dim());
    if n + m > MAX_TABLE_DIM {
        return Err(WeightError::DimensionTooLarge(n + m));
    }
    let values = (0..1u64 << (n + m))
        .map(|x| w1.value(x & ((1 << n) - 1)).max(w2.value(x >> n)))
        .collect();
    Ok(WeightTable {
        dim: (n + m) as u8,
        values,
    })
}

/// The `(r, s)`-sum of two weights on `F_2^(n+m)`: the componentwise sum of
/// values inside `D = B_1(0, r) | B_2(0, s)` and the flat level `r + s + 1`
/// outside. Its radius-`(r+s)` ball at 0 is exactly `D` and it respects
/// support, but the flat wall can undercut the triangle inequality when two
/// members of `D` with small values sum to a point outside `D`; run
/// [`WeightTable::validate`] on the result when full metric axioms matter.
pub fn conditional_sum_weight(
    w1: &WeightTable,
    r: u32,
    w2: &WeightTable,
    s: u32,
) -> Result<WeightTable, WeightError> {
    require_valid(w1)?;
    require_valid(w2)?;
    let (n, m) = (w1.dim(), w2.dim());
    if n + m > MAX_TABLE_DIM {
        return Err(WeightError::DimensionTooLarge(n + m));
    }
    let values = (0..1u64 << (n + m))
        .map(|x| {
            let a = w1.value(x & ((1 << n) - 1));
            let b = w2.value(x >> n);
            if a <= r && b <= s {
                a + b
            } else {
                r + s + 1
            }
        })
        .collect();
    Ok(WeightTable {
        dim: (n + m) as u8,
        values,
    })
}

/// Extends a weight from `F_2^s` to `F_2^n`, `n ≥ s`: vectors supported in
/// the first `s` coordinates keep their value, everything else gets the flat
/// level `M + 1` where `M` is the largest value inside the reference ball
/// `B(0, reference_radius)`.
///
/// The radius-`r` ball of the result is `B(0, r) | {0}` for every
/// `r ≤ M`. The result is a valid TS-weight exactly when `M + 1` dominates
/// every interior value; a reference radius below the maximum of the source
/// weight leaves interior values sticking out above the flat level, which
/// breaks support monotonicity (see [`WeightTable::validate`]).
pub fn extend_weight(
    w: &WeightTable,
    reference_radius: u32,
    n: usize,
) -> Result<WeightTable, WeightError> {
    require_valid(w)?;
    let s = w.dim();
    if n < s {
        return Err(WeightError::ShrinkingExtension { target: n, src: s });
    }
    if n > MAX_TABLE_DIM {
        return Err(WeightError::DimensionTooLarge(n));
    }
    let level = w
        .values
        .iter()
        .filter(|&&v| v <= reference_radius)
        .max()
        .copied()
        .unwrap_or(0)
        + 1;
    let low = (1u64 << s) - 1;
    let values = (0..1u64 << n)
        .map(|x| if x & !low == 0 { w.value(x) } else { level })
        .collect();
    Ok(WeightTable {
        dim: n as u8,
        values,
    })
}
