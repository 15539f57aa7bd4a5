//! Partially ordered sets on `[n]`, order ideals, and P-weights.
//!
//! The P-weight of a vector is the size of the order ideal generated by its
//! support, `ω_P(x) = |⟨supp(x)⟩|`; it always respects support and induces
//! the poset metric `d_P(x, y) = ω_P(x - y)`.
//!
//! Posets are stored as fully closed relations (per-element down-sets as
//! bitmasks over `[n]`, `n ≤ 16`), since ideal queries dominate; covering
//! pairs for the Hasse presentation are derived on demand.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::hypercube::{Subset, Vector};
use crate::weights::WeightTable;

/// Poset ground sets are capped so a coordinate set fits a `u16` and the
/// induced weight table stays materializable.
pub const MAX_POSET_DIM: usize = 16;

/// Exhaustive poset search is bounded to keep the labeled-poset space
/// enumerable in well under a minute (130 023 posets on six elements).
pub const MAX_SEARCH_DIM: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("ground set size {0} exceeds the supported maximum of {max}", max = MAX_POSET_DIM)]
    GroundSetTooLarge(usize),
    #[error("ground set must be nonempty")]
    GroundSetEmpty,
    #[error("element {0} is outside 1..={1}")]
    ElementOutOfRange(usize, usize),
    #[error("relations close into a cycle through {0} and {1}")]
    CycleDetected(usize, usize),
    #[error("dimension {0} exceeds the exhaustive search bound of {max}", max = MAX_SEARCH_DIM)]
    SearchDimTooLarge(usize),
    #[error("the searched set must contain 0")]
    ZeroMissing,
}

/// A partial order on `[n]`, reflexively and transitively closed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: u8,
    /// `down[b]` = bitmask of `{ a : a ⪯ b }` (0-based bits).
    down: Vec<u16>,
}

impl Poset {
    /// The closure of the given relations `a ⪯ b` (1-based). Fails if the
    /// closure violates antisymmetry, i.e. the relations contain a cycle.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::GroundSetEmpty);
        }
        if n > MAX_POSET_DIM {
            return Err(PosetError::GroundSetTooLarge(n));
        }
        let mut down: Vec<u16> = (0..n).map(|i| 1 << i).collect();
        for &(a, b) in relations {
            if a == 0 || a > n {
                return Err(PosetError::ElementOutOfRange(a, n));
            }
            if b == 0 || b > n {
                return Err(PosetError::ElementOutOfRange(b, n));
            }
            down[b - 1] |= 1 << (a - 1);
        }
        // transitive closure: down[b] ⊇ down[a] whenever a ∈ down[b]
        loop {
            let mut changed = false;
            for b in 0..n {
                let mut acc = down[b];
                let mut todo = down[b];
                while todo != 0 {
                    let a = todo.trailing_zeros() as usize;
                    todo &= todo - 1;
                    acc |= down[a];
                }
                if acc != down[b] {
                    down[b] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if down[b] >> a & 1 == 1 && down[a] >> b & 1 == 1 {
                    return Err(PosetError::CycleDetected(a + 1, b + 1));
                }
            }
        }
        Ok(Poset { n: n as u8, down })
    }

    /// The antichain: only trivial relations.
    pub fn antichain(n: usize) -> Result<Self, PosetError> {
        Poset::from_relations(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `a ⪯ b` (1-based).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        assert!(a >= 1 && a <= self.n() && b >= 1 && b <= self.n());
        self.down[b - 1] >> (a - 1) & 1 == 1
    }

    /// The ideal generated by a set of coordinates, as a bitmask.
    pub fn ideal_mask(&self, generators: u16) -> u16 {
        let mut acc = 0u16;
        let mut todo = generators;
        while todo != 0 {
            let b = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            acc |= self.down[b];
        }
        acc
    }

    /// The ideal generated by a set of 1-based coordinates, ascending.
    pub fn ideal(&self, generators: &[usize]) -> Vec<usize> {
        let mut mask = 0u16;
        for &g in generators {
            assert!(g >= 1 && g <= self.n(), "generator outside the ground set");
            mask |= 1 << (g - 1);
        }
        let closed = self.ideal_mask(mask);
        (1..=self.n())
            .filter(|&i| closed >> (i - 1) & 1 == 1)
            .collect()
    }

    /// `ω_P(x) = |⟨supp(x)⟩|`.
    pub fn p_weight(&self, x: &Vector) -> u32 {
        assert_eq!(x.dim(), self.n(), "p-weight across dimensions");
        self.ideal_mask(x.bits() as u16).count_ones()
    }

    /// The full table of `ω_P` over `F_2^n`; always a valid TS-weight.
    pub fn p_weight_table(&self) -> WeightTable {
        let n = self.n();
        let values = (0..1u64 << n)
            .map(|m| self.ideal_mask(m as u16).count_ones())
            .collect();
        WeightTable::from_values(n, values).expect("poset dimensions fit a table")
    }

    /// The covering pairs `(a, b)`: `a ⪯ b`, `a ≠ b`, nothing strictly
    /// between. These are the Hasse-diagram edges.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut pairs = Vec::new();
        for b in 1..=n {
            for a in 1..=n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let strictly_between =
                    (1..=n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !strictly_between {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// Maximal elements of the whole poset.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&a| (1..=self.n()).all(|b| b == a || !self.leq(a, b)))
            .collect()
    }
}

/// Visits every labeled poset on `[n]` exactly once, in a fixed order.
///
/// Enumeration is a DFS over the `n(n-1)` ordered pairs: each pair is decided
/// in a fixed sequence, and deciding a pair true immediately adds its
/// transitive consequences. A branch is abandoned as soon as closure would
/// overturn an earlier false decision or create a cycle, so every leaf is a
/// distinct transitively-closed antisymmetric relation.
pub fn for_each_poset<F>(n: usize, mut f: F) -> Result<(), PosetError>
where
    F: FnMut(&Poset) -> ControlFlow<()>,
{
    if n == 0 {
        return Err(PosetError::GroundSetEmpty);
    }
    if n > MAX_POSET_DIM {
        return Err(PosetError::GroundSetTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut state = EnumState {
        n,
        down: (0..n).map(|i| 1u16 << i).collect(),
        up: (0..n).map(|i| 1u16 << i).collect(),
        forbidden: vec![false; n * n],
        pairs,
        f: &mut f,
    };
    let _ = state.recurse(0);
    Ok(())
}

struct EnumState<'a, F> {
    n: usize,
    down: Vec<u16>,
    up: Vec<u16>,
    forbidden: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    f: &'a mut F,
}

impl<F: FnMut(&Poset) -> ControlFlow<()>> EnumState<'_, F> {
    fn has(&self, a: usize, b: usize) -> bool {
        self.down[b] >> a & 1 == 1
    }

    fn recurse(&mut self, idx: usize) -> ControlFlow<()> {
        if idx == self.pairs.len() {
            let poset = Poset {
                n: self.n as u8,
                down: self.down.clone(),
            };
            return (self.f)(&poset);
        }
        let (a, b) = self.pairs[idx];
        if self.has(a, b) {
            // already forced by closure of earlier decisions
            return self.recurse(idx + 1);
        }

        // branch 1: a ⪯ b stays false
        self.forbidden[a * self.n + b] = true;
        self.recurse(idx + 1)?;
        self.forbidden[a * self.n + b] = false;

        // branch 2: set a ⪯ b and close transitively
        let mut added: Vec<(usize, usize)> = Vec::new();
        let mut ok = true;
        let lowers = self.down[a];
        let uppers = self.up[b];
        'closure: for x in 0..self.n {
            if lowers >> x & 1 == 0 {
                continue;
            }
            for y in 0..self.n {
                if uppers >> y & 1 == 0 || self.has(x, y) {
                    continue;
                }
                // antisymmetry: y ⪯ x already present means a cycle
                if x == y || self.has(y, x) || self.forbidden[x * self.n + y] {
                    ok = false;
                    break 'closure;
                }
                added.push((x, y));
            }
        }
        if ok {
            for &(x, y) in &added {
                self.down[y] |= 1 << x;
                self.up[x] |= 1 << y;
            }
            let result = self.recurse(idx + 1);
            for &(x, y) in &added {
                self.down[y] &= !(1 << x);
                self.up[x] &= !(1 << y);
            }
            result?;
        }
        ControlFlow::Continue(())
    }
}

/// All labeled posets on `[n]`, in enumeration order.
pub fn all_posets(n: usize) -> Result<Vec<Poset>, PosetError> {
    let mut out = Vec::new();
    for_each_poset(n, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The radius at which a given poset realizes `D` as its ball at 0, if any.
///
/// For a fixed poset the candidate radius is forced: it must be at least the
/// largest P-weight inside `D` and strictly below the smallest P-weight
/// outside, so the check reduces to comparing those two numbers. Returns the
/// smallest realizing radius.
pub fn poset_ball_radius(p: &Poset, d: &Subset) -> Option<u32> {
    assert_eq!(p.n(), d.dim(), "poset search across dimensions");
    let mut max_inside = 0u32;
    let mut min_outside = u32::MAX;
    for m in 0..1u64 << p.n() {
        let w = p.ideal_mask(m as u16).count_ones();
        if d.contains_mask(m) {
            max_inside = max_inside.max(w);
        } else {
            min_outside = min_outside.min(w);
        }
    }
    let r = max_inside.max(1); // balls here have positive radius
    (r < min_outside).then_some(r)
}

/// Searches all labeled posets on `[n]` (`n ≤ 6`) for one realizing `D` as a
/// ball centered at 0, returning the first hit in enumeration order together
/// with its radius. Positive answers are re-verified by exact ball
/// reconstruction before being returned.
pub fn find_poset_ball(d: &Subset) -> Result<Option<(Poset, u32)>, PosetError> {
    let n = d.dim();
    if n > MAX_SEARCH_DIM {
        return Err(PosetError::SearchDimTooLarge(n));
    }
    if !d.contains_zero() {
        return Err(PosetError::ZeroMissing);
    }
    let mut found = None;
    for_each_poset(n, |p| {
        if let Some(r) = poset_ball_radius(p, d) {
            let ball = p.p_weight_table().ball(&Vector::zero(n).expect("n ≥ 1"), r);
            if &ball.members == d {
                found = Some((p.clone(), r));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}
