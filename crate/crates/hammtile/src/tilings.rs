//! Tilings of `F_2^n`: verification under both standard definitions,
//! complement search by exact-cover backtracking, coordinate-permutation
//! equivalence and canonical forms, the `D_n(x)` tile family, extension, and
//! concatenation.
//!
//! A tiling is a pair `(D, C)` whose translates `c + D`, `c ∈ C`, partition
//! the space; equivalently `D + C = F_2^n` with `2D ∩ 2C = {0}`. Both
//! predicates are implemented independently and their agreement is an
//! invariant of the test suite. Tiles and codes are normalized to contain 0.

use thiserror::Error;

use crate::hypercube::{Subset, Vector};

/// Verification works on an occupancy mask of `2^n` cells.
pub const MAX_TILING_DIM: usize = 16;

/// Exact-cover complement search bound.
pub const MAX_COMPLEMENT_DIM: usize = 10;

/// Canonical forms brute-force all `n!` coordinate permutations.
pub const MAX_CANONICAL_DIM: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TilingError {
    #[error("dimension {0} exceeds the bound {1} for this operation")]
    DimensionTooLarge(usize, usize),
    #[error("tile and code live in different dimensions: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("sets must contain 0 (normalize first)")]
    NotNormalized,
    #[error("sets must be nonempty")]
    Empty,
    #[error("the pair is not a tiling")]
    NotATiling,
    #[error("d_n_tile requires ω_H(x) ≥ 2, got {0}")]
    WeightTooSmall(u32),
    #[error("coordinate {0} is outside 1..={1}")]
    CoordinateOutOfRange(usize, usize),
    #[error("image {0:?} is not a bijection of 1..={1}")]
    NotABijection(Vec<usize>, usize),
    #[error("extension target {target} is smaller than the source dimension {src}")]
    ShrinkingExtension { target: usize, src: usize },
}

/// A verified tiling `(D, C)` with `0 ∈ D` and `0 ∈ C`.
///
/// Construction translates both sets to contain 0 (tilings are invariant
/// under translating either component) and then verifies the partition
/// property, so a value of this type always is a tiling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tiling {
    tile: Subset,
    code: Subset,
}

impl Tiling {
    pub fn new(tile: &Subset, code: &Subset) -> Result<Self, TilingError> {
        if tile.dim() != code.dim() {
            return Err(TilingError::DimensionMismatch(tile.dim(), code.dim()));
        }
        if tile.is_empty() || code.is_empty() {
            return Err(TilingError::Empty);
        }
        let d0 = Vector::new(tile.masks()[0], tile.dim()).expect("member in range");
        let c0 = Vector::new(code.masks()[0], code.dim()).expect("member in range");
        let tile = tile.translate(&d0);
        let code = code.translate(&c0);
        if !is_tiling_partition(&tile, &code)? {
            return Err(TilingError::NotATiling);
        }
        Ok(Tiling { tile, code })
    }

    pub fn dim(&self) -> usize {
        self.tile.dim()
    }

    pub fn tile(&self) -> &Subset {
        &self.tile
    }

    pub fn code(&self) -> &Subset {
        &self.code
    }

    /// Rank of a tiling is the rank of its tile.
    pub fn rank(&self) -> usize {
        self.tile.gf2_rank()
    }
}

/// Occupancy mask over the `2^n` cells of the cube.
#[derive(Clone)]
struct Board {
    words: Vec<u64>,
    occupied: usize,
}

impl Board {
    fn new(cells: usize) -> Self {
        let mut words = vec![0u64; cells.div_ceil(64)];
        // padding bits beyond the last real cell are marked occupied so the
        // first-free scan never leaves the board
        let tail = cells % 64;
        if tail != 0 {
            *words.last_mut().expect("at least one word") = !0u64 << tail;
        }
        Board { words, occupied: 0 }
    }

    fn test(&self, cell: u64) -> bool {
        self.words[(cell >> 6) as usize] >> (cell & 63) & 1 == 1
    }

    fn set(&mut self, cell: u64) {
        self.words[(cell >> 6) as usize] |= 1 << (cell & 63);
        self.occupied += 1;
    }

    fn clear(&mut self, cell: u64) {
        self.words[(cell >> 6) as usize] &= !(1 << (cell & 63));
        self.occupied -= 1;
    }

    fn first_free(&self) -> Option<u64> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                return Some((i as u64) << 6 | w.trailing_ones() as u64);
            }
        }
        None
    }
}

fn check_normalized(d: &Subset, c: &Subset) -> Result<usize, TilingError> {
    if d.dim() != c.dim() {
        return Err(TilingError::DimensionMismatch(d.dim(), c.dim()));
    }
    let n = d.dim();
    if n > MAX_TILING_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_TILING_DIM));
    }
    if !d.contains_zero() || !c.contains_zero() {
        return Err(TilingError::NotNormalized);
    }
    Ok(n)
}

/// Partition form: the `|C|` translates of `D` are pairwise disjoint and
/// cover the cube, checked with an occupancy mask.
pub fn is_tiling_partition(d: &Subset, c: &Subset) -> Result<bool, TilingError> {
    let n = check_normalized(d, c)?;
    let cells = 1usize << n;
    if d.len().checked_mul(c.len()) != Some(cells) {
        return Ok(false);
    }
    let mut board = Board::new(cells);
    for &cw in c.masks() {
        for &dw in d.masks() {
            let cell = cw ^ dw;
            if board.test(cell) {
                return Ok(false);
            }
            board.set(cell);
        }
    }
    Ok(board.occupied == cells)
}

/// Sumset form: `D + C = F_2^n` and `2D ∩ 2C = {0}`, where `2A = A + A`.
pub fn is_tiling_sumset(d: &Subset, c: &Subset) -> Result<bool, TilingError> {
    let n = check_normalized(d, c)?;
    let cells = 1usize << n;
    // an injective sumset forces |D|·|C| = 2^n, so other sizes can never pass
    if d.len().checked_mul(c.len()) != Some(cells) {
        return Ok(false);
    }
    let mut sumset = Board::new(cells);
    for &cw in c.masks() {
        for &dw in d.masks() {
            let cell = cw ^ dw;
            if !sumset.test(cell) {
                sumset.set(cell);
            }
        }
    }
    if sumset.occupied != cells {
        return Ok(false);
    }
    let double = |s: &Subset| {
        let mut out = Board::new(cells);
        for (i, &x) in s.masks().iter().enumerate() {
            for &y in &s.masks()[i..] {
                let cell = x ^ y;
                if !out.test(cell) {
                    out.set(cell);
                }
            }
        }
        out
    };
    let two_d = double(d);
    let two_c = double(c);
    let valid_tail = if cells.is_multiple_of(64) {
        !0u64
    } else {
        (1u64 << (cells % 64)) - 1
    };
    let last = two_d.words.len() - 1;
    let trivial = two_d
        .words
        .iter()
        .zip(two_c.words.iter())
        .enumerate()
        .all(|(i, (a, b))| {
            let mask = if i == last { valid_tail } else { !0 };
            a & b & mask == if i == 0 { 1 } else { 0 }
        });
    Ok(trivial)
}

/// The coordinate-split tiling: `D_I = { x : x_i = 0 for i ∈ I }` and
/// `C_I = { x : x_i = 0 for i ∉ I }`.
pub fn trivial_tiling(n: usize, coords: &[usize]) -> Result<Tiling, TilingError> {
    if n == 0 || n > MAX_TILING_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_TILING_DIM));
    }
    let mut mask_i = 0u64;
    for &i in coords {
        if i == 0 || i > n {
            return Err(TilingError::CoordinateOutOfRange(i, n));
        }
        mask_i |= 1 << (i - 1);
    }
    let tile = Subset::from_masks(n, (0..1u64 << n).filter(|m| m & mask_i == 0)).expect("in range");
    let code =
        Subset::from_masks(n, (0..1u64 << n).filter(|m| m & !mask_i == 0)).expect("in range");
    Tiling::new(&tile, &code)
}

/// Searches for a code `C` making `(D, C)` a tiling, by exact-cover
/// backtracking over translates: the lowest uncovered cell is always covered
/// next, trying each translate of `D` that covers it without collision.
/// Returns the first complement in deterministic search order, or `None`
/// when exhaustive backtracking proves no tiling exists (in particular, when
/// `|D|` does not divide `2^n` no tiling can exist and the search returns
/// `None` immediately).
pub fn find_complement(d: &Subset) -> Result<Option<Subset>, TilingError> {
    let mut result = None;
    complement_search(d, 1, &mut |code| {
        result = Some(code);
    })?;
    Ok(result)
}

/// Enumerates normalized complements (those containing 0) in deterministic
/// search order, stopping after `cap` finds.
pub fn enumerate_complements(d: &Subset, cap: usize) -> Result<Vec<Subset>, TilingError> {
    let mut found = Vec::new();
    complement_search(d, cap, &mut |code| found.push(code))?;
    Ok(found)
}

fn complement_search(
    d: &Subset,
    cap: usize,
    sink: &mut dyn FnMut(Subset),
) -> Result<(), TilingError> {
    let n = d.dim();
    if n > MAX_COMPLEMENT_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_COMPLEMENT_DIM));
    }
    if !d.contains_zero() {
        return Err(TilingError::NotNormalized);
    }
    let cells = 1usize << n;
    if cap == 0 || !cells.is_multiple_of(d.len()) || !(cells / d.len()).is_power_of_two() {
        // |D| must divide 2^n, so it must be a power of two
        return Ok(());
    }
    let mut board = Board::new(cells);
    let mut code: Vec<u64> = Vec::with_capacity(cells / d.len());
    let mut remaining = cap;

    // WLOG 0 ∈ C: the translate covering cell 0 can always be taken as 0 + D
    for &dw in d.masks() {
        board.set(dw);
    }
    code.push(0);
    search(d, &mut board, &mut code, &mut remaining, &mut |masks| {
        sink(Subset::from_masks(n, masks.iter().copied()).expect("in range"))
    });
    Ok(())
}

fn search(
    d: &Subset,
    board: &mut Board,
    code: &mut Vec<u64>,
    remaining: &mut usize,
    emit: &mut dyn FnMut(&[u64]),
) -> bool {
    if *remaining == 0 {
        return true;
    }
    let cell = match board.first_free() {
        None => {
            emit(code);
            *remaining -= 1;
            return *remaining == 0;
        }
        Some(cell) => cell,
    };
    for &dw in d.masks() {
        let c = cell ^ dw;
        if d.masks().iter().any(|&x| board.test(c ^ x)) {
            continue;
        }
        for &x in d.masks() {
            board.set(c ^ x);
        }
        code.push(c);
        let done = search(d, board, code, remaining, emit);
        code.pop();
        for &x in d.masks() {
            board.clear(c ^ x);
        }
        if done {
            return true;
        }
    }
    false
}

/// The tile family `D_n(x) = {0, e_1, …, e_n, x}` with `ω_H(x) ≥ 2`.
pub fn d_n_tile(n: usize, x: &Vector) -> Result<Subset, TilingError> {
    if x.dim() != n {
        return Err(TilingError::DimensionMismatch(x.dim(), n));
    }
    if n > MAX_TILING_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_TILING_DIM));
    }
    if x.weight() < 2 {
        return Err(TilingError::WeightTooSmall(x.weight()));
    }
    let masks = (0..n).map(|i| 1u64 << i).chain([0, x.bits()]);
    Ok(Subset::from_masks(n, masks).expect("in range"))
}

/// A permutation of the coordinates `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    /// `image[i]` is the 0-based image of 0-based coordinate `i`.
    image: Vec<u8>,
}

impl Permutation {
    /// From the 1-based image list: coordinate `i` maps to `image[i - 1]`.
    pub fn new(image: &[usize]) -> Result<Self, TilingError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in image {
            if v == 0 || v > n {
                return Err(TilingError::NotABijection(image.to_vec(), n));
            }
            if seen[v - 1] {
                return Err(TilingError::NotABijection(image.to_vec(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            image: image.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n as u8).collect(),
        }
    }

    /// The transposition `(a b)` on `[n]`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, TilingError> {
        let mut image: Vec<usize> = (1..=n).collect();
        if a == 0 || a > n {
            return Err(TilingError::CoordinateOutOfRange(a, n));
        }
        if b == 0 || b > n {
            return Err(TilingError::CoordinateOutOfRange(b, n));
        }
        image.swap(a - 1, b - 1);
        Permutation::new(&image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << self.image[i];
        }
        out
    }

    pub fn apply_vector(&self, x: &Vector) -> Vector {
        assert_eq!(x.dim(), self.n(), "permutation across dimensions");
        Vector::new(self.apply_mask(x.bits()), x.dim()).expect("permutation preserves range")
    }

    /// The coordinate-permuted copy of a subset. Ball structure and radius
    /// transport along the permuted weight, so tiling and ball properties are
    /// invariant under this action.
    pub fn apply(&self, d: &Subset) -> Subset {
        assert_eq!(d.dim(), self.n(), "permutation across dimensions");
        Subset::from_masks(d.dim(), d.masks().iter().map(|&m| self.apply_mask(m)))
            .expect("permutation preserves range")
    }
}

/// The lexicographically least coordinate-permuted image of `D`, comparing
/// sorted member lists. Two subsets are related by a coordinate permutation
/// iff their canonical forms are equal. Brute-forces all `n!` permutations,
/// so `n ≤ 8`.
pub fn canonical_form(d: &Subset) -> Result<Subset, TilingError> {
    let n = d.dim();
    if n > MAX_CANONICAL_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_CANONICAL_DIM));
    }
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<u8> = (0..n as u8).collect();
    // Heap's algorithm over all permutations
    let mut stack = vec![0usize; n];
    let mut consider = |perm: &[u8]| {
        let mut image: Vec<u64> = d
            .masks()
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                let mut rest = m;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1 << perm[i];
                }
                out
            })
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    };
    consider(&perm);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            consider(&perm);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    Ok(Subset::from_masks(n, best.expect("at least the identity")).expect("in range"))
}

/// Extends a tiling of `F_2^s` to `F_2^n`: the tile is padded with zeros
/// (`D* = D | 0`) and the code absorbs the new free coordinates
/// (`C* = C | F_2^(n-s)`). Cardinality and rank of the tile are unchanged.
pub fn extend_tiling(t: &Tiling, n: usize) -> Result<Tiling, TilingError> {
    let s = t.dim();
    if n < s {
        return Err(TilingError::ShrinkingExtension { target: n, src: s });
    }
    if n > MAX_TILING_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_TILING_DIM));
    }
    if n == s {
        return Ok(t.clone());
    }
    let tile = Subset::from_masks(n, t.tile.masks().iter().copied()).expect("in range");
    let code = Subset::from_masks(
        n,
        (0..1u64 << (n - s)).flat_map(|hi| t.code.masks().iter().map(move |&c| c | hi << s)),
    )
    .expect("in range");
    Tiling::new(&tile, &code)
}

/// The concatenation `(D_1 | D_2, C_1 | C_2)`, a tiling of `F_2^(n+m)`.
/// It is a poly-tiling iff both factors are.
pub fn concat_tiling(t1: &Tiling, t2: &Tiling) -> Result<Tiling, TilingError> {
    let n = t1.dim() + t2.dim();
    if n > MAX_TILING_DIM {
        return Err(TilingError::DimensionTooLarge(n, MAX_TILING_DIM));
    }
    let tile = t1.tile.concat(&t2.tile).expect("dimension checked");
    let code = t1.code.concat(&t2.code).expect("dimension checked");
    Tiling::new(&tile, &code)
}
