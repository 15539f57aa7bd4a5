//! Shared helpers for the integration suites: a deterministic RNG,
//! independent brute-force oracles, and the pinned weight pools used by the
//! concatenation and axiom suites.
//!
//! The oracles here never call the implementation paths they are used to
//! check: the polyhedromino oracle enumerates geodesic paths literally, and
//! the set-cover oracle enumerates subfamilies.

#![allow(dead_code)]

use hammtile::covering::CoveringFamily;
use hammtile::hypercube::{Subset, Vector};
use hammtile::poset::{all_posets, Poset};
use hammtile::weights::WeightTable;

/// SplitMix64: tiny, seedable, deterministic.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    /// A random subset of `F_2^n` containing 0, with each nonzero mask kept
    /// with probability 1/2 scaled down by `sparsity` extra coin flips.
    pub fn subset_with_zero(&mut self, n: usize, sparsity: u32) -> Subset {
        let masks = (1..1u64 << n)
            .filter(|_| (0..=sparsity).all(|_| self.next() & 1 == 1))
            .chain([0]);
        Subset::from_masks(n, masks).expect("masks in range")
    }

    /// A uniformly random subset of exactly `size` masks containing 0.
    pub fn subset_with_zero_of_size(&mut self, n: usize, size: usize) -> Subset {
        let space = 1u64 << n;
        let mut masks = vec![0u64];
        while masks.len() < size {
            let m = self.below(space - 1) + 1;
            if !masks.contains(&m) {
                masks.push(m);
            }
        }
        Subset::from_masks(n, masks).expect("masks in range")
    }
}

/// Literal geodesic-path enumeration: walks every ordering of the differing
/// coordinates (pruned to orderings that stay inside `D`) and reports whether
/// some complete ordering exists. Independent of the BFS used by the library.
pub fn polyhedromino_oracle(d: &Subset) -> bool {
    fn walk(d: &Subset, at: u64, target: u64) -> bool {
        if at == target {
            return true;
        }
        let mut todo = at ^ target;
        while todo != 0 {
            let bit = todo & todo.wrapping_neg();
            todo ^= bit;
            if d.contains_mask(at ^ bit) && walk(d, at ^ bit, target) {
                return true;
            }
        }
        false
    }
    let masks = d.masks();
    for (i, &x) in masks.iter().enumerate() {
        for &y in &masks[i + 1..] {
            if !walk(d, x, y) {
                return false;
            }
        }
    }
    true
}

/// Convexity oracle: every geodesic path between members stays inside,
/// checked by enumerating paths and failing on any escape.
pub fn convexity_oracle(d: &Subset) -> bool {
    fn all_paths_inside(d: &Subset, at: u64, target: u64) -> bool {
        if at == target {
            return true;
        }
        let mut todo = at ^ target;
        while todo != 0 {
            let bit = todo & todo.wrapping_neg();
            todo ^= bit;
            let next = at ^ bit;
            if !d.contains_mask(next) || !all_paths_inside(d, next, target) {
                return false;
            }
        }
        true
    }
    let masks = d.masks();
    for (i, &x) in masks.iter().enumerate() {
        for &y in &masks[i + 1..] {
            if !all_paths_inside(d, x, y) {
                return false;
            }
        }
    }
    true
}

/// Minimum set cover by subfamily enumeration: tries all subfamilies of
/// size 0, 1, 2, … until one covers the support.
pub fn set_cover_oracle(family_masks: &[u32], support: u32) -> u32 {
    if support == 0 {
        return 0;
    }
    for k in 1..=family_masks.len() {
        if some_subfamily_covers(family_masks, support, k, 0, 0) {
            return k as u32;
        }
    }
    unreachable!("a covering family always covers any support")
}

fn some_subfamily_covers(masks: &[u32], support: u32, k: usize, from: usize, acc: u32) -> bool {
    if support & !acc == 0 {
        return true;
    }
    if k == 0 || from == masks.len() {
        return false;
    }
    for i in from..masks.len() {
        if some_subfamily_covers(masks, support, k - 1, i + 1, acc | masks[i]) {
            return true;
        }
    }
    false
}

/// All antichain covering families on `[n]` (no member contains another,
/// union is everything). Small for `n ≤ 4`: 2, 9, and 114 families on two,
/// three, and four coordinates.
pub fn covering_antichains(n: usize) -> Vec<CoveringFamily> {
    let full = (1u32 << n) - 1;
    let all_masks: Vec<u32> = (1..=full).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn recurse(
        all: &[u32],
        from: usize,
        chosen: &mut Vec<u32>,
        full: u32,
        n: usize,
        out: &mut Vec<CoveringFamily>,
    ) {
        let union = chosen.iter().fold(0, |a, &b| a | b);
        if union == full && !chosen.is_empty() {
            out.push(CoveringFamily::from_masks(n, chosen.iter().copied()).expect("covers"));
        }
        for i in from..all.len() {
            let cand = all[i];
            if chosen.iter().any(|&c| c & !cand == 0 || cand & !c == 0) {
                continue; // not an antichain
            }
            chosen.push(cand);
            recurse(all, i + 1, chosen, full, n, out);
            chosen.pop();
        }
    }
    recurse(&all_masks, 0, &mut chosen, full, n, &mut out);
    out
}

/// Pinned weight pool per dimension for the concatenation and axiom sweeps:
/// every labeled poset weight for `k ≤ 4` would make the quadratic sweeps
/// too slow, so dimensions 1–3 carry the complete poset and antichain-cover
/// pools while dimension 4 carries a fixed list of representatives, including
/// the two bundled covering families of that dimension.
pub fn weight_pool(k: usize) -> Vec<WeightTable> {
    let mut pool: Vec<WeightTable> = Vec::new();
    match k {
        1..=3 => {
            for p in all_posets(k).expect("small dimension") {
                pool.push(p.p_weight_table());
            }
            for f in covering_antichains(k) {
                pool.push(f.f_weight_table());
            }
        }
        4 => {
            pool.push(WeightTable::hamming(4).expect("fits"));
            let chain = Poset::from_relations(4, &[(1, 2), (2, 3), (3, 4)]).expect("chain");
            pool.push(chain.p_weight_table());
            let unique_max = Poset::from_relations(4, &[(1, 4), (2, 4), (3, 4)]).expect("star up");
            pool.push(unique_max.p_weight_table());
            let star_down = Poset::from_relations(4, &[(1, 2), (1, 3), (1, 4)]).expect("star down");
            pool.push(star_down.p_weight_table());
            let vee = Poset::from_relations(4, &[(1, 3), (2, 3)]).expect("vee");
            pool.push(vee.p_weight_table());
            let f1 = CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).expect("F1");
            pool.push(f1.f_weight_table());
            let f2 =
                CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![4]]).expect("F2");
            pool.push(f2.f_weight_table());
            let blocks = CoveringFamily::new(4, &[vec![1, 2], vec![3, 4]]).expect("blocks");
            pool.push(blocks.f_weight_table());
        }
        _ => panic!("pool defined for dimensions 1..=4"),
    }
    pool.sort_by(|a, b| a.values().cmp(b.values()));
    pool.dedup_by(|a, b| a.values() == b.values());
    pool
}

/// Covering-family pool for the product and saturation sweeps.
pub fn covering_pool(k: usize) -> Vec<CoveringFamily> {
    let mut pool = covering_antichains(k.min(3));
    if k == 4 {
        pool = vec![
            CoveringFamily::singletons(4).expect("fits"),
            CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).expect("F1"),
            CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![4]]).expect("F2"),
            CoveringFamily::new(4, &[vec![1, 2], vec![3, 4]]).expect("blocks"),
        ];
    }
    pool
}

pub fn zero(n: usize) -> Vector {
    Vector::zero(n).expect("positive dimension")
}

pub fn vec_of(s: &str) -> Vector {
    s.parse().expect("valid bitstring")
}

pub fn subset_of(n: usize, strs: &[&str]) -> Subset {
    Subset::new(n, strs.iter().map(|s| vec_of(s))).expect("consistent dimensions")
}
