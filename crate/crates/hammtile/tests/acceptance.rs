//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS/FAIL` line (run with `--nocapture` to see them all).
//!
//! Every tolerance is exact set or integer equality; runtime budgets are
//! asserted where stated. Three criteria encode claims from the source
//! constructions that are provably false; they are implemented as stated
//! and fail with explicit witnesses rather than being weakened:
//!
//! * criterion 3: the printed rejection-table row 4 admits no complement
//!   (exhaustive exact-cover proof), so it is not a tile;
//! * criterion 6: |D_n(x)| = n + 2 divides 2^n only at n = 6 within the
//!   stated range, so most of the demanded complements cannot exist;
//! * criterion 10: the (r, s)-sum construction violates the triangle
//!   inequality on its own reference instance.

mod common;

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use hammtile::catalog::{catalog, Verdict};
use hammtile::covering::{covering_product, saturate_covering, CoveringFamily};
use hammtile::enumerate::support_closed_subsets;
use hammtile::hypercube::{Subset, Vector};
use hammtile::perfect::{
    classify_small_ball, dn_perfect_metric, is_ts_ball, support_closure_witness, verify_perfect,
    SmallBallClass,
};
use hammtile::poset::{all_posets, Poset};
use hammtile::tilings::{
    canonical_form, d_n_tile, find_complement, is_tiling_partition, is_tiling_sumset,
};
use hammtile::weights::{
    complete_ball_to_ts_weight, conditional_sum_weight, d_max_weight, extend_weight, WeightTable,
};

fn finish(num: u32, name: &str, failures: Vec<String>, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    let over_budget = budget.is_some_and(|b| elapsed > b);
    let ok = failures.is_empty() && !over_budget;
    println!(
        "criterion {num:2}: {} — {name} ({elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" }
    );
    for f in &failures {
        println!("             | {f}");
    }
    if over_budget {
        println!("             | exceeded runtime budget {budget:?}");
    }
    assert!(
        ok,
        "criterion {num} ({name}) failed with {} finding(s); see lines above",
        failures.len() + over_budget as usize
    );
}

// -------------------------------------------------------------------------
// 1. Table II/III reproduction
// -------------------------------------------------------------------------
#[test]
fn criterion_01_ball_entries_reconstruct() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let expected_radii: BTreeMap<&str, u32> = [
        ("D_1^3", 3),
        ("D_1^7", 1),
        ("D_1^4", 1),
        ("D_2^4", 1),
        ("D_1^5", 1),
        ("D_1^6", 1),
    ]
    .into();
    let mut seen = 0;
    for entry in catalog().ball_entries() {
        let Verdict::Ball { metric, radius } = &entry.verdict else {
            unreachable!()
        };
        seen += 1;
        match expected_radii.get(entry.name.as_str()) {
            Some(&r) if r == *radius => {}
            other => {
                failures.push(format!(
                    "{}: radius {} vs expected {:?}",
                    entry.name, radius, other
                ));
                continue;
            }
        }
        let ball = metric.weight_table().ball(&zero(entry.dim()), *radius);
        if ball.members != entry.members {
            failures.push(format!(
                "{}: metric does not reconstruct the tile",
                entry.name
            ));
        }
    }
    if seen != 6 {
        failures.push(format!("expected 6 ball entries, found {seen}"));
    }
    finish(
        1,
        "reference ball tiles reconstruct at their stated radii",
        failures,
        start,
        Some(Duration::from_secs(1)),
    );
}

// -------------------------------------------------------------------------
// 2. Table I rejection
// -------------------------------------------------------------------------
#[test]
fn criterion_02_non_ball_entries_rejected() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut seen = 0;
    for entry in catalog().entries().iter().filter(|e| !e.is_ball()) {
        let Verdict::NotBall { witness } = &entry.verdict else {
            unreachable!()
        };
        seen += 1;
        let found = match support_closure_witness(&entry.members) {
            Ok(Some(v)) => v,
            other => {
                failures.push(format!("{}: no witness found ({other:?})", entry.name));
                continue;
            }
        };
        // every valid witness: missing from the tile, support inside a member
        let all_witnesses: BTreeSet<Vector> = entry
            .members
            .iter()
            .flat_map(|m| {
                let bits = m.bits();
                let dim = m.dim();
                let mut subs = Vec::new();
                let mut s = bits;
                loop {
                    subs.push(Vector::new(s, dim).expect("in range"));
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & bits;
                }
                subs
            })
            .filter(|y| !entry.members.contains(y))
            .collect();
        if !all_witnesses.contains(&found) {
            failures.push(format!(
                "{}: scan returned an invalid witness {found}",
                entry.name
            ));
        }
        if !all_witnesses.contains(witness) {
            failures.push(format!(
                "{}: the reference counter-example {witness} is not a valid witness",
                entry.name
            ));
        }
    }
    if seen != 9 {
        failures.push(format!("expected 9 non-ball entries, found {seen}"));
    }
    finish(
        2,
        "non-ball tiles fail support closure with the printed counter-examples",
        failures,
        start,
        Some(Duration::from_secs(1)),
    );
}

// -------------------------------------------------------------------------
// 3. Complement existence for all fifteen representative tiles
// -------------------------------------------------------------------------
//
// Fourteen of the fifteen catalog tiles admit complements. The printed
// rejection-table row 4, {0, e1..e4, e1+e3, e1+e2+e3, e1+e2+e4}, does not:
// exhaustive backtracking over its two-translate covers proves no complement
// exists, and an independent enumeration shows only five tile classes on
// four coordinates contain all four basis vectors (rows 1-3 and the two
// ball tiles), so no fourth rejection class exists to correct the row to.
// The criterion is asserted as stated and fails on that row.
#[test]
fn criterion_03_all_catalog_tiles_admit_complements() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for entry in catalog().entries() {
        match find_complement(&entry.members) {
            Ok(Some(code)) => {
                let partition = is_tiling_partition(&entry.members, &code).unwrap_or(false);
                let sumset = is_tiling_sumset(&entry.members, &code).unwrap_or(false);
                if !(partition && sumset) {
                    failures.push(format!("{}: found code fails verification", entry.name));
                }
                if entry.members.len() * code.len() != 1 << entry.dim() {
                    failures.push(format!("{}: |D|·|C| mismatch", entry.name));
                }
            }
            other => failures.push(format!("{}: no complement found ({other:?})", entry.name)),
        }
    }
    finish(
        3,
        "all 15 representative tiles admit verified complements",
        failures,
        start,
        Some(Duration::from_secs(30)),
    );
}

// -------------------------------------------------------------------------
// 4. Independent classification of support-closed full-rank size-8 tiles
// -------------------------------------------------------------------------
#[test]
fn criterion_04_independent_enumeration_matches_catalog() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 3..=7usize {
        let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
        for d in support_closed_subsets(n, 8).expect("within bounds") {
            if d.gf2_rank() != n {
                continue;
            }
            if find_complement(&d).expect("within bounds").is_none() {
                continue;
            }
            found.insert(canonical_form(&d).expect("within bounds").masks().to_vec());
        }
        let expected: BTreeSet<Vec<u64>> = catalog()
            .ball_entries()
            .filter(|e| e.dim() == n)
            .map(|e| e.canonical().masks().to_vec())
            .collect();
        if found != expected {
            failures.push(format!(
                "n = {n}: found {} class(es), reference lists {}",
                found.len(),
                expected.len()
            ));
        }
    }
    finish(
        4,
        "independent enumeration finds exactly the 6 ball classes",
        failures,
        start,
        Some(Duration::from_secs(600)),
    );
}

// -------------------------------------------------------------------------
// 5. Small-ball theorem: TS-balls of sizes 2 and 4
// -------------------------------------------------------------------------
#[test]
fn criterion_05_small_ball_shapes() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=5usize {
        for size in [2usize, 4] {
            if size > 1 << n {
                continue;
            }
            // enumerate all subsets containing 0 of this size and compare
            // the TS-ball predicate against the shape classification
            let mut shape_counts: BTreeMap<&str, usize> = BTreeMap::new();
            for_each_subset_with_zero(n, size, &mut |d| {
                let is_ball = is_ts_ball(d).expect("0 present").is_some();
                let class = classify_small_ball(d).expect("right cardinality");
                let is_shape = !matches!(class, SmallBallClass::NotTsBall);
                if is_ball != is_shape {
                    failures.push(format!(
                        "n = {n}: {d:?} is_ball={is_ball} but classified {}",
                        class.label()
                    ));
                }
                if is_ball {
                    *shape_counts.entry(class.label()).or_default() += 1;
                    // the realizing poset from the classification reconstructs
                    if let Some((p, r)) = class.realizing_poset(n) {
                        if p.p_weight_table().ball(&zero(n), r).members != *d {
                            failures.push(format!("n = {n}: realizing poset fails for {d:?}"));
                        }
                    }
                }
            });
            let binom3 = if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 };
            let binom2 = if n >= 2 { n * (n - 1) / 2 } else { 0 };
            let expected: BTreeMap<&str, usize> = match size {
                2 => [("B1", n)].into_iter().collect(),
                _ => [("B2", binom3), ("B3", binom2)]
                    .into_iter()
                    .filter(|&(_, c)| c > 0)
                    .collect(),
            };
            if shape_counts != expected {
                failures.push(format!(
                    "n = {n}, size {size}: shape counts {shape_counts:?} vs expected {expected:?}"
                ));
            }
        }
    }
    finish(
        5,
        "TS-balls of sizes 2 and 4 are exactly B1, B2, B3",
        failures,
        start,
        Some(Duration::from_secs(10)),
    );
}

fn for_each_subset_with_zero(n: usize, size: usize, f: &mut dyn FnMut(&Subset)) {
    let space = 1u64 << n;
    let mut masks = vec![0u64];
    fn recurse(
        space: u64,
        size: usize,
        masks: &mut Vec<u64>,
        f: &mut dyn FnMut(&Subset),
        n: usize,
    ) {
        if masks.len() == size {
            f(&Subset::from_masks(n, masks.iter().copied()).expect("in range"));
            return;
        }
        let start = masks.last().expect("nonempty") + 1;
        for m in start..space {
            masks.push(m);
            recurse(space, size, masks, f, n);
            masks.pop();
        }
    }
    recurse(space, size, &mut masks, f, n);
}

// -------------------------------------------------------------------------
// 6. The D_n(x) family across n ∈ {4..8}
// -------------------------------------------------------------------------
//
// As stated, complement existence for every x with ω_H(x) ∉ {n-1, n-2} is
// required for all n in 4..=8. A tiling forces |D|·|C| = 2^n, and
// |D_n(x)| = n + 2 divides a power of two only when n + 2 is itself a power
// of two; within this range only n = 6. The criterion is implemented
// literally and the impossible legs fail with the divisibility witness.
#[test]
fn criterion_06_dn_family() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 4..=8usize {
        let mut complement_mismatches: Vec<u32> = Vec::new();
        let mut metric_mismatches: Vec<u32> = Vec::new();
        for mask in 1..1u64 << n {
            let x = Vector::new(mask, n).expect("in range");
            let w = x.weight();
            if w < 2 {
                continue;
            }
            let tile = d_n_tile(n, &x).expect("weight at least 2");

            let expected_tile = w as usize != n - 1 && w as usize != n - 2;
            let found = find_complement(&tile).expect("within bounds");
            if let Some(code) = &found {
                if !is_tiling_partition(&tile, code).expect("normalized") {
                    failures.push(format!("n = {n}, ω = {w}: unverified complement"));
                }
            }
            if found.is_some() != expected_tile {
                complement_mismatches.push(w);
            }

            let metric = dn_perfect_metric(n, &x).expect("weight at least 2");
            if let Some(f) = &metric {
                if f.f_weight_table().ball(&zero(n), 1).members != tile {
                    failures.push(format!("n = {n}, ω = {w}: covering fails reconstruction"));
                }
            }
            if metric.is_some() != (w == 2) {
                metric_mismatches.push(w);
            }
        }
        complement_mismatches.sort_unstable();
        complement_mismatches.dedup();
        if !complement_mismatches.is_empty() {
            failures.push(format!(
                "n = {n}: expected complements at weights {complement_mismatches:?} but |D| = {} does not divide 2^{n}",
                n + 2
            ));
        }
        metric_mismatches.sort_unstable();
        metric_mismatches.dedup();
        if !metric_mismatches.is_empty() {
            failures.push(format!(
                "n = {n}: covering existence wrong at weights {metric_mismatches:?}"
            ));
        }
    }
    finish(
        6,
        "D_n(x): complements iff ω ∉ {n-1, n-2}, covering iff ω = 2",
        failures,
        start,
        Some(Duration::from_secs(300)),
    );
}

// -------------------------------------------------------------------------
// 7. Equivalence of the two tiling definitions
// -------------------------------------------------------------------------
#[test]
fn criterion_07_definition_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for n in 1..=4usize {
        let cells = 1usize << n;
        for d_log in 0..=n {
            let d_size = 1usize << d_log;
            let c_size = cells / d_size;
            let mut tiles: Vec<Subset> = Vec::new();
            for_each_subset_with_zero(n, d_size, &mut |d| tiles.push(d.clone()));
            let mut codes: Vec<Subset> = Vec::new();
            for_each_subset_with_zero(n, c_size, &mut |c| codes.push(c.clone()));
            for d in &tiles {
                for c in &codes {
                    let a = is_tiling_partition(d, c).expect("normalized");
                    let b = is_tiling_sumset(d, c).expect("normalized");
                    if a != b {
                        failures.push(format!("disagreement at n = {n}: D = {d:?}, C = {c:?}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    // ten thousand random pairs at n = 6, mixed sizes
    let mut rng = TestRng::new(0x5eed_7111);
    for i in 0..10_000u64 {
        let (ds, cs) = if i % 10 < 7 {
            let a = rng.below(7);
            (1usize << a, 1usize << (6 - a))
        } else {
            (1 + rng.below(20) as usize, 1 + rng.below(20) as usize)
        };
        let d = rng.subset_with_zero_of_size(6, ds);
        let c = rng.subset_with_zero_of_size(6, cs);
        let a = is_tiling_partition(&d, &c).expect("normalized");
        let b = is_tiling_sumset(&d, &c).expect("normalized");
        if a != b {
            failures.push(format!("random disagreement: D = {d:?}, C = {c:?}"));
        }
        checked += 1;
    }
    println!("             | {checked} pairs compared");
    finish(
        7,
        "partition and sumset definitions agree everywhere",
        failures,
        start,
        None,
    );
}

// -------------------------------------------------------------------------
// 8. Concatenation suite
// -------------------------------------------------------------------------
#[test]
fn criterion_08_concatenation_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let pools: Vec<Vec<WeightTable>> = (1..=4).map(weight_pool).collect();

    // (a) d_max ball identity at every common radius
    // (b) conditional-sum ball of radius r+s equals D_1 | D_2
    for w1 in pools.iter().flatten() {
        for w2 in pools.iter().flatten() {
            let n = w1.dim();
            let m = w2.dim();
            let dmax = d_max_weight(w1, w2).expect("valid pool weights");
            for r in 0..=w1.max_value().min(w2.max_value()) {
                let lhs = dmax.ball(&zero(n + m), r).members;
                let rhs = w1
                    .ball(&zero(n), r)
                    .members
                    .concat(&w2.ball(&zero(m), r).members)
                    .expect("fits");
                if lhs != rhs {
                    failures.push(format!(
                        "d_max identity fails at r = {r} for dims ({n},{m})"
                    ));
                }
            }
            for r in 0..=w1.max_value() {
                for s in 0..=w2.max_value() {
                    let sum = conditional_sum_weight(w1, r, w2, s).expect("valid pool weights");
                    let lhs = sum.ball(&zero(n + m), r + s).members;
                    let rhs = w1
                        .ball(&zero(n), r)
                        .members
                        .concat(&w2.ball(&zero(m), s).members)
                        .expect("fits");
                    if lhs != rhs {
                        failures.push(format!(
                            "conditional-sum identity fails at (r,s) = ({r},{s}) dims ({n},{m})"
                        ));
                    }
                }
            }
        }
    }

    // (c) covering-product ball identity at every radius
    let cpools: Vec<CoveringFamily> = (1..=4).flat_map(covering_pool).collect();
    for f1 in &cpools {
        for f2 in &cpools {
            let n = f1.n();
            let m = f2.n();
            let prod = covering_product(f1, f2).expect("fits");
            let w = prod.f_weight_table();
            let w1 = f1.f_weight_table();
            let w2 = f2.f_weight_table();
            for r in 0..=(n + m) as u32 {
                let lhs = w.ball(&zero(n + m), r).members;
                let rhs = w1
                    .ball(&zero(n), r)
                    .members
                    .concat(&w2.ball(&zero(m), r).members)
                    .expect("fits");
                if lhs != rhs {
                    failures.push(format!("product identity fails at r = {r} dims ({n},{m})"));
                }
            }
        }
    }

    // (d) saturation turns any family ball into a radius-1 ball
    let mut dpools = cpools.clone();
    dpools.push(CoveringFamily::new(5, &[vec![1, 2], vec![1, 3], vec![4], vec![5]]).expect("F3"));
    dpools.push(
        CoveringFamily::new(6, &[vec![1, 2], vec![3], vec![4], vec![5], vec![6]]).expect("F4"),
    );
    for f in &dpools {
        let w = f.f_weight_table();
        for r in 1..=w.max_value() {
            let d = w.ball(&zero(f.n()), r).members;
            let saturated = saturate_covering(f, &d).expect("d is a family ball");
            if saturated.f_weight_table().ball(&zero(f.n()), 1).members != d {
                failures.push(format!(
                    "saturation fails at r = {r} on a dim-{} family",
                    f.n()
                ));
            }
        }
    }

    // (e) polyhedromino concatenation iff both factors
    let mut poly_pairs = 0u64;
    for bits1 in 1..1u32 << 4 {
        for bits2 in 1..1u32 << 4 {
            let d1 = Subset::from_masks(2, (0..4u64).filter(|&m| bits1 >> m & 1 == 1)).expect("ok");
            let d2 = Subset::from_masks(2, (0..4u64).filter(|&m| bits2 >> m & 1 == 1)).expect("ok");
            let both = d1.is_polyhedromino().expect("nonempty")
                && d2.is_polyhedromino().expect("nonempty");
            let concat = d1
                .concat(&d2)
                .expect("fits")
                .is_polyhedromino()
                .expect("nonempty");
            if both != concat {
                failures.push(format!("poly-concat iff fails: {d1:?} | {d2:?}"));
            }
            poly_pairs += 1;
        }
    }
    let mut rng = TestRng::new(0x8e);
    for _ in 0..600 {
        let s1 = 1 + rng.below(6) as usize;
        let s2 = 1 + rng.below(6) as usize;
        let d1 = rng.subset_with_zero_of_size(3, s1);
        let d2 = rng.subset_with_zero_of_size(3, s2);
        let both =
            d1.is_polyhedromino().expect("nonempty") && d2.is_polyhedromino().expect("nonempty");
        let concat = d1
            .concat(&d2)
            .expect("fits")
            .is_polyhedromino()
            .expect("nonempty");
        if both != concat {
            failures.push(format!("poly-concat iff fails: {d1:?} | {d2:?}"));
        }
        poly_pairs += 1;
    }
    // the explicit convexity counterexample: twice {000,100,010,001}
    let b2 = subset_of(3, &["000", "100", "010", "001"]);
    let d = b2.concat(&b2).expect("fits");
    if !d.is_polyhedromino().expect("nonempty") {
        failures.push("counterexample concat should be a polyhedromino".into());
    }
    if d.is_convex_polyhedromino().expect("nonempty") {
        failures.push("counterexample concat should not be convex".into());
    }
    println!("             | {poly_pairs} polyhedromino pairs compared");

    finish(
        8,
        "concatenation constructions: ball identities and convexity verdicts",
        failures,
        start,
        None,
    );
}

// -------------------------------------------------------------------------
// 9. The three worked perfect-code certificates
// -------------------------------------------------------------------------
#[test]
fn criterion_09_perfect_code_certificates() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // repetition code under a unique-maximal poset, radius n - 1
    for n in [3usize, 5, 7] {
        let relations: Vec<(usize, usize)> = (1..n).map(|i| (i, n)).collect();
        let p = Poset::from_relations(n, &relations).expect("acyclic");
        let code = Subset::from_masks(n, [0, (1u64 << n) - 1]).expect("in range");
        if !verify_perfect(&code, &p.p_weight_table(), n as u32 - 1) {
            failures.push(format!("repetition code fails at n = {n}"));
        }
    }

    // {00, 11} under the chain 1 ⪯ 2, radius 1
    let chain = Poset::from_relations(2, &[(1, 2)]).expect("acyclic");
    if !verify_perfect(&subset_of(2, &["00", "11"]), &chain.p_weight_table(), 1) {
        failures.push("chain code {00, 11} fails at radius 1".into());
    }

    // the concatenated six-dimensional code under d_max, radius 1
    let f1 = CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).expect("F1");
    let dmax = d_max_weight(&chain.p_weight_table(), &f1.f_weight_table()).expect("valid");
    let code = subset_of(6, &["000000", "001111", "110000", "111111"]);
    if !verify_perfect(&code, &dmax, 1) {
        failures.push("concatenated code fails under d_max at radius 1".into());
    }
    let expected_tile = [
        "000000", "000001", "100000", "100001", "001000", "001100", "101000", "101100", "000100",
        "001010", "100100", "101010", "000010", "001001", "100010", "101001",
    ];
    if dmax.ball(&zero(6), 1).members != subset_of(6, &expected_tile) {
        failures.push("d_max ball is not the listed 16-element tile".into());
    }

    finish(
        9,
        "worked perfect-code certificates verify",
        failures,
        start,
        Some(Duration::from_secs(1)),
    );
}

// -------------------------------------------------------------------------
// 10. Axiom property suite
// -------------------------------------------------------------------------
//
// The conditional-sum leg is implemented as stated and fails: the (r, s)-sum
// construction places a flat wall of height r + s + 1 outside the
// concatenated ball, and two interior members with small values can sum onto
// the wall, violating the triangle inequality. The reference instance (chain
// weight at r = 1 against the dim-4 star covering at s = 1) is itself such a
// case; the failure output names the witnesses.
#[test]
fn criterion_10_axiom_property_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // poset weights: every labeled poset up to n = 4, random posets at 5, 6
    for n in 1..=4usize {
        for p in all_posets(n).expect("small") {
            if !p.p_weight_table().validate().is_valid() {
                failures.push(format!("poset weight invalid: {p:?}"));
            }
        }
    }
    let mut rng = TestRng::new(0xbead);
    for _ in 0..200 {
        let n = 5 + rng.below(2) as usize;
        let mut relations = Vec::new();
        for _ in 0..rng.below(8) {
            let a = 1 + rng.below(n as u64) as usize;
            let b = 1 + rng.below(n as u64) as usize;
            if a != b {
                relations.push((a, b));
            }
        }
        if let Ok(p) = Poset::from_relations(n, &relations) {
            if !p.p_weight_table().validate().is_valid() {
                failures.push(format!("poset weight invalid: {p:?}"));
            }
        }
    }

    // covering weights: all antichain covers up to n = 3, random families to n = 8
    for n in 1..=3usize {
        for f in covering_antichains(n) {
            if !f.f_weight_table().validate().is_valid() {
                failures.push(format!("covering weight invalid: {f:?}"));
            }
        }
    }
    for _ in 0..200 {
        let n = 1 + rng.below(8) as usize;
        let full = (1u32 << n) - 1;
        let mut masks: Vec<u32> = (0..1 + rng.below(8))
            .map(|_| 1 + rng.below(full as u64) as u32)
            .collect();
        masks.push(full);
        let f = CoveringFamily::from_masks(n, masks).expect("covers");
        if !f.f_weight_table().validate().is_valid() {
            failures.push(format!("covering weight invalid: {f:?}"));
        }
    }

    // flat completions over every support-closed set at n ≤ 5
    for n in 1..=5usize {
        for size in 1..=16usize.min(1 << n) {
            for d in support_closed_subsets(n, size).expect("bounds") {
                for r in 1..=n as u32 {
                    let partial: BTreeMap<Vector, u32> =
                        d.iter().map(|x| (x, x.weight().min(r))).collect();
                    if let Ok(w) = complete_ball_to_ts_weight(&d, &partial, r) {
                        if !w.validate().is_valid() {
                            failures.push(format!("flat completion invalid at r = {r}: {d:?}"));
                        }
                    } else if r == 1 {
                        failures.push(format!("flat completion rejected at r = 1: {d:?}"));
                    }
                }
            }
        }
    }

    // ts-ball witnesses are valid flat completions
    for entry in catalog().ball_entries() {
        match is_ts_ball(&entry.members) {
            Ok(Some((w, _))) => {
                if !w.validate().is_valid() {
                    failures.push(format!("{}: flat witness invalid", entry.name));
                }
            }
            other => failures.push(format!(
                "{}: expected a ball witness, got {other:?}",
                entry.name
            )),
        }
    }

    // d_max over the pinned pools
    let pools: Vec<Vec<WeightTable>> = (1..=4).map(weight_pool).collect();
    for w1 in pools.iter().flatten() {
        for w2 in pools.iter().flatten() {
            let w = d_max_weight(w1, w2).expect("valid inputs");
            if !w.validate().is_valid() {
                failures.push(format!(
                    "d_max invalid for dims ({},{})",
                    w1.dim(),
                    w2.dim()
                ));
            }
        }
    }

    // conditional sums over the pools (n + m ≤ 6) and the reference instance
    let mut sum_violations: Vec<String> = Vec::new();
    let mut sum_checked = 0u64;
    for w1 in pools.iter().flatten() {
        for w2 in pools.iter().flatten() {
            if w1.dim() + w2.dim() > 6 {
                continue;
            }
            for r in 0..=w1.max_value() {
                for s in 0..=w2.max_value() {
                    let w = conditional_sum_weight(w1, r, w2, s).expect("valid inputs");
                    sum_checked += 1;
                    let report = w.validate();
                    if !report.is_valid() && sum_violations.len() < 3 {
                        sum_violations.push(format!(
                            "conditional sum invalid at dims ({},{}), (r,s) = ({r},{s}): {}",
                            w1.dim(),
                            w2.dim(),
                            report.violations[0]
                        ));
                    }
                }
            }
        }
    }
    let chain = Poset::from_relations(2, &[(1, 2)])
        .expect("acyclic")
        .p_weight_table();
    let f1 = CoveringFamily::new(4, &[vec![1, 2], vec![1, 3], vec![1, 4]])
        .expect("F1")
        .f_weight_table();
    let reference = conditional_sum_weight(&chain, 1, &f1, 1).expect("valid inputs");
    let reference_report = reference.validate();
    if !reference_report.is_valid() {
        sum_violations.push(format!(
            "reference instance (chain ⪯ at r=1) ⊕ (star covering at s=1): {}",
            reference_report.violations[0]
        ));
    }
    if !sum_violations.is_empty() {
        failures.push(format!(
            "conditional-sum tables are not always TS-weights ({sum_checked} swept):"
        ));
        failures.extend(sum_violations);
    }

    // extensions of the documented instances
    let h2 = WeightTable::hamming(2).expect("fits");
    for (w, r, n) in [
        (&h2, 1u32, 3usize),
        (&chain, 2, 4),
        (
            &Poset::from_relations(3, &[(1, 2), (2, 3)])
                .expect("chain")
                .p_weight_table(),
            3,
            5,
        ),
    ] {
        let ext = extend_weight(w, r, n).expect("grows");
        if !ext.validate().is_valid() {
            failures.push(format!(
                "extension invalid: dim {} at reference radius {r} to {n}",
                w.dim()
            ));
        }
    }

    // exact set cover against the subfamily oracle, ≥ 10^3 random instances
    let mut rng = TestRng::new(0xfade);
    for _ in 0..1_200 {
        let n = 1 + rng.below(6) as usize;
        let full = (1u32 << n) - 1;
        let mut masks: Vec<u32> = (0..rng.below(8))
            .map(|_| 1 + rng.below(full as u64) as u32)
            .collect();
        masks.push(full);
        let f = CoveringFamily::from_masks(n, masks).expect("covers");
        let x = Vector::new(rng.below(1 << n), n).expect("in range");
        if f.f_weight(&x) != set_cover_oracle(f.masks(), x.bits() as u32) {
            failures.push(format!("set cover mismatch: {f:?} on {x}"));
        }
    }

    finish(
        10,
        "every constructor yields a valid TS-weight; set cover matches its oracle",
        failures,
        start,
        None,
    );
}
