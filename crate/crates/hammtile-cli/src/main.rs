//! Command-line interface: tiling verification, tile classification,
//! complement search, certified concatenation, enumeration, and metric
//! evaluation, all over the JSON formats of the library.
//!
//! stdout carries only JSON (one value, or one value per line for streaming
//! commands); diagnostics go to stderr. Exit codes: 0 when the verdict is
//! positive, 1 when the verdict is negative or the searched object is
//! absent, 2 for malformed input, violated bounds, or internal errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use hammtile::catalog::{catalog_json, Verdict};
use hammtile::covering::{covering_product, saturate_covering, CoveringFamily};
use hammtile::enumerate::support_closed_subsets;
use hammtile::hypercube::{Subset, Vector};
use hammtile::json::{
    CoveringJson, MetricJson, PosetJson, SubsetJson, TilingJson, WeightTableJson,
};
use hammtile::perfect::{
    classify_small_ball, classify_tile8, is_ts_ball, support_closure_witness, Tile8Classification,
};
use hammtile::poset::{find_poset_ball, poset_ball_radius};
use hammtile::tilings::{canonical_form, find_complement, is_tiling_partition, is_tiling_sumset};
use hammtile::weights::{decoding_equivalent, WeightTable};

#[derive(Parser)]
#[command(
    name = "hammtile",
    version,
    about = "Tilings of the binary Hamming cube and the perfect codes they induce"
)]
struct Cli {
    /// Seed for randomized subcommands. Every current subcommand is
    /// deterministic; the flag is accepted and reserved.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a tiling {"n", "D", "C"} under both definitions (translate
    /// partition, and sumset with 2D ∩ 2C = {0})
    VerifyTiling {
        /// Tiling JSON file, or - for stdin
        input: Option<PathBuf>,
    },
    /// Classify a subset {"n", "vectors"}: small-ball shapes for sizes 2 and
    /// 4, catalog lookup for full-rank size-8 tiles, generic TS-ball test
    /// otherwise
    Classify { input: Option<PathBuf> },
    /// Search for a code C tiling the cube by translates of the given tile
    FindComplement { input: Option<PathBuf> },
    /// Concatenate two tilings certified as metric balls, emitting the
    /// combined tiling with its certifying metric and radius
    Concat {
        /// Left tiling JSON
        #[arg(long)]
        left: PathBuf,
        /// Right tiling JSON
        #[arg(long)]
        right: PathBuf,
        /// Metric descriptor for the left tile ({"poset"|"covering"|"table"})
        #[arg(long)]
        left_metric: PathBuf,
        /// Metric descriptor for the right tile
        #[arg(long)]
        right_metric: PathBuf,
        /// Radius certifying the left tile
        #[arg(long)]
        left_radius: u32,
        /// Radius certifying the right tile
        #[arg(long)]
        right_radius: u32,
        #[arg(long, value_enum)]
        mode: ConcatMode,
    },
    /// Stream canonical forms of support-closed subsets of the given size,
    /// one JSON object per line
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        size: usize,
        /// Keep only subsets whose GF(2) span has full dimension
        #[arg(long)]
        full_rank: bool,
        /// Keep only subsets admitting a tiling complement
        #[arg(long)]
        tiles_only: bool,
    },
    /// Evaluate a metric weight on a single vector
    WeightOf {
        #[arg(long)]
        metric: PathBuf,
        /// Vector bitstring, coordinate 1 leftmost
        #[arg(long)]
        vector: String,
    },
    /// Enumerate a metric ball
    Ball {
        #[arg(long)]
        metric: PathBuf,
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: u32,
    },
    /// Decide decoding equivalence of two weight tables
    Equiv { a: PathBuf, b: PathBuf },
    /// Search all posets on [n] (n ≤ 6) for one realizing the subset as a
    /// ball at 0, or verify a supplied poset
    PosetSearch {
        input: Option<PathBuf>,
        /// Verify only this poset instead of searching
        #[arg(long)]
        poset: Option<PathBuf>,
    },
    /// Dump the bundled reference catalog
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConcatMode {
    /// Equal radii, certified by the maximum metric at the common radius
    Max,
    /// Any radii, certified by the conditional sum at radius r + s
    Sum,
    /// Covering metrics with equal radii, certified by the covering product
    CoveringProduct,
    /// Covering metrics with any radii: saturate both to radius 1, then
    /// take the product
    SaturateThenProduct,
}

/// A negative verdict carried to exit code 1; everything else exits 0.
struct Outcome {
    positive: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(Outcome { positive: true }) => ExitCode::SUCCESS,
        Ok(Outcome { positive: false }) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("HAMMTILE_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
                return;
            }
        }
        eprintln!("warning: ignoring invalid HAMMTILE_THREADS={value}");
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    parse_json(&fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::VerifyTiling { input } => verify_tiling(input),
        Command::Classify { input } => classify(input),
        Command::FindComplement { input } => complement(input),
        Command::Concat {
            left,
            right,
            left_metric,
            right_metric,
            left_radius,
            right_radius,
            mode,
        } => concat(
            left,
            right,
            left_metric,
            right_metric,
            left_radius,
            right_radius,
            mode,
        ),
        Command::Enumerate {
            n,
            size,
            full_rank,
            tiles_only,
        } => enumerate(n, size, full_rank, tiles_only),
        Command::WeightOf { metric, vector } => weight_of(metric, vector),
        Command::Ball {
            metric,
            center,
            radius,
        } => ball(metric, center, radius),
        Command::Equiv { a, b } => equiv(a, b),
        Command::PosetSearch { input, poset } => poset_search(input, poset),
        Command::Catalog => {
            print!("{}", catalog_json());
            Ok(Outcome { positive: true })
        }
    }
}

fn verify_tiling(input: Option<PathBuf>) -> Result<Outcome, String> {
    let parsed: TilingJson = parse_json(&read_input(input.as_ref())?)?;
    let tile = parsed.tile().map_err(|e| e.to_string())?;
    let code = parsed.code().map_err(|e| e.to_string())?;
    // a tiling is invariant under translating either component, so
    // normalize both to contain 0 before applying the definitions
    let tile = normalize(&tile)?;
    let code = normalize(&code)?;
    let partition = is_tiling_partition(&tile, &code).map_err(|e| e.to_string())?;
    let sumset = is_tiling_sumset(&tile, &code).map_err(|e| e.to_string())?;
    if partition != sumset {
        return Err(format!(
            "internal: the two tiling definitions disagree (partition {partition}, sumset {sumset})"
        ));
    }
    emit(&json!({ "n": parsed.n, "partition": partition, "sumset": sumset, "tiling": partition }));
    Ok(Outcome {
        positive: partition,
    })
}

fn normalize(s: &Subset) -> Result<Subset, String> {
    if s.is_empty() {
        return Err("sets must be nonempty".into());
    }
    if s.contains_zero() {
        return Ok(s.clone());
    }
    let first = Vector::new(s.masks()[0], s.dim()).expect("member in range");
    Ok(s.translate(&first))
}

fn classify(input: Option<PathBuf>) -> Result<Outcome, String> {
    let parsed: SubsetJson = parse_json(&read_input(input.as_ref())?)?;
    let d = parsed.to_subset().map_err(|e| e.to_string())?;
    if !d.contains_zero() {
        return Err("classification expects a set containing 0".into());
    }

    if d.len() == 2 || d.len() == 4 {
        let class = classify_small_ball(&d).map_err(|e| e.to_string())?;
        return match class.realizing_poset(d.dim()) {
            Some((poset, radius)) => {
                emit(&json!({
                    "verdict": "BALL",
                    "shape": class.label(),
                    "poset": PosetJson::from_poset(&poset),
                    "radius": radius,
                }));
                Ok(Outcome { positive: true })
            }
            None => {
                let witness = support_closure_witness(&d)
                    .map_err(|e| e.to_string())?
                    .ok_or("internal: unclassified set must have a closure witness")?;
                emit(
                    &json!({ "verdict": "NOT_BALL", "shape": class.label(), "witness": witness.to_string() }),
                );
                Ok(Outcome { positive: false })
            }
        };
    }

    if d.len() == 8 && d.gf2_rank() == d.dim() {
        return match classify_tile8(&d).map_err(|e| e.to_string())? {
            Tile8Classification::Catalogued(entry) => match &entry.verdict {
                Verdict::Ball { metric, radius } => {
                    let mut report = json!({
                        "verdict": "BALL",
                        "entry": entry.name,
                        "radius": radius,
                    });
                    match metric {
                        hammtile::catalog::MetricWitness::Poset(p) => {
                            report["poset"] = serde_json::to_value(PosetJson::from_poset(p))
                                .expect("serializable");
                        }
                        hammtile::catalog::MetricWitness::Covering(f) => {
                            report["covering"] =
                                serde_json::to_value(f.sets()).expect("serializable");
                        }
                    }
                    emit(&report);
                    Ok(Outcome { positive: true })
                }
                Verdict::NotBall { witness } => {
                    emit(&json!({
                        "verdict": "NOT_BALL",
                        "entry": entry.name,
                        "witness": witness.to_string(),
                    }));
                    Ok(Outcome { positive: false })
                }
            },
            Tile8Classification::Uncatalogued => {
                emit(&json!({ "verdict": "UNCATALOGUED" }));
                Ok(Outcome { positive: false })
            }
        };
    }

    match is_ts_ball(&d).map_err(|e| e.to_string())? {
        Some((weight, radius)) => {
            // the singleton {0} is already the ball of radius 0
            let radius = if d.len() == 1 { 0 } else { radius };
            emit(&json!({
                "verdict": "BALL",
                "radius": radius,
                "weight": WeightTableJson::from_table(&weight),
            }));
            Ok(Outcome { positive: true })
        }
        None => {
            let witness = support_closure_witness(&d)
                .map_err(|e| e.to_string())?
                .ok_or("internal: non-ball must have a closure witness")?;
            emit(&json!({ "verdict": "NOT_BALL", "witness": witness.to_string() }));
            Ok(Outcome { positive: false })
        }
    }
}

fn complement(input: Option<PathBuf>) -> Result<Outcome, String> {
    let parsed: SubsetJson = parse_json(&read_input(input.as_ref())?)?;
    let d = parsed.to_subset().map_err(|e| e.to_string())?;
    match find_complement(&d).map_err(|e| e.to_string())? {
        Some(code) => {
            emit(&json!({
                "n": d.dim(),
                "D": d.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "C": code.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }));
            Ok(Outcome { positive: true })
        }
        None => {
            emit(&json!({ "verdict": "NOT_A_TILE" }));
            Ok(Outcome { positive: false })
        }
    }
}

struct ConcatSide {
    tile: Subset,
    code: Subset,
    weight: WeightTable,
    covering: Option<CoveringFamily>,
    radius: u32,
}

fn load_side(tiling: &PathBuf, metric: &PathBuf, radius: u32) -> Result<ConcatSide, String> {
    let tiling: TilingJson = load_json(tiling)?;
    let tile = tiling.tile().map_err(|e| e.to_string())?;
    let code = tiling.code().map_err(|e| e.to_string())?;
    if !is_tiling_partition(&tile, &code).map_err(|e| e.to_string())? {
        return Err("input pair is not a tiling".into());
    }
    let metric: MetricJson = load_json(metric)?;
    let weight = metric.to_weight_table().map_err(|e| e.to_string())?;
    if weight.dim() != tile.dim() {
        return Err(format!(
            "metric dimension {} does not match the tiling dimension {}",
            weight.dim(),
            tile.dim()
        ));
    }
    let zero = Vector::zero(tile.dim()).expect("positive dimension");
    if weight.ball(&zero, radius).members != tile {
        return Err(format!("the metric's radius-{radius} ball is not the tile"));
    }
    let covering = metric.covering_family().map_err(|e| e.to_string())?;
    Ok(ConcatSide {
        tile,
        code,
        weight,
        covering,
        radius,
    })
}

fn concat(
    left: PathBuf,
    right: PathBuf,
    left_metric: PathBuf,
    right_metric: PathBuf,
    left_radius: u32,
    right_radius: u32,
    mode: ConcatMode,
) -> Result<Outcome, String> {
    let l = load_side(&left, &left_metric, left_radius)?;
    let r = load_side(&right, &right_metric, right_radius)?;
    let tile = l.tile.concat(&r.tile).map_err(|e| e.to_string())?;
    let code = l.code.concat(&r.code).map_err(|e| e.to_string())?;
    let n = tile.dim();
    if !is_tiling_partition(&tile, &code).map_err(|e| e.to_string())? {
        return Err("internal: concatenation failed to tile".into());
    }
    let tiling_out = json!({
        "n": n,
        "D": tile.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "C": code.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    let zero = Vector::zero(n).expect("positive dimension");

    let (certificate, radius) = match mode {
        ConcatMode::Max => {
            if l.radius != r.radius {
                return Err(
                    "max mode requires equal radii; use --mode sum for different radii".into(),
                );
            }
            let w =
                hammtile::weights::d_max_weight(&l.weight, &r.weight).map_err(|e| e.to_string())?;
            (
                json!({ "weight": WeightTableJson::from_table(&w) }),
                l.radius,
            )
        }
        ConcatMode::Sum => {
            let w =
                hammtile::weights::conditional_sum_weight(&l.weight, l.radius, &r.weight, r.radius)
                    .map_err(|e| e.to_string())?;
            (
                json!({ "weight": WeightTableJson::from_table(&w) }),
                l.radius + r.radius,
            )
        }
        ConcatMode::CoveringProduct => {
            let (fl, fr) = both_coverings(&l, &r)?;
            if l.radius != r.radius {
                return Err(
                    "covering-product mode requires equal radii; use saturate-then-product".into(),
                );
            }
            let f = covering_product(&fl, &fr).map_err(|e| e.to_string())?;
            (
                json!({ "covering": CoveringJson::from_family(&f) }),
                l.radius,
            )
        }
        ConcatMode::SaturateThenProduct => {
            let (fl, fr) = both_coverings(&l, &r)?;
            let fl = saturate_covering(&fl, &l.tile).map_err(|e| e.to_string())?;
            let fr = saturate_covering(&fr, &r.tile).map_err(|e| e.to_string())?;
            let f = covering_product(&fl, &fr).map_err(|e| e.to_string())?;
            (json!({ "covering": CoveringJson::from_family(&f) }), 1)
        }
    };

    // the certificate must reconstruct the concatenated tile exactly
    let table = match (certificate.get("weight"), certificate.get("covering")) {
        (Some(w), _) => parse_json::<WeightTableJson>(&w.to_string())?
            .to_table()
            .map_err(|e| e.to_string())?,
        (_, Some(c)) => parse_json::<CoveringJson>(&c.to_string())?
            .to_family()
            .map_err(|e| e.to_string())?
            .f_weight_table(),
        _ => unreachable!("every mode emits a certificate"),
    };
    if table.ball(&zero, radius).members != tile {
        return Err("internal: certificate does not reconstruct the concatenated tile".into());
    }

    let mut out = json!({ "tiling": tiling_out, "radius": radius });
    for (k, v) in certificate.as_object().expect("object").iter() {
        out[k] = v.clone();
    }
    emit(&out);
    Ok(Outcome { positive: true })
}

fn both_coverings(
    l: &ConcatSide,
    r: &ConcatSide,
) -> Result<(CoveringFamily, CoveringFamily), String> {
    match (&l.covering, &r.covering) {
        (Some(a), Some(b)) => Ok((a.clone(), b.clone())),
        _ => Err("covering modes require covering-family metric descriptors on both sides".into()),
    }
}

fn enumerate(n: usize, size: usize, full_rank: bool, tiles_only: bool) -> Result<Outcome, String> {
    let candidates = support_closed_subsets(n, size).map_err(|e| e.to_string())?;
    let kept: Vec<Subset> = candidates
        .into_par_iter()
        .filter(|d| !full_rank || d.gf2_rank() == n)
        .filter(|d| !tiles_only || matches!(find_complement(d), Ok(Some(_))))
        .map(|d| canonical_form(&d).expect("within enumeration bounds"))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    for canon in kept {
        if seen.insert(canon.masks().to_vec()) {
            emit(&SubsetJson::from_subset(&canon));
        }
    }
    Ok(Outcome { positive: true })
}

fn weight_of(metric: PathBuf, vector: String) -> Result<Outcome, String> {
    let metric: MetricJson = load_json(&metric)?;
    let table = metric.to_weight_table().map_err(|e| e.to_string())?;
    let v: Vector = vector
        .parse()
        .map_err(|e: hammtile::hypercube::HypercubeError| e.to_string())?;
    if v.dim() != table.dim() {
        return Err(format!(
            "vector has {} coordinates, metric has {}",
            v.dim(),
            table.dim()
        ));
    }
    emit(&json!({ "vector": v.to_string(), "weight": table.value_of(&v) }));
    Ok(Outcome { positive: true })
}

fn ball(metric: PathBuf, center: String, radius: u32) -> Result<Outcome, String> {
    let metric: MetricJson = load_json(&metric)?;
    let table = metric.to_weight_table().map_err(|e| e.to_string())?;
    let c: Vector = center
        .parse()
        .map_err(|e: hammtile::hypercube::HypercubeError| e.to_string())?;
    if c.dim() != table.dim() {
        return Err(format!(
            "center has {} coordinates, metric has {}",
            c.dim(),
            table.dim()
        ));
    }
    let ball = table.ball(&c, radius);
    emit(&json!({
        "n": table.dim(),
        "center": c.to_string(),
        "radius": radius,
        "vectors": ball.members.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    }));
    Ok(Outcome { positive: true })
}

fn equiv(a: PathBuf, b: PathBuf) -> Result<Outcome, String> {
    let a: WeightTableJson = load_json(&a)?;
    let b: WeightTableJson = load_json(&b)?;
    let a = a.to_table().map_err(|e| e.to_string())?;
    let b = b.to_table().map_err(|e| e.to_string())?;
    if a.dim() != b.dim() {
        return Err(format!("dimension mismatch: {} vs {}", a.dim(), b.dim()));
    }
    let equivalent = decoding_equivalent(&a, &b);
    emit(&json!({ "equivalent": equivalent }));
    Ok(Outcome {
        positive: equivalent,
    })
}

fn poset_search(input: Option<PathBuf>, poset: Option<PathBuf>) -> Result<Outcome, String> {
    let parsed: SubsetJson = parse_json(&read_input(input.as_ref())?)?;
    let d = parsed.to_subset().map_err(|e| e.to_string())?;
    match poset {
        Some(path) => {
            let poset: PosetJson = load_json(&path)?;
            let poset = poset.to_poset().map_err(|e| e.to_string())?;
            if poset.n() != d.dim() {
                return Err(format!(
                    "poset on [{}] does not match dimension {}",
                    poset.n(),
                    d.dim()
                ));
            }
            match poset_ball_radius(&poset, &d) {
                Some(radius) => {
                    emit(&json!({ "radius": radius }));
                    Ok(Outcome { positive: true })
                }
                None => {
                    emit(&json!({ "verdict": "NOT_A_BALL" }));
                    Ok(Outcome { positive: false })
                }
            }
        }
        None => match find_poset_ball(&d).map_err(|e| e.to_string())? {
            Some((poset, radius)) => {
                emit(&json!({ "poset": PosetJson::from_poset(&poset), "radius": radius }));
                Ok(Outcome { positive: true })
            }
            None => {
                emit(&json!({ "verdict": "NO_POSET" }));
                Ok(Outcome { positive: false })
            }
        },
    }
}
