//! `qfkg` — exact verification of rank-graded correlation inequalities on
//! finite distributive lattices.
//!
//! Every subcommand builds a JSON report (the canonical format); `--format
//! text` renders the same JSON for humans. Exit codes: 0 — every check
//! held; 1 — a verified inequality failure (for theorem checks this
//! signals a bug, for `ad-search` a discovery); 2 — usage or input error.
//!
//! Reports are deterministic: the same subcommand, flags, and `--seed`
//! produce byte-identical JSON regardless of `--jobs`.

mod render;

use num::One;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfkg::adsearch::{search_four_function, FourFunctionConfig};
use qfkg::complex::{
    check_intersection_dominance, join_identity, join_restatement, kleitman_scalar,
    SimplicialComplex,
};
use qfkg::error::Error;
use qfkg::fkg::{check_psi_decomposition, check_qfkg, check_qfkg_fishburn, FkgReport, Verdict};
use qfkg::gen::{self, MonotoneKind};
use qfkg::io;
use qfkg::lattice::{IdealLattice, Lattice};
use qfkg::partition::{involution_counts, partition_counts, partitions_up_to};
use qfkg::poly::{QPolynomial, QSeries};
use qfkg::poset::{all_labeled_posets, all_posets_up_to_iso, Poset};
use qfkg::rat::{binomial, factorial, format_q, parse_q, Q};
use qfkg::schubert::{box_grid_isomorphism, check_all_pairs, check_poincare_dominance, BoxLattice,
    Grading};
use qfkg::tables::WeightTable;
use qfkg::young::{
    f_power_dominance, plancherel_dominance, tableau_series, tableau_series_dominance, YoungEval,
};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qfkg",
    version,
    about = "Exact verification of rank-graded correlation inequalities on distributive lattices",
    after_help = "Exit codes: 0 all checks hold; 1 verified inequality failure; 2 usage/input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format (JSON is canonical; text is derived from it)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for batch subcommands (0 = one per CPU); does not
    /// affect report bytes
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Verify E(g)E(h) ≪ E(1)E(gh) on an instance file or a random batch
    Qfkg(QfkgArgs),
    /// Verify the pairwise ψ-decomposition: sign claim and exact aggregation
    Psi(QfkgArgs),
    /// Verify the chain-count-weighted variant (weight μ·m^t/(rank!)^s)
    Fishburn(FishburnArgs),
    /// Verify f-vector dominance for intersections / identities for joins
    Fvector(FvectorArgs),
    /// Verify Poincaré-polynomial dominance on a partitions-in-a-box lattice
    Schubert(SchubertArgs),
    /// Compute tableau-weighted generating series; verify closed-form identities
    Series(SeriesArgs),
    /// Verify the poissonized tableau dominance and its scalar consequence
    Plancherel(PlancherelArgs),
    /// Verify the two-exponent tableau power-series family
    Sample2(Sample2Args),
    /// Search for a counterexample to the graded four-function inequality
    AdSearch(AdSearchArgs),
    /// Run the built-in invariant suite
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct QfkgArgs {
    /// Instance file (poset + mu/g/h tables as JSON)
    #[arg(long, conflicts_with = "random")]
    instance: Option<PathBuf>,
    /// Verify this many randomly generated instances instead
    #[arg(long)]
    random: Option<u64>,
    /// Largest poset size used for random generation (1..=12)
    #[arg(long, default_value_t = 6)]
    max_irreducibles: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct FishburnArgs {
    #[arg(long, conflicts_with = "random")]
    instance: Option<PathBuf>,
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 6)]
    max_irreducibles: usize,
    /// Denominator exponent (rank!^s); defaults to the instance file's value, then 1
    #[arg(long)]
    s: Option<u32>,
    /// Chain-count exponent (m^t); defaults to the instance file's value, then 1
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct FvectorArgs {
    /// Left complex file ({"vertices": …, "facets": …})
    #[arg(long, requires = "right", conflicts_with = "random")]
    left: Option<PathBuf>,
    /// Right complex file; same vertex set → intersection dominance,
    /// disjoint vertex sets → join identity
    #[arg(long, requires = "left")]
    right: Option<PathBuf>,
    /// Verify this many random same-vertex-set pairs instead
    #[arg(long)]
    random: Option<u64>,
    /// Vertex count for random pairs (1..=12)
    #[arg(long, default_value_t = 6)]
    vertices: usize,
    /// Facet candidates per random complex
    #[arg(long, default_value_t = 6)]
    max_facets: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GradingArg {
    /// q^(2·size): Betti numbers of cohomology
    Cohomological,
    /// q^size: plain rank generating function
    Combinatorial,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Grading {
        match g {
            GradingArg::Cohomological => Grading::Cohomological,
            GradingArg::Combinatorial => Grading::Combinatorial,
        }
    }
}

#[derive(Args)]
struct SchubertArgs {
    /// Box height (number of parts)
    #[arg(long)]
    rows: usize,
    /// Box width (largest part)
    #[arg(long)]
    cols: u32,
    /// Check only this pair: first partition, e.g. "2,1" (requires --v)
    #[arg(long, requires = "v")]
    u: Option<String>,
    /// Second partition of the pair
    #[arg(long, requires = "u")]
    v: Option<String>,
    #[arg(long, value_enum, default_value_t = GradingArg::Cohomological)]
    grading: GradingArg,
}

#[derive(Args)]
struct SeriesArgs {
    /// Closed-form identity selector: with k(λ)≡1 and s=1, the exponent t=K
    /// gives Σp(n)zⁿ/n! (K=0), exp(z+z²/2) (K=1), or 1/(1−z) (K=2)
    #[arg(long)]
    k: Option<u32>,
    /// Denominator exponent (n!^s)
    #[arg(long)]
    s: Option<u32>,
    /// Tableau-count exponent (f^t)
    #[arg(long)]
    t: Option<u32>,
    /// Summand descriptor k(λ) (e.g. "size", "hook:1,1", "3/2")
    #[arg(long, default_value = "1")]
    func: String,
    /// Weight descriptor μ(λ)
    #[arg(long, default_value = "1")]
    weight: String,
    #[arg(long, default_value_t = 12)]
    degree: usize,
}

#[derive(Args)]
struct PlancherelArgs {
    /// Poisson rate θ > 0 (rational, e.g. "1/2")
    #[arg(long, default_value = "1")]
    theta: String,
    /// Descriptor for g(λ)
    #[arg(long, default_value = "size")]
    g: String,
    /// Descriptor for h(λ)
    #[arg(long, default_value = "first_part")]
    h: String,
    #[arg(long, default_value_t = 8)]
    degree: usize,
}

#[derive(Args)]
struct Sample2Args {
    /// First exponent (may be negative, not zero)
    #[arg(long, allow_negative_numbers = true)]
    s: i64,
    /// Second exponent (may be negative, not zero)
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
    #[arg(long, default_value_t = 8)]
    degree: usize,
}

#[derive(Args)]
struct AdSearchArgs {
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only pool lattices with at most this many elements
    #[arg(long, default_value_t = 16)]
    max_elements: usize,
    /// Sample the third function instead of repairing it to the feasibility
    /// boundary (repair finds far more feasible quadruples)
    #[arg(long)]
    no_repair: bool,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A finished run: canonical JSON body, overall verdict, and an optional
/// banner printed above text reports (used for search discoveries).
struct Report {
    command: &'static str,
    body: Value,
    ok: bool,
    banner: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Ignore the error if a pool already exists (e.g. under a test harness).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let doc = json!({
        "command": report.command,
        "report": report.body,
        "ok": report.ok,
    });
    let rendered = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(banner) = &report.banner {
                s.push_str(banner);
                s.push('\n');
            }
            s.push_str(&render::render(&doc));
            s
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: &Command) -> Result<Report, Error> {
    match cmd {
        Command::Qfkg(a) => run_qfkg(a),
        Command::Psi(a) => run_psi(a),
        Command::Fishburn(a) => run_fishburn(a),
        Command::Fvector(a) => run_fvector(a),
        Command::Schubert(a) => run_schubert(a),
        Command::Series(a) => run_series(a),
        Command::Plancherel(a) => run_plancherel(a),
        Command::Sample2(a) => run_sample2(a),
        Command::AdSearch(a) => run_adsearch(a),
        Command::Selftest(a) => run_selftest(a),
    }
}

// ---------------------------------------------------------------- helpers

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn lattice_cap() -> usize {
    std::env::var("QFKG_MAX_LATTICE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(qfkg::lattice::DEFAULT_MAX_LATTICE)
}

/// Per-instance seed so the report is independent of --jobs (splitmix64).
fn derive_seed(base: u64, i: u64) -> u64 {
    let mut z = base
        .wrapping_add(i.wrapping_mul(0x9E3779B97F4A7C15))
        .wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn poset_to_json(p: &Poset) -> Value {
    json!({
        "elements": p.labels(),
        "covers": p
            .covers()
            .iter()
            .map(|&(a, b)| json!([p.label(a), p.label(b)]))
            .collect::<Vec<_>>(),
    })
}

fn check_max_irreducibles(m: usize) -> Result<(), Error> {
    if (1..=12).contains(&m) {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "--max-irreducibles must be in 1..=12, got {m}"
        )))
    }
}

/// Random weight for batch runs: even indices use the multiplicative
/// sampler, odd ones the rejection sampler (falling back when the lattice
/// is too large for it).
fn batch_weight(
    lat: &IdealLattice,
    rng: &mut qfkg::gen::ChaCha8Rng,
    i: u64,
) -> (WeightTable, &'static str) {
    if i % 2 == 0 {
        (gen::random_product_weight(lat, rng), "product")
    } else {
        match gen::random_rejection_weight(lat, rng, 2000) {
            Ok(w) => (w, "rejection"),
            Err(_) => (gen::random_product_weight(lat, rng), "product-fallback"),
        }
    }
}

fn batch_pair_kinds(i: u64) -> (MonotoneKind, MonotoneKind, &'static str) {
    match i % 3 {
        0 => (
            MonotoneKind::Increasing,
            MonotoneKind::Increasing,
            "comonotone-increasing",
        ),
        1 => (
            MonotoneKind::Decreasing,
            MonotoneKind::Decreasing,
            "comonotone-decreasing",
        ),
        _ => (
            MonotoneKind::Increasing,
            MonotoneKind::Decreasing,
            "countermonotone",
        ),
    }
}

/// A theorem check failed only if its hypotheses were actually certified.
fn certified_failure(report: &FkgReport) -> bool {
    report.hypothesis_issues.is_empty() && report.verdict == Verdict::Fails
}

fn need_mode(instance: &Option<PathBuf>, random: &Option<u64>) -> Result<(), Error> {
    if instance.is_none() && random.is_none() {
        return Err(Error::Parse(
            "pass --instance FILE or --random N (see --help)".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------- qfkg

fn run_qfkg(args: &QfkgArgs) -> Result<Report, Error> {
    need_mode(&args.instance, &args.random)?;
    if let Some(path) = &args.instance {
        let inst = io::parse_instance_json_capped(&read_file(path)?, lattice_cap())?;
        let fkg = check_qfkg(&inst.lattice, &inst.mu, &inst.g, &inst.h)?;
        let violation = certified_failure(&fkg);
        return Ok(Report {
            command: "qfkg",
            body: json!({
                "mode": "instance",
                "elements": inst.lattice.len(),
                "fkg": to_value(&fkg),
                "certified_failure": violation,
            }),
            ok: !violation,
            banner: None,
        });
    }
    let count = args.random.unwrap();
    check_max_irreducibles(args.max_irreducibles)?;
    let rows: Vec<(Value, bool)> = (0..count)
        .into_par_iter()
        .map(|i| -> Result<(Value, bool), Error> {
            let mut rng = gen::default_rng(derive_seed(args.seed, i));
            let lat = gen::random_ideal_lattice(&mut rng, args.max_irreducibles, 1 << 12);
            let (mu, weight_kind) = batch_weight(&lat, &mut rng, i);
            let (gk, hk, pair_kind) = batch_pair_kinds(i);
            let g = gen::random_monotone_func(&lat, &mut rng, gk);
            let h = gen::random_monotone_func(&lat, &mut rng, hk);
            let fkg = check_qfkg(&lat, &mu, &g, &h)?;
            let holds = fkg.verdict == Verdict::Holds;
            let mut row = json!({
                "index": i,
                "irreducibles": lat.poset().len(),
                "elements": lat.len(),
                "weight": weight_kind,
                "pair": pair_kind,
                "verdict": to_value(&fkg.verdict),
                "direction": to_value(&fkg.direction),
            });
            if !holds {
                row["poset"] = poset_to_json(lat.poset());
                row["fkg"] = to_value(&fkg);
            }
            Ok((row, holds))
        })
        .collect::<Result<_, _>>()?;
    let holds = rows.iter().filter(|(_, ok)| *ok).count();
    let ok = holds == rows.len();
    Ok(Report {
        command: "qfkg",
        body: json!({
            "mode": "random",
            "seed": args.seed,
            "max_irreducibles": args.max_irreducibles,
            "instances": count,
            "holds": holds,
            "failures": rows.len() - holds,
            "results": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- psi

fn run_psi(args: &QfkgArgs) -> Result<Report, Error> {
    need_mode(&args.instance, &args.random)?;
    if let Some(path) = &args.instance {
        let inst = io::parse_instance_json_capped(&read_file(path)?, lattice_cap())?;
        let fkg = check_qfkg(&inst.lattice, &inst.mu, &inst.g, &inst.h)?;
        let psi = check_psi_decomposition(&inst.lattice, &inst.mu, &inst.g, &inst.h)?;
        let violation = !psi.aggregation_exact
            || (fkg.hypothesis_issues.is_empty() && psi.verdict == Verdict::Fails);
        return Ok(Report {
            command: "psi",
            body: json!({
                "mode": "instance",
                "elements": inst.lattice.len(),
                "hypothesis_issues": fkg.hypothesis_issues,
                "psi": to_value(&psi),
                "certified_failure": violation,
            }),
            ok: !violation,
            banner: None,
        });
    }
    let count = args.random.unwrap();
    check_max_irreducibles(args.max_irreducibles)?;
    let rows: Vec<(Value, bool)> = (0..count)
        .into_par_iter()
        .map(|i| -> Result<(Value, bool), Error> {
            let mut rng = gen::default_rng(derive_seed(args.seed, i));
            let lat = gen::random_ideal_lattice(&mut rng, args.max_irreducibles, 64);
            let (mu, weight_kind) = batch_weight(&lat, &mut rng, i);
            let (gk, hk, pair_kind) = batch_pair_kinds(i);
            let g = gen::random_monotone_func(&lat, &mut rng, gk);
            let h = gen::random_monotone_func(&lat, &mut rng, hk);
            let psi = check_psi_decomposition(&lat, &mu, &g, &h)?;
            let holds = psi.verdict == Verdict::Holds && psi.aggregation_exact;
            let mut row = json!({
                "index": i,
                "elements": lat.len(),
                "weight": weight_kind,
                "pair": pair_kind,
                "verdict": to_value(&psi.verdict),
                "min_psi": format_q(&psi.min_value),
                "aggregation_exact": psi.aggregation_exact,
            });
            if !holds {
                row["poset"] = poset_to_json(lat.poset());
                row["psi"] = to_value(&psi);
            }
            Ok((row, holds))
        })
        .collect::<Result<_, _>>()?;
    let holds = rows.iter().filter(|(_, ok)| *ok).count();
    let ok = holds == rows.len();
    Ok(Report {
        command: "psi",
        body: json!({
            "mode": "random",
            "seed": args.seed,
            "max_irreducibles": args.max_irreducibles,
            "instances": count,
            "holds": holds,
            "failures": rows.len() - holds,
            "results": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- fishburn

fn run_fishburn(args: &FishburnArgs) -> Result<Report, Error> {
    need_mode(&args.instance, &args.random)?;
    if let Some(path) = &args.instance {
        let inst = io::parse_instance_json_capped(&read_file(path)?, lattice_cap())?;
        let s = args.s.or(inst.s).unwrap_or(1);
        let t = args.t.or(inst.t).unwrap_or(1);
        let fkg = check_qfkg_fishburn(&inst.lattice, &inst.mu, s, t, &inst.g, &inst.h)?;
        let violation = certified_failure(&fkg);
        return Ok(Report {
            command: "fishburn",
            body: json!({
                "mode": "instance",
                "elements": inst.lattice.len(),
                "s": s,
                "t": t,
                "fkg": to_value(&fkg),
                "certified_failure": violation,
            }),
            ok: !violation,
            banner: None,
        });
    }
    let count = args.random.unwrap();
    check_max_irreducibles(args.max_irreducibles)?;
    let (s, t) = (args.s.unwrap_or(1), args.t.unwrap_or(1));
    if s > t {
        return Err(Error::BadExponents {
            s: s as i64,
            t: t as i64,
        });
    }
    let rows: Vec<(Value, bool)> = (0..count)
        .into_par_iter()
        .map(|i| -> Result<(Value, bool), Error> {
            let mut rng = gen::default_rng(derive_seed(args.seed, i));
            let lat = gen::random_ideal_lattice(&mut rng, args.max_irreducibles, 1 << 10);
            let (mu, weight_kind) = batch_weight(&lat, &mut rng, i);
            let (gk, hk, pair_kind) = batch_pair_kinds(i);
            let g = gen::random_monotone_func(&lat, &mut rng, gk);
            let h = gen::random_monotone_func(&lat, &mut rng, hk);
            let fkg = check_qfkg_fishburn(&lat, &mu, s, t, &g, &h)?;
            // For log-supermodular μ the scaled weight stays log-supermodular,
            // so any hypothesis issue here is itself a failure.
            let holds = fkg.verdict == Verdict::Holds && fkg.hypothesis_issues.is_empty();
            let mut row = json!({
                "index": i,
                "elements": lat.len(),
                "weight": weight_kind,
                "pair": pair_kind,
                "verdict": to_value(&fkg.verdict),
                "scaled_weight_log_supermodular": fkg.hypothesis_issues.is_empty(),
            });
            if !holds {
                row["poset"] = poset_to_json(lat.poset());
                row["fkg"] = to_value(&fkg);
            }
            Ok((row, holds))
        })
        .collect::<Result<_, _>>()?;
    let holds = rows.iter().filter(|(_, ok)| *ok).count();
    let ok = holds == rows.len();
    Ok(Report {
        command: "fishburn",
        body: json!({
            "mode": "random",
            "seed": args.seed,
            "max_irreducibles": args.max_irreducibles,
            "s": s,
            "t": t,
            "instances": count,
            "holds": holds,
            "failures": rows.len() - holds,
            "results": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- fvector

fn kleitman_json(delta: &SimplicialComplex, gamma: &SimplicialComplex) -> Result<Value, Error> {
    let (lhs, rhs, holds) = kleitman_scalar(delta, gamma)?;
    Ok(json!({
        "lhs": format_q(&lhs),
        "rhs": format_q(&rhs),
        "holds": holds,
    }))
}

/// Intersection dominance + scalar specialization (+ the join restatement
/// when the doubled vertex set still fits). Returns (body, all_hold).
fn fvector_pair(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
) -> Result<(Value, bool), Error> {
    let inter = check_intersection_dominance(delta, gamma)?;
    let kleitman = kleitman_json(delta, gamma)?;
    let mut holds =
        inter.fkg.verdict == Verdict::Holds && kleitman["holds"] == Value::Bool(true);
    let restatement = if delta.vertex_count() * 2 <= qfkg::complex::MAX_FACE_VERTICES {
        let rep = join_restatement(delta, gamma)?;
        holds &= rep.verdict == Verdict::Holds;
        to_value(&rep)
    } else {
        Value::String(
            "skipped: doubled vertex set exceeds the 20-vertex face cap".into(),
        )
    };
    let body = json!({
        "vertices": delta.vertex_count(),
        "intersection": to_value(&inter),
        "kleitman": kleitman,
        "join_restatement": restatement,
    });
    Ok((body, holds))
}

fn run_fvector(args: &FvectorArgs) -> Result<Report, Error> {
    if args.left.is_none() && args.random.is_none() {
        return Err(Error::Parse(
            "pass --left/--right FILES or --random N (see --help)".into(),
        ));
    }
    if let (Some(lp), Some(rp)) = (&args.left, &args.right) {
        let delta = io::parse_complex_json(&read_file(lp)?)?;
        let gamma = io::parse_complex_json(&read_file(rp)?)?;
        if delta.labels() == gamma.labels() {
            let (body, holds) = fvector_pair(&delta, &gamma)?;
            return Ok(Report {
                command: "fvector",
                body: json!({"mode": "intersection", "pair": body}),
                ok: holds,
                banner: None,
            });
        }
        // Distinct vertex sets: join mode (overlap is rejected by the library).
        let join = join_identity(&delta, &gamma)?;
        let ok = join.holds;
        return Ok(Report {
            command: "fvector",
            body: json!({"mode": "join", "join": to_value(&join)}),
            ok,
            banner: None,
        });
    }
    let count = args.random.unwrap();
    if !(1..=12).contains(&args.vertices) {
        return Err(Error::Parse(format!(
            "--vertices must be in 1..=12, got {}",
            args.vertices
        )));
    }
    let labels: Vec<String> = (0..args.vertices).map(|i| format!("v{i}")).collect();
    let rows: Vec<(Value, bool)> = (0..count)
        .into_par_iter()
        .map(|i| -> Result<(Value, bool), Error> {
            let mut rng = gen::default_rng(derive_seed(args.seed, i));
            let delta = gen::random_complex(&labels, &mut rng, args.max_facets);
            let gamma = gen::random_complex(&labels, &mut rng, args.max_facets);
            let (pair_body, mut holds) = fvector_pair(&delta, &gamma)?;
            let mut row = json!({"index": i, "pair": pair_body});
            if i % 5 == 0 && args.vertices * 2 <= qfkg::complex::MAX_FACE_VERTICES {
                let join = join_identity(
                    &delta.with_suffixed_labels("'"),
                    &gamma.with_suffixed_labels("''"),
                )?;
                holds &= join.holds;
                row["join_identity_holds"] = Value::Bool(join.holds);
                if !join.holds {
                    row["join"] = to_value(&join);
                }
            }
            Ok((row, holds))
        })
        .collect::<Result<_, _>>()?;
    let holds = rows.iter().filter(|(_, ok)| *ok).count();
    let ok = holds == rows.len();
    Ok(Report {
        command: "fvector",
        body: json!({
            "mode": "random",
            "seed": args.seed,
            "vertices": args.vertices,
            "instances": count,
            "holds": holds,
            "failures": rows.len() - holds,
            "results": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- schubert

fn run_schubert(args: &SchubertArgs) -> Result<Report, Error> {
    let grading: Grading = args.grading.into();
    let lat = BoxLattice::new(args.rows, args.cols)?;
    if let (Some(u), Some(v)) = (&args.u, &args.v) {
        let u = io::parse_partition_text(u)?;
        let v = io::parse_partition_text(v)?;
        let rep = check_poincare_dominance(&lat, &u, &v, grading)?;
        let ok = rep.fkg.verdict == Verdict::Holds;
        return Ok(Report {
            command: "schubert",
            body: json!({
                "mode": "pair",
                "rows": args.rows,
                "cols": args.cols,
                "grading": to_value(&grading),
                "pair": to_value(&rep),
            }),
            ok,
            banner: None,
        });
    }
    let all = check_all_pairs(&lat, grading)?;
    let p_full = lat.full_poincare(grading);
    let at_one = p_full.eval_one();
    let expected = Q::from_integer(binomial(
        args.rows as u64 + args.cols as u64,
        args.rows as u64,
    ));
    let point_count_matches = at_one == expected;
    let ok = all.all_hold && point_count_matches;
    Ok(Report {
        command: "schubert",
        body: json!({
            "mode": "all-pairs",
            "rows": args.rows,
            "cols": args.cols,
            "grading": to_value(&grading),
            "all_pairs": to_value(&all),
            "poincare_full": to_value(&p_full),
            "poincare_at_one": format_q(&at_one),
            "expected_binomial": format_q(&expected),
            "point_count_matches": point_count_matches,
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- series

fn series_coeff_strings(series: &QSeries) -> Vec<String> {
    series.coeffs().iter().map(format_q).collect()
}

/// Independent closed forms for the three identity cases (t = 0, 1, 2 with
/// s = 1 and k ≡ 1).
fn series_closed_form(t: u32, degree: usize) -> QSeries {
    match t {
        0 => {
            let p = partition_counts(degree as u64);
            QSeries::from_fn(degree, |n| {
                Q::new(p[n].clone(), factorial(n as u64))
            })
        }
        1 => {
            let mut zpoly = QPolynomial::zero();
            zpoly.add_term(&Q::one(), 1);
            zpoly.add_term(&Q::new(1.into(), 2.into()), 2);
            QSeries::from_poly(&zpoly, degree)
                .exp()
                .expect("z + z²/2 has zero constant term")
        }
        _ => QSeries::from_fn(degree, |_| Q::one()),
    }
}

fn run_series(args: &SeriesArgs) -> Result<Report, Error> {
    if let Some(k) = args.k {
        if k > 2 {
            return Err(Error::Parse(format!(
                "--k selects a closed-form identity and must be 0, 1, or 2, got {k}"
            )));
        }
        let s = args.s.unwrap_or(1);
        let t = args.t.unwrap_or(k);
        if s != 1 || t != k {
            return Err(Error::Parse(format!(
                "identity --k {k} requires --s 1 --t {k} (got s={s}, t={t})"
            )));
        }
        if args.func != "1" || args.weight != "1" {
            return Err(Error::Parse(
                "identity mode fixes k(λ) ≡ 1 and μ(λ) ≡ 1; drop --func/--weight".into(),
            ));
        }
        let one = YoungEval::Const(Q::one());
        let series = tableau_series(&one, &one, s, t, args.degree)?;
        let closed = series_closed_form(t, args.degree);
        let matches = series == closed;
        let name = ["sum p(n) z^n/n!", "exp(z + z^2/2)", "1/(1-z)"][t as usize];
        return Ok(Report {
            command: "series",
            body: json!({
                "mode": "identity",
                "s": s,
                "t": t,
                "degree": args.degree,
                "closed_form": name,
                "coefficients": series_coeff_strings(&series),
                "closed_form_coefficients": series_coeff_strings(&closed),
                "identity_holds": matches,
            }),
            ok: matches,
            banner: None,
        });
    }
    let (s, t) = match (args.s, args.t) {
        (Some(s), Some(t)) => (s, t),
        _ => {
            return Err(Error::Parse(
                "pass --s and --t (or --k for a closed-form identity)".into(),
            ))
        }
    };
    let func = YoungEval::parse(&args.func)?;
    let weight = YoungEval::parse(&args.weight)?;
    let series = tableau_series(&weight, &func, s, t, args.degree)?;
    Ok(Report {
        command: "series",
        body: json!({
            "mode": "general",
            "s": s,
            "t": t,
            "degree": args.degree,
            "func": args.func,
            "weight": args.weight,
            "coefficients": series_coeff_strings(&series),
        }),
        ok: true,
        banner: None,
    })
}

// ---------------------------------------------------------------- plancherel

fn run_plancherel(args: &PlancherelArgs) -> Result<Report, Error> {
    let theta = parse_q(&args.theta)?;
    let g = YoungEval::parse(&args.g)?;
    let h = YoungEval::parse(&args.h)?;
    let rep = plancherel_dominance(&theta, &g, &h, args.degree)?;
    let violation = rep.series.hypothesis_issues.is_empty()
        && (rep.series.verdict == Verdict::Fails || !rep.scalar_holds);
    Ok(Report {
        command: "plancherel",
        body: json!({
            "theta": format_q(&theta),
            "g": args.g,
            "h": args.h,
            "degree": args.degree,
            "report": to_value(&rep),
            "certified_failure": violation,
        }),
        ok: !violation,
        banner: None,
    })
}

// ---------------------------------------------------------------- sample2

fn run_sample2(args: &Sample2Args) -> Result<Report, Error> {
    let rep = f_power_dominance(args.s, args.t, args.degree)?;
    let ok = rep.verdict == Verdict::Holds;
    Ok(Report {
        command: "sample2",
        body: json!({
            "s": args.s,
            "t": args.t,
            "degree": args.degree,
            "report": to_value(&rep),
        }),
        ok,
        banner: None,
    })
}

// ---------------------------------------------------------------- ad-search

fn adsearch_pool(max_elements: usize) -> Result<Vec<IdealLattice>, Error> {
    let mut pool = Vec::new();
    for n in 1..=5 {
        for p in all_posets_up_to_iso(n)? {
            let lat = IdealLattice::from_poset(&p)?;
            if lat.len() >= 2 && lat.len() <= max_elements {
                pool.push(lat);
            }
        }
    }
    if pool.is_empty() {
        return Err(Error::Parse(format!(
            "--max-elements {max_elements} leaves no usable lattices (need at least 2)"
        )));
    }
    Ok(pool)
}

fn run_adsearch(args: &AdSearchArgs) -> Result<Report, Error> {
    let pool = adsearch_pool(args.max_elements)?;
    let cfg = FourFunctionConfig {
        samples: args.samples,
        seed: args.seed,
        repair: !args.no_repair,
    };
    let outcome = search_four_function(&pool, &cfg)?;
    let banner = outcome.violation.as_ref().map(|v| v.to_string());
    let ok = outcome.violation.is_none();
    Ok(Report {
        command: "ad-search",
        body: json!({
            "pool_lattices": pool.len(),
            "samples": args.samples,
            "seed": args.seed,
            "repair": cfg.repair,
            "examined": outcome.examined,
            "feasible": outcome.feasible,
            "counterexample_found": !ok,
            "counterexample": outcome.violation.as_ref().map(to_value),
            "conclusion": if ok {
                "no counterexample found"
            } else {
                "COUNTEREXAMPLE FOUND — see `counterexample` for the full instance"
            },
        }),
        ok,
        banner,
    })
}

// ---------------------------------------------------------------- selftest

struct Suite {
    checks: Vec<Value>,
    all_ok: bool,
}

impl Suite {
    fn new() -> Self {
        Suite {
            checks: Vec::new(),
            all_ok: true,
        }
    }

    fn push(&mut self, name: &str, ok: bool, detail: String) {
        self.checks.push(json!({
            "name": name,
            "ok": ok,
            "detail": detail,
        }));
        self.all_ok &= ok;
    }
}

fn run_selftest(args: &SelftestArgs) -> Result<Report, Error> {
    let mut suite = Suite::new();

    let labeled: Vec<usize> = (0..=4)
        .map(|n| all_labeled_posets(n).map(|v| v.len()))
        .collect::<Result<_, _>>()?;
    suite.push(
        "labeled-poset-counts",
        labeled == [1, 1, 3, 19, 219],
        format!("{labeled:?} (want [1, 1, 3, 19, 219])"),
    );

    let unlabeled: Vec<usize> = (0..=5)
        .map(|n| all_posets_up_to_iso(n).map(|v| v.len()))
        .collect::<Result<_, _>>()?;
    suite.push(
        "unlabeled-poset-counts",
        unlabeled == [1, 1, 2, 5, 16, 63],
        format!("{unlabeled:?} (want [1, 1, 2, 5, 16, 63])"),
    );

    let cube = IdealLattice::from_poset(&Poset::antichain(Poset::default_labels(3))?)?;
    suite.push(
        "boolean-cube",
        cube.len() == 8 && cube.height() == 3,
        format!("antichain(3) ideals: {} elements, height {}", cube.len(), cube.height()),
    );

    let mut lattice_laws = true;
    for i in 0..10u64 {
        let mut rng = gen::default_rng(derive_seed(args.seed, 1000 + i));
        let lat = gen::random_ideal_lattice(&mut rng, 6, 256);
        lattice_laws &= qfkg::lattice::distributivity_violation(&lat, derive_seed(args.seed, i))
            .is_none();
        lattice_laws &= qfkg::lattice::modular_rank_violation(&lat).is_none();
    }
    suite.push(
        "lattice-laws",
        lattice_laws,
        "distributivity and rank modularity on 10 random ideal lattices".into(),
    );

    let mut hooks_ok = true;
    for lams in partitions_up_to(8) {
        for lam in lams {
            hooks_ok &= lam.tableaux_count() == lam.tableaux_count_bruteforce()?;
        }
    }
    suite.push(
        "hook-formula-vs-bruteforce",
        hooks_ok,
        "all partitions of size <= 8".into(),
    );

    let inv = involution_counts(10);
    let mut moments_ok = true;
    for (n, lams) in partitions_up_to(10).iter().enumerate() {
        let sq: num::BigInt = lams.iter().map(|l| {
            let f = l.tableaux_count();
            &f * &f
        }).sum();
        let lin: num::BigInt = lams.iter().map(|l| l.tableaux_count()).sum();
        moments_ok &= sq == factorial(n as u64) && lin == inv[n];
    }
    suite.push(
        "tableau-moments",
        moments_ok,
        "sum f^2 = n! and sum f = involutions(n) for n <= 10".into(),
    );

    let mut identities_ok = true;
    let one = YoungEval::Const(Q::one());
    for t in 0..=2u32 {
        let series = tableau_series(&one, &one, 1, t, 8)?;
        identities_ok &= series == series_closed_form(t, 8);
    }
    suite.push(
        "series-identities",
        identities_ok,
        "t = 0, 1, 2 against pentagonal / exp / geometric closed forms, degree 8".into(),
    );

    let mut qfkg_ok = true;
    for i in 0..24u64 {
        let mut rng = gen::default_rng(derive_seed(args.seed, 2000 + i));
        let lat = gen::random_ideal_lattice(&mut rng, 5, 64);
        let (mu, _) = batch_weight(&lat, &mut rng, i);
        let (gk, hk, _) = batch_pair_kinds(i);
        let g = gen::random_monotone_func(&lat, &mut rng, gk);
        let h = gen::random_monotone_func(&lat, &mut rng, hk);
        let fkg = check_qfkg(&lat, &mu, &g, &h)?;
        qfkg_ok &= fkg.verdict == Verdict::Holds;
        let psi = check_psi_decomposition(&lat, &mu, &g, &h)?;
        qfkg_ok &= psi.verdict == Verdict::Holds && psi.aggregation_exact;
        let fb = check_qfkg_fishburn(&lat, &mu, 1, 1, &g, &h)?;
        qfkg_ok &= fb.verdict == Verdict::Holds;
    }
    suite.push(
        "qfkg-psi-fishburn-random",
        qfkg_ok,
        "24 random instances, monotone pairs of both orientations".into(),
    );

    let labels: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    let mut fvec_ok = true;
    for i in 0..10u64 {
        let mut rng = gen::default_rng(derive_seed(args.seed, 3000 + i));
        let delta = gen::random_complex(&labels, &mut rng, 5);
        let gamma = gen::random_complex(&labels, &mut rng, 5);
        let (_, holds) = fvector_pair(&delta, &gamma)?;
        fvec_ok &= holds;
    }
    suite.push(
        "fvector-random",
        fvec_ok,
        "10 random complex pairs on 6 vertices".into(),
    );

    let boxl = BoxLattice::new(2, 2)?;
    let all = check_all_pairs(&boxl, Grading::Cohomological)?;
    let p1 = boxl.full_poincare(Grading::Cohomological).eval_one();
    suite.push(
        "schubert-2x2",
        all.all_hold && p1 == Q::from_integer(6.into()),
        format!("all {} pairs hold; P(1) = {}", all.pairs, format_q(&p1)),
    );

    let mut iso_ok = true;
    for d in 1..=3 {
        iso_ok &= box_grid_isomorphism(d, d as u32)?.holds;
    }
    suite.push(
        "box-grid-isomorphism",
        iso_ok,
        "d x d boxes vs grid-poset ideals, d <= 3".into(),
    );

    let power_pos = f_power_dominance(1, 1, 6)?;
    let power_neg = f_power_dominance(1, -1, 6)?;
    suite.push(
        "power-family",
        power_pos.verdict == Verdict::Holds && power_neg.verdict == Verdict::Holds,
        "(s,t) = (1,1) forward and (1,-1) reversed, degree 6".into(),
    );

    let plan = plancherel_dominance(
        &Q::one(),
        &YoungEval::Size,
        &YoungEval::FirstPart,
        6,
    )?;
    suite.push(
        "plancherel",
        plan.series.verdict == Verdict::Holds && plan.scalar_holds,
        "theta = 1, g = size, h = first_part, degree 6".into(),
    );

    let dom = tableau_series_dominance(
        &one,
        &YoungEval::Size,
        &YoungEval::NumParts,
        1,
        1,
        6,
    )?;
    suite.push(
        "tableau-series-dominance",
        dom.verdict == Verdict::Holds,
        "mu = 1, g = size, h = num_parts, (s,t) = (1,1), degree 6".into(),
    );

    let pool = adsearch_pool(16)?;
    let outcome = search_four_function(
        &pool,
        &FourFunctionConfig {
            samples: 200,
            seed: args.seed,
            repair: true,
        },
    )?;
    suite.push(
        "ad-search-smoke",
        outcome.violation.is_none(),
        format!(
            "200 samples, {} feasible, {}",
            outcome.feasible,
            if outcome.violation.is_none() {
                "no counterexample"
            } else {
                "counterexample found (a discovery, not a bug — rerun `qfkg ad-search`)"
            }
        ),
    );

    let passed = suite
        .checks
        .iter()
        .filter(|c| c["ok"] == Value::Bool(true))
        .count();
    let total = suite.checks.len();
    let ok = suite.all_ok;
    Ok(Report {
        command: "selftest",
        body: json!({
            "seed": args.seed,
            "passed": passed,
            "total": total,
            "checks": suite.checks,
        }),
        ok,
        banner: None,
    })
}
