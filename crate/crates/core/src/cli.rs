//! Command-line front end. The `ringbounds` binary only parses arguments and
//! prints; everything else happens in [`run`].

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{
    all_overweight_bounds, gilbert_varshamov_overweight, johnson_homogeneous,
    plotkin_distance_corollary, plotkin_field, plotkin_homogeneous, plotkin_overweight,
    sphere_packing_overweight, BoundKind, BoundReport,
};
use crate::geometry::{
    ball_enumerate, ball_volume, ball_volume_overweight, sphere_size_overweight, Code, LoadedCode,
    Word, DEFAULT_ENUMERATION_CAP,
};
use crate::rational::{self, Rational};
use crate::report::{bound_grid, emit_bounds, json as json_doc, Format, Table};
use crate::ring::{FiniteRing, RingSpec, DEFAULT_ORDER_CAP, ORDER_CAP_ENV};
use crate::search::{
    greedy_gv, list_profile, max_code, MaxCodeOptions, SearchResult, DEFAULT_NODE_BUDGET,
    DEFAULT_SEARCH_CAP,
};
use crate::verify::{
    check_hamming_average, check_maxwt_on_ring, check_pair_sum, check_probineq, harness_codes,
    johnson_suite, maxwt_suite, pair_sum_suite, probineq_suite, verify_johnson, CheckReport,
    CheckStatus, Distribution, SuiteReport,
};
use crate::weights::{
    self, eta, hamming, lee, overweight, solve_homogeneous, triangle_violation, HomogeneousOutcome,
    IdealConstraints, WeightFunction,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "ringbounds",
    version,
    about = "Bounds and exhaustive searches for codes over finite rings"
)]
pub struct Cli {
    /// Largest ring order that will be tabulated.
    #[arg(long, global = true, env = ORDER_CAP_ENV, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure of a ring: units, locality, ideals, associate classes.
    Ring(RingArgs),
    /// Weight tables, including the homogeneous-weight solver.
    Weights(WeightsArgs),
    /// Ball and sphere sizes.
    Ball(BallArgs),
    /// Evaluate code bounds.
    Bounds(BoundsArgs),
    /// Greedy and exact code search, list profiles.
    Search(SearchArgs),
    /// Check the inequalities behind the bounds.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct RingArgs {
    #[arg(long)]
    pub ring: String,
    /// Also list every element.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightName {
    Hamming,
    Lee,
    Overweight,
    Homogeneous,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_enum, default_value_t = WeightName::Overweight)]
    pub weight: WeightName,
    /// Shorthand for `--weight homogeneous`.
    #[arg(long)]
    pub homogeneous: bool,
    /// Average weight of the homogeneous weight.
    #[arg(long, default_value = "1")]
    pub gamma: String,
    /// Constrain the homogeneous solve with principal ideals only.
    #[arg(long)]
    pub principal_only: bool,
    /// Custom weight table (`index,label,weight` CSV); overrides `--weight`.
    #[arg(long)]
    pub weight_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    #[arg(long)]
    pub ring: String,
    #[command(flatten)]
    pub weight: WeightArgs,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(short)]
    pub n: usize,
    #[arg(long)]
    pub radius: String,
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Count by enumerating the ball around `--center` as well.
    #[arg(long)]
    pub brute: bool,
    /// Center for `--brute`, as a JSON index list; defaults to zero.
    #[arg(long)]
    pub center: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    PlotkinOverweight,
    SpherePacking,
    Gv,
    PlotkinField,
    PlotkinHomogeneous,
    PlotkinDistance,
    Johnson,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(short)]
    pub n: usize,
    /// Minimum distance; fractional values allowed for homogeneous bounds.
    #[arg(short)]
    pub d: Option<String>,
    /// Every overweight bound (the default when `--bound` is absent).
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum)]
    pub bound: Option<BoundName>,
    /// Grid over lengths `1..=n` and distances `1..=2n` (or `1..=d`).
    #[arg(long)]
    pub grid: bool,
    #[arg(long, default_value = "1")]
    pub gamma: String,
    #[arg(long, default_value = "0")]
    pub rho: String,
    /// Alphabet size for `plotkin-field` (defaults to the ring order).
    #[arg(long)]
    pub q: Option<u64>,
    /// Code size for `plotkin-distance`.
    #[arg(long)]
    pub size: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    Greedy,
    Max,
    Profile,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(value_enum)]
    pub mode: SearchMode,
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(short)]
    pub n: Option<usize>,
    #[arg(short)]
    pub d: Option<String>,
    #[command(flatten)]
    pub weight: WeightArgs,
    #[arg(long, default_value = "lexicographic")]
    pub ordering: String,
    /// Words the code must contain, as a JSON list of index lists.
    #[arg(long)]
    pub seed_words: Option<String>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    pub cap: usize,
    /// Write the code file here and the certification report next to it.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Code file for `profile`.
    #[arg(long)]
    pub code: Option<PathBuf>,
    /// Codewords for `profile`, as a JSON list of index lists.
    #[arg(long)]
    pub words: Option<String>,
    /// Absolute radius for `profile`.
    #[arg(long)]
    pub radius: Option<String>,
    /// Relative radius for `profile`; the ball has radius `ρn`.
    #[arg(long)]
    pub rho: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyCheck {
    HammingAverage,
    Probineq,
    PairSum,
    Maxwt,
    Johnson,
    Suite,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: VerifyCheck,
    /// Ring spec; repeatable for `suite`.
    #[arg(long)]
    pub ring: Vec<String>,
    /// Subset for `hamming-average`, as a JSON index list.
    #[arg(long)]
    pub subset: Option<String>,
    /// Integer masses per element, as a JSON list; defaults to uniform.
    #[arg(long)]
    pub dist: Option<String>,
    #[arg(long)]
    pub code: Option<PathBuf>,
    /// Codewords as a JSON list of index lists (alternative to `--code`).
    #[arg(long)]
    pub words: Option<String>,
    #[arg(long, default_value = "1")]
    pub gamma: String,
    #[arg(long, default_value = "0")]
    pub rho: String,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Master seed; every random choice derives from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    pub cap: usize,
}

/// How a run ended, mapped to the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// 0
    Success,
    /// 1: everything computed, but no hypothesis held.
    NotApplicable,
    /// 2: an inequality was violated.
    Violation,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::NotApplicable => 1,
            Status::Violation => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: Status,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            status: Status::Success,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let go = || match &cli.command {
        Command::Ring(a) => ring_cmd(cli, a),
        Command::Weights(a) => weights_cmd(cli, a),
        Command::Ball(a) => ball_cmd(cli, a),
        Command::Bounds(a) => bounds_cmd(cli, a),
        Command::Search(a) => search_cmd(cli, a),
        Command::Verify(a) => verify_cmd(cli, a),
    };
    match cli.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start {w} workers: {e}")))?
            .install(go),
        None => go(),
    }
}

fn load_ring(cli: &Cli, spec: &str) -> Result<FiniteRing> {
    FiniteRing::build(&spec.parse::<RingSpec>()?, cli.order_cap)
}

fn required<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("missing {flag}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad {what}: {e}")))
}

fn integer_distance(d: &Rational) -> Result<usize> {
    if !d.is_integer() || d < &rational::int(0) {
        return Err(Error::InvalidArgument(format!(
            "this bound needs a nonnegative integer distance, got {}",
            rational::render(d)
        )));
    }
    rational::floor(d)
        .try_into()
        .map_err(|_| Error::InvalidArgument("distance too large".into()))
}

fn kv(fields: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Json => json_doc(&Value::Object(
            fields
                .iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
                .collect(),
        )),
        _ => {
            let mut t = Table::new(["field", "value"]);
            for (k, v) in fields {
                t.push([k.to_string(), v.clone()]);
            }
            t.render(format)
        }
    }
}

fn ring_cmd(cli: &Cli, a: &RingArgs) -> Result<Outcome> {
    let ring = load_ring(cli, &a.ring)?;
    let loc = ring.locality();
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    let eta = match eta(&ring) {
        Ok(e) => rational::render(&e),
        Err(_) => "-".into(),
    };
    let fields = [
        ("ring", ring.name().to_string()),
        ("order", ring.order().to_string()),
        ("commutative", ring.is_commutative().to_string()),
        ("units", ring.unit_count().to_string()),
        ("nonzero_nonunits", ring.nonzero_nonunit_count().to_string()),
        ("local", loc.is_local.to_string()),
        ("maximal_ideal_order", opt(loc.maximal_ideal_order())),
        ("residue_field_order", opt(loc.residue_field_order)),
        ("eta", eta),
        ("left_ideals", ring.left_ideals().len().to_string()),
        (
            "associate_classes",
            ring.associate_classes().len().to_string(),
        ),
    ];
    let mut out = kv(&fields, cli.format);
    if a.elements {
        let mut t = Table::new(["index", "label", "unit"]);
        for x in 0..ring.order() {
            t.push([
                x.to_string(),
                ring.label(x).to_string(),
                ring.is_unit(x).to_string(),
            ]);
        }
        out.push_str(&t.render(cli.format));
    }
    Ok(Outcome::ok(out))
}

/// Resolves the weight flags; `Ok(Err(summary))` when the homogeneous
/// system has no unique nonnegative solution.
fn resolve_weight(
    ring: &FiniteRing,
    a: &WeightArgs,
) -> Result<std::result::Result<WeightFunction, String>> {
    if let Some(path) = &a.weight_file {
        return Ok(Ok(WeightFunction::from_csv(
            ring,
            &std::fs::read_to_string(path)?,
        )?));
    }
    let name = if a.homogeneous {
        WeightName::Homogeneous
    } else {
        a.weight
    };
    Ok(Ok(match name {
        WeightName::Hamming => hamming(ring),
        WeightName::Lee => lee(ring)?,
        WeightName::Overweight => overweight(ring),
        WeightName::Homogeneous => {
            let constraints = if a.principal_only {
                IdealConstraints::PrincipalOnly
            } else {
                IdealConstraints::AllLeftIdeals
            };
            let report = solve_homogeneous(ring, &rational::parse(&a.gamma)?, constraints)?;
            let summary = report.summary();
            match report.outcome {
                HomogeneousOutcome::Unique(w) => w,
                _ => return Ok(Err(summary)),
            }
        }
    }))
}

fn weight_or_fail(ring: &FiniteRing, a: &WeightArgs) -> Result<WeightFunction> {
    resolve_weight(ring, a)?.map_err(Error::InvalidArgument)
}

fn weights_cmd(cli: &Cli, a: &WeightsArgs) -> Result<Outcome> {
    let ring = load_ring(cli, &a.ring)?;
    let w = match resolve_weight(&ring, &a.weight)? {
        Ok(w) => w,
        Err(summary) => {
            let output = match cli.format {
                Format::Json => {
                    json_doc(&json!({ "ring": ring.name(), "weight": null, "report": summary }))
                }
                _ => format!("{summary}\n"),
            };
            return Ok(Outcome {
                output,
                status: Status::NotApplicable,
            });
        }
    };
    let violation = triangle_violation(&ring, &w);
    let output = match cli.format {
        Format::Csv => w.to_csv(&ring),
        Format::Json => json_doc(&json!({
            "ring": ring.name(),
            "kind": w.kind().to_string(),
            "gamma": rational::render(w.gamma()),
            "weights": w.table().iter().map(rational::render).collect::<Vec<_>>(),
            "triangle_inequality": violation.is_none(),
            "triangle_violation": violation.map(|(x, y)| [x, y]),
        })),
        Format::Table => {
            let mut t = Table::new(["index", "label", "weight"]);
            for x in 0..ring.order() {
                t.push([
                    x.to_string(),
                    ring.label(x).to_string(),
                    rational::render(w.weight(x)),
                ]);
            }
            let mut out = t.to_text();
            out.push_str(&format!(
                "average weight: {}\n",
                rational::render(w.gamma())
            ));
            out.push_str(&match violation {
                None => "triangle inequality: holds\n".to_string(),
                Some((x, y)) => format!(
                    "triangle inequality: fails at x={}, y={}\n",
                    ring.label(x),
                    ring.label(y)
                ),
            });
            out
        }
    };
    Ok(Outcome::ok(output))
}

fn ball_cmd(cli: &Cli, a: &BallArgs) -> Result<Outcome> {
    let ring = load_ring(cli, &a.ring)?;
    let w = weight_or_fail(&ring, &a.weight)?;
    let radius = rational::parse(&a.radius)?;
    let mut fields = vec![
        ("ring", ring.name().to_string()),
        ("weight", w.name()),
        ("n", a.n.to_string()),
        ("radius", rational::render(&radius)),
        ("ball_volume", ball_volume(&w, a.n, &radius).to_string()),
    ];
    if *w.kind() == weights::WeightKind::Overweight
        && radius.is_integer()
        && radius >= rational::int(0)
    {
        let e = integer_distance(&radius)?;
        fields.push((
            "ball_volume_formula",
            ball_volume_overweight(&ring, a.n, e).to_string(),
        ));
        if e <= 2 * a.n {
            fields.push((
                "sphere_size",
                sphere_size_overweight(&ring, a.n, e)?.to_string(),
            ));
        }
    }
    if a.brute {
        let center: Word = match &a.center {
            Some(text) => parse_json(text, "center")?,
            None => vec![ring.zero(); a.n],
        };
        if center.len() != a.n {
            return Err(Error::InvalidArgument(format!(
                "center must have length {}",
                a.n
            )));
        }
        let words = ball_enumerate(&ring, &w, &center, &radius, DEFAULT_ENUMERATION_CAP)?;
        fields.push(("ball_volume_enumerated", words.len().to_string()));
        fields.push(("enumeration_cap", DEFAULT_ENUMERATION_CAP.to_string()));
    }
    Ok(Outcome::ok(kv(&fields, cli.format)))
}

fn bounds_cmd(cli: &Cli, a: &BoundsArgs) -> Result<Outcome> {
    let ring = a.ring.as_deref().map(|s| load_ring(cli, s)).transpose()?;
    let need_ring = || {
        ring.as_ref()
            .ok_or_else(|| Error::InvalidArgument("missing --ring".into()))
    };
    let gamma = rational::parse(&a.gamma)?;
    let rho = rational::parse(&a.rho)?;
    let single = |bound: BoundName, n: usize, d: Option<&Rational>| -> Result<BoundReport> {
        let d_req = || d.ok_or_else(|| Error::InvalidArgument("missing -d".into()));
        match bound {
            BoundName::PlotkinOverweight => {
                plotkin_overweight(need_ring()?, n, integer_distance(d_req()?)?)
            }
            BoundName::SpherePacking => {
                sphere_packing_overweight(need_ring()?, n, integer_distance(d_req()?)?)
            }
            BoundName::Gv => {
                gilbert_varshamov_overweight(need_ring()?, n, integer_distance(d_req()?)?)
            }
            BoundName::PlotkinField => {
                let q = match a.q {
                    Some(q) => q,
                    None => need_ring()?.order() as u64,
                };
                plotkin_field(q, n, integer_distance(d_req()?)?)
            }
            BoundName::PlotkinHomogeneous => plotkin_homogeneous(&gamma, n, d_req()?),
            BoundName::PlotkinDistance => {
                plotkin_distance_corollary(need_ring()?, n, *required(&a.size, "--size")?)
            }
            BoundName::Johnson => johnson_homogeneous(n, d_req()?, &gamma, &rho),
        }
    };
    let d = a.d.as_deref().map(rational::parse).transpose()?;
    let (output, reports) = if a.grid {
        let bound = a.bound.unwrap_or(BoundName::PlotkinOverweight);
        if matches!(bound, BoundName::Johnson | BoundName::PlotkinDistance) {
            return Err(Error::InvalidArgument(
                "--grid works with size bounds only".into(),
            ));
        }
        let d_max = match &d {
            Some(d) => integer_distance(d)?,
            None => 2 * a.n,
        };
        let mut cells = Vec::new();
        for n in 1..=a.n {
            for dd in 1..=d_max {
                let report = match single(bound, n, Some(&rational::int(dd as i64))) {
                    Ok(r) => r,
                    Err(e) => BoundReport::unavailable("grid", BoundKind::SizeUpper, e.to_string()),
                };
                cells.push((n, dd, report));
            }
        }
        let output = match cli.format {
            Format::Json => json_doc(&Value::Array(
                cells
                    .iter()
                    .map(|(n, d, r)| json!({ "n": n, "d": d, "report": r.to_json_value() }))
                    .collect(),
            )),
            f => bound_grid(&cells).render(f),
        };
        (output, cells.into_iter().map(|c| c.2).collect::<Vec<_>>())
    } else {
        let reports = match a.bound {
            Some(b) if !a.all => vec![single(b, a.n, d.as_ref())?],
            _ => all_overweight_bounds(need_ring()?, a.n, integer_distance(required(&d, "-d")?)?),
        };
        (emit_bounds(&reports, cli.format), reports)
    };
    let status = if reports.iter().any(BoundReport::is_applicable) {
        Status::Success
    } else {
        Status::NotApplicable
    };
    Ok(Outcome { output, status })
}

fn code_from_args(
    cli: &Cli,
    ring_spec: Option<&str>,
    code: Option<&Path>,
    words: Option<&str>,
) -> Result<(FiniteRing, Code)> {
    if let Some(path) = code {
        let loaded = LoadedCode::from_json(&std::fs::read_to_string(path)?, cli.order_cap)?;
        if let Some(spec) = ring_spec {
            let ring = load_ring(cli, spec)?;
            if ring.name() != loaded.ring.name() {
                return Err(Error::InvalidArgument(format!(
                    "code file is over {}, not {}",
                    loaded.ring.name(),
                    ring.name()
                )));
            }
        }
        return Ok((loaded.ring, loaded.code));
    }
    let ring = load_ring(
        cli,
        ring_spec.ok_or_else(|| Error::InvalidArgument("missing --ring".into()))?,
    )?;
    let words: Vec<Word> = parse_json(
        words.ok_or_else(|| Error::InvalidArgument("missing --code or --words".into()))?,
        "word list",
    )?;
    let n = words.first().map_or(0, Vec::len);
    let code = Code::new(&ring, n, words)?;
    Ok((ring, code))
}

fn sidecar_path(output: &Path) -> PathBuf {
    let stem = output
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("code");
    output.with_file_name(format!("{stem}.sidecar.json"))
}

fn search_cmd(cli: &Cli, a: &SearchArgs) -> Result<Outcome> {
    if a.mode == SearchMode::Profile {
        return profile_cmd(cli, a);
    }
    let ring = load_ring(cli, required(&a.ring, "--ring")?)?;
    let w = weight_or_fail(&ring, &a.weight)?;
    let n = *required(&a.n, "-n")?;
    let d = rational::parse(required(&a.d, "-d")?)?;
    let seeds: Vec<Word> = match &a.seed_words {
        Some(text) => parse_json(text, "seed words")?,
        None => Vec::new(),
    };
    let result: SearchResult = match a.mode {
        SearchMode::Greedy => greedy_gv(&ring, &w, n, &d, a.ordering.parse()?, &seeds, a.cap)?,
        SearchMode::Max => {
            let opts = MaxCodeOptions {
                budget: a.budget,
                fix_zero: true,
                seeds,
                cap: a.cap,
            };
            max_code(&ring, &w, n, &d, &opts)?
        }
        SearchMode::Profile => unreachable!(),
    };
    let sidecar = result.sidecar_json(&ring, &w);
    let code_file: Value = serde_json::from_str(&result.code.to_json(&ring))?;
    if let Some(path) = &a.output {
        std::fs::write(path, format!("{}\n", result.code.to_json(&ring)))?;
        std::fs::write(sidecar_path(path), json_doc(&sidecar))?;
    }
    let output = match cli.format {
        Format::Json => json_doc(&json!({ "code": code_file, "report": sidecar })),
        f => {
            let mut fields: Vec<(&str, String)> = Vec::new();
            if let Value::Object(map) = &sidecar {
                for (k, v) in map {
                    let text = match v {
                        Value::String(s) => s.clone(),
                        Value::Null => "-".into(),
                        other => other.to_string(),
                    };
                    fields.push((k.as_str(), text));
                }
            }
            let mut out = kv(&fields, f);
            let mut t = Table::new(["codeword"]);
            for word in result.code.words() {
                t.push([word_label(&ring, word)]);
            }
            out.push_str(&t.render(f));
            out
        }
    };
    Ok(Outcome::ok(output))
}

fn word_label(ring: &FiniteRing, word: &[usize]) -> String {
    word.iter()
        .map(|&x| ring.label(x))
        .collect::<Vec<_>>()
        .join(" ")
}

fn profile_cmd(cli: &Cli, a: &SearchArgs) -> Result<Outcome> {
    let (ring, code) = code_from_args(
        cli,
        a.ring.as_deref(),
        a.code.as_deref(),
        a.words.as_deref(),
    )?;
    let w = weight_or_fail(&ring, &a.weight)?;
    let radius = match (&a.radius, &a.rho) {
        (Some(r), None) => rational::parse(r)?,
        (None, Some(rho)) => rational::parse(rho)? * rational::int(code.n() as i64),
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --radius and --rho".into(),
            ))
        }
    };
    let profile = list_profile(&ring, &code, &w, &radius, a.cap)?;
    let fields = [
        ("ring", ring.name().to_string()),
        ("weight", w.name()),
        ("n", code.n().to_string()),
        ("code_size", code.len().to_string()),
        ("radius", rational::render(&profile.radius)),
        ("max_list_size", profile.max_list_size.to_string()),
        ("witness", word_label(&ring, &profile.witness)),
        ("enumeration_cap", a.cap.to_string()),
    ];
    Ok(Outcome::ok(kv(&fields, cli.format)))
}

fn check_outcome(report: &CheckReport, format: Format) -> Outcome {
    let output = match format {
        Format::Json => json_doc(&report.to_json_value()),
        _ => format!("{}\n", report.summary()),
    };
    let status = match report.status {
        CheckStatus::Pass => Status::Success,
        CheckStatus::Fail => Status::Violation,
        CheckStatus::NotApplicable(_) => Status::NotApplicable,
    };
    Outcome { output, status }
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs) -> Result<Outcome> {
    if a.check == VerifyCheck::Suite {
        return suite_cmd(cli, a);
    }
    let first_ring = a.ring.first().map(String::as_str);
    let code_args = || code_from_args(cli, first_ring, a.code.as_deref(), a.words.as_deref());
    let dist_for = |ring: &FiniteRing, default_support: &[usize]| -> Result<Distribution> {
        match &a.dist {
            Some(text) => {
                let counts: Vec<u64> = parse_json(text, "distribution")?;
                if counts.len() != ring.order() {
                    return Err(Error::InvalidDistribution(format!(
                        "expected {} masses, got {}",
                        ring.order(),
                        counts.len()
                    )));
                }
                Distribution::from_counts(counts)
            }
            None => Distribution::uniform(ring, default_support),
        }
    };
    let report = match a.check {
        VerifyCheck::HammingAverage => {
            let ring = load_ring(
                cli,
                first_ring.ok_or_else(|| Error::InvalidArgument("missing --ring".into()))?,
            )?;
            let subset: Vec<usize> = parse_json(required(&a.subset, "--subset")?, "subset")?;
            if subset.iter().any(|&x| x >= ring.order()) {
                return Err(Error::InvalidArgument("subset index out of range".into()));
            }
            check_hamming_average(&ring, &subset, &dist_for(&ring, &subset)?)?
        }
        VerifyCheck::Probineq => {
            let ring = load_ring(
                cli,
                first_ring.ok_or_else(|| Error::InvalidArgument("missing --ring".into()))?,
            )?;
            let all: Vec<usize> = (0..ring.order()).collect();
            check_probineq(&ring, &dist_for(&ring, &all)?)?
        }
        VerifyCheck::PairSum => {
            let (ring, code) = code_args()?;
            check_pair_sum(&ring, &code)?
        }
        VerifyCheck::Maxwt => {
            let (ring, code) = code_args()?;
            check_maxwt_on_ring(&ring, &code, &rational::parse(&a.gamma)?)?
        }
        VerifyCheck::Johnson => {
            let (ring, code) = code_args()?;
            let gamma = rational::parse(&a.gamma)?;
            let w = weights::homogeneous(&ring, &gamma)?
                .ok_or_else(|| Error::InvalidArgument("homogeneous weight unavailable".into()))?;
            let check = verify_johnson(&ring, &code, &w, &rational::parse(&a.rho)?, a.cap)?;
            let status = match check.status {
                CheckStatus::Pass => Status::Success,
                CheckStatus::Fail => Status::Violation,
                CheckStatus::NotApplicable(_) => Status::NotApplicable,
            };
            let output = match cli.format {
                Format::Json => json_doc(&json!({
                    "n": check.n,
                    "d": rational::render(&check.d),
                    "gamma": rational::render(&check.gamma),
                    "rho": rational::render(&check.rho),
                    "condition": check.condition,
                    "hypotheses_hold": check.hypotheses_hold,
                    "list_bound": check.list_bound.as_ref().map(|b| b.to_string()),
                    "profile_max": check.profile_max,
                    "witness": check.witness,
                    "status": check.status.to_string(),
                })),
                _ => format!("{}\n", check.summary()),
            };
            return Ok(Outcome { output, status });
        }
        VerifyCheck::Suite => unreachable!(),
    };
    Ok(check_outcome(&report, cli.format))
}

/// Lengths used by the randomized code suites: as long as `|R|^n` stays small.
fn suite_max_n(ring: &FiniteRing) -> usize {
    (1..=4)
        .take_while(|&n| ring.order().pow(n as u32) <= 4096)
        .last()
        .unwrap_or(1)
}

fn suite_cmd(cli: &Cli, a: &VerifyArgs) -> Result<Outcome> {
    if a.ring.is_empty() {
        return Err(Error::InvalidArgument("missing --ring".into()));
    }
    let gamma = rational::parse(&a.gamma)?;
    let mut rows: Vec<SuiteReport> = Vec::new();
    let mut skipped: Vec<(String, String, String)> = Vec::new();
    for (i, spec) in a.ring.iter().enumerate() {
        let ring = load_ring(cli, spec)?;
        let seed = crate::verify::trial_seed(a.seed, i as u64);
        let max_n = suite_max_n(&ring);
        match eta(&ring) {
            Ok(_) => {
                rows.push(probineq_suite(&ring, a.trials, seed)?);
                rows.push(pair_sum_suite(&ring, a.trials, seed ^ 1, max_n, 8)?);
            }
            Err(e) => {
                skipped.push((
                    ring.name().into(),
                    "probineq, pair_sum".into(),
                    e.to_string(),
                ));
            }
        }
        match weights::homogeneous(&ring, &gamma)? {
            Some(h) => {
                rows.push(maxwt_suite(&ring, &h, a.trials, seed ^ 2, max_n, 8)?);
                let codes = harness_codes(&ring, &h, max_n.min(2), ring.order() <= 9)?;
                rows.push(johnson_suite(&ring, &h, &codes, a.cap)?.0);
            }
            None => skipped.push((
                ring.name().into(),
                "maxwt, johnson".into(),
                "homogeneous weight unavailable".into(),
            )),
        }
    }
    let violations: usize = rows.iter().map(|r| r.violations).sum();
    let output = match cli.format {
        Format::Json => json_doc(&json!({
            "seed": a.seed,
            "trials": a.trials,
            "suites": rows,
            "skipped": skipped
                .iter()
                .map(|(r, s, why)| json!({ "ring": r, "suites": s, "reason": why }))
                .collect::<Vec<_>>(),
        })),
        f => {
            let mut t = Table::new([
                "suite",
                "ring",
                "trials",
                "checked",
                "equalities",
                "violations",
            ]);
            for r in &rows {
                t.push([
                    r.name.clone(),
                    r.ring.clone(),
                    r.trials.to_string(),
                    r.checked.to_string(),
                    r.equalities.to_string(),
                    r.violations.to_string(),
                ]);
            }
            for (ring, suites, why) in &skipped {
                t.push([
                    suites.clone(),
                    ring.clone(),
                    "-".into(),
                    "-".into(),
                    "-".into(),
                    format!("skipped: {why}"),
                ]);
            }
            t.render(f)
        }
    };
    let status = if violations > 0 {
        Status::Violation
    } else if rows.is_empty() {
        Status::NotApplicable
    } else {
        Status::Success
    };
    Ok(Outcome { output, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli =
            Cli::try_parse_from(std::iter::once("ringbounds").chain(args.iter().copied())).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn bounds_all_table() {
        let out = run_args(&["bounds", "--ring", "Z4", "-n", "2", "-d", "3", "--all"]);
        assert_eq!(out.status, Status::Success);
        assert!(out.output.contains("plotkin_overweight"));
        let row = |name: &str| {
            out.output
                .lines()
                .find(|l| l.starts_with(name))
                .unwrap()
                .to_string()
        };
        assert!(row("plotkin_overweight").ends_with("M ≤ 3      3"));
        assert!(row("sphere_packing").ends_with(" 3"));
        assert!(row("gilbert_varshamov").ends_with("M ≥ 16/11  2"));
    }

    #[test]
    fn homogeneous_csv() {
        let out = run_args(&[
            "weights",
            "--ring",
            "Z6",
            "--homogeneous",
            "--gamma",
            "1",
            "--format",
            "csv",
        ]);
        let weights: Vec<&str> = out
            .output
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap())
            .collect();
        assert_eq!(weights, ["0", "1/2", "3/2", "2", "3/2", "1/2"]);
    }

    #[test]
    fn max_search_certified() {
        let out = run_args(&[
            "search",
            "max",
            "--ring",
            "Z4",
            "-n",
            "2",
            "-d",
            "3",
            "--weight",
            "overweight",
            "--format",
            "json",
        ]);
        let v: Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["report"]["size"], 2);
        assert_eq!(v["report"]["certified_optimal"], true);
    }

    #[test]
    fn not_applicable_exit_status() {
        let out = run_args(&[
            "bounds",
            "--ring",
            "Z4",
            "-n",
            "2",
            "-d",
            "2",
            "--bound",
            "plotkin-overweight",
        ]);
        assert_eq!(out.status.code(), 1);
        assert!(out.output.contains("n/a (d ≤ nη)"));
        let out = run_args(&[
            "weights",
            "--ring",
            "Z2xZ2",
            "--homogeneous",
            "--principal-only",
        ]);
        assert_eq!(out.status, Status::Success);
    }

    #[test]
    fn verify_checks() {
        let out = run_args(&[
            "verify",
            "pair-sum",
            "--ring",
            "Z4",
            "--words",
            "[[0,0],[2,2]]",
        ]);
        assert_eq!(out.output, "pair_sum: 8 ≤ 8 ≤ 8 : pass\n");
        let out = run_args(&["verify", "maxwt", "--ring", "Z4", "--words", "[[0],[2]]"]);
        assert_eq!(out.status, Status::NotApplicable);
        let out = run_args(&["verify", "probineq", "--ring", "Z8"]);
        assert_eq!(out.output, "probineq: 5/4 ≤ 3/2 : pass\n");
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["ringbounds", "bounds"]).is_err());
        let cli = Cli::try_parse_from(["ringbounds", "ring", "--ring", "Z4[x]/(x^2+1"]).unwrap();
        assert!(run(&cli).is_err());
    }
}
