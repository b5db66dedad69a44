//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a requested `--expect-*` assertion failed,
//! 2 usage error (bad flags, limits exceeded), 3 malformed input file.
//!
//! Work limits come from built-in defaults, then an optional
//! `--config FILE` of `key=value` lines, then the environment variables
//! `MINCODE_PAIR_BUDGET`, `MINCODE_WEIGHT_BUDGET` and `MINCODE_POINT_CAP`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blocking::{blocking_report, is_cutting_pairwise, theorem_hypotheses, Flavor};
use crate::codes::{
    ab_check, build_code, is_minimal_bruteforce, is_minimal_hdz, minimal_codewords, survey, Budgets,
    LinearCode, MinimalityReport, SurveyRow,
};
use crate::error::Error;
use crate::field::{Elem, Field};
use crate::formats;
use crate::funcspec::{FunctionSpec, ZeroSetMode};
use crate::geometry::{Mode, Space};
use crate::repro;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mincode", version, about = "Minimal linear codes from functions over finite fields")]
struct Cli {
    /// `key=value` file with pair_budget, weight_budget, point_cap.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format; `tsv` applies to `survey` and reads as `text` elsewhere.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build C_f (or C̃_f with --projective) and optionally export its generator matrix.
    Build {
        #[command(flatten)]
        func: FunctionArgs,
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weights, minimality and AB analysis of a code.
    Analyze {
        /// Generator-matrix file instead of a function.
        #[arg(long = "in", conflicts_with_all = ["family", "table"])]
        input: Option<PathBuf>,
        #[command(flatten)]
        func: FunctionArgs,
        #[arg(long)]
        projective: bool,
        #[arg(long, value_enum)]
        minimality: Option<MinimalityMethod>,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        ab: bool,
        /// List one representative per class of minimal codewords.
        #[arg(long)]
        minimal_words: bool,
        #[arg(long)]
        expect_minimal: bool,
        #[arg(long)]
        expect_ab_fail: bool,
    },
    /// Blocking-set checks on a point-set file.
    Blocking {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Also check that no punctured s-dimensional subspace is contained.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        cutting: bool,
        /// Cross-check cutting by pairwise containment.
        #[arg(long)]
        pairwise: bool,
        #[arg(long, value_enum, default_value_t = FlavorArg::Vectorial)]
        flavor: FlavorArg,
        #[arg(long)]
        expect_blocking: bool,
        #[arg(long)]
        expect_cutting: bool,
        #[arg(long)]
        expect_ks: bool,
    },
    /// Write the zero set of a function as a point-set file.
    ZeroSet {
        #[command(flatten)]
        func: FunctionArgs,
        #[arg(long, value_enum, default_value_t = ZeroModeArg::AffineStar)]
        mode: ZeroModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Table of the f_{r,k} family over a range of r.
    Survey {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        modulus: Option<String>,
        /// `A..B` (inclusive) or a single value.
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        projective: bool,
    },
    /// Run the reproduction suite and print one line per criterion.
    Repro {
        #[arg(long, default_value_t = repro::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        only: Vec<u8>,
    },
}

#[derive(Args, Debug)]
struct FunctionArgs {
    #[arg(long)]
    q: Option<u64>,
    /// Modulus coefficients, constant term first, e.g. `1,1,1`.
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, value_enum, conflicts_with = "table")]
    family: Option<Family>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Number of variables (staircase family).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    alphas: Vec<Elem>,
    /// Polynomial file for the `polyzero` family.
    #[arg(long)]
    poly: Option<PathBuf>,
    /// Function-table file.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Frk,
    Staircase,
    Polyzero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MinimalityMethod {
    Brute,
    Hdz,
    Both,
    Theorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Vectorial,
    Projective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZeroModeArg {
    AffineStar,
    AffineWithOrigin,
    Projective,
}

/// A failed run: exit code and message.
struct Failure(i32, String);

type Outcome = std::result::Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn input(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

/// Data errors are exit 3 when they come from a file, usage errors otherwise.
fn classify(e: Error, from_file: bool) -> Failure {
    match e {
        Error::Parse { .. } | Error::OriginInSet => input(e.to_string()),
        Error::BudgetExceeded { .. } | Error::SpaceTooLarge { .. } => usage(e.to_string()),
        _ if from_file => input(e.to_string()),
        _ => usage(e.to_string()),
    }
}

struct Settings {
    budgets: Budgets,
    format: Format,
}

fn parse_budget(key: &str, value: &str) -> std::result::Result<u128, Failure> {
    let cleaned: String = value.trim().chars().filter(|&c| c != '_').collect();
    if let Ok(v) = cleaned.parse::<u128>() {
        return Ok(v);
    }
    // allow 1e10 style
    match cleaned.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v < 1e38 => Ok(v as u128),
        _ => Err(usage(format!("{key}: not a nonnegative integer: {value:?}"))),
    }
}

fn apply_setting(b: &mut Budgets, key: &str, value: &str) -> std::result::Result<(), Failure> {
    let v = parse_budget(key, value)?;
    match key {
        "pair_budget" => b.pair_compares = v,
        "weight_budget" => b.enumeration = v,
        "point_cap" => b.max_points = v,
        _ => return Err(usage(format!("unknown setting {key:?}"))),
    }
    Ok(())
}

fn load_settings(cli: &Cli) -> std::result::Result<Settings, Failure> {
    let mut budgets = Budgets::default();
    if let Some(path) = &cli.config {
        let text = read(path)?;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| input(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
            apply_setting(&mut budgets, k.trim(), v)?;
        }
    }
    for (var, key) in [
        ("MINCODE_PAIR_BUDGET", "pair_budget"),
        ("MINCODE_WEIGHT_BUDGET", "weight_budget"),
        ("MINCODE_POINT_CAP", "point_cap"),
    ] {
        if let Ok(v) = std::env::var(var) {
            apply_setting(&mut budgets, key, &v)?;
        }
    }
    Ok(Settings {
        budgets,
        format: cli.format,
    })
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_modulus(s: &str) -> std::result::Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("bad modulus coefficient {t:?}"))))
        .collect()
}

fn make_field(q: u64, modulus: Option<&str>) -> std::result::Result<Field, Failure> {
    let m = modulus.map(parse_modulus).transpose()?;
    Field::with_order(q, m.as_deref()).map_err(|e| usage(e.to_string()))
}

fn check_cap(q: u64, n: usize, b: &Budgets) -> std::result::Result<(), Failure> {
    let size = (q as u128).checked_pow(n as u32);
    match size {
        Some(s) if s <= b.max_points => Ok(()),
        _ => Err(usage(format!(
            "q^n = {q}^{n} exceeds the point cap {} (set MINCODE_POINT_CAP to raise it)",
            b.max_points
        ))),
    }
}

/// The function together with whether it was read from a file.
fn load_function(a: &FunctionArgs, b: &Budgets) -> std::result::Result<(FunctionSpec, bool), Failure> {
    if let Some(path) = &a.table {
        let f = formats::parse_function_table(&read(path)?).map_err(|e| classify(e, true))?;
        return Ok((f, true));
    }
    let family = a.family.ok_or_else(|| usage("give --family or --table"))?;
    if family == Family::Polyzero {
        let path = a.poly.as_ref().ok_or_else(|| usage("--family polyzero needs --poly FILE"))?;
        let (space, p) = formats::parse_polynomial(&read(path)?).map_err(|e| classify(e, true))?;
        check_cap(space.q() as u64, space.n(), b)?;
        let f = FunctionSpec::poly_zero(&space, p).map_err(|e| classify(e, true))?;
        return Ok((f, true));
    }
    let q = a.q.ok_or_else(|| usage("--q is required"))?;
    let field = make_field(q, a.modulus.as_deref())?;
    let k = a.k.ok_or_else(|| usage("--k is required"))?;
    let f = match family {
        Family::Frk => {
            let r = a.r.ok_or_else(|| usage("--family frk needs --r"))?;
            check_cap(q, r.saturating_mul(k), b)?;
            FunctionSpec::monomial_blocks(&field, r, k)
        }
        Family::Staircase => {
            let n = a.n.ok_or_else(|| usage("--family staircase needs --n"))?;
            check_cap(q, n, b)?;
            let space = Space::new(&field, n).map_err(|e| usage(e.to_string()))?;
            FunctionSpec::staircase(&space, k, a.alphas.clone())
        }
        Family::Polyzero => unreachable!(),
    };
    Ok((f.map_err(|e| classify(e, false))?, false))
}

fn mode_of(projective: bool) -> Mode {
    if projective {
        Mode::Projective
    } else {
        Mode::Affine
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = load_settings(&cli).and_then(|s| dispatch(cli.command, &s, out, err));
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| usage(format!("write failed: {e}")))
}

fn dispatch(cmd: Command, s: &Settings, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Build { func, projective, out: path } => cmd_build(&func, projective, path.as_deref(), s, out, err),
        Command::Analyze {
            input,
            func,
            projective,
            minimality,
            weights,
            ab,
            minimal_words,
            expect_minimal,
            expect_ab_fail,
        } => {
            let req = AnalyzeRequest {
                minimality: minimality.or(expect_minimal.then_some(MinimalityMethod::Both)),
                weights,
                ab: ab || expect_ab_fail,
                minimal_words,
                expect_minimal,
                expect_ab_fail,
            };
            cmd_analyze(input.as_deref(), &func, projective, &req, s, out, err)
        }
        Command::Blocking {
            input,
            k,
            s: sdim,
            cutting,
            pairwise,
            flavor,
            expect_blocking,
            expect_cutting,
            expect_ks,
        } => {
            let flavor = match flavor {
                FlavorArg::Vectorial => Flavor::Vectorial,
                FlavorArg::Projective => Flavor::Projective,
            };
            let req = BlockingRequest {
                k,
                s: sdim,
                cutting: cutting || expect_cutting || pairwise,
                pairwise,
                flavor,
                expect_blocking,
                expect_cutting,
                expect_ks,
            };
            cmd_blocking(&input, &req, s, out)
        }
        Command::ZeroSet { func, mode, out: path } => cmd_zero_set(&func, mode, path.as_deref(), s, out),
        Command::Survey { q, modulus, r, k, projective } => {
            cmd_survey(q, modulus.as_deref(), &r, k, mode_of(projective), s, out)
        }
        Command::Repro { seed, only } => cmd_repro(seed, &only, s, out),
    }
}

fn cmd_build(
    func: &FunctionArgs,
    projective: bool,
    path: Option<&Path>,
    s: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let (f, from_file) = load_function(func, &s.budgets)?;
    let mode = mode_of(projective);
    let code = build_code(&f, mode).map_err(|e| classify(e, from_file))?;
    if code.is_degenerate() {
        let _ = writeln!(err, "warning: dimension {} is below n + 1 = {}", code.dim(), f.space().n() + 1);
    }
    if let Some(p) = path {
        write_file(p, &formats::write_generator(&code))?;
    }
    match s.format {
        Format::Json => emit(out, &pretty(&code_summary(&code))),
        _ => emit(out, &format!("[{},{}] code over {} ({})", code.length(), code.dim(), code.field(), mode.as_str())),
    }?;
    Ok(EXIT_OK)
}

fn code_summary(code: &LinearCode) -> Value {
    let c = code.construction();
    json!({
        "q": code.q(),
        "length": code.length(),
        "dim": code.dim(),
        "mode": code.mode().map_or("generic", Mode::as_str),
        "n": c.map(|c| c.space.n()),
        "zero_count": c.map(|c| c.zero_count),
        "degenerate": code.is_degenerate(),
    })
}

struct AnalyzeRequest {
    minimality: Option<MinimalityMethod>,
    weights: bool,
    ab: bool,
    minimal_words: bool,
    expect_minimal: bool,
    expect_ab_fail: bool,
}

fn cmd_analyze(
    input_path: Option<&Path>,
    func: &FunctionArgs,
    projective: bool,
    req: &AnalyzeRequest,
    s: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let b = &s.budgets;
    let mode = mode_of(projective);
    let (code, f, from_file) = match input_path {
        Some(p) => {
            let (code, _) = formats::parse_generator(&read(p)?).map_err(|e| classify(e, true))?;
            (code, None, true)
        }
        None => {
            let (f, from_file) = load_function(func, b)?;
            let code = build_code(&f, mode).map_err(|e| classify(e, from_file))?;
            (code, Some(f), from_file)
        }
    };
    if code.is_degenerate() {
        let _ = writeln!(err, "warning: degenerate code of dimension {}", code.dim());
    }
    let fail = |e| classify(e, from_file);
    let mut doc = code_summary(&code);
    let mut text = vec![format!("[{},{}] code over {}", code.length(), code.dim(), code.field())];
    let mut witnesses: Vec<Value> = Vec::new();
    let mut code_exit = EXIT_OK;

    if req.weights {
        let dist = code.weight_distribution(b).map_err(fail)?;
        text.push(format!(
            "weights: {}",
            dist.iter().map(|(w, c)| format!("{w}:{c}")).collect::<Vec<_>>().join(" ")
        ));
        doc["weights"] = json!(dist);
    }

    if let Some(method) = req.minimality {
        let (minimal, reports, hypotheses) = match method {
            MinimalityMethod::Theorem => {
                let f = f.as_ref().ok_or_else(|| usage("--minimality theorem needs a function, not --in"))?;
                let h = theorem_hypotheses(f, mode).map_err(fail)?;
                text.push(format!(
                    "theorem hypotheses: dimension {} blocking {} cutting {} (1,{}) {} (b) {} (c) {} => {}",
                    yes(h.dimension_ok),
                    yes(h.blocking.holds),
                    yes(h.cutting.holds),
                    h.ks_s,
                    yes(h.ks.holds),
                    yes(h.condition_b.holds),
                    yes(h.condition_c.holds),
                    if h.theorem_applies { "minimal" } else { "not certified" }
                ));
                (h.theorem_applies, Vec::new(), Some(json!(h)))
            }
            m => {
                let mut reports: Vec<MinimalityReport> = Vec::new();
                if matches!(m, MinimalityMethod::Brute | MinimalityMethod::Both) {
                    reports.push(is_minimal_bruteforce(&code, b).map_err(fail)?);
                }
                if matches!(m, MinimalityMethod::Hdz | MinimalityMethod::Both) {
                    reports.push(is_minimal_hdz(&code, b).map_err(fail)?);
                }
                for r in &reports {
                    text.push(format!("minimal ({}): {}", json!(r.method).as_str().unwrap_or(""), yes(r.minimal)));
                }
                if reports.windows(2).any(|w| w[0].minimal != w[1].minimal) {
                    text.push("checkers disagree".into());
                    witnesses.push(json!({"disagreement": reports}));
                    code_exit = EXIT_ASSERT;
                }
                (reports.iter().all(|r| r.minimal), reports, None)
            }
        };
        doc["minimal"] = json!(minimal);
        doc["method"] = json!(match method {
            MinimalityMethod::Brute => "brute",
            MinimalityMethod::Hdz => "hdz",
            MinimalityMethod::Both => "both",
            MinimalityMethod::Theorem => "theorem",
        });
        doc["minimality"] = json!(reports);
        if let Some(h) = &hypotheses {
            doc["hypotheses"] = h.clone();
        }
        if req.expect_minimal && !minimal {
            code_exit = EXIT_ASSERT;
            match reports.iter().find_map(|r| r.witness.as_ref()) {
                Some(w) => witnesses.push(json!(w)),
                None => witnesses.extend(hypotheses),
            }
        }
    }

    if req.ab {
        let ab = ab_check(&code, b).map_err(fail)?;
        text.push(format!(
            "AB: w_min={} w_max={} satisfied={}{}",
            ab.w_min,
            ab.w_max,
            yes(ab.satisfies_ab),
            match ab.zero_count_threshold_hit {
                Some(true) => " (zero-count threshold reached)",
                _ => "",
            }
        ));
        doc["ab"] = json!({
            "w_min": ab.w_min,
            "w_max": ab.w_max,
            "satisfied": ab.satisfies_ab,
            "zero_count_threshold_hit": ab.zero_count_threshold_hit,
        });
        if req.expect_ab_fail && ab.satisfies_ab {
            code_exit = EXIT_ASSERT;
            witnesses.push(json!({"w_min": ab.w_min, "w_max": ab.w_max, "q": code.q()}));
        }
    }

    if req.minimal_words {
        let words = minimal_codewords(&code, b).map_err(fail)?;
        text.push(format!("minimal codeword classes: {}", words.len()));
        doc["minimal_codewords"] = json!(words);
    }

    if !witnesses.is_empty() {
        doc["witnesses"] = json!(witnesses);
    }
    match s.format {
        Format::Json => emit(out, &pretty(&doc))?,
        _ => {
            for w in &witnesses {
                text.push(format!("witness: {w}"));
            }
            emit(out, &text.join("\n"))?
        }
    }
    Ok(code_exit)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct BlockingRequest {
    k: usize,
    s: Option<usize>,
    cutting: bool,
    pairwise: bool,
    flavor: Flavor,
    expect_blocking: bool,
    expect_cutting: bool,
    expect_ks: bool,
}

fn cmd_blocking(path: &Path, req: &BlockingRequest, s: &Settings, out: &mut dyn Write) -> Outcome {
    let (space, mut set) = formats::parse_point_set(&read(path)?).map_err(|e| classify(e, true))?;
    check_cap(space.q() as u64, space.n(), &s.budgets)?;
    if req.flavor == Flavor::Projective {
        let mut reps = space.empty_set();
        for p in set.iter() {
            let (r, _) = space.normalize(p).ok_or_else(|| input("the origin is not a projective point"))?;
            if !reps.insert(r) {
                return Err(input(format!("two points represent the projective point {:?}", space.coords(r))));
            }
        }
        set = reps;
    }
    let report = blocking_report(&space, &set, req.flavor, req.k, req.s, req.cutting).map_err(|e| classify(e, true))?;
    let mut doc = json!(report);
    let mut exit = EXIT_OK;
    if req.pairwise {
        let p = is_cutting_pairwise(&space, &set, req.k, req.flavor).map_err(|e| classify(e, true))?;
        doc["cutting_pairwise"] = json!(p.holds);
        if Some(p.holds) != report.is_cutting {
            exit = EXIT_ASSERT;
        }
    }
    if (req.expect_blocking && !report.is_blocking)
        || (req.expect_cutting && report.is_cutting != Some(true))
        || (req.expect_ks && report.is_ks_blocking != Some(true))
    {
        exit = EXIT_ASSERT;
    }
    match s.format {
        Format::Json => emit(out, &pretty(&doc))?,
        _ => {
            let mut lines = vec![format!(
                "{} {}-blocking: {}  dimension: {}",
                json!(report.flavor).as_str().unwrap_or(""),
                report.k,
                yes(report.is_blocking),
                report.set_dimension
            )];
            if let Some(c) = report.is_cutting {
                lines.push(format!("cutting: {}", yes(c)));
            }
            if let (Some(sd), Some(v)) = (report.s, report.is_ks_blocking) {
                lines.push(format!("({},{})-blocking: {}", report.k, sd, yes(v)));
            }
            if let Some(p) = doc.get("cutting_pairwise") {
                lines.push(format!("cutting (pairwise): {}", yes(p.as_bool() == Some(true))));
            }
            for w in &report.witnesses {
                lines.push(format!("witness: {}", json!(w)));
            }
            emit(out, &lines.join("\n"))?
        }
    }
    Ok(exit)
}

fn cmd_zero_set(func: &FunctionArgs, mode: ZeroModeArg, path: Option<&Path>, s: &Settings, out: &mut dyn Write) -> Outcome {
    let (f, from_file) = load_function(func, &s.budgets)?;
    let zmode = match mode {
        ZeroModeArg::AffineStar => ZeroSetMode::AffineStar,
        ZeroModeArg::AffineWithOrigin => ZeroSetMode::AffineWithOrigin,
        ZeroModeArg::Projective => ZeroSetMode::Projective,
    };
    let set = f.zero_set(zmode).map_err(|e| classify(e, from_file))?;
    let text = formats::write_point_set(f.space(), &set);
    match path {
        Some(p) => {
            write_file(p, &text)?;
            match s.format {
                Format::Json => emit(out, &pretty(&json!({"count": set.count()})))?,
                _ => emit(out, &format!("{} points", set.count()))?,
            }
        }
        None => write!(out, "{text}").map_err(|e| usage(e.to_string()))?,
    }
    Ok(EXIT_OK)
}

fn parse_range(r: &str) -> std::result::Result<std::ops::RangeInclusive<usize>, Failure> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad range {r:?}")));
    let (a, b) = match r.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(r)?;
            (v, v)
        }
    };
    if a > b || a == 0 {
        return Err(usage(format!("empty or invalid range {r:?}")));
    }
    Ok(a..=b)
}

const SURVEY_COLUMNS: [&str; 20] = [
    "q",
    "r",
    "k",
    "n",
    "mode",
    "length",
    "dim",
    "zero_count",
    "code_zero_count",
    "zero_count_checked",
    "ab_threshold",
    "ab_threshold_hit",
    "theorem_applies",
    "hypotheses_verified",
    "minimal_verified",
    "minimality_source",
    "ab_satisfied",
    "ab_source",
    "w_min",
    "w_max",
];

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cmd_survey(
    q: u64,
    modulus: Option<&str>,
    r: &str,
    k: usize,
    mode: Mode,
    s: &Settings,
    out: &mut dyn Write,
) -> Outcome {
    let range = parse_range(r)?;
    if k == 0 {
        return Err(usage("--k must be positive"));
    }
    let field = make_field(q, modulus)?;
    let rows: Vec<SurveyRow> = survey(&field, range, k, mode, &s.budgets).map_err(|e| classify(e, false))?;
    match s.format {
        Format::Json => emit(out, &pretty(&json!(rows)))?,
        _ => {
            let mut lines = vec![SURVEY_COLUMNS.join("\t")];
            for row in &rows {
                let v = json!(row);
                lines.push(SURVEY_COLUMNS.iter().map(|c| tsv_cell(&v[*c])).collect::<Vec<_>>().join("\t"));
            }
            emit(out, &lines.join("\n"))?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_repro(seed: u64, only: &[u8], s: &Settings, out: &mut dyn Write) -> Outcome {
    let ids: Vec<u8> = if only.is_empty() {
        repro::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        only.to_vec()
    };
    let mut outcomes = Vec::new();
    for id in ids {
        let o = repro::run_criterion(id, seed).ok_or_else(|| usage(format!("no criterion {id}")))?;
        if s.format != Format::Json {
            emit(
                out,
                &format!(
                    "{:>2} {} {:<30} {:>8.3}s  {}",
                    o.id,
                    if o.ok() { "PASS" } else { "FAIL" },
                    o.name,
                    o.elapsed_secs,
                    o.detail
                ),
            )?;
        }
        outcomes.push(o);
    }
    if s.format == Format::Json {
        emit(out, &pretty(&json!(outcomes)))?;
    }
    Ok(if outcomes.iter().all(|o| o.ok()) { EXIT_OK } else { EXIT_ASSERT })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("mincode").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5").ok(), Some(2..=5));
        assert_eq!(parse_range("3").ok(), Some(3..=3));
        assert!(parse_range("5..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn build_summary() {
        let (code, out, _) = run_str(&["build", "--q", "2", "--family", "frk", "--r", "2", "--k", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("[15,5] code"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["build", "--q", "4", "--family", "frk", "--r", "3", "--k", "7"]).0, 2);
        assert_eq!(run_str(&["survey", "--q", "2", "--r", "5..4", "--k", "2"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["build", "--q", "6", "--family", "frk", "--r", "2", "--k", "2"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
