//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical identity
//! fails (always an implementation defect), 2 on input or usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::error::PosetError;
use crate::incidence::{self, VerificationReport};
use crate::linalg::{IntMatrix, IntPolynomial};
use crate::oracle::DEFAULT_SIZE_GUARD;
use crate::poset::{self, Poset, PosetSpec, MAX_LABELED_ENUMERATION, RNG_ALGORITHM};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

const DEFECT_NOTICE: &str =
    "an identity failed; the identities are theorems, so this is an implementation defect";

#[derive(Debug, Parser)]
#[command(
    name = "order-complement",
    version,
    about = "Zeta, Möbius and order-complement matrices of finite posets, checked exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, extrema, chain census c_k, χ and χ̃.
    Info(InputArgs),
    /// Z, Z̄, the Möbius matrix and N.
    Matrices(InputArgs),
    /// Closed-form and division-free characteristic polynomials of Z̄.
    Charpoly(InputArgs),
    /// Full identity report for one poset.
    Verify(InputArgs),
    /// Batch verification over an exhaustive or random corpus.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Machine,
}

/// One poset source (file xor generator) plus output settings.
#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Inline generator: chain:N, antichain:N, boolean:K, divisor:M, random:N
    #[arg(
        long = "gen",
        value_name = "NAME:PARAM",
        conflicts_with = "input",
        required_unless_present = "input"
    )]
    pub generator: Option<String>,
    /// Poset file: {"names": [..], "mode": "covers"|"relations", "pairs": [[a, b], ..]}
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Seed for random:N
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge density for random:N
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    /// Largest poset handed to the brute-force chain oracle
    #[arg(long = "size-guard", default_value_t = DEFAULT_SIZE_GUARD)]
    pub size_guard: usize,
    /// Relabel along the linear extension first (Z becomes upper unitriangular)
    #[arg(long)]
    pub relabel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub kind: SweepKind,
    /// Poset size (exhaustive: default 4, at most 5; random: default 10)
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of random posets
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long = "size-guard", default_value_t = DEFAULT_SIZE_GUARD)]
    pub size_guard: usize,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Poset(#[from] PosetError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(
        "bad generator {0:?}; expected chain:N, antichain:N, boolean:K, divisor:M or random:N"
    )]
    Generator(String),
    #[error("{0}")]
    Usage(String),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        EXIT_INPUT_ERROR
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Info(args) => cmd_info(args, out),
        Command::Matrices(args) => cmd_matrices(args, out),
        Command::Charpoly(args) => cmd_charpoly(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Sweep(args) => cmd_sweep(args, out),
    }
}

fn parse_count<T: std::str::FromStr>(spec: &str, param: &str) -> Result<T, CliError> {
    param
        .parse()
        .map_err(|_| CliError::Generator(spec.to_string()))
}

/// Resolves a `--gen name:param` spec.
pub fn generate(spec: &str, seed: u64, density: f64) -> Result<Poset, CliError> {
    let (kind, param) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Generator(spec.to_string()))?;
    let poset = match kind {
        "chain" => poset::chain(parse_count(spec, param)?),
        "antichain" => poset::antichain(parse_count(spec, param)?),
        "boolean" => {
            let k: u32 = parse_count(spec, param)?;
            if k > 12 {
                return Err(CliError::Usage(format!(
                    "boolean:{k} has 2^{k} elements; at most boolean:12 is supported"
                )));
            }
            poset::boolean_lattice(k)
        }
        "divisor" => poset::divisor_poset(parse_count(spec, param)?)?,
        "random" => poset::random_poset(parse_count(spec, param)?, density, seed)?,
        _ => return Err(CliError::Generator(spec.to_string())),
    };
    Ok(poset)
}

/// Loads the poset named by `args`, with its display name.
pub fn load(args: &InputArgs) -> Result<(Poset, String), CliError> {
    let (poset, name) = match (&args.generator, &args.input) {
        (Some(spec), None) => {
            let p = generate(spec, args.seed, args.density)?;
            let name = if spec.starts_with("random:") {
                format!("{spec} seed={} density={}", args.seed, args.density)
            } else {
                spec.clone()
            };
            (p, name)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let spec = PosetSpec::from_json(&text)?;
            (Poset::build(&spec)?, path.display().to_string())
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --gen or --in is required".into(),
            ))
        }
    };
    if args.relabel {
        let order = poset.linear_extension();
        Ok((poset.relabel(&order)?, name))
    } else {
        Ok((poset, name))
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let line = serde_json::to_string(value).map_err(std::io::Error::other)?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn matrix_rows(m: &IntMatrix) -> Vec<String> {
    m.to_string().lines().map(str::to_string).collect()
}

fn matrix_block(title: &str, m: &IntMatrix) -> String {
    if m.rows() == 0 {
        format!("{title}\n(empty)\n")
    } else {
        format!("{title}\n{m}")
    }
}

pub fn cmd_info(args: &InputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (p, name) = load(args)?;
    let census = incidence::chain_counts(&p);
    let chi = census.alternating_sum();
    let reduced: BigInt = &chi - 1;
    let det = incidence::det_complement_direct(&p);
    let label = |i: Option<usize>| i.map(|i| p.names()[i].clone());
    let (max, min) = (label(p.find_maximum()), label(p.find_minimum()));

    match args.format {
        Format::Machine => emit_json(
            out,
            &json!({
                "name": name,
                "n": p.len(),
                "names": p.names(),
                "maximum": max,
                "minimum": min,
                "chain_counts": strings(&census.counts),
                "chi": chi.to_string(),
                "reduced_chi": reduced.to_string(),
                "det_complement": det.to_string(),
                "rng": name.starts_with("random:").then_some(RNG_ALGORITHM),
            }),
        )?,
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "poset: {name}").unwrap();
            writeln!(s, "n = {}", p.len()).unwrap();
            writeln!(s, "names: {}", p.names().join(" ")).unwrap();
            writeln!(s, "maximum: {}", max.as_deref().unwrap_or("none")).unwrap();
            writeln!(s, "minimum: {}", min.as_deref().unwrap_or("none")).unwrap();
            writeln!(s, "c_k: {}", strings(&census.counts).join(" ")).unwrap();
            writeln!(s, "χ = {chi}").unwrap();
            writeln!(s, "χ̃ = {reduced}").unwrap();
            writeln!(s, "det Z̄ = {det}").unwrap();
            out.write_all(s.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_matrices(args: &InputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (p, name) = load(args)?;
    let zeta = incidence::zeta_matrix(&p);
    let complement = incidence::complement_matrix(&p);
    let mobius = incidence::mobius_matrix(&p);
    let strict = incidence::strict_matrix(&p);
    let mobius_sum = mobius.sum_entries();
    let chi = incidence::euler_char_chains(&p);

    match args.format {
        Format::Machine => emit_json(
            out,
            &json!({
                "name": name,
                "names": p.names(),
                "zeta": matrix_rows(&zeta),
                "complement": matrix_rows(&complement),
                "mobius": matrix_rows(&mobius),
                "strict": matrix_rows(&strict),
                "mobius_sum": mobius_sum.to_string(),
                "chi": chi.to_string(),
            }),
        )?,
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "poset: {name}").unwrap();
            writeln!(s, "order: {}", p.names().join(" ")).unwrap();
            writeln!(s).unwrap();
            for (title, m) in [
                ("Z", &zeta),
                ("Z̄ = J − Z", &complement),
                ("Möbius Z⁻¹", &mobius),
                ("N = Z − I", &strict),
            ] {
                writeln!(s, "{}", matrix_block(title, m)).unwrap();
            }
            writeln!(s, "sum of Möbius entries = {mobius_sum}").unwrap();
            writeln!(s, "χ = {chi}").unwrap();
            out.write_all(s.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn poly_json(poly: &IntPolynomial) -> serde_json::Value {
    json!({
        "coefficients": strings(poly.coefficients()),
        "display": poly.to_string(),
    })
}

pub fn cmd_charpoly(args: &InputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (p, name) = load(args)?;
    let formula = incidence::charpoly_formula(&p);
    let direct = incidence::complement_matrix(&p)
        .charpoly()
        .expect("complement matrix is square");
    let equal = formula == direct;

    match args.format {
        Format::Machine => emit_json(
            out,
            &json!({
                "name": name,
                "n": p.len(),
                "formula": poly_json(&formula),
                "berkowitz": poly_json(&direct),
                "equal": equal,
            }),
        )?,
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "poset: {name}").unwrap();
            writeln!(s, "p(λ) = det(Z̄ − λI)").unwrap();
            writeln!(
                s,
                "chain formula: {}    {}",
                formula,
                formula.coefficient_list()
            )
            .unwrap();
            writeln!(
                s,
                "berkowitz:     {}    {}",
                direct,
                direct.coefficient_list()
            )
            .unwrap();
            writeln!(s, "equal: {}", if equal { "yes" } else { "NO" }).unwrap();
            if !equal {
                writeln!(s, "{DEFECT_NOTICE}").unwrap();
            }
            out.write_all(s.as_bytes())?;
        }
    }
    Ok(if equal { EXIT_OK } else { EXIT_IDENTITY_FAILED })
}

fn plain_report(report: &VerificationReport) -> String {
    let mut s = String::new();
    let summary = &report.poset;
    writeln!(s, "poset: {} (n = {})", summary.name, summary.n).unwrap();
    writeln!(
        s,
        "χ = {}, χ̃ = {}, det Z̄ = {}",
        summary.chi, summary.reduced_chi, summary.det_complement
    )
    .unwrap();
    for id in &report.identities {
        if id.pass {
            writeln!(s, "  PASS {}: {} = {}", id.name, id.lhs, id.rhs).unwrap();
        } else {
            writeln!(s, "  FAIL {}: {} ≠ {}", id.name, id.lhs, id.rhs).unwrap();
        }
    }
    writeln!(
        s,
        "{} passed, {} failed",
        report.summary.passed, report.summary.failed
    )
    .unwrap();
    s
}

pub fn cmd_verify(args: &InputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (p, name) = load(args)?;
    let report = incidence::verify_theorem_with_guard(&p, args.size_guard).with_name(name);
    match args.format {
        Format::Machine => emit_json(out, &report)?,
        Format::Plain => {
            out.write_all(plain_report(&report).as_bytes())?;
            if !report.all_pass() {
                writeln!(out, "{DEFECT_NOTICE}")?;
            }
        }
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILED
    })
}

#[derive(Debug, Serialize)]
struct SweepSummary {
    kind: SweepKind,
    n: usize,
    posets: usize,
    identities: usize,
    passed: usize,
    failed: usize,
    failing_posets: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    density: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rng: Option<&'static str>,
}

/// Builds the sweep corpus, each poset paired with its display name.
pub fn sweep_corpus(args: &SweepArgs) -> Result<Vec<(String, Poset)>, CliError> {
    match args.kind {
        SweepKind::Exhaustive => {
            let n = args.n.unwrap_or(4);
            if n > MAX_LABELED_ENUMERATION {
                return Err(PosetError::SizeGuard {
                    requested: n,
                    limit: MAX_LABELED_ENUMERATION,
                }
                .into());
            }
            Ok(poset::all_labeled_posets(n)?
                .into_iter()
                .enumerate()
                .map(|(i, p)| (format!("labeled:{n}#{i}"), p))
                .collect())
        }
        SweepKind::Random => {
            let n = args.n.unwrap_or(10);
            let mut master = ChaCha8Rng::seed_from_u64(args.seed);
            (0..args.count)
                .map(|i| {
                    let seed = master.next_u64();
                    let p = poset::random_poset(n, args.density, seed)?;
                    Ok((
                        format!("random:{n}#{i} seed={seed} density={}", args.density),
                        p,
                    ))
                })
                .collect()
        }
    }
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let corpus = sweep_corpus(args)?;
    let n = args.n.unwrap_or(match args.kind {
        SweepKind::Exhaustive => 4,
        SweepKind::Random => 10,
    });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let guard = args.size_guard;
    // par_iter + collect keeps corpus order
    let reports: Vec<VerificationReport> = pool.install(|| {
        corpus
            .par_iter()
            .map(|(name, p)| incidence::verify_theorem_with_guard(p, guard).with_name(name.clone()))
            .collect()
    });

    let passed: usize = reports.iter().map(|r| r.summary.passed).sum();
    let failed: usize = reports.iter().map(|r| r.summary.failed).sum();
    let random = args.kind == SweepKind::Random;
    let summary = SweepSummary {
        kind: args.kind,
        n,
        posets: reports.len(),
        identities: passed + failed,
        passed,
        failed,
        failing_posets: reports.iter().filter(|r| !r.all_pass()).count(),
        density: random.then_some(args.density),
        seed: random.then_some(args.seed),
        rng: random.then_some(RNG_ALGORITHM),
    };

    match args.format {
        Format::Machine => {
            for report in &reports {
                emit_json(out, report)?;
            }
            emit_json(out, &json!({ "sweep": summary }))?;
        }
        Format::Plain => {
            for report in reports.iter().filter(|r| !r.all_pass()) {
                out.write_all(plain_report(report).as_bytes())?;
            }
            let kind = match args.kind {
                SweepKind::Exhaustive => "exhaustive".to_string(),
                SweepKind::Random => format!(
                    "random (count={}, density={}, seed={}, rng={RNG_ALGORITHM})",
                    args.count, args.density, args.seed
                ),
            };
            writeln!(out, "sweep {kind}, n = {n}")?;
            writeln!(out, "posets checked: {}", summary.posets)?;
            writeln!(
                out,
                "identities verified: {} ({} passed, {} failed)",
                summary.identities, passed, failed
            )?;
            if failed > 0 {
                writeln!(out, "{DEFECT_NOTICE}")?;
            } else {
                writeln!(out, "all identities hold")?;
            }
        }
    }
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILED
    })
}
