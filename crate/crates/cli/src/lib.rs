//! Command-line front end: polynomials, roots, root-locus sweeps and check
//! campaigns.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use totdom::graph::{DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP};
use totdom::roots::{self, find_roots};
use totdom::verify::{self, CampaignConfig, Level, Status};
use totdom::{EnumerationConfig, Error, Polynomial, RootSet};

pub mod family;
pub mod render;

use family::{resolve, Family, Input};
use render::{float, PlotPoint, PolySummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) | CliError::Io(_) => EXIT_RESOURCE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Resource(m) => write!(f, "resource error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::CoefficientOverflow => {
                CliError::Resource(e.to_string())
            }
            Error::ZeroPolynomial => CliError::Usage(
                "D_t is identically zero (isolated vertex); nothing to solve".into(),
            ),
            other => CliError::Usage(other.to_string()),
        }
    }
}

const INPUT_HELP: &str = "Graph input: an edge-list file (first line n, then one `u v` pair per \
line, `#` comments) or a family spec `name:args`, one of complete:N, friendship:N, book:N, \
kmn:M,N, corona-empty:N,M (P_N with M pendant leaves per vertex)";

#[derive(Debug, Parser)]
#[command(
    name = "totdom",
    version,
    about = "Total domination polynomials and their roots"
)]
pub struct Cli {
    /// Largest graph order enumerated exhaustively (at most 63)
    #[arg(long, global = true, env = "TOTDOM_CAP")]
    pub cap: Option<usize>,
    /// Write the main output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients, total domination number, set count and unimodality
    Poly {
        #[arg(help = INPUT_HELP)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: PolyFormat,
    },
    /// Roots with multiplicities and residuals
    Roots {
        #[arg(help = INPUT_HELP)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: RootsFormat,
        /// Also check |z + 1| <= (2^n - 1)^(1/δ) for every root
        #[arg(long)]
        check_disc: bool,
    },
    /// Root loci over a parameter range, as CSV (and optionally SVG)
    Sweep(SweepArgs),
    /// Run a check campaign and write one JSON report per line
    Check {
        /// Campaign config (JSON); the default campaign when omitted
        config: Option<PathBuf>,
        /// Corpus seed, overriding the config
        #[arg(long)]
        seed: Option<u64>,
        /// Print the default campaign config and exit
        #[arg(long)]
        print_default: bool,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// complete, friendship, book or kmn
    pub family: String,
    /// Inclusive parameter range `A..B`; for kmn every pair A <= m <= n <= B
    pub range: String,
    /// Also write an SVG scatter plot here
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PolyFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RootsFormat {
    Json,
    Csv,
}

/// What a command produced: the main output, notes for stderr and the exit
/// status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub output: String,
    pub notes: String,
    pub code: i32,
}

fn enumeration_config(cap: Option<usize>) -> Result<EnumerationConfig, CliError> {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    if cap > MAX_ENUMERATION_CAP {
        return Err(CliError::Usage(format!(
            "--cap {cap} exceeds the maximum of {MAX_ENUMERATION_CAP}"
        )));
    }
    Ok(EnumerationConfig::with_cap(cap))
}

/// Runs a parsed command. Side files (`--svg`) are written here; the main
/// output is returned.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = enumeration_config(cli.cap)?;
    match &cli.command {
        Command::Poly { input, format } => cmd_poly(input, *format, &cfg),
        Command::Roots {
            input,
            format,
            check_disc,
        } => cmd_roots(input, *format, *check_disc, &cfg),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Check {
            config,
            seed,
            print_default,
        } => {
            if *print_default {
                let text = serde_json::to_string_pretty(&CampaignConfig::default_campaign())
                    .expect("config serialises");
                return Ok(Outcome {
                    output: text + "\n",
                    ..Outcome::default()
                });
            }
            cmd_check(config.as_deref(), *seed, cli.cap)
        }
    }
}

pub fn cmd_poly(
    input: &str,
    format: PolyFormat,
    cfg: &EnumerationConfig,
) -> Result<Outcome, CliError> {
    let r = resolve(&Input::parse(input)?, cfg)?;
    let summary = PolySummary {
        label: &r.label,
        order: r.graph.order(),
        polynomial: &r.polynomial,
    };
    let output = match format {
        PolyFormat::Json => summary.to_json() + "\n",
        PolyFormat::Table => summary.to_table(),
    };
    Ok(Outcome {
        output,
        ..Outcome::default()
    })
}

fn root_rows(param: &str, rs: &RootSet) -> Vec<[String; 5]> {
    let mut rows = Vec::new();
    if rs.zero_multiplicity > 0 {
        rows.push([
            param.to_string(),
            float(0.0),
            float(0.0),
            rs.zero_multiplicity.to_string(),
            float(0.0),
        ]);
    }
    for r in &rs.roots {
        rows.push([
            param.to_string(),
            float(r.re),
            float(r.im),
            r.multiplicity.to_string(),
            float(r.residual),
        ]);
    }
    rows
}

pub const CSV_HEADER: [&str; 5] = ["param", "re", "im", "multiplicity", "residual"];

fn csv_text(rows: &[[String; 5]]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory CSV");
    for row in rows {
        w.write_record(row).expect("in-memory CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
}

pub fn cmd_roots(
    input: &str,
    format: RootsFormat,
    check_disc: bool,
    cfg: &EnumerationConfig,
) -> Result<Outcome, CliError> {
    let r = resolve(&Input::parse(input)?, cfg)?;
    let rs = find_roots(&r.polynomial)?;
    let disc = if check_disc {
        Some(roots::check_disc_bound_for(&r.graph, &r.polynomial)?.with_instance(r.label.clone()))
    } else {
        None
    };
    let code = match &disc {
        Some(rep) if rep.status == Status::Fail => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };
    let (output, notes) = match format {
        RootsFormat::Json => {
            let mut v = json!({
                "input": r.label,
                "degree": rs.degree(),
                "zero_multiplicity": rs.zero_multiplicity,
                "roots": rs.roots,
            });
            if let Some(rep) = &disc {
                v["disc_check"] = serde_json::to_value(rep).expect("report serialises");
            }
            (render::json(&v) + "\n", String::new())
        }
        RootsFormat::Csv => (
            csv_text(&root_rows(&r.label, &rs)),
            disc.map(|rep| render::json(&rep) + "\n")
                .unwrap_or_default(),
        ),
    };
    Ok(Outcome {
        output,
        notes,
        code,
    })
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("range '{text}' is not of the form A..B"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// The parameter label and family instance for each sweep step.
pub fn sweep_members(family: &str, range: &str) -> Result<Vec<(String, Family)>, CliError> {
    let (a, b) = parse_range(range)?;
    let single = |make: fn(usize) -> Family| -> Vec<(String, Family)> {
        (a..=b).map(|n| (n.to_string(), make(n))).collect()
    };
    Ok(match family {
        "complete" => single(Family::Complete),
        "friendship" => single(Family::Friendship),
        "book" => single(Family::Book),
        "kmn" => (a..=b)
            .flat_map(|m| (m..=b).map(move |n| (format!("{m},{n}"), Family::Kmn(m, n))))
            .collect(),
        other => {
            return Err(CliError::Usage(format!(
                "unknown sweep family '{other}' (expected complete, friendship, book or kmn)"
            )))
        }
    })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Outcome, CliError> {
    let members = sweep_members(&args.family, &args.range)?;
    let mut rows = Vec::new();
    let mut points = Vec::new();
    let last = members.len().saturating_sub(1).max(1) as f64;
    for (i, (param, fam)) in members.iter().enumerate() {
        let p: Polynomial = fam.polynomial()?;
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let rs = find_roots(&p)?;
        rows.extend(root_rows(param, &rs));
        let shade = i as f64 / last;
        if rs.zero_multiplicity > 0 {
            points.push(PlotPoint {
                shade,
                re: 0.0,
                im: 0.0,
            });
        }
        points.extend(rs.roots.iter().map(|r| PlotPoint {
            shade,
            re: r.re,
            im: r.im,
        }));
    }
    if let Some(path) = &args.svg {
        let title = format!("Total domination roots: {} {}", args.family, args.range);
        write_file(path, &render::svg(&title, &points))?;
    }
    Ok(Outcome {
        output: csv_text(&rows),
        ..Outcome::default()
    })
}

pub fn cmd_check(
    config: Option<&Path>,
    seed: Option<u64>,
    cap: Option<usize>,
) -> Result<Outcome, CliError> {
    let mut campaign = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            CampaignConfig::from_json(&text)?
        }
        None => CampaignConfig::default_campaign(),
    };
    if seed.is_some() {
        campaign.seed = seed;
    }
    if let Some(cap) = cap {
        campaign.cap = enumeration_config(Some(cap))?.cap;
    }
    let reports = verify::run_campaign(&campaign)?;
    let mut output = String::new();
    for r in &reports {
        output.push_str(&render::json(r));
        output.push('\n');
    }
    let count = |level: Level, status: Status| {
        reports
            .iter()
            .filter(|r| r.level == level && r.status == status)
            .count()
    };
    let notes = format!(
        "{} reports; theorem failures {}, conjecture failures {}, descriptive failures {}, unconverged {}, skipped {}\n",
        reports.len(),
        count(Level::Theorem, Status::Fail),
        count(Level::Conjecture, Status::Fail),
        count(Level::Descriptive, Status::Fail),
        reports.iter().filter(|r| r.status == Status::Unconverged).count(),
        reports.iter().filter(|r| r.status == Status::Skipped).count(),
    );
    let code = if verify::has_theorem_failure(&reports) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        output,
        notes,
        code,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}
