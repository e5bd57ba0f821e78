//! Command-line front end: compute invariant reports, compare two inputs
//! level by level, or run a batch of inputs from a list file.
//!
//! Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
//! 3 computation budget exceeded.

use std::fmt;
use std::fs;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use abiq::diagram::{parse_braid, parse_crossing_list, parse_gauss, Diagram};
use abiq::groebner::{Budget, GroebnerError};
use abiq::invariants::{
    catalog, catalog_descriptions, compute_report, InvariantReport, ReportOptions,
};
use abiq::poly::TermOrder;

/// Environment variable consulted for the default `--budget` value.
const BUDGET_ENV: &str = "ABIQ_BUDGET";

#[derive(Parser)]
#[command(
    name = "abiq",
    version,
    about = "Elementary ideal and Groebner invariants of virtual knots and links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report for one input.
    Compute(ComputeArgs),
    /// Compare two inputs level by level.
    ///
    /// Inputs are source specs: `catalog:NAME`, `file:PATH`, `braid:WORD`,
    /// or `gauss:CODE`; a bare word is a catalog name.
    Compare(CompareArgs),
    /// Compute reports for a list of source specs, one JSON line each.
    ///
    /// The list file holds one source spec per line (`#` comments and
    /// blank lines are skipped). Failing entries become inline error
    /// objects; the batch itself still exits 0. Output order matches
    /// input order regardless of `--jobs`.
    Batch(BatchArgs),
    /// List the named catalog entries.
    Catalog,
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .args(["catalog", "file", "braid", "gauss"])
))]
struct ComputeArgs {
    /// Catalog entry name (see `abiq catalog`).
    #[arg(long)]
    catalog: Option<String>,
    /// Path to a crossing-list file.
    #[arg(long)]
    file: Option<String>,
    /// Braid word, e.g. "width=2 s1 s1 v1"; the closure is computed.
    #[arg(long)]
    braid: Option<String>,
    /// Signed Gauss code, e.g. "O1+ O2+ U1+ U2+".
    #[arg(long)]
    gauss: Option<String>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct CompareArgs {
    /// First source spec.
    a: String,
    /// Second source spec.
    b: String,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct BatchArgs {
    /// Path to the list file of source specs.
    list: String,
    /// Worker threads for the batch.
    #[arg(long, default_value_t = 4)]
    jobs: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct CommonOpts {
    /// Highest ideal level to compute (levels 0..=max-k).
    #[arg(long = "max-k", default_value_t = 1)]
    max_k: usize,
    /// Term order kind for Groebner bases.
    #[arg(long, value_enum, default_value_t = OrderChoice::Grlex)]
    order: OrderChoice,
    /// Variable priority for the term order, most significant first.
    #[arg(long, default_value = "T,S,Ti,Si")]
    priority: String,
    /// Output format for compute and compare.
    #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
    format: FormatChoice,
    /// Cap on Buchberger pair processing and basis size
    /// (default: the ABIQ_BUDGET environment variable, else 250000 pairs
    /// and 5000 basis elements).
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderChoice {
    Grlex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Text,
    Json,
}

/// A failed run, carrying the exit code contract.
enum Failure {
    Usage(String),
    Input(String),
    Budget(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Input(_) => "input",
            Failure::Budget(_) => "budget",
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Budget(m) => f.write_str(m),
        }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
        }
    }
}

/// One input: where a diagram comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Source {
    Catalog(String),
    File(String),
    Braid(String),
    Gauss(String),
}

impl Source {
    /// Parses a source spec: a `kind:value` prefix form, or a bare
    /// catalog name.
    fn from_spec(spec: &str) -> Source {
        match spec.split_once(':') {
            Some(("catalog", rest)) => Source::Catalog(rest.to_string()),
            Some(("file", rest)) => Source::File(rest.to_string()),
            Some(("braid", rest)) => Source::Braid(rest.to_string()),
            Some(("gauss", rest)) => Source::Gauss(rest.to_string()),
            _ => Source::Catalog(spec.to_string()),
        }
    }

    fn label(&self) -> String {
        match self {
            Source::Catalog(n) => format!("catalog:{n}"),
            Source::File(p) => format!("file:{p}"),
            Source::Braid(w) => format!("braid:{w}"),
            Source::Gauss(c) => format!("gauss:{c}"),
        }
    }

    fn load(&self) -> Result<Diagram, Failure> {
        match self {
            Source::Catalog(name) => catalog(name).map_err(|e| Failure::Input(e.to_string())),
            Source::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("{path}: {e}")))?;
                parse_crossing_list(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
            }
            Source::Braid(word) => parse_braid(word)
                .map(|b| b.closure())
                .map_err(|e| Failure::Input(format!("braid {word:?}: {e}"))),
            Source::Gauss(code) => {
                parse_gauss(code).map_err(|e| Failure::Input(format!("gauss {code:?}: {e}")))
            }
        }
    }
}

/// Resolved options shared by every command.
struct RunConfig {
    opts: ReportOptions,
    format: FormatChoice,
}

impl RunConfig {
    fn from_common(c: &CommonOpts) -> Result<RunConfig, Failure> {
        let kind = match c.order {
            OrderChoice::Grlex => "grlex",
            OrderChoice::Lex => "lex",
        };
        let order =
            TermOrder::from_names(kind, &c.priority).map_err(|e| Failure::Usage(e.to_string()))?;
        let budget = match c.budget {
            Some(n) => budget_caps(n),
            None => match std::env::var(BUDGET_ENV) {
                Ok(raw) => budget_caps(raw.parse::<usize>().map_err(|_| {
                    Failure::Usage(format!("{BUDGET_ENV} must be an integer, got {raw:?}"))
                })?),
                Err(_) => Budget::default(),
            },
        };
        Ok(RunConfig {
            opts: ReportOptions {
                max_k: c.max_k,
                order,
                budget,
            },
            format: c.format,
        })
    }
}

fn budget_caps(n: usize) -> Budget {
    Budget {
        max_pairs: n,
        max_basis: n,
    }
}

fn report_for(source: &Source, cfg: &RunConfig) -> Result<InvariantReport, Failure> {
    let d = source.load()?;
    Ok(compute_report(&d, &source.label(), &cfg.opts)?)
}

fn cmd_compute(args: &ComputeArgs) -> Result<String, Failure> {
    let cfg = RunConfig::from_common(&args.common)?;
    let source = [
        args.catalog.clone().map(Source::Catalog),
        args.file.clone().map(Source::File),
        args.braid.clone().map(Source::Braid),
        args.gauss.clone().map(Source::Gauss),
    ]
    .into_iter()
    .flatten()
    .next()
    .expect("clap enforces exactly one source");
    let report = report_for(&source, &cfg)?;
    Ok(match cfg.format {
        FormatChoice::Text => report.to_string(),
        FormatChoice::Json => format!("{}\n", report.to_json()),
    })
}

fn cmd_compare(args: &CompareArgs) -> Result<String, Failure> {
    let cfg = RunConfig::from_common(&args.common)?;
    let (sa, sb) = (Source::from_spec(&args.a), Source::from_spec(&args.b));
    let ra = report_for(&sa, &cfg)?;
    let rb = report_for(&sb, &cfg)?;
    let rows: Vec<(usize, bool)> = (0..=cfg.opts.max_k)
        .map(|k| (k, ra.level(k).matches(rb.level(k))))
        .collect();
    let verdict = match rows.iter().find(|(_, equal)| !equal) {
        None => format!("indistinguishable at levels <= {}", cfg.opts.max_k),
        Some((k, _)) => format!("distinguished at level {k}"),
    };
    let degenerate = ra.degenerate || rb.degenerate;
    Ok(match cfg.format {
        FormatChoice::Text => {
            let mut out = String::new();
            out.push_str(&format!("a: {}\nb: {}\n", ra.name, rb.name));
            if degenerate {
                out.push_str("note: crossing-free presentation; boundary conventions apply\n");
            }
            for (k, equal) in &rows {
                out.push_str(&format!(
                    "level {k}: {}\n",
                    if *equal { "equal" } else { "unequal" }
                ));
            }
            out.push_str(&format!("verdict: {verdict}\n"));
            out
        }
        FormatChoice::Json => format!(
            "{}\n",
            json!({
                "a": ra.name,
                "b": rb.name,
                "degenerate": degenerate,
                "levels": rows
                    .iter()
                    .map(|(k, equal)| json!({"k": k, "equal": equal}))
                    .collect::<Vec<_>>(),
                "verdict": verdict,
            })
        ),
    })
}

/// One batch entry: a full report line, or an inline error object.
fn batch_line(spec: &str, cfg: &RunConfig) -> String {
    let source = Source::from_spec(spec);
    match report_for(&source, cfg) {
        Ok(report) => report.to_json().to_string(),
        Err(f) => json!({
            "name": source.label(),
            "error": {"kind": f.kind(), "message": f.to_string()},
        })
        .to_string(),
    }
}

fn cmd_batch(args: &BatchArgs) -> Result<String, Failure> {
    let cfg = RunConfig::from_common(&args.common)?;
    if args.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".to_string()));
    }
    let text = fs::read_to_string(&args.list)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.list)))?;
    let specs: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();

    // Bounded pool; slots are filled by entry index so the emitted order
    // matches the input order no matter how work interleaves.
    let lines: Vec<Mutex<Option<String>>> =
        specs.iter().map(|_| Mutex::new(None)).collect();
    let next = Mutex::new(0usize);
    std::thread::scope(|scope| {
        for _ in 0..args.jobs.min(specs.len()) {
            scope.spawn(|| loop {
                let idx = {
                    let mut n = next.lock().unwrap();
                    let idx = *n;
                    *n += 1;
                    idx
                };
                if idx >= specs.len() {
                    break;
                }
                *lines[idx].lock().unwrap() = Some(batch_line(specs[idx], &cfg));
            });
        }
    });
    let mut out = String::new();
    for line in lines {
        out.push_str(&line.into_inner().unwrap().expect("every entry ran"));
        out.push('\n');
    }
    Ok(out)
}

fn cmd_catalog() -> String {
    let mut out = String::new();
    for (name, description) in catalog_descriptions() {
        out.push_str(&format!("{name:<14} {description}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is
            // a usage error under the exit-code contract.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Batch(args) => cmd_batch(args),
        Command::Catalog => Ok(cmd_catalog()),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse_into_sources() {
        assert_eq!(
            Source::from_spec("catalog:2.1"),
            Source::Catalog("2.1".to_string())
        );
        assert_eq!(
            Source::from_spec("file:a/b.knot"),
            Source::File("a/b.knot".to_string())
        );
        assert_eq!(
            Source::from_spec("braid:width=2 s1 s1 v1"),
            Source::Braid("width=2 s1 s1 v1".to_string())
        );
        assert_eq!(
            Source::from_spec("gauss:O1+ O2+ U1+ U2+"),
            Source::Gauss("O1+ O2+ U1+ U2+".to_string())
        );
        // Bare words and unknown prefixes fall back to catalog names.
        assert_eq!(
            Source::from_spec("kishino"),
            Source::Catalog("kishino".to_string())
        );
        assert_eq!(
            Source::from_spec("2.1"),
            Source::Catalog("2.1".to_string())
        );
    }

    #[test]
    fn catalog_listing_covers_every_entry() {
        let out = cmd_catalog();
        for (name, _) in catalog_descriptions() {
            assert!(out.contains(name), "{name} missing from listing");
        }
    }

    #[test]
    fn loading_unknown_catalog_name_is_an_input_failure() {
        let err = Source::from_spec("nosuch").load().unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("nosuch"));
    }

    #[test]
    fn budget_failures_exit_with_code_3() {
        let f = Failure::from(GroebnerError::BudgetExceeded("pairs".to_string()));
        assert_eq!(f.exit_code(), 3);
        assert_eq!(f.kind(), "budget");
    }
}
