use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use supercongruence::claims::registry;
use supercongruence::engine::{run_suite, Report, RunConfig};
use supercongruence::output;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "supercong", version, about = "Verify WZ-pair supercongruences and their lemmas over prime ranges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered claims over a prime range
    Verify(VerifyArgs),
    /// Print the claim registry
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the WZ relation on the (n, k) grid for both pairs
    Telescope {
        #[arg(long, default_value_t = 120)]
        grid: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Check the summed WZ relation for n = 1..=nmax, both pairs
    Identity {
        #[arg(long, default_value_t = 97)]
        nmax: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write results here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: one per core)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim ids, or `all`
    #[arg(long, default_value = "all")]
    claims: String,
    #[arg(long, default_value_t = 5)]
    pmin: u64,
    #[arg(long, default_value_t = 199)]
    pmax: u64,
    /// Primes up to this bound are checked along both paths
    #[arg(long = "oracle-max", default_value_t = 97)]
    oracle_max: u64,
    /// Range of the exact binomial-transform identities
    #[arg(long, default_value_t = 300)]
    nmax: u64,
    /// Telescoping grid size
    #[arg(long, default_value_t = 120)]
    grid: u64,
    /// Range of the summed WZ relations
    #[arg(long = "boundary-max", default_value_t = 97)]
    boundary_max: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| usage(format!("cannot write output: {e}")))
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => output::to_text(report),
        Format::Json => output::to_json(report) + "\n",
        Format::Csv => output::to_csv(report),
    }
}

fn run(config: RunConfig, common: &Common) -> ExitCode {
    if config.p_min > config.p_max {
        return usage(format!("--pmin {} exceeds --pmax {}", config.p_min, config.p_max));
    }
    let config = RunConfig { worker_count: common.threads.unwrap_or(0), ..config };
    let report = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let Err(code) = emit(&render(&report, common.format), &common.out) {
        return code;
    }
    for o in report.counterexamples() {
        let inst = o.instance.map(|i| format!(" ({i})")).unwrap_or_default();
        eprintln!(
            "COUNTEREXAMPLE: {} at p={}{inst}: lhs {} rhs {} (mod {}), v = {}",
            o.claim, o.p, o.lhs, o.rhs, o.modulus, o.diff_valuation
        );
    }
    for d in report.decompositions.iter().filter(|d| !d.holds()) {
        eprintln!("COUNTEREXAMPLE: {} decomposition fails at p={}", d.pair, d.p);
    }
    for e in &report.errors {
        eprintln!("error: {e}");
    }
    eprintln!(
        "{} outcomes, {} counterexamples, {} errors in {:.2}s",
        report.outcomes.len(),
        report.counterexamples().count(),
        report.errors.len(),
        report.elapsed.as_secs_f64()
    );
    exit_code(&report)
}

/// Internal failures outrank counterexamples: a failed evaluation means the
/// verdicts next to it cannot be trusted.
fn exit_code(report: &Report) -> ExitCode {
    if report.has_mismatch() || !report.errors.is_empty() {
        ExitCode::from(EXIT_INTERNAL)
    } else if !report.all_hold() {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    }
}

fn list(format: Format) -> ExitCode {
    let claims = registry();
    let text = match format {
        Format::Text => {
            let id_w = claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
            let src_w = claims.iter().map(|c| c.source.len()).max().unwrap_or(0);
            let mut s = String::new();
            for c in &claims {
                let modulus = if c.is_identity() { "exact".to_string() } else { format!("p^{}", c.modulus_exponent) };
                s += &format!("{:<id_w$}  {:<6}  {:<5}  {:<src_w$}  {}\n", c.id, c.domain.to_string(), modulus, c.source, c.statement);
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = claims
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "domain": c.domain.to_string(),
                        "modulus_exponent": c.modulus_exponent,
                        "source": c.source,
                        "statement": c.statement,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("registry serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut rows = vec![["id", "domain", "modulus_exponent", "source", "statement"].map(String::from)];
            rows.extend(claims.iter().map(|c| {
                [c.id.into(), c.domain.to_string(), c.modulus_exponent.to_string(), c.source.into(), c.statement.into()]
            }));
            for r in rows {
                w.write_record(r).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
        }
    };
    match emit(&text, &None) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

fn split_claims(spec: &str) -> Vec<String> {
    if spec.trim() == "all" {
        return Vec::new();
    }
    spec.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List { format } => list(format),
        Command::Verify(a) => {
            let claims = split_claims(&a.claims);
            if claims.is_empty() && a.claims.trim() != "all" {
                return usage("--claims needs at least one id");
            }
            let config = RunConfig {
                claims,
                p_min: a.pmin,
                p_max: a.pmax,
                oracle_max: a.oracle_max,
                identity_n_max: a.nmax,
                telescope_grid: a.grid,
                boundary_n_max: a.boundary_max,
                ..RunConfig::default()
            };
            run(config, &a.common)
        }
        Command::Telescope { grid, common } => {
            let config = RunConfig { telescope_grid: grid, ..RunConfig::with_claims(&["wz256-telescope", "wz1024-telescope"]) };
            run(config, &common)
        }
        Command::Identity { nmax, common } => {
            if nmax == 0 {
                return usage("--nmax must be at least 1");
            }
            let config = RunConfig { boundary_n_max: nmax, ..RunConfig::with_claims(&["wz256-boundary", "wz1024-boundary"]) };
            run(config, &common)
        }
    }
}

