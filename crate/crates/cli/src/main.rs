//! `polyperm`: generate order-4 matrices, compute permanents and run the
//! claim verifiers.
//!
//! Exit codes: 0 confirmed or success, 1 refuted (or failed replay),
//! 2 usage or parse error, 3 budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyperm_core::block::{block_permutation, l4d_partner, m4d, BlockParams};
use polyperm_core::format::{parse_matrix, parse_support, write_matrix, write_support};
use polyperm_core::{has_positive_diagonal, permanent_exact, HyperMatrix, PermanentOptions, Q};
use polyperm_verify::replay::replay;
use polyperm_verify::{ClaimId, EnumerationReport, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "polyperm", version, about = "Permanents of order-4 polystochastic matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a support or matrix file.
    Gen(GenArgs),
    /// Permanent of a support or matrix file.
    Per(PerArgs),
    /// Run a claim verifier and write its report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    M4,
    L4,
    Block,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(long)]
    d: usize,
    /// Weight of `ℳ₄ᵈ` in the convex sum (l4 only), e.g. `1/2`.
    #[arg(long)]
    lambda: Option<String>,
    /// Partition tuple, comma-separated values in 1..=3 (block only).
    #[arg(long, value_delimiter = ',')]
    eps: Vec<u8>,
    /// Parity bit of the filled subcubes (block only).
    #[arg(long, default_value_t = 0)]
    s: u8,
    /// λ over the filled subcubes in increasing id, as a hex bit string (block only).
    #[arg(long, default_value = "0")]
    lambda_bits: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PerArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "exact", required_unless_present = "exact")]
    positivity: bool,
    #[arg(long)]
    exact: bool,
    /// Most diagonals the exact permanent may visit.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    claim: String,
    #[arg(long, env = "POLYPERM_THREADS", default_value_t = 1)]
    threads: usize,
    /// Work units this run may complete before stopping.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Where to write the report.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-check the certificates of an existing report instead of searching.
    #[arg(long)]
    replay: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<polyperm_core::Error> for Failure {
    fn from(e: polyperm_core::Error) -> Self {
        match e {
            polyperm_core::Error::Budget { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<polyperm_verify::Error> for Failure {
    fn from(e: polyperm_verify::Error) -> Self {
        match e {
            polyperm_verify::Error::Core(c) => c.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: &GenArgs) -> Result<u8, Failure> {
    let text = match args.kind {
        Kind::M4 => write_support(&m4d(args.d)?),
        Kind::L4 => {
            let raw = args.lambda.as_deref().ok_or_else(|| Failure::Usage("l4 needs --lambda".into()))?;
            let lambda = Q::from_str(raw).map_err(|_| Failure::Usage(format!("bad --lambda `{raw}`")))?;
            if lambda <= Q::from_integer(0.into()) || lambda >= Q::from_integer(1.into()) {
                return Err(Failure::Usage("--lambda must lie strictly between 0 and 1".into()));
            }
            let m = HyperMatrix::indicator(&m4d(args.d)?);
            let partner = HyperMatrix::indicator(&l4d_partner(args.d)?);
            write_matrix(&m.convex(&partner, &lambda)?)
        }
        Kind::Block => {
            if args.eps.len() != args.d {
                return Err(Failure::Usage(format!("--eps needs {} entries", args.d)));
            }
            let bits = u128::from_str_radix(args.lambda_bits.trim_start_matches("0x"), 16)
                .map_err(|_| Failure::Usage(format!("bad --lambda-bits `{}`", args.lambda_bits)))?;
            write_support(&block_permutation(&BlockParams::from_bits(args.eps.clone(), args.s, bits)?))
        }
    };
    emit(&text, args.out.as_deref())?;
    Ok(0)
}

fn per(args: &PerArgs) -> Result<u8, Failure> {
    let text = read(&args.file)?;
    let matrix = if text.starts_with("polymat") {
        parse_matrix(&text)?
    } else {
        HyperMatrix::indicator(&parse_support(&text)?)
    };
    if args.positivity {
        match has_positive_diagonal(&matrix.support()).diagonal() {
            Some(dg) => {
                for idx in dg.indices() {
                    println!("{}", idx.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","));
                }
            }
            None => println!("none"),
        }
    } else {
        let mut opts = PermanentOptions::default();
        if let Some(b) = args.budget {
            opts.diagonal_budget = b;
        }
        println!("{}", permanent_exact(&matrix, opts)?.value);
    }
    Ok(0)
}

fn summary(report: &EnumerationReport) -> String {
    let mut s = format!("{} {:?}\n", report.claim_id, report.status);
    for (k, v) in &report.counts {
        s.push_str(&format!("  {k}: {v}\n"));
    }
    for n in &report.notes {
        s.push_str(&format!("  note: {n}\n"));
    }
    s
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let claim = ClaimId::from_str(&args.claim)?;
    if let Some(path) = &args.replay {
        let report = EnumerationReport::from_json(&read(path)?)?;
        if report.claim_id != claim.as_str() {
            return Err(Failure::Usage(format!("report is for {}, not {claim}", report.claim_id)));
        }
        let failures = replay(&report)?;
        for f in &failures {
            println!("replay failed: {f}");
        }
        println!(
            "replayed {} representatives and {} witnesses, {} failures",
            report.representatives.len(),
            report.witnesses.len(),
            failures.len()
        );
        return Ok(if failures.is_empty() { 0 } else { 1 });
    }
    let config = RunConfig {
        threads: args.threads,
        node_budget: args.budget,
        checkpoint_path: args.checkpoint.clone(),
        output_format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
    };
    let start = Instant::now();
    let report = polyperm_verify::run(claim, &config)?;
    eprintln!("{claim}: {:.2?} on {} threads", start.elapsed(), config.threads);
    let json = report.to_json()?;
    if let Some(out) = &args.out {
        emit(&json, Some(out))?;
    }
    match config.output_format {
        OutputFormat::Json if args.out.is_none() => print!("{json}"),
        _ => print!("{}", summary(&report)),
    }
    Ok(report.status.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Per(a) => per(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
