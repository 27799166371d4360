//! Thin command-line wrapper over the verification suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scverify::checks::CheckId;
use scverify::error::Error;
use scverify::gamma::{gamma_p_request, representative, GammaRequest, DEFAULT_BUDGET};
use scverify::identities::{identity_verify, IdentityId};
use scverify::report::{emit_report, ReportFormat};
use scverify::suite::{
    parse_config_file, parse_range, parse_selectors, run_suite, SuiteConfig, SUITE_GAMMA_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "scverify",
    about = "Exact verification of supercongruences, harmonic-sum lemmas and summation identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run selected checks over a prime interval and emit a report stream.
    Run(RunArgs),
    /// Certify the summation identities by exact evaluation over an n-range.
    Identities(IdentityArgs),
    /// Evaluate Gamma_p at a rational argument.
    Gamma(GammaArgs),
    /// Print the check registry with residue classes and exponents.
    ListChecks,
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated check names or groups (THEOREMS, GAMMA, LEMMAS,
    /// IDENTITIES, ALL); default THEOREMS,GAMMA,LEMMAS
    #[arg(long)]
    checks: Option<String>,
    /// Prime interval lo:hi (inclusive)
    #[arg(long)]
    primes: Option<String>,
    /// Working precision K (significant p-adic digits)
    #[arg(long)]
    precision: Option<u32>,
    /// Identity parameter range lo:hi (used when identities are selected)
    #[arg(long)]
    n: Option<String>,
    /// Cap on Gamma_p product lengths for gamma-based checks
    #[arg(long)]
    gamma_budget: Option<u64>,
    /// Largest prime for the O(p^2) Bernoulli recurrence route
    #[arg(long)]
    recurrence_cap: Option<u64>,
    /// Output format: jsonl or csv
    #[arg(long)]
    format: Option<String>,
    /// Output file (stdout when omitted or `-`)
    #[arg(long)]
    out: Option<String>,
    /// Worker threads: `auto` or a count
    #[arg(long)]
    jobs: Option<String>,
    /// Flat key=value config file; command-line flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct IdentityArgs {
    /// Comma-separated identity names; default all eight
    #[arg(long)]
    ids: Option<String>,
    /// Parameter range lo:hi
    #[arg(long, default_value = "1:200")]
    n: String,
    /// Emit machine-readable report records instead of summary lines
    #[arg(long)]
    format: Option<String>,
    /// Output file for --format (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long)]
    prime: u64,
    /// Rational argument a/b (b coprime to the prime)
    #[arg(long)]
    arg: String,
    /// Target precision N: the value is reported mod p^N
    #[arg(long)]
    precision: u32,
    /// Product length budget
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Console output; a closed pipe (e.g. `scverify ... | head`) is not an error.
fn console(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn dispatch(cli: Cli) -> scverify::Result<bool> {
    match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Identities(args) => cmd_identities(args),
        Command::Gamma(args) => cmd_gamma(args),
        Command::ListChecks => {
            cmd_list_checks();
            Ok(true)
        }
    }
}

fn cmd_run(args: RunArgs) -> scverify::Result<bool> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => Default::default(),
    };
    let pick = |flag: Option<String>, key: &str| -> Option<String> {
        flag.or_else(|| file.get(key).cloned())
    };

    let checks_raw = pick(args.checks, "checks").unwrap_or_else(|| "THEOREMS,GAMMA,LEMMAS".into());
    let tokens: Vec<String> = checks_raw.split(',').map(|s| s.to_string()).collect();
    let (checks, identities) = parse_selectors(&tokens)?;

    let (prime_lo, prime_hi) =
        parse_range(&pick(args.primes, "primes").unwrap_or("5:1000".into()))?;
    let (identity_lo, identity_hi) = parse_range(&pick(args.n, "n").unwrap_or("1:200".into()))?;
    let precision = match pick(args.precision.map(|v| v.to_string()), "precision") {
        Some(s) => s
            .parse::<u32>()
            .map_err(|_| Error::ConfigInvalid(format!("bad precision `{s}`")))?,
        None => 8,
    };
    let gamma_budget = match pick(args.gamma_budget.map(|v| v.to_string()), "gamma_budget") {
        Some(s) => s
            .parse::<u64>()
            .map_err(|_| Error::ConfigInvalid(format!("bad gamma budget `{s}`")))?,
        None => SUITE_GAMMA_BUDGET,
    };
    let recurrence_cap = match pick(args.recurrence_cap.map(|v| v.to_string()), "recurrence_cap") {
        Some(s) => s
            .parse::<u64>()
            .map_err(|_| Error::ConfigInvalid(format!("bad recurrence cap `{s}`")))?,
        None => 2000,
    };
    let format: ReportFormat = pick(args.format, "format")
        .unwrap_or_else(|| "jsonl".into())
        .parse()
        .map_err(Error::ConfigInvalid)?;
    let out = pick(args.out, "out")
        .filter(|s| s != "-")
        .map(PathBuf::from);
    let jobs = match pick(args.jobs, "jobs") {
        None => None,
        Some(s) if s.eq_ignore_ascii_case("auto") => None,
        Some(s) => Some(
            s.parse::<usize>()
                .map_err(|_| Error::ConfigInvalid(format!("bad jobs value `{s}`")))?,
        ),
    };

    let config = SuiteConfig {
        prime_lo,
        prime_hi,
        checks,
        identities,
        precision,
        identity_lo,
        identity_hi,
        gamma_budget,
        recurrence_cap,
        format,
        out: out.clone(),
        jobs,
    };

    let outcome = run_suite(&config)?;
    match emit_report(&outcome.reports, config.format, out.as_deref()) {
        // a downstream pipe hanging up mid-stream is not a verification failure
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe && out.is_none() => {}
        other => other?,
    }
    for err in &outcome.errors {
        eprintln!("check error: {err}");
    }
    eprintln!(
        "scverify: {} checks, {} passed, {} failed, {} errors, {} skipped by budget, {:.2}s",
        outcome.reports.len(),
        outcome.passed(),
        outcome.failed(),
        outcome.errors.len(),
        outcome.budget_skipped,
        outcome.elapsed.as_secs_f64()
    );
    Ok(outcome.all_pass())
}

fn cmd_identities(args: IdentityArgs) -> scverify::Result<bool> {
    let ids: Vec<IdentityId> = match &args.ids {
        None => IdentityId::all().to_vec(),
        Some(s) => {
            let mut out = Vec::new();
            for tok in s.split(',') {
                let tok = tok.trim();
                let id = IdentityId::parse(tok)
                    .ok_or_else(|| Error::ConfigInvalid(format!("unknown identity `{tok}`")))?;
                if !out.contains(&id) {
                    out.push(id);
                }
            }
            out
        }
    };
    let (lo, hi) = parse_range(&args.n)?;
    if lo < 1 || lo > hi {
        return Err(Error::ConfigInvalid(format!("bad n range {lo}:{hi}")));
    }

    let reports: Vec<_> = ids
        .iter()
        .map(|&id| identity_verify(id, lo, hi, 8))
        .collect();

    if let Some(fmt) = args.format {
        let format: ReportFormat = fmt.parse().map_err(Error::ConfigInvalid)?;
        let out = args.out.filter(|s| s != "-").map(PathBuf::from);
        match emit_report(&reports, format, out.as_deref()) {
            Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe && out.is_none() => {}
            other => other?,
        }
    } else {
        let mut out = String::new();
        for r in &reports {
            if r.pass {
                out.push_str(&format!("{:<4} n={lo}..{hi}  PASS\n", r.check));
            } else {
                out.push_str(&format!(
                    "{:<4} n={lo}..{hi}  FAIL at n={} (lhs {}, rhs {})\n",
                    r.check, r.prime, r.lhs, r.rhs
                ));
            }
        }
        console(&out);
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn cmd_gamma(args: GammaArgs) -> scverify::Result<bool> {
    let (a, b) = match args.arg.split_once('/') {
        Some((a, b)) => (
            a.trim()
                .parse::<i64>()
                .map_err(|_| Error::ConfigInvalid(format!("bad argument `{}`", args.arg)))?,
            b.trim()
                .parse::<i64>()
                .map_err(|_| Error::ConfigInvalid(format!("bad argument `{}`", args.arg)))?,
        ),
        None => (
            args.arg
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::ConfigInvalid(format!("bad argument `{}`", args.arg)))?,
            1,
        ),
    };
    let req = GammaRequest::new(a, b, args.prime, args.precision).with_budget(args.budget);
    let m = representative(a, b, args.prime, args.precision)?;
    let value = gamma_p_request(&req)?;
    console(&format!(
        "Gamma_{}({a}/{b}) = {value} (mod {}^{})   [representative m = {m}]\n",
        args.prime, args.prime, args.precision
    ));
    Ok(true)
}

fn cmd_list_checks() {
    let mut out = format!("{:<14} {:<16} {:<8}\n", "check", "class", "exponent");
    for id in CheckId::all() {
        out.push_str(&format!(
            "{:<14} {:<16} {:<8}\n",
            id.name(),
            id.class().description(),
            id.exponent()
        ));
    }
    out.push_str("\nidentities (exact equality over an n-range):\n");
    for id in IdentityId::all() {
        out.push_str(&format!("  {}\n", id.name()));
    }
    console(&out);
}
