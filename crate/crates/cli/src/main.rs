mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use strictpoly::functors::{c_presentation, q_presentation};
use strictpoly::harness::{Runner, VerificationReport};
use strictpoly::padic::{digit_sum, msn_bruteforce, msn_valuation_formula, primes_up_to, torsion_interval, valuation, Prime};
use strictpoly::structure::blockwise_gcd_decomposition;
use strictpoly::zlinalg::ab_structure;

#[derive(Parser)]
#[command(name = "strictpoly", version, about = "Torsion in cokernels of divided-power multiplication maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// M(s, n) with per-prime valuations against the closed formula.
    Msn {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// The admissible degrees INT(p, s) and the digit sum DIG_p(s).
    Interval {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        json: bool,
    },
    /// Structure of Q^s(Z^rank).
    Q {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Structure of C_{s,parts}(Z^rank), optionally with its weight decomposition.
    Cokernel {
        #[arg(long)]
        s: usize,
        /// Number of parts d+1 of the compositions defining the relations.
        #[arg(long)]
        parts: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification campaign.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Campaign {
    Msn,
    Q,
    Torsion,
    Gamma,
    Shuffle,
    Degrees,
    Main,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    campaign: Campaign,
    #[arg(long)]
    s_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
    /// Largest |alpha| + |beta| for the shuffle campaign.
    #[arg(long)]
    total_max: Option<usize>,
    /// Single weight for the main campaign; requires --rank.
    #[arg(long, requires = "rank")]
    s: Option<usize>,
    #[arg(long, requires = "s")]
    rank: Option<usize>,
    /// Write the full report as JSON.
    #[arg(long, value_name = "OUT.json")]
    json: Option<PathBuf>,
    /// Write one row per check as CSV.
    #[arg(long, value_name = "OUT.csv")]
    csv: Option<PathBuf>,
    /// Suppress the streamed table.
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Msn { s, n, json } => msn(s, n, json),
        Command::Interval { p, s, json } => interval(p, s, json),
        Command::Q { s, rank, json } => q(s, rank, json),
        Command::Cokernel { s, parts, rank, weights, json } => cokernel(s, parts, rank, weights, json),
        Command::Verify(args) => verify(args),
    }
}

fn print_json(v: &Value) -> CliResult<u8> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(0)
}

fn msn(s: usize, n: usize, as_json: bool) -> CliResult<u8> {
    let m = msn_bruteforce(s, n)?;
    let mut rows = Vec::new();
    for p in primes_up_to(s as u64) {
        let v = valuation(p, &m)?;
        let formula = msn_valuation_formula(p, s, n)?;
        rows.push((p, v, formula));
    }
    let agree = rows.iter().all(|&(_, v, f)| v == f);
    if as_json {
        let primes: Vec<Value> =
            rows.iter().map(|&(p, v, f)| json!({ "p": p.get(), "valuation": v, "formula": f })).collect();
        print_json(&json!({ "s": s, "n": n, "m": m.to_string(), "primes": primes, "agree": agree }))?;
    } else {
        println!("M({s},{n}) = {m}");
        println!("{:>5} {:>10} {:>8}", "p", "valuation", "formula");
        for (p, v, f) in &rows {
            println!("{:>5} {:>10} {:>8}", p.get(), v, f);
        }
    }
    Ok(if agree { 0 } else { 1 })
}

fn interval(p: u64, s: u64, as_json: bool) -> CliResult<u8> {
    let p = Prime::new(p)?;
    let int = torsion_interval(p, s)?;
    let dig = digit_sum(p, s);
    if as_json {
        return print_json(&json!({ "p": p.get(), "s": s, "digit_sum": dig, "interval": int.members }));
    }
    let members: Vec<String> = int.members.iter().map(u64::to_string).collect();
    println!("DIG_{p}({s}) = {dig}");
    println!("INT({p},{s}) = {{{}}}", members.join(", "));
    Ok(0)
}

fn q(s: usize, rank: usize, as_json: bool) -> CliResult<u8> {
    let g = ab_structure(q_presentation(s, rank)?.presentation());
    if as_json {
        return print_json(&json!({ "s": s, "rank": rank, "group": g }));
    }
    println!("Q^{s}(Z^{rank}) = {g}");
    Ok(0)
}

fn cokernel(s: usize, parts: usize, rank: usize, weights: bool, as_json: bool) -> CliResult<u8> {
    if parts < 2 {
        return Err(format!("--parts must be at least 2, got {parts}").into());
    }
    let v = c_presentation(s, parts - 1, rank)?;
    let dec = blockwise_gcd_decomposition(&v)?;
    let g = dec.total();
    if as_json {
        let mut out = json!({ "s": s, "parts": parts, "rank": rank, "group": g, "degree": dec.max_length() });
        if weights {
            out["weights"] = serde_json::to_value(&dec)?;
        }
        return print_json(&out);
    }
    println!("C_{{{s},{parts}}}(Z^{rank}) = {g}");
    println!("degree (max weight length) = {}", dec.max_length());
    if weights {
        println!("{:<24} {:>6}  group", "weight", "length");
        for (label, block) in dec.blocks() {
            println!("{:<24} {:>6}  {block}", label.weight().to_string(), label.length());
        }
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> CliResult<u8> {
    let mut table = output::Table::new(!args.quiet);
    let report = {
        let mut runner = Runner::with_observer(|r| table.row(r));
        run_campaign(&mut runner, &args)?
    };
    table.finish(&report);
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json())?;
    }
    if let Some(path) = &args.csv {
        output::write_csv(&report, std::fs::File::create(path)?)?;
    }
    Ok(report.exit_code() as u8)
}

fn run_campaign(runner: &mut Runner<'_>, a: &VerifyArgs) -> CliResult<VerificationReport> {
    Ok(match a.campaign {
        Campaign::Msn => runner.msn(a.s_max.unwrap_or(12))?,
        Campaign::Q => runner.q_classification(a.s_max.unwrap_or(8), a.n_max.unwrap_or(3))?,
        Campaign::Torsion => runner.torsion_bound(a.s_max.unwrap_or(7), a.n_max.unwrap_or(3))?,
        Campaign::Gamma => runner.gamma_identities(a.s_max.unwrap_or(8), a.n_max.unwrap_or(2))?,
        Campaign::Shuffle => runner.shuffle_products(a.total_max.unwrap_or(6), a.n_max.unwrap_or(3))?,
        Campaign::Degrees => runner.degrees(a.d_max.unwrap_or(5))?,
        Campaign::Main => match (a.s, a.rank) {
            (Some(s), Some(n)) => runner.main_theorem(s, n)?,
            _ => runner.main_theorem_range(a.s_max.unwrap_or(6))?,
        },
    })
}
