//! `cluster-zeros`: build f-polynomials, list their certified roots, and run
//! the verification suites.

mod output;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cluster_zeros::rational;
use cluster_zeros::verify::suite::{self, Selection, Suite};
use cluster_zeros::{Rational, RootSystemType};

/// Exact f- and f+-polynomials of finite cluster complexes and certified
/// statements about their real roots.
#[derive(Parser, Debug)]
#[command(name = "cluster-zeros", version, about)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Worker threads (0 lets the pool decide).
    #[arg(long, global = true, env = "CLUSTER_ZEROS_THREADS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print integer coefficients of f (and f+ where defined), ascending.
    Poly(TypeArgs),
    /// List the real roots of f, largest first, as exact intervals.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        /// List the roots of f+ instead of f.
        #[arg(long)]
        plus: bool,
        /// Width bound for reported intervals: `n/d`, a decimal or `2^-k`.
        #[arg(long, default_value = "2^-53")]
        eps: String,
    },
    /// Run a verification suite and emit a JSON report array.
    Verify {
        /// identities, conj2, conj3, conj4, section8, divisibility, addendum, fact73 or all.
        #[arg(long)]
        suite: String,
        /// Restrict to one type (with --rank) or one series (A, B or D alone).
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
        /// Restrict to one series: A, B or D.
        #[arg(long)]
        series: Option<String>,
        /// Largest rank checked.
        #[arg(long)]
        lmax: Option<u32>,
    },
    /// Smallest root of each f along a series, with strict-decrease verdicts.
    Scan {
        #[arg(long)]
        series: String,
        #[arg(long, default_value_t = 50)]
        lmax: u32,
        #[arg(long, default_value = "2^-53")]
        eps: String,
    },
    /// Roots of f on [0, 1] as scatter data or a minimal SVG.
    Plot(TypeArgs),
}

#[derive(Args, Debug)]
struct TypeArgs {
    /// Type name such as F4, B3 or I2(7), or a family letter used with --rank.
    #[arg(long = "type")]
    ty: String,
    /// Rank for A, B and D; the parameter p for I2.
    #[arg(long)]
    rank: Option<u32>,
}

/// Failure modes that map onto the exit code contract.
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_type(ty: &str, rank: Option<u32>) -> Result<RootSystemType, Failure> {
    let parsed = match rank {
        Some(r) => RootSystemType::from_parts(ty, Some(r)),
        None => ty.parse(),
    };
    parsed.map_err(|e| usage(e.to_string()))
}

/// Accepts `n/d`, `n`, a finite decimal, or `2^-k`.
fn parse_eps(s: &str) -> Result<Rational, Failure> {
    let eps = match s.trim().strip_prefix("2^-") {
        Some(k) => rational::pow2_neg(k.parse().map_err(|_| usage(format!("bad eps {s:?}")))?),
        None => rational::parse(s).map_err(|e| usage(format!("bad eps {s:?}: {e}")))?,
    };
    if eps <= Rational::from_integer(0.into()) {
        return Err(usage("eps must be positive"));
    }
    Ok(eps)
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let (text, ok) = match cli.command {
        Command::Poly(t) => {
            let ty = parse_type(&t.ty, t.rank)?;
            (output::poly(ty, cli.format.unwrap_or(Format::Json))?, true)
        }
        Command::Roots { ty, plus, eps } => {
            let t = parse_type(&ty.ty, ty.rank)?;
            let eps = parse_eps(&eps)?;
            (output::roots(t, plus, &eps, cli.format.unwrap_or(Format::Json))?, true)
        }
        Command::Verify {
            suite,
            ty,
            rank,
            series,
            lmax,
        } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let sel = selection(ty, rank, series, lmax)?;
            let reports = suite::run(suite, &sel).map_err(usage)?;
            eprintln!("{}", output::summary(suite, &reports));
            let format = cli.format.unwrap_or(Format::Json);
            (output::reports(&reports, format)?, suite::all_passed(&reports))
        }
        Command::Scan { series, lmax, eps } => {
            let eps = parse_eps(&eps)?;
            output::scan(&series, lmax, &eps, cli.format.unwrap_or(Format::Json))?
        }
        Command::Plot(t) => {
            let ty = parse_type(&t.ty, t.rank)?;
            output::plot(ty, cli.format.unwrap_or(Format::Svg))?
        }
    };
    emit(&cli.out, &text)?;
    Ok(ok)
}

fn selection(
    ty: Option<String>,
    rank: Option<u32>,
    series: Option<String>,
    lmax: Option<u32>,
) -> Result<Selection, Failure> {
    let mut sel = Selection {
        ty: None,
        series: series.map(|s| s.to_ascii_uppercase()),
        l_max: lmax,
    };
    if let Some(s) = &sel.series {
        if !matches!(s.as_str(), "A" | "B" | "D") {
            return Err(usage(format!("series must be A, B or D, got {s}")));
        }
    }
    match (ty, rank) {
        (Some(t), None) if matches!(t.to_ascii_uppercase().as_str(), "A" | "B" | "D") => {
            sel.series = Some(t.to_ascii_uppercase());
        }
        (Some(t), r) => sel.ty = Some(parse_type(&t, r)?),
        (None, Some(_)) => return Err(usage("--rank needs --type")),
        (None, None) => {}
    }
    Ok(sel)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_forms() {
        assert_eq!(parse_eps("2^-10").ok(), Some(rational::pow2_neg(10)));
        assert_eq!(parse_eps("1/1000").ok(), Some(rational::ratio(1, 1000)));
        assert_eq!(parse_eps("0.5").ok(), Some(rational::ratio(1, 2)));
        assert!(parse_eps("0").is_err());
        assert!(parse_eps("-1/3").is_err());
        assert!(parse_eps("2^-x").is_err());
    }

    #[test]
    fn selection_forms() {
        let s = selection(Some("d".into()), None, None, Some(9)).ok().unwrap();
        assert_eq!(s.series.as_deref(), Some("D"));
        assert_eq!(s.l_max, Some(9));
        let s = selection(Some("D".into()), Some(12), None, None).ok().unwrap();
        assert_eq!(s.ty, Some(RootSystemType::D(12)));
        let s = selection(Some("E7".into()), None, None, None).ok().unwrap();
        assert_eq!(s.ty, Some(RootSystemType::E7));
        assert!(selection(None, Some(3), None, None).is_err());
        assert!(selection(None, None, Some("C".into()), None).is_err());
    }
}
