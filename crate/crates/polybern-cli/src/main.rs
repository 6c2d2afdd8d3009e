//! `polybern` — exact and modular poly-Bernoulli numbers from the shell.
//!
//! Subcommands: `value` (one number, exact or mod M), `table` (a (k, n)
//! rectangle of exact values), `series` (generating-series coefficients),
//! `verify` (congruence/periodicity reports), `lonesum` (matrix-counting
//! oracle). Exit code 0 means success with every report passing, 1 means
//! some report failed, 2 means the arguments were malformed or outside a
//! statement's hypotheses.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::bigint::{BigInt, BigUint};
use num::traits::{Signed, ToPrimitive};

use output::{emit, rational_string, Format, OutputRecord};
use polybern::lonesum::{
    count_lonesum, count_lonesum_bruteforce, count_lonesum_mod, verify_lonesum_period,
};
use polybern::modular::{b_neg_mod, c_neg_mod};
use polybern::polybernoulli::{b_poly, c_poly, series_coefficients};
use polybern::{Kind, Modulus};

#[derive(Parser)]
#[command(
    name = "polybern",
    version,
    about = "Exact and modular poly-Bernoulli numbers of both kinds, with congruence verifiers"
)]
struct Cli {
    /// Output format for records on stdout.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Largest lower index (and series order) accepted on exact paths.
    #[arg(long, default_value_t = 200, global = true)]
    max_exact_n: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

impl From<KindArg> for Kind {
    fn from(arg: KindArg) -> Kind {
        match arg {
            KindArg::B => Kind::B,
            KindArg::C => Kind::C,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one number, exactly or modulo M.
    Value {
        kind: KindArg,
        /// Upper index; any integer.
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Lower index; any nonnegative decimal, arbitrarily large with --mod.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Evaluate modulo this integer (needs k <= 0 for B, k <= -1 for C).
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Exact values over a (k, n) rectangle, row-major.
    Table {
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        kmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        kmax: i64,
        #[arg(long)]
        nmin: u64,
        #[arg(long)]
        nmax: u64,
    },
    /// Coefficients a_0..a_order of the exponential generating series.
    Series {
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        order: u64,
    },
    /// Check congruence and periodicity statements; one report per instance.
    Verify(verify::VerifyArgs),
    /// Lonesum matrix counting and its periodicity checks.
    Lonesum {
        #[command(subcommand)]
        mode: LonesumMode,
    },
}

#[derive(Subcommand)]
enum LonesumMode {
    /// L(k, n) via the closed form, exactly or modulo M.
    Count {
        #[arg(long)]
        k: u64,
        /// Lower index; arbitrarily large with --mod.
        #[arg(long)]
        n: String,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// L(k, n) by enumerating all 2^(kn) binary matrices (kn <= 20).
    Brute {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Periodicity and period-sum checks on L(k, .) modulo M.
    Verify {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "mod")]
        modulus: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let records = match cli.command {
        Command::Value {
            kind,
            k,
            n,
            modulus,
        } => value_command(kind.into(), k, &n, modulus, cli.max_exact_n)?,
        Command::Table {
            kind,
            kmin,
            kmax,
            nmin,
            nmax,
        } => table_command(kind.into(), kmin, kmax, nmin, nmax, cli.max_exact_n)?,
        Command::Series { kind, k, order } => {
            series_command(kind.into(), k, order, cli.max_exact_n)?
        }
        Command::Verify(args) => {
            let reports = verify::run(args)?;
            let failing = reports.iter().filter(|r| !r.pass).count();
            eprintln!("checked {} instance(s), {failing} failing", reports.len());
            reports.into_iter().map(OutputRecord::from_report).collect()
        }
        Command::Lonesum { mode } => lonesum_command(mode, cli.max_exact_n)?,
    };
    let all_pass = !records.iter().any(OutputRecord::is_failing_report);
    emit(&records, cli.format).map_err(|e| format!("could not write output: {e}"))?;
    Ok(all_pass)
}

fn kind_label(kind: Kind) -> &'static str {
    match kind {
        Kind::B => "B",
        Kind::C => "C",
    }
}

fn lib(error: polybern::Error) -> String {
    error.to_string()
}

/// Parse a lower index: any size, but never negative.
fn parse_lower_index(raw: &str) -> Result<BigUint, String> {
    let n: BigInt = raw
        .trim()
        .parse()
        .map_err(|_| format!("lower index must be a decimal integer, got {raw:?}"))?;
    if n.is_negative() {
        return Err(format!("lower index must be nonnegative, got {n}"));
    }
    Ok(n.to_biguint().expect("checked nonnegative"))
}

/// Exact paths additionally cap the lower index.
fn exact_lower_index(n: &BigUint, cap: u64) -> Result<u64, String> {
    match n.to_u64() {
        Some(small) if small <= cap => Ok(small),
        _ => Err(format!(
            "exact evaluation accepts n <= {cap}; raise --max-exact-n or use --mod"
        )),
    }
}

fn value_command(
    kind: Kind,
    k: i64,
    raw_n: &str,
    modulus: Option<u64>,
    cap: u64,
) -> Result<Vec<OutputRecord>, String> {
    let n = parse_lower_index(raw_n)?;
    let record = match modulus {
        None => {
            let small = exact_lower_index(&n, cap)?;
            let value = match kind {
                Kind::B => b_poly(k, small),
                Kind::C => c_poly(k, small),
            };
            OutputRecord::Value {
                kind: kind_label(kind),
                k: k.to_string(),
                n: n.to_string(),
                r#mod: None,
                value: rational_string(&value),
            }
        }
        Some(value) => {
            let modulus = Modulus::new(value).map_err(lib)?;
            let residue = match kind {
                Kind::B if k <= 0 => b_neg_mod(k.unsigned_abs(), &n, &modulus),
                Kind::C if k <= -1 => c_neg_mod(k.unsigned_abs(), &n, &modulus).map_err(lib)?,
                Kind::B => return Err("modular evaluation needs k <= 0 for kind B".into()),
                Kind::C => return Err("modular evaluation needs k <= -1 for kind C".into()),
            };
            OutputRecord::Value {
                kind: kind_label(kind),
                k: k.to_string(),
                n: n.to_string(),
                r#mod: Some(value.to_string()),
                value: residue.value.to_string(),
            }
        }
    };
    Ok(vec![record])
}

fn table_command(
    kind: Kind,
    kmin: i64,
    kmax: i64,
    nmin: u64,
    nmax: u64,
    cap: u64,
) -> Result<Vec<OutputRecord>, String> {
    if kmin > kmax {
        return Err(format!("--kmin {kmin} exceeds --kmax {kmax}"));
    }
    if nmin > nmax {
        return Err(format!("--nmin {nmin} exceeds --nmax {nmax}"));
    }
    if nmax > cap {
        return Err(format!(
            "table accepts n <= {cap}; raise --max-exact-n for larger rows"
        ));
    }
    let mut records = Vec::new();
    for k in kmin..=kmax {
        for n in nmin..=nmax {
            let value = match kind {
                Kind::B => b_poly(k, n),
                Kind::C => c_poly(k, n),
            };
            records.push(OutputRecord::TableCell {
                kind: kind_label(kind),
                k: k.to_string(),
                n: n.to_string(),
                value: rational_string(&value),
            });
        }
    }
    Ok(records)
}

fn series_command(kind: Kind, k: i64, order: u64, cap: u64) -> Result<Vec<OutputRecord>, String> {
    if order > cap {
        return Err(format!(
            "series accepts order <= {cap}; raise --max-exact-n for deeper expansions"
        ));
    }
    let coefficients = series_coefficients(k, kind, order as usize);
    Ok(coefficients
        .into_iter()
        .enumerate()
        .map(|(n, coefficient)| OutputRecord::TableCell {
            kind: kind_label(kind),
            k: k.to_string(),
            n: n.to_string(),
            value: rational_string(&coefficient),
        })
        .collect())
}

fn lonesum_command(mode: LonesumMode, cap: u64) -> Result<Vec<OutputRecord>, String> {
    match mode {
        LonesumMode::Count { k, n, modulus } => {
            let n = parse_lower_index(&n)?;
            let record = match modulus {
                None => {
                    let small = exact_lower_index(&n, cap)?;
                    OutputRecord::Value {
                        kind: "L",
                        k: k.to_string(),
                        n: n.to_string(),
                        r#mod: None,
                        value: count_lonesum(k, small).to_string(),
                    }
                }
                Some(value) => {
                    let modulus = Modulus::new(value).map_err(lib)?;
                    OutputRecord::Value {
                        kind: "L",
                        k: k.to_string(),
                        n: n.to_string(),
                        r#mod: Some(value.to_string()),
                        value: count_lonesum_mod(k, &n, &modulus).value.to_string(),
                    }
                }
            };
            Ok(vec![record])
        }
        LonesumMode::Brute { k, n } => {
            let count = count_lonesum_bruteforce(k, n).map_err(lib)?;
            Ok(vec![OutputRecord::Value {
                kind: "L",
                k: k.to_string(),
                n: n.to_string(),
                r#mod: None,
                value: count.to_string(),
            }])
        }
        LonesumMode::Verify { k, n, modulus } => {
            let modulus = Modulus::new(modulus).map_err(lib)?;
            let reports = verify_lonesum_period(k, n, &modulus).map_err(lib)?;
            Ok(reports.into_iter().map(OutputRecord::from_report).collect())
        }
    }
}
