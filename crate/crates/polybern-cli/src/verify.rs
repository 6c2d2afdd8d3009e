//! The `verify` subcommand: single-statement checks and the full sweep.

use clap::Args;
use rayon::prelude::*;

use polybern::congruence::{
    admissible_pairs, verify_p_minus_3, verify_period_sum, verify_periodicity,
    verify_residues_at_p, verify_two_congruence,
};
use polybern::lonesum::verify_lonesum_period;
use polybern::modular::is_prime;
use polybern::{CongruenceReport, Error, Kind, Modulus, TheoremId};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Statement to check: T2.1, C2.2, T2.3, T2.4, T3.1..T3.6, C3.7, T3.8,
    /// or "all" for the full sweep.
    pub theorem: String,

    /// Odd prime for the residue statements.
    #[arg(long)]
    pub p: Option<u64>,

    /// Sweep over primes up to this bound (T3.5 and "all").
    #[arg(long)]
    pub pmax: Option<u64>,

    /// Modulus for the periodicity and period-sum statements.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,

    /// Upper-index magnitude.
    #[arg(long)]
    pub k: Option<u64>,

    /// Upper-index sweep bound; defaults to 2(p-1) where a prime is in play.
    #[arg(long)]
    pub kmax: Option<u64>,

    /// Lower index; defaults to the modulus' periodicity bound.
    #[arg(long)]
    pub n: Option<u64>,

    /// Lower-index sweep bound.
    #[arg(long)]
    pub nmax: Option<u64>,

    /// Comparison lower index for periodicity; defaults to n + phi(mod).
    #[arg(long)]
    pub m: Option<u64>,
}

fn lib(error: Error) -> String {
    error.to_string()
}

fn required<T: Copy>(value: Option<T>, message: &str) -> Result<T, String> {
    value.ok_or_else(|| message.to_string())
}

fn parse_modulus(value: Option<u64>) -> Result<Modulus, String> {
    Modulus::new(required(value, "this statement requires --mod")?).map_err(lib)
}

pub fn run(args: VerifyArgs) -> Result<Vec<CongruenceReport>, String> {
    if args.theorem.eq_ignore_ascii_case("all") {
        let pmax = required(args.pmax, "verify all requires --pmax")?;
        return run_all(pmax);
    }
    let id: TheoremId = args.theorem.parse()?;
    match id {
        TheoremId::ResidueBAtPMinus1
        | TheoremId::ResidueCAtPMinus2
        | TheoremId::ResidueCAtPMinus1 => {
            let p = required(args.p, "residue statements require --p")?;
            let kmax = args.kmax.unwrap_or(2 * p.saturating_sub(1));
            let reports = verify_residues_at_p(p, kmax).map_err(lib)?;
            Ok(reports.into_iter().filter(|r| r.theorem == id).collect())
        }
        TheoremId::TwoCongruence => {
            let p = required(args.p, "this statement requires --p")?;
            // Validate p through the library before enumerating pairs.
            verify_two_congruence(p, &[]).map_err(lib)?;
            let kmax = args.kmax.unwrap_or(2 * (p - 1));
            let nmax = args.nmax.unwrap_or(kmax);
            verify_two_congruence(p, &admissible_pairs(p, kmax, nmax)).map_err(lib)
        }
        TheoremId::PMinus3 => match (args.p, args.pmax) {
            (Some(p), None) => Ok(vec![verify_p_minus_3(p).map_err(lib)?]),
            (None, Some(pmax)) => (7..=pmax)
                .filter(|&p| is_prime(p))
                .map(|p| verify_p_minus_3(p).map_err(lib))
                .collect(),
            _ => Err("provide exactly one of --p or --pmax".to_string()),
        },
        TheoremId::PeriodSumPrimePower | TheoremId::PeriodSumComposite => {
            let modulus = parse_modulus(args.modulus)?;
            let k = required(args.k, "period sums require --k")?;
            let n = args.n.unwrap_or(modulus.max_exponent() as u64);
            verify_period_sum(k, n, &modulus).map_err(lib)
        }
        TheoremId::PeriodPrimePower | TheoremId::PeriodComposite | TheoremId::PeriodTypeC => {
            let modulus = parse_modulus(args.modulus)?;
            let k = required(args.k, "periodicity requires --k")?;
            let n = args.n.unwrap_or(modulus.max_exponent() as u64);
            let m = args.m.unwrap_or_else(|| n + modulus.totient());
            let kind = if id == TheoremId::PeriodTypeC {
                Kind::C
            } else {
                Kind::B
            };
            Ok(vec![verify_periodicity(kind, k, &modulus, n, m).map_err(lib)?])
        }
        TheoremId::LonesumPeriod | TheoremId::LonesumPeriodSum => {
            let modulus = parse_modulus(args.modulus)?;
            let k = required(args.k, "lonesum checks require --k")?;
            let n = args.n.unwrap_or(modulus.max_exponent() as u64);
            let reports = verify_lonesum_period(k, n, &modulus).map_err(lib)?;
            Ok(reports.into_iter().filter(|r| r.theorem == id).collect())
        }
    }
}

type Job = Box<dyn FnOnce() -> Result<Vec<CongruenceReport>, Error> + Send>;

/// The full sweep: periodicity grids, the per-prime residue statements up
/// to `pmax`, and the period-sum families on their fixed grids.
fn run_all(pmax: u64) -> Result<Vec<CongruenceReport>, String> {
    let mut jobs: Vec<Job> = Vec::new();

    // Periodicity over prime powers p^e, both families.
    for p in [2u64, 3, 5, 7] {
        for e in 1..=3u32 {
            jobs.push(Box::new(move || {
                let modulus = Modulus::new(p.pow(e))?;
                let mut out = Vec::new();
                for k in 0..=6 {
                    for n in e as u64..=e as u64 + 2 {
                        let m = n + modulus.totient();
                        out.push(verify_periodicity(Kind::B, k, &modulus, n, m)?);
                        if k >= 1 {
                            out.push(verify_periodicity(Kind::C, k, &modulus, n, m)?);
                        }
                    }
                }
                Ok(out)
            }));
        }
    }

    // Periodicity over composite moduli.
    for value in [12u64, 45, 100] {
        jobs.push(Box::new(move || {
            let modulus = Modulus::new(value)?;
            let base = modulus.max_exponent() as u64;
            let mut out = Vec::new();
            for k in 0..=6 {
                for n in base..=base + 2 {
                    let m = n + modulus.totient();
                    out.push(verify_periodicity(Kind::B, k, &modulus, n, m)?);
                    if k >= 1 {
                        out.push(verify_periodicity(Kind::C, k, &modulus, n, m)?);
                    }
                }
            }
            Ok(out)
        }));
    }

    // Residue statements at every odd prime up to pmax.
    for p in (3..=pmax).filter(|&p| is_prime(p)) {
        let kmax = 2 * (p - 1);
        jobs.push(Box::new(move || verify_residues_at_p(p, kmax)));
        jobs.push(Box::new(move || {
            verify_two_congruence(p, &admissible_pairs(p, kmax, kmax))
        }));
        if p >= 7 {
            jobs.push(Box::new(move || Ok(vec![verify_p_minus_3(p)?])));
        }
    }

    // Period sums, prime-power and composite moduli.
    for value in [3u64, 4, 5, 7, 9, 12, 25] {
        jobs.push(Box::new(move || {
            let modulus = Modulus::new(value)?;
            let base = modulus.max_exponent() as u64;
            let mut out = Vec::new();
            for k in 1..=6 {
                for n in base..=base + 3 {
                    out.extend(verify_period_sum(k, n, &modulus)?);
                }
            }
            Ok(out)
        }));
    }

    // Lonesum periodicity and period sums.
    for value in [3u64, 4, 5, 9] {
        jobs.push(Box::new(move || {
            let modulus = Modulus::new(value)?;
            let base = modulus.max_exponent() as u64;
            let mut out = Vec::new();
            for k in 1..=4 {
                for n in base..=base + 1 {
                    out.extend(verify_lonesum_period(k, n, &modulus)?);
                }
            }
            Ok(out)
        }));
    }

    run_jobs(jobs)
}

/// Threads for sweeps: POLYB_THREADS when set, otherwise single-threaded.
fn sweep_threads() -> Result<usize, String> {
    match std::env::var("POLYB_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(1),
        Err(other) => Err(format!("POLYB_THREADS: {other}")),
        Ok(raw) => match raw.parse::<usize>() {
            Ok(count) if count >= 1 => Ok(count),
            _ => Err(format!("POLYB_THREADS must be a positive integer, got {raw:?}")),
        },
    }
}

/// Run jobs (in parallel when configured) and concatenate their reports in
/// job order, so output does not depend on scheduling.
fn run_jobs(jobs: Vec<Job>) -> Result<Vec<CongruenceReport>, String> {
    let threads = sweep_threads()?;
    let collected: Result<Vec<Vec<CongruenceReport>>, Error> = if threads <= 1 {
        jobs.into_iter().map(|job| job()).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| jobs.into_par_iter().map(|job| job()).collect())
    };
    Ok(collected.map_err(lib)?.into_iter().flatten().collect())
}
