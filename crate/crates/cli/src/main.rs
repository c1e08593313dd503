use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ahgm::algebra::{to_decimal, Rat};
use ahgm::bench::{run_bench, CSV_HEADER};
use ahgm::hgm::{enumerate_fiber, expectation, fiber_size, hgm_eval, oracle_vector, StateVector};
use ahgm::macaulay::build_macaulay;
use ahgm::poly::{reduce_monomial, ExpVec, GroebnerBasis, OrderSpec};
use ahgm::recurrence::{decompose_direction, extract_recurrence, find_path, ExtractOptions};
use ahgm::{Error, Problem, Result};

/// Fibers larger than this are not cross-checked by `--verify-oracle`.
const VERIFY_LIMIT: u64 = 100_000;

#[derive(Parser)]
#[command(name = "ahgm", version, about = "Exact A-hypergeometric polynomials by the difference HGM")]
struct Cli {
    /// Worker threads for fiber enumeration and matrix construction.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON).
    file: PathBuf,

    /// Term order, overriding the file: lex or grevlex, optionally with a
    /// variable priority such as `lex:2,1,3,4`.
    #[arg(long)]
    order: Option<String>,

    /// Initial Macaulay degree.
    #[arg(long = "T", value_name = "T")]
    degree: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Groebner basis of the toric ideal.
    Toric(Common),
    /// Dump the Macaulay matrix for one leg as TSV.
    Macaulay {
        #[command(flatten)]
        common: Common,
        /// Leg whose direction fixes c = beta + kH (1-based).
        #[arg(long, default_value_t = 1)]
        leg: usize,
        /// Print the unspecialized entries in x and c.
        #[arg(long)]
        symbolic: bool,
    },
    /// Print R(k) for one leg as JSON.
    Recurrence {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        leg: usize,
    },
    /// Walk the plan and print S • Z at its endpoint.
    Eval {
        #[command(flatten)]
        common: Common,
        /// Recompute the endpoint by enumeration and compare.
        #[arg(long)]
        verify_oracle: bool,
        #[arg(long, default_value_t = 6)]
        decimal_digits: usize,
    },
    /// Enumerate the fiber at the plan's endpoint and sum over it.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        decimal_digits: usize,
    },
    /// Print a path from beta toward the origin.
    Path(Common),
    /// Time both methods for each k and print CSV.
    Bench {
        #[command(flatten)]
        common: Common,
        /// Comma-separated values of k.
        #[arg(long, value_delimiter = ',', default_value = "0,10,20")]
        k: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load(c: &Common) -> Result<Problem> {
    let text = fs::read_to_string(&c.file).map_err(|e| Error::Parse(format!("{}: {e}", c.file.display())))?;
    let mut p = Problem::from_json(&text).map_err(|e| locate(&c.file, e))?;
    if let Some(o) = &c.order {
        p.order = o.parse::<OrderSpec>()?.build(p.a.n())?;
    }
    Ok(p)
}

fn locate(file: &FsPath, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", file.display())),
        e => e,
    }
}

fn options(p: &Problem, c: &Common) -> ExtractOptions {
    ExtractOptions {
        initial_degree: c.degree,
        weights: p.weights.clone(),
        ..Default::default()
    }
}

fn leg_direction(p: &Problem, leg: usize) -> Result<Vec<i64>> {
    if p.legs.is_empty() {
        return Ok(vec![0; p.a.d()]);
    }
    p.legs
        .get(leg.wrapping_sub(1))
        .map(|l| l.big_h.clone())
        .ok_or_else(|| Error::Invalid {
            field: "leg".into(),
            message: format!("expected 1..={}, got {leg}", p.legs.len()),
        })
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Toric(c) => {
            let p = load(&c)?;
            println!("{}", p.toric_gb()?.display_with("d"));
        }
        Command::Macaulay { common, leg, symbolic } => {
            let p = load(&common)?;
            let g = p.toric_gb()?;
            let s = p.basis_or_guess(&g)?;
            let big_h = leg_direction(&p, leg)?;
            let t = match common.degree {
                Some(t) => t,
                None => target_degree(&p, &g, &s, &big_h)?,
            };
            let m = build_macaulay(&p.a, &g, &s, t)?;
            if symbolic {
                print!("{}", m.to_tsv());
            } else {
                let rows = m.specialize_sparse(&p.x, &p.beta, &big_h);
                print!(
                    "{}",
                    m.to_tsv_with(|i, col, _| {
                        let j = m.column_index(col).expect("column");
                        rows[i]
                            .iter()
                            .find(|(c, _)| *c == j)
                            .map_or_else(|| "0".to_string(), |(_, v)| v.to_string())
                    })
                );
            }
        }
        Command::Recurrence { common, leg } => {
            let p = load(&common)?;
            let g = p.toric_gb()?;
            let s = p.basis_or_guess(&g)?;
            let big_h = leg_direction(&p, leg)?;
            let r = extract_recurrence(&p.a, &g, &s, &p.beta, &p.x, &big_h, &options(&p, &common))?;
            println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializable"));
        }
        Command::Eval {
            common,
            verify_oracle,
            decimal_digits,
        } => {
            let p = load(&common)?;
            let g = p.toric_gb()?;
            let s = p.basis_or_guess(&g)?;
            let plan = p.plan(s.clone());
            let y = hgm_eval(&p.a, &g, &plan, &options(&p, &common))?;
            print_state(&y, decimal_digits);
            for v in s.iter().filter(|v| v.degree() == 1) {
                let j = v.exps().iter().position(|&e| e == 1).expect("unit");
                println!("E[U{}] = {}", j + 1, show(&expectation(&y, j)?, decimal_digits));
            }
            if verify_oracle {
                let size = fiber_size(&p.a, &y.beta);
                if size > VERIFY_LIMIT {
                    return Err(Error::Invalid {
                        field: "--verify-oracle".into(),
                        message: format!("fiber has {size} points, limit is {VERIFY_LIMIT}"),
                    });
                }
                let want = oracle_vector(&p.a, &s, &y.beta, &p.x)?;
                if want != y {
                    return Err(Error::Mismatch {
                        k: 0,
                        hgm: y.z().to_string(),
                        enumerate: want.z().to_string(),
                    });
                }
                println!("VERIFIED");
            }
        }
        Command::Enumerate { common, decimal_digits } => {
            let p = load(&common)?;
            let g = p.toric_gb()?;
            let s = p.basis_or_guess(&g)?;
            let end = p.plan(s.clone()).endpoint();
            let fiber = enumerate_fiber(&p.a, &end);
            if fiber.is_empty() {
                return Err(Error::NotInSemigroup(end));
            }
            println!("fiber_count = {}", fiber.len());
            print_state(&oracle_vector(&p.a, &s, &end, &p.x)?, decimal_digits);
        }
        Command::Path(c) => {
            let p = load(&c)?;
            let g = p.toric_gb()?;
            let s = p.basis.clone().unwrap_or_else(|| vec![ExpVec::zero(p.a.n())]);
            println!("{}", find_path(&p.a, &g, &p.beta, &s)?);
        }
        Command::Bench { common, k } => {
            let p = load(&common)?;
            let g = p.toric_gb()?;
            let s = p.basis_or_guess(&g)?;
            println!("{CSV_HEADER}");
            run_bench(&p, &g, &s, &k, &options(&p, &common), |r| println!("{}", r.csv_line()))?;
        }
    }
    Ok(())
}

/// The smallest degree at which every shifted basis element is a column.
fn target_degree(p: &Problem, g: &GroebnerBasis, s: &[ExpVec], big_h: &[i64]) -> Result<u32> {
    let dir = decompose_direction(&p.a, big_h, p.weights.as_deref())?;
    let h = ExpVec::new(dir.h);
    Ok(s.iter()
        .map(|v| reduce_monomial(&v.mul(&h), g).degree())
        .max()
        .unwrap_or(0)
        .max(1))
}

fn print_state(y: &StateVector, digits: usize) {
    let beta: Vec<String> = y.beta.iter().map(ToString::to_string).collect();
    println!("beta = ({})", beta.join(","));
    for (v, val) in y.basis.iter().zip(&y.values) {
        println!("{} = {}", v.label("d"), show(val, digits));
    }
}

fn show(r: &Rat, digits: usize) -> String {
    format!("{r} ({})", to_decimal(r, digits))
}
