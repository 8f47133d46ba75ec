//! `gme`: evaluate bounds on state files, bisect thresholds, scan the
//! W/anti-W region and run the reproduction manifest.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gme_bounds::bounds::{search_family, BoundSpec, ProductFamily, VertexSet};
use gme_bounds::hilbert::Dims;
use gme_bounds::oracle::SeededGenerator;
use gme_bounds::report::evaluate_report;
use gme_bounds::scan::{noise_threshold, region_scan, Threshold};
use gme_bounds::states::{load_state, save_state, two_param_mix, white_noise_mix, NamedState, StateFile};
use gme_bounds::{fmt_f64, verify, Error};

#[derive(Parser)]
#[command(name = "gme", version, about = "GME-concurrence lower bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "huber-ex2")]
    HuberEx2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantArg {
    Stated,
    Proof,
}

#[derive(clap::Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    bound: BoundArg,
    /// Product family `DIGITS/REPLACEMENTS` or `DIGITS` (shifted replacements).
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated vertex strings for bound 3.
    #[arg(long)]
    vertices: Option<String>,
    /// Comparator direction for huber-ex2.
    #[arg(long, default_value = "w")]
    direction: String,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one bound on a state file.
    Evaluate {
        #[arg(long)]
        state: PathBuf,
        #[command(flatten)]
        bound: BoundArgs,
        /// Constant used for the headline lower bound.
        #[arg(long, value_enum, default_value = "proof")]
        constant: ConstantArg,
    },
    /// Bisect the white-noise threshold of a named state.
    ScanThreshold {
        /// Named state, e.g. `example3` or `dicke:4:2`.
        #[arg(long)]
        state: String,
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values_t = [0.0, 1.0])]
        interval: Vec<f64>,
        #[arg(long, default_value_t = gme_bounds::scan::THRESHOLD_TOL)]
        tol: f64,
    },
    /// Scan the five-qubit W/anti-W mixture on an (a, b) grid and write CSV.
    RegionScan {
        #[arg(long, num_args = 2, value_names = ["NA", "NB"], default_values_t = [201, 201])]
        grid: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every reproduction check.
    VerifyPaper,
    /// Write a state file.
    BuildState {
        /// Named state (`w:5`, `ghz:3:2`, `example3`, ...), `two-param`, or `random`.
        name: String,
        /// White-noise weight `a` of the named state.
        #[arg(long)]
        mix: Option<f64>,
        /// `(a, b)` for `two-param`.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        ab: Option<Vec<f64>>,
        /// Local dimensions for `random`, e.g. `2,3,2`.
        #[arg(long)]
        dims: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn bound_spec(args: &BoundArgs, dims: &Dims) -> Result<BoundSpec, Failure> {
    let need = |opt: &Option<String>, flag: &str| {
        opt.clone().ok_or_else(|| Failure::Usage(format!("--{flag} is required for this bound")))
    };
    Ok(match args.bound {
        BoundArg::One => BoundSpec::Bound1(ProductFamily::parse(dims, &need(&args.family, "family")?)?),
        BoundArg::Two => BoundSpec::Bound2(ProductFamily::parse(dims, &need(&args.family, "family")?)?),
        BoundArg::Three => BoundSpec::Bound3(VertexSet::parse(dims, &need(&args.vertices, "vertices")?)?),
        BoundArg::HuberEx2 => BoundSpec::HuberEx2(args.direction.parse()?),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Evaluate { state, bound, constant } => {
            let file = load_state(&state)?;
            let rho = file.to_density();
            let spec = match (bound.bound, &bound.family) {
                (BoundArg::One, None) => {
                    let support = match &file {
                        StateFile::Pure(p) => Some(p),
                        StateFile::Density(_) => None,
                    };
                    let (fam, _) = search_family(&rho, support)?;
                    println!("family search: best family {fam}");
                    BoundSpec::Bound1(fam)
                }
                _ => bound_spec(&bound, rho.dims())?,
            };
            let report = evaluate_report(&rho, &spec)?;
            println!("{report}");
            let headline = match constant {
                ConstantArg::Stated => report.lower_stated,
                ConstantArg::Proof => report.lower_proof,
            };
            println!("C_GME >= {}", fmt_f64(headline));
        }
        Command::ScanThreshold { state, bound, interval, tol } => {
            let phi = state.parse::<NamedState>()?.build()?;
            let spec = bound_spec(&bound, phi.dims())?;
            match noise_threshold(&phi, &spec, interval[0], interval[1], tol)? {
                Threshold::Found { critical, bracket } => {
                    println!("critical a* = {}", fmt_f64(critical));
                    println!("bracket = [{}, {}]", fmt_f64(bracket.0), fmt_f64(bracket.1));
                }
                Threshold::None { value_lo, value_hi } => {
                    println!(
                        "no threshold: bound keeps its sign on [{}, {}] (values {} .. {})",
                        interval[0],
                        interval[1],
                        fmt_f64(value_lo),
                        fmt_f64(value_hi)
                    );
                }
            }
        }
        Command::RegionScan { grid, out } => {
            let csv = region_scan(grid[0], grid[1])?.to_csv();
            match out {
                Some(path) => fs::write(path, csv).map_err(Error::from)?,
                None => print!("{csv}"),
            }
        }
        Command::VerifyPaper => {
            let results = verify::run_all();
            for r in &results {
                println!("{r}");
            }
            if results.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
        Command::BuildState { name, mix, ab, dims, seed, out } => {
            let file: StateFile = match name.as_str() {
                "two-param" => {
                    let ab = ab.ok_or_else(|| Failure::Usage("--ab A B is required for two-param".into()))?;
                    two_param_mix(ab[0], ab[1])?.into()
                }
                "random" => {
                    let spec = dims.ok_or_else(|| Failure::Usage("--dims is required for random".into()))?;
                    let d = spec
                        .split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("invalid dims {spec:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    SeededGenerator::new(seed).random_pure(&Dims::new(d)?).into()
                }
                _ => {
                    let phi = name.parse::<NamedState>()?.build()?;
                    match mix {
                        Some(a) => white_noise_mix(&phi, a)?.into(),
                        None => phi.into(),
                    }
                }
            };
            save_state(&out, &file)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
