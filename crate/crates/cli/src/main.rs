//! `topolab`: load and inspect finite topological spaces, export the
//! discretization / compactification / subalgebra / ideal lattices, and
//! run the theorem-verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use topolab::fintop::{self, set_point_cap};
use topolab::verify::{self, VerifyConfig};
use topolab::{classify, compactify, discretize, ideals, io as space_io};
use topolab::{FiniteLattice, TopError};

#[derive(Parser)]
#[command(
    name = "topolab",
    version,
    about = "a workbench for finite topological spaces"
)]
struct Cli {
    /// Override the global point cap (TOPOLAB_CAP also works)
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichLattice {
    /// preweak discretizations (power set of the points)
    DiscPw,
    /// weak discretizations (power set of the isolated points)
    DiscW,
    /// preweak compactifications (Hausdorff quotients)
    CompPw,
    /// unital function subalgebras
    Subalg,
    /// ideals generated by minimal projections
    Ideals,
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for a space
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export one of the lattices attached to a space
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: WhichLattice,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Dot)]
        format: LatticeFormat,
    },
    /// Run theorem-verification suites
    Verify {
        /// all, enumeration, rose, density, thrpre, duality, ideals, symbolic
        #[arg(default_value = "all")]
        suite: String,
        /// exhaustive corpus bound (all topologies on 0..=N points, N ≤ 4)
        #[arg(long, default_value_t = 4)]
        exhaustive: usize,
        /// random corpus size (per-suite caps may clamp this)
        #[arg(long, default_value_t = 200)]
        random: usize,
        /// random corpus point bound (per-suite caps may clamp this)
        #[arg(long = "n", default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All topologies on n labelled points, newline-delimited JSON
    Enumerate { n: usize },
    /// Deterministic random spaces, newline-delimited JSON
    Random { n: usize, count: usize, seed: u64 },
}

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_TOO_LARGE: u8 = 4;

struct CliError {
    code: u8,
    message: String,
}

fn top_error(e: TopError) -> CliError {
    let code = match &e {
        TopError::TooLarge { .. } => EXIT_TOO_LARGE,
        TopError::InvalidGenerator { .. } | TopError::InvalidSpace(_) => EXIT_INVALID,
        _ => EXIT_FAIL,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

fn load_space(file: &PathBuf) -> Result<space_io::LoadedSpace, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("cannot read {}: {e}", file.display()),
    })?;
    let doc: space_io::SpaceJson = serde_json::from_str(&text).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("JSON parse error in {}: {e}", file.display()),
    })?;
    space_io::from_json(&doc).map_err(top_error)
}

fn cmd_classify(file: &PathBuf, format: ReportFormat) -> Result<(), CliError> {
    let loaded = load_space(file)?;
    let x = &loaded.space;
    let report = classify::report(x);
    let cb = classify::cb_derivative(x);
    let density = discretize::density_check(x).map_err(top_error)?;
    match format {
        ReportFormat::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            let obj = v.as_object_mut().expect("report is an object");
            obj.insert("points".into(), serde_json::json!(loaded.labels));
            obj.insert(
                "isolated_labels".into(),
                serde_json::json!(report
                    .isolated_points
                    .iter()
                    .map(|&i| loaded.labels[i].clone())
                    .collect::<Vec<_>>()),
            );
            obj.insert(
                "cb_derivatives".into(),
                serde_json::to_value(&cb).expect("cb serializes")["derivatives"].clone(),
            );
            obj.insert("density".into(), serde_json::json!(density.density));
            obj.insert(
                "closure_added".into(),
                serde_json::json!(loaded.closure_added),
            );
            println!("{}", serde_json::Value::Object(obj.clone()));
        }
        ReportFormat::Text => {
            let f = report.flags;
            println!("space: {} points, {} open sets", x.n(), x.num_opens());
            if loaded.closure_added {
                println!("note: the given family was closed up to a topology");
            }
            println!(
                "separation: T0={} T1={} T2={} completely-Hausdorff={} zero-dim={} extremally-disconnected={} Stonean={}",
                f.t0, f.t1, f.t2, f.completely_hausdorff, f.zero_dimensional,
                f.extremally_disconnected, f.stonean
            );
            println!(
                "discrete={} scattered={} alpha-scattered={}",
                report.discrete, report.scattered, report.alpha_scattered
            );
            let labels: Vec<&str> = report
                .isolated_points
                .iter()
                .map(|&i| loaded.labels[i].as_str())
                .collect();
            println!("isolated points: {{{}}}", labels.join(","));
            println!(
                "derivative rank: {} (derivative sizes: {})",
                cb.rank,
                cb.derivatives
                    .iter()
                    .map(|d| d.len().to_string())
                    .collect::<Vec<_>>()
                    .join(" ⊇ ")
            );
            println!(
                "alpha topology adds {} open sets (idempotent: {})",
                report.alpha_added, report.alpha_idempotent
            );
            println!("density: {}", density.density);
        }
    }
    Ok(())
}

fn hausdorff_quotient_lattice(x: &topolab::FinSpace) -> Result<FiniteLattice, TopError> {
    let hqs = compactify::hausdorff_quotients(x)?;
    let labels = hqs.iter().map(|pc| pc.partition.to_string()).collect();
    let mut lattice =
        FiniteLattice::from_order(labels, |i, j| compactify::quotient_leq(&hqs[i], &hqs[j]))?;
    if lattice.len() <= 1 << 9 {
        lattice.check_lattice();
    }
    Ok(lattice)
}

fn gmp_ideal_lattice(x: &topolab::FinSpace) -> Result<FiniteLattice, TopError> {
    let supports: Vec<_> = x
        .opens()
        .iter()
        .copied()
        .filter(|&u| ideals::is_gmp(x, u).unwrap_or(false))
        .collect();
    let labels = supports.iter().map(|s| format!("I{s}")).collect();
    let mut lattice =
        FiniteLattice::from_order(labels, |i, j| supports[i].is_subset_of(supports[j]))?;
    if lattice.len() <= 1 << 9 {
        lattice.check_lattice();
    }
    Ok(lattice)
}

fn cmd_lattice(file: &PathBuf, which: WhichLattice, format: LatticeFormat) -> Result<(), CliError> {
    let loaded = load_space(file)?;
    let x = &loaded.space;
    let (lattice, name) = match which {
        WhichLattice::DiscPw => (
            discretize::preweak_lattice(x).map_err(top_error)?,
            "disc_pw",
        ),
        WhichLattice::DiscW => (discretize::weak_lattice(x).map_err(top_error)?, "disc_w"),
        WhichLattice::CompPw => (hausdorff_quotient_lattice(x).map_err(top_error)?, "comp_pw"),
        WhichLattice::Subalg => (
            compactify::subalgebra_lattice(x).map_err(top_error)?,
            "subalg",
        ),
        WhichLattice::Ideals => (gmp_ideal_lattice(x).map_err(top_error)?, "ideals"),
    };
    match format {
        LatticeFormat::Dot => print!("{}", lattice.to_dot(name)),
        LatticeFormat::Json => println!("{}", lattice.to_json()),
    }
    Ok(())
}

fn cmd_verify(
    suite: &str,
    exhaustive: usize,
    random: usize,
    n: usize,
    seed: u64,
) -> Result<(), CliError> {
    let cfg = VerifyConfig {
        exhaustive_n: exhaustive,
        random_count: random,
        random_n: n,
        seed,
    };
    let reports = if suite == "all" {
        verify::run_all(&cfg)
    } else {
        match verify::run_suite(suite, &cfg) {
            Some(r) => vec![r],
            None => {
                return Err(CliError {
                    code: EXIT_PARSE,
                    message: format!(
                        "unknown suite '{suite}' (expected all or one of {})",
                        verify::SUITE_NAMES.join(", ")
                    ),
                })
            }
        }
    };
    let mut all_ok = true;
    for r in &reports {
        println!("{}", r.summary_line());
        for f in &r.failures {
            println!("  counterexample: {f}");
        }
        all_ok &= r.passed();
    }
    if all_ok {
        println!("verify: PASS");
        Ok(())
    } else {
        println!("verify: FAIL");
        Err(CliError {
            code: EXIT_FAIL,
            message: String::new(),
        })
    }
}

fn cmd_enumerate(n: usize) -> Result<(), CliError> {
    for space in fintop::enumerate_topologies(n).map_err(top_error)? {
        println!("{}", space_io::to_json_string(&space, None));
    }
    Ok(())
}

fn cmd_random(n: usize, count: usize, seed: u64) -> Result<(), CliError> {
    for i in 0..count {
        let space = fintop::random_space(n, seed.wrapping_add(i as u64)).map_err(top_error)?;
        println!("{}", space_io::to_json_string(&space, None));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(cap) = cli.cap {
        set_point_cap(cap);
    }
    match &cli.command {
        Command::Classify { file, format } => cmd_classify(file, *format),
        Command::Lattice {
            file,
            which,
            format,
        } => cmd_lattice(file, *which, *format),
        Command::Verify {
            suite,
            exhaustive,
            random,
            n,
            seed,
        } => cmd_verify(suite, *exhaustive, *random, *n, *seed),
        Command::Enumerate { n } => cmd_enumerate(*n),
        Command::Random { n, count, seed } => cmd_random(*n, *count, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
