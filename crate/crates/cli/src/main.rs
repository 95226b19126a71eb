use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use cgroups::export::{permutation_text, table_text};
use cgroups::search::{
    enumerate_alpha_c, invariant_report, reports_to_tsv, run_suite, AlphaCFamilyQuery, Suite, SuiteReport,
};
use cgroups::{
    abelian_product_with, alpha_c_with, coset_enumerate_with, cyclic_with, direct_product_with,
    is_isomorphic_with, parse_presentation, AlphaCParams, Error, FiniteGroup, Limits,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cgroups", version, about = "Explore finite groups whose center needs more generators than the group")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Largest group order any command will build.
    #[arg(long, global = true, env = "CGROUPS_ORDER_CAP", default_value_t = Limits::default().order_cap)]
    order_cap: usize,
    /// Largest order for isomorphism tests and Frattini cross-checks.
    #[arg(long, global = true, env = "CGROUPS_ISO_CAP", default_value_t = Limits::default().iso_cap)]
    iso_cap: usize,
    #[arg(long, global = true, env = "CGROUPS_MAX_COSETS", default_value_t = Limits::default().max_cosets)]
    max_cosets: usize,
    /// Largest generating-set size tried by subset search.
    #[arg(long, global = true, env = "CGROUPS_RANK_K_CAP", default_value_t = Limits::default().rank_k_cap)]
    rank_k_cap: usize,
    /// Seed for sampled checks; recorded in every report.
    #[arg(long, global = true, env = "CGROUPS_SEED", default_value_t = Limits::default().seed)]
    seed: u64,
    #[arg(long, global = true, env = "CGROUPS_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for suite runs (0 = one per core).
    #[arg(long, global = true, env = "CGROUPS_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and write it as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write here instead of stdout.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Print the invariant report of a group file.
    Invariants { file: PathBuf },
    /// Run a verification suite; exits 1 if any claim fails.
    Verify {
        suite: SuiteName,
        /// Prime for the p5 suite.
        #[arg(long, default_value_t = 2)]
        p: usize,
        /// Also check alphaC(p,p^2,p^2) x Z_kp for k up to this (p5 suite).
        #[arg(long)]
        k_max: Option<usize>,
        /// Bound for the alpha-c suite.
        #[arg(long, default_value_t = 512)]
        max_order: usize,
    },
    /// List the alpha-C groups up to an order with their reports.
    Search {
        #[arg(long)]
        max_order: usize,
        /// Only prime-power orders.
        #[arg(long)]
        prime_power: bool,
        /// Only orders whose prime divisors are all in this list.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<usize>>,
    },
    /// Decide whether two group files are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Export a group file for a computer-algebra system.
    Export {
        file: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = ExportFormat::Table)]
        export: ExportFormat,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    Cyclic {
        #[arg(long)]
        n: usize,
    },
    /// Z_n1 x ... x Z_nk.
    Abelian {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
    },
    AlphaC {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        n3: usize,
    },
    /// Direct product of two group files.
    Product { left: PathBuf, right: PathBuf },
    /// Coset-enumerate a presentation such as "<a,b | a^2, b^3, (ab)^5>".
    Presentation {
        #[arg(long, conflicts_with = "text", required_unless_present = "text")]
        file: Option<PathBuf>,
        #[arg(long)]
        text: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    /// Every suite below at default bounds.
    #[value(name = "paper")]
    All,
    AlphaC,
    P5,
    Corpus,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Table,
    Perm,
}

impl Config {
    fn limits(&self) -> Result<Limits> {
        for (name, v) in [
            ("order-cap", self.order_cap),
            ("iso-cap", self.iso_cap),
            ("max-cosets", self.max_cosets),
            ("rank-k-cap", self.rank_k_cap),
        ] {
            if v == 0 {
                return Err(Error::InvalidArgument(format!("--{name} must be positive")).into());
            }
        }
        Ok(Limits {
            order_cap: self.order_cap,
            iso_cap: self.iso_cap,
            max_cosets: self.max_cosets,
            rank_k_cap: self.rank_k_cap,
            seed: self.seed,
            ..Limits::default()
        })
    }
}

fn read_group(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    FiniteGroup::from_json(&text, limits).with_context(|| format!("loading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn construct(kind: &ConstructKind, limits: &Limits) -> Result<FiniteGroup> {
    Ok(match kind {
        ConstructKind::Cyclic { n } => cyclic_with(*n, limits)?,
        ConstructKind::Abelian { ns } => abelian_product_with(ns, limits)?,
        ConstructKind::AlphaC { n1, n2, n3 } => alpha_c_with(AlphaCParams::new(*n1, *n2, *n3)?, limits)?,
        ConstructKind::Product { left, right } => {
            direct_product_with(&read_group(left, limits)?, &read_group(right, limits)?, limits)?
        }
        ConstructKind::Presentation { file, text } => {
            let text = match (file, text) {
                (Some(path), _) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                (None, Some(t)) => t.clone(),
                (None, None) => unreachable!("clap requires one of --file and --text"),
            };
            coset_enumerate_with(&parse_presentation(&text)?, limits)?
        }
    })
}

fn verify(suite: SuiteName, p: usize, k_max: Option<usize>, max_order: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = match suite {
        SuiteName::All => run_suite(&Suite::All, limits)?,
        SuiteName::AlphaC => run_suite(&Suite::AlphaC { max_order }, limits)?,
        SuiteName::Corpus => run_suite(&Suite::Corpus, limits)?,
        SuiteName::P5 => run_suite(&Suite::P5 { p }, limits)?,
    };
    if let (SuiteName::P5, Some(k_max)) = (suite, k_max) {
        let extra = run_suite(&Suite::MultipleOfP5 { p, k_max }, limits)?;
        report.verifications.extend(extra.verifications);
    }
    Ok(report)
}

fn run(cli: Cli) -> Result<bool> {
    let limits = cli.config.limits()?;
    let format = cli.config.format;
    if cli.config.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.config.threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Construct { kind, out } => {
            let g = construct(kind, &limits)?;
            emit(out.as_deref(), &(g.to_json() + "\n"))?;
        }
        Command::Invariants { file } => {
            let g = read_group(file, &limits)?;
            let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let r = invariant_report(&id, &g, &limits)?;
            match format {
                Format::Json => print!("{}", json(&r)?),
                Format::Tsv => print!("{}", reports_to_tsv(&[r])),
            }
        }
        Command::Verify { suite, p, k_max, max_order } => {
            let report = verify(*suite, *p, *k_max, *max_order, &limits)?;
            match format {
                Format::Json => print!("{}", json(&report)?),
                Format::Tsv => print!("{}", reports_to_tsv(&report.reports)),
            }
            for f in report.failures() {
                eprintln!("FAILED {f}");
            }
            eprintln!(
                "{}: {} checks, {} failed",
                report.suite,
                report.check_count(),
                report.failures().len()
            );
            return Ok(report.passed());
        }
        Command::Search { max_order, prime_power, primes } => {
            let q = AlphaCFamilyQuery {
                max_order: *max_order,
                prime_power_only: *prime_power,
                primes: primes.clone(),
            };
            let mut reports = Vec::new();
            let mut first_error = None;
            for params in enumerate_alpha_c(&q) {
                match alpha_c_with(params, &limits).and_then(|g| invariant_report(&params.to_string(), &g, &limits)) {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        eprintln!("{params}: {e}");
                        first_error.get_or_insert(e);
                    }
                }
            }
            match format {
                Format::Json => print!("{}", json(&reports)?),
                Format::Tsv => print!("{}", reports_to_tsv(&reports)),
            }
            if let Some(e) = first_error {
                return Err(e.into());
            }
        }
        Command::Iso { a, b } => {
            let (g, h) = (read_group(a, &limits)?, read_group(b, &limits)?);
            let r = is_isomorphic_with(&g, &h, &limits)?;
            match format {
                Format::Json => print!("{}", json(&r)?),
                Format::Tsv => println!("{}\t{}", r.isomorphic, r.obstruction.unwrap_or_default()),
            }
        }
        Command::Export { file, export } => {
            let g = read_group(file, &limits)?;
            match export {
                ExportFormat::Table => print!("{}", table_text(&g)),
                ExportFormat::Perm => print!("{}", permutation_text(&g, &limits)?),
            }
        }
    }
    Ok(true)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::VerificationFailure(_)) => 1,
        Some(err) if err.is_cap_error() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
