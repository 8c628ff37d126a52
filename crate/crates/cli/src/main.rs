use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use dual_horadam::dual_horadam::{dog_from, og_from};
use dual_horadam::scalar::{fmt_rat, parse_rat};
use dual_horadam::series::DEFAULT_ORDER;
use dual_horadam::verifier::{
    self, render, run_sweep, Domain, Expectations, Format, ParamGrid, PointContext, Status, SweepConfig,
};
use dual_horadam::{HoradamParams, Sequence};

/// Exact dual Horadam octonion arithmetic and identity sweeps.
#[derive(Parser)]
#[command(name = "horadam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print w_n, and optionally OG_n and ÔG_n, over an index range.
    Gen(GenArgs),
    /// Sweep identities and compare the verdicts with the expectations file.
    Verify(VerifyArgs),
    /// Evaluate one identity or formula at a single point.
    Eval(EvalArgs),
    /// Regenerate the expectations file from a full default-grid sweep.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// fibonacci, lucas or pell.
    #[arg(long, conflicts_with_all = ["a", "b", "p", "q"])]
    preset: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<Option<HoradamParams>> {
        if let Some(name) = &self.preset {
            return Ok(Some(HoradamParams::named(name)?));
        }
        match (&self.a, &self.b, &self.p, &self.q) {
            (None, None, None, None) => Ok(None),
            (Some(a), Some(b), Some(p), Some(q)) => Ok(Some(HoradamParams::new(
                parse_rat(a)?,
                parse_rat(b)?,
                parse_rat(p)?,
                parse_rat(q)?,
            ))),
            _ => bail!("explicit parameters need all of --a, --b, --p and --q"),
        }
    }

    fn require(&self) -> Result<HoradamParams> {
        self.resolve()?.context("give --preset or all of --a, --b, --p, --q")
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    from: u64,
    #[arg(long, default_value_t = 10)]
    to: u64,
    /// A single index; overrides --from and --to.
    #[arg(long)]
    at: Option<u64>,
    /// Add the Horadam octonion OG_n.
    #[arg(long)]
    octonion: bool,
    /// Add the dual Horadam octonion ÔG_n.
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Identity id; repeatable.
    #[arg(long = "identity", conflicts_with = "all")]
    identities: Vec<String>,
    /// Every registered identity (the default when no --identity is given).
    #[arg(long)]
    all: bool,
    /// Inclusive index range `lo..hi`, or a single index.
    #[arg(long)]
    n: Option<String>,
    /// Truncation order for generating-function identities.
    #[arg(long)]
    order: Option<usize>,
    /// json, csv or markdown-summary.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sweep configuration json; flags given alongside override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Expectations file to compare against instead of the built-in one.
    #[arg(long)]
    expectations: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// A formula name (binet-w, genfun-w, cassini-w, sum-w, binet-dog, genfun-dog,
    /// cassini-dog, sum-dog, norm-dog) or any identity id.
    #[arg(long)]
    formula: String,
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

const FORMULAS: &[(&str, &str)] = &[
    ("binet-w", "eq-2.3-binet-scalar"),
    ("genfun-w", "eq-2.4-genfun-scalar"),
    ("cassini-w", "eq-2.5-cassini-scalar-as-printed"),
    ("sum-w", "eq-2.6-sum-scalar-as-printed"),
    ("binet-dog", "eq-3.1-binet-dual"),
    ("genfun-dog", "eq-3.6-genfun-dual"),
    ("cassini-dog", "eq-3.10-cassini-theorem-variant"),
    ("sum-dog", "eq-3.11-sum-dual"),
    ("norm-dog", "eq-3.12-norm-as-printed"),
];

const CATALOG_N_MAX: u64 = 31;

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse()?, hi.trim().parse()?),
        None => {
            let n = s.trim().parse()?;
            (n, n)
        }
    };
    if lo > hi {
        bail!("index range {s} is empty");
    }
    Ok((lo, hi))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode> {
    let params = args.params.require()?;
    let (from, to) = match args.at {
        Some(n) => (n, n),
        None => (args.from, args.to),
    };
    if from > to {
        bail!("index range {from}..{to} is empty");
    }
    let mut seq = Sequence::new(&params);
    let mut out = String::from("n\tw_n");
    if args.octonion {
        out.push_str("\tOG_n");
    }
    if args.dual {
        out.push_str("\tÔG_n");
    }
    out.push('\n');
    for n in from..=to {
        out.push_str(&format!("{n}\t{}", fmt_rat(&seq.w(n))));
        if args.octonion {
            out.push_str(&format!("\t{}", og_from(&mut seq, n)));
        }
        if args.dual {
            out.push_str(&format!("\t{}", dog_from(&mut seq, n)));
        }
        out.push('\n');
    }
    emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn sweep_config(args: &VerifyArgs) -> Result<SweepConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => SweepConfig::default(),
    };
    if let Some(params) = args.params.resolve()? {
        config.grid = ParamGrid::single(&params);
        config.exclude_degenerate = false;
    }
    if let Some(range) = &args.n {
        (config.n_min, config.n_max) = parse_range(range)?;
    }
    if let Some(order) = args.order {
        config.series_order = order;
    }
    if args.all {
        config.identities = None;
    } else if !args.identities.is_empty() {
        config.identities = Some(args.identities.clone());
    }
    config.validate()?;
    Ok(config)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let format: Format = args.format.parse()?;
    let config = sweep_config(args)?;
    let loaded;
    let expectations = match &args.expectations {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            loaded = Expectations::parse(&text)?;
            &loaded
        }
        None => Expectations::builtin(),
    };
    let verdicts = with_jobs(args.jobs, || run_sweep(&config))??;
    emit(args.out.as_ref(), &render(&verdicts, format))?;

    let drift = expectations.compare(&verdicts, config.series_order);
    let mut err = io::stderr().lock();
    if !drift.uncatalogued.is_empty() {
        writeln!(
            err,
            "note: {} verdicts lie outside the catalogued domain",
            drift.uncatalogued.len()
        )?;
    }
    if drift.is_clean() {
        return Ok(ExitCode::SUCCESS);
    }
    for d in drift.drifted.iter().take(20) {
        writeln!(
            err,
            "drift: {} at {}: expected {}, got {}",
            d.identity_id, d.point, d.expected, d.actual
        )?;
    }
    writeln!(
        err,
        "{} verdicts differ from the expectations file",
        drift.drifted.len()
    )?;
    Ok(ExitCode::from(1))
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode> {
    let params = args.params.require()?;
    let id = FORMULAS
        .iter()
        .find(|(name, _)| *name == args.formula)
        .map_or(args.formula.as_str(), |(_, id)| id);
    let identity = verifier::find(id)?;
    let mut ctx = PointContext::new(&params, args.order);

    let mut out = format!(
        "identity: {}\nparams: a = {}, b = {}, p = {}, q = {}\nn: {}\n",
        identity.id,
        fmt_rat(&params.a),
        fmt_rat(&params.b),
        fmt_rat(&params.p),
        fmt_rat(&params.q),
        args.n
    );
    if let Some(reason) = identity.violated(&ctx, args.n) {
        emit(None, &out)?;
        eprintln!("error: inapplicable: {reason}");
        return Ok(ExitCode::from(1));
    }
    let (lhs, rhs) = identity.evaluate(&mut ctx, args.n);
    out.push_str(&format!("oracle: {lhs}\n"));
    let rhs = match rhs {
        Ok(rhs) => rhs,
        Err(e) => {
            emit(None, &out)?;
            eprintln!("error: inapplicable: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let status = if lhs == rhs { Status::Match } else { Status::Mismatch };
    out.push_str(&format!("closed form: {rhs}\nverdict: {status}\n"));
    emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(args: &CatalogArgs) -> Result<ExitCode> {
    let config = SweepConfig {
        n_min: 0,
        n_max: CATALOG_N_MAX,
        ..SweepConfig::default()
    };
    let verdicts = with_jobs(args.jobs, || run_sweep(&config))??;
    let domain = Domain {
        grid: "default".into(),
        n_min: config.n_min,
        n_max: config.n_max,
        series_order: config.series_order,
    };
    emit(
        args.out.as_ref(),
        &Expectations::from_verdicts(&verdicts, domain).to_json_string(),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Catalog(args) => cmd_catalog(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
