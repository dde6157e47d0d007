use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use wschur_core::error::Error;
use wschur_core::expansion::{
    structure_constants_in, weighted_expand_interpolate, weighted_expand_pieri,
    Basis, ExpansionResult, ZExpansion,
};
use wschur_core::grassmann::{build_table, WeightConfig};
use wschur_core::local::LocalizedElem;
use wschur_core::partition::Partition;
use wschur_core::schur::{factorial_schur_det, factorial_schur_tableaux, ordinary_schur, Alphabet};
use wschur_core::verify::{run_suite, Suite, VerifyOptions};
use wschur_core::weighted::{weighted_factorial_schur, weighted_schur};

const THREADS_ENV: &str = "WSCHUR_THREADS";

#[derive(Parser)]
#[command(name = "wschur", version, about = "Weighted factorial Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a (weighted, factorial) Schur function.
    Schur {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Variant::Factorial)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Form::Tableaux)]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expand a product of basis elements and report the coefficients.
    Expand {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Factorial)]
        basis: BasisArg,
        /// Alphabet of the `lambda` factor in the factorial basis.
        #[arg(long, value_enum, default_value_t = Alphabets::Two)]
        alphabets: Alphabets,
        /// Flavor of the `lambda` factor for the weighted bases (defaults to the basis).
        #[arg(long, value_enum)]
        source: Option<WeightedArg>,
        #[arg(long, value_enum, default_value_t = Route::Interpolate)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the fixed-point restriction table of a stage.
    Restrict {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        itw: Vec<u32>,
        #[arg(long)]
        u: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        max_size: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        itw: Option<Vec<u32>>,
        #[arg(long)]
        u: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Factorial,
    Ordinary,
    Weighted,
    WeightedFactorial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Det,
    Tableaux,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Factorial,
    WeightedFactorial,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightedArg {
    WeightedFactorial,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alphabets {
    /// `s_lambda(x | b) s_mu(x | a)`
    Two,
    /// `s_lambda(x | a) s_mu(x | a)`
    One,
    /// `s_lambda(x) s_mu(x | a)`
    Zero,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Interpolate,
    Pieri,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Vanishing,
    Pieri,
    Basis,
    Closure,
    Homomorphism,
    Pullback,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Vanishing => Suite::Vanishing,
            SuiteArg::Pieri => Suite::Pieri,
            SuiteArg::Basis => Suite::Basis,
            SuiteArg::Closure => Suite::Closure,
            SuiteArg::Homomorphism => Suite::Homomorphism,
            SuiteArg::Pullback => Suite::Pullback,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Process exit statuses.
mod exit {
    pub const VERIFY_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const INTERNAL_DIVISIBILITY: u8 = 3;
    pub const NOT_IN_SPAN: u8 = 4;
    pub const MEMBERSHIP: u8 = 5;
    pub const OTHER: u8 = 6;
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPartition { .. }
        | Error::NotInRectangle { .. }
        | Error::RowBoundMismatch(..)
        | Error::InvalidConfig(_)
        | Error::IndexOutOfConfig { .. }
        | Error::Parse(_)
        | Error::Unsupported(_) => exit::INVALID_INPUT,
        Error::InternalNonDivisible(_) => exit::INTERNAL_DIVISIBILITY,
        Error::NotInSpan(_) => exit::NOT_IN_SPAN,
        Error::MembershipViolation { .. } => exit::MEMBERSHIP,
        _ => exit::OTHER,
    }
}

/// Comma-separated rows; trailing zeros may be omitted or exceed `d`.
fn parse_partition(d: usize, s: &str) -> Result<Partition, Error> {
    let mut rows = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let r: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition entry {part:?} in {s:?}")))?;
        rows.push(r);
    }
    while rows.len() > d && rows.last() == Some(&0) {
        rows.pop();
    }
    Partition::padded(d, &rows)
}

fn emit(output: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_schur(d: usize, lambda: &str, variant: Variant, form: Form) -> Result<LocalizedElem, Error> {
    let lam = parse_partition(d, lambda)?;
    let plain = |p| LocalizedElem::new(p, Default::default());
    Ok(match (variant, form) {
        (Variant::Factorial, Form::Tableaux) => plain(factorial_schur_tableaux(&lam, Alphabet::A)),
        (Variant::Factorial, Form::Det) => plain(factorial_schur_det(&lam, Alphabet::A)?),
        (Variant::Ordinary, Form::Tableaux) => plain(ordinary_schur(&lam)),
        (Variant::Ordinary, Form::Det) => plain(factorial_schur_det(&lam, Alphabet::Zero)?),
        (Variant::WeightedFactorial, _) => weighted_factorial_schur(&lam),
        (Variant::Weighted, _) => weighted_schur(&lam),
    })
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Factorial => "factorial",
        Variant::Ordinary => "ordinary",
        Variant::Weighted => "weighted",
        Variant::WeightedFactorial => "weighted-factorial",
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_expand(
    d: usize,
    lambda: &str,
    mu: &str,
    basis: BasisArg,
    alphabets: Alphabets,
    source: Option<WeightedArg>,
    route: Route,
) -> Result<ExpansionResult, Error> {
    let lam = parse_partition(d, lambda)?;
    let mu = parse_partition(d, mu)?;
    let weighted = |b: WeightedArg| match b {
        WeightedArg::WeightedFactorial => Basis::WeightedFactorial,
        WeightedArg::Weighted => Basis::Weighted,
    };
    let basis = match basis {
        BasisArg::Factorial => {
            if let Route::Pieri = route {
                return Err(Error::Unsupported("the Pieri route needs a weighted basis".into()));
            }
            let b = match alphabets {
                Alphabets::Two => Alphabet::Aprime,
                Alphabets::One => Alphabet::A,
                Alphabets::Zero => Alphabet::Zero,
            };
            return structure_constants_in(&lam, &mu, b);
        }
        BasisArg::WeightedFactorial => Basis::WeightedFactorial,
        BasisArg::Weighted => Basis::Weighted,
    };
    let source = source.map(weighted).unwrap_or(basis);
    match route {
        Route::Interpolate => {
            let e = &source.element(&lam) * &basis.element(&mu);
            weighted_expand_interpolate(&e, d, lam.size() + mu.size(), basis)
        }
        Route::Pieri => weighted_expand_pieri(&ZExpansion::from_product(&lam, &mu, source, basis)?),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Schur {
            d,
            lambda,
            variant,
            form,
            format,
            output,
        } => {
            let e = cmd_schur(d, &lambda, variant, form)?;
            let text = e.canonical_string();
            let body = match format {
                Format::Json => pretty(&json!({
                    "variant": variant_name(variant),
                    "d": d,
                    "lambda": parse_partition(d, &lambda)?.rows(),
                    "text": text,
                    "value": e.normalize().to_json(),
                })),
                _ => format!("{text}\n"),
            };
            emit(&output, &body)?;
        }
        Command::Expand {
            d,
            lambda,
            mu,
            basis,
            alphabets,
            source,
            route,
            format,
            output,
        } => {
            let r = cmd_expand(d, &lambda, &mu, basis, alphabets, source, route)?;
            let body = match format {
                Format::Json => pretty(&serde_json::to_value(r.to_json()).expect("serializable")),
                _ => {
                    let mut s = String::new();
                    for (nu, c) in &r.coefficients {
                        s.push_str(&format!("{nu}: {}\n", c.canonical_string()));
                    }
                    s.push_str(&format!("residual zero: {}\n", r.residual_zero()));
                    s
                }
            };
            emit(&output, &body)?;
        }
        Command::Restrict {
            d,
            n,
            itw,
            u,
            format,
            output,
        } => {
            let cfg = WeightConfig {
                d,
                n: n.unwrap_or(itw.len()),
                itw,
                u,
            };
            cfg.validate()?;
            let table = build_table(&cfg)?;
            let body = match format {
                Format::Json => pretty(&serde_json::to_value(table.to_json()).expect("serializable")),
                Format::Csv => table.to_csv()?,
                Format::Text => {
                    let mut s = format!("{cfg}\n");
                    for lam in &table.partitions {
                        for mu in &table.partitions {
                            let cell = table.entry(lam, mu).expect("indexed by P(d,n)");
                            s.push_str(&format!("{lam} at {}: {cell}\n", mu.to_subset(cfg.n)?));
                        }
                    }
                    s
                }
            };
            emit(&output, &body)?;
            let failures = table.invariant_failures();
            eprintln!(
                "{} classes; triangular with nonzero diagonal: {}",
                table.partitions.len(),
                if failures.is_empty() { "yes" } else { "no" }
            );
            for f in failures {
                eprintln!("  {f}");
            }
        }
        Command::Verify {
            suite,
            d,
            max_size,
            n,
            itw,
            u,
            format,
            output,
        } => {
            let suite = Suite::from(suite);
            let mut opts = VerifyOptions::defaults(suite);
            if let Some(d) = d {
                opts.d = d;
            }
            if let Some(m) = max_size {
                opts.max_size = m;
            }
            if itw.is_some() || u.is_some() {
                let itw = itw.ok_or_else(|| Error::InvalidConfig("--u needs --itw".into()))?;
                let u = u.ok_or_else(|| Error::InvalidConfig("--itw needs --u".into()))?;
                let cfg = WeightConfig {
                    d: opts.d,
                    n: n.unwrap_or(itw.len()),
                    itw,
                    u,
                };
                cfg.validate()?;
                opts.configs = vec![cfg];
            }
            let report = run_suite(suite, &opts)?;
            let body = match format {
                Format::Json => pretty(&report.to_json()),
                _ => {
                    let mut s = String::new();
                    for c in &report.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        s.push_str(&format!("{status} [{}] {}\n", c.suite, c.name));
                        if let Some(x) = &c.counterexample {
                            s.push_str(&format!("    counterexample: {x}\n"));
                        }
                    }
                    let failed = report.failures().count();
                    s.push_str(&format!(
                        "{} checks, {} failed\n",
                        report.checks.len(),
                        failed
                    ));
                    s
                }
            };
            emit(&output, &body)?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn configure_threads() -> Result<(), Error> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .map_err(|_| Error::Parse(format!("{THREADS_ENV} must be a positive integer")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().map_err(Failure::from).and_then(|_| run(cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(exit::VERIFY_FAILED),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::OTHER)
        }
    }
}
