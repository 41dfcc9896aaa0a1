//! Command-line front end.
//!
//! ```text
//! covseries compute --d <int> [--format plain|latex|json]
//! covseries dims --d <int> --n-max <int> [--method springer|dp|gf] [--format plain|json]
//! covseries verify [--d-max <int>]
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::combinatorics::{dim_lemma1, DimTable, Method};
use crate::error::{Error, Result};
use crate::fixtures::{self, GoldenFixture};
use crate::springer::{partial_fraction_check, poincare_series};
use crate::MAX_FORM_DEGREE;

/// Largest `n` compared across methods by `verify`.
pub const VERIFY_N_MAX: usize = 15;
/// Largest `d` for which `verify` rebuilds the partial-fraction grid.
pub const VERIFY_PARTIAL_FRACTION_D_MAX: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "covseries", version, about = "Poincaré series of covariants of binary forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_d(z) as a rational function.
    Compute {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Plain)]
        format: SeriesFormat,
    },
    /// Print dim (C_d)_n for n = 0..=n_max.
    Dims {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = DimsMethod::Springer)]
        method: DimsMethod,
        #[arg(long, value_enum, default_value_t = TableFormat::Plain)]
        format: TableFormat,
    },
    /// Cross-check every method and the published tables; exit 0 iff all pass.
    Verify {
        #[arg(long, default_value_t = 10)]
        d_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimsMethod {
    Springer,
    Dp,
    Gf,
}

impl From<DimsMethod> for Method {
    fn from(m: DimsMethod) -> Self {
        match m {
            DimsMethod::Springer => Method::SpringerExpand,
            DimsMethod::Dp => Method::Theorem1Dp,
            DimsMethod::Gf => Method::Theorem2Gf,
        }
    }
}

fn check_degree(d: u32) -> Result<()> {
    if !(1..=MAX_FORM_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            d,
            max: Some(MAX_FORM_DEGREE),
        });
    }
    Ok(())
}

pub fn cmd_compute(d: u32, format: SeriesFormat) -> Result<String> {
    check_degree(d)?;
    let p = poincare_series(d)?;
    Ok(match format {
        SeriesFormat::Plain => p.to_plain(),
        SeriesFormat::Latex => p.to_latex(),
        SeriesFormat::Json => p.to_json(d),
    })
}

pub fn cmd_dims(d: u32, n_max: usize, method: Method, format: TableFormat) -> Result<String> {
    check_degree(d)?;
    let table = DimTable::compute(d, n_max, method)?;
    Ok(match format {
        TableFormat::Plain => table.to_plain(),
        TableFormat::Json => table.to_json(),
    })
}

/// One line of the `verify` report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "{verdict}  {}", c.name);
            } else {
                let _ = writeln!(out, "{verdict}  {:<width$}  {}", c.name, c.detail);
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }

    fn push(&mut self, name: String, passed: bool, detail: String) {
        self.checks.push(CheckResult { name, passed, detail });
    }
}

pub fn cmd_verify(d_max: u32) -> Result<VerifyReport> {
    check_degree(d_max)?;
    cmd_verify_with(d_max, &fixtures::all())
}

/// [`cmd_verify`] against caller-supplied fixtures.
pub fn cmd_verify_with(d_max: u32, golden: &[GoldenFixture]) -> Result<VerifyReport> {
    check_degree(d_max)?;
    let mut report = VerifyReport::default();

    let series: Vec<_> = (1..=d_max).map(poincare_series).collect::<Result<_>>()?;

    for f in golden.iter().filter(|f| f.d <= d_max) {
        let computed = &series[f.d as usize - 1];
        let passed = computed.equals(&f.expression);
        let detail = if passed {
            String::new()
        } else {
            format!("computed {computed}")
        };
        report.push(format!("golden P_{}", f.d), passed, detail);
    }

    for d in 1..=d_max {
        let springer: Vec<_> = series[d as usize - 1].expand(VERIFY_N_MAX).into_coeffs();
        let dp = DimTable::compute(d, VERIFY_N_MAX, Method::Theorem1Dp)?;
        let gf = DimTable::compute(d, VERIFY_N_MAX, Method::Theorem2Gf)?;
        let mut mismatch = None;
        let columns = springer.iter().zip(dp.dims()).zip(gf.dims());
        for (n, ((expanded, dp_n), gf_n)) in columns.enumerate() {
            let lemma1 = dim_lemma1(d as usize, n);
            let agree = dp_n == gf_n && dp_n == &lemma1 && expanded == &num_bigint::BigInt::from(lemma1.clone());
            if !agree {
                mismatch = Some(format!(
                    "n={n}: dp={dp_n} gf={gf_n} lemma1={lemma1} springer={expanded}"
                ));
                break;
            }
        }
        report.push(
            format!("methods agree d={d} n<={VERIFY_N_MAX}"),
            mismatch.is_none(),
            mismatch.unwrap_or_default(),
        );
    }

    for d in 1..=d_max.min(VERIFY_PARTIAL_FRACTION_D_MAX) {
        let du = d as usize;
        let orders = (8, 16 * du);
        report.push(
            format!("partial fractions d={d} orders={orders:?}"),
            partial_fraction_check(du, orders),
            String::new(),
        );
    }

    Ok(report)
}

/// Parses `args` and runs one command. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute { d, format } => cmd_compute(d, format).map(|s| (s + "\n", 0)),
        Command::Dims {
            d,
            n_max,
            method,
            format,
        } => cmd_dims(d, n_max, method.into(), format).map(|s| {
            let s = if s.ends_with('\n') { s } else { s + "\n" };
            (s, 0)
        }),
        Command::Verify { d_max } => cmd_verify(d_max).map(|r| (r.to_text(), r.exit_code())),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "usage: covseries <compute|dims|verify> --help");
            2
        }
    }
}
