//! The `planocc` command-line interface.
//!
//! [`run`] takes the full argument vector and returns the exit status and
//! the text to print, so the binary is a thin wrapper and the interface can
//! be tested in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{expectation_pattern, expectation_submap, singular_s, singular_t, PuiseuxExpansion};
use crate::counting::{local_pattern_probability, m_bivariate, m_count, m_series, p_star, xi, PurePolygons};
use crate::map::format::parse_map;
use crate::map::CombinatorialMap;
use crate::occurrence::OccurrenceBuilder;
use crate::oracle::cache::CacheError;
use crate::oracle::{enumerate_maps_with_limit, verify_pattern, DEFAULT_LIMIT, HARD_LIMIT};
use crate::series::rational::to_f64;
use crate::series::{Rational, Series};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "planocc", version, about = "Exact occurrence statistics for patterns in random planar maps")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
    /// Also print decimal approximations of scalar results.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count rooted planar maps.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// Print a generating function as a coefficient list.
    Series {
        #[command(subcommand)]
        which: SeriesWhich,
    },
    /// Limiting probability that the root face is a pure ℓ-gon.
    Xi {
        #[arg(long)]
        ell: usize,
    },
    /// Limiting probability that the root face has valency k.
    Pstar {
        #[arg(long)]
        k: usize,
    },
    /// Limiting probability that the pattern occurs at the root.
    LocalProb {
        #[arg(long)]
        map: PathBuf,
    },
    /// Pattern occurrence series, expansion and expectation constants.
    Pattern(PatternArgs),
    /// Submap occurrence series, expansion and expectation constants.
    Submap(PatternArgs),
    /// Brute-force cross-validation.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand, Debug)]
enum CountWhat {
    /// Number of rooted planar maps with n edges.
    Maps {
        #[arg(long)]
        n: usize,
        /// Also enumerate the maps and compare.
        #[arg(long)]
        oracle: bool,
        /// Allow enumeration at the largest supported size.
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesWhich {
    /// M(z,1), or M(z,u) with --u.
    #[command(name = "M")]
    M {
        #[arg(long)]
        order: usize,
        /// Keep the root-face valency variable u.
        #[arg(long)]
        u: bool,
    },
    /// Maps whose root face is a pure ℓ-gon.
    #[command(name = "F")]
    F {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Args, Debug)]
struct PatternArgs {
    #[arg(long)]
    map: PathBuf,
    #[arg(long, default_value_t = 20)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum OracleAction {
    /// Compare every formula coefficient with enumeration.
    Verify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        nmax: usize,
        /// Directory holding cached enumerations.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Allow enumeration at the largest supported size.
        #[arg(long)]
        extended: bool,
    },
}

/// One named piece of output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Field {
    pub name: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Scalar(String),
    /// Coefficients keyed by index; `var` names the index.
    Coefficients {
        var: String,
        entries: Vec<(usize, String)>,
    },
    Lines(Vec<String>),
}

/// Everything a command prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub fields: Vec<Field>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.to_string(), fields: Vec::new() }
    }

    fn scalar(&mut self, name: &str, value: &Rational, float: bool) {
        self.fields.push(Field {
            name: name.into(),
            value: Value::Scalar(value.to_string()),
            approx: float.then(|| to_f64(value)),
        });
    }

    fn text(&mut self, name: &str, value: String) {
        self.fields.push(Field { name: name.into(), value: Value::Scalar(value), approx: None });
    }

    fn coefficients(&mut self, name: &str, var: &str, entries: Vec<(usize, String)>) {
        self.fields.push(Field {
            name: name.into(),
            value: Value::Coefficients { var: var.into(), entries },
            approx: None,
        });
    }

    fn series(&mut self, name: &str, s: &Series) {
        let start = s.valuation().unwrap_or(s.order() + 1);
        let entries = (start..=s.order()).map(|n| (n, s.coeff(n).to_string())).collect();
        self.coefficients(name, "n", entries);
    }

    fn expansion(&mut self, name: &str, e: &PuiseuxExpansion) {
        let entries = e.coeffs().iter().enumerate().map(|(i, c)| (i, c.to_string())).collect();
        self.coefficients(name, "i", entries);
    }

    pub fn render_plain(&self) -> String {
        if let [Field { value: Value::Scalar(v), approx, .. }] = self.fields.as_slice() {
            return match approx {
                Some(x) => format!("{v} (approx {x:.6e})\n"),
                None => format!("{v}\n"),
            };
        }
        let mut out = String::new();
        for f in &self.fields {
            match &f.value {
                Value::Scalar(v) => {
                    out.push_str(&format!("{} = {v}", f.name));
                    if let Some(x) = f.approx {
                        out.push_str(&format!(" (approx {x:.6e})"));
                    }
                    out.push('\n');
                }
                Value::Coefficients { var, entries } => {
                    let body: Vec<String> = entries.iter().map(|(i, c)| format!("{var}={i}: {c}")).collect();
                    out.push_str(&format!("{}: {}\n", f.name, body.join(", ")));
                }
                Value::Lines(lines) => {
                    out.push_str(&format!("{}:\n", f.name));
                    for l in lines {
                        out.push_str(&format!("  {l}\n"));
                    }
                }
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("planocc: {msg}\n") }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Map(_) | Error::EmptyPattern | Error::UnsupportedValency { .. } => EXIT_INVALID_INPUT,
            Error::SizeLimitExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_VERIFICATION,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<CacheError> for Failure {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::Enumeration(e) => e.into(),
            CacheError::Io(e) => Failure { code: EXIT_INVALID_INPUT, message: format!("cache: {e}") },
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn load_map(path: &Path) -> Result<CombinatorialMap, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_INVALID_INPUT, message: format!("cannot read {}: {e}", path.display()) })?;
    let map = parse_map(&text)
        .map_err(|e| Failure { code: EXIT_INVALID_INPUT, message: format!("{}: {e}", path.display()) })?;
    if map.is_empty() {
        return Err(Error::EmptyPattern.into());
    }
    Ok(map)
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            let stdout = match cli.format {
                Format::Plain => report.render_plain(),
                Format::Json => report.render_json(),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(f) => Outcome::fail(f.code, f.message),
    }
}

fn execute(cli: &Cli) -> Result<(Report, i32), Failure> {
    let float = cli.float;
    let mut code = EXIT_OK;
    let report = match &cli.command {
        Command::Count { what: CountWhat::Maps { n, oracle, extended } } => {
            let mut r = Report::new("count maps");
            let exact = Rational::from_integer(m_count(*n));
            if *oracle {
                let limit = if *extended { HARD_LIMIT } else { DEFAULT_LIMIT };
                let found = enumerate_maps_with_limit(*n, limit)?.count();
                r.scalar("formula", &exact, float);
                r.scalar("enumerated", &Rational::from_integer(found.into()), float);
                let agree = Rational::from_integer(found.into()) == exact;
                r.text("status", if agree { "PASS".into() } else { "FAIL".into() });
                if !agree {
                    code = EXIT_VERIFICATION;
                }
            } else {
                r.scalar(&format!("m_{n}"), &exact, float);
            }
            r
        }
        Command::Series { which: SeriesWhich::M { order, u } } => {
            let mut r = Report::new("series M");
            if *u {
                let m = m_bivariate(*order)?;
                let entries = (0..=*order).map(|n| (n, m.coeff(n).to_string())).collect();
                r.coefficients("M(z,u)", "n", entries);
            } else {
                r.series("M(z,1)", &m_series(*order));
            }
            r
        }
        Command::Series { which: SeriesWhich::F { ell, order } } => {
            if ell > order {
                return Err(usage(format!("--order {order} is below --ell {ell}; F_ℓ starts at z^ℓ")));
            }
            let mut r = Report::new("series F");
            let f = PurePolygons::new(*order)?.f_ell(*ell)?;
            r.series(&format!("F_{ell}"), &f);
            r
        }
        Command::Xi { ell } => {
            let mut r = Report::new("xi");
            r.scalar(&format!("xi_{ell}"), &xi(*ell)?, float);
            r
        }
        Command::Pstar { k } => {
            if *k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let mut r = Report::new("pstar");
            r.scalar(&format!("p*_{k}"), &p_star(*k), float);
            r
        }
        Command::LocalProb { map } => {
            let d = load_map(map)?.descriptor().map_err(Error::from)?;
            let mut r = Report::new("local-prob");
            r.scalar("P", &local_pattern_probability(&d)?, float);
            r
        }
        Command::Pattern(args) => occurrence_report(args, false, float)?,
        Command::Submap(args) => occurrence_report(args, true, float)?,
        Command::Oracle { action: OracleAction::Verify { map, nmax, cache_dir, extended } } => {
            let pattern = load_map(map)?;
            let limit = if *extended { HARD_LIMIT } else { DEFAULT_LIMIT };
            let report = verify_pattern(&pattern, *nmax, limit, cache_dir.as_deref())?;
            let mut r = Report::new("oracle verify");
            let lines = report
                .checks
                .iter()
                .map(|c| {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    format!("{status} {}: formula {} oracle {}", c.label, c.formula, c.oracle)
                })
                .collect();
            r.fields.push(Field { name: "checks".into(), value: Value::Lines(lines), approx: None });
            let summary =
                format!("{} of {} checks passed", report.checks.len() - report.failures(), report.checks.len());
            r.text("summary", summary);
            if !report.all_passed() {
                code = EXIT_VERIFICATION;
            }
            r
        }
    };
    Ok((report, code))
}

fn describe(d: &crate::PatternDescriptor) -> String {
    let omegas: Vec<String> = d.inner_valencies.iter().map(usize::to_string).collect();
    format!(
        "ell={} k={} s={} inner_valency_sum={} inner_valencies=[{}] rotational_count={}",
        d.ell,
        d.inner_edges,
        d.outer_edges,
        d.inner_valency_sum,
        omegas.join(","),
        d.rotational_count
    )
}

fn occurrence_report(args: &PatternArgs, submap: bool, float: bool) -> Result<Report, Failure> {
    let d = load_map(&args.map)?.descriptor().map_err(Error::from)?;
    if d.ell < 2 {
        return Err(Error::UnsupportedValency { valency: d.ell, context: "pure polygons need ℓ ≥ 2" }.into());
    }
    let extra = d.inner_valencies.iter().copied().max().unwrap_or(0) + (-d.shift()).max(0) as usize;
    let builder = OccurrenceBuilder::new(args.order + extra)?;
    let mut r = Report::new(if submap { "submap" } else { "pattern" });
    r.text("descriptor", describe(&d));
    if submap {
        r.series("S", &builder.submap(&d)?.series.truncate(args.order));
        r.expansion("rho", &singular_s(&d, 3)?);
        let c = expectation_submap(&d)?;
        r.scalar("c1'", &c.c1, float);
        r.scalar("c2'", &c.c2, float);
    } else {
        r.series("F", &builder.at_root(&d)?.series.truncate(args.order));
        r.series("T", &builder.pattern(&d)?.series.truncate(args.order));
        r.expansion("tau", &singular_t(&d, 3)?);
        let c = expectation_pattern(&d)?;
        debug_assert!(!c.c1.is_zero());
        r.scalar("c1", &c.c1, float);
        r.scalar("c2", &c.c2, float);
    }
    Ok(r)
}
