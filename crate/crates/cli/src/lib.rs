//! Command-line front end for the semiring Eisenstein checker.
//!
//! [`run_cli`] is the whole program minus process plumbing, so tests drive
//! it directly. Exit codes: 0 for a positive answer, 2 for a definite
//! negative one, 1 for usage errors, input errors and hypotheses that
//! could not be established.

mod render;

use std::ffi::OsString;
use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use eisenstein_core::{
    builtin_semiring, ideal_closure, principal_ideal, EnumerationBudget, FiniteSemiring, Ideal,
    Polynomial, SearchConfig, Semiring,
};

pub const EXIT_POSITIVE: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;

pub const DEFAULT_HYPOTHESIS_BOUND: u64 = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "eisenstein",
    version,
    about = "Eisenstein's criterion over commutative semirings"
)]
struct Cli {
    /// Print a single JSON document instead of the readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on stdout; only the exit code and errors remain.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in semiring: nat, bool, tropical-min or gcd-nat.
    #[arg(long)]
    semiring: Option<String>,
    /// Semiring table file, `-` for stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct IdealSpec {
    /// Generator of a principal ideal.
    #[arg(long)]
    prime: Option<String>,
    /// Comma-separated generators (finite carriers only).
    #[arg(long = "ideal-gens", value_delimiter = ',')]
    ideal_gens: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the semiring axioms of a table file.
    Axioms {
        #[command(flatten)]
        source: Source,
    },
    /// Report whether an ideal is proper, prime and subtractive.
    Ideal {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        ideal: IdealSpec,
        #[arg(long, default_value_t = DEFAULT_HYPOTHESIS_BOUND)]
        hypothesis_bound: u64,
    },
    /// Check the criterion for a polynomial against an ideal.
    Eisenstein {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        ideal: IdealSpec,
        #[arg(long, default_value_t = DEFAULT_HYPOTHESIS_BOUND)]
        hypothesis_bound: u64,
        /// Polynomial such as "x^2 + 2*x + 2", `-` for stdin.
        poly: String,
    },
    /// Check the prime-element form of the criterion.
    Corollary {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        prime: String,
        #[arg(long, default_value_t = DEFAULT_HYPOTHESIS_BOUND)]
        hypothesis_bound: u64,
        poly: String,
    },
    /// Search for a factorization into two non-constant polynomials.
    Factor {
        #[command(flatten)]
        source: Source,
        /// Extra total degree searched on carriers with zero divisors.
        #[arg(long, default_value_t = 2)]
        window: usize,
        /// Cap on candidate coefficients for the infinite carriers.
        #[arg(long)]
        coeff_bound: Option<u64>,
        /// Maximum number of coefficient assignments tried.
        #[arg(long, default_value_t = SearchConfig::default().node_budget)]
        budget: u64,
        poly: String,
    },
    /// Replay the proof's contradiction argument on g·h.
    Trace {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        ideal: IdealSpec,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Validate the criterion exhaustively over a small finite semiring.
    VerifyTheorem {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
    /// Hunt for evidence that subtractivity is needed.
    Hunt {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = EnumerationBudget::default().nodes)]
        budget: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// A rendered command result.
struct Report {
    code: u8,
    human: String,
    json: String,
    /// Printed on stderr regardless of output mode.
    diagnostic: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Core(eisenstein_core::Error),
    Io { path: String, message: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "cannot read `{path}`: {message}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<eisenstein_core::Error> for CliError {
    fn from(e: eisenstein_core::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Runs one invocation. `argv` includes the program name.
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput {
                    code: EXIT_POSITIVE,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match execute(&cli.command, &mut input) {
        Ok(report) => CliOutput {
            code: report.code,
            stdout: match (cli.quiet, cli.json) {
                (true, _) => String::new(),
                (false, true) => report.json,
                (false, false) => report.human,
            },
            stderr: report
                .diagnostic
                .map(|d| format!("error: {d}\n"))
                .unwrap_or_default(),
        },
        Err(e) => CliOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read_stdin(&mut self) -> CliResult<String> {
        if self.used {
            return Err(CliError::Usage("stdin can be used for only one argument".into()));
        }
        self.used = true;
        let mut text = String::new();
        self.stdin.read_to_string(&mut text).map_err(|e| CliError::Io {
            path: "-".into(),
            message: e.to_string(),
        })?;
        Ok(text)
    }

    fn read_file(&mut self, path: &Path) -> CliResult<String> {
        if path == Path::new("-") {
            return self.read_stdin();
        }
        std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    fn poly_text(&mut self, arg: &str) -> CliResult<String> {
        if arg == "-" {
            Ok(self.read_stdin()?.trim().to_string())
        } else {
            Ok(arg.to_string())
        }
    }
}

fn file_label(path: &Path) -> String {
    if path == Path::new("-") {
        return "stdin".into();
    }
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_table(source: &Source, input: &mut Input) -> CliResult<(String, FiniteSemiring)> {
    match (&source.semiring, &source.file) {
        (Some(name), _) => {
            let s = builtin_semiring(name)?;
            let table = s
                .table()
                .cloned()
                .ok_or_else(|| eisenstein_core::Error::NotFinite(name.clone()))?;
            Ok((name.clone(), table))
        }
        (None, Some(path)) => {
            let text = input.read_file(path)?;
            Ok((file_label(path), FiniteSemiring::parse(&text)?))
        }
        (None, None) => unreachable!("clap enforces one semiring source"),
    }
}

fn load_semiring(source: &Source, input: &mut Input) -> CliResult<Arc<Semiring>> {
    match (&source.semiring, &source.file) {
        (Some(name), _) => Ok(builtin_semiring(name)?),
        _ => {
            let (name, table) = load_table(source, input)?;
            Ok(Arc::new(Semiring::finite(name, table)?))
        }
    }
}

fn build_ideal(semiring: &Arc<Semiring>, spec: &IdealSpec) -> CliResult<Ideal> {
    match (&spec.prime, &spec.ideal_gens) {
        (Some(p), _) => Ok(principal_ideal(semiring, &semiring.parse_element(p.trim())?)?),
        (None, Some(gens)) => {
            let elems = gens
                .iter()
                .map(|g| semiring.parse_element(g.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ideal_closure(semiring, &elems)?)
        }
        (None, None) => unreachable!("clap enforces one ideal specification"),
    }
}

fn parse_poly(text: &str, semiring: &Arc<Semiring>, input: &mut Input) -> CliResult<Polynomial> {
    Ok(Polynomial::parse(&input.poly_text(text)?, semiring)?)
}

fn execute(command: &Command, input: &mut Input) -> CliResult<Report> {
    match command {
        Command::Axioms { source } => {
            let (name, table) = load_table(source, input)?;
            Ok(render::axioms(&name, &table))
        }
        Command::Ideal {
            source,
            ideal,
            hypothesis_bound,
        } => {
            let s = load_semiring(source, input)?;
            let ideal = build_ideal(&s, ideal)?;
            let preds = ideal.predicates(*hypothesis_bound)?;
            Ok(render::ideal(&ideal, &preds, *hypothesis_bound)?)
        }
        Command::Eisenstein {
            source,
            ideal,
            hypothesis_bound,
            poly,
        } => {
            let s = load_semiring(source, input)?;
            let ideal = build_ideal(&s, ideal)?;
            let f = parse_poly(poly, &s, input)?;
            let report = eisenstein_core::check_eisenstein(&f, &ideal, *hypothesis_bound)?;
            Ok(render::eisenstein("eisenstein", &f, &report, *hypothesis_bound)?)
        }
        Command::Corollary {
            source,
            prime,
            hypothesis_bound,
            poly,
        } => {
            let s = load_semiring(source, input)?;
            let p = s.parse_element(prime.trim())?;
            let f = parse_poly(poly, &s, input)?;
            let report = eisenstein_core::check_corollary(&f, &p, *hypothesis_bound)?;
            Ok(render::eisenstein("corollary", &f, &report, *hypothesis_bound)?)
        }
        Command::Factor {
            source,
            window,
            coeff_bound,
            budget,
            poly,
        } => {
            let s = load_semiring(source, input)?;
            let f = parse_poly(poly, &s, input)?;
            let config = SearchConfig {
                window: *window,
                coeff_bound: *coeff_bound,
                node_budget: *budget,
            };
            let outcome = eisenstein_core::search_factorizations_with(&f, &config)?;
            Ok(render::factor(&f, &config, &outcome))
        }
        Command::Trace { source, ideal, g, h } => {
            let s = load_semiring(source, input)?;
            let ideal = build_ideal(&s, ideal)?;
            let g = parse_poly(g, &s, input)?;
            let h = parse_poly(h, &s, input)?;
            let outcome = eisenstein_core::proof_trace(&g, &h, &ideal)?;
            Ok(render::trace(&s, &ideal, &outcome))
        }
        Command::VerifyTheorem {
            source,
            max_degree,
            window,
        } => {
            let s = load_semiring(source, input)?;
            let stats = eisenstein_core::verify_theorem(&s, *max_degree, *window)?;
            Ok(render::verify(&s, *max_degree, *window, &stats))
        }
        Command::Hunt {
            max_order,
            max_degree,
            budget,
        } => {
            let report = eisenstein_core::hunt_subtractivity(
                *max_order,
                *max_degree,
                EnumerationBudget { nodes: *budget },
            )?;
            Ok(render::hunt(*max_order, *max_degree, *budget, &report))
        }
    }
}
