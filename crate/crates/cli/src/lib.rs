//! Command-line front end for `dsgeom`.
//!
//! [`run`] parses arguments, dispatches to one command and returns a
//! [`Report`] together with the process exit code: 0 on success, 1 when a
//! check or precondition fails, 2 for malformed input.

mod commands;
mod load;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

use dsgeom::dsvariety::DEFAULT_MAX_MINOR_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "dsgeom", version, about = "Exact computations with graded modules over Lie superalgebras")]
pub struct Cli {
    /// Seed for every randomized sample.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest module dimension for which determinantal minors are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MINOR_DIM)]
    pub max_minor_dim: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an algebra, module, map, rigid complex or g0-module.
    Validate(ValidateArgs),
    /// Dimensions and basic invariants of a module.
    ModuleInfo(ModuleArg),
    /// Degree shift V[m].
    Shift {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Tensor product of two modules.
    Tensor {
        #[arg(long = "module", num_args = 1, required = true)]
        modules: Vec<String>,
    },
    /// Graded dual.
    Dual(ModuleArg),
    /// Basis of degree-preserving g-maps.
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Induced module Λ(g1) ⊗ Q.
    Induce {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i64,
    },
    /// Rigid complexes: L(V), V(L), fibers and the roundtrip check.
    #[command(subcommand)]
    Rigid(RigidCommand),
    /// Duflo–Serganova fiber at a point.
    Ds {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Associated variety: determinantal ideal and/or sampled membership.
    Variety {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        ideal: bool,
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Compare fiber cohomology of L(M) with DS fibers at sampled points.
    SupportCheck {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, default_value_t = 25)]
        sample: usize,
    },
    /// Split V into an induced part and a reduced part.
    Decompose(ModuleArg),
    /// Projectivity via a section of the free cover.
    IsProjective(ModuleArg),
    /// Whether the product of all odd generators acts by zero.
    IsReduced(ModuleArg),
    /// Whether two maps differ by a map factoring through a projective.
    StableEq(StableEqArgs),
    /// Frobenius reciprocity maps for Λ(g1) ⊗ Q.
    FrobeniusCheck {
        #[arg(long)]
        q: String,
    },
    /// Cohomology of O(d) on P^r.
    Cech {
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: i64,
    },
    /// Ext groups between twists of the structure sheaf on P^r.
    Ext {
        #[arg(short = 'i', allow_hyphen_values = true)]
        i: i64,
        #[arg(short = 'j', allow_hyphen_values = true)]
        j: i64,
        #[arg(short = 'r')]
        r: usize,
    },
    /// Chevalley–Eilenberg cohomology of g0 with coefficients in a g0-module.
    Ce {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "module")]
        module: String,
    },
    /// Cohomology of the odd Koszul complex S(g1*) ⊗ V.
    Koszul {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "module")]
        module: String,
        #[arg(long, default_value_t = 6)]
        pmax: usize,
    },
    /// Ext^{i-j-n+1}_{g0}(V, S^{i-j-n}(g1) ⊗ W).
    Nonfullness(NonfullnessArgs),
    /// List, print or write the built-in corpus.
    Corpus {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        write: Option<std::path::PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct ModuleArg {
    /// Module file, or the name of a corpus module.
    #[arg(long = "module")]
    pub module: String,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long)]
    pub complex: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RigidCommand {
    /// The rigid complex L(V).
    L(ModuleArg),
    /// The module V(L) of a rigid complex.
    V {
        #[arg(long)]
        complex: String,
    },
    /// The fiber complex at a point and its cohomology.
    Fiber {
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Check V(L(V)) = V and L(V(L)) = L exactly.
    Roundtrip(ModuleArg),
}

#[derive(Args, Debug)]
pub struct StableEqArgs {
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
    /// Give exactly two maps, or one map to compare with zero.
    #[arg(long = "map")]
    pub maps: Vec<String>,
}

#[derive(Args, Debug)]
pub struct NonfullnessArgs {
    /// A corpus parameter set such as `sl2_triv1_nonfullness`.
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    #[arg(long)]
    pub w: Option<String>,
    #[arg(short = 'i', allow_hyphen_values = true)]
    pub i: Option<i64>,
    #[arg(short = 'j', allow_hyphen_values = true)]
    pub j: Option<i64>,
    /// Offset n; defaults to dim g1.
    #[arg(short = 'n')]
    pub n: Option<usize>,
}

/// The outcome of one invocation. `results` and `certificates` are JSON
/// objects; matrix entries and point coordinates are exact rationals
/// rendered as `"p/q"` strings, never decimals.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub results: Value,
    pub certificates: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_status: i32,
    #[serde(skip)]
    pub summary: Vec<String>,
    #[serde(skip)]
    pub format: Format,
}

impl Report {
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Text => {
                let mut out = String::new();
                for line in &self.summary {
                    out.push_str(line);
                    out.push('\n');
                }
                for w in &self.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                if let Some(e) = &self.error {
                    out.push_str(&format!("error: {e}\n"));
                }
                out
            }
        }
    }
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub(crate) enum CliError {
    Malformed(String),
    Failed(String),
}

impl From<dsgeom::Error> for CliError {
    fn from(e: dsgeom::Error) -> Self {
        use dsgeom::Error::*;
        match e {
            Parse(_) | Shape(_) | DimensionMismatch(_) | ZeroPoint => CliError::Malformed(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// Accumulates the parts of a report while a command runs.
#[derive(Default)]
pub(crate) struct Out {
    results: Map<String, Value>,
    certificates: Map<String, Value>,
    warnings: Vec<String>,
    summary: Vec<String>,
    failed: bool,
}

impl Out {
    pub(crate) fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), serde_json::to_value(value).expect("results serialize"));
    }

    pub(crate) fn cert(&mut self, key: &str, value: impl Serialize) {
        self.certificates.insert(key.to_string(), serde_json::to_value(value).expect("certificates serialize"));
    }

    pub(crate) fn warn(&mut self, text: impl Into<String>) {
        self.warnings.push(text.into());
    }

    pub(crate) fn line(&mut self, text: impl Into<String>) {
        self.summary.push(text.into());
    }

    pub(crate) fn fail(&mut self) {
        self.failed = true;
    }
}

fn requested_format(args: &[String]) -> Format {
    let json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json");
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> (Report, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let empty = || (Value::Object(Map::new()), Value::Object(Map::new()));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let (results, certificates) = empty();
            let text = e.render().to_string();
            let report = Report {
                command: echo.clone(),
                results,
                certificates,
                warnings: Vec::new(),
                error: (code != 0).then(|| text.trim_end().trim_start_matches("error: ").to_string()),
                exit_status: code,
                summary: if code == 0 { vec![text.trim_end().to_string()] } else { Vec::new() },
                format: requested_format(&echo),
            };
            return (report, code);
        }
    };

    let format = cli.format;
    let mut out = Out::default();
    let outcome = commands::dispatch(&cli, &mut out);
    let (code, error) = match outcome {
        Ok(()) if out.failed => (1, None),
        Ok(()) => (0, None),
        Err(CliError::Failed(m)) => (1, Some(m)),
        Err(CliError::Malformed(m)) => (2, Some(m)),
    };
    let report = Report {
        command: echo,
        results: Value::Object(out.results),
        certificates: Value::Object(out.certificates),
        warnings: out.warnings,
        error,
        exit_status: code,
        summary: out.summary,
        format,
    };
    (report, code)
}
