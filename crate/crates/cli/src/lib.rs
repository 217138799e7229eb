//! Command-line front end for `nilcoh`.
//!
//! Every subcommand prints plain text by default and a JSON object with a
//! `"schema": 1` field under `--json`. Integers that may exceed 64 bits are
//! emitted as decimal strings. Exit codes: 0 on success, 1 when a
//! verification fails, 2 on usage or precondition errors.

pub mod checks;
mod commands;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use config::{FileConfig, Overrides, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(#[from] nilcoh::Error),
}

/// Result of one subcommand: text and JSON renderings plus pass/fail.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub failed: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "nilcoh",
    version,
    about = "Exact computation in free nilpotent quotients F/F_k"
)]
#[command(
    after_help = "Words use letters a, b, c, … for x1, x2, x3, … and uppercase for inverses \
(\"abAB\" is [x1,x2]); \"x1 x2 x1^-1 x2^-1\" is also accepted. Indices are written 112, 1,1,2 or aab.\n\
The environment variable NILCOH_MAX_DEGREE caps --k (default 8)."
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file with defaults for q, k, seed, samples, max-word-len and output.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Level {
    /// Rank of the free group.
    #[arg(long)]
    pub q: Option<usize>,
    /// Nilpotency level: computations take place in F/F_k.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Sampling {
    /// Seed for sampled inputs.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Samples per sampled check.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Longest sampled word.
    #[arg(long)]
    pub max_word_len: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Witt number N_k, the rank of F_k/F_{k+1}.
    Witt {
        #[command(flatten)]
        level: Level,
    },
    /// Standard (Lyndon) sequences of length k.
    Lyndon {
        #[command(flatten)]
        level: Level,
    },
    /// Magnus expansion of a word modulo degree k.
    Magnus {
        #[command(flatten)]
        level: Level,
        word: String,
    },
    /// Unitriangular matrix Υ_k of a word.
    Upsilon {
        #[command(flatten)]
        level: Level,
        word: String,
    },
    /// Massey 2-cocycle of a standard index of length k at a pair of words.
    Massey2 {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        index: String,
        x: String,
        y: String,
    },
    /// Explicit 3-cocycle Γ_{sI} (|I| = k) or Γ_{sI} − ∂𝔟 (|I| = k+1) at three words.
    Massey3 {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        s: u8,
        #[arg(long)]
        index: String,
        x: String,
        y: String,
        z: String,
        /// For |I| = k+1, evaluate the literal printed closed form instead.
        #[arg(long)]
        printed: bool,
    },
    /// Filtration census of the degree-3 basis.
    Census3 {
        #[command(flatten)]
        level: Level,
    },
    /// Pairing of the Massey product of a standard index with a word of F_k.
    Pair {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        index: String,
        word: String,
    },
    /// Quotients of F/F_{k+1} by standard commutators of weight k.
    Quotient {
        #[command(flatten)]
        level: Level,
        /// Comma-separated standard sequences of length k.
        #[arg(long, value_delimiter = ',', required = true)]
        relators: Vec<String>,
        #[command(subcommand)]
        action: QuotientAction,
    },
    /// Milnor invariant μ(I; ℓ) of a longitude system.
    Mu {
        #[command(flatten)]
        level: Level,
        /// Component ℓ, one-based.
        #[arg(long)]
        component: usize,
        #[arg(long)]
        index: String,
        /// Longitude words, one per component.
        #[arg(long = "longitude", required = true)]
        longitudes: Vec<String>,
    },
    /// Johnson homomorphism τ_k of an endomorphism given by generator images.
    Johnson {
        #[command(flatten)]
        level: Level,
        /// Generator image, e.g. "x1=abAB a"; unlisted generators are fixed.
        #[arg(long = "image", required = true)]
        images: Vec<String>,
    },
    /// Invariant differential forms on the Magnus image.
    Forms {
        #[command(subcommand)]
        kind: FormKind,
    },
    /// Run sampled and enumerated invariant checks.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        level: Level,
        #[command(flatten)]
        sampling: Sampling,
        /// Longest index for the differential-form checks (default: k).
        #[arg(long)]
        max_len: Option<usize>,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Re-execute the points recorded in a verification report.
    Replay { report: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum QuotientAction {
    /// The 2-cocycle φ_j at a pair of words.
    Phi {
        /// Relator position, one-based.
        #[arg(long, default_value_t = 1)]
        j: usize,
        x: String,
        y: String,
    },
    /// The triple Massey product ⟨α_r, φ_j, α_s⟩ at three words.
    Triple {
        #[arg(long)]
        r: u8,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long)]
        s: u8,
        x: String,
        y: String,
        z: String,
    },
    /// Whether two words agree in the quotient.
    Equal { u: String, v: String },
}

#[derive(Debug, Subcommand)]
pub enum FormKind {
    /// The invariant 1-form γ_I.
    Gamma {
        #[arg(long)]
        index: String,
        /// Use the left-invariant convention P⁻¹dP.
        #[arg(long)]
        left: bool,
    },
    /// The closed invariant 2-form Σ γ_{I≤r} ∧ γ_{I>r}.
    Massey {
        #[arg(long)]
        index: String,
        #[arg(long)]
        left: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Magnus,
    Cochain,
    Cocycle3,
    Topology,
    Derham,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Magnus => "magnus",
            Suite::Cochain => "cochain",
            Suite::Cocycle3 => "cocycle3",
            Suite::Topology => "topology",
            Suite::Derham => "derham",
            Suite::All => "all",
        }
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Witt { .. } => "witt",
            Command::Lyndon { .. } => "lyndon",
            Command::Magnus { .. } => "magnus",
            Command::Upsilon { .. } => "upsilon",
            Command::Massey2 { .. } => "massey2",
            Command::Massey3 { .. } => "massey3",
            Command::Census3 { .. } => "census3",
            Command::Pair { .. } => "pair",
            Command::Quotient { .. } => "quotient",
            Command::Mu { .. } => "mu",
            Command::Johnson { .. } => "johnson",
            Command::Forms { .. } => "forms",
            Command::Verify { .. } => "verify",
            Command::Replay { .. } => "replay",
        }
    }

    fn overrides(&self, json: bool) -> Overrides {
        let mut o = Overrides {
            json,
            ..Default::default()
        };
        let level = match self {
            Command::Witt { level }
            | Command::Lyndon { level }
            | Command::Magnus { level, .. }
            | Command::Upsilon { level, .. }
            | Command::Massey2 { level, .. }
            | Command::Massey3 { level, .. }
            | Command::Census3 { level }
            | Command::Pair { level, .. }
            | Command::Quotient { level, .. }
            | Command::Mu { level, .. }
            | Command::Johnson { level, .. }
            | Command::Verify { level, .. } => Some(level),
            Command::Forms { .. } | Command::Replay { .. } => None,
        };
        if let Some(level) = level {
            o.q = level.q;
            o.k = level.k;
        }
        if let Command::Verify { sampling, .. } = self {
            o.seed = sampling.seed;
            o.samples = sampling.samples;
            o.max_word_len = sampling.max_word_len;
        }
        o
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let name = cli.command.name();
    let mut json = cli.json;
    let result = (|| {
        let file = match &cli.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let cfg = RunConfig::resolve(&file, &cli.command.overrides(cli.json))?;
        json = cfg.json();
        commands::dispatch(&cli.command, &cfg)
    })();
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let written = if json {
                let mut obj = out.json;
                if let Value::Object(map) = &mut obj {
                    map.entry("schema").or_insert(json!(report::SCHEMA));
                    map.entry("command").or_insert(json!(name));
                }
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&obj).expect("JSON values serialize")
                )
            } else {
                write!(stdout, "{}", out.text)
            };
            if written.is_err() {
                return EXIT_FAILED;
            }
            if out.failed {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let kind = match e {
                CliError::Usage(_) => "usage",
                CliError::Precondition(_) => "precondition",
            };
            if json {
                let obj = json!({
                    "schema": report::SCHEMA,
                    "command": name,
                    "error": { "kind": kind, "message": e.to_string() },
                });
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&obj).expect("JSON values serialize")
                );
            }
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
