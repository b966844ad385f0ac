//! Command-line front end for the `arcclass` library.

mod commands;
pub mod input;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use report::{reproduce, ReportRow, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] arcclass::Error),
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(arcclass::Error::ResourceExhausted { .. }) => exit::BUDGET,
            _ => exit::INPUT,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const VERDICT_FALSE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Parser)]
#[command(
    name = "arcclass",
    version,
    about = "Equivariant classes of jet schemes and contact loci"
)]
pub struct Cli {
    /// Cap on S-pairs per Groebner basis computation
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Worker threads for independent cases
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the generators of the jet ideal J_m of an ideal
    JetEquations {
        /// Comma-separated generators, e.g. "x^3-y^2"
        #[arg(long)]
        ideal: String,
        /// Jet order m
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Variable order, comma separated; defaults to order of appearance
        #[arg(long)]
        vars: Option<String>,
    },
    /// Multidegree of an ideal, optionally of its jet ideal or a saturation
    Multidegree {
        /// Degrees as var:vector pairs, e.g. "x:2;y:3" or "a:1,0;b:0,1"
        #[arg(long)]
        grading: String,
        /// Comma-separated generators
        #[arg(long)]
        ideal: String,
        /// Replace the ideal by its jet ideal of this order first
        #[arg(long)]
        jets: Option<usize>,
        /// Saturate by this comma-separated ideal before taking the class
        #[arg(long)]
        saturate_by: Option<String>,
    },
    /// Reduced Groebner basis of the saturation I : J^infinity
    Saturate {
        /// Comma-separated generators of I
        #[arg(long)]
        ideal: String,
        /// Comma-separated generators of J
        #[arg(long)]
        by: String,
        /// Replace I by its jet ideal of this order first
        #[arg(long)]
        jets: Option<usize>,
        #[arg(long)]
        vars: Option<String>,
    },
    /// Log canonical threshold bound from jet dimensions
    Lct {
        /// Comma-separated generators
        #[arg(long)]
        ideal: String,
        /// Largest jet order M examined
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        vars: Option<String>,
        /// Assert that the maximum over m <= max-order is attained
        #[arg(long)]
        divisible: bool,
    },
    /// Validate a fan file and optionally locate a point
    ToricCheck {
        /// JSON fan file with rank, rays and maximal cones
        fan: PathBuf,
        /// Lattice point, comma separated
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Compare the piecewise linear functions of a refinement at a point
    ToricRefine {
        /// JSON fan file of the refinement
        #[arg(long)]
        fine: PathBuf,
        /// JSON fan file being refined
        #[arg(long)]
        coarse: PathBuf,
        /// Lattice point, comma separated
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Contact profile of a matrix jet
    GlnProfile {
        /// Matrix file: "m=<k>" then rows split by ';', entries by ','
        matrix: PathBuf,
    },
    /// Orbit normal form of a matrix jet
    GlnNormalForm {
        /// Matrix file, same format as gln-profile
        matrix: PathBuf,
    },
    /// Compare the class of a determinantal contact locus with c^m
    VerifyConjecture {
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Multiplicities m_1,...,m_n
        #[arg(long)]
        m: String,
    },
    /// Recompute every reference value and print a TSV report
    ReproducePaper {
        /// Seed for the sampled normal-form cases
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Grading used for the cusp cases
        #[arg(long, default_value = "x:2;y:3")]
        cusp_grading: String,
    },
}

/// Exit code and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: exit::OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let pool = match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: exit::INPUT,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let budget = match cli.budget {
        Some(n) => arcclass::groebner::Budget::pairs(n),
        None => arcclass::groebner::Budget::default(),
    };
    pool.install(|| match commands::dispatch(cli.command, &budget) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    })
}
