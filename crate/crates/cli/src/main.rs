//! `teachdim`: triple tables, invariant checks, teacher explanations and
//! dimension reports for star and connected-set classes.

mod dims;
mod family;
mod par;
mod teach;
mod triples;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use teachdim::families::NamedGraph;
use teachdim::{ConceptClass, Limits};

use crate::family::FamilySpec;

#[derive(Debug, Parser)]
#[command(
    name = "teachdim",
    version,
    about = "Teaching and VC dimensions of graph-induced concept classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// (Δ or ℓ, RTD, VCD) per graph.
    Triples {
        #[command(flatten)]
        spec: FamilySpec,
        #[command(flatten)]
        class: ClassOpts,
        #[command(flatten)]
        common: Common,
    },
    /// Runs every applicable invariant check per graph; exits 1 on any
    /// violation.
    Verify {
        #[command(flatten)]
        spec: FamilySpec,
        #[command(flatten)]
        class: ClassOpts,
        #[command(flatten)]
        common: Common,
        /// Random subclasses probed when a class is too large for the full
        /// subclass check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for subclass sampling.
        #[arg(long = "sample-seed", default_value_t = 0)]
        sample_seed: u64,
    },
    /// Explains how one concept is taught.
    Teach {
        #[command(flatten)]
        spec: FamilySpec,
        #[command(flatten)]
        class: ClassOpts,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        teacher: teach::TeacherName,
        /// Vertex labels, comma separated; empty for ∅.
        #[arg(long, allow_hyphen_values = true)]
        concept: String,
        /// Also dump the whole teacher.
        #[arg(long)]
        explain: bool,
    },
    /// VCD, TD, RTD certificate and Sauer bounds of one class.
    Dims {
        /// Class file (`m d` header, then 0/1 rows); replaces the graph options.
        #[arg(long)]
        class_file: Option<PathBuf>,
        #[command(flatten)]
        spec: FamilySpec,
        #[command(flatten)]
        class: ClassOpts,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Star,
    Con,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Star => "star",
            Kind::Con => "con",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct ClassOpts {
    #[arg(long, value_enum, default_value_t = Kind::Star)]
    pub kind: Kind,
    /// Whether ∅ belongs to the connected-set class. Defaults depend on the
    /// command and are echoed in the output.
    #[arg(long, action = ArgAction::Set)]
    pub include_empty: Option<bool>,
}

impl ClassOpts {
    /// The ∅ policy in force, or `None` for star classes.
    pub fn policy(&self, default: bool) -> Option<bool> {
        match self.kind {
            Kind::Star => None,
            Kind::Con => Some(self.include_empty.unwrap_or(default)),
        }
    }

    pub fn build(&self, g: &NamedGraph, default: bool, limits: &Limits) -> Result<ConceptClass> {
        Ok(match self.policy(default) {
            None => teachdim::star::build_star_class(&g.graph, limits)?,
            Some(e) => teachdim::con::build_con_class(&g.graph, e, limits)?,
        })
    }
}

pub fn policy_str(p: Option<bool>) -> &'static str {
    match p {
        None => "n/a",
        Some(true) => "true",
        Some(false) => "false",
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Enumeration and path-search budget; overrides TEACHDIM_BUDGET.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Process graphs on worker threads (output order is unchanged).
    #[arg(long)]
    pub parallel: bool,
}

impl Common {
    pub fn limits(&self) -> Limits {
        let l = Limits::from_env();
        match self.budget {
            Some(b) => l.with_budget(b),
            None => l,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<bool> {
        match cli.command {
            Command::Triples {
                spec,
                class,
                common,
            } => triples::run(&spec, &class, &common),
            Command::Verify {
                spec,
                class,
                common,
                samples,
                sample_seed,
            } => verify::run(&spec, &class, &common, samples, sample_seed),
            Command::Teach {
                spec,
                class,
                common,
                teacher,
                concept,
                explain,
            } => teach::run(&spec, &class, &common, teacher, &concept, explain),
            Command::Dims {
                class_file,
                spec,
                class,
                common,
            } => dims::run(class_file.as_deref(), &spec, &class, &common),
        }
    };
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
