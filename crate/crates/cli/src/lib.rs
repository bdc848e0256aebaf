//! Library side of the `kbar` binary: the document format and one function
//! per subcommand. Commands return their standard output and exit status
//! instead of printing, so they can be tested in-process.

pub mod commands;
pub mod document;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::run;
pub use document::{parse, AnyDocument, Body, Document, Kind, ParseError};

/// Exit statuses.
pub mod status {
    pub const TRUE: u8 = 0;
    pub const FALSE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] kbar_core::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Internal(_) => status::INTERNAL,
            _ => status::INPUT,
        }
    }
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

impl Outcome {
    pub fn ok(stdout: impl Into<String>) -> Self {
        Outcome::verdict(true, stdout)
    }

    pub fn verdict(holds: bool, stdout: impl Into<String>) -> Self {
        Outcome {
            stdout: stdout.into(),
            stderr: String::new(),
            status: if holds { status::TRUE } else { status::FALSE },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "kbar", version, about = "K̄-categories and extended L-convex sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a document; categories and L-convex sets must satisfy the laws.
    Validate { file: PathBuf },
    /// Print the dual document: kcategory to lconvex and back.
    Dual { file: PathBuf },
    /// Test whether a point lies in an lconvex or constraints document.
    Member {
        file: PathBuf,
        /// Coordinates as `label=value` pairs, e.g. `v=0,w=inf`.
        #[arg(long)]
        point: String,
    },
    /// Close a constraints document into an lconvex document.
    Closure { file: PathBuf },
    /// The smallest lconvex set containing the points of a generators document.
    Hull { file: PathBuf },
    /// List every functor between two kcategory documents.
    Functors { domain: PathBuf, codomain: PathBuf },
    /// List every homomorphism between two lconvex documents.
    Homs { domain: PathBuf, codomain: PathBuf },
    /// Compare two parallel maps under the canonical ordering, both ways.
    Leq {
        domain: PathBuf,
        codomain: PathBuf,
        /// A map as `from:to` pairs; give exactly two.
        #[arg(long = "map", num_args = 1, required = true)]
        maps: Vec<String>,
    },
    /// Name the family of a two-point kcategory or lconvex document.
    Classify2 { file: PathBuf },
    /// Check that the Yoneda embeddings of a kcategory are isometric.
    YonedaCheck { file: PathBuf },
    /// Draw a two-index lconvex set on the integer grid.
    Render {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Run the enriching-lattice law suite.
    Laws {
        /// One of two, kbar-plus, kbar, kbar-plus-cart.
        lattice: String,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, default_value = "int")]
        scalar: String,
    },
}
