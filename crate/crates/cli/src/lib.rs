//! File formats and commands behind the `h2coord` binary.
//!
//! Exit codes: 0 on success, 1 on a mathematical failure (reported with a
//! witness), 2 on an I/O or parse failure.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use h2coord::{Error, FieldSpec};

pub mod commands;
pub mod format;

/// A command failure, split by exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    Input(String),
    /// A mathematical obstruction; exit code 1.
    Math(String),
}

impl CliError {
    pub fn input(e: impl fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn math(e: impl fmt::Display) -> Self {
        CliError::Math(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::BadField(_)
            | Error::NotOddPrime(_)
            | Error::DuplicateEntry(..)
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch { .. } => CliError::input(e),
            _ => CliError::math(e),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

/// Report text plus the verdict it supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub success: bool,
    pub output: String,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.success {
            0
        } else {
            1
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "h2coord",
    version,
    about = "Exact coordinatization of Jordan algebras containing H2(F)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    H2f,
    M2,
    M2plus,
    H4f,
    H2matrix,
    Spinfactor,
    /// Bracket file of an involutive base split into symmetric and skew parts.
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    /// The field itself.
    F,
    /// 2x2 matrices.
    M2,
    /// F + F.
    Ff,
    /// Dual numbers F[t]/(t^2).
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Star {
    Identity,
    Transpose,
    Symplectic,
    Exchange,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify commutativity, the Jordan identity and associativity.
    Check { path: PathBuf },
    /// Extract S = Z + N and its bracket relative to a frame (e, h).
    Decompose {
        path: PathBuf,
        #[arg(long, default_value = "e")]
        e: String,
        #[arg(long, default_value = "h")]
        h: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Rebuild H2(F)(x)S0 + Fk(x)S1 from a bracket file.
    Rebuild {
        path: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Decompose, rescale, rebuild and verify the explicit isomorphism.
    Roundtrip {
        path: PathBuf,
        #[arg(long, default_value = "e")]
        e: String,
        #[arg(long, default_value = "h")]
        h: String,
    },
    /// Build the associative envelope of a bracket file with a total bracket.
    Envelope {
        path: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Write a catalog example.
    Make {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
        #[arg(long, value_enum)]
        base: Option<Base>,
        #[arg(long, value_enum)]
        star: Option<Star>,
        #[arg(long, default_value_t = 3)]
        vdim: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check the nine trace identities of M2(F)+.
    VerifyLemma4 {
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
    },
    /// Evaluate the associator identities on seeded random tuples.
    Sweep {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Peirce decomposition relative to a named idempotent.
    Peirce {
        path: PathBuf,
        #[arg(long, default_value = "e")]
        e: String,
    },
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    use commands::*;
    match &cli.command {
        Command::Check { path } => cmd_check(path),
        Command::Decompose { path, e, h, emit } => cmd_decompose(path, e, h, emit.as_deref()),
        Command::Rebuild { path, emit } => cmd_rebuild(path, emit.as_deref()),
        Command::Roundtrip { path, e, h } => cmd_roundtrip(path, e, h),
        Command::Envelope { path, emit } => cmd_envelope(path, emit.as_deref()),
        Command::Make {
            kind,
            field,
            base,
            star,
            vdim,
            emit,
        } => cmd_make(*kind, *field, *base, *star, *vdim, emit.as_deref()),
        Command::VerifyLemma4 { field } => Ok(cmd_verify_lemma4(*field)),
        Command::Sweep { path, seed, samples } => cmd_sweep(path, *seed, *samples),
        Command::Peirce { path, e } => cmd_peirce(path, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes() {
        assert_eq!(CliError::from(Error::NotOddPrime(9)).exit_code(), 2);
        assert_eq!(CliError::from(Error::DuplicateEntry(0, 1)).exit_code(), 2);
        assert_eq!(CliError::from(Error::NoSqrtMinusOne).exit_code(), 1);
        assert_eq!(CliError::from(Error::MissingBracketSlot).exit_code(), 1);
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from([
            "h2coord",
            "make",
            "h2matrix",
            "--base",
            "m2",
            "--star",
            "transpose",
            "--field",
            "gf13",
        ])
        .unwrap();
        match cli.command {
            Command::Make {
                kind,
                field,
                base,
                star,
                ..
            } => {
                assert_eq!(kind, Kind::H2matrix);
                assert_eq!(field, FieldSpec::prime(13).unwrap());
                assert_eq!((base, star), (Some(Base::M2), Some(Star::Transpose)));
            }
            _ => panic!("wrong subcommand"),
        }
        assert!(Cli::try_parse_from(["h2coord", "verify-lemma4", "--field", "gf9"]).is_err());
    }
}
