//! Expression syntax, deterministic printing and the algebra config format.

pub mod config;
pub mod parse;
pub mod print;

use thiserror::Error;

pub use config::{load_config, parse_config};
pub use parse::{eval, parse, read, Context, Expr};

use crate::Error;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("unknown symbol `{symbol}` at {pos}")]
    UnknownSymbol { pos: Pos, symbol: String },
    #[error("strand index out of range in `{symbol}` at {pos}")]
    StrandOutOfRange { pos: Pos, symbol: String },
    #[error("`{symbol}` at {pos} is not a generator of the target algebra")]
    IllegalSymbolForTarget { pos: Pos, symbol: String },
    #[error("{0}")]
    Io(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error(transparent)]
    Validation(#[from] Error),
}
