//! `key=value` configuration files.
//!
//! ```text
//! # reserved symbols
//! union=|
//! epsilon=_
//! max_len=12
//! state_cap=5000
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use regpump_core::syntax::ReservedSymbols;
use regpump_core::Limits;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: {key} must be a single character")]
    NotASymbol { line: usize, key: String },
    #[error("line {line}: {key} must be a positive integer")]
    NotPositive { line: usize, key: String },
    #[error(transparent)]
    Reserved(#[from] regpump_core::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub reserved: ReservedSymbols,
    pub limits: Limits,
    pub max_len: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path)
            .map_err(|source| ConfigError::Read { path: path.to_owned(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = raw.split_once('=').ok_or(ConfigError::Syntax { line })?;
            let key = key.trim();
            // symbol values are taken verbatim so that '=' or '#' can be configured
            let symbol = || {
                let mut chars = value.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(ConfigError::NotASymbol { line, key: key.to_owned() }),
                }
            };
            let positive = || match value.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(ConfigError::NotPositive { line, key: key.to_owned() }),
            };
            let r = &mut config.reserved;
            match key {
                "union" => r.union = symbol()?,
                "concat" => r.concat = symbol()?,
                "star" => r.star = symbol()?,
                "empty" => r.empty_language = symbol()?,
                "epsilon" => r.epsilon = symbol()?,
                "max_len" => config.max_len = Some(positive()?),
                "state_cap" => config.limits.state_cap = positive()?,
                _ => return Err(ConfigError::UnknownKey { line, key: key.to_owned() }),
            }
        }
        config.reserved.check()?;
        Ok(config)
    }
}
