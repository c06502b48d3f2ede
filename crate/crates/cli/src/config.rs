//! Run configuration shared by the subcommands.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

/// Environment variable that overrides `--shards`.
pub const THREADS_ENV: &str = "SPECTRAL_LAB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// An inclusive order range written `lo..hi`, `lo..=hi` or a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Range, String> {
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{x}` is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// The fields every report echoes back under `config`.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<Range>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<f64>,
    /// Worker threads; `None` when the command is single-threaded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shards: Option<usize>,
    #[serde(skip)]
    pub cache: Option<PathBuf>,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub format: Format,
    #[serde(skip)]
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: &str, format: Format) -> RunConfig {
        RunConfig {
            command: command.to_string(),
            n: None,
            exponent: None,
            shards: None,
            cache: None,
            output: None,
            format,
            timing: true,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if let Some(r) = self.exponent {
            if !(r.is_finite() && r >= 1.0) {
                return Err(format!("exponent must be >= 1, got {r}"));
            }
        }
        if self.shards == Some(0) {
            return Err("shard count must be at least 1".into());
        }
        Ok(())
    }
}

/// Worker count: the environment override, else the flag, else all cores.
pub fn resolve_threads(flag: Option<usize>) -> Result<usize, String> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got `{v}`")),
        },
        Err(_) => Ok(flag.unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        })),
    }
}
