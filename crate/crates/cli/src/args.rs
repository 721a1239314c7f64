//! Command-line arguments.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "monodromy", version, about = "Enumerate generic monodromy representations into S_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Count representations for one degree.
    Count(RunArgs),
    /// Counts, orbits and surface invariants over a range of degrees.
    Table(RunArgs),
    /// Conjugacy-orbit representatives for one degree.
    Orbits(RunArgs),
    /// Stream every sigma = (1,2) solution for one degree.
    List(RunArgs),
    /// Compare the brute-force search with the pruned search (n <= 4).
    Oracle(RunArgs),
    /// Numerical invariants of the covering surfaces.
    Invariants(RunArgs),
}

impl Command {
    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Count(a)
            | Command::Table(a)
            | Command::Orbits(a)
            | Command::List(a)
            | Command::Oracle(a)
            | Command::Invariants(a) => a,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Count(_) => "count",
            Command::Table(_) => "table",
            Command::Orbits(_) => "orbits",
            Command::List(_) => "list",
            Command::Oracle(_) => "oracle",
            Command::Invariants(_) => "invariants",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Degree, or inclusive range `a..b`.
    #[arg(long)]
    pub n: Degrees,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = parse_workers)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Required for degrees 8 and up; reports progress on standard error.
    #[arg(long)]
    pub confirm_long: bool,
    /// Lift the degree cap of 12.
    #[arg(long)]
    pub allow_large: bool,
    /// Keep the solutions to compute orbits and image groups.
    #[arg(long)]
    pub collect: bool,
    /// Not supported: every computation is deterministic.
    #[arg(long, hide = true)]
    pub seed: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// An inclusive range of degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub start: usize,
    pub end: usize,
}

impl Degrees {
    pub fn single(&self) -> Option<usize> {
        (self.start == self.end).then_some(self.start)
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for Degrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a degree: {t:?}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { start, end })
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.single() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}..{}", self.start, self.end),
        }
    }
}

fn parse_workers(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("need at least one worker".into()),
        Ok(w) => Ok(w),
        Err(_) => Err(format!("not a worker count: {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_ranges() {
        assert_eq!("5".parse::<Degrees>().unwrap(), Degrees { start: 5, end: 5 });
        assert_eq!("2..6".parse::<Degrees>().unwrap(), Degrees { start: 2, end: 6 });
        assert_eq!("2..=6".parse::<Degrees>().unwrap(), Degrees { start: 2, end: 6 });
        assert!("6..2".parse::<Degrees>().is_err());
        assert!("x".parse::<Degrees>().is_err());
        assert_eq!("3..4".parse::<Degrees>().unwrap().to_string(), "3..4");
    }

    #[test]
    fn workers_must_be_positive() {
        assert!(parse_workers("0").is_err());
        assert_eq!(parse_workers("8"), Ok(8));
    }

    #[test]
    fn parses_subcommands() {
        let cli = Cli::try_parse_from(["monodromy", "table", "--n", "2..6", "--format", "csv"]).unwrap();
        assert_eq!(cli.command.name(), "table");
        assert_eq!(cli.command.args().format, Format::Csv);
        assert!(Cli::try_parse_from(["monodromy", "frobnicate", "--n", "3"]).is_err());
    }
}
