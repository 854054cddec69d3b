//! Command-line flags and the validated run configuration.

use clap::{Parser, Subcommand, ValueEnum};
use g2_closed::{closed_type, Variant};
use g2_padic::{arith::is_prime, LocalCubic, LocalCubicType};
use serde::Serialize;
use std::ops::RangeInclusive;

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn bad<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EtypeArg {
    Quad,
    Cubic,
    Split,
}

impl From<EtypeArg> for LocalCubicType {
    fn from(e: EtypeArg) -> Self {
        match e {
            EtypeArg::Quad => LocalCubicType::Quad,
            EtypeArg::Cubic => LocalCubicType::Cubic,
            EtypeArg::Split => LocalCubicType::Split,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Hecke convolution of F* with P_s against the closed D_s, and D_s against the E_k oracle.
    CheckIdentity,
    /// Lattice measures, Gaussian sums, special integrals, shells, F and E_k against their oracles.
    CheckLemmas,
    /// Generating identity for the standard L-factor.
    CheckLfactor,
    /// Piecewise tables of F*, GS and D_s with branch tags.
    Table,
}

/// `a..b` or `a..=b` (both inclusive) or a single integer.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        None => num(s).map(|x| x..=x),
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
    }
}

#[derive(Debug, Parser)]
#[command(name = "g2-verify", version, about = "Cross-check the unramified G2 computation against brute force")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = 5)]
    pub prime: u64,
    /// Algebra type; both quad and cubic when omitted.
    #[arg(long, global = true, value_enum)]
    pub etype: Option<EtypeArg>,
    #[arg(long = "D", global = true, allow_negative_numbers = true)]
    pub d: Option<i64>,
    #[arg(long = "N", global = true, allow_negative_numbers = true)]
    pub n_inv: Option<i64>,
    /// Range of n, inclusive: `0..2`.
    #[arg(long = "n", global = true, value_parser = parse_range, default_value = "0..2")]
    pub n: RangeInclusive<i64>,
    /// Range of m, inclusive; defaults to `0..3·max n`.
    #[arg(long = "m", global = true, value_parser = parse_range)]
    pub m: Option<RangeInclusive<i64>>,
    #[arg(long, global = true, default_value_t = 2)]
    pub kmax: i64,
    #[arg(long, global = true, default_value_t = 10)]
    pub order: usize,
    #[arg(long, global = true, default_value_t = 200_000_000)]
    pub budget: u64,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Use the corrected variants wherever a printed formula was repaired.
    #[arg(long, global = true)]
    pub corrected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub prime: u64,
    pub algebras: Vec<LocalCubic>,
    /// Only E-agnostic checks run.
    pub split: bool,
    pub n: RangeInclusive<i64>,
    pub m: RangeInclusive<i64>,
    pub kmax: i64,
    pub order: usize,
    pub budget: u64,
    pub jobs: Option<usize>,
    pub format: Format,
    pub corrected: bool,
}

impl RunConfig {
    pub fn new(prime: u64) -> Self {
        let algebras = [LocalCubicType::Quad, LocalCubicType::Cubic]
            .into_iter()
            .map(|t| LocalCubic::standard(t, prime).expect("prime validated by caller"))
            .collect();
        Self {
            prime,
            algebras,
            split: false,
            n: 0..=2,
            m: 0..=6,
            kmax: 2,
            order: 10,
            budget: 200_000_000,
            jobs: None,
            format: Format::Json,
            corrected: false,
        }
    }

    pub fn variant(&self) -> Variant {
        if self.corrected {
            Variant::Corrected
        } else {
            Variant::Printed
        }
    }

    pub fn from_cli(cli: &Cli) -> Result<Self, ConfigError> {
        let p = cli.prime;
        if p < 5 || !is_prime(p) {
            return bad(format!("--prime must be a prime ≥ 5, got {p}"));
        }
        let mut cfg = Self::new(p);
        if cli.n.is_empty() || *cli.n.start() < 0 {
            return bad(format!("--n must be a nonempty range of nonnegative integers, got {:?}", cli.n));
        }
        let m = cli.m.clone().unwrap_or(0..=3 * cli.n.end());
        if m.is_empty() || *m.start() < 0 {
            return bad(format!("--m must be a nonempty range of nonnegative integers, got {m:?}"));
        }
        if cli.budget == 0 {
            return bad("--budget must be positive");
        }
        if cli.order == 0 {
            return bad("--order must be positive");
        }
        if cli.kmax < 0 {
            return bad("--kmax must be nonnegative");
        }
        if cli.jobs == Some(0) {
            return bad("--jobs must be positive");
        }
        let wanted: Option<LocalCubicType> = cli.etype.map(Into::into);
        cfg.algebras = if cli.d.is_some() || cli.n_inv.is_some() {
            let e = LocalCubic::new(cli.d.unwrap_or(0), cli.n_inv.unwrap_or(0), p).map_err(|e| ConfigError(e.to_string()))?;
            if let Some(t) = wanted {
                if t != e.etype {
                    return bad(format!("(D, N) = ({}, {}) has type {} at p = {p}, not {t}", e.d, e.n, e.etype));
                }
            }
            vec![e]
        } else {
            match wanted {
                Some(LocalCubicType::Split) => vec![LocalCubic::standard(LocalCubicType::Split, p).map_err(|e| ConfigError(e.to_string()))?],
                Some(t) => cfg.algebras.into_iter().filter(|e| e.etype == t).collect(),
                None => cfg.algebras,
            }
        };
        cfg.split = cfg.algebras.iter().any(|e| e.etype == LocalCubicType::Split);
        if !cfg.split {
            for e in &cfg.algebras {
                closed_type(e).map_err(|err| ConfigError(err.to_string()))?;
            }
        }
        cfg.n = cli.n.clone();
        cfg.m = m;
        cfg.kmax = cli.kmax;
        cfg.order = cli.order;
        cfg.budget = cli.budget;
        cfg.jobs = cli.jobs;
        cfg.format = cli.format;
        cfg.corrected = cli.corrected;
        Ok(cfg)
    }

    /// Algebras the E-dependent checks run over; empty for split.
    pub fn nonsplit(&self) -> Vec<LocalCubic> {
        if self.split {
            Vec::new()
        } else {
            self.algebras.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..2").unwrap(), 0..=2);
        assert_eq!(parse_range("1..=4").unwrap(), 1..=4);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("a..2").is_err());
    }
}
