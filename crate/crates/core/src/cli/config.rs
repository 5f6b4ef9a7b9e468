use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use crate::numerics::{AdmissibleRule, RadialGrid};
use crate::opalg::Rational;
use crate::systems::SystemId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemArg {
    Ho,
    Ha,
    Gen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Flags shared by every subcommand; each overrides the config file.
#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// TOML file with the same keys as the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub system: Option<SystemArg>,
    /// Exponent of the generalized potential, e.g. 3/2.
    #[arg(long, global = true)]
    pub zeta: Option<String>,
    #[arg(long = "A", global = true)]
    pub a: Option<String>,
    #[arg(long = "B", global = true)]
    pub b: Option<String>,
    /// `r_max,n_points` of the cell-centred radial grid.
    #[arg(long, global = true)]
    pub grid: Option<String>,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Treat grid-refinement warnings as failures.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Largest principal label for spectra and diagrams.
    #[arg(long = "n-max", global = true, allow_hyphen_values = true)]
    pub n_max: Option<i64>,
}

/// Keys accepted in the config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    system: Option<SystemArg>,
    zeta: Option<String>,
    #[serde(rename = "A")]
    a: Option<String>,
    #[serde(rename = "B")]
    b: Option<String>,
    grid: Option<String>,
    tol: Option<f64>,
    format: Option<Format>,
    out: Option<PathBuf>,
    strict: Option<bool>,
    n_max: Option<i64>,
    admissible: Option<AdmissibleRule>,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub system: Option<SystemArg>,
    pub zeta: Option<Rational>,
    pub a: Rational,
    pub b: Rational,
    pub grid: Option<(f64, usize)>,
    pub tol: Option<f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub strict: bool,
    pub n_max: Option<i64>,
    pub admissible: AdmissibleRule,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn parse_rational(key: &str, s: &str) -> Result<Rational, ConfigError> {
    s.trim().parse().map_err(|e| ConfigError(format!("{key}: {e}")))
}

fn parse_grid(s: &str) -> Result<(f64, usize), ConfigError> {
    let bad = || ConfigError(format!("grid: expected r_max,n_points, got {s:?}"));
    let (r, n) = s.split_once(',').ok_or_else(bad)?;
    let r: f64 = r.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    RadialGrid::cell_centred(r, n).map_err(|e| ConfigError(e.to_string()))?;
    Ok((r, n))
}

impl RunConfig {
    pub fn load(args: &CommonArgs) -> Result<Self, ConfigError> {
        let file = match &args.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let zeta = args.zeta.clone().or(file.zeta).map(|s| parse_rational("zeta", &s)).transpose()?;
        let a = args.a.clone().or(file.a).map(|s| parse_rational("A", &s)).transpose()?;
        let b = args.b.clone().or(file.b).map(|s| parse_rational("B", &s)).transpose()?;
        let grid = args.grid.clone().or(file.grid).map(|s| parse_grid(&s)).transpose()?;
        let tol = args.tol.or(file.tol);
        if tol.is_some_and(|t| !(t > 0.0 && t.is_finite())) {
            return Err(ConfigError("tol must be a positive number".into()));
        }
        let cfg = RunConfig {
            system: args.system.or(file.system),
            zeta,
            a: a.unwrap_or_else(Rational::one),
            b: b.unwrap_or_else(Rational::one),
            grid,
            tol,
            format: args.format.or(file.format).unwrap_or_default(),
            out: args.out.clone().or(file.out),
            strict: args.strict || file.strict.unwrap_or(false),
            n_max: args.n_max.or(file.n_max),
            admissible: file.admissible.unwrap_or_default(),
        };
        for (k, v) in [("A", &cfg.a), ("B", &cfg.b)] {
            if !v.is_positive() {
                return Err(ConfigError(format!("{k} must be positive")));
            }
        }
        if cfg.zeta.as_ref().is_some_and(|z| !z.is_positive()) {
            return Err(ConfigError("zeta must be positive".into()));
        }
        if cfg.zeta.is_some() && cfg.system.is_some_and(|s| s != SystemArg::Gen) {
            return Err(ConfigError("zeta only applies to --system gen".into()));
        }
        Ok(cfg)
    }

    /// Systems selected by `--system`; all three when absent.
    pub fn systems(&self) -> Result<Vec<SystemId>, ConfigError> {
        let gen = || -> Result<SystemId, ConfigError> {
            let zeta = self.zeta.clone().unwrap_or_else(|| Rational::from_int(2));
            SystemId::generalized(zeta, self.a.clone(), self.b.clone()).map_err(|e| ConfigError(e.to_string()))
        };
        Ok(match self.system {
            Some(SystemArg::Ho) => vec![SystemId::Oscillator],
            Some(SystemArg::Ha) => vec![SystemId::Hydrogen],
            Some(SystemArg::Gen) => vec![gen()?],
            None => vec![SystemId::Oscillator, SystemId::Hydrogen, gen()?],
        })
    }

    pub fn grid_for(&self, sys: &SystemId) -> RadialGrid {
        match (self.grid, sys) {
            (Some((r, n)), _) => RadialGrid::cell_centred(r, n).expect("validated"),
            (None, SystemId::Hydrogen) => RadialGrid::hydrogen_reference(),
            (None, _) => RadialGrid::oscillator_reference(),
        }
    }
}

fn read_file(p: &Path) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(p).map_err(|e| ConfigError(format!("{}: {e}", p.display())))?;
    toml::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", p.display())))
}
