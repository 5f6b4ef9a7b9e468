//! Batch entry point behind the `radsym` binary.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 for
//! configuration errors.

mod config;
pub mod suite;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use config::{CommonArgs, ConfigError, Format, RunConfig, SystemArg};

use crate::numerics::{spectrum, AdmissibleRule, LadderReport, RadialGrid, RoundTripReport, SpectrumRow, Tolerances};
use crate::opalg::Rational;
use crate::systems::{
    identity_ids, ladder_semantics, transform_check, verify_closures, verify_identity, IdentityReport, OperatorName,
    SystemId,
};
use suite::{Degeneracy, OnShellReport, ProbeReport, ZeroEnergyRow};

/// Directory that receives a copy of every report when set.
pub const REPORT_DIR_ENV: &str = "RADSYM_REPORT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "radsym", version, about = "Verify ladder-operator identities for 2D radial problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the registered operator identities exactly.
    VerifySymbolic(SymbolicArgs),
    /// Check ladder actions and on-shell identities on eigenstates.
    VerifyNumeric(NumericArgs),
    /// Tabulate bound-state energies against closed forms.
    Spectrum,
    /// Emit the (n, m) lattice with ladder arrows.
    LadderDiagram,
}

#[derive(Args, Debug, Default)]
pub struct SymbolicArgs {
    /// Run a single identity by id.
    #[arg(long)]
    pub identity: Option<String>,
}

#[derive(Args, Debug, Default)]
pub struct NumericArgs {
    /// Restrict ladder checks to one operator.
    #[arg(long)]
    pub op: Option<String>,
    /// Restrict ladder checks to one source state `n,m`.
    #[arg(long, allow_hyphen_values = true)]
    pub state: Option<String>,
    /// Oscillator level for the zero-energy check.
    #[arg(long)]
    pub level: Option<i64>,
    /// Which angular numbers count as admissible: single-valued or any.
    #[arg(long)]
    pub admissible: Option<String>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Config(e)) => {
            eprintln!("radsym: {e}");
            EXIT_CONFIG
        }
        Err(CliError::Run(e)) => {
            eprintln!("radsym: {e}");
            EXIT_FAILURE
        }
    }
}

pub fn main() -> i32 {
    run_from(std::env::args_os())
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Run(String),
}

fn run_err(e: impl std::fmt::Display) -> CliError {
    CliError::Run(e.to_string())
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let cfg = RunConfig::load(&cli.common)?;
    let (name, output) = match &cli.command {
        Command::VerifySymbolic(a) => ("verify-symbolic", verify_symbolic(&cfg, a)?),
        Command::VerifyNumeric(a) => ("verify-numeric", verify_numeric(&cfg, a)?),
        Command::Spectrum => ("spectrum", cmd_spectrum(&cfg)?),
        Command::LadderDiagram => ("ladder-diagram", ladder_diagram(&cfg)?),
    };
    emit(&cfg, name, &output.body)?;
    if let Some(s) = &output.summary {
        eprintln!("{s}");
    }
    Ok(if output.pass { EXIT_OK } else { EXIT_FAILURE })
}

/// A rendered report and its verdict.
pub struct Output {
    pub body: String,
    pub summary: Option<String>,
    pub pass: bool,
}

fn emit(cfg: &RunConfig, command: &str, body: &str) -> Result<(), CliError> {
    let mut targets: Vec<PathBuf> = Vec::new();
    if let Some(dir) = std::env::var_os(REPORT_DIR_ENV).filter(|d| !d.is_empty()) {
        let dir = PathBuf::from(dir);
        std::fs::create_dir_all(&dir).map_err(|e| run_err(format!("{}: {e}", dir.display())))?;
        targets.push(dir.join(format!("{command}.{}", cfg.format.extension())));
    }
    if let Some(out) = &cfg.out {
        targets.push(out.clone());
    }
    for t in &targets {
        std::fs::write(t, body).map_err(|e| run_err(format!("{}: {e}", t.display())))?;
    }
    if cfg.out.is_none() {
        std::io::stdout().write_all(body.as_bytes()).map_err(run_err)?;
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(run_err)?;
    s.push('\n');
    Ok(s)
}

fn to_csv<R: Serialize>(rows: &[R]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(run_err)?;
    }
    String::from_utf8(w.into_inner().map_err(run_err)?).map_err(run_err)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

// ---- verify-symbolic ----

#[derive(Serialize)]
struct IdentityRow<'a> {
    id: &'a str,
    asserted: bool,
    pass: bool,
    residual_terms: usize,
}

fn system_prefix(sys: &SystemId) -> String {
    format!("{}.", sys.short_name())
}

pub fn verify_symbolic(cfg: &RunConfig, args: &SymbolicArgs) -> Result<Output, CliError> {
    let mut reports: Vec<IdentityReport> = Vec::new();
    if let Some(id) = &args.identity {
        if !identity_ids().iter().any(|i| i.id == id.as_str()) {
            return Err(ConfigError(format!("unknown identity {id:?}")).into());
        }
        reports.push(verify_identity(id).map_err(run_err)?);
    } else {
        let prefixes: Vec<String> = match cfg.system {
            None => vec![String::new()],
            Some(_) => cfg.systems()?.iter().map(system_prefix).collect(),
        };
        let ids: Vec<&'static str> = identity_ids()
            .into_iter()
            .map(|i| i.id)
            .filter(|id| prefixes.iter().any(|p| id.starts_with(p.as_str())))
            .collect();
        use rayon::prelude::*;
        let found = ids.par_iter().map(|id| verify_identity(id)).collect::<Result<Vec<_>, _>>().map_err(run_err)?;
        reports.extend(found);
        if let (Some(zeta), Some(SystemArg::Gen)) = (&cfg.zeta, cfg.system) {
            reports.push(transform_check(zeta, &cfg.a).map_err(run_err)?);
            let sys = SystemId::generalized(zeta.clone(), cfg.a.clone(), cfg.b.clone()).map_err(run_err)?;
            reports.extend(verify_closures(&sys).map_err(run_err)?);
        }
    }
    let pass = reports.iter().all(|r| r.ok());
    let asserted = reports.iter().filter(|r| r.asserted).count();
    let failed = reports.iter().filter(|r| !r.ok()).count();
    let summary = format!("{} identities, {asserted} asserted, {failed} failed", reports.len());
    let body = match cfg.format {
        Format::Json => to_json(&reports)?,
        Format::Csv => to_csv(
            &reports
                .iter()
                .map(|r| IdentityRow {
                    id: &r.id,
                    asserted: r.asserted,
                    pass: r.pass,
                    residual_terms: r.residual.terms.len(),
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let verdict = if r.asserted { pass_word(r.pass) } else { "INFO" };
                let _ = write!(s, "{verdict} {}", r.id);
                if !r.pass {
                    let _ = write!(s, "  residual terms: {}", r.residual.terms.len());
                }
                s.push('\n');
            }
            let _ = writeln!(s, "{summary}");
            s
        }
    };
    Ok(Output { body, summary: (cfg.format != Format::Text).then_some(summary), pass })
}

// ---- verify-numeric ----

/// Everything `verify-numeric` measured.
#[derive(Debug, Default, Serialize)]
pub struct NumericReport {
    pub ladder: Vec<LadderReport>,
    pub round_trip: Vec<RoundTripReport>,
    pub on_shell: Vec<OnShellReport>,
    pub zero_energy: Vec<ZeroEnergyRow>,
    pub degeneracy: Vec<Degeneracy>,
    pub grid_probe: Vec<ProbeReport>,
    pub strict: bool,
}

impl NumericReport {
    pub fn pass(&self) -> bool {
        self.ladder.iter().all(|r| r.pass)
            && self.round_trip.iter().all(|r| r.pass)
            && self.on_shell.iter().all(|r| r.pass)
            && self.zero_energy.iter().all(|r| r.pass)
            && (!self.strict || self.grid_probe.iter().all(|p| p.ok))
    }
}

#[derive(Serialize)]
struct CheckRow {
    check: &'static str,
    system: String,
    label: String,
    value: f64,
    tolerance: f64,
    pass: bool,
}

pub const DEFAULT_OVERLAP_TOL: f64 = 1e-6;
pub const DEFAULT_CONSTANT_TOL: f64 = 1e-6;
pub const DEFAULT_ROUND_TRIP_TOL: f64 = 1e-4;
pub const DEFAULT_ON_SHELL_TOL: f64 = 1e-4;
pub const DEFAULT_ZERO_ENERGY_TOL: f64 = 1e-4;
pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-4;

/// `y` grid for the zero-energy check unless `--grid` is given.
pub fn zero_energy_grid() -> RadialGrid {
    RadialGrid::cell_centred(14.0, 8000).expect("valid grid")
}

pub fn zero_energy_zetas() -> Vec<Rational> {
    vec![Rational::from_int(1), Rational::new(3, 2), Rational::from_int(2)]
}

fn parse_pair(key: &str, s: &str) -> Result<(i64, i64), ConfigError> {
    let bad = || ConfigError(format!("{key}: expected n,m, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_rule(s: &str) -> Result<AdmissibleRule, ConfigError> {
    match s {
        "single-valued" => Ok(AdmissibleRule::SingleValued),
        "any" => Ok(AdmissibleRule::Any),
        _ => Err(ConfigError(format!("admissible: expected single-valued or any, got {s:?}"))),
    }
}

pub fn verify_numeric(cfg: &RunConfig, args: &NumericArgs) -> Result<Output, CliError> {
    let op = args
        .op
        .as_deref()
        .map(|s| s.parse::<OperatorName>().map_err(|_| ConfigError(format!("unknown operator {s:?}"))))
        .transpose()?;
    let state = args.state.as_deref().map(|s| parse_pair("state", s)).transpose()?;
    let rule = args.admissible.as_deref().map(parse_rule).transpose()?.unwrap_or(cfg.admissible);
    if args.level.is_some_and(|l| l < 0) {
        return Err(ConfigError("level must be non-negative".into()).into());
    }
    let systems = cfg.systems()?;
    if let Some(op) = op {
        if !systems.iter().any(|s| suite::ladder_operators(s).contains(&op)) {
            return Err(ConfigError(format!("{} is not a ladder operator of the selected system", op.as_str())).into());
        }
    }
    let tol = Tolerances {
        overlap: cfg.tol.unwrap_or(DEFAULT_OVERLAP_TOL),
        constant: cfg.tol.unwrap_or(DEFAULT_CONSTANT_TOL),
    };
    let narrowed = op.is_some() || state.is_some();
    let mut report = NumericReport { strict: cfg.strict, ..Default::default() };

    for sys in &systems {
        let grid = cfg.grid_for(sys);
        match sys {
            SystemId::Oscillator | SystemId::Hydrogen => {
                let ops: Vec<OperatorName> = match op {
                    Some(o) if suite::ladder_operators(sys).contains(&o) => vec![o],
                    Some(_) => continue,
                    None => suite::ladder_operators(sys).to_vec(),
                };
                let sources = state.map(|s| vec![s]);
                report.ladder.extend(suite::ladder_suite(sys, &ops, sources.as_deref(), &grid, &tol).map_err(run_err)?);
                if !narrowed {
                    report.grid_probe.extend(suite::grid_probe(sys, suite::SOURCE_N_MAX, &grid).map_err(run_err)?);
                    if *sys == SystemId::Oscillator {
                        let rt = cfg.tol.unwrap_or(DEFAULT_ROUND_TRIP_TOL);
                        report.round_trip.extend(suite::round_trip_suite(4, &grid, rt).map_err(run_err)?);
                    } else {
                        let t = cfg.tol.unwrap_or(DEFAULT_ON_SHELL_TOL);
                        report.on_shell.extend(suite::on_shell_suite(&[2, 3], &grid, t).map_err(run_err)?);
                    }
                }
            }
            SystemId::Generalized(p) => {
                if narrowed {
                    continue;
                }
                let zetas = match &cfg.zeta {
                    Some(z) => vec![z.clone()],
                    None => zero_energy_zetas(),
                };
                let levels: Vec<i64> = match args.level {
                    Some(l) => vec![l],
                    None => (0..=3).collect(),
                };
                let zgrid = match cfg.grid {
                    Some((r, n)) => RadialGrid::cell_centred(r, n).map_err(run_err)?,
                    None => zero_energy_grid(),
                };
                let t = cfg.tol.unwrap_or(DEFAULT_ZERO_ENERGY_TOL);
                for z in &zetas {
                    let (rows, deg) =
                        suite::zero_energy_suite(z, p.a.to_f64(), &levels, &zgrid, rule, t).map_err(run_err)?;
                    report.zero_energy.extend(rows);
                    report.degeneracy.extend(deg);
                }
            }
        }
    }

    let pass = report.pass();
    let coarse: Vec<&ProbeReport> = report.grid_probe.iter().filter(|p| !p.ok).collect();
    for p in &coarse {
        let level = if cfg.strict { "error" } else { "warning" };
        eprintln!("{level}: {}", p.message.as_deref().unwrap_or("grid too coarse"));
    }
    let summary = numeric_summary(&report);
    let body = match cfg.format {
        Format::Json => to_json(&report)?,
        Format::Csv => to_csv(&numeric_rows(&report))?,
        Format::Text => {
            let mut s = String::new();
            for r in numeric_rows(&report) {
                let _ = writeln!(
                    s,
                    "{} {} {} {}  {:.3e} (tol {:.0e})",
                    pass_word(r.pass),
                    r.check,
                    r.system,
                    r.label,
                    r.value,
                    r.tolerance
                );
            }
            for d in &report.degeneracy {
                let _ = writeln!(
                    s,
                    "degeneracy zeta={} n={} B={:.6}: {} states, m = {:?}",
                    d.zeta, d.n, d.b, d.multiplicity, d.m_values
                );
            }
            let _ = writeln!(s, "{summary}");
            s
        }
    };
    Ok(Output { body, summary: (cfg.format != Format::Text).then_some(summary), pass })
}

fn numeric_summary(r: &NumericReport) -> String {
    let total = r.ladder.len() + r.round_trip.len() + r.on_shell.len() + r.zero_energy.len();
    let failed = r.ladder.iter().filter(|x| !x.pass).count()
        + r.round_trip.iter().filter(|x| !x.pass).count()
        + r.on_shell.iter().filter(|x| !x.pass).count()
        + r.zero_energy.iter().filter(|x| !x.pass).count();
    let coarse = r.grid_probe.iter().filter(|p| !p.ok).count();
    format!("{total} checks, {failed} failed, {coarse} grid warnings")
}

fn numeric_rows(r: &NumericReport) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for l in &r.ladder {
        let label = format!("{} ({},{})->({},{})", l.operator.as_str(), l.source.0, l.source.1, l.target.0, l.target.1);
        let (check, value) = match l.outcome {
            crate::numerics::LadderOutcome::Annihilation => ("annihilation", l.applied_norm_ratio),
            crate::numerics::LadderOutcome::Shift => ("ladder", 1.0 - l.overlap),
        };
        rows.push(CheckRow { check, system: l.system.clone(), label, value, tolerance: DEFAULT_OVERLAP_TOL, pass: l.pass });
    }
    for t in &r.round_trip {
        rows.push(CheckRow {
            check: "round-trip",
            system: "ho".into(),
            label: format!("({},{})", t.n, t.m),
            value: t.relative_error,
            tolerance: DEFAULT_ROUND_TRIP_TOL,
            pass: t.pass,
        });
    }
    for o in &r.on_shell {
        rows.push(CheckRow {
            check: "on-shell",
            system: "ha".into(),
            label: format!("{} n={}", o.identity, o.n),
            value: o.residual,
            tolerance: o.tolerance,
            pass: o.pass,
        });
    }
    for z in &r.zero_energy {
        rows.push(CheckRow {
            check: "zero-energy",
            system: "gen".into(),
            label: format!("zeta={} n={} m={}", z.report.zeta, z.report.n, z.report.m),
            value: z.report.residual,
            tolerance: z.tolerance,
            pass: z.pass,
        });
    }
    for p in &r.grid_probe {
        rows.push(CheckRow {
            check: "grid-probe",
            system: p.system.clone(),
            label: format!("m={} states={}", p.m, p.states),
            value: if p.ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            pass: p.ok || !r.strict,
        });
    }
    rows
}

// ---- spectrum ----

#[derive(Serialize)]
struct SpectrumTable {
    system: String,
    rows: Vec<SpectrumRow>,
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Output, CliError> {
    let tol = cfg.tol.unwrap_or(DEFAULT_SPECTRUM_TOL);
    let mut tables = Vec::new();
    for sys in cfg.systems()? {
        let n_max = cfg.n_max.unwrap_or(if sys == SystemId::Hydrogen { 3 } else { 4 });
        let rows = spectrum(&sys, n_max, &cfg.grid_for(&sys)).map_err(run_err)?;
        tables.push(SpectrumTable { system: sys.to_string(), rows });
    }
    let pass = tables.iter().flat_map(|t| &t.rows).all(|r| r.delta.is_none_or(|d| d <= tol));
    let body = match cfg.format {
        Format::Json => to_json(&tables)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                system: &'a str,
                n: i64,
                m: i64,
                numeric: f64,
                reference: Option<f64>,
                delta: Option<f64>,
            }
            let rows: Vec<Row> = tables
                .iter()
                .flat_map(|t| {
                    t.rows.iter().map(|r| Row {
                        system: &t.system,
                        n: r.n,
                        m: r.m,
                        numeric: r.numeric,
                        reference: r.reference,
                        delta: r.delta,
                    })
                })
                .collect();
            to_csv(&rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for t in &tables {
                let _ = writeln!(s, "# {}", t.system);
                let _ = writeln!(s, "{:>3} {:>4} {:>16} {:>16} {:>10}", "n", "m", "E_numeric", "E_reference", "|delta|");
                for r in &t.rows {
                    let reference = r.reference.map_or("-".into(), |v| format!("{v:.10}"));
                    let delta = r.delta.map_or("-".into(), |v| format!("{v:.2e}"));
                    let _ = writeln!(s, "{:>3} {:>4} {:>16.10} {:>16} {:>10}", r.n, r.m, r.numeric, reference, delta);
                }
            }
            s
        }
    };
    Ok(Output { body, summary: None, pass })
}

// ---- ladder-diagram ----

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Arrow {
    pub system: String,
    pub operator: String,
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub dn: i64,
    pub dm: i64,
}

#[derive(Debug, Serialize)]
pub struct Diagram {
    pub system: String,
    pub nodes: Vec<(i64, i64)>,
    pub arrows: Vec<Arrow>,
}

/// The lattice up to `n_max` and every arrow that stays on it.
pub fn diagram(sys: &SystemId, n_max: i64) -> Result<Diagram, CliError> {
    let nodes = suite::lattice(sys, n_max);
    let mut arrows = Vec::new();
    for &(n, m) in &nodes {
        for op in suite::diagram_operators(sys) {
            let (dn, dm) = ladder_semantics(sys, op).map_err(run_err)?;
            let to = (n + dn, m + dm);
            if nodes.binary_search(&to).is_ok() {
                arrows.push(Arrow {
                    system: sys.short_name().into(),
                    operator: op.as_str().into(),
                    from: (n, m),
                    to,
                    dn,
                    dm,
                });
            }
        }
    }
    Ok(Diagram { system: sys.short_name().into(), nodes, arrows })
}

pub fn ladder_diagram(cfg: &RunConfig) -> Result<Output, CliError> {
    let n_max = cfg.n_max.unwrap_or(4);
    let diagrams = cfg.systems()?.iter().map(|s| diagram(s, n_max)).collect::<Result<Vec<_>, _>>()?;
    let body = match cfg.format {
        Format::Json => to_json(&diagrams)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                system: &'a str,
                operator: &'a str,
                from_n: i64,
                from_m: i64,
                to_n: i64,
                to_m: i64,
                dn: i64,
                dm: i64,
            }
            let rows: Vec<Row> = diagrams
                .iter()
                .flat_map(|d| &d.arrows)
                .map(|a| Row {
                    system: &a.system,
                    operator: &a.operator,
                    from_n: a.from.0,
                    from_m: a.from.1,
                    to_n: a.to.0,
                    to_m: a.to.1,
                    dn: a.dn,
                    dm: a.dm,
                })
                .collect();
            to_csv(&rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for d in &diagrams {
                let _ = writeln!(s, "# {}: {} nodes, {} arrows", d.system, d.nodes.len(), d.arrows.len());
                for a in &d.arrows {
                    let _ = writeln!(
                        s,
                        "{:<8} ({},{}) -> ({},{})  [{:+},{:+}]",
                        a.operator, a.from.0, a.from.1, a.to.0, a.to.1, a.dn, a.dm
                    );
                }
            }
            s
        }
    };
    Ok(Output { body, summary: None, pass: true })
}
