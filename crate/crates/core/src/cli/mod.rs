//! The `alcove-adlv` command line: compute, render, check and export.

pub mod check;
pub mod mapfile;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adlv::{compute_map, DimensionMap, EnumerationMode};
use crate::error::{Error, Result};
use crate::root_data::{RootSystem, RootSystemKind};
use check::Report;
use mapfile::{bundled_golden, parse_golden, MapFile};

const DEFAULT_WINDOW: i64 = 12;
const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(
    name = "alcove-adlv",
    version,
    about = "Dimensions of affine Deligne-Lusztig varieties for SL2, SL3 and Sp4"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a dimension map.
    Compute(ComputeArgs),
    /// Draw a map file as SVG or ASCII.
    Render(RenderArgs),
    /// Run a check suite; exits 1 if any check fails.
    Check(CheckArgs),
    /// Write a map as golden-format CSV.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Formula,
    MuRho,
    Golden,
    Properties,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value = "a2")]
    pub group: RootSystemKind,
    /// Largest `l(Q1)` of the vertices used; defaults to the window.
    #[arg(long)]
    pub radius: Option<i64>,
    /// Largest alcove length reported.
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long, default_value = "all-vertices")]
    pub mode: EnumerationMode,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Accept maps that change between radius R-1 and R.
    #[arg(long)]
    pub allow_unstable: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    /// Map file written by `compute`.
    pub map: PathBuf,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub run: RunArgs,
    /// Largest `<mu, rho>` for the mu-rho suite.
    #[arg(long, default_value_t = 5)]
    pub max_pairing: i64,
    /// Map file to check instead of computing one (golden suite).
    #[arg(long)]
    pub map: Option<PathBuf>,
    /// Golden CSV; the bundled table for the group when absent.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    /// Map file to convert; a map is computed when absent.
    pub map: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
}

/// Resolved settings for one computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub group: RootSystemKind,
    pub radius: i64,
    pub window: i64,
    pub mode: EnumerationMode,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(args: &RunArgs, default_window: i64, format: Format) -> Result<RunConfig> {
        let window = args.window.unwrap_or(default_window);
        let radius = args.radius.unwrap_or(window.max(1));
        if window < 0 {
            return Err(Error::InvalidConfig(format!(
                "window must be non-negative, got {window}"
            )));
        }
        if radius < 1 {
            return Err(Error::InvalidConfig(format!(
                "radius must be positive, got {radius}"
            )));
        }
        Ok(RunConfig {
            group: args.group,
            radius,
            window,
            mode: args.mode,
            out: args.out.clone(),
            format,
        })
    }
}

/// Exit code for an error: 2 for bad input or configuration, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConfig(_) | Error::Parse(_) | Error::Io(_) | Error::NotAnAlcove => 2,
        _ => 1,
    }
}

/// Runs a parsed command line. `Ok(false)` means a check or stability failure.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Compute(a) => cmd_compute(&a),
        Command::Render(a) => cmd_render(&a),
        Command::Check(a) => cmd_check(&a),
        Command::Export(a) => cmd_export(&a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn computed(cfg: &RunConfig) -> Result<DimensionMap> {
    let rs = RootSystem::new(cfg.group);
    eprintln!(
        "computing {} radius {} window {} ({})",
        cfg.group,
        cfg.radius,
        cfg.window,
        serde_json::to_value(cfg.mode)?.as_str().unwrap_or_default()
    );
    let dm = compute_map(&rs, cfg.radius, cfg.window, cfg.mode)?;
    let s = &dm.stats;
    eprintln!(
        "vertices {} superpieces {} outcomes {} skipped {} entries {}",
        s.vertices,
        s.superpieces,
        s.outcomes,
        s.skipped.len(),
        dm.entries.len()
    );
    eprintln!(
        "stability: {}",
        if dm.stability { "stable" } else { "unstable" }
    );
    Ok(dm)
}

fn cmd_compute(a: &ComputeArgs) -> Result<bool> {
    let cfg = RunConfig::resolve(&a.run, DEFAULT_WINDOW, a.format)?;
    let dm = computed(&cfg)?;
    if !dm.stability && !a.run.allow_unstable {
        eprintln!(
            "error: {}",
            Error::RadiusTooSmall {
                group: cfg.group,
                radius: cfg.radius
            }
        );
        return Ok(false);
    }
    let mf = MapFile::from_map(&dm);
    let text = match cfg.format {
        Format::Json => mf.to_json()?,
        Format::Csv => mf.to_csv()?,
        Format::Svg => render::render_svg(&mf)?,
        Format::Ascii => render::render_ascii(&mf)?,
    };
    emit(&cfg.out, &text)?;
    Ok(true)
}

fn cmd_render(a: &RenderArgs) -> Result<bool> {
    let mf = MapFile::read(&a.map)?;
    let text = match a.format {
        Format::Svg => render::render_svg(&mf)?,
        Format::Ascii => render::render_ascii(&mf)?,
        other => {
            return Err(Error::InvalidConfig(format!(
                "render writes svg or ascii, not {other:?}"
            )))
        }
    };
    emit(&a.out, &text)?;
    Ok(true)
}

fn cmd_export(a: &ExportArgs) -> Result<bool> {
    let mf = match &a.map {
        Some(path) => MapFile::read(path)?,
        None => {
            let cfg = RunConfig::resolve(&a.run, DEFAULT_WINDOW, Format::Csv)?;
            let dm = computed(&cfg)?;
            if !dm.stability && !a.run.allow_unstable {
                eprintln!(
                    "error: {}",
                    Error::RadiusTooSmall {
                        group: cfg.group,
                        radius: cfg.radius
                    }
                );
                return Ok(false);
            }
            MapFile::from_map(&dm)
        }
    };
    emit(&a.run.out, &mf.to_csv()?)?;
    Ok(true)
}

/// Rebuilds a map from a file; provenance and run counters are not stored.
pub fn map_from_file(mf: &MapFile) -> Result<DimensionMap> {
    let rs = RootSystem::new(mf.group);
    let entries = mf.alcove_entries(&rs)?;
    Ok(DimensionMap {
        rs,
        radius: mf.radius,
        window: mf.window,
        mode: mf.mode,
        entries,
        stability: mf.stability,
        provenance: Default::default(),
        stats: Default::default(),
    })
}

fn cmd_check(a: &CheckArgs) -> Result<bool> {
    let rs = RootSystem::new(a.run.group);
    let mut group = rs.kind;
    let (name, checks) = match a.suite {
        Suite::Formula => {
            let dm = computed(&RunConfig::resolve(&a.run, 18, Format::Json)?)?;
            (
                "formula",
                vec![check::formula_agreement(&dm), check::stability(&dm)],
            )
        }
        Suite::MuRho => {
            if a.max_pairing < 0 {
                return Err(Error::InvalidConfig(
                    "max-pairing must be non-negative".into(),
                ));
            }
            let window = check::mu_rho_window(&rs, a.max_pairing);
            let dm = computed(&RunConfig::resolve(&a.run, window, Format::Json)?)?;
            let mut checks = check::mu_rho(&dm, a.max_pairing)?;
            checks.push(check::stability(&dm));
            ("mu-rho", checks)
        }
        Suite::Golden => {
            let dm = match &a.map {
                Some(path) => {
                    let dm = map_from_file(&MapFile::read(path)?)?;
                    group = dm.rs.kind;
                    dm
                }
                None => computed(&RunConfig::resolve(&a.run, DEFAULT_WINDOW, Format::Json)?)?,
            };
            let text = match &a.golden {
                Some(path) => std::fs::read_to_string(path)?,
                None => bundled_golden(dm.rs.kind)
                    .ok_or_else(|| {
                        Error::InvalidConfig(format!("no bundled golden table for {}", dm.rs.kind))
                    })?
                    .to_string(),
            };
            let rows = parse_golden(&text)?;
            ("golden", vec![check::golden(&dm, &rows)?])
        }
        Suite::Properties => {
            let dm = computed(&RunConfig::resolve(&a.run, DEFAULT_WINDOW, Format::Json)?)?;
            ("properties", check::properties(&dm, a.seed)?)
        }
    };
    let report = Report::new(name, group, checks);
    for c in &report.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            eprintln!("{verdict} {}", c.name);
        } else {
            eprintln!("{verdict} {}: {}", c.name, c.detail);
        }
    }
    let mut text = serde_json::to_string_pretty(&serde_json::to_value(&report)?)?;
    text.push('\n');
    emit(&a.run.out, &text)?;
    Ok(report.pass)
}
