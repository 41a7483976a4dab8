//! Command-line driver: argument types, dispatch and output rendering.

pub mod records;
mod render;

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_pyramids::geometry::enumerate_pyramids;
use coxeter_pyramids::growth::{growth_report, GrowthOptions, GrowthReport, RootTolerance};
use coxeter_pyramids::order::build_order;
use coxeter_pyramids::volume::{pyramid_volume_with_eps, volume_quadrature_oracle, VolumeReport};
use coxeter_pyramids::PyramidQuadruple;

use records::{checked_series, GrowthRecord, OrderRecord, PerronRecord, ReportRow, VolumeRecord};

/// Tolerance passed to the quadrature oracle.
const ORACLE_EPS: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "coxpyr", version, about = "Growth rates, volumes and the inclusion order of hyperbolic Coxeter pyramids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the 33 pyramids, one canonical quadruple per line
    Enumerate,
    /// Growth function, growth rate and Perron certificate of one pyramid
    Growth { quadruple: Quadruple },
    /// Volume of one pyramid with its orthopyramid decomposition
    Volume { quadruple: Quadruple },
    /// Perron certificate of one pyramid
    Perron { quadruple: Quadruple },
    /// Hasse diagram of the inclusion order
    Order,
    /// Growth rate, volume, certificate and denominator for every pyramid
    Report,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format; the default depends on the command
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Width of the final bracket around the smallest denominator root (rounded down to a power of two)
    #[arg(long, global = true, default_value_t = 2f64.powi(-40))]
    pub root_eps: f64,
    /// Truncation tolerance of each Lobachevsky function value
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub lobachevsky_eps: f64,
    /// Also locate all roots numerically and check the certified root is dominant
    #[arg(long, global = true)]
    pub verify_perron_numeric: bool,
    /// Also compute volumes by direct numerical integration
    #[arg(long, global = true)]
    pub oracle_volume: bool,
    /// Number of growth series terms checked for a_0 = 1, a_1 = 5, a_k >= 0
    #[arg(long, global = true, default_value_t = 30)]
    pub series_depth: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            format: None,
            output: None,
            root_eps: 2f64.powi(-40),
            lobachevsky_eps: 1e-12,
            verify_perron_numeric: false,
            oracle_volume: false,
            series_depth: 30,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

/// Four labels as typed on the command line, before any validity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadruple(pub [u32; 4]);

impl std::str::FromStr for Quadruple {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!("expected four labels k,l,m,n, got {s:?}"));
        }
        let mut out = [0u32; 4];
        for (slot, p) in out.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| format!("label {p:?} is not a non-negative integer"))?;
        }
        Ok(Quadruple(out))
    }
}

impl Quadruple {
    fn validate(self) -> Result<PyramidQuadruple> {
        let [k, l, m, n] = self.0;
        Ok(PyramidQuadruple::new(k, l, m, n)?)
    }
}

impl RunConfig {
    fn check(&self) -> Result<()> {
        if !(self.root_eps > 0.0 && self.root_eps < 1.0) {
            bail!("--root-eps must lie in (0, 1)");
        }
        if !(self.lobachevsky_eps > 0.0 && self.lobachevsky_eps < 1.0) {
            bail!("--lobachevsky-eps must lie in (0, 1)");
        }
        if self.series_depth < 2 {
            bail!("--series-depth must be at least 2");
        }
        Ok(())
    }

    fn growth_options(&self) -> Result<GrowthOptions> {
        Ok(GrowthOptions {
            tolerance: RootTolerance::from_eps(self.root_eps)?,
            numeric_check: self.verify_perron_numeric,
            ..GrowthOptions::default()
        })
    }
}

fn growth(q: &PyramidQuadruple, config: &RunConfig) -> Result<(GrowthReport, Vec<u64>)> {
    let r = growth_report(q, &config.growth_options()?)?;
    if r.numeric_check == Some(false) {
        bail!("numeric root check failed for {q}: the certified root is not strictly dominant");
    }
    let series = checked_series(&r, config.series_depth)?;
    Ok((r, series))
}

fn volume(q: &PyramidQuadruple, config: &RunConfig) -> Result<(VolumeReport, Option<f64>)> {
    let r = pyramid_volume_with_eps(q, config.lobachevsky_eps)?;
    let oracle = if config.oracle_volume {
        let o = volume_quadrature_oracle(q, ORACLE_EPS)?;
        if (o - r.total).abs() > 1e-5 {
            bail!("quadrature oracle disagrees for {q}: {o} vs {}", r.total);
        }
        Some(o)
    } else {
        None
    };
    Ok((r, oracle))
}

fn pick(requested: Option<Format>, default: Format, allowed: &[Format], command: &str) -> Result<Format> {
    let f = requested.unwrap_or(default);
    if !allowed.contains(&f) {
        let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        bail!("format {name} is not available for `{command}`");
    }
    Ok(f)
}

/// Runs one command and returns the rendered artifact.
pub fn run(command: &Command, config: &RunConfig) -> Result<String> {
    use Format::*;
    config.check()?;
    match command {
        Command::Enumerate => {
            let f = pick(config.format, Text, &[Text, Json, Csv], "enumerate")?;
            render::enumerate(&enumerate_pyramids(), f)
        }
        Command::Growth { quadruple } => {
            let f = pick(config.format, Text, &[Text, Json], "growth")?;
            let q = quadruple.validate()?;
            let (r, series) = growth(&q, config)?;
            render::growth(&r, GrowthRecord::new(&r, series)?, f)
        }
        Command::Volume { quadruple } => {
            let f = pick(config.format, Text, &[Text, Json], "volume")?;
            let q = quadruple.validate()?;
            let (r, oracle) = volume(&q, config)?;
            render::volume(VolumeRecord::new(&r, oracle), f)
        }
        Command::Perron { quadruple } => {
            let f = pick(config.format, Text, &[Text, Json], "perron")?;
            let q = quadruple.validate()?;
            let r = growth_report(&q, &config.growth_options()?)?;
            render::perron(&r, PerronRecord::new(&q, &r.g, &r.perron)?, f)
        }
        Command::Order => {
            let f = pick(config.format, Dot, &[Dot, Json, Text], "order")?;
            let order = build_order();
            let mut taus = Vec::new();
            let mut vols = Vec::new();
            for q in &order.elements {
                taus.push(growth(q, config)?.0.tau());
                vols.push(volume(q, config)?.0.total);
            }
            render::order(&order, OrderRecord::new(&order, &taus, &vols), f)
        }
        Command::Report => {
            let f = pick(config.format, Csv, &[Csv, Json, Text], "report")?;
            let mut rows = Vec::new();
            for q in enumerate_pyramids() {
                let (g, _) = growth(&q, config)?;
                let (v, _) = volume(&q, config)?;
                rows.push(ReportRow {
                    k: q.k(),
                    l: q.l(),
                    m: q.m(),
                    n: q.n(),
                    growth_rate: records::sig10(g.tau()),
                    volume: records::sig10(v.total),
                    perron_j: g.perron.multiplier_power,
                    denominator: format!("(t - 1)*({})", g.g),
                });
            }
            render::report(&rows, f)
        }
    }
}
