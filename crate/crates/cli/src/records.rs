//! Serializable views of the library reports.

use anyhow::{bail, Context, Result};
use coxeter_pyramids::exactpoly::IntPolynomial;
use coxeter_pyramids::growth::{GrowthReport, PerronCertificate};
use coxeter_pyramids::order::OrderRelation;
use coxeter_pyramids::volume::VolumeReport;
use coxeter_pyramids::PyramidQuadruple;
use serde::Serialize;

pub fn coeffs(p: &IntPolynomial) -> Result<Vec<i64>> {
    p.to_i64s().context("polynomial coefficient does not fit in 64 bits")
}

#[derive(Serialize)]
pub struct PerronRecord {
    pub quadruple: [u32; 4],
    pub g: Vec<i64>,
    pub j: u32,
    /// `(t + 1)^j g(t)`
    pub expanded: Vec<i64>,
    /// `h` with `(t + 1)^j g = h - 1`
    pub h: Vec<i64>,
    pub support_gcd: u64,
}

impl PerronRecord {
    pub fn new(q: &PyramidQuadruple, g: &IntPolynomial, cert: &PerronCertificate) -> Result<Self> {
        Ok(Self {
            quadruple: q.as_array(),
            g: coeffs(g)?,
            j: cert.multiplier_power,
            expanded: coeffs(&cert.expanded())?,
            h: coeffs(&cert.h)?,
            support_gcd: cert.support_gcd,
        })
    }
}

#[derive(Serialize)]
pub struct GrowthRecord {
    pub quadruple: [u32; 4],
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
    pub g: Vec<i64>,
    pub j: u32,
    pub h: Vec<i64>,
    pub r1_lower: String,
    pub r1_upper: String,
    pub tau: String,
    pub tau_error: f64,
    pub numeric_check: Option<bool>,
    pub series: Vec<u64>,
}

impl GrowthRecord {
    pub fn new(r: &GrowthReport, series: Vec<u64>) -> Result<Self> {
        Ok(Self {
            quadruple: r.quadruple.as_array(),
            numerator: coeffs(r.numerator())?,
            denominator: coeffs(r.denominator())?,
            g: coeffs(&r.g)?,
            j: r.perron.multiplier_power,
            h: coeffs(&r.perron.h)?,
            r1_lower: r.rate.r1_lo.to_decimal_string(),
            r1_upper: r.rate.r1_hi.to_decimal_string(),
            tau: format!("{:.12}", r.tau()),
            tau_error: r.rate.tau_error,
            numeric_check: r.numeric_check,
            series,
        })
    }
}

/// Checks `a_0 = 1`, `a_1 = 5` and `a_k >= 0`, returning the coefficients.
pub fn checked_series(r: &GrowthReport, depth: usize) -> Result<Vec<u64>> {
    let raw = r.series(depth + 1)?;
    let mut out = Vec::with_capacity(raw.len());
    for (k, a) in raw.iter().enumerate() {
        let Ok(v) = u64::try_from(a) else {
            bail!("growth series of {} has coefficient a_{k} = {a}, expected a non-negative count", r.quadruple);
        };
        out.push(v);
    }
    if out[0] != 1 || out[1] != 5 {
        bail!("growth series of {} starts {}, {}; expected 1, 5", r.quadruple, out[0], out[1]);
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct PieceRecord {
    pub corner: &'static str,
    pub sign: i8,
    pub a: f64,
    pub b: f64,
    pub value: f64,
}

#[derive(Serialize)]
pub struct VolumeRecord {
    pub quadruple: [u32; 4],
    pub pieces: Vec<PieceRecord>,
    pub total: f64,
    pub error_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<f64>,
}

impl VolumeRecord {
    pub fn new(r: &VolumeReport, oracle: Option<f64>) -> Self {
        Self {
            quadruple: r.quadruple.as_array(),
            pieces: r
                .pieces
                .iter()
                .map(|p| PieceRecord {
                    corner: p.corner.tag(),
                    sign: p.sign,
                    a: p.a,
                    b: p.b,
                    value: p.volume,
                })
                .collect(),
            total: r.total,
            error_bound: r.error_bound,
            oracle,
        }
    }
}

#[derive(Serialize)]
pub struct OrderNode {
    pub quadruple: [u32; 4],
    pub growth_rate: f64,
    pub volume: f64,
}

#[derive(Serialize)]
pub struct OrderRecord {
    pub elements: Vec<OrderNode>,
    /// Covering pairs as indices into `elements`, smaller pyramid first.
    pub hasse_edges: Vec<[usize; 2]>,
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
}

impl OrderRecord {
    pub fn new(order: &OrderRelation, taus: &[f64], vols: &[f64]) -> Self {
        Self {
            elements: order
                .elements
                .iter()
                .enumerate()
                .map(|(i, q)| OrderNode {
                    quadruple: q.as_array(),
                    growth_rate: taus[i],
                    volume: vols[i],
                })
                .collect(),
            hasse_edges: order.hasse_edges.iter().map(|&(i, j)| [i, j]).collect(),
            minimal: order.minimal(),
            maximal: order.maximal(),
        }
    }
}

#[derive(Serialize)]
pub struct ReportRow {
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub growth_rate: String,
    pub volume: String,
    pub perron_j: u32,
    pub denominator: String,
}

/// Rounds to ten significant digits (correct rounding of the binary value).
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit, e.g. 9.9999999999 -> 10.000000000
    let digits = s.chars().filter(|c| c.is_ascii_digit()).collect::<String>();
    if digits.trim_start_matches('0').len() > 10 && decimals > 0 {
        let d = decimals - 1;
        return format!("{x:.d$}");
    }
    s
}
