use std::fmt::Write;

use anyhow::Result;
use coxeter_pyramids::growth::GrowthReport;
use coxeter_pyramids::order::OrderRelation;
use coxeter_pyramids::PyramidQuadruple;
use serde::Serialize;

use crate::records::{GrowthRecord, OrderRecord, PerronRecord, ReportRow, VolumeRecord};
use crate::Format;

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn enumerate(qs: &[PyramidQuadruple], f: Format) -> Result<String> {
    match f {
        Format::Json => json(&qs.iter().map(|q| q.as_array()).collect::<Vec<_>>()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "l", "m", "n"])?;
            for q in qs {
                w.serialize(q.as_array())?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        _ => Ok(qs.iter().map(|q| format!("{q}\n")).collect()),
    }
}

pub fn growth(r: &GrowthReport, rec: GrowthRecord, f: Format) -> Result<String> {
    if f == Format::Json {
        return json(&rec);
    }
    let mut s = String::new();
    writeln!(s, "pyramid {}", r.quadruple)?;
    writeln!(s, "numerator   P(t) = {}", r.numerator())?;
    writeln!(s, "denominator Q(t) = (t - 1)*({})", r.g)?;
    writeln!(s, "Perron certificate: j = {}, h(t) = {}", rec.j, r.perron.h)?;
    writeln!(s, "smallest root r1 in [{}, {}]", rec.r1_lower, rec.r1_upper)?;
    writeln!(s, "growth rate tau = {} +/- {:.1e}", rec.tau, rec.tau_error)?;
    if let Some(ok) = rec.numeric_check {
        writeln!(s, "numeric root check: {}", if ok { "passed" } else { "failed" })?;
    }
    writeln!(s, "series a_0..a_{}: {}", rec.series.len() - 1, join(&rec.series))?;
    Ok(s)
}

pub fn perron(r: &GrowthReport, rec: PerronRecord, f: Format) -> Result<String> {
    if f == Format::Json {
        return json(&rec);
    }
    let mut s = String::new();
    writeln!(s, "pyramid {}", r.quadruple)?;
    writeln!(s, "g(t) = {}", r.g)?;
    writeln!(s, "j = {}", rec.j)?;
    writeln!(s, "(t + 1)^{} g(t) = {}", rec.j, r.perron.expanded())?;
    writeln!(s, "h(t) = {}, support gcd {}", r.perron.h, rec.support_gcd)?;
    Ok(s)
}

pub fn volume(rec: VolumeRecord, f: Format) -> Result<String> {
    if f == Format::Json {
        return json(&rec);
    }
    let [k, l, m, n] = rec.quadruple;
    let mut s = String::new();
    writeln!(s, "pyramid ({k},{l},{m},{n})")?;
    for p in &rec.pieces {
        let sign = if p.sign < 0 { '-' } else { '+' };
        writeln!(s, "  {sign} {}  a = {:.12}  b = {:.12}  {:.12}", p.corner, p.a, p.b, p.value)?;
    }
    writeln!(s, "volume = {:.12} +/- {:.1e}", rec.total, rec.error_bound)?;
    if let Some(o) = rec.oracle {
        writeln!(s, "quadrature = {o:.12}")?;
    }
    Ok(s)
}

pub fn order(order: &OrderRelation, rec: OrderRecord, f: Format) -> Result<String> {
    match f {
        Format::Json => json(&rec),
        Format::Dot => {
            let mut s = String::from("digraph pyramids {\n  rankdir=BT;\n  node [shape=box];\n");
            for (i, (q, node)) in order.elements.iter().zip(&rec.elements).enumerate() {
                writeln!(s, "  n{i} [label=\"{q}\\nτ={:.5}\"];", node.growth_rate)?;
            }
            for [i, j] in &rec.hasse_edges {
                writeln!(s, "  n{i} -> n{j};")?;
            }
            s.push_str("}\n");
            Ok(s)
        }
        _ => {
            let mut s = String::new();
            for (i, j) in &order.hasse_edges {
                writeln!(s, "{} < {}", order.elements[*i], order.elements[*j])?;
            }
            Ok(s)
        }
    }
}

pub fn report(rows: &[ReportRow], f: Format) -> Result<String> {
    match f {
        Format::Json => json(rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        _ => {
            let mut s = String::new();
            writeln!(s, "{:<12} {:>12} {:>12} {:>2}  denominator", "pyramid", "growth", "volume", "j")?;
            for r in rows {
                let q = format!("({},{},{},{})", r.k, r.l, r.m, r.n);
                writeln!(s, "{q:<12} {:>12} {:>12} {:>2}  {}", r.growth_rate, r.volume, r.perron_j, r.denominator)?;
            }
            Ok(s)
        }
    }
}
