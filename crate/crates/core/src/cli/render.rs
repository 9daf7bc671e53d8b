//! Text, JSON and CSV renderings. Floats carry 10 decimals; determinants are
//! exact decimal strings.

use std::io::Write;

use serde_json::{json, Map, Value};

use super::{CommandKind, Format};
use crate::bounds::{BoundReport, CoverageLabel};
use crate::enumerate::{EnumerationSummary, Violation};
use crate::error::{Error, Result};

/// Rounded to 10 decimals, with negative zero normalised.
fn round10(x: f64) -> f64 {
    (x * 1e10).round() / 1e10 + 0.0
}

fn num(x: f64) -> Value {
    json!(round10(x))
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

fn fixed(x: f64) -> String {
    format!("{:.10}", round10(x))
}

fn fixed_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), fixed)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn labels(report: &BoundReport) -> Option<Vec<&'static str>> {
    report.coverage.as_ref().map(|ls| ls.iter().map(|l| l.name()).collect())
}

/// Fixed-key JSON object shared by every per-graph command.
pub fn report_json(r: &BoundReport) -> Value {
    let v = |target: f64, verdict: crate::bounds::Verdict| {
        json!({ "target": num(target), "margin": num(r.energy() - target), "verdict": verdict.as_str() })
    };
    json!({
        "graph6": r.graph6,
        "n": r.profile.order,
        "m": r.profile.size,
        "avg_degree": num(r.profile.avg_degree_f64()),
        "max_degree": r.profile.max_degree,
        "min_degree": r.profile.min_degree,
        "det": r.det.to_string(),
        "singular": !r.nonsingular(),
        "energy": num(r.energy()),
        "eigenvalues": r.spectrum.eigenvalues.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "bounds": {
            "log": opt(r.bound_log),
            "amgm": opt(r.bound_amgm),
            "variance": opt(r.bound_variance),
            "quantity_c": opt(r.quantity_c),
            "conjugate": opt(r.bound_conjugate),
        },
        "verdicts": {
            "conjecture1": v(r.conjecture1_target, r.conjecture1),
            "conjecture2": v(r.conjecture2_target, r.conjecture2),
        },
        "coverage": labels(r),
    })
}

pub fn report(out: &mut dyn Write, cmd: CommandKind, format: Format, r: &BoundReport) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report_json(r))?,
        Format::Csv => report_csv(out, r)?,
        Format::Text => report_text(out, cmd, r)?,
    }
    Ok(())
}

fn report_text(out: &mut dyn Write, cmd: CommandKind, r: &BoundReport) -> Result<()> {
    let coverage = labels(r).map_or_else(|| "not_applicable".to_string(), |ls| ls.join(" "));
    writeln!(out, "graph6 {}", r.graph6)?;
    writeln!(out, "n {}", r.profile.order)?;
    writeln!(out, "m {}", r.profile.size)?;
    if cmd == CommandKind::Classify {
        writeln!(out, "coverage {coverage}")?;
        return Ok(());
    }
    writeln!(out, "det {}", r.det)?;
    writeln!(out, "singular {}", !r.nonsingular())?;
    writeln!(out, "energy {}", fixed(r.energy()))?;
    if cmd == CommandKind::Energy {
        let ev: Vec<String> = r.spectrum.eigenvalues.iter().map(|&x| fixed(x)).collect();
        writeln!(out, "eigenvalues {}", ev.join(" "))?;
        return Ok(());
    }
    writeln!(out, "avg_degree {}", fixed(r.profile.avg_degree_f64()))?;
    writeln!(out, "bound_log {}", fixed_opt(r.bound_log))?;
    writeln!(out, "bound_amgm {}", fixed_opt(r.bound_amgm))?;
    writeln!(out, "bound_variance {}", fixed_opt(r.bound_variance))?;
    writeln!(out, "quantity_c {}", fixed_opt(r.quantity_c))?;
    writeln!(out, "bound_conjugate {}", fixed_opt(r.bound_conjugate))?;
    for (name, target, verdict) in [
        ("conjecture1", r.conjecture1_target, r.conjecture1),
        ("conjecture2", r.conjecture2_target, r.conjecture2),
    ] {
        writeln!(out, "{name} {} target {} margin {}", verdict.as_str(), fixed(target), fixed(r.energy() - target))?;
    }
    writeln!(out, "coverage {coverage}")?;
    Ok(())
}

const REPORT_COLUMNS: [&str; 16] = [
    "graph6",
    "n",
    "m",
    "avg_degree",
    "det",
    "singular",
    "energy",
    "bound_log",
    "bound_amgm",
    "bound_variance",
    "quantity_c",
    "bound_conjugate",
    "conjecture1",
    "conjecture2",
    "conjecture2_margin",
    "coverage",
];

fn report_csv(out: &mut dyn Write, r: &BoundReport) -> Result<()> {
    let csv_opt = |x: Option<f64>| x.map_or_else(String::new, fixed);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_COLUMNS).map_err(csv_err)?;
    w.write_record([
        r.graph6.clone(),
        r.profile.order.to_string(),
        r.profile.size.to_string(),
        fixed(r.profile.avg_degree_f64()),
        r.det.to_string(),
        (!r.nonsingular()).to_string(),
        fixed(r.energy()),
        csv_opt(r.bound_log),
        csv_opt(r.bound_amgm),
        csv_opt(r.bound_variance),
        csv_opt(r.quantity_c),
        csv_opt(r.bound_conjugate),
        r.conjecture1.as_str().to_string(),
        r.conjecture2.as_str().to_string(),
        fixed(r.conjecture2_margin()),
        labels(r).map_or_else(String::new, |ls| ls.join(";")),
    ])
    .map_err(csv_err)?;
    w.flush()?;
    Ok(())
}

fn violation_json(v: &Violation) -> Value {
    json!({ "graph6": v.graph6, "n": v.n, "energy": num(v.energy), "target": num(v.target), "margin": num(v.margin) })
}

pub fn summary_json(s: &EnumerationSummary) -> Value {
    let histogram: Map<String, Value> = s.coverage_histogram.iter().map(|(l, &c)| (l.name().to_string(), json!(c))).collect();
    json!({
        "order": s.order,
        "total_graphs": s.total_graphs,
        "nonsingular_count": s.nonsingular_count,
        "conjecture1_violations": s.conjecture1_violations.iter().map(violation_json).collect::<Vec<_>>(),
        "conjecture2_violations": s.conjecture2_violations.iter().map(violation_json).collect::<Vec<_>>(),
        "coverage_histogram": histogram,
        "parse_errors": s.parse_errors,
        "unexpected_violations": s.unexpected_violations().len(),
    })
}

pub fn summary(out: &mut dyn Write, format: Format, s: &EnumerationSummary) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", summary_json(s))?,
        Format::Csv => summary_csv(out, s)?,
        Format::Text => summary_text(out, s)?,
    }
    Ok(())
}

fn summary_text(out: &mut dyn Write, s: &EnumerationSummary) -> Result<()> {
    writeln!(out, "order {}", s.order.map_or_else(|| "corpus".to_string(), |n| n.to_string()))?;
    writeln!(out, "total_graphs {}", s.total_graphs)?;
    writeln!(out, "nonsingular_count {}", s.nonsingular_count)?;
    for (name, list) in [("conjecture1_violations", &s.conjecture1_violations), ("conjecture2_violations", &s.conjecture2_violations)] {
        writeln!(out, "{name} {}", list.len())?;
        for v in list {
            writeln!(
                out,
                "  {} n={} energy={} target={} margin={}",
                v.graph6,
                v.n,
                fixed(v.energy),
                fixed(v.target),
                fixed(v.margin)
            )?;
        }
    }
    writeln!(out, "coverage_histogram")?;
    for label in CoverageLabel::ALL {
        writeln!(out, "  {} {}", label.name(), s.coverage_histogram.get(&label).copied().unwrap_or(0))?;
    }
    writeln!(out, "parse_errors {}", s.parse_errors.len())?;
    for e in &s.parse_errors {
        writeln!(out, "  {e}")?;
    }
    writeln!(out, "unexpected_violations {}", s.unexpected_violations().len())?;
    Ok(())
}

/// One row per datum: `section,name,n,energy,target,margin,count`.
fn summary_csv(out: &mut dyn Write, s: &EnumerationSummary) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["section", "name", "n", "energy", "target", "margin", "count"]).map_err(csv_err)?;
    let mut count = |name: &str, c: usize| w.write_record(["summary", name, "", "", "", "", &c.to_string()]);
    count("order", s.order.unwrap_or(0)).map_err(csv_err)?;
    count("total_graphs", s.total_graphs).map_err(csv_err)?;
    count("nonsingular_count", s.nonsingular_count).map_err(csv_err)?;
    count("unexpected_violations", s.unexpected_violations().len()).map_err(csv_err)?;
    for (section, list) in [("conjecture1_violation", &s.conjecture1_violations), ("conjecture2_violation", &s.conjecture2_violations)] {
        for v in list {
            w.write_record([section, &v.graph6, &v.n.to_string(), &fixed(v.energy), &fixed(v.target), &fixed(v.margin), ""])
                .map_err(csv_err)?;
        }
    }
    for (label, c) in &s.coverage_histogram {
        w.write_record(["coverage", label.name(), "", "", "", "", &c.to_string()]).map_err(csv_err)?;
    }
    for e in &s.parse_errors {
        w.write_record(["parse_error", e, "", "", "", "", ""]).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
