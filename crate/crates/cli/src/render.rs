//! Text, JSON and CSV rendering for each subcommand.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use adicseq::{AdicReport, AutocorrSpectrum, BinarySequence, VerificationReport};
use serde::Serialize;

use crate::Format;

#[derive(Debug, Serialize)]
pub struct PrimeRow {
    pub p: u64,
    pub x: u64,
    pub f: u64,
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

pub fn primes(rows: &[PrimeRow], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv => csv_text(
            &["p", "x", "f"],
            rows.iter()
                .map(|r| vec![r.p.to_string(), r.x.to_string(), r.f.to_string()]),
        ),
        Format::Table => {
            let mut out = format!("{:>8} {:>6} {:>6}\n", "p", "x", "f");
            for r in rows {
                let _ = writeln!(out, "{:>8} {:>6} {:>6}", r.p, r.x, r.f);
            }
            out
        }
    }
}

pub fn construct_summary(
    p: u64,
    b: &str,
    u: &BinarySequence,
    out: Option<&Path>,
    format: Format,
) -> String {
    let dest = out.map_or_else(|| "-".to_string(), |p| p.display().to_string());
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "p": p,
                "b": b,
                "period": u.period(),
                "weight": u.weight(),
                "out": dest,
            });
            json(&v)
        }
        Format::Csv => csv_text(
            &["p", "b", "period", "weight", "out"],
            [vec![
                p.to_string(),
                b.to_string(),
                u.period().to_string(),
                u.weight().to_string(),
                dest,
            ]],
        ),
        Format::Table => format!(
            "p={p} b={b} N={} weight={} -> {dest}\n",
            u.period(),
            u.weight()
        ),
    }
}

pub fn spectrum(s: &AutocorrSpectrum, format: Format) -> String {
    match format {
        Format::Json => json(s),
        Format::Csv => csv_text(
            &["tau", "C"],
            s.values
                .iter()
                .enumerate()
                .map(|(t, c)| vec![t.to_string(), c.to_string()]),
        ),
        Format::Table => {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &c in s.off_peak() {
                *counts.entry(c).or_default() += 1;
            }
            let mut out = format!("N={} classification={}\n", s.period, s.classification);
            out.push_str("off-peak values:");
            for (c, n) in &counts {
                let _ = write!(out, " {c} (x{n})");
            }
            out.push('\n');
            let _ = writeln!(out, "{:>8} {:>8}", "tau", "C");
            for (t, c) in s.values.iter().enumerate() {
                let _ = writeln!(out, "{t:>8} {c:>8}");
            }
            out
        }
    }
}

fn opt(v: &Option<impl ToString>) -> String {
    v.as_ref().map_or_else(String::new, ToString::to_string)
}

pub fn adic(r: &AdicReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_text(
            &[
                "period",
                "u2",
                "gcd_total",
                "gcd_minus",
                "gcd_plus",
                "quotient",
                "phi2",
            ],
            [vec![
                r.period.to_string(),
                r.u2.to_string(),
                r.gcd_total.to_string(),
                opt(&r.gcd_minus),
                opt(&r.gcd_plus),
                r.quotient.to_string(),
                r.phi2.to_string(),
            ]],
        ),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "{:<10} {}", "period", r.period);
            let _ = writeln!(out, "{:<10} {}", "U(2)", r.u2);
            let _ = writeln!(out, "{:<10} {}", "gcd_total", r.gcd_total);
            if let (Some(m), Some(p)) = (&r.gcd_minus, &r.gcd_plus) {
                let _ = writeln!(out, "{:<10} {}", "gcd_minus", m);
                let _ = writeln!(out, "{:<10} {}", "gcd_plus", p);
            }
            let _ = writeln!(out, "{:<10} {}", "quotient", r.quotient);
            let _ = writeln!(out, "{:<10} {:.6}", "phi2", r.phi2);
            out
        }
    }
}

pub fn linear(period: usize, lc: usize, format: Format) -> String {
    match format {
        Format::Json => json(&serde_json::json!({ "period": period, "linear_complexity": lc })),
        Format::Csv => csv_text(
            &["period", "linear_complexity"],
            [vec![period.to_string(), lc.to_string()]],
        ),
        Format::Table => format!("period {period}\nlinear_complexity {lc}\n"),
    }
}

fn status(c: Option<&adicseq::CheckOutcome>) -> &'static str {
    match c {
        None => "n/a",
        Some(c) if c.pass => "pass",
        Some(_) => "fail",
    }
}

pub fn reports(rs: &[VerificationReport], format: Format) -> String {
    match format {
        // one object per line when several primes are reported
        Format::Json if rs.len() == 1 => json(&rs[0]),
        Format::Json => rs
            .iter()
            .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
            .collect(),
        Format::Csv => {
            let names: Vec<&str> = rs
                .first()
                .map(|r| r.checks().into_iter().map(|(k, _)| k).collect())
                .unwrap_or_default();
            let mut header = vec!["p", "g", "x", "y", "d"];
            header.extend(&names);
            header.push("all_pass");
            csv_text(
                &header,
                rs.iter().map(|r| {
                    let mut row = vec![
                        r.p.to_string(),
                        r.g.to_string(),
                        r.x.to_string(),
                        r.y.to_string(),
                        r.d.to_string(),
                    ];
                    row.extend(r.checks().into_iter().map(|(_, c)| status(c).to_string()));
                    row.push(r.all_pass().to_string());
                    row
                }),
            )
        }
        Format::Table => {
            let mut out = String::new();
            for r in rs {
                let _ = writeln!(
                    out,
                    "p={} g={} x={} y={:+} d={}",
                    r.p, r.g, r.x, r.y, r.d
                );
                for (name, c) in r.checks() {
                    let note = match c.and_then(|c| c.published_holds) {
                        Some(false) => "  (commonly printed form does not hold)",
                        _ => "",
                    };
                    let _ = writeln!(out, "  {name:<12} {}{note}", status(c));
                }
                let _ = writeln!(
                    out,
                    "  {:<12} {}",
                    "overall",
                    if r.all_pass() { "pass" } else { "FAIL" }
                );
            }
            out
        }
    }
}
