//! Text, JSON and CSV renderings. Numbers are always exact: integers or
//! `p/q` strings. CSV uses LF line endings and never quotes.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{HurwitzSides, PolyDegreeBound, RelaxedSides};
use crate::feasibility::{CaseReport, CharProfile, MVerdict, TableRow};
use crate::golden::VerificationReport;
use crate::numerics::{render, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

/// `1..4,7,9` style compression of an ascending set.
pub fn compress_set(set: &BTreeSet<u32>) -> String {
    let mut parts = Vec::new();
    let mut iter = set.iter().copied().peekable();
    while let Some(start) = iter.next() {
        let mut end = start;
        while iter.peek() == Some(&(end + 1)) {
            end = iter.next().unwrap();
        }
        match end - start {
            0 => parts.push(start.to_string()),
            1 => parts.push(format!("{start},{end}")),
            _ => parts.push(format!("{start}..{end}")),
        }
    }
    if parts.is_empty() {
        "{}".to_string()
    } else {
        parts.join(",")
    }
}

fn join_m(ms: &[u32]) -> String {
    ms.iter().map(u32::to_string).collect::<Vec<_>>().join(";")
}

fn verdict_text(out: &mut String, v: &MVerdict) {
    match v.excluded_by() {
        Some(rule) => writeln!(out, "m={} {} by {}", v.m, v.status, rule),
        None => writeln!(out, "m={} {}", v.m, v.status),
    }
    .unwrap();
    for r in &v.rules {
        let mark = if r.fired { "fired" } else { "pass" };
        writeln!(out, "  {:<7}{:<6}{}", r.id.as_str(), mark, r.witness).unwrap();
    }
}

pub fn case_report(report: &CaseReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("n,e,d,overall,surviving_m\n");
            writeln!(
                out,
                "{},{},{},{},{}",
                report.n,
                report.e,
                report.d,
                report.overall,
                join_m(&report.surviving_m())
            )
            .unwrap();
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "n={} d={} e={} profile={} M={} overall={}",
                report.n, report.d, report.e, report.profile, report.max_degree, report.overall
            )
            .unwrap();
            writeln!(out, "relaxed threshold m0={}", report.relaxed_threshold).unwrap();
            for v in &report.verdicts {
                verdict_text(&mut out, v);
            }
            for diag in &report.diagnostics {
                writeln!(out, "alpha(m={})={}", diag.m, render(&diag.alpha)).unwrap();
            }
            for note in report.notes() {
                writeln!(out, "note: {note}").unwrap();
            }
            out
        }
    }
}

#[derive(Serialize)]
struct SingleVerdict<'a> {
    n: u32,
    d: u32,
    e: u32,
    profile: CharProfile,
    m: u32,
    status: crate::feasibility::Status,
    rules: &'a [crate::feasibility::RuleOutcome],
}

pub fn single_verdict(n: u32, d: u32, e: u32, profile: CharProfile, v: &MVerdict, format: Format) -> String {
    match format {
        Format::Json => to_json(&SingleVerdict {
            n,
            d,
            e,
            profile,
            m: v.m,
            status: v.status,
            rules: &v.rules,
        }),
        Format::Csv => {
            let by = v.excluded_by().map(|r| r.as_str()).unwrap_or("");
            format!("n,e,d,m,status,excluded_by\n{n},{e},{d},{},{},{by}\n", v.m, v.status)
        }
        Format::Text => {
            let mut out = format!("n={n} d={d} e={e} profile={profile}\n");
            verdict_text(&mut out, v);
            out
        }
    }
}

#[derive(Serialize)]
struct TableJson<'a> {
    n: u32,
    e: u32,
    dmax: u32,
    profile: CharProfile,
    rows: &'a [TableRow],
}

pub fn table(n: u32, e: u32, d_max: u32, profile: CharProfile, rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Json => to_json(&TableJson {
            n,
            e,
            dmax: d_max,
            profile,
            rows,
        }),
        Format::Csv => {
            let mut out = String::from("n,e,d,overall,surviving_m\n");
            for row in rows {
                writeln!(out, "{n},{e},{},{},{}", row.d, row.overall, join_m(&row.surviving_m)).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("n={n} e={e} profile={profile}\n");
            writeln!(out, "{:>4}  {:<15} surviving_m", "d", "overall").unwrap();
            for row in rows {
                writeln!(out, "{:>4}  {:<15} {}", row.d, row.overall.as_str(), join_m(&row.surviving_m)).unwrap();
            }
            let holds = crate::feasibility::holding_set(rows);
            writeln!(out, "extension holds for d in {}", compress_set(&holds)).unwrap();
            out
        }
    }
}

pub fn verification(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("profile,n,e,d,expected,actual,match\n");
            for t in &report.tables {
                for r in &t.rows {
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        t.profile, t.n, t.e, r.d, r.expected_holds, r.actual_holds, r.matches
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for t in &report.tables {
                let verdict = if t.passed { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{verdict} {} n={} e={} d<={}: expected {} actual {}",
                    t.profile,
                    t.n,
                    t.e,
                    t.d_max,
                    compress_set(&t.expected),
                    compress_set(&t.actual)
                )
                .unwrap();
                for r in t.rows.iter().filter(|r| !r.matches) {
                    writeln!(
                        out,
                        "  mismatch d={}: expected holds={} actual {} surviving_m={}",
                        r.d,
                        r.expected_holds,
                        r.row.overall,
                        join_m(&r.row.surviving_m)
                    )
                    .unwrap();
                }
            }
            writeln!(out, "verify-paper: {}", if report.passed { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    }
}

#[derive(Serialize)]
pub struct ChernOutput {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub twist: i64,
    pub total_chern: Vec<String>,
    pub top_chern: String,
}

pub fn chern(output: &ChernOutput, format: Format) -> String {
    match format {
        Format::Json => to_json(output),
        Format::Csv => {
            let degrees = output.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
            format!(
                "n,degrees,twist,total_chern,top_chern\n{},{},{},{},{}\n",
                output.n,
                degrees,
                output.twist,
                output.total_chern.join(";"),
                output.top_chern
            )
        }
        Format::Text => format!(
            "c(Omega) = [{}]\n{}\n",
            output.total_chern.join(", "),
            output.top_chern
        ),
    }
}

/// Full evaluation of one `(n, d, e, m)`.
#[derive(Serialize)]
pub struct BoundPoint {
    pub n: u32,
    pub d: u32,
    pub e: u32,
    pub m: u32,
    pub hurwitz: HurwitzSides,
    pub relaxed: RelaxedSides,
    #[serde(serialize_with = "crate::bounds::ser_rational")]
    pub degree_f: Rational,
    pub asymptotic: bool,
    #[serde(serialize_with = "ser_opt_rational")]
    pub alpha: Option<Rational>,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&render(v)),
        None => s.serialize_none(),
    }
}

#[derive(Serialize)]
pub struct BoundScan {
    pub n: u32,
    pub d: u32,
    pub e: u32,
    #[serde(rename = "M")]
    pub max_degree: u32,
    pub m0: u32,
    pub points: Vec<BoundPoint>,
}

impl BoundScan {
    pub fn new(n: u32, d: u32, e: u32, bound: PolyDegreeBound, points: Vec<BoundPoint>) -> Self {
        BoundScan {
            n,
            d,
            e,
            max_degree: bound.max_degree,
            m0: bound.relaxed_threshold,
            points,
        }
    }
}

const BOUND_CSV_HEADER: &str = "n,d,e,m,lhs,rhs,holds,relaxed_lhs,relaxed_rhs,relaxed_holds,degree_f,asymptotic,alpha\n";

fn bound_csv_line(out: &mut String, p: &BoundPoint) {
    writeln!(
        out,
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        p.n,
        p.d,
        p.e,
        p.m,
        p.hurwitz.lhs,
        p.hurwitz.rhs,
        p.hurwitz.holds,
        p.relaxed.lhs,
        p.relaxed.rhs,
        p.relaxed.holds,
        p.degree_f,
        p.asymptotic,
        p.alpha.as_ref().map(render).unwrap_or_default()
    )
    .unwrap();
}

fn bound_text_line(out: &mut String, p: &BoundPoint) {
    let rel = if p.hurwitz.holds { ">=" } else { "<" };
    writeln!(
        out,
        "m={}: {} {} {} hurwitz={} relaxed={} ({} vs {}) deg_f={} asymptotic={}{}",
        p.m,
        p.hurwitz.lhs,
        rel,
        p.hurwitz.rhs,
        p.hurwitz.holds,
        p.relaxed.holds,
        p.relaxed.lhs,
        p.relaxed.rhs,
        p.degree_f,
        p.asymptotic,
        p.alpha.as_ref().map(|a| format!(" alpha={a}")).unwrap_or_default()
    )
    .unwrap();
}

pub fn bound_point(p: &BoundPoint, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Csv => {
            let mut out = BOUND_CSV_HEADER.to_string();
            bound_csv_line(&mut out, p);
            out
        }
        Format::Text => {
            let mut out = format!("n={} d={} e={}\n", p.n, p.d, p.e);
            bound_text_line(&mut out, p);
            out
        }
    }
}

pub fn bound_scan(scan: &BoundScan, format: Format) -> String {
    match format {
        Format::Json => to_json(scan),
        Format::Csv => {
            let mut out = BOUND_CSV_HEADER.to_string();
            for p in &scan.points {
                bound_csv_line(&mut out, p);
            }
            out
        }
        Format::Text => {
            let mut out = format!("n={} d={} e={} M={} m0={}\n", scan.n, scan.d, scan.e, scan.max_degree, scan.m0);
            for p in &scan.points {
                bound_text_line(&mut out, p);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_examples() {
        let set: BTreeSet<u32> = (1..=23).chain([25, 26, 29]).collect();
        assert_eq!(compress_set(&set), "1..23,25,26,29");
        assert_eq!(compress_set(&BTreeSet::new()), "{}");
        assert_eq!(compress_set(&BTreeSet::from([4])), "4");
    }
}
