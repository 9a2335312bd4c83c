//! Regeneration of the published feasibility tables and comparison against
//! the golden sets in `data/golden_tables.txt`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::{generate_table, holding_set, CharMode, CharProfile, TableRow};

const GOLDEN_TABLES: &str = include_str!("../data/golden_tables.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub mode: CharMode,
    pub n: u32,
    pub e: u32,
    pub d_max: u32,
    pub expected: BTreeSet<u32>,
}

fn parse_set(text: &str) -> Result<BTreeSet<u32>> {
    let mut set = BTreeSet::new();
    for part in text.split(',') {
        let num = |s: &str| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad integer {s:?} in golden set")))
        };
        match part.split_once("..") {
            Some((lo, hi)) => set.extend(num(lo)?..=num(hi)?),
            None => {
                set.insert(num(part)?);
            }
        }
    }
    Ok(set)
}

/// Parses the golden table format: `profile n e dmax set`, `#` comments.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenTable>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [mode, n, e, d_max, set] = fields[..] else {
                return Err(Error::Parse(format!("golden line needs 5 fields: {line:?}")));
            };
            let int = |s: &str| s.parse::<u32>().map_err(|_| Error::Parse(format!("bad integer {s:?}")));
            Ok(GoldenTable {
                mode: mode.parse()?,
                n: int(n)?,
                e: int(e)?,
                d_max: int(d_max)?,
                expected: parse_set(set)?,
            })
        })
        .collect()
}

pub fn builtin_golden_tables() -> Vec<GoldenTable> {
    parse_golden(GOLDEN_TABLES).expect("built-in golden tables are well formed")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub d: u32,
    pub expected_holds: bool,
    pub actual_holds: bool,
    pub matches: bool,
    pub row: TableRow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub profile: CharProfile,
    pub n: u32,
    pub e: u32,
    pub d_max: u32,
    pub expected: BTreeSet<u32>,
    pub actual: BTreeSet<u32>,
    pub rows: Vec<RowCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tables: Vec<TableCheck>,
    pub passed: bool,
}

/// Regenerates one table with the non-strict profile of its mode.
pub fn check_table(golden: &GoldenTable) -> Result<TableCheck> {
    let profile = CharProfile::new(golden.mode, false);
    let rows = generate_table(golden.n, golden.e, golden.d_max, profile)?;
    let actual = holding_set(&rows);
    let rows: Vec<RowCheck> = rows
        .into_iter()
        .map(|row| {
            let expected_holds = golden.expected.contains(&row.d);
            let actual_holds = row.overall.extension_holds();
            RowCheck {
                d: row.d,
                expected_holds,
                actual_holds,
                matches: expected_holds == actual_holds,
                row,
            }
        })
        .collect();
    Ok(TableCheck {
        profile,
        n: golden.n,
        e: golden.e,
        d_max: golden.d_max,
        passed: actual == golden.expected,
        expected: golden.expected.clone(),
        actual,
        rows,
    })
}

pub fn verify_tables(goldens: &[GoldenTable]) -> Result<VerificationReport> {
    let tables = goldens.iter().map(check_table).collect::<Result<Vec<_>>>()?;
    let passed = tables.iter().all(|t| t.passed);
    Ok(VerificationReport { tables, passed })
}

/// Regenerates every built-in table.
pub fn verify_paper_tables() -> VerificationReport {
    verify_tables(&builtin_golden_tables()).expect("built-in golden tables have valid parameters")
}
