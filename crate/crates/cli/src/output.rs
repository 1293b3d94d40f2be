use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A finished command: its structured result plus a flat table for the csv
/// and text renderings.
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub summary: Vec<String>,
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize> {
    command: &'a str,
    version: &'a str,
    seed: u64,
    config: &'a C,
    status: &'a str,
    result: &'a Value,
}

pub fn render<C: Serialize>(command: &str, seed: u64, config: &C, format: Format, out: &Outcome) -> Result<String> {
    let status = if out.passed { "pass" } else { "fail" };
    match format {
        Format::Json => {
            let env = Envelope {
                command,
                version: dimdata::VERSION,
                seed,
                config,
                status,
                result: &out.result,
            };
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.headers)?;
            for row in &out.rows {
                w.write_record(row)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "dimdata {} {command} (seed {seed})", dimdata::VERSION)?;
            writeln!(s, "config: {}", serde_json::to_string(config)?)?;
            if !out.rows.is_empty() {
                s.push('\n');
                s.push_str(&table(&out.headers, &out.rows));
            }
            s.push('\n');
            for line in &out.summary {
                writeln!(s, "{line}")?;
            }
            writeln!(s, "status: {status}")?;
            Ok(s)
        }
    }
}

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (cell, w) in cells.zip(&widths) {
            let pad = w - cell.chars().count();
            s.push_str(cell);
            s.push_str(&" ".repeat(pad + 2));
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut s = line(&mut headers.iter().copied());
    for row in rows {
        s.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    s
}
