//! Row-oriented rendering for the three output formats.
//!
//! CSV and JSON-lines writers are byte-deterministic: floats are printed with
//! `{:e}` (shortest round-trip form, lowercase scientific), exact integers as
//! full decimal strings. Columns marked table-only (wall-clock timings) never
//! reach the machine formats.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy)]
pub struct Column {
    pub name: &'static str,
    /// Excluded from csv/jsonl output (nondeterministic content).
    pub table_only: bool,
}

impl Column {
    pub const fn new(name: &'static str) -> Self {
        Column {
            name,
            table_only: false,
        }
    }

    pub const fn table_only(name: &'static str) -> Self {
        Column {
            name,
            table_only: true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    Float(f64),
    Uint(u64),
    /// Arbitrary-precision integer, already in decimal form.
    Big(String),
    Bool(bool),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Float(v) => format!("{v:e}"),
            Cell::Uint(v) => v.to_string(),
            Cell::Big(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Text(s) => json_string(s),
            Cell::Float(v) => format!("{v:e}"),
            Cell::Uint(v) => v.to_string(),
            // Quoted: arbitrary precision does not survive every JSON parser.
            Cell::Big(s) => json_string(s),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders all rows in the requested format, ending with a trailing newline.
pub fn render(format: Format, columns: &[Column], rows: &[Vec<Cell>]) -> String {
    match format {
        Format::Table => render_table(columns, rows),
        Format::Csv => render_csv(columns, rows),
        Format::Jsonl => render_jsonl(columns, rows),
    }
}

fn render_table(columns: &[Column], rows: &[Vec<Cell>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.name.len()).collect();
    let rendered: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(Cell::plain).collect())
        .collect();
    for row in &rendered {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for (i, column) in columns.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        let _ = write!(out, "{:<width$}", column.name, width = widths[i]);
    }
    out.push('\n');
    for row in &rendered {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{:<width$}", cell, width = widths[i]);
        }
        out.push('\n');
    }
    out
}

fn render_csv(columns: &[Column], rows: &[Vec<Cell>]) -> String {
    let mut out = String::new();
    let kept: Vec<usize> = (0..columns.len())
        .filter(|&i| !columns[i].table_only)
        .collect();
    out.push_str(
        &kept
            .iter()
            .map(|&i| columns[i].name)
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in rows {
        let line: Vec<String> = kept.iter().map(|&i| row[i].plain()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn render_jsonl(columns: &[Column], rows: &[Vec<Cell>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push('{');
        let mut first = true;
        for (i, column) in columns.iter().enumerate() {
            if column.table_only {
                continue;
            }
            if !first {
                out.push(',');
            }
            first = false;
            let _ = write!(out, "{}:{}", json_string(column.name), row[i].json());
        }
        out.push_str("}\n");
    }
    out
}
