//! Number and table rendering shared by every subcommand.
//!
//! CSV and JSON outputs use the same number tokens, so a value read back
//! from either file compares equal as a string.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

const SIGNIFICANT_DIGITS: usize = 15;

/// Rounds to 15 significant digits, then prints the shortest decimal that
/// round-trips that rounded value. Exponent notation is used outside
/// `[1e-5, 1e16)`. Non-finite values print as `NaN`, `inf` or `-inf`.
pub fn number(value: f64) -> String {
    if !value.is_finite() {
        return if value.is_nan() {
            "NaN".to_owned()
        } else if value > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    if value == 0.0 {
        return "0".to_owned();
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, value)
        .parse()
        .expect("scientific notation parses");
    let magnitude = rounded.abs();
    if (1e-5..1e16).contains(&magnitude) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// A JSON token for `value`; `null` when it is not finite.
pub fn json_number(value: f64) -> String {
    if value.is_finite() {
        number(value)
    } else {
        "null".to_owned()
    }
}

/// Column names plus rows of numbers, rendered as CSV or as a JSON array of objects.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| number(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Written by hand so that number tokens match [`Table::to_csv`] exactly.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for i in 0..self.rows.len() {
            out.push_str(if i == 0 { "\n  " } else { ",\n  " });
            out.push_str(&self.row_json(i));
        }
        out.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
        out
    }

    /// One row as a JSON object keyed by column name.
    pub fn row_json(&self, index: usize) -> String {
        let mut out = String::from("{");
        for (j, (name, &v)) in self.columns.iter().zip(&self.rows[index]).enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}: {}", json_string(name), json_number(v));
        }
        out.push('}');
        out
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

pub fn write_all(out: &mut dyn Write, text: &str) -> io::Result<()> {
    out.write_all(text.as_bytes())?;
    out.flush()
}
