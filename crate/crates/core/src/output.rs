//! Rendering of results as JSON, plain text or CSV.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::magictables::{GroupConditionRow, MagicCell};
use crate::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "text" | "txt" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Something the CLI can print.
pub trait Render: Serialize {
    fn text(&self) -> String {
        to_json(self)
    }

    /// Flat tables only.
    fn csv(&self) -> Option<String> {
        None
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

pub fn emit<T: Render + ?Sized>(value: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_json(value)),
        Format::Text => Ok(value.text()),
        Format::Csv => value
            .csv()
            .ok_or_else(|| Error::Precondition("CSV output is only available for flat tables".into())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(out: &mut String, fields: &[&str]) {
    let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    out.push_str(&row.join(","));
    out.push('\n');
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { '✓' } else { '✗' };
            let _ = write!(out, "{mark} {} ({} ms): {}", c.name, c.runtime_ms, c.reference);
            if !c.pass {
                let _ = write!(out, " | expected {}, got {}", c.expected, c.actual);
            }
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = String::new();
        csv_line(&mut out, &["name", "reference", "expected", "actual", "pass", "runtime_ms"]);
        for c in &self.checks {
            csv_line(
                &mut out,
                &[&c.name, &c.reference, &c.expected, &c.actual, &c.pass.to_string(), &c.runtime_ms.to_string()],
            );
        }
        Some(out)
    }
}

impl Render for [MagicCell] {
    fn text(&self) -> String {
        let mut out = String::new();
        for chunk in self.chunks(4) {
            let cells: Vec<String> = chunk
                .iter()
                .map(|c| format!("{:>6} ({})", c.group, c.invariant_degree))
                .collect();
            let _ = writeln!(out, "{:<14} {}", chunk[0].row.to_string(), cells.join("  "));
        }
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = String::new();
        csv_line(&mut out, &["row", "col", "group", "invariant_degree"]);
        for c in self {
            csv_line(
                &mut out,
                &[&c.row.to_string(), &c.col.to_string(), &c.group, &c.invariant_degree.to_string()],
            );
        }
        Some(out)
    }
}

impl Render for Vec<MagicCell> {
    fn text(&self) -> String {
        self.as_slice().text()
    }

    fn csv(&self) -> Option<String> {
        self.as_slice().csv()
    }
}

fn condition_row_csv(out: &mut String, r: &GroupConditionRow) {
    let j = r
        .j_condition
        .as_ref()
        .map(|j| format!("{:?} over {:?}", j.values, j.degrees))
        .unwrap_or_default();
    csv_line(
        out,
        &[&r.group, &r.degree.to_string(), &j, &r.condition, &r.equivalent_condition, &r.parabolic],
    );
}

const CONDITION_HEADER: [&str; 6] = ["group", "degree", "j_condition", "condition", "equivalent_condition", "parabolic"];

impl Render for GroupConditionRow {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (degree {})", self.group, self.degree);
        if let Some(j) = &self.j_condition {
            let _ = writeln!(out, "  J = {:?} over degrees {:?}", j.values, j.degrees);
        }
        let _ = writeln!(out, "  condition: {}", self.condition);
        let _ = writeln!(out, "  equivalently: {}", self.equivalent_condition);
        let _ = writeln!(out, "  parabolic: {}", self.parabolic);
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = String::new();
        csv_line(&mut out, &CONDITION_HEADER);
        condition_row_csv(&mut out, self);
        Some(out)
    }
}

impl Render for Vec<GroupConditionRow> {
    fn text(&self) -> String {
        self.iter().map(Render::text).collect()
    }

    fn csv(&self) -> Option<String> {
        let mut out = String::new();
        csv_line(&mut out, &CONDITION_HEADER);
        for r in self {
            condition_row_csv(&mut out, r);
        }
        Some(out)
    }
}

/// Wraps any serializable value with a one-line text form.
#[derive(Debug, Serialize)]
#[serde(transparent)]
pub struct Plain<T: Serialize> {
    pub value: T,
    #[serde(skip)]
    pub line: String,
}

impl<T: Serialize> Plain<T> {
    pub fn new(value: T, line: impl Into<String>) -> Self {
        Plain {
            value,
            line: line.into(),
        }
    }
}

impl<T: Serialize> Render for Plain<T> {
    fn text(&self) -> String {
        format!("{}\n", self.line)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magictables::Tables;
    use crate::polyring::IntPoly;
    use crate::verify::Check;

    #[test]
    fn poly_json_round_trip() {
        let p: IntPoly = "1 + 2t^3 - t^5".parse().unwrap();
        let s = emit(&Plain::new(p.clone(), p.to_string()), Format::Json).unwrap();
        let back: IntPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn report_text_lines() {
        let check = |name: &str, pass| Check {
            name: name.into(),
            reference: "r".into(),
            expected: "1".into(),
            actual: if pass { "1".into() } else { "2".into() },
            pass,
            runtime_ms: 0,
        };
        let r = VerifyReport {
            checks: vec![check("a", true), check("b", false)],
        };
        let t = emit(&r, Format::Text).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert!(lines[0].starts_with("✓ a"));
        assert!(lines[1].starts_with("✗ b"));
        assert_eq!(lines[2], "1/2 checks passed");
    }

    #[test]
    fn magic_csv_has_sixteen_rows() {
        let cells = Tables::builtin().cells();
        let csv = emit(&cells, Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), 17);
    }

    #[test]
    fn csv_refused_for_non_tables() {
        assert!(emit(&Plain::new(1, "1"), Format::Csv).is_err());
        assert!("yaml".parse::<Format>().is_err());
    }
}
