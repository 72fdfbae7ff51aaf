//! Report rendering: CSV with '#' metadata lines, or JSON with the full
//! parameter echo under "params" and the data under "rows".

use std::io::Write;
use std::path::PathBuf;

use serde_json::{json, Map, Value};

use crate::config::Format;
use crate::error::CliError;

pub struct Section {
    /// Section name; omitted for single-section reports.
    pub name: Option<&'static str>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

pub struct Report {
    /// Input echo, preserving insertion order.
    pub params: Vec<(&'static str, Value)>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn single(
        params: Vec<(&'static str, Value)>,
        columns: Vec<&'static str>,
        rows: Vec<Vec<Value>>,
    ) -> Self {
        Report { params, sections: vec![Section { name: None, columns, rows }] }
    }
}

/// 12 significant digits.
fn fmt_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.11e}")
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.to_string(),
            None => fmt_number(n.as_f64().unwrap_or(f64::NAN)),
        },
        other => other.to_string(),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    for (k, v) in &report.params {
        out.push_str(&format!("# {k} = {}\n", csv_cell(v)));
    }
    for section in &report.sections {
        if let Some(name) = section.name {
            out.push_str(&format!("# section: {name}\n"));
        }
        out.push_str(&section.columns.join(","));
        out.push('\n');
        for row in &section.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn section_json(section: &Section) -> Value {
    Value::Array(
        section
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (col, v) in section.columns.iter().zip(row) {
                    obj.insert((*col).to_string(), v.clone());
                }
                Value::Object(obj)
            })
            .collect(),
    )
}

fn render_json(report: &Report) -> String {
    let mut params = Map::new();
    for (k, v) in &report.params {
        params.insert((*k).to_string(), v.clone());
    }
    let rows = if report.sections.len() == 1 && report.sections[0].name.is_none() {
        section_json(&report.sections[0])
    } else {
        let mut obj = Map::new();
        for s in &report.sections {
            obj.insert(s.name.unwrap_or("rows").to_string(), section_json(s));
        }
        Value::Object(obj)
    };
    let doc = json!({ "params": Value::Object(params), "rows": rows });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable report");
    text.push('\n');
    text
}

pub fn write_report(
    report: &Report,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => render_csv(report),
        Format::Json => render_json(report),
    };
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
