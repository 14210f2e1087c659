//! Rendering of command results as text, CSV, or JSON.

use std::collections::BTreeSet;
use std::io::{self, Write};

use clap::ValueEnum;
use numsg_core::NumericalMonoid;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// What a command produced, in every output format.
pub struct Report {
    pub command: &'static str,
    pub text: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub payload: Value,
    pub provenance: Provenance,
}

/// Inputs and bounds behind a result. A result computed on a finite window
/// records the window; one that holds for the whole monoid is `exact`.
pub struct Provenance {
    pub inputs: Value,
    pub exact: bool,
    pub window: Option<u64>,
    pub extra: Map<String, Value>,
}

impl Provenance {
    pub fn exact(inputs: Value) -> Self {
        Provenance {
            inputs,
            exact: true,
            window: None,
            extra: Map::new(),
        }
    }

    pub fn windowed(inputs: Value, window: u64) -> Self {
        Provenance {
            inputs,
            exact: false,
            window: Some(window),
            extra: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.into(), value);
        self
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        m.insert("exact".into(), json!(self.exact));
        if let Some(w) = self.window {
            m.insert("window".into(), json!(w));
        }
        for (k, v) in &self.extra {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    fn text_note(&self) -> Option<String> {
        let w = self.window?;
        let mut note = format!("# window [0, {w}]");
        for (k, v) in &self.extra {
            note.push_str(&format!(", {k} {v}"));
        }
        if !self.exact {
            note.push_str(", computed on the window only");
        }
        Some(note)
    }
}

pub fn monoid_json(s: &NumericalMonoid) -> Value {
    json!({ "generators": s.generators(), "frobenius": s.frobenius() })
}

pub fn set_text(set: &BTreeSet<u64>) -> String {
    format!("{{{}}}", join(set.iter()))
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn envelope(report: &Report) -> Value {
    json!({
        "format": Format::Json.name(),
        "command": report.command,
        "payload": report.payload,
        "provenance": report.provenance.to_json(),
    })
}

pub fn emit(report: &Report, format: Format, out: &mut impl Write) -> io::Result<()> {
    // Plot data is a CSV table in either plain format.
    let format = match (report.command, format) {
        ("plot-data", Format::Text) => Format::Csv,
        (_, f) => f,
    };
    match format {
        Format::Text => {
            for line in &report.text {
                writeln!(out, "{line}")?;
            }
            if let Some(note) = report.provenance.text_note() {
                writeln!(out, "{note}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&report.header)?;
            for row in &report.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&envelope(report)).map_err(io::Error::other)?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

pub fn emit_error(name: &str, message: &str, format: Format, out: &mut impl Write) -> io::Result<()> {
    if format == Format::Json {
        let body = json!({ "format": "json", "error": { "name": name, "message": message } });
        let text = serde_json::to_string_pretty(&body).map_err(io::Error::other)?;
        writeln!(out, "{text}")?;
    }
    Ok(())
}
