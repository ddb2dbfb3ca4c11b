use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use k43::hyper_eval::HyperplanePoint;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Collects a report and writes it in the chosen format.
pub struct Output {
    format: Format,
    sink: Box<dyn Write>,
    buf: String,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Output {
    pub fn new(format: Format, path: Option<&Path>) -> io::Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout()),
        };
        Ok(Output {
            format,
            sink,
            buf: String::new(),
        })
    }

    /// One report given in all three encodings; only the selected one is kept.
    pub fn value(&mut self, text: &str, js: &Value, header: &[&str], rows: &[Vec<String>]) {
        match self.format {
            Format::Text => {
                self.buf.push_str(text);
                self.buf.push('\n');
            }
            Format::Json => {
                self.buf.push_str(&serde_json::to_string_pretty(js).expect("json"));
                self.buf.push('\n');
            }
            Format::Csv => {
                self.buf.push_str(&header.join(","));
                self.buf.push('\n');
                for r in rows {
                    let line: Vec<String> = r.iter().map(|f| csv_field(f)).collect();
                    self.buf.push_str(&line.join(","));
                    self.buf.push('\n');
                }
            }
        }
    }

    /// Points with every coordinate written at full precision, the same
    /// strings in every format.
    pub fn points(&mut self, pts: &[HyperplanePoint], precision: u32) {
        let digits = (precision as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
        let rows: Vec<Vec<String>> = pts
            .iter()
            .map(|p| {
                let mut v = vec![precision.to_string()];
                v.extend(p.to_strings(digits));
                v
            })
            .collect();
        let text: Vec<String> = rows.iter().map(|r| r[1..].join(", ")).collect();
        let js = json!({ "schema": 1, "points": pts });
        self.value(
            &text.join("\n"),
            &js,
            &["precision", "a", "b", "c", "d", "e", "f", "g"],
            &rows,
        );
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.sink.write_all(self.buf.as_bytes())?;
        self.sink.flush()
    }
}
