use std::io::{self, Write};

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Everything a subcommand produces, before it is encoded.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    /// Body for text mode.
    pub text: Vec<String>,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub results: Value,
    /// Verification verdicts; on stdout in text mode, on stderr for CSV.
    pub status: Vec<String>,
    pub warnings: Vec<String>,
    /// A verification step failed.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, params: Value) -> Self {
        let params = match params {
            Value::Object(map) => map,
            _ => Map::new(),
        };
        Report {
            command,
            params,
            text: Vec::new(),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            results: Value::Null,
            status: Vec::new(),
            warnings: Vec::new(),
            failed: false,
        }
    }

    pub fn status(&mut self, ok: bool, line: String) {
        self.failed |= !ok;
        self.status.push(line);
    }

    pub fn emit(
        &self,
        format: Format,
        out: &mut impl Write,
        err: &mut impl Write,
    ) -> io::Result<()> {
        match format {
            Format::Text => {
                for line in self.text.iter().chain(&self.status) {
                    writeln!(out, "{line}")?;
                }
                self.warn(err)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.csv_header)?;
                for row in &self.csv_rows {
                    w.write_record(row)?;
                }
                w.flush()?;
                for line in &self.status {
                    writeln!(err, "{line}")?;
                }
                self.warn(err)?;
            }
            Format::Json => {
                let mut results = self.results.clone();
                if !self.status.is_empty() {
                    if let Value::Object(map) = &mut results {
                        map.insert("status".into(), json!(self.status));
                        map.insert("passed".into(), json!(!self.failed));
                    }
                }
                let doc = json!({
                    "command": self.command,
                    "params": self.params,
                    "results": results,
                    "warnings": self.warnings,
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }

    fn warn(&self, err: &mut impl Write) -> io::Result<()> {
        for w in &self.warnings {
            writeln!(err, "warning: {w}")?;
        }
        Ok(())
    }
}
