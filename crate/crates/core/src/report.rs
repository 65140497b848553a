//! Tabular reports with a provenance footer, rendered as CSV or as
//! structured text (JSON).
//!
//! Every value is a string by the time it reaches a table, so rationals stay
//! exact (`p/q`) and the output is byte-for-byte reproducible.

use std::fmt::Display;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const PASS: &str = "PASS";
pub const FAIL: &str = "FAIL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// SHA-256 of each model spec file read, in argument order.
    pub spec_sha256: Vec<String>,
    pub command: String,
    pub version: String,
}

impl Provenance {
    pub fn new(command: impl Into<String>) -> Self {
        Provenance {
            spec_sha256: Vec::new(),
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn record_spec(&mut self, bytes: &[u8]) {
        self.spec_sha256.push(hex::encode(Sha256::digest(bytes)));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub provenance: Provenance,
    /// `None` for plain tables; `Some(false)` when any asserted check failed.
    pub verdict: Option<bool>,
}

impl ReportTable {
    pub fn new<S: Into<String>>(
        header: impl IntoIterator<Item = S>,
        provenance: Provenance,
    ) -> Self {
        ReportTable {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            provenance,
            verdict: None,
        }
    }

    pub fn push<D: Display>(&mut self, row: impl IntoIterator<Item = D>) {
        let row: Vec<String> = row.into_iter().map(|v| v.to_string()).collect();
        debug_assert_eq!(
            row.len(),
            self.header.len(),
            "row width differs from header"
        );
        self.rows.push(row);
    }

    /// Record the outcome of one asserted check; any failure sticks.
    pub fn check(&mut self, ok: bool) -> &'static str {
        self.verdict = Some(self.verdict.unwrap_or(true) && ok);
        if ok {
            PASS
        } else {
            FAIL
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.unwrap_or(true)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        writer.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            writer.write_record(row).map_err(io)?;
        }
        let mut out = String::from_utf8(writer.into_inner().map_err(|e| Error::Io(e.to_string()))?)
            .expect("csv output is UTF-8");
        let p = &self.provenance;
        let hashes = if p.spec_sha256.is_empty() {
            "-".to_string()
        } else {
            p.spec_sha256.join(" ")
        };
        out.push_str(&format!("# spec-sha256: {hashes}\n"));
        out.push_str(&format!("# command: {}\n", p.command));
        out.push_str(&format!("# version: speclab {}\n", p.version));
        if let Some(v) = self.verdict {
            out.push_str(&format!("# verdict: {}\n", if v { PASS } else { FAIL }));
        }
        Ok(out)
    }

    pub fn to_text(&self) -> Result<String> {
        let mut out = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        out.push('\n');
        Ok(out)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }
}

/// `[a, b, c]` rendered as `{a;b;c}` so it survives inside one CSV field.
pub fn set_cell<D: Display>(items: impl IntoIterator<Item = D>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(";"))
}
