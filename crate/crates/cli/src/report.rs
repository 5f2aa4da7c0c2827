use std::io::Write;

use serde::Serialize;
use z4ca::codes::{Bound, DistanceReport};

/// Version of the [`RunReport`] JSON layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything a command did. Identical inputs give identical reports apart
/// from `wall_time_ms`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub passed: bool,
    pub results: serde_json::Value,
    pub wall_time_ms: u64,
    #[serde(skip)]
    text: Vec<String>,
}

impl RunReport {
    pub fn new(passed: bool) -> RunReport {
        RunReport {
            schema_version: REPORT_SCHEMA_VERSION,
            command: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            passed,
            results: serde_json::Value::Null,
            wall_time_ms: 0,
            text: Vec::new(),
        }
    }

    pub fn line(&mut self, s: String) {
        self.text.push(s);
    }

    /// Writes to stdout; a closed pipe is not an error.
    pub fn print(&self, json: bool) {
        let _ = self.write_to(&mut std::io::stdout().lock(), json);
    }

    fn write_to(&self, out: &mut impl Write, json: bool) -> std::io::Result<()> {
        if json {
            let s = serde_json::to_string_pretty(self).expect("serializable");
            return writeln!(out, "{s}");
        }
        for line in &self.text {
            writeln!(out, "{line}")?;
        }
        for d in &self.inputs {
            writeln!(out, "input   {} sha256={}", d.path, d.sha256)?;
        }
        for d in &self.outputs {
            writeln!(out, "output  {} sha256={}", d.path, d.sha256)?;
        }
        writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" })?;
        writeln!(out, "wall time {} ms", self.wall_time_ms)
    }
}

pub fn show_distance(d: &DistanceReport) -> String {
    match d.bound {
        Bound::Exact => d.value.to_string(),
        Bound::AtLeast => format!("≥{}", d.value),
    }
}
