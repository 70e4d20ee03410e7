//! Line-delimited JSON output.
//!
//! Every run prints a header line, one line per result record, then one line
//! per erratum note:
//!
//! ```text
//! {"command":"verify --degrees 2 ...","version":"0.1.0"}
//! {"pair":{"lhs":["1",...],"rhs":[...],"degrees":[2]},"residuals":{"2":"0"},"pass":true,"source":"..."}
//! {"erratum":{"subject":"...","printed":"...","resolution":"...","evidence":{...}}}
//! ```
//!
//! Entries and residuals are decimal strings (`"p/q"` for non-integers).
//! `matches_printed` appears only on records compared against a printed value.

use std::collections::BTreeMap;

use powersum_core::oracle::oracle_verify;
use powersum_core::{power_sum_residual, verify_pair, PowerSumPair};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairJson {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub pair: PairJson,
    pub residuals: BTreeMap<u32, String>,
    pub pass: bool,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_printed: Option<bool>,
}

impl Record {
    /// Residuals from the exact pipeline; `pass` requires both it and the
    /// integer oracle to accept.
    pub fn new(pair: &PowerSumPair, source: impl Into<String>) -> Record {
        let strs = |xs: &[powersum_core::Rational]| xs.iter().map(ToString::to_string).collect();
        let residuals = pair.degrees.iter().map(|&k| (k, power_sum_residual(pair, k).to_string())).collect();
        Record {
            pair: PairJson { lhs: strs(&pair.lhs), rhs: strs(&pair.rhs), degrees: pair.degrees.iter().copied().collect() },
            residuals,
            pass: verify_pair(pair).pass && oracle_verify(pair),
            source: source.into(),
            matches_printed: None,
        }
    }

    /// Also requires `pair` to equal `printed` (both already canonical).
    pub fn compared(pair: &PowerSumPair, printed: &PowerSumPair, source: impl Into<String>) -> Record {
        let mut r = Record::new(pair, source);
        let m = pair == printed;
        r.matches_printed = Some(m);
        r.pass &= m;
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Erratum {
    pub subject: String,
    pub printed: String,
    pub resolution: String,
    pub evidence: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct ErratumLine<'a> {
    erratum: &'a Erratum,
}

#[derive(Serialize)]
struct Header<'a> {
    command: &'a str,
    version: &'a str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub records: Vec<Record>,
    pub errata: Vec<Erratum>,
    /// Messages for the error stream.
    pub diagnostics: Vec<String>,
    /// Help or version text, printed instead of records.
    pub help: Option<String>,
    /// 0 all records pass, 1 mathematical failure, 2 usage error.
    pub exit_code: u8,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport { command, records: vec![], errata: vec![], diagnostics: vec![], help: None, exit_code: 0 }
    }

    pub fn usage_error(command: String, message: String) -> Self {
        RunReport { diagnostics: vec![message], exit_code: 2, ..RunReport::new(command) }
    }

    /// Sets the exit code from the records unless an error already set it.
    pub fn finish(mut self) -> Self {
        if self.exit_code == 0 && self.records.iter().any(|r| !r.pass) {
            self.exit_code = 1;
        }
        self
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(1 + self.records.len() + self.errata.len());
        let header = Header { command: &self.command, version: env!("CARGO_PKG_VERSION") };
        out.push(serde_json::to_string(&header).expect("serializable"));
        out.extend(self.records.iter().map(|r| serde_json::to_string(r).expect("serializable")));
        out.extend(self.errata.iter().map(|e| serde_json::to_string(&ErratumLine { erratum: e }).expect("serializable")));
        out
    }
}
