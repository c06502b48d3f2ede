//! Newline-delimited checkpoint for exhaustive runs: a header naming the
//! run, then one line per completed work unit. A killed run resumes by
//! skipping every unit already on file, losing at most the units in flight.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use spectral_lab::verify::VerificationReport;

/// Everything that must match for a checkpoint to be reused.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunKey {
    pub side: String,
    pub exponent: f64,
    pub n_lo: usize,
    pub n_hi: usize,
    pub depth: Option<usize>,
    pub bound_shift: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Line {
    Header { checkpoint: u32, key: RunKey },
    Unit { unit: String, report: VerificationReport },
}

const VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CheckpointError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("checkpoint {path} belongs to a different run ({found:?}); remove it or pick another path")]
    Mismatch { path: String, found: RunKey },
    #[error("checkpoint {path} has no valid header")]
    Header { path: String },
}

/// Open checkpoint: the completed units and an append handle.
pub struct Checkpoint {
    file: File,
    pub done: BTreeMap<String, VerificationReport>,
}

impl Checkpoint {
    /// Opens `path`, creating it with a header for `key` when absent or
    /// empty. Unreadable trailing lines (a record cut by a kill) are
    /// truncated with a warning.
    pub fn open(path: &Path, key: &RunKey) -> Result<Checkpoint, CheckpointError> {
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(path)?;
        let mut text = String::new();
        file.read_to_string(&mut text)?;
        let shown = path.display().to_string();
        let mut done = BTreeMap::new();
        if text.trim().is_empty() {
            file.set_len(0)?;
            let header = Line::Header {
                checkpoint: VERSION,
                key: key.clone(),
            };
            writeln!(file, "{}", serde_json::to_string(&header).expect("header serializes"))?;
            file.flush()?;
            return Ok(Checkpoint { file, done });
        }
        let mut offset = 0usize;
        let mut good_end = 0usize;
        for (i, raw) in text.split_inclusive('\n').enumerate() {
            offset += raw.len();
            let parsed = if raw.ends_with('\n') {
                serde_json::from_str::<Line>(raw.trim_end()).ok()
            } else {
                None
            };
            match (i, parsed) {
                (0, Some(Line::Header { checkpoint, key: found })) if checkpoint == VERSION => {
                    if &found != key {
                        return Err(CheckpointError::Mismatch { path: shown, found });
                    }
                }
                (0, _) => return Err(CheckpointError::Header { path: shown }),
                (_, Some(Line::Unit { unit, report })) => {
                    done.insert(unit, report);
                }
                (_, _) => {
                    log::warn!("{shown}: discarding unreadable checkpoint tail from line {}", i + 1);
                    break;
                }
            }
            good_end = offset;
        }
        if good_end < text.len() {
            file.set_len(good_end as u64)?;
        }
        log::info!("{shown}: resuming with {} completed units", done.len());
        Ok(Checkpoint { file, done })
    }

    /// Records one completed unit.
    pub fn record(&mut self, unit: &str, report: &VerificationReport) -> io::Result<()> {
        let line = Line::Unit {
            unit: unit.to_string(),
            report: report.clone(),
        };
        writeln!(self.file, "{}", serde_json::to_string(&line).expect("report serializes"))?;
        self.file.flush()?;
        self.done.insert(unit.to_string(), report.clone());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_lab::verify::{run_unit, Side, WorkUnit};

    fn key() -> RunKey {
        RunKey {
            side: "negative".into(),
            exponent: 3.0,
            n_lo: 1,
            n_hi: 4,
            depth: None,
            bound_shift: 0.0,
        }
    }

    #[test]
    fn resume_and_truncate() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.ndjson");
        let report = run_unit(Side::Negative, 3.0, 0.0, &WorkUnit::Order(3)).unwrap();
        {
            let mut ck = Checkpoint::open(&path, &key()).unwrap();
            assert!(ck.done.is_empty());
            ck.record("3", &report).unwrap();
        }
        // simulate a kill in the middle of the next record
        std::fs::OpenOptions::new()
            .append(true)
            .open(&path)
            .unwrap()
            .write_all(b"{\"unit\":\"4\",\"rep")
            .unwrap();
        let ck = Checkpoint::open(&path, &key()).unwrap();
        assert_eq!(ck.done.len(), 1);
        assert_eq!(ck.done["3"], report);
        assert!(std::fs::read_to_string(&path).unwrap().ends_with("}\n"));

        let mut other = key();
        other.n_hi = 5;
        assert!(matches!(Checkpoint::open(&path, &other), Err(CheckpointError::Mismatch { .. })));
    }
}
