//! Append-only spectrum cache keyed by canonical graph6.
//!
//! Each record is one line `key \t spectrum \t energies \t checksum`, where
//! the spectrum is a comma-separated list of fixed-precision decimals, the
//! energies are `r:e_plus:e_minus` triples for the stored exponents, and the
//! checksum is a SHA-256 prefix of the first three fields. Records with a bad
//! checksum are ignored; a truncated final record is cut off on open.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use spectral_lab::enumeration::canonical_form;
use spectral_lab::graph6;
use spectral_lab::{energy, Graph, Spectrum};

/// Decimal places stored per eigenvalue.
pub const DECIMALS: usize = 12;
/// Exponents whose energies are stored with every record.
pub const STORED_EXPONENTS: [f64; 2] = [2.0, 3.0];

#[derive(Debug, Clone, PartialEq)]
pub struct CacheEntry {
    pub key: String,
    pub spectrum: Vec<f64>,
    /// `(r, e_plus, e_minus)` for each stored exponent.
    pub energies: Vec<(f64, f64, f64)>,
}

impl CacheEntry {
    pub fn new(key: String, spectrum: &Spectrum) -> CacheEntry {
        let energies = STORED_EXPONENTS
            .iter()
            .map(|&r| {
                let e = energy(spectrum, r);
                (r, e.e_plus, e.e_minus)
            })
            .collect();
        CacheEntry {
            key,
            spectrum: spectrum.values().to_vec(),
            energies,
        }
    }

    fn body(&self) -> String {
        let spectrum: Vec<String> = self.spectrum.iter().map(|x| fixed(*x)).collect();
        let energies: Vec<String> = self
            .energies
            .iter()
            .map(|(r, p, m)| format!("{r}:{}:{}", fixed(*p), fixed(*m)))
            .collect();
        format!("{}\t{}\t{}", self.key, spectrum.join(","), energies.join(";"))
    }

    /// The serialized record, without the trailing newline.
    pub fn to_line(&self) -> String {
        let body = self.body();
        format!("{body}\t{}", checksum(&body))
    }

    /// Parses and checks one record.
    pub fn from_line(line: &str) -> Result<CacheEntry, String> {
        let (body, sum) = line.rsplit_once('\t').ok_or("missing checksum")?;
        if checksum(body) != sum {
            return Err("checksum mismatch".into());
        }
        let mut parts = body.split('\t');
        let (Some(key), Some(spec), Some(en), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err("expected four tab-separated fields".into());
        };
        graph6::decode(key).map_err(|e| format!("bad key: {e}"))?;
        let num = |s: &str| s.parse::<f64>().map_err(|_| format!("bad number `{s}`"));
        let spectrum = if spec.is_empty() {
            Vec::new()
        } else {
            spec.split(',').map(num).collect::<Result<_, _>>()?
        };
        let energies = en
            .split(';')
            .map(|t| {
                let f: Vec<&str> = t.split(':').collect();
                match f[..] {
                    [r, p, m] => Ok((num(r)?, num(p)?, num(m)?)),
                    _ => Err(format!("bad energy triple `{t}`")),
                }
            })
            .collect::<Result<_, String>>()?;
        Ok(CacheEntry {
            key: key.to_string(),
            spectrum,
            energies,
        })
    }
}

fn fixed(x: f64) -> String {
    let s = format!("{x:.DECIMALS$}");
    // keep a single spelling of zero
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn checksum(body: &str) -> String {
    let digest = Sha256::digest(body.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Single-writer cache over one file.
pub struct SpectrumCache {
    path: PathBuf,
    entries: HashMap<String, CacheEntry>,
    file: File,
    pub hits: u64,
    pub misses: u64,
}

impl SpectrumCache {
    /// Opens (creating if needed) and loads the cache.
    pub fn open(path: &Path) -> io::Result<SpectrumCache> {
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(path)?;
        let mut text = String::new();
        file.read_to_string(&mut text)?;
        let mut entries = HashMap::new();
        let complete = text.rfind('\n').map_or(0, |i| i + 1);
        if complete < text.len() {
            log::warn!(
                "{}: dropping truncated final record ({} bytes)",
                path.display(),
                text.len() - complete
            );
            file.set_len(complete as u64)?;
            file.seek(SeekFrom::End(0))?;
        }
        for (i, line) in text[..complete].lines().enumerate() {
            match CacheEntry::from_line(line) {
                Ok(e) => {
                    entries.insert(e.key.clone(), e);
                }
                Err(why) => log::warn!("{}:{}: ignoring record: {why}", path.display(), i + 1),
            }
        }
        Ok(SpectrumCache {
            path: path.to_path_buf(),
            entries,
            file,
            hits: 0,
            misses: 0,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, key: &str) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    /// Appends a record; an existing key is left untouched.
    pub fn put(&mut self, entry: CacheEntry) -> io::Result<()> {
        if self.entries.contains_key(&entry.key) {
            return Ok(());
        }
        writeln!(self.file, "{}", entry.to_line())?;
        self.file.flush()?;
        self.entries.insert(entry.key.clone(), entry);
        Ok(())
    }

    /// The spectrum of `g`, from the cache or computed and stored.
    pub fn spectrum(&mut self, g: &Graph) -> Result<Spectrum, CacheError> {
        let key = canonical_form(g);
        if let Some(e) = self.get(&key) {
            let s = Spectrum::new(e.spectrum.clone());
            self.hits += 1;
            return Ok(s);
        }
        self.misses += 1;
        let s = spectral_lab::eigenvalues(g)?;
        // store what a later hit will return, so hits and misses agree
        let entry = CacheEntry::new(key, &s);
        let stored = Spectrum::new(entry.spectrum.iter().map(|x| fixed(*x).parse().expect("fixed decimal")).collect());
        self.put(entry)?;
        Ok(stored)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Spectral(#[from] spectral_lab::SpectralError),
}
