//! Flat-file scan cache: one b-file per scanned quantity, so the cache is
//! itself a publishable sequence file.
//!
//! Entries are only ever added. A cache that cannot be read or written is
//! reported as a warning by the caller; computation always proceeds.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::args::ScanKind;

#[derive(Debug)]
pub struct ScanCache {
    path: PathBuf,
    entries: BTreeMap<u64, u64>,
    added: usize,
}

impl ScanCache {
    /// Opens (or starts empty) the cache for one quantity inside `dir`.
    /// Returns the cache plus an optional warning describing a read problem.
    pub fn open(dir: &Path, what: ScanKind) -> (Self, Option<String>) {
        let path = dir.join(format!("{}.bfile", what.cache_stem()));
        let mut cache = ScanCache {
            path: path.clone(),
            entries: BTreeMap::new(),
            added: 0,
        };
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(err) if err.kind() == io::ErrorKind::NotFound => return (cache, None),
            Err(err) => {
                return (
                    cache,
                    Some(format!("cache {} unreadable: {err}", path.display())),
                )
            }
        };
        for (lineno, line) in text.lines().enumerate() {
            let mut fields = line.split_whitespace();
            let parsed = match (fields.next(), fields.next(), fields.next()) {
                (Some(n), Some(v), None) => n
                    .parse::<u64>()
                    .ok()
                    .zip(v.parse::<u64>().ok())
                    .filter(|&(n, v)| n > 0 && v > 0),
                _ => None,
            };
            match parsed {
                Some((n, v)) => {
                    cache.entries.insert(n, v);
                }
                None => {
                    cache.entries.clear();
                    return (
                        cache,
                        Some(format!(
                            "cache {} line {}: malformed entry; ignoring the file",
                            path.display(),
                            lineno + 1
                        )),
                    );
                }
            }
        }
        (cache, None)
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.entries.get(&n).copied()
    }

    pub fn insert(&mut self, n: u64, value: u64) {
        if self.entries.insert(n, value).is_none() {
            self.added += 1;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes the full sorted entry set back as a b-file (via a temp file
    /// and rename). No-op when nothing was added.
    pub fn persist(&self) -> io::Result<()> {
        if self.added == 0 {
            return Ok(());
        }
        if let Some(parent) = self.path.parent() {
            fs::create_dir_all(parent)?;
        }
        let tmp = self.path.with_extension("bfile.tmp");
        {
            let mut file = io::BufWriter::new(fs::File::create(&tmp)?);
            for (&n, &v) in &self.entries {
                writeln!(file, "{n} {v}")?;
            }
            file.flush()?;
        }
        fs::rename(&tmp, &self.path)
    }
}
