//! Append-only log of finished work units, one `<unit-id> <status>` line each.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};

pub struct Checkpoint {
    path: PathBuf,
    done: BTreeMap<String, String>,
    file: Mutex<File>,
}

impl Checkpoint {
    /// Opens or creates the log. A torn last line from a crash is ignored.
    pub fn open(path: &Path) -> Result<Checkpoint> {
        let io = |source| Error::Io { path: path.display().to_string(), source };
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(io(e)),
        };
        let mut done = BTreeMap::new();
        let complete = if text.ends_with('\n') { text.as_str() } else { text.rsplit_once('\n').map_or("", |(a, _)| a) };
        for (i, line) in complete.lines().enumerate() {
            let (id, status) = line.split_once(' ').ok_or_else(|| Error::Checkpoint {
                path: path.display().to_string(),
                line: i + 1,
                msg: "expected `<unit-id> <status>`".into(),
            })?;
            done.insert(id.to_string(), status.to_string());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        if complete.len() != text.len() {
            // Drop the torn tail by rewriting the complete prefix.
            file = File::create(path).map_err(io)?;
            file.write_all(complete.as_bytes()).map_err(io)?;
            if !complete.is_empty() && !complete.ends_with('\n') {
                file.write_all(b"\n").map_err(io)?;
            }
            file.sync_data().map_err(io)?;
        }
        Ok(Checkpoint { path: path.to_path_buf(), done, file: Mutex::new(file) })
    }

    pub fn get(&self, unit: &str) -> Option<&str> {
        self.done.get(unit).map(|s| s.as_str())
    }

    pub fn len(&self) -> usize {
        self.done.len()
    }

    pub fn is_empty(&self) -> bool {
        self.done.is_empty()
    }

    pub fn record(&self, unit: &str, status: &str) -> Result<()> {
        let io = |source| Error::Io { path: self.path.display().to_string(), source };
        let mut f = self.file.lock().expect("checkpoint writer poisoned");
        writeln!(f, "{unit} {status}").map_err(io)?;
        f.sync_data().map_err(io)
    }
}
