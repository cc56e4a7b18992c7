//! JSON-lines catalogue files, one entry per line.

use std::fs;
use std::path::Path;

use super::CatalogueEntry;
use crate::error::{Error, Result};

/// Parses a catalogue; blank lines are skipped and errors carry 1-based line numbers.
pub fn catalogue_from_str(text: &str) -> Result<Vec<CatalogueEntry>> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entry: CatalogueEntry =
            serde_json::from_str(line).map_err(|e| Error::Catalogue { line: i + 1, message: e.to_string() })?;
        entry.validate().map_err(|message| Error::Catalogue { line: i + 1, message })?;
        entries.push(entry);
    }
    Ok(entries)
}

pub fn catalogue_to_string(entries: &[CatalogueEntry]) -> Result<String> {
    let mut out = String::new();
    for entry in entries {
        out.push_str(&serde_json::to_string(entry)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn catalogue_load(path: impl AsRef<Path>) -> Result<Vec<CatalogueEntry>> {
    catalogue_from_str(&fs::read_to_string(path)?)
}

pub fn catalogue_store(entries: &[CatalogueEntry], path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, catalogue_to_string(entries)?)?;
    Ok(())
}
