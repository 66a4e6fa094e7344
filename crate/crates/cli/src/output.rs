use std::io::Write;
use std::path::Path;

use serde_json::Value;

use crate::config::Failure;
use crate::Format;

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// A report in both shapes; the format flag picks one.
pub struct Doc {
    pub json: Value,
    pub table: Table,
}

fn render(doc: &Doc, format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&doc.json).map_err(|e| Failure::io(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&doc.table.header).map_err(|e| Failure::io(e.to_string()))?;
            for row in &doc.table.rows {
                w.write_record(row).map_err(|e| Failure::io(e.to_string()))?;
            }
            w.into_inner().map_err(|e| Failure::io(e.to_string()))
        }
    }
}

/// Writes to `out` through a temporary file in the same directory, so readers never see a
/// partial report.
pub fn emit(doc: &Doc, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let bytes = render(doc, format)?;
    let Some(path) = out else {
        return std::io::stdout().write_all(&bytes).map_err(|e| Failure::io(e.to_string()));
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| Failure::io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(&bytes).map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}
