use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::enumerate_acm_with_jobs;
use crate::acm::is_acm;
use crate::error::{Error, Result};
use crate::lie::FlagSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtlasFormat {
    Csv,
    JsonLines,
}

impl FromStr for AtlasFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(AtlasFormat::Csv),
            "json" | "jsonl" => Ok(AtlasFormat::JsonLines),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// One ACM weight on one space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub n: usize,
    pub k: usize,
    /// JSON array of the a_u.
    pub lambda: String,
    #[serde(rename = "M_num")]
    pub m_num: i64,
    #[serde(rename = "M_den")]
    pub m_den: i64,
    pub dim: usize,
    pub acm: bool,
}

/// Rows for every ACM weight on every space, spaces in the given order and
/// weights lexicographically.
pub fn atlas_rows(spaces: &[FlagSpace], jobs: usize) -> Result<Vec<AtlasRow>> {
    let mut rows = Vec::new();
    for space in spaces {
        for lambda in enumerate_acm_with_jobs(space, jobs)?.acm_weights {
            let verdict = is_acm(space, &lambda)?;
            let (m_num, m_den) = verdict.max.fraction();
            rows.push(AtlasRow {
                lie_type: space.lie_type().to_string(),
                n: space.n(),
                k: space.requested_k(),
                lambda: serde_json::to_string(&lambda).expect("serializable"),
                m_num,
                m_den,
                dim: verdict.dim,
                acm: verdict.is_acm,
            });
        }
    }
    Ok(rows)
}

pub fn write_rows<W: Write>(
    writer: W,
    rows: &[AtlasRow],
    format: AtlasFormat,
) -> std::io::Result<()> {
    match format {
        AtlasFormat::Csv => {
            let mut w = csv::Writer::from_writer(writer);
            for row in rows {
                w.serialize(row)?;
            }
            if rows.is_empty() {
                w.write_record(["type", "n", "k", "lambda", "M_num", "M_den", "dim", "acm"])?;
            }
            w.flush()
        }
        AtlasFormat::JsonLines => {
            let mut w = writer;
            for row in rows {
                serde_json::to_writer(&mut w, row)?;
                w.write_all(b"\n")?;
            }
            w.flush()
        }
    }
}

/// Writes the atlas for `spaces` to `path`, replacing any existing file.
pub fn emit_atlas(spaces: &[FlagSpace], path: &Path, format: AtlasFormat) -> Result<usize> {
    let rows = atlas_rows(spaces, 1)?;
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_rows(BufWriter::new(file), &rows, format).map_err(io_err)?;
    Ok(rows.len())
}
