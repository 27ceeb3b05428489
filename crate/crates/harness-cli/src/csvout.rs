//! CSV and plot-data emission.
//!
//! CSV format, bit-specified: header `j6,exact,asym,abs_error,status`; `j6`
//! as an exact decimal (half-integers print as `.5`), floats in shortest
//! round-trip decimal, absent fields empty.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use angmom_exact::HalfInt;
use asymptotics::RegionStatus;
use thiserror::Error;

use crate::sweep::CompareRow;

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed csv at line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn j6_decimal(j6: HalfInt) -> String {
    if j6.twice() % 2 == 0 {
        format!("{}", j6.twice() / 2)
    } else {
        format!("{}.5", j6.twice() / 2)
    }
}

fn opt_f64(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x}"),
        None => String::new(),
    }
}

pub fn render_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from("j6,exact,asym,abs_error,status\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            j6_decimal(r.j6),
            opt_f64(r.exact),
            opt_f64(r.asym),
            opt_f64(r.abs_error),
            r.status
        );
    }
    out
}

pub fn emit_csv(rows: &[CompareRow], path: &Path) -> Result<(), EmitError> {
    write_all(path, render_csv(rows).as_bytes())
}

/// Two-column blocks per series (`exact`, `asym`, `abs_error`), blank-line
/// separated, plot-tool friendly.
pub fn render_plotdata(rows: &[CompareRow]) -> String {
    let mut out = String::new();
    let series: [(&str, fn(&CompareRow) -> Option<f64>); 3] = [
        ("exact", |r| r.exact),
        ("asym", |r| r.asym),
        ("abs_error", |r| r.abs_error),
    ];
    let mut first = true;
    for (name, get) in series {
        if !first {
            out.push('\n');
        }
        first = false;
        let _ = writeln!(out, "# {name}");
        for r in rows {
            if let Some(v) = get(r) {
                let _ = writeln!(out, "{} {}", j6_decimal(r.j6), v);
            }
        }
    }
    out
}

pub fn emit_plotdata(rows: &[CompareRow], path: &Path) -> Result<(), EmitError> {
    write_all(path, render_plotdata(rows).as_bytes())
}

fn write_all(path: &Path, bytes: &[u8]) -> Result<(), EmitError> {
    let mut f = std::fs::File::create(path).map_err(|source| EmitError::Io {
        path: path.display().to_string(),
        source,
    })?;
    f.write_all(bytes).map_err(|source| EmitError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Inverse of [`render_csv`]; used by the round-trip tests.
pub fn parse_csv(text: &str) -> Result<Vec<CompareRow>, EmitError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "j6,exact,asym,abs_error,status" {
                return Err(EmitError::Parse {
                    line: 1,
                    message: format!("unexpected header {line:?}"),
                });
            }
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 5 {
            return Err(EmitError::Parse {
                line: i + 1,
                message: format!("expected 5 fields, got {}", parts.len()),
            });
        }
        let j6: HalfInt = parts[0].parse().map_err(|e| EmitError::Parse {
            line: i + 1,
            message: e,
        })?;
        let num = |s: &str| -> Result<Option<f64>, EmitError> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse::<f64>().map(Some).map_err(|e| EmitError::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })
            }
        };
        let status = match parts[4] {
            "allowed" => RegionStatus::Allowed,
            "caustic" => RegionStatus::Caustic,
            "forbidden" => RegionStatus::Forbidden,
            other => {
                return Err(EmitError::Parse {
                    line: i + 1,
                    message: format!("unknown status {other:?}"),
                })
            }
        };
        rows.push(CompareRow {
            j6,
            exact: num(parts[1])?,
            asym: num(parts[2])?,
            abs_error: num(parts[3])?,
            status,
        });
    }
    Ok(rows)
}
