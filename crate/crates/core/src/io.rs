//! CSV helpers for objective matrices and result files.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::Matrix;

/// Scientific notation with 17 significant digits; parses back bit-exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Rounds to `digits` significant digits and prints the shortest form.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() || v == 0.0 {
        return format!("{v}");
    }
    let s = format!("{:.*e}", digits.saturating_sub(1), v);
    let rounded: f64 = s.parse().unwrap_or(v);
    format!("{rounded}")
}

/// A parsed CSV table with a header row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Matrix,
}

impl Table {
    pub fn parse(text: &str, origin: &Path) -> Result<Self> {
        let csv_err = |msg: String| Error::Csv {
            path: origin.to_path_buf(),
            msg,
        };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<String> = lines
            .next()
            .ok_or_else(|| csv_err("empty file".into()))?
            .split(',')
            .map(|s| s.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|e| csv_err(format!("row {}: `{}`: {e}", i + 1, s.trim())))
                })
                .collect::<Result<Vec<f64>>>()?;
            if row.len() != header.len() {
                return Err(csv_err(format!(
                    "row {} has {} fields, header has {}",
                    i + 1,
                    row.len(),
                    header.len()
                )));
            }
            rows.push(row);
        }
        Ok(Self { header, rows })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    /// Columns named `f1..fM`; when the header has none, every column.
    pub fn objectives(&self) -> Matrix {
        let idx: Vec<usize> = self
            .header
            .iter()
            .enumerate()
            .filter(|(_, h)| is_objective_column(h))
            .map(|(i, _)| i)
            .collect();
        if idx.is_empty() {
            return self.rows.clone();
        }
        self.rows
            .iter()
            .map(|r| idx.iter().map(|&i| r[i]).collect())
            .collect()
    }

    /// Appends columns and renders the table back to CSV text.
    pub fn with_columns(&self, names: &[String], extra: &Matrix) -> String {
        let mut out = self.header.join(",");
        for n in names {
            out.push(',');
            out.push_str(n);
        }
        out.push('\n');
        for (row, add) in self.rows.iter().zip(extra) {
            let cells: Vec<String> = row.iter().chain(add).map(|v| fmt_f64(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn is_objective_column(name: &str) -> bool {
    name.strip_prefix('f')
        .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
}

/// Matrix as CSV with a `prefix1..prefixK` header.
pub fn matrix_to_csv(prefix: &str, m: &Matrix) -> String {
    let cols = m.first().map_or(0, Vec::len);
    let mut out: String = (1..=cols)
        .map(|i| format!("{prefix}{i}"))
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    for row in m {
        out.push_str(
            &row.iter()
                .map(|v| fmt_f64(*v))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_digits() {
        assert_eq!(fmt_sig(3.0, 12), "3");
        assert_eq!(fmt_sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(fmt_sig(2f64.sqrt(), 12), "1.41421356237");
    }

    #[test]
    fn objective_columns_are_selected() {
        let t = Table::parse("x1,f1,f2,g1,cv\n0.5,1,2,-1,0\n", Path::new("t.csv")).unwrap();
        assert_eq!(t.objectives(), vec![vec![1.0, 2.0]]);
        let t = Table::parse("a,b\n1,2\n", Path::new("t.csv")).unwrap();
        assert_eq!(t.objectives(), vec![vec![1.0, 2.0]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Table::parse("f1,f2\n1\n", Path::new("t.csv")).is_err());
        assert!(Table::parse("f1\nabc\n", Path::new("t.csv")).is_err());
    }
}
