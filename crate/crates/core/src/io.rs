//! Plain-text interchange formats.
//!
//! * Generator matrices: a first line `n dim`, then `dim` lines of `2n`
//!   bits each, the ω-part followed by the ω̄-part.
//! * Inner code tables: one `n k d` record per line; `#` starts a comment
//!   and blank lines are ignored.
//! * Bound curves: CSV with header `R,delta` plus one column per overlay,
//!   six decimal places, preceded by `#` comment lines.

use std::fmt::Write as _;
use std::path::Path;

use crate::addcode::AdditiveCode;
use crate::bounds::{BoundCurve, InnerCodeTable, TableRecord};
use crate::error::{Error, Result};
use crate::gf4::SymplecticVec;

fn parse_err<T>(line: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("line {line}: {msg}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parse a generator matrix. The rows must be linearly independent.
pub fn parse_generators(text: &str) -> Result<AdditiveCode> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return Err(Error::Parse("empty generator file".into()));
    };
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("line {ln}: bad integer {t:?}")))
        })
        .collect::<Result<_>>()?;
    let [n, dim] = nums[..] else {
        return parse_err(ln, "header must be `n dim`");
    };
    let mut rows = Vec::with_capacity(dim);
    for (ln, line) in lines {
        let bits: String = line.split_whitespace().collect();
        if bits.len() != 2 * n {
            return parse_err(ln, format!("expected {} bits, found {}", 2 * n, bits.len()));
        }
        let mut v = Vec::with_capacity(2 * n);
        for c in bits.chars() {
            match c {
                '0' => v.push(false),
                '1' => v.push(true),
                _ => return parse_err(ln, format!("bad bit {c:?}")),
            }
        }
        rows.push(SymplecticVec::from_bits(&v[..n], &v[n..])?);
    }
    if rows.len() != dim {
        return Err(Error::Parse(format!(
            "header promises {dim} rows, found {}",
            rows.len()
        )));
    }
    AdditiveCode::new(n, rows)
}

/// Inverse of [`parse_generators`].
pub fn format_generators(code: &AdditiveCode) -> String {
    let n = code.len();
    let mut out = format!("{n} {}\n", code.dim());
    for g in code.generators() {
        out.extend((0..n).map(|i| if g.a_bit(i) { '1' } else { '0' }));
        out.extend((0..n).map(|i| if g.b_bit(i) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn read_generators(path: &Path) -> Result<AdditiveCode> {
    parse_generators(&read(path)?)
}

/// Parse an inner code table.
pub fn parse_table(text: &str) -> Result<InnerCodeTable> {
    let mut records = Vec::new();
    for (ln, line) in content_lines(text) {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("line {ln}: bad integer {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [n, k, d] = nums[..] else {
            return parse_err(ln, "expected `n k d`");
        };
        records.push(TableRecord { n, k, d });
    }
    InnerCodeTable::new(records)
}

pub fn read_table(path: &Path) -> Result<InnerCodeTable> {
    parse_table(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// An external curve merged into the CSV as an extra column.
#[derive(Debug, Clone, PartialEq)]
pub struct Overlay {
    pub name: String,
    /// `(R, δ)` points sorted by `R`.
    pub points: Vec<(f64, f64)>,
}

impl Overlay {
    /// Parse a two-column CSV (`R,<value>` header, `#` comments). The
    /// column is named `name`.
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = rdr
            .headers()
            .map_err(|e| Error::Parse(format!("overlay {name}: {e}")))?;
        if headers.len() != 2 || &headers[0] != "R" {
            return Err(Error::Parse(format!(
                "overlay {name}: header must be `R,<value>` (got {:?})",
                headers.iter().collect::<Vec<_>>()
            )));
        }
        let mut points = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| Error::Parse(format!("overlay {name}: {e}")))?;
            let num = |i: usize| -> Result<f64> {
                rec[i]
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| Error::Parse(format!("overlay {name}: bad number {:?}", &rec[i])))
            };
            points.push((num(0)?, num(1)?));
        }
        if points.is_empty() {
            return Err(Error::Parse(format!("overlay {name}: no data rows")));
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Overlay {
            name: name.to_string(),
            points,
        })
    }

    /// Read an overlay file, naming the column by the file stem.
    pub fn read(path: &Path) -> Result<Self> {
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::Parse(format!("{}: no file stem", path.display())))?;
        Self::parse(name, &read(path)?)
    }

    /// Linear interpolation at `r`; `None` outside the sampled range.
    pub fn at(&self, r: f64) -> Option<f64> {
        let pts = &self.points;
        let (first, last) = (pts[0], pts[pts.len() - 1]);
        if r < first.0 || r > last.0 {
            return None;
        }
        let i = pts.partition_point(|p| p.0 < r);
        if pts[i].0 == r {
            return Some(pts[i].1);
        }
        let (a, b) = (pts[i - 1], pts[i]);
        Some(a.1 + (b.1 - a.1) * (r - a.0) / (b.0 - a.0))
    }
}

/// Render a curve as CSV. Each `config` entry becomes a `# ` line.
pub fn format_curve(curve: &BoundCurve, config: &[String], overlays: &[Overlay]) -> Result<String> {
    let mut out = String::new();
    for c in config {
        writeln!(out, "# {c}").expect("writing to a String");
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["R".to_string(), "delta".to_string()];
    header.extend(overlays.iter().map(|o| o.name.clone()));
    w.write_record(&header).map_err(csv_err)?;
    for &(r, d) in &curve.samples {
        let mut row = vec![format!("{r:.6}"), format!("{d:.6}")];
        row.extend(
            overlays
                .iter()
                .map(|o| o.at(r).map(|v| format!("{v:.6}")).unwrap_or_default()),
        );
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    out.push_str(&String::from_utf8(bytes).expect("CSV output is ASCII"));
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Parse the `(R, delta)` columns of a curve CSV.
pub fn parse_curve(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(csv_err)?.clone();
    if headers.len() < 2 || &headers[0] != "R" || &headers[1] != "delta" {
        return Err(Error::Parse("curve header must start with `R,delta`".into()));
    }
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(csv_err)?;
            let f = |i: usize| {
                rec[i]
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("{:?}: {e}", &rec[i])))
            };
            Ok((f(0)?, f(1)?))
        })
        .collect()
}
