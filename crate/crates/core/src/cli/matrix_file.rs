//! Line-oriented matrix files.
//!
//! ```text
//! # twisted cubic
//! n 3
//! field 32003
//! b 0,0
//! a 1,1,1
//! entry 1 0 x0
//! entry 1 1 x1
//! ```
//!
//! Rows in `entry` lines are 1-based, columns 0-based. Omitted entries are 0.

use std::str::FromStr;

use crate::detmodel::{DegreeData, HomogeneousMatrix};
use crate::error::{Error, Result};
use crate::exactalg::{Field, PrimeField};
use crate::gradedpoly::{parse_polynomial, Polynomial};

/// `field <prime|Q>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub fn tag(&self) -> String {
        match self {
            Self::Prime(p) => p.to_string(),
            Self::Rationals => "Q".into(),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::Prime(PrimeField::DEFAULT_PRIME)
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Q" || s == "QQ" {
            return Ok(Self::Rationals);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| Error::InvalidField(format!("'{s}' is neither a prime nor Q")))?;
        Ok(Self::Prime(PrimeField::new(p)?.modulus()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryLine {
    pub line: usize,
    /// 1-based row.
    pub row: usize,
    /// 0-based column.
    pub col: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub n: usize,
    pub field: FieldSpec,
    pub b: Vec<i64>,
    pub a: Vec<i64>,
    pub minimal: bool,
    pub seed: Option<u64>,
    pub entries: Vec<EntryLine>,
}

pub fn parse_int_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("'{}' is not an integer", x.trim()))
        })
        .collect()
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut field = None;
        let mut b = None;
        let mut a = None;
        let mut minimal = false;
        let mut seed = None;
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |msg: String| Error::MatrixFile { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = content
                .split_once(char::is_whitespace)
                .map_or((content, ""), |(k, r)| (k, r.trim()));
            let once = |seen: bool| {
                if seen {
                    Err(err(format!("duplicate '{key}' line")))
                } else {
                    Ok(())
                }
            };
            match key {
                "n" => {
                    once(n.is_some())?;
                    n = Some(rest.parse::<usize>().map_err(|_| err(format!("bad n '{rest}'")))?);
                }
                "field" => {
                    once(field.is_some())?;
                    field = Some(rest.parse::<FieldSpec>().map_err(|e| err(e.to_string()))?);
                }
                "b" => {
                    once(b.is_some())?;
                    b = Some(parse_int_list(rest).map_err(err)?);
                }
                "a" => {
                    once(a.is_some())?;
                    a = Some(parse_int_list(rest).map_err(err)?);
                }
                "minimal" => {
                    if !rest.is_empty() {
                        return Err(err("'minimal' takes no argument".into()));
                    }
                    minimal = true;
                }
                "seed" => {
                    once(seed.is_some())?;
                    seed = Some(rest.parse::<u64>().map_err(|_| err(format!("bad seed '{rest}'")))?);
                }
                "entry" => {
                    let mut parts = rest.splitn(3, char::is_whitespace);
                    let row = parts.next().and_then(|s| s.parse::<usize>().ok());
                    let col = parts.next().and_then(|s| s.parse::<usize>().ok());
                    let poly = parts.next().map(str::trim).unwrap_or("");
                    match (row, col) {
                        (Some(row), Some(col)) if !poly.is_empty() => entries.push(EntryLine {
                            line,
                            row,
                            col,
                            text: poly.to_string(),
                        }),
                        _ => return Err(err("expected 'entry <row> <column> <polynomial>'".into())),
                    }
                }
                other => return Err(err(format!("unknown keyword '{other}'"))),
            }
        }
        let missing = |what: &str| Error::MatrixFile {
            line: text.lines().count(),
            msg: format!("missing '{what}' line"),
        };
        Ok(Self {
            n: n.ok_or_else(|| missing("n"))?,
            field: field.unwrap_or_default(),
            b: b.ok_or_else(|| missing("b"))?,
            a: a.ok_or_else(|| missing("a"))?,
            minimal,
            seed,
            entries,
        })
    }

    pub fn degree_data(&self) -> Result<DegreeData> {
        DegreeData::new(self.n, self.b.clone(), self.a.clone())
    }

    /// Builds the matrix over `field`, which must match the `field` line.
    pub fn build<F: Field>(&self, field: F) -> Result<HomogeneousMatrix<F>> {
        let dd = self.degree_data()?;
        let (t, cols) = (dd.t(), dd.a().len());
        let mut entries = vec![vec![Polynomial::zero(field, dd.n() + 1); cols]; t];
        let mut seen = vec![vec![None; cols]; t];
        for e in &self.entries {
            let err = |msg: String| Error::MatrixFile { line: e.line, msg };
            if e.row == 0 || e.row > t {
                return Err(err(format!("row {} outside 1..={t}", e.row)));
            }
            if e.col >= cols {
                return Err(err(format!("column {} outside 0..={}", e.col, cols - 1)));
            }
            if let Some(first) = seen[e.row - 1][e.col] {
                return Err(err(format!("entry ({}, {}) already set on line {first}", e.row, e.col)));
            }
            seen[e.row - 1][e.col] = Some(e.line);
            let p = parse_polynomial(&e.text, dd.n(), field).map_err(|x| err(x.to_string()))?;
            let d = dd.entry_degree(e.row - 1, e.col);
            if !p.is_homogeneous_of(d) {
                return Err(err(format!("{p} is not homogeneous of degree a_{} - b_{} = {d}", e.col, e.row)));
            }
            if self.minimal && d == 0 && !p.is_zero() {
                return Err(err("a minimal matrix has no nonzero constant entries".into()));
            }
            entries[e.row - 1][e.col] = p;
        }
        HomogeneousMatrix::new(dd, field, self.minimal, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: &str = "# twisted cubic\nn 3\nfield 32003\nb 0,0\na 1,1,1\n\
        entry 1 0 x0\nentry 1 1 x1\nentry 1 2 x2\n\
        entry 2 0 x1\nentry 2 1 x2\nentry 2 2 x3  # last\n";

    #[test]
    fn parses_twisted_cubic() {
        let mf = MatrixFile::parse(CUBIC).unwrap();
        assert_eq!(mf.n, 3);
        assert_eq!(mf.field, FieldSpec::Prime(32003));
        assert_eq!(mf.entries.len(), 6);
        let a = mf.build(PrimeField::default()).unwrap();
        assert_eq!(a.entry(1, 2).to_string(), "x3");
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let bad = CUBIC.replace("entry 2 1 x2", "entry 2 1 x2^2");
        let mf = MatrixFile::parse(&bad).unwrap();
        match mf.build(PrimeField::default()) {
            Err(Error::MatrixFile { line, .. }) => assert_eq!(line, 10),
            other => panic!("{other:?}"),
        }
        match MatrixFile::parse("n 3\nfield 4\n") {
            Err(Error::MatrixFile { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match MatrixFile::parse("n 3\nb 0,0\nwat\n") {
            Err(Error::MatrixFile { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            MatrixFile::parse("n 3\nb 0,0\n"),
            Err(Error::MatrixFile { .. })
        ));
    }

    #[test]
    fn omitted_entries_are_zero() {
        let mf = MatrixFile::parse("n 3\nb 0,0\na 1,1,1\nentry 1 0 x0\n").unwrap();
        let a = mf.build(PrimeField::default()).unwrap();
        assert!(a.entry(1, 1).is_zero());
        assert!(MatrixFile::parse("n 3\nfield Q\nb 0,0\na 1,1,1\n").is_ok());
    }
}
