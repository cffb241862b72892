use std::fmt;

use crate::error::{Error, Result};

/// Numeric skeleton of a determinantal family: `P^n`, row degrees `b_1..b_t`
/// and column degrees `a_0..a_{t+c-2}`.
///
/// Vectors are stored 0-based: `b[0]` is `b_1`, `a[0]` is `a_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeData {
    n: usize,
    b: Vec<i64>,
    a: Vec<i64>,
}

impl DegreeData {
    pub fn new(n: usize, b: Vec<i64>, a: Vec<i64>) -> Result<Self> {
        let t = b.len();
        if t < 2 {
            return Err(Error::DegreeData(format!(
                "need at least 2 rows, got {t} (the complete-intersection case t = 1 is not supported)"
            )));
        }
        if a.len() < t + 1 {
            return Err(Error::DegreeData(format!(
                "{t} rows need at least {} column degrees for codimension c >= 2, got {}",
                t + 1,
                a.len()
            )));
        }
        if let Some(w) = b.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::DegreeData(format!(
                "b must be ascending (b_{} = {} > b_{} = {})",
                w + 1,
                b[w],
                w + 2,
                b[w + 1]
            )));
        }
        if let Some(w) = a.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::DegreeData(format!(
                "a must be ascending (a_{} = {} > a_{} = {})",
                w,
                a[w],
                w + 1,
                a[w + 1]
            )));
        }
        let c = a.len() + 1 - t;
        if n < c {
            return Err(Error::DegreeData(format!(
                "codimension {c} exceeds the ambient dimension n = {n}"
            )));
        }
        Ok(Self { n, b, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.b.len()
    }

    pub fn c(&self) -> usize {
        self.a.len() + 1 - self.b.len()
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// Dimension `n - c` of the determinantal schemes.
    pub fn scheme_dim(&self) -> usize {
        self.n - self.c()
    }

    /// Degree `a_j - b_i` of the entry in (0-based) row `i`, column `j`.
    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        self.a[j] - self.b[i]
    }

    /// Same data with every degree shifted by `s`.
    pub fn twisted(&self, s: i64) -> Self {
        Self {
            n: self.n,
            b: self.b.iter().map(|x| x + s).collect(),
            a: self.a.iter().map(|x| x + s).collect(),
        }
    }

    /// Data with column `j` removed; fails when the codimension would drop below 2.
    pub fn without_column(&self, j: usize) -> Result<Self> {
        if self.c() <= 2 {
            return Err(Error::Precondition(
                "deleting a column needs codimension c >= 3".into(),
            ));
        }
        if j >= self.a.len() {
            return Err(Error::IndexOutOfRange {
                index: j as i64,
                lo: 0,
                hi: self.a.len() as i64 - 1,
            });
        }
        let mut a = self.a.clone();
        a.remove(j);
        Self::new(self.n, self.b.clone(), a)
    }
}

impl fmt::Display for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "n={} b=({}) a=({})", self.n, join(&self.b), join(&self.a))
    }
}
