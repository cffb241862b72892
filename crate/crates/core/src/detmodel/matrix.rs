use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::degree::DegreeData;
use crate::combinatorics::subsets;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::gradedpoly::{monomial_basis, Polynomial};

/// The `t x (t+c-1)` matrix `A = (f_ij)` with `deg f_ij = a_j - b_i`.
///
/// Rows and columns are 0-based here, so row `i` carries degree `b[i]`
/// (the usual `b_{i+1}`) and column `j` carries `a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMatrix<F: Field> {
    dd: DegreeData,
    field: F,
    minimal: bool,
    entries: Vec<Vec<Polynomial<F>>>,
}

/// A maximal minor together with its column subset and degree `d_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor<F: Field> {
    pub cols: Vec<usize>,
    pub degree: i64,
    pub poly: Polynomial<F>,
}

impl<F: Field> HomogeneousMatrix<F> {
    pub fn new(
        dd: DegreeData,
        field: F,
        minimal: bool,
        entries: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        let (t, cols, nvars) = (dd.t(), dd.a().len(), dd.n() + 1);
        if entries.len() != t || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!("expected a {t}x{cols} matrix")));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                let err = |msg: String| Error::Entry { i: i + 1, j, msg };
                if f.nvars() != nvars {
                    return Err(err(format!("polynomial lives in {} variables", f.nvars())));
                }
                let d = dd.entry_degree(i, j);
                if !f.is_homogeneous_of(d) {
                    return Err(err(format!("{f} is not homogeneous of degree {d}")));
                }
                if minimal && d == 0 && !f.is_zero() {
                    return Err(err("minimal matrix needs zero entries where a_j = b_i".into()));
                }
            }
        }
        Ok(Self {
            dd,
            field,
            minimal,
            entries,
        })
    }

    /// Builds the matrix entry by entry from `(row, column)`.
    pub fn from_fn(
        dd: DegreeData,
        field: F,
        minimal: bool,
        mut f: impl FnMut(usize, usize) -> Polynomial<F>,
    ) -> Result<Self> {
        let entries = (0..dd.t())
            .map(|i| (0..dd.a().len()).map(|j| f(i, j)).collect())
            .collect();
        Self::new(dd, field, minimal, entries)
    }

    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.dd.a().len()
    }

    pub fn nvars(&self) -> usize {
        self.dd.n() + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i][j]
    }

    /// Copy with entry `(i, j)` replaced, re-validated.
    pub fn with_entry(&self, i: usize, j: usize, p: Polynomial<F>) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries[i][j] = p;
        Self::new(self.dd.clone(), self.field, self.minimal, entries)
    }

    /// Determinant of the square submatrix on `rows x cols`, by Laplace expansion.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        assert_eq!(rows.len(), cols.len());
        let f = self.field;
        match rows.len() {
            0 => Polynomial::one(f, self.nvars()),
            1 => self.entries[rows[0]][cols[0]].clone(),
            _ => {
                let mut acc = Polynomial::zero(f, self.nvars());
                let mut rest = Vec::with_capacity(cols.len() - 1);
                for (q, &col) in cols.iter().enumerate() {
                    let e = &self.entries[rows[0]][col];
                    if e.is_zero() {
                        continue;
                    }
                    rest.clear();
                    rest.extend(cols.iter().enumerate().filter(|&(p, _)| p != q).map(|(_, &c)| c));
                    let term = e.mul(&self.minor(&rows[1..], &rest));
                    acc = if q % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// Degree of the minor on `rows x cols`: `Σ a_cols - Σ b_rows`.
    pub fn minor_degree(&self, rows: &[usize], cols: &[usize]) -> i64 {
        cols.iter().map(|&j| self.dd.a()[j]).sum::<i64>()
            - rows.iter().map(|&i| self.dd.b()[i]).sum::<i64>()
    }

    /// The `C(t+c-1, t)` maximal minors, column subsets in lexicographic order.
    pub fn maximal_minors(&self) -> Vec<Minor<F>> {
        let rows: Vec<usize> = (0..self.rows()).collect();
        subsets(self.cols(), self.rows())
            .into_iter()
            .map(|cols| Minor {
                degree: self.minor_degree(&rows, &cols),
                poly: self.minor(&rows, &cols),
                cols,
            })
            .collect()
    }

    /// All `k x k` minors with their degrees (row subsets outer, column subsets inner).
    pub fn minors_of_size(&self, k: usize) -> Vec<(i64, Polynomial<F>)> {
        let mut out = Vec::new();
        for rows in subsets(self.rows(), k) {
            for cols in subsets(self.cols(), k) {
                out.push((self.minor_degree(&rows, &cols), self.minor(&rows, &cols)));
            }
        }
        out
    }

    /// The matrix with column `j` removed (codimension drops by one).
    pub fn delete_column(&self, j: usize) -> Result<Self> {
        let dd = self.dd.without_column(j)?;
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(q, _)| q != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        Self::new(dd, self.field, self.minimal, entries)
    }
}

/// Uniformly random entries of the prescribed degrees, deterministic in `seed`.
///
/// Coefficients are drawn row by row, column by column, monomial by monomial
/// in basis order. Entries of negative degree are zero, as are constant
/// entries when `minimal` is set.
pub fn random_matrix<F: Field>(
    dd: &DegreeData,
    field: F,
    seed: u64,
    minimal: bool,
) -> Result<HomogeneousMatrix<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if field.sample(&mut rng).is_none() {
        return Err(Error::InvalidField(format!(
            "random matrices need a prime field, not {}",
            field.tag()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = dd.n() + 1;
    HomogeneousMatrix::from_fn(dd.clone(), field, minimal, |i, j| {
        let d = dd.entry_degree(i, j);
        if d < 0 || (minimal && d == 0) {
            return Polynomial::zero(field, nvars);
        }
        let terms: Vec<_> = monomial_basis(dd.n(), d)
            .into_iter()
            .map(|m| (m, field.sample(&mut rng).expect("prime field")))
            .collect();
        Polynomial::from_terms(field, nvars, terms)
    })
}
