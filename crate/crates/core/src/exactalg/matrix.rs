use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Row-major dense matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: F, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: F, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().cloned().collect();
        Self::new(field, rows.len(), cols, data)
    }

    /// Convenience for tests and examples: integer entries reduced into the field.
    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, &rows)
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = columns.len();
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape("ragged columns".into()));
        }
        let mut m = Self::zeros(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F::Elem) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let cur = f.add(out.get(i, j), &f.mul(a, b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Exact rank; eliminates along whichever side is shorter.
    pub fn rank(&self) -> usize {
        if self.rows >= self.cols {
            super::rank_of(self.field, self.cols, (0..self.rows).map(|i| self.row(i)))
        } else {
            super::rank_of(self.field, self.rows, (0..self.cols).map(|j| self.column(j)))
        }
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let mut span = self.field.span_builder(self.cols, true);
        for i in 0..self.rows {
            if span.is_full() {
                break;
            }
            span.insert(self.row(i));
        }
        span.finish().orthogonal_complement()
    }
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field.tag())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.render(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};

    #[test]
    fn identity_rank_and_kernel() {
        let f = PrimeField::default();
        let id = DenseMatrix::identity(f, 3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn all_ones_rank_one() {
        let f = PrimeField::new(7).unwrap();
        let m = DenseMatrix::from_i64_rows(f, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = DenseMatrix::zeros(PrimeField::default(), 2, 5);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 5);
    }

    #[test]
    fn kernel_of_one_one_mod_five() {
        let f = PrimeField::new(5).unwrap();
        let m = DenseMatrix::from_i64_rows(f, &[&[1, 1]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![4, 1]]);
        assert_eq!(m.mul_vec(&k[0]).unwrap(), vec![0]);
    }

    #[test]
    fn rationals_rank() {
        let q = Rationals;
        let m = DenseMatrix::from_i64_rows(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(|x| q.is_zero(x)));
    }

    #[test]
    fn shape_errors() {
        let f = PrimeField::default();
        assert!(DenseMatrix::new(f, 2, 2, vec![0; 3]).is_err());
        let a = DenseMatrix::zeros(f, 2, 3);
        assert!(a.mul(&a).is_err());
    }
}
