use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, Field};
use crate::gradedpoly::{basis_size, monomial_basis, Polynomial};

use super::module::GradedFreeModule;

/// Matrix of polynomials, row-major; column `s` is the image of source generator `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    field: F,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(field: F, nvars: usize, rows: usize, cols: usize) -> Self {
        Self {
            field,
            nvars,
            rows,
            cols,
            entries: vec![Polynomial::zero(field, nvars); rows * cols],
        }
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, s: usize) -> &Polynomial<F> {
        &self.entries[r * self.cols + s]
    }

    pub fn set(&mut self, r: usize, s: usize, p: Polynomial<F>) {
        self.entries[r * self.cols + s] = p;
    }

    /// Adds `p` to entry `(r, s)`.
    pub fn add_to(&mut self, r: usize, s: usize, p: &Polynomial<F>) {
        let cur = &mut self.entries[r * self.cols + s];
        *cur = cur.add(p);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.nvars, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for s in 0..other.cols {
                    let b = other.get(k, s);
                    if !b.is_zero() {
                        out.add_to(r, s, &a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Whether every entry has the degree `e_target - e_source` forced by the twists.
    pub fn is_graded(&self, source: &GradedFreeModule, target: &GradedFreeModule) -> bool {
        (0..self.rows).all(|r| {
            (0..self.cols).all(|s| {
                self.get(r, s)
                    .is_homogeneous_of(target.twists()[r] - source.twists()[s])
            })
        })
    }

    /// Matrix of constant coefficients.
    pub fn constant_terms(&self) -> DenseMatrix<F> {
        let mut m = DenseMatrix::zeros(self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for s in 0..self.cols {
                m.set(r, s, self.get(r, s).constant_term());
            }
        }
        m
    }

    /// Calls `visit` with each column of the degree-`v` slice of this map,
    /// in order: source generators outer, monomial basis inner.
    /// Stops early when `visit` returns `false`.
    pub fn for_each_slice_column(
        &self,
        source: &GradedFreeModule,
        target: &GradedFreeModule,
        v: i64,
        mut visit: impl FnMut(&[F::Elem]) -> bool,
    ) {
        let f = self.field;
        let n = self.nvars - 1;
        let layout = target.slice_layout(n, v);
        let one = f.one();
        let mut col = vec![f.zero(); layout.total];
        for (s, &e) in source.twists().iter().enumerate() {
            for mu in monomial_basis(n, v + e) {
                col.iter_mut().for_each(|x| *x = f.zero());
                for r in 0..self.rows {
                    let p = self.get(r, s);
                    if p.is_zero() {
                        continue;
                    }
                    let block = layout.offsets[r];
                    let len = basis_size(n, v + target.twists()[r]);
                    p.accumulate_times_monomial(&mu, &one, &mut col[block..block + len]);
                }
                if !visit(&col) {
                    return;
                }
            }
        }
    }

    /// Rank of the degree-`v` slice.
    pub fn slice_rank(&self, source: &GradedFreeModule, target: &GradedFreeModule, v: i64) -> usize {
        let n = self.nvars - 1;
        let mut span = self.field.span_builder(target.slice_dim(n, v), false);
        self.for_each_slice_column(source, target, v, |col| {
            span.insert(col);
            !span.is_full()
        });
        span.rank()
    }

    /// Dense degree-`v` slice matrix.
    pub fn slice_matrix(
        &self,
        source: &GradedFreeModule,
        target: &GradedFreeModule,
        v: i64,
    ) -> DenseMatrix<F> {
        let n = self.nvars - 1;
        let mut cols = Vec::new();
        self.for_each_slice_column(source, target, v, |c| {
            cols.push(c.to_vec());
            true
        });
        DenseMatrix::from_columns(self.field, target.slice_dim(n, v), &cols)
            .expect("columns have the target slice length")
    }
}
