use super::field::Field;

/// Incrementally grows a row-echelon basis of the span of inserted vectors.
///
/// All degreewise ranks in the crate go through this interface: the slice
/// matrices are produced one column (or row) at a time and never need to be
/// materialized in full.
pub trait SpanBuilder<F: Field> {
    fn len(&self) -> usize;
    /// Adds `v` (of length [`SpanBuilder::len`]) and returns whether the span grew.
    fn insert(&mut self, v: &[F::Elem]) -> bool;
    fn rank(&self) -> usize;
    fn finish(self: Box<Self>) -> Echelon<F>;

    fn is_full(&self) -> bool {
        self.rank() == self.len()
    }
}

/// Row-echelon basis: rows sorted by pivot column, each pivot normalized to 1.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    len: usize,
    reduced: bool,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub(crate) fn from_parts(
        field: F,
        len: usize,
        reduced: bool,
        rows: Vec<Vec<F::Elem>>,
        pivots: Vec<usize>,
    ) -> Self {
        Self {
            field,
            len,
            reduced,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len).filter(|&j| !is_pivot[j]).collect()
    }

    /// Reduces `v` modulo the span, leaving zeros in every pivot coordinate.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let m = v[pc].clone();
            for j in pc..self.len {
                if !f.is_zero(&row[j]) {
                    v[j] = f.sub(&v[j], &f.mul(&m, &row[j]));
                }
            }
        }
    }

    /// Basis of `{ x : r·x = 0 for every basis row r }`, one vector per free column.
    pub fn orthogonal_complement(&self) -> Vec<Vec<F::Elem>> {
        assert!(self.reduced, "kernel extraction needs a reduced echelon form");
        let f = self.field;
        self.free_columns()
            .into_iter()
            .map(|free| {
                let mut x = vec![f.zero(); self.len];
                x[free] = f.one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    x[pc] = f.neg(&row[free]);
                }
                x
            })
            .collect()
    }
}

pub(crate) struct GenericSpan<F: Field> {
    field: F,
    len: usize,
    reduced: bool,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> GenericSpan<F> {
    pub(crate) fn new(field: F, len: usize, reduced: bool) -> Self {
        Self {
            field,
            len,
            reduced,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }
}

impl<F: Field> SpanBuilder<F> for GenericSpan<F> {
    fn len(&self) -> usize {
        self.len
    }

    fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.len);
        if self.rows.len() == self.len {
            return false;
        }
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[pc]) {
                continue;
            }
            let m = w[pc].clone();
            for j in pc..self.len {
                if !f.is_zero(&row[j]) {
                    w[j] = f.sub(&w[j], &f.mul(&m, &row[j]));
                }
            }
        }
        let Some(pc) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[pc]).expect("nonzero pivot");
        for x in w.iter_mut().skip(pc) {
            *x = f.mul(x, &inv);
        }
        if self.reduced {
            for row in self.rows.iter_mut() {
                if f.is_zero(&row[pc]) {
                    continue;
                }
                let m = row[pc].clone();
                for j in pc..self.len {
                    if !f.is_zero(&w[j]) {
                        row[j] = f.sub(&row[j], &f.mul(&m, &w[j]));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn finish(self: Box<Self>) -> Echelon<F> {
        let s = *self;
        Echelon::from_parts(s.field, s.len, s.reduced, s.rows, s.pivots)
    }
}
