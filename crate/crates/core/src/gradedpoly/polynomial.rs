use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{basis_size, monomial_basis, Monomial};
use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, Field};

/// Sparse polynomial in `x0..x_{nvars-1}`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        Self::monomial(field, c, Monomial::one(nvars))
    }

    pub fn one(field: F, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        Self::monomial(field, field.one(), Monomial::var(nvars, i))
    }

    pub fn monomial(field: F, c: F::Elem, m: Monomial) -> Self {
        let mut p = Self::zero(field, m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F::Elem)>>(
        field: F,
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        assert_eq!(m.nvars(), self.nvars, "monomial in the wrong ring");
        let f = self.field;
        if f.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur = f.add(cur, &c);
                if f.is_zero(cur) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Degree of a nonzero homogeneous polynomial; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Whether the polynomial may be declared homogeneous of degree `d`.
    /// The zero polynomial qualifies for every `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() as i64 == d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars);
        }
        Self {
            field: f,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), f.mul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), f.mul(c1, c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Adds `scale * self * m` into the dense coordinate vector `out`, whose
    /// coordinates are the basis monomials of one fixed degree.
    pub fn accumulate_times_monomial(&self, m: &Monomial, scale: &F::Elem, out: &mut [F::Elem]) {
        let f = self.field;
        for (k, c) in &self.terms {
            let idx = k.mul(m).index();
            out[idx] = f.add(&out[idx], &f.mul(c, scale));
        }
    }

    /// `self(images[0], ..., images[nvars-1])`, with the images living in another ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let f = self.field;
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Polynomial<F>>> =
            vec![vec![Polynomial::one(f, target)]; self.nvars];
        let mut out = Self::zero(f, target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(f, target, c.clone());
            for (k, &e) in m.exps().iter().enumerate() {
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[k][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> F::Elem {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Dense coordinates in the degree-`d` basis; terms of other degrees are ignored.
    pub fn coordinates(&self, d: i64) -> Vec<F::Elem> {
        let n = self.nvars - 1;
        let mut out = vec![self.field.zero(); basis_size(n, d)];
        for (m, c) in &self.terms {
            if m.degree() as i64 == d {
                out[m.index()] = c.clone();
            }
        }
        out
    }

    pub fn from_coordinates(field: F, nvars: usize, d: i64, coords: &[F::Elem]) -> Self {
        let basis = monomial_basis(nvars - 1, d);
        Self::from_terms(field, nvars, basis.into_iter().zip(coords.iter().cloned()))
    }
}

/// Matrix of multiplication by `p` (declared homogeneous of degree `d`) from
/// degree `v` to degree `v + d`; the column of a basis monomial `m` holds
/// the coordinates of `p * m`.
pub fn mult_slice_matrix<F: Field>(p: &Polynomial<F>, d: u32, v: i64) -> Result<DenseMatrix<F>> {
    if !p.is_homogeneous_of(d as i64) {
        return Err(Error::Precondition(format!(
            "polynomial is not homogeneous of degree {d}"
        )));
    }
    let f = p.field();
    let n = p.nvars() - 1;
    let rows = basis_size(n, v + d as i64);
    let source = monomial_basis(n, v);
    let one = f.one();
    let columns: Vec<Vec<F::Elem>> = source
        .iter()
        .map(|m| {
            let mut col = vec![f.zero(); rows];
            p.accumulate_times_monomial(m, &one, &mut col);
            col
        })
        .collect();
    DenseMatrix::from_columns(f, rows, &columns)
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = self.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut coef = f.render(c);
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if k == 0 {
                if negative {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_constant = m.degree() == 0;
            if coef == "1" && !is_constant {
                write!(out, "{m}")?;
            } else if is_constant {
                write!(out, "{coef}")?;
            } else {
                write!(out, "{coef}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
