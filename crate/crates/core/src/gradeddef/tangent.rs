//! The tangent space `₀Hom(I, A)` of the Hilbert scheme and the edge map from
//! perturbations of the matrix into it.

use std::collections::HashMap;

use super::slices::QuotientRingSlices;
use crate::complexes::build_eagon_northcott;
use crate::detmodel::HomogeneousMatrix;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::gradedpoly::{basis_size, monomial_basis, Monomial, Polynomial};

/// Writes `p·μ mod I_t` for `p·μ` of degree `v` into `out` (length `dim A_v`), adding.
fn add_reduced<F: Field>(
    ring: &QuotientRingSlices<F>,
    p: &Polynomial<F>,
    mu: &Monomial,
    scale: &F::Elem,
    v: i64,
    out: &mut [F::Elem],
) {
    let f = p.field();
    let slice = ring.slice(v);
    for (m, c) in p.terms() {
        slice.add_class(f, m.mul(mu).index(), &f.mul(c, scale), out);
    }
}

/// `dim ₀Hom(I_t, A)`: tuples `g_S ∈ A_{d_S}` killed by every Eagon-Northcott syzygy.
pub fn hom_ix_a_dim<F: Field>(a: &HomogeneousMatrix<F>, ring: &mut QuotientRingSlices<F>) -> usize {
    let n = a.degree_data().n();
    let f = a.field();
    let en = build_eagon_northcott(a);
    let gens = en.module(1);
    let syz = en.module(2);
    let d2 = en.differential(2);
    let gen_deg: Vec<i64> = gens.twists().iter().map(|&e| -e).collect();
    let syz_deg: Vec<i64> = syz.twists().iter().map(|&e| -e).collect();
    ring.prepare(gen_deg.iter().chain(&syz_deg).copied());

    let mut offsets = Vec::with_capacity(syz.rank());
    let mut total = 0;
    for &v in &syz_deg {
        offsets.push(total);
        total += ring.slice(v).dim();
    }
    let mut span = f.span_builder(total, false);
    let mut unknowns = 0;
    let mut col = vec![f.zero(); total];
    for (s, &d) in gen_deg.iter().enumerate() {
        let basis = monomial_basis(n, d);
        let slice = ring.slice(d);
        for &coord in slice.standard_coordinates() {
            unknowns += 1;
            col.iter_mut().for_each(|x| *x = f.zero());
            for (r, &v) in syz_deg.iter().enumerate() {
                let p = d2.get(s, r);
                if p.is_zero() {
                    continue;
                }
                let len = ring.slice(v).dim();
                add_reduced(ring, p, &basis[coord], &f.one(), v, &mut col[offsets[r]..offsets[r] + len]);
            }
            span.insert(&col);
        }
    }
    unknowns - span.rank()
}

/// Partial derivatives of the maximal minors with respect to the matrix entries.
///
/// `∂m_S/∂a_{ij} = (-1)^{i+q} det(A_S without row i and column j)` for `j = S_q`.
pub struct MinorDerivatives<F: Field> {
    minors: Vec<(Vec<usize>, i64)>,
    /// `(i, j) ↦ [(S index, signed cofactor)]`.
    cofactors: HashMap<(usize, usize), Vec<(usize, Polynomial<F>)>>,
}

impl<F: Field> MinorDerivatives<F> {
    pub fn new(a: &HomogeneousMatrix<F>) -> Self {
        let t = a.rows();
        let minors: Vec<(Vec<usize>, i64)> = a
            .maximal_minors()
            .into_iter()
            .map(|m| (m.cols, m.degree))
            .collect();
        let mut cache: HashMap<(usize, Vec<usize>), Polynomial<F>> = HashMap::new();
        let mut cofactors: HashMap<(usize, usize), Vec<(usize, Polynomial<F>)>> = HashMap::new();
        for (s, (cols, _)) in minors.iter().enumerate() {
            for (q, &j) in cols.iter().enumerate() {
                for i in 0..t {
                    let mut rest = cols.clone();
                    rest.remove(q);
                    let det = cache
                        .entry((i, rest.clone()))
                        .or_insert_with(|| {
                            let rows: Vec<usize> = (0..t).filter(|&r| r != i).collect();
                            a.minor(&rows, &rest)
                        })
                        .clone();
                    if det.is_zero() {
                        continue;
                    }
                    let signed = if (i + q) % 2 == 0 { det } else { det.neg() };
                    cofactors.entry((i, j)).or_default().push((s, signed));
                }
            }
        }
        Self { minors, cofactors }
    }

    pub fn minor_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.minors.iter().map(|&(_, d)| d)
    }

    pub fn cofactors(&self, i: usize, j: usize) -> &[(usize, Polynomial<F>)] {
        self.cofactors.get(&(i, j)).map_or(&[], Vec::as_slice)
    }
}

/// `Σ_{i,j} C(a_j - b_i + n, n)`: dimension of the space of degree-preserving perturbations.
pub fn perturbation_dim<F: Field>(a: &HomogeneousMatrix<F>) -> usize {
    let dd = a.degree_data();
    (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |j| dd.entry_degree(i, j)))
        .map(|d| basis_size(dd.n(), d))
        .sum()
}

fn slice_offsets<F: Field>(ring: &QuotientRingSlices<F>, degrees: &[i64]) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(degrees.len());
    let mut total = 0;
    for &d in degrees {
        offsets.push(total);
        total += ring.slice(d).dim();
    }
    (offsets, total)
}

/// Rank of the map sending a perturbation `A + εB` to the induced deformation
/// `(Σ_{ij} B_ij ∂m_S/∂a_ij mod I_t)_S` of the ideal.
pub fn edge_map_rank<F: Field>(a: &HomogeneousMatrix<F>, ring: &mut QuotientRingSlices<F>) -> usize {
    let dd = a.degree_data();
    let n = dd.n();
    let f = a.field();
    let der = MinorDerivatives::new(a);
    let degrees: Vec<i64> = der.minor_degrees().collect();
    ring.prepare(degrees.iter().copied());
    let (offsets, total) = slice_offsets(ring, &degrees);
    let mut span = f.span_builder(total, false);
    let mut col = vec![f.zero(); total];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for mu in monomial_basis(n, dd.entry_degree(i, j)) {
                col.iter_mut().for_each(|x| *x = f.zero());
                for (s, cof) in der.cofactors(i, j) {
                    let d = degrees[*s];
                    let len = ring.slice(d).dim();
                    add_reduced(ring, cof, &mu, &f.one(), d, &mut col[offsets[*s]..offsets[*s] + len]);
                }
                if span.insert(&col) && span.is_full() {
                    return span.rank();
                }
            }
        }
    }
    span.rank()
}

/// Image of the perturbation `b` (same shape and degrees as `a`) in `⊕_S A_{d_S}`.
pub fn edge_image<F: Field>(
    a: &HomogeneousMatrix<F>,
    b: &HomogeneousMatrix<F>,
    ring: &mut QuotientRingSlices<F>,
) -> Result<Vec<F::Elem>> {
    if a.degree_data() != b.degree_data() {
        return Err(Error::Shape("perturbation has different degree data".into()));
    }
    let f = a.field();
    let der = MinorDerivatives::new(a);
    let degrees: Vec<i64> = der.minor_degrees().collect();
    ring.prepare(degrees.iter().copied());
    let (offsets, total) = slice_offsets(ring, &degrees);
    let mut out = vec![f.zero(); total];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for (mu, c) in b.entry(i, j).terms() {
                for (s, cof) in der.cofactors(i, j) {
                    let d = degrees[*s];
                    let len = ring.slice(d).dim();
                    add_reduced(ring, cof, mu, c, d, &mut out[offsets[*s]..offsets[*s] + len]);
                }
            }
        }
    }
    Ok(out)
}

/// `₀Ext¹_A(M, M)`: the part of `₀Ext¹_R(M, M)` invisible to the ideal.
pub fn ext1_a_dim(ext1_r: usize, edge_rank: usize) -> Result<usize> {
    ext1_r.checked_sub(edge_rank).ok_or_else(|| {
        Error::Internal(format!(
            "edge map rank {edge_rank} exceeds dim Ext^1_R = {ext1_r}"
        ))
    })
}

