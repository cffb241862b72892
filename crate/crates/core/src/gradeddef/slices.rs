use std::collections::BTreeMap;

use crate::complexes::{BasisLabel, GradedFreeModule, PolyMatrix};
use crate::detmodel::HomogeneousMatrix;
use crate::exactalg::{Echelon, Field};
use crate::gradedpoly::{monomial_basis, Monomial};

/// One degree of a cokernel `target / image(map)`: a reduced echelon basis of
/// the image, whose non-pivot coordinates index a basis of the quotient.
#[derive(Clone, Debug)]
pub struct QuotientSlice<F: Field> {
    degree: i64,
    ambient: usize,
    free: Vec<usize>,
    /// Class of each ambient unit vector in the quotient basis. The echelon
    /// form is reduced, so a pivot row is supported on its pivot and free columns.
    classes: Vec<Vec<F::Elem>>,
}

impl<F: Field> QuotientSlice<F> {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Dimension of the ambient free-module slice.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn image_rank(&self) -> usize {
        self.ambient - self.free.len()
    }

    /// Ambient coordinates of the standard basis elements of the quotient.
    pub fn standard_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// Coordinates of the class of the ambient vector `v` in the quotient basis.
    pub fn normal_form(&self, field: F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.dim()];
        for (k, x) in v.iter().enumerate() {
            if !field.is_zero(x) {
                self.add_class(field, k, x, &mut out);
            }
        }
        out
    }

    /// `out += scale * [e_coord]`.
    pub fn add_class(&self, field: F, coord: usize, scale: &F::Elem, out: &mut [F::Elem]) {
        for (o, c) in out.iter_mut().zip(&self.classes[coord]) {
            if !field.is_zero(c) {
                *o = field.add(o, &field.mul(scale, c));
            }
        }
    }
}

fn quotient_slice<F: Field>(degree: i64, echelon: &Echelon<F>) -> QuotientSlice<F> {
    let f = echelon.field();
    let free = echelon.free_columns();
    let mut classes = vec![vec![f.zero(); free.len()]; echelon.len()];
    for (q, &j) in free.iter().enumerate() {
        classes[j][q] = f.one();
    }
    for (row, &pc) in echelon.rows().iter().zip(echelon.pivots()) {
        for (q, &j) in free.iter().enumerate() {
            classes[pc][q] = f.neg(&row[j]);
        }
    }
    QuotientSlice {
        degree,
        ambient: echelon.len(),
        free,
        classes,
    }
}

/// Degree slices of `coker(map : source → target)` for a graded map of free modules.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: Field> {
    n: usize,
    map: PolyMatrix<F>,
    source: GradedFreeModule,
    target: GradedFreeModule,
    slices: BTreeMap<i64, QuotientSlice<F>>,
}

impl<F: Field> GradedQuotient<F> {
    pub fn new(n: usize, map: PolyMatrix<F>, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        Self {
            n,
            map,
            source,
            target,
            slices: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    /// Computes and caches the slices in `degrees`.
    pub fn prepare(&mut self, degrees: impl IntoIterator<Item = i64>) {
        for v in degrees {
            if self.slices.contains_key(&v) {
                continue;
            }
            let len = self.target.slice_dim(self.n, v);
            let mut span = self.map.field().span_builder(len, true);
            self.map
                .for_each_slice_column(&self.source, &self.target, v, |col| {
                    span.insert(col);
                    !span.is_full()
                });
            let echelon = span.finish();
            self.slices.insert(v, quotient_slice(v, &echelon));
        }
    }

    /// A prepared slice; panics if `prepare` was not called for `v`.
    pub fn slice(&self, v: i64) -> &QuotientSlice<F> {
        self.slices
            .get(&v)
            .unwrap_or_else(|| panic!("slice {v} was not prepared"))
    }

    /// Dimension in degree `v`, preparing the slice if needed.
    pub fn dim(&mut self, v: i64) -> usize {
        self.prepare([v]);
        self.slice(v).dim()
    }
}

/// `M = coker(φ* : G* → F*)` with `F* = ⊕ R(-b_i)`, `G* = ⊕ R(-a_j)`.
pub type GradedModulePresentation<F> = GradedQuotient<F>;

/// `A = R / I_t` presented as the cokernel of the map sending `⊕_S R(-d_S)` to the minors.
pub type QuotientRingSlices<F> = GradedQuotient<F>;

pub fn module_presentation<F: Field>(a: &HomogeneousMatrix<F>) -> GradedModulePresentation<F> {
    let dd = a.degree_data();
    let rows = GradedFreeModule::new(
        dd.b().iter().map(|&b| -b).collect(),
        (0..a.rows()).map(BasisLabel::Row).collect(),
    );
    let cols = GradedFreeModule::new(
        dd.a().iter().map(|&x| -x).collect(),
        (0..a.cols()).map(BasisLabel::Column).collect(),
    );
    let mut map = PolyMatrix::zeros(a.field(), a.nvars(), a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            map.set(i, j, a.entry(i, j).clone());
        }
    }
    GradedQuotient::new(dd.n(), map, cols, rows)
}

pub fn quotient_ring<F: Field>(a: &HomogeneousMatrix<F>) -> QuotientRingSlices<F> {
    let minors = a.maximal_minors();
    let unit = GradedFreeModule::new(vec![0], vec![BasisLabel::Unit]);
    let gens = GradedFreeModule::new(
        minors.iter().map(|m| -m.degree).collect(),
        minors
            .iter()
            .map(|m| BasisLabel::Wedge {
                cols: m.cols.clone(),
                sym: Vec::new(),
            })
            .collect(),
    );
    let mut map = PolyMatrix::zeros(a.field(), a.nvars(), 1, minors.len());
    for (s, m) in minors.into_iter().enumerate() {
        map.set(0, s, m.poly);
    }
    GradedQuotient::new(a.degree_data().n(), map, gens, unit)
}

/// `dim M_v = dim F*_v - rank(φ*_v)`.
pub fn module_slice_dim<F: Field>(m: &mut GradedModulePresentation<F>, v: i64) -> usize {
    m.dim(v)
}

/// `dim A_v = C(v+n, n) - dim (I_t)_v`.
pub fn ring_slice_dim<F: Field>(q: &mut QuotientRingSlices<F>, v: i64) -> usize {
    q.dim(v)
}

/// Maps slice coordinates of a free module back to (summand, monomial).
#[derive(Clone, Debug)]
pub struct SliceBasis {
    pub degree: i64,
    pub offsets: Vec<usize>,
    pub monomials: Vec<Vec<Monomial>>,
}

impl SliceBasis {
    pub fn new(module: &GradedFreeModule, n: usize, v: i64) -> Self {
        let mut offsets = Vec::with_capacity(module.rank());
        let mut monomials = Vec::with_capacity(module.rank());
        let mut total = 0;
        for &e in module.twists() {
            offsets.push(total);
            let basis = monomial_basis(n, v + e);
            total += basis.len();
            monomials.push(basis);
        }
        Self {
            degree: v,
            offsets,
            monomials,
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.last().map_or(0, |&o| o + self.monomials.last().map_or(0, Vec::len))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Summand index and monomial of coordinate `coord`.
    pub fn locate(&self, coord: usize) -> (usize, &Monomial) {
        // empty summands share their offset with the next one, so the last
        // summand starting at or before `coord` is the one containing it
        let b = self.offsets.partition_point(|&o| o <= coord) - 1;
        (b, &self.monomials[b][coord - self.offsets[b]])
    }

    /// Range of coordinates belonging to summand `block`.
    pub fn block(&self, block: usize) -> std::ops::Range<usize> {
        self.offsets[block]..self.offsets[block] + self.monomials[block].len()
    }
}
