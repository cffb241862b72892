use std::collections::HashMap;

use crate::combinatorics::{multisets, subsets};
use crate::detmodel::HomogeneousMatrix;
use crate::exactalg::Field;
use crate::gradedpoly::Polynomial;

use super::module::{BasisLabel, GradedFreeModule};
use super::polymatrix::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// Resolution of `A = R / I_t`, with `C_0 = R`.
    EagonNorthcott,
    /// Resolution of `M = coker φ*`, with `C_0 = F*` and `C_1 = G*`.
    BuchsbaumRim,
    /// Anything else, e.g. a resolution tensored with `F`.
    Derived,
}

/// `C_m → ... → C_1 → C_0` with polynomial differentials `d_k : C_k → C_{k-1}`.
#[derive(Clone, Debug)]
pub struct GradedFreeComplex<F: Field> {
    kind: ComplexKind,
    n: usize,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<PolyMatrix<F>>,
}

/// A position/degree where homology was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub position: usize,
    pub degree: i64,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub lowest_degree: i64,
    pub bound: i64,
    /// `rank d_k` at each degree: `ranks[k - 1][v - lowest_degree]`.
    pub ranks: Vec<Vec<usize>>,
    pub failures: Vec<ExactnessFailure>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.failures.is_empty()
    }

    /// `rank d_k` in degree `v`, if it was computed.
    pub fn rank(&self, k: usize, v: i64) -> Option<usize> {
        if k == 0 || v < self.lowest_degree || v > self.bound {
            return None;
        }
        self.ranks.get(k - 1)?.get((v - self.lowest_degree) as usize).copied()
    }
}

impl<F: Field> GradedFreeComplex<F> {
    pub fn new(
        kind: ComplexKind,
        n: usize,
        modules: Vec<GradedFreeModule>,
        differentials: Vec<PolyMatrix<F>>,
    ) -> Self {
        assert_eq!(modules.len(), differentials.len() + 1);
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!(d.rows(), modules[k].rank());
            assert_eq!(d.cols(), modules[k + 1].rank());
        }
        Self {
            kind,
            n,
            modules,
            differentials,
        }
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the last module.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn module(&self, k: usize) -> &GradedFreeModule {
        &self.modules[k]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    /// `d_k : C_k → C_{k-1}` for `1 <= k <= length`.
    pub fn differential(&self, k: usize) -> &PolyMatrix<F> {
        &self.differentials[k - 1]
    }

    pub fn differential_mut(&mut self, k: usize) -> &mut PolyMatrix<F> {
        &mut self.differentials[k - 1]
    }

    /// Every entry of `d_k` has the degree forced by the twists.
    pub fn is_graded(&self) -> bool {
        (1..=self.length())
            .all(|k| self.differential(k).is_graded(self.module(k), self.module(k - 1)))
    }

    /// `d_{k-1} ∘ d_k = 0` for every `k`, as polynomial matrices.
    pub fn verify_dd_zero(&self) -> bool {
        (2..=self.length()).all(|k| {
            self.differential(k - 1)
                .mul(self.differential(k))
                .map(|m| m.is_zero())
                .unwrap_or(false)
        })
    }

    /// Alternating rank sum `Σ (-1)^k rank C_k`.
    pub fn euler_rank_sum(&self) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .map(|(k, m)| if k % 2 == 0 { m.rank() as i64 } else { -(m.rank() as i64) })
            .sum()
    }

    pub fn max_abs_twist(&self) -> i64 {
        self.modules
            .iter()
            .flat_map(|m| m.twists().iter().map(|e| e.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Default degree bound for exactness checks: largest twist magnitude plus two.
    pub fn default_bound(&self) -> i64 {
        self.max_abs_twist() + 2
    }

    /// Lowest degree in which some module has a generator.
    pub fn lowest_degree(&self) -> i64 {
        self.modules
            .iter()
            .flat_map(|m| m.twists().iter().map(|e| -e))
            .min()
            .unwrap_or(0)
    }

    /// `Σ_k (-1)^k dim (C_k)_v`: the Hilbert function of `H_0` when the complex is exact.
    pub fn hilbert_from_complex(&self, v: i64) -> i128 {
        self.modules
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let d = m.slice_dim(self.n, v) as i128;
                if k % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    /// `rank d_k` in degree `v`.
    pub fn slice_rank(&self, k: usize, v: i64) -> usize {
        self.differential(k)
            .slice_rank(self.module(k), self.module(k - 1), v)
    }

    /// `dim (C_0)_v - rank (d_1)_v`: the degree-`v` part of `H_0`, computed directly.
    pub fn cokernel_dim(&self, v: i64) -> usize {
        let top = self.module(0).slice_dim(self.n, v);
        if self.length() == 0 {
            return top;
        }
        top - self.slice_rank(1, v)
    }

    /// Checks `dim ker (d_k)_v = rank (d_{k+1})_v` for `1 <= k <= length` and
    /// every degree from the lowest generator degree up to `v_max`.
    pub fn verify_exactness(&self, v_max: i64) -> ExactnessReport {
        let lo = self.lowest_degree().min(v_max);
        let m = self.length();
        let mut ranks = vec![Vec::new(); m];
        for (k, row) in ranks.iter_mut().enumerate() {
            for v in lo..=v_max {
                row.push(self.slice_rank(k + 1, v));
            }
        }
        let mut failures = Vec::new();
        for k in 1..=m {
            for (idx, v) in (lo..=v_max).enumerate() {
                let kernel_dim = self.module(k).slice_dim(self.n, v) - ranks[k - 1][idx];
                let image_dim = if k < m { ranks[k][idx] } else { 0 };
                if kernel_dim != image_dim {
                    failures.push(ExactnessFailure {
                        position: k,
                        degree: v,
                        kernel_dim,
                        image_dim,
                    });
                }
            }
        }
        ExactnessReport {
            lowest_degree: lo,
            bound: v_max,
            ranks,
            failures,
        }
    }

    /// `C_• ⊗ F` with `F = ⊕ R(b_i)`; the differential acts blockwise on the first factor.
    pub fn tensor_free(&self, b: &[i64]) -> Self {
        let t = b.len();
        let modules: Vec<_> = self.modules.iter().map(|m| m.tensor_free(b)).collect();
        let differentials = self
            .differentials
            .iter()
            .map(|d| {
                let f = d.field();
                let mut out = PolyMatrix::zeros(f, d.nvars(), d.rows() * t, d.cols() * t);
                for r in 0..d.rows() {
                    for s in 0..d.cols() {
                        let p = d.get(r, s);
                        if p.is_zero() {
                            continue;
                        }
                        for i in 0..t {
                            out.set(r * t + i, s * t + i, p.clone());
                        }
                    }
                }
                out
            })
            .collect();
        Self::new(ComplexKind::Derived, self.n, modules, differentials)
    }
}

fn wedge_module(
    matrix_cols: usize,
    t: usize,
    wedge_size: usize,
    sym_size: usize,
    a: &[i64],
    b: &[i64],
) -> GradedFreeModule {
    let sb: i64 = b.iter().sum();
    let mut twists = Vec::new();
    let mut labels = Vec::new();
    for cols in subsets(matrix_cols, wedge_size) {
        for sym in multisets(t, sym_size) {
            let e = -cols.iter().map(|&j| a[j]).sum::<i64>() + sym.iter().map(|&i| b[i]).sum::<i64>() + sb;
            twists.push(e);
            labels.push(BasisLabel::Wedge {
                cols: cols.clone(),
                sym,
            });
        }
    }
    GradedFreeModule::new(twists, labels)
}

fn label_index(m: &GradedFreeModule) -> HashMap<&BasisLabel, usize> {
    m.labels().iter().enumerate().map(|(i, l)| (l, i)).collect()
}

/// Each distinct symmetric index is removed once with coefficient 1: the
/// terms `(α - i, i)` for the distinct `i` in `α`.
pub fn reduced_sum(alpha: &[usize]) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for (pos, &i) in alpha.iter().enumerate() {
        if pos > 0 && alpha[pos - 1] == i {
            continue;
        }
        let mut rest = alpha.to_vec();
        rest.remove(pos);
        out.push((rest, i));
    }
    out
}

/// `(T, α) ↦ Σ_{distinct i ∈ α} Σ_p (-1)^p f_{i,T_p} (T - T_p, α - i)`.
fn wedge_differential<F: Field>(
    a: &HomogeneousMatrix<F>,
    source: &GradedFreeModule,
    target: &GradedFreeModule,
) -> PolyMatrix<F> {
    let f = a.field();
    let index = label_index(target);
    let mut d = PolyMatrix::zeros(f, a.nvars(), target.rank(), source.rank());
    for (s, label) in source.labels().iter().enumerate() {
        let BasisLabel::Wedge { cols, sym } = label else {
            unreachable!("wedge module")
        };
        for (rest, i) in reduced_sum(sym) {
            for p in 0..cols.len() {
                let entry = a.entry(i, cols[p]);
                if entry.is_zero() {
                    continue;
                }
                let mut smaller = cols.clone();
                smaller.remove(p);
                let r = index[&BasisLabel::Wedge {
                    cols: smaller,
                    sym: rest.clone(),
                }];
                let term = if p % 2 == 0 { entry.clone() } else { entry.neg() };
                d.add_to(r, s, &term);
            }
        }
    }
    d
}

/// The Eagon-Northcott resolution of `R / I_t(A)`.
///
/// `C_0 = R`, and `C_{k+1}` for `0 <= k <= c-1` has basis `(T, α)` with `T`
/// a `(t+k)`-subset of columns and `α` a size-`k` multiset of rows, twisted
/// by `-Σ_T a + Σ_α b + Σ b`. `d_1` sends `(S, ∅)` to the maximal minor `m_S`.
pub fn build_eagon_northcott<F: Field>(a: &HomogeneousMatrix<F>) -> GradedFreeComplex<F> {
    let dd = a.degree_data();
    let (t, c, ncols) = (dd.t(), dd.c(), a.cols());
    let mut modules = vec![GradedFreeModule::new(vec![0], vec![BasisLabel::Unit])];
    for k in 0..c {
        modules.push(wedge_module(ncols, t, t + k, k, dd.a(), dd.b()));
    }
    let f = a.field();
    let mut d1 = PolyMatrix::zeros(f, a.nvars(), 1, modules[1].rank());
    for (s, minor) in a.maximal_minors().into_iter().enumerate() {
        d1.set(0, s, minor.poly);
    }
    let mut differentials = vec![d1];
    for k in 2..=c {
        differentials.push(wedge_differential(a, &modules[k], &modules[k - 1]));
    }
    GradedFreeComplex::new(ComplexKind::EagonNorthcott, dd.n(), modules, differentials)
}

/// The Buchsbaum-Rim resolution of `M = coker(φ* : G* → F*)`.
///
/// `C_0 = F*`, `C_1 = G*`, and `C_{k+2}` for `0 <= k <= c-2` has basis
/// `(T, α)` with `|T| = t+k+1`, `|α| = k`. `d_1 = A`; `d_2` sends `(T, ∅)` to
/// `Σ_l (-1)^{l+1} m_{T - T_l} y_{T_l}` (0-based `l`).
pub fn build_buchsbaum_rim<F: Field>(a: &HomogeneousMatrix<F>) -> GradedFreeComplex<F> {
    let dd = a.degree_data();
    let (t, c, ncols) = (dd.t(), dd.c(), a.cols());
    let f = a.field();
    let nvars = a.nvars();
    let head0 = GradedFreeModule::new(
        dd.b().iter().map(|&b| -b).collect(),
        (0..t).map(BasisLabel::Row).collect(),
    );
    let head1 = GradedFreeModule::new(
        dd.a().iter().map(|&x| -x).collect(),
        (0..ncols).map(BasisLabel::Column).collect(),
    );
    let mut modules = vec![head0, head1];
    for k in 0..=c - 2 {
        modules.push(wedge_module(ncols, t, t + k + 1, k, dd.a(), dd.b()));
    }

    let mut d1 = PolyMatrix::zeros(f, nvars, t, ncols);
    for i in 0..t {
        for j in 0..ncols {
            d1.set(i, j, a.entry(i, j).clone());
        }
    }

    let minors: HashMap<Vec<usize>, Polynomial<F>> = a
        .maximal_minors()
        .into_iter()
        .map(|m| (m.cols, m.poly))
        .collect();
    let mut d2 = PolyMatrix::zeros(f, nvars, ncols, modules[2].rank());
    for (s, label) in modules[2].labels().iter().enumerate() {
        let BasisLabel::Wedge { cols, .. } = label else {
            unreachable!("wedge module")
        };
        for l in 0..cols.len() {
            let mut rest = cols.clone();
            rest.remove(l);
            let m = &minors[&rest];
            d2.set(cols[l], s, if l % 2 == 1 { m.clone() } else { m.neg() });
        }
    }

    let mut differentials = vec![d1, d2];
    for k in 3..=c {
        differentials.push(wedge_differential(a, &modules[k], &modules[k - 1]));
    }
    GradedFreeComplex::new(ComplexKind::BuchsbaumRim, dd.n(), modules, differentials)
}
