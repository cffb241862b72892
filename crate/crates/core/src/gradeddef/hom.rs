//! Degree-zero homomorphisms between the presentation modules of `M`.

use super::slices::{GradedModulePresentation, SliceBasis};
use crate::complexes::build_buchsbaum_rim;
use crate::detmodel::HomogeneousMatrix;
use crate::exactalg::Field;
use crate::gradedpoly::{basis_size, monomial_basis};

/// Offsets of a family of blocks `R_{deg}` laid end to end.
struct Blocks {
    offsets: Vec<usize>,
    total: usize,
}

impl Blocks {
    fn new(n: usize, degrees: impl IntoIterator<Item = i64>) -> Self {
        let mut offsets = Vec::new();
        let mut total = 0;
        for d in degrees {
            offsets.push(total);
            total += basis_size(n, d);
        }
        Self { offsets, total }
    }

    fn range(&self, k: usize, n: usize, d: i64) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k] + basis_size(n, d)
    }
}

/// `dim ₀Hom_R(M, M)` from the presentation: pairs `(α, β)` of degree-zero
/// endomorphisms of `F*` and `G*` with `α φ* = φ* β`, modulo `α = φ* γ`.
///
/// Equals `#α - rank L + rank L_β - rank Γ` where `L(α, β) = α φ* - φ* β`,
/// `L_β` is `L` restricted to `α = 0`, and `Γ(γ) = φ* γ`.
pub fn hom_mm_dim<F: Field>(a: &HomogeneousMatrix<F>) -> usize {
    let dd = a.degree_data();
    let (n, t, m) = (dd.n(), a.rows(), a.cols());
    let (av, bv) = (dd.a(), dd.b());
    let f = a.field();
    let one = f.one();
    let minus_one = f.neg(&one);

    // target of L: entries (i, l) in R_{a_l - b_i}
    let l_blocks = Blocks::new(n, (0..t).flat_map(|i| (0..m).map(move |l| av[l] - bv[i])));
    let l_block = |i: usize, l: usize| l_blocks.range(i * m + l, n, av[l] - bv[i]);

    let mut full = f.span_builder(l_blocks.total, false);
    let mut beta_only = f.span_builder(l_blocks.total, false);
    let mut alpha_count = 0;
    let mut col = vec![f.zero(); l_blocks.total];

    for i in 0..t {
        for k in 0..t {
            for mu in monomial_basis(n, bv[k] - bv[i]) {
                alpha_count += 1;
                col.iter_mut().for_each(|x| *x = f.zero());
                for l in 0..m {
                    let r = l_block(i, l);
                    a.entry(k, l).accumulate_times_monomial(&mu, &one, &mut col[r]);
                }
                full.insert(&col);
            }
        }
    }
    for j in 0..m {
        for l in 0..m {
            for mu in monomial_basis(n, av[l] - av[j]) {
                col.iter_mut().for_each(|x| *x = f.zero());
                for i in 0..t {
                    let r = l_block(i, l);
                    a.entry(i, j).accumulate_times_monomial(&mu, &minus_one, &mut col[r]);
                }
                full.insert(&col);
                beta_only.insert(&col);
            }
        }
    }

    // Γ: γ_jk in R_{b_k - a_j}, image entries (i, k) in R_{b_k - b_i}
    let g_blocks = Blocks::new(n, (0..t).flat_map(|i| (0..t).map(move |k| bv[k] - bv[i])));
    let mut gamma = f.span_builder(g_blocks.total, false);
    let mut gcol = vec![f.zero(); g_blocks.total];
    for j in 0..m {
        for k in 0..t {
            for mu in monomial_basis(n, bv[k] - av[j]) {
                gcol.iter_mut().for_each(|x| *x = f.zero());
                for i in 0..t {
                    let r = g_blocks.range(i * t + k, n, bv[k] - bv[i]);
                    a.entry(i, j).accumulate_times_monomial(&mu, &one, &mut gcol[r]);
                }
                gamma.insert(&gcol);
            }
        }
    }
    alpha_count + beta_only.rank() - full.rank() - gamma.rank()
}

/// Slice dimensions and the restriction map `₀Hom(F*, M) → ₀Hom(G*, M)`, `ψ ↦ ψ ∘ φ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionData {
    /// `Σ_i dim M_{b_i} = dim ₀Hom(F*, M)`.
    pub hom_f_m: usize,
    /// `Σ_j dim M_{a_j} = dim ₀Hom(G*, M)`.
    pub hom_g_m: usize,
    pub rank: usize,
}

impl RestrictionData {
    /// Kernel of the restriction: `₀Hom(M, M)`.
    pub fn hom_mm(&self) -> usize {
        self.hom_f_m - self.rank
    }

    /// Cokernel of the restriction: `₀Ext¹_R(M, M)`.
    pub fn ext1_r(&self) -> usize {
        self.hom_g_m - self.rank
    }
}

pub fn restriction_data<F: Field>(
    a: &HomogeneousMatrix<F>,
    m: &mut GradedModulePresentation<F>,
) -> RestrictionData {
    let dd = a.degree_data();
    let (n, t, cols) = (dd.n(), a.rows(), a.cols());
    let (av, bv) = (dd.a(), dd.b());
    let f = a.field();
    m.prepare(av.iter().chain(bv).copied());
    let hom_f_m: usize = bv.iter().map(|&b| m.slice(b).dim()).sum();
    let hom_g_m: usize = av.iter().map(|&x| m.slice(x).dim()).sum();

    let mut target_offsets = Vec::with_capacity(cols);
    let mut total = 0;
    for &x in av {
        target_offsets.push(total);
        total += m.slice(x).dim();
    }
    let target_bases: Vec<SliceBasis> = av
        .iter()
        .map(|&x| SliceBasis::new(m.target(), n, x))
        .collect();

    let mut span = f.span_builder(total, false);
    let mut col = vec![f.zero(); total];
    for i in 0..t {
        let source = m.slice(bv[i]);
        let basis = SliceBasis::new(m.target(), n, bv[i]);
        for &coord in source.standard_coordinates() {
            let (block, nu) = basis.locate(coord);
            col.iter_mut().for_each(|x| *x = f.zero());
            for j in 0..cols {
                let entry = a.entry(i, j);
                if entry.is_zero() {
                    continue;
                }
                let target = m.slice(av[j]);
                let start = target_bases[j].block(block).start;
                let out = &mut col[target_offsets[j]..target_offsets[j] + target.dim()];
                for (mono, c) in entry.terms() {
                    target.add_class(f, start + mono.mul(nu).index(), c, out);
                }
            }
            span.insert(&col);
        }
    }
    RestrictionData {
        hom_f_m,
        hom_g_m,
        rank: span.rank(),
    }
}

/// `Σ_j dim M_{a_j} - Σ_i dim M_{b_i} + dim ₀Hom(M, M)`, the latter from [`hom_mm_dim`].
pub fn ext1_r_dim<F: Field>(a: &HomogeneousMatrix<F>, m: &mut GradedModulePresentation<F>) -> usize {
    let dd = a.degree_data();
    let hom_g: usize = dd.a().iter().map(|&x| m.dim(x)).sum();
    let hom_f: usize = dd.b().iter().map(|&b| m.dim(b)).sum();
    hom_g + hom_mm_dim(a) - hom_f
}

/// `₀Ext¹_R(M, M)` as the first cohomology of `₀Hom(BR, M)`, where `BR` is the
/// Buchsbaum-Rim complex: `dim ker(₀Hom(G*, M) → ₀Hom(BR_2, M)) - rank ρ`.
///
/// Independent of the four-term sequence used by [`ext1_r_dim`]; it needs `BR`
/// to be exact at `G*`, which holds when `A` is standard determinantal.
pub fn ext1_r_from_resolution<F: Field>(
    a: &HomogeneousMatrix<F>,
    m: &mut GradedModulePresentation<F>,
) -> usize {
    let dd = a.degree_data();
    let n = dd.n();
    let f = a.field();
    let br = build_buchsbaum_rim(a);
    let d2 = br.differential(2);
    let level2: Vec<i64> = br.module(2).twists().iter().map(|&e| -e).collect();
    let av = dd.a();
    m.prepare(av.iter().chain(&level2).copied());

    let mut target_offsets = Vec::with_capacity(level2.len());
    let mut total = 0;
    for &v in &level2 {
        target_offsets.push(total);
        total += m.slice(v).dim();
    }
    let target_bases: Vec<SliceBasis> = level2
        .iter()
        .map(|&v| SliceBasis::new(m.target(), n, v))
        .collect();

    let mut span = f.span_builder(total, false);
    let mut col = vec![f.zero(); total];
    let mut hom_g_m = 0;
    for (j, &aj) in av.iter().enumerate() {
        let source = m.slice(aj);
        let basis = SliceBasis::new(m.target(), n, aj);
        hom_g_m += source.dim();
        for &coord in source.standard_coordinates() {
            let (block, nu) = basis.locate(coord);
            col.iter_mut().for_each(|x| *x = f.zero());
            for (y, &v) in level2.iter().enumerate() {
                let entry = d2.get(j, y);
                if entry.is_zero() {
                    continue;
                }
                let target = m.slice(v);
                let start = target_bases[y].block(block).start;
                let out = &mut col[target_offsets[y]..target_offsets[y] + target.dim()];
                for (mono, c) in entry.terms() {
                    target.add_class(f, start + mono.mul(nu).index(), c, out);
                }
            }
            span.insert(&col);
        }
    }
    let kernel = hom_g_m - span.rank();
    kernel - restriction_data(a, m).rank
}
