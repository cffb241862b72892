//! Comparison map from the Eagon-Northcott resolution of `A` to the
//! Buchsbaum-Rim resolution of `M` tensored with `F`.

use std::collections::HashMap;

use crate::detmodel::HomogeneousMatrix;
use crate::exactalg::Field;
use crate::gradedpoly::Polynomial;

use super::complex::{build_buchsbaum_rim, build_eagon_northcott, reduced_sum, GradedFreeComplex};
use super::module::BasisLabel;
use super::polymatrix::PolyMatrix;

/// Per-level maps `τ_k : S_k → T_k`.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    pub source: GradedFreeComplex<F>,
    pub target: GradedFreeComplex<F>,
    pub maps: Vec<PolyMatrix<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    /// Levels `k` where `d^T_k ∘ τ_k ≠ τ_{k-1} ∘ d^S_k`.
    pub failed_squares: Vec<usize>,
    pub squares_checked: usize,
    /// Constant-term matrix of the top map has full column rank.
    pub top_injective: bool,
}

impl TauReport {
    pub fn passed(&self) -> bool {
        self.failed_squares.is_empty() && self.top_injective
    }
}

/// Builds `τ` level by level:
///
/// * `τ_0 : 1 ↦ Σ_i e_i ⊗ f_i`;
/// * `τ_1 : y_S ↦ Σ_{q,i} (-1)^{i+q} det(A_S without row i, column S_q) y_{S_q} ⊗ f_i`
///   (0-based `i`, `q`);
/// * `τ_{k+1} : (T, α) ↦ Σ_{distinct i ∈ α} (T, α - i) ⊗ f_i` for `k >= 1`.
pub fn build_tau<F: Field>(a: &HomogeneousMatrix<F>) -> ChainMap<F> {
    let dd = a.degree_data();
    let t = dd.t();
    let f = a.field();
    let nvars = a.nvars();
    let source = build_eagon_northcott(a);
    let target = build_buchsbaum_rim(a).tensor_free(dd.b());
    let levels = source.length();
    let one = Polynomial::one(f, nvars);
    let mut maps = Vec::with_capacity(levels + 1);

    let mut tau0 = PolyMatrix::zeros(f, nvars, target.module(0).rank(), 1);
    for i in 0..t {
        tau0.set(i * t + i, 0, one.clone());
    }
    maps.push(tau0);

    let mut tau1 = PolyMatrix::zeros(f, nvars, target.module(1).rank(), source.module(1).rank());
    let rows: Vec<usize> = (0..t).collect();
    for (s, label) in source.module(1).labels().iter().enumerate() {
        let BasisLabel::Wedge { cols, .. } = label else {
            unreachable!("wedge module")
        };
        for (q, &col) in cols.iter().enumerate() {
            let mut other_cols = cols.clone();
            other_cols.remove(q);
            for i in 0..t {
                let mut other_rows = rows.clone();
                other_rows.remove(i);
                let cof = a.minor(&other_rows, &other_cols);
                let entry = if (i + q) % 2 == 0 { cof } else { cof.neg() };
                tau1.set(col * t + i, s, entry);
            }
        }
    }
    maps.push(tau1);

    for k in 2..=levels {
        let tgt = target.module(k);
        let index: HashMap<&BasisLabel, usize> =
            tgt.labels().iter().enumerate().map(|(i, l)| (l, i)).collect();
        let src = source.module(k);
        let mut tau = PolyMatrix::zeros(f, nvars, tgt.rank(), src.rank());
        for (s, label) in src.labels().iter().enumerate() {
            let BasisLabel::Wedge { cols, sym } = label else {
                unreachable!("wedge module")
            };
            for (rest, i) in reduced_sum(sym) {
                let inner = BasisLabel::Wedge {
                    cols: cols.clone(),
                    sym: rest,
                };
                let r = index[&BasisLabel::Tensor {
                    inner: Box::new(inner),
                    row: i,
                }];
                tau.set(r, s, one.clone());
            }
        }
        maps.push(tau);
    }
    ChainMap {
        source,
        target,
        maps,
    }
}

/// Checks that every square commutes and that the top map stays injective
/// modulo the irrelevant ideal.
pub fn verify_tau<F: Field>(tm: &ChainMap<F>) -> TauReport {
    let levels = tm.maps.len() - 1;
    let mut failed_squares = Vec::new();
    for k in 1..=levels {
        let left = tm.target.differential(k).mul(&tm.maps[k]);
        let right = tm.maps[k - 1].mul(tm.source.differential(k));
        let ok = matches!((left, right), (Ok(l), Ok(r)) if l == r);
        if !ok {
            failed_squares.push(k);
        }
    }
    let top = tm.maps[levels].constant_terms();
    TauReport {
        failed_squares,
        squares_checked: levels,
        top_injective: top.rank() == top.cols(),
    }
}
