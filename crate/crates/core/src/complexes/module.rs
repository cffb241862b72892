use std::fmt;

use crate::gradedpoly::basis_size;

/// Name of a basis element of a free module in one of the resolutions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Generator of `R` (the target of the Eagon-Northcott augmentation).
    Unit,
    /// `e_i`, dual basis of `F*` (0-based row).
    Row(usize),
    /// `y_j`, dual basis of `G*` (0-based column).
    Column(usize),
    /// Exterior generator on a column subset tensored with a symmetric
    /// monomial in the rows (weakly increasing list) and the fixed generator of `∧^t F`.
    Wedge { cols: Vec<usize>, sym: Vec<usize> },
    /// A label tensored with the basis vector `f_row` of `F`.
    Tensor { inner: Box<BasisLabel>, row: usize },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            Self::Unit => write!(f, "1"),
            Self::Row(i) => write!(f, "e{}", i + 1),
            Self::Column(j) => write!(f, "y{j}"),
            Self::Wedge { cols, sym } => write!(f, "y[{}]S[{}]", list(cols), list(sym)),
            Self::Tensor { inner, row } => write!(f, "{inner}*f{}", row + 1),
        }
    }
}

/// `⊕_l R(e_l)`; the generator of `R(e)` sits in degree `-e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
    labels: Vec<BasisLabel>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>, labels: Vec<BasisLabel>) -> Self {
        assert_eq!(twists.len(), labels.len());
        Self { twists, labels }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// `Σ_l C(v + e_l + n, n)`.
    pub fn slice_dim(&self, n: usize, v: i64) -> usize {
        self.twists.iter().map(|&e| basis_size(n, v + e)).sum()
    }

    /// Offsets of each summand's block inside the degree-`v` slice.
    pub fn slice_layout(&self, n: usize, v: i64) -> SliceLayout {
        let mut offsets = Vec::with_capacity(self.rank());
        let mut total = 0;
        for &e in &self.twists {
            offsets.push(total);
            total += basis_size(n, v + e);
        }
        SliceLayout { offsets, total }
    }

    /// `self ⊗ F` with `F = ⊕ R(b_i)`; basis index `r * t + i`.
    pub fn tensor_free(&self, b: &[i64]) -> Self {
        let t = b.len();
        let mut twists = Vec::with_capacity(self.rank() * t);
        let mut labels = Vec::with_capacity(self.rank() * t);
        for (e, label) in self.twists.iter().zip(&self.labels) {
            for (i, &bi) in b.iter().enumerate() {
                twists.push(e + bi);
                labels.push(BasisLabel::Tensor {
                    inner: Box::new(label.clone()),
                    row: i,
                });
            }
        }
        Self { twists, labels }
    }
}

/// Block offsets of a free module's degree-`v` slice.
#[derive(Clone, Debug)]
pub struct SliceLayout {
    pub offsets: Vec<usize>,
    pub total: usize,
}
