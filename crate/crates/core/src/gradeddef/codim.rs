//! Heuristic dimension estimates for vanishing loci, read off from Hilbert-function growth.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detmodel::HomogeneousMatrix;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::gradedpoly::{basis_size, monomial_basis, Polynomial};

/// Largest slice dimension the sectioned and column-deletion estimates will eliminate.
pub const DEFAULT_SLICE_CAP: usize = 2500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimEstimate {
    pub label: String,
    /// `m` such that the ideal was examined in `k[x0..xm]`.
    pub ambient: usize,
    /// Number of generic hyperplanes cut before examining (`n - m`).
    pub hyperplane_cuts: usize,
    /// `h(0), h(1), ...` as far as computed.
    pub values: Vec<usize>,
    /// Projective dimension of the examined locus, `-1` if empty; `None` when
    /// the slice cap was reached first.
    pub dim: Option<i64>,
    pub heuristic: bool,
}

impl CodimEstimate {
    /// Estimated dimension of the locus in the original space, `None` if
    /// undetermined. An empty section only bounds it: the value is then
    /// `hyperplane_cuts - 1`, an upper bound.
    pub fn dim_in_ambient(&self) -> Option<i64> {
        self.dim.map(|d| {
            if d < 0 {
                self.hyperplane_cuts as i64 - 1
            } else {
                d + self.hyperplane_cuts as i64
            }
        })
    }

    /// Whether the examined locus (the section, if any) is empty.
    pub fn examined_locus_empty(&self) -> Option<bool> {
        self.dim.map(|d| d < 0)
    }
}

/// `h(v) = dim (R / (gens))_v` for `v = 0..=v_max` in `k[x0..xn]`; stops early
/// once `h` vanishes (it then stays zero) or when a slice exceeds `cap`.
/// The flag reports whether the table reached `v_max` or zero.
fn hilbert_values<F: Field>(
    gens: &[Polynomial<F>],
    n: usize,
    v_max: i64,
    cap: Option<usize>,
) -> (Vec<usize>, bool) {
    let gens: Vec<(i64, &Polynomial<F>)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.homogeneous_degree().expect("homogeneous generator") as i64, g))
        .collect();
    let mut values = Vec::new();
    for v in 0..=v_max {
        let len = basis_size(n, v);
        if cap.is_some_and(|c| len > c) {
            return (values, false);
        }
        let f = match gens.first() {
            Some((_, g)) => g.field(),
            None => {
                values.push(len);
                continue;
            }
        };
        let mut span = f.span_builder(len, false);
        let one = f.one();
        'fill: for &(d, g) in &gens {
            for mu in monomial_basis(n, v - d) {
                let mut col = vec![f.zero(); len];
                g.accumulate_times_monomial(&mu, &one, &mut col);
                span.insert(&col);
                if span.is_full() {
                    break 'fill;
                }
            }
        }
        values.push(len - span.rank());
        if span.is_full() {
            return (values, true);
        }
    }
    (values, true)
}

/// Degree of eventual polynomial growth: the least `d` whose `(d+1)`-st
/// finite difference vanishes at the last two available points; `-1` when
/// the last value is zero.
pub fn estimate_from_values(values: &[usize], n: usize) -> i64 {
    match values.last() {
        None => return n as i64,
        Some(0) => return -1,
        Some(_) => {}
    }
    let mut diff: Vec<i128> = values.iter().map(|&x| x as i128).collect();
    for d in 0..n {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        if diff.len() < 2 {
            break;
        }
        if diff[diff.len() - 2..].iter().all(|&x| x == 0) {
            return d as i64;
        }
    }
    n as i64
}

/// Estimates the dimension of `V(gens) ⊂ P^n` from `h(v)` for `v <= v_max`.
pub fn codim_estimate<F: Field>(
    label: &str,
    gens: &[Polynomial<F>],
    n: usize,
    v_max: i64,
) -> Result<CodimEstimate> {
    let max_deg = max_degree(gens);
    if v_max < max_deg + n as i64 {
        return Err(Error::Precondition(format!(
            "v_max = {v_max} is below max generator degree {max_deg} + n = {}",
            max_deg + n as i64
        )));
    }
    let (values, _) = hilbert_values(gens, n, v_max, None);
    Ok(CodimEstimate {
        label: label.to_string(),
        ambient: n,
        hyperplane_cuts: 0,
        dim: Some(estimate_from_values(&values, n)),
        values,
        heuristic: true,
    })
}

fn max_degree<F: Field>(gens: &[Polynomial<F>]) -> i64 {
    gens.iter()
        .filter_map(Polynomial::homogeneous_degree)
        .max()
        .map_or(0, i64::from)
}

/// Degree past which an ideal with empty zero set in `P^m` contains every
/// form, for generators of degree at most `d`; also enough points to read
/// off growth of degree up to `m`.
fn examination_bound(d: i64, m: usize) -> i64 {
    let m = m as i64;
    ((m + 1) * (d - 1) + 1).max(d + m).max(m + 2)
}

/// Restricts `gens` to a generic `P^m ⊂ P^n` (substituting random linear forms
/// in `m + 1` variables, seeded) and estimates the dimension of the section.
pub fn sectioned_estimate<F: Field>(
    label: &str,
    gens: &[Polynomial<F>],
    n: usize,
    m: usize,
    seed: u64,
    cap: usize,
) -> CodimEstimate {
    let m = m.min(n);
    let restricted: Vec<Polynomial<F>> = match gens.first() {
        Some(g0) if m < n => {
            let f = g0.field();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let images: Vec<Polynomial<F>> = (0..=n)
                .map(|_| {
                    let mut p = Polynomial::zero(f, m + 1);
                    for k in 0..=m {
                        let c = f.sample(&mut rng).unwrap_or_else(|| f.from_i64(rng.gen_range(-50..=50)));
                        p = p.add(&Polynomial::var(f, m + 1, k).scale(&c));
                    }
                    p
                })
                .collect();
            gens.iter().map(|g| g.substitute(&images)).collect()
        }
        _ => gens.to_vec(),
    };
    let v_max = examination_bound(max_degree(gens), m);
    let (values, complete) = hilbert_values(&restricted, m, v_max, Some(cap));
    CodimEstimate {
        label: label.to_string(),
        ambient: m,
        hyperplane_cuts: n - m,
        dim: complete.then(|| estimate_from_values(&values, m)),
        values,
        heuristic: true,
    }
}

/// Estimate for `V(I_t)` from its Hilbert function `h(0..)`, as tabulated by
/// the Eagon-Northcott exactness check.
pub fn estimate_from_hilbert_values(label: &str, values: Vec<usize>, n: usize) -> CodimEstimate {
    CodimEstimate {
        label: label.to_string(),
        ambient: n,
        hyperplane_cuts: 0,
        dim: Some(estimate_from_values(&values, n)),
        values,
        heuristic: true,
    }
}

/// `V(I_t(A))` cut down to a generic `P^{c-1}`: empty exactly when the locus has
/// codimension `c` (it never has more).
pub fn maximal_minors_estimate<F: Field>(
    a: &HomogeneousMatrix<F>,
    seed: u64,
    cap: usize,
) -> CodimEstimate {
    let dd = a.degree_data();
    let gens: Vec<Polynomial<F>> = a
        .maximal_minors()
        .into_iter()
        .map(|m| m.poly)
        .filter(|p| !p.is_zero())
        .collect();
    sectioned_estimate("I_t(A)", &gens, dd.n(), dd.c() - 1, seed, cap)
}

/// `V(I_{t-1}(A))` cut down to a generic `P^c`: empty exactly when the locus has
/// codimension at least `c + 1`, which is the good-determinantal condition.
pub fn submaximal_minors_estimate<F: Field>(
    a: &HomogeneousMatrix<F>,
    seed: u64,
    cap: usize,
) -> CodimEstimate {
    let dd = a.degree_data();
    let gens: Vec<Polynomial<F>> = a
        .minors_of_size(a.rows() - 1)
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| !p.is_zero())
        .collect();
    sectioned_estimate("I_{t-1}(A)", &gens, dd.n(), dd.c(), seed, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnDeletion {
    pub column: usize,
    pub estimate: CodimEstimate,
}

impl ColumnDeletion {
    /// `Some(true)` when `V(I_{t-1}(B))` was found empty, `None` if skipped.
    pub fn empty(&self) -> Option<bool> {
        self.estimate.examined_locus_empty()
    }
}

/// For every column `j`, the estimate of `V(I_{t-1}(B))` in `P^n` where `B` is
/// `A` without column `j`.
pub fn column_deletion_report<F: Field>(
    a: &HomogeneousMatrix<F>,
    cap: usize,
) -> Result<Vec<ColumnDeletion>> {
    let dd = a.degree_data();
    if dd.c() < 3 {
        return Err(Error::Precondition(
            "column deletion needs codimension c >= 3".into(),
        ));
    }
    let n = dd.n();
    (0..a.cols())
        .map(|j| {
            let b = a.delete_column(j)?;
            let gens: Vec<Polynomial<F>> = b
                .minors_of_size(b.rows() - 1)
                .into_iter()
                .map(|(_, p)| p)
                .filter(|p| !p.is_zero())
                .collect();
            let v_max = examination_bound(max_degree(&gens), n);
            let (values, complete) = hilbert_values(&gens, n, v_max, Some(cap));
            Ok(ColumnDeletion {
                column: j,
                estimate: CodimEstimate {
                    label: format!("I_{{t-1}}(A without column {j})"),
                    ambient: n,
                    hyperplane_cuts: 0,
                    dim: complete.then(|| estimate_from_values(&values, n)),
                    values,
                    heuristic: true,
                },
            })
        })
        .collect()
}
