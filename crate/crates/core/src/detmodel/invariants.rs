//! Closed-form invariants of the family W(b; a).

use super::degree::DegreeData;
use crate::combinatorics::{multisets, subsets};
use crate::error::{Error, Result};

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

/// `C(top, bottom)` for `top >= 0`, and 0 for negative `top`.
pub fn binom_nonneg(top: i128, bottom: u32) -> Result<i128> {
    if top < 0 || (bottom as i128) > top {
        return Ok(0);
    }
    let k = (bottom as i128).min(top - bottom as i128);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(top - i)
            .ok_or_else(|| overflow("a binomial coefficient"))?
            / (i + 1);
    }
    Ok(acc)
}

fn check_index(idx: usize, lo: usize, hi: usize) -> Result<()> {
    if idx < lo || idx > hi {
        return Err(Error::IndexOutOfRange {
            index: idx as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    Ok(())
}

/// `ℓ_i = Σ_{j=0}^{t+i-2} a_j - Σ_k b_k` for `2 <= i <= c`.
pub fn ell(dd: &DegreeData, i: usize) -> Result<i128> {
    check_index(i, 2, dd.c())?;
    let t = dd.t();
    let sa: i128 = dd.a()[..=t + i - 2].iter().map(|&x| x as i128).sum();
    let sb: i128 = dd.b().iter().map(|&x| x as i128).sum();
    Ok(sa - sb)
}

fn pair_sum(xs: &[i64], ys: &[i64], n: u32) -> Result<i128> {
    let mut acc: i128 = 0;
    for &x in xs {
        for &y in ys {
            acc = acc
                .checked_add(binom_nonneg(x as i128 - y as i128 + n as i128, n)?)
                .ok_or_else(|| overflow("lambda_c"))?;
        }
    }
    Ok(acc)
}

/// `λ_c`: the four double binomial sums over degree differences, plus one.
pub fn lambda_c(dd: &DegreeData) -> Result<i128> {
    let n = dd.n() as u32;
    let (a, b) = (dd.a(), dd.b());
    let total = pair_sum(a, b, n)?
        .checked_add(pair_sum(b, a, n)?)
        .and_then(|s| s.checked_sub(pair_sum(a, a, n).ok()?))
        .and_then(|s| s.checked_sub(pair_sum(b, b, n).ok()?))
        .ok_or_else(|| overflow("lambda_c"))?;
    Ok(total + 1)
}

/// `λ(R)_2` for the polynomial ring, where `dim R_v = C(v+n, n)`; equal to `λ_2`.
pub fn lambda2_general(dd: &DegreeData) -> Result<i128> {
    if dd.c() != 2 {
        return Err(Error::Precondition(format!(
            "lambda2_general needs codimension 2, got {}",
            dd.c()
        )));
    }
    lambda_c(dd)
}

/// `h_{idx-3} = 2 a_{t+idx-2} - ℓ_idx + n` for `3 <= idx <= c`.
pub fn h(dd: &DegreeData, idx: usize) -> Result<i128> {
    check_index(idx, 3, dd.c())?;
    let t = dd.t();
    Ok(2 * dd.a()[t + idx - 2] as i128 - ell(dd, idx)? + dd.n() as i128)
}

/// `K_idx` for `3 <= idx <= c`, with `i = idx - 3`:
/// the sum over `r + s = i`, strictly increasing a-indices in `0..=t+i` and
/// weakly increasing b-indices, of `(-1)^{i-r} C(h_i + Σa + Σb, n)`.
pub fn k_term(dd: &DegreeData, idx: usize) -> Result<i128> {
    let hv = h(dd, idx)?;
    let i = idx - 3;
    let t = dd.t();
    let n = dd.n() as u32;
    let (a, b) = (dd.a(), dd.b());
    let mut total: i128 = 0;
    for r in 0..=i {
        let s = i - r;
        let sign: i128 = if s % 2 == 0 { 1 } else { -1 };
        let a_choices = subsets(t + i + 1, r);
        let b_choices = multisets(t, s);
        for sa in &a_choices {
            let asum: i128 = sa.iter().map(|&j| a[j] as i128).sum();
            for sb in &b_choices {
                let bsum: i128 = sb.iter().map(|&j| b[j] as i128).sum();
                let term = binom_nonneg(hv + asum + bsum, n)?;
                total = total
                    .checked_add(sign * term)
                    .ok_or_else(|| overflow("K"))?;
            }
        }
    }
    Ok(total)
}

/// `λ_c + K_3 + ... + K_c`.
pub fn dim_w_formula(dd: &DegreeData) -> Result<i128> {
    let mut total = lambda_c(dd)?;
    for idx in 3..=dd.c() {
        total = total
            .checked_add(k_term(dd, idx)?)
            .ok_or_else(|| overflow("dimW"))?;
    }
    Ok(total)
}

/// `a_{i-1} >= b_i` for all `i` and strictly for some `i`.
pub fn nonempty(dd: &DegreeData) -> bool {
    let pairs = dd.a().iter().zip(dd.b());
    let mut strict = false;
    for (&a, &b) in pairs {
        if a < b {
            return false;
        }
        strict |= a > b;
    }
    strict
}

/// The zero-dimensional family `W(β, β; β+1, ..., β+1)` in `P^c`.
pub fn exception_family(dd: &DegreeData) -> bool {
    let b = dd.b();
    dd.t() == 2
        && b[0] == b[1]
        && dd.a().iter().all(|&x| x == b[0] + 1)
        && dd.n() == dd.c()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    /// `ℓ_2..ℓ_c`.
    pub ell: Vec<i128>,
    /// `h_0..h_{c-3}`.
    pub h: Vec<i128>,
    pub lambda_c: i128,
    /// `K_3..K_c`.
    pub k: Vec<i128>,
    pub dim_w_formula: i128,
}

impl InvariantSet {
    pub fn compute(dd: &DegreeData) -> Result<Self> {
        let c = dd.c();
        let ell = (2..=c).map(|i| ell(dd, i)).collect::<Result<_>>()?;
        let h = (3..=c).map(|i| h(dd, i)).collect::<Result<_>>()?;
        let k: Vec<i128> = (3..=c).map(|i| k_term(dd, i)).collect::<Result<_>>()?;
        let lambda_c = lambda_c(dd)?;
        let dim_w_formula = k
            .iter()
            .try_fold(lambda_c, |acc, &x| acc.checked_add(x))
            .ok_or_else(|| overflow("dimW"))?;
        Ok(Self {
            ell,
            h,
            lambda_c,
            k,
            dim_w_formula,
        })
    }
}

/// Which known results and conjectures have their degree hypotheses met.
///
/// The bracket `[c/2]` in the conjectured degree conditions is read as the
/// floor. `formula_conjecture_hypotheses` additionally requires a nonempty family
/// outside the exceptional one, since the conjecture excludes both;
/// `dimension_theorem_applies` and `component_by_degrees` likewise require nonemptiness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub nonempty: bool,
    pub exception_family: bool,
    /// `2 <= c <= 5` and `n - c >= 1`.
    pub formula_range_known: bool,
    /// `a_0 > b_t`, and `a_{t+3} > a_{t-2}` when `c > 5`, else `a_{t+c-2} > a_{t-2}`.
    pub formula_known_by_degrees: bool,
    /// `a_{i-m} >= b_i` (strict when `n = c`) for `m <= i <= t`, `m = min(floor(c/2)+1, t)`.
    pub formula_conjecture_hypotheses: bool,
    /// `n - c >= 1` and `a_{i-2} >= b_i` for `2 <= i <= t`.
    pub dimension_theorem_applies: bool,
    /// `n - c >= 2` and `a_{i-m} >= b_i` for `m <= i <= t`, `m = min(3, t)`.
    pub component_by_degrees: bool,
    /// `n - c >= 2`, `c >= 5` and `a_0 > b_t`.
    pub component_conjecture_applies: bool,
}

/// `a_{i-m} >= b_i` (or `>` when `strict`) for `m <= i <= t`, 1-based row indexing.
fn shifted_dominance(dd: &DegreeData, m: usize, strict: bool) -> bool {
    let (a, b) = (dd.a(), dd.b());
    (m..=dd.t()).all(|i| {
        let (x, y) = (a[i - m], b[i - 1]);
        if strict {
            x > y
        } else {
            x >= y
        }
    })
}

impl HypothesisReport {
    pub fn evaluate(dd: &DegreeData) -> Self {
        let (n, t, c) = (dd.n(), dd.t(), dd.c());
        let (a, b) = (dd.a(), dd.b());
        let nonempty = nonempty(dd);
        let exception_family = exception_family(dd);
        let a0_dominates = a[0] > b[t - 1];
        let formula_known_by_degrees = a0_dominates
            && if c > 5 {
                a[t + 3] > a[t - 2]
            } else {
                a[t + c - 2] > a[t - 2]
            };
        let m22 = (c / 2 + 1).min(t);
        let formula_conjecture_hypotheses =
            nonempty && !exception_family && shifted_dominance(dd, m22, n == c);
        Self {
            nonempty,
            exception_family,
            formula_range_known: (2..=5).contains(&c) && n > c,
            formula_known_by_degrees,
            formula_conjecture_hypotheses,
            dimension_theorem_applies: nonempty && n > c && shifted_dominance(dd, 2, false),
            component_by_degrees: nonempty && n >= c + 2 && shifted_dominance(dd, 3.min(t), false),
            component_conjecture_applies: n >= c + 2 && c >= 5 && a0_dominates,
        }
    }
}
