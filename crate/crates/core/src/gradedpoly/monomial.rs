use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use smallvec::SmallVec;

/// Exponent vector of a monomial in `x0..xn`.
///
/// Monomials are ordered as they appear in slice bases: lower total degree
/// first, and within one degree lexicographically with `x0 > x1 > ...`, so
/// that `x0^d` opens every degree-`d` basis and `xn^d` closes it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Self {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Product, or `None` if some exponent would overflow.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = self.exps.clone();
        for (e, &o) in exps.iter_mut().zip(&other.exps) {
            *e = e.checked_add(o)?;
        }
        Some(Self { exps })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// Position of this monomial in `monomial_basis(nvars - 1, degree)`.
    pub fn index(&self) -> usize {
        monomial_index(&self.exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

const TABLE_ROWS: usize = 600;
const TABLE_COLS: usize = 24;

fn pascal() -> &'static [[u64; TABLE_COLS]] {
    static TABLE: OnceLock<Vec<[u64; TABLE_COLS]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![[0u64; TABLE_COLS]; TABLE_ROWS];
        for r in 0..TABLE_ROWS {
            t[r][0] = 1;
            for k in 1..TABLE_COLS.min(r + 1) {
                t[r][k] = t[r - 1][k - 1].saturating_add(t[r - 1][k]);
            }
        }
        t
    })
}

/// C(top, k) for nonnegative arguments, saturating at `u64::MAX`.
pub fn binomial(top: u64, k: u64) -> u64 {
    if k > top {
        return 0;
    }
    let k = k.min(top - k);
    if (top as usize) < TABLE_ROWS && (k as usize) < TABLE_COLS {
        return pascal()[top as usize][k as usize];
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (top - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of monomials of degree `v` in `n + 1` variables; 0 for `v < 0`.
pub fn basis_size(n: usize, v: i64) -> usize {
    if v < 0 {
        0
    } else {
        binomial(v as u64 + n as u64, n as u64) as usize
    }
}

fn monomial_index(exps: &[u16]) -> usize {
    let n = exps.len() - 1;
    let mut rem: u64 = exps.iter().map(|&e| e as u64).sum();
    let mut idx = 0u64;
    for (i, &e) in exps[..n].iter().enumerate() {
        let e = e as u64;
        let after = (n - i) as u64;
        if rem > e {
            idx += binomial(rem - e - 1 + after, after);
        }
        rem -= e;
    }
    idx as usize
}

/// Degree-`v` monomials in `x0..xn` in basis order; empty for `v < 0`.
pub fn monomial_basis(n: usize, v: i64) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(basis_size(n, v));
    if v < 0 {
        return out;
    }
    let mut exps = vec![0u16; n + 1];
    fill(&mut exps, 0, v as u16, &mut out);
    out
}

fn fill(exps: &mut [u16], i: usize, rem: u16, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = rem;
        out.push(Monomial::new(exps));
        return;
    }
    for e in (0..=rem).rev() {
        exps[i] = e;
        fill(exps, i + 1, rem - e, out);
    }
    exps[i] = 0;
}
