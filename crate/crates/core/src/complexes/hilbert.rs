use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::complex::GradedFreeComplex;
use crate::exactalg::Field;

/// Univariate polynomial in `v` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, v: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(v));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    fn add_scaled(&mut self, other: &Self, scale: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * scale;
        }
        self.trim();
    }

    /// `C(v + e + n, n) = (v+e+1)(v+e+2)...(v+e+n) / n!` as a polynomial in `v`.
    pub fn shifted_binomial(e: i64, n: usize) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for i in 1..=n as i64 {
            // multiply by (v + e + i)
            let root = BigRational::from_integer(BigInt::from(e + i));
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] += c * &root;
                next[k + 1] += c;
            }
            coeffs = next;
        }
        let fact: BigInt = (1..=n as i64).map(BigInt::from).product();
        let inv = BigRational::new(BigInt::one(), fact);
        Self::from_coeffs(coeffs.into_iter().map(|c| c * &inv).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let coef = render_rational(&a);
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `p` or `p/q`.
pub fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `(v, H(v))` for `v` from 0 to the bound.
    pub values: Vec<(i64, i128)>,
    pub polynomial: RationalPolynomial,
    /// Degree of the Hilbert polynomial; `-1` for the empty scheme.
    pub scheme_dim: i64,
    /// `(deg p)!` times the leading coefficient; 0 for the empty scheme.
    pub degree: BigInt,
    /// `1 - p(0)`, only for curves.
    pub genus: Option<BigInt>,
    /// Smallest tabulated `v` from which `H` agrees with `p` up to the bound.
    pub stabilization: Option<i64>,
}

/// Hilbert polynomial `Σ_k (-1)^k Σ_e C(v + e + n, n)` of `H_0` of the complex,
/// with the values `H(v)` tabulated for `0 <= v <= bound`.
pub fn hilbert_polynomial<F: Field>(cx: &GradedFreeComplex<F>, bound: i64) -> HilbertData {
    let n = cx.n();
    let mut p = RationalPolynomial::zero();
    for (k, m) in cx.modules().iter().enumerate() {
        let sign = if k % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        for &e in m.twists() {
            p.add_scaled(&RationalPolynomial::shifted_binomial(e, n), &sign);
        }
    }
    let values: Vec<(i64, i128)> = (0..=bound.max(0))
        .map(|v| (v, cx.hilbert_from_complex(v)))
        .collect();
    let mut stabilization = None;
    for &(v, h) in values.iter().rev() {
        if p.eval(v) == BigRational::from_integer(BigInt::from(h)) {
            stabilization = Some(v);
        } else {
            break;
        }
    }
    let scheme_dim = p.degree();
    let degree = if scheme_dim < 0 {
        BigInt::zero()
    } else {
        let fact: BigInt = (1..=scheme_dim).map(BigInt::from).product();
        (p.leading_coeff() * BigRational::from_integer(fact)).to_integer()
    };
    let genus = (scheme_dim == 1).then(|| (BigRational::one() - p.eval(0)).to_integer());
    HilbertData {
        values,
        polynomial: p,
        scheme_dim,
        degree,
        genus,
        stabilization,
    }
}

impl HilbertData {
    pub fn degree_i64(&self) -> Option<i64> {
        self.degree.to_i64()
    }
}
