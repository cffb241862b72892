//! Random sweeps comparing the closed formula with degreewise linear algebra.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::analyze::{analyze, AnalyzeOptions};
use crate::complexes::{build_buchsbaum_rim, build_eagon_northcott};
use crate::detmodel::{random_matrix, DegreeData, HomogeneousMatrix};
use crate::error::{Error, Result};
use crate::exactalg::{Field, PrimeField};
use crate::gradedpoly::basis_size;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyParams {
    pub t: Vec<usize>,
    pub c: Vec<usize>,
    /// Allowed values of `n - c`.
    pub excess: Vec<usize>,
    /// Entry degrees are drawn from `1..=max_degree`.
    pub max_degree: i64,
    pub count: usize,
    pub seed: u64,
    /// Draws whose largest quotient-ring slice exceeds this dimension are redrawn.
    pub budget: usize,
}

impl Default for SurveyParams {
    fn default() -> Self {
        Self {
            t: vec![2, 3],
            c: vec![2, 3],
            excess: vec![1, 2],
            max_degree: 3,
            count: 20,
            seed: 1,
            budget: DEFAULT_SURVEY_BUDGET,
        }
    }
}

pub const DEFAULT_SURVEY_BUDGET: usize = 1200;

impl SurveyParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Precondition(msg.to_string()));
        if self.t.is_empty() || self.c.is_empty() || self.excess.is_empty() {
            return bad("t, c and n-c ranges must be nonempty");
        }
        if self.t.iter().any(|&t| t < 2) || self.c.iter().any(|&c| c < 2) {
            return bad("t and c must be at least 2");
        }
        if self.max_degree < 1 {
            return bad("max degree must be at least 1");
        }
        Ok(())
    }
}

/// Dimension of the largest slice of `R/I_t` that the tangent computations touch.
pub fn tangent_cost(dd: &DegreeData) -> usize {
    let (t, b) = (dd.t(), dd.b());
    let mut a = dd.a().to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let top: i64 = a.iter().take(t + 1).sum::<i64>() - b[0] - b.iter().sum::<i64>();
    basis_size(dd.n(), top)
}

/// Rough work estimate for the exactness checks of both resolutions: the sum,
/// over levels and degrees up to the default bound, of source times target
/// slice dimensions.
pub fn exactness_cost(dd: &DegreeData) -> u128 {
    let f = PrimeField::default();
    let probe = HomogeneousMatrix::from_fn(dd.clone(), f, false, |_, _| {
        crate::gradedpoly::Polynomial::zero(f, dd.n() + 1)
    })
    .expect("zero matrix is homogeneous");
    let n = dd.n();
    [build_eagon_northcott(&probe), build_buchsbaum_rim(&probe)]
        .iter()
        .map(|cx| {
            let (lo, hi) = (cx.lowest_degree(), cx.default_bound());
            (1..=cx.length())
                .flat_map(|k| (lo..=hi).map(move |v| (k, v)))
                .map(|(k, v)| {
                    cx.module(k).slice_dim(n, v) as u128 * cx.module(k - 1).slice_dim(n, v) as u128
                })
                .sum::<u128>()
        })
        .sum()
}

/// Draws degree data: `b` ascending from 0 in steps of 0 or 1, `a` ascending
/// with every entry degree in `1..=max_degree`.
pub fn draw_degree_data(rng: &mut ChaCha8Rng, p: &SurveyParams) -> DegreeData {
    let t = *p.t.choose(rng).expect("nonempty");
    let c = *p.c.choose(rng).expect("nonempty");
    let e = *p.excess.choose(rng).expect("nonempty");
    let mut b = vec![0i64];
    for _ in 1..t {
        let last = *b.last().unwrap();
        let step = if last + 1 < p.max_degree { rng.gen_range(0..=1) } else { 0 };
        b.push(last + step);
    }
    let lo = b[t - 1] + 1;
    let hi = b[0] + p.max_degree;
    let mut a: Vec<i64> = (0..t + c - 1).map(|_| rng.gen_range(lo..=hi)).collect();
    a.sort_unstable();
    DegreeData::new(c + e, b, a).expect("drawn degree data are valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub dd: DegreeData,
    pub matrix_seed: u64,
    pub formula: i128,
    pub ext1_r: usize,
    pub hom_ix_a: usize,
    pub ext1_a: usize,
    pub verdict: String,
}

impl SurveyRow {
    pub fn agrees(&self) -> bool {
        self.ext1_r as i128 == self.formula
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survey {
    pub rows: Vec<SurveyRow>,
    /// Draws rejected for exceeding the budget.
    pub redraws: usize,
}

impl Survey {
    pub fn agreements(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees()).count()
    }
}

const MAX_ATTEMPTS: usize = 10_000;

pub fn cmd_survey(p: &SurveyParams) -> Result<Survey> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let field = PrimeField::default();
    let mut rows = Vec::with_capacity(p.count);
    let mut redraws = 0;
    for _ in 0..p.count {
        let mut attempts = 0;
        let dd = loop {
            let dd = draw_degree_data(&mut rng, p);
            if tangent_cost(&dd) <= p.budget {
                break dd;
            }
            redraws += 1;
            attempts += 1;
            if attempts == MAX_ATTEMPTS {
                return Err(Error::Precondition(format!(
                    "no draw within the budget of {} after {MAX_ATTEMPTS} attempts",
                    p.budget
                )));
            }
        };
        let matrix_seed: u64 = rng.gen();
        let a = random_matrix(&dd, field, matrix_seed, false)?;
        rows.push(survey_row(&a, matrix_seed)?);
    }
    Ok(Survey { rows, redraws })
}

fn survey_row<F: Field>(a: &HomogeneousMatrix<F>, matrix_seed: u64) -> Result<SurveyRow> {
    let opts = AnalyzeOptions {
        seed: matrix_seed,
        exactness: false,
        column_deletion: false,
        ..AnalyzeOptions::default()
    };
    let an = analyze(a, &opts)?;
    Ok(SurveyRow {
        dd: a.degree_data().clone(),
        matrix_seed,
        formula: an.invariants.dim_w_formula,
        ext1_r: an.tangent.ext1_r,
        hom_ix_a: an.tangent.hom_ix_a,
        ext1_a: an.tangent.ext1_a,
        verdict: an.tangent.verdict.name().to_string(),
    })
}

impl fmt::Display for Survey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:>2}  {:<10}  {:<16}  {:>8}  {:>7}  {:>8}  {:>6}  {}",
            "#", "n", "b", "a", "lambda+K", "ext1_R", "hom_IX_A", "ext1_A", "verdict"
        )?;
        let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "{:>3}  {:>2}  {:<10}  {:<16}  {:>8}  {:>7}  {:>8}  {:>6}  {}{}",
                i + 1,
                r.dd.n(),
                list(r.dd.b()),
                list(r.dd.a()),
                r.formula,
                r.ext1_r,
                r.hom_ix_a,
                r.ext1_a,
                r.verdict,
                if r.agrees() { "" } else { "  MISMATCH" }
            )?;
        }
        writeln!(f, "redraws over budget {}", self.redraws)?;
        write!(f, "agreements {}/{}", self.agreements(), self.rows.len())
    }
}
