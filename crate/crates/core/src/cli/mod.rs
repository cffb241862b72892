//! Front end shared by the `detdeform` binary and the examples: matrix files,
//! the analysis pipeline, random surveys, built-in reproductions and JSON reports.

mod analyze;
mod matrix_file;
mod report;
mod reproduce;
mod survey;

pub use analyze::{analyze, invariants_report, Analysis, AnalyzeOptions, ResolutionCheck};
pub use matrix_file::{parse_int_list, EntryLine, FieldSpec, MatrixFile};
pub use report::{big, int, render, Report};
pub use reproduce::{cmd_reproduce, Check, Reproduction, EXAMPLE_IDS};
pub use survey::{
    cmd_survey, draw_degree_data, exactness_cost, tangent_cost, Survey, SurveyParams, SurveyRow,
    DEFAULT_SURVEY_BUDGET,
};

use crate::detmodel::{random_matrix, DegreeData, HypothesisReport, InvariantSet};
use crate::error::{Error, Result};
use crate::exactalg::{PrimeField, Rationals};

pub fn cmd_invariants(n: usize, b: Vec<i64>, a: Vec<i64>) -> Result<Report> {
    let dd = DegreeData::new(n, b, a)?;
    let inv = InvariantSet::compute(&dd)?;
    let hyp = HypothesisReport::evaluate(&dd);
    Ok(invariants_report(dd.n(), dd.b(), dd.a(), &inv, &hyp))
}

/// Analyzes a matrix file. The file's `seed` line, when present, overrides `opts.seed`.
pub fn cmd_analyze_file(text: &str, opts: &AnalyzeOptions) -> Result<Analysis> {
    let mf = MatrixFile::parse(text)?;
    let mut opts = opts.clone();
    if let Some(s) = mf.seed {
        opts.seed = s;
    }
    match mf.field {
        FieldSpec::Prime(p) => analyze(&mf.build(PrimeField::new(p as u64)?)?, &opts),
        FieldSpec::Rationals => analyze(&mf.build(Rationals)?, &opts),
    }
}

/// Analyzes a random matrix with the given degree data; `opts.seed` seeds the matrix.
pub fn cmd_analyze_random(dd: &DegreeData, field: FieldSpec, opts: &AnalyzeOptions) -> Result<Analysis> {
    match field {
        FieldSpec::Prime(p) => {
            let a = random_matrix(dd, PrimeField::new(p as u64)?, opts.seed, false)?;
            analyze(&a, opts)
        }
        FieldSpec::Rationals => Err(Error::InvalidField(
            "random matrices need a prime field, not Q".into(),
        )),
    }
}
