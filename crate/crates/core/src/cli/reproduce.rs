//! Built-in instances with known answers.

use super::analyze::{analyze, AnalyzeOptions, Analysis};
use super::matrix_file::MatrixFile;
use crate::detmodel::{random_matrix, DegreeData};
use crate::error::{Error, Result};
use crate::exactalg::PrimeField;

pub const EXAMPLE_IDS: [&str; 3] = ["5.10", "twisted-cubic", "exception-points"];

const TWISTED_CUBIC: &str = "\
n 3
field 32003
b 0,0
a 1,1,1
entry 1 0 x0
entry 1 1 x1
entry 1 2 x2
entry 2 0 x1
entry 2 1 x2
entry 2 2 x3
";

/// One expected value and what was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub found: String,
}

impl Check {
    fn new(name: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Self {
            name,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.found
    }
}

pub struct Reproduction {
    pub id: &'static str,
    pub analysis: Analysis,
    pub checks: Vec<Check>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn genus(an: &Analysis) -> String {
    an.hilbert
        .genus
        .as_ref()
        .map_or_else(|| "none".to_string(), ToString::to_string)
}

pub fn cmd_reproduce(id: &str, timing: bool) -> Result<Reproduction> {
    let field = PrimeField::default();
    let opts = AnalyzeOptions {
        timing,
        ..AnalyzeOptions::default()
    };
    match id {
        "5.10" => {
            let dd = DegreeData::new(4, vec![0, 0], vec![2, 2, 2, 2])?;
            let a = random_matrix(&dd, field, opts.seed, false)?;
            let an = analyze(&a, &opts)?;
            let t = &an.tangent;
            let checks = vec![
                Check::new("lambda_c", 101, an.invariants.lambda_c),
                Check::new("K_3", 0, an.invariants.k[0]),
                Check::new("dimW_formula", 101, an.invariants.dim_w_formula),
                Check::new("hilbert_polynomial", "32*v - 64", an.hilbert.polynomial.to_string()),
                Check::new("degree", 32, &an.hilbert.degree),
                Check::new("genus", 65, genus(&an)),
                Check::new("ext1_R", 101, t.ext1_r),
                Check::new("hom_IX_A", 101, t.hom_ix_a),
                Check::new("ext1_A", 0, t.ext1_a),
                Check::new("verdict", "COMPONENT_CERTIFIED", t.verdict.name()),
            ];
            Ok(Reproduction {
                id: EXAMPLE_IDS[0],
                analysis: an,
                checks,
            })
        }
        "twisted-cubic" => {
            let a = MatrixFile::parse(TWISTED_CUBIC)?.build(field)?;
            let an = analyze(&a, &opts)?;
            let t = &an.tangent;
            let checks = vec![
                Check::new("lambda_c", 12, an.invariants.lambda_c),
                Check::new("hilbert_polynomial", "3*v + 1", an.hilbert.polynomial.to_string()),
                Check::new("degree", 3, &an.hilbert.degree),
                Check::new("genus", 0, genus(&an)),
                Check::new("hom_IX_A", 12, t.hom_ix_a),
                Check::new("ext1_A", 0, t.ext1_a),
                Check::new("verdict", "COMPONENT_CERTIFIED", t.verdict.name()),
            ];
            Ok(Reproduction {
                id: EXAMPLE_IDS[1],
                analysis: an,
                checks,
            })
        }
        "exception-points" => {
            let dd = DegreeData::new(3, vec![0, 0], vec![1, 1, 1, 1])?;
            let a = random_matrix(&dd, field, opts.seed, false)?;
            let an = analyze(&a, &opts)?;
            let checks = vec![
                Check::new("exception_family", true, an.hypotheses.exception_family),
                Check::new("dimW_formula", 13, an.invariants.dim_w_formula),
                Check::new("verdict", "GRADALG_CAVEAT", an.tangent.verdict.name()),
            ];
            Ok(Reproduction {
                id: EXAMPLE_IDS[2],
                analysis: an,
                checks,
            })
        }
        other => Err(Error::Precondition(format!(
            "unknown example '{other}' (known: {})",
            EXAMPLE_IDS.join(", ")
        ))),
    }
}
