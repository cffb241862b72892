//! Compares the dimension formula with hom(I/I^2, A)_0 on random degree data.

use detdeform::cli::{cmd_survey, SurveyParams};

fn main() -> detdeform::Result<()> {
    let params = SurveyParams {
        count: 6,
        seed: 11,
        ..SurveyParams::default()
    };
    println!("{}", cmd_survey(&params)?);
    Ok(())
}
