//! Degree-data invariants and the formula for dim W(b; a).
//!
//! ```text
//! cargo run --example invariants
//! ```

use detdeform::detmodel::{nonempty, DegreeData, HypothesisReport, InvariantSet};

fn main() -> detdeform::Result<()> {
    let cases = [
        (4, vec![0, 0], vec![2, 2, 2, 2]),
        (3, vec![0, 0], vec![1, 1, 1]),
        (5, vec![0, 0, 1], vec![2, 2, 2, 3, 3]),
        (3, vec![0, 0], vec![1, 1, 1, 1]),
    ];
    for (n, b, a) in cases {
        let dd = DegreeData::new(n, b, a)?;
        let inv = InvariantSet::compute(&dd)?;
        let hyp = HypothesisReport::evaluate(&dd);
        println!("{dd}");
        println!("  ell      {:?}", inv.ell);
        println!("  h        {:?}", inv.h);
        println!("  lambda_c {}", inv.lambda_c);
        println!("  K        {:?}", inv.k);
        println!("  dim W    {}", inv.dim_w_formula);
        println!("  nonempty {}  exception family {}", nonempty(&dd), hyp.exception_family);
        println!("  component by degrees {}", hyp.component_by_degrees);
    }
    Ok(())
}
