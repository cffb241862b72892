//! The comparison map from the Eagon-Northcott resolution to the twisted
//! Buchsbaum-Rim resolution, checked square by square.

use detdeform::complexes::{build_tau, reduced_sum, verify_tau};
use detdeform::detmodel::{random_matrix, DegreeData};
use detdeform::exactalg::PrimeField;

fn main() -> detdeform::Result<()> {
    println!("reduced sum of (0, 0, 1): {:?}", reduced_sum(&[0, 0, 1]));
    let cases = [
        (4, vec![0, 0], vec![2, 2, 2, 2]),
        (5, vec![0, 0, 0], vec![1, 1, 1, 1, 1]),
        (5, vec![0, 0], vec![1, 1, 1, 1, 2]),
    ];
    for (seed, (n, b, a)) in cases.into_iter().enumerate() {
        let dd = DegreeData::new(n, b, a)?;
        let m = random_matrix(&dd, PrimeField::default(), seed as u64, false)?;
        let report = verify_tau(&build_tau(&m));
        println!(
            "{dd}: {} squares, failures {:?}, top injective {}",
            report.squares_checked, report.failed_squares, report.top_injective
        );
    }
    Ok(())
}
