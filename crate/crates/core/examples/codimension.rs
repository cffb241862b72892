//! Codimension estimates of minor ideals from Hilbert function values, and the
//! column-deletion check.

use detdeform::detmodel::{random_matrix, DegreeData};
use detdeform::exactalg::PrimeField;
use detdeform::gradeddef::{
    column_deletion_report, maximal_minors_estimate, submaximal_minors_estimate, DEFAULT_SLICE_CAP,
};

fn main() -> detdeform::Result<()> {
    let f = PrimeField::default();
    let dd = DegreeData::new(5, vec![0, 0, 0], vec![1, 1, 1, 1, 1])?;
    let a = random_matrix(&dd, f, 7, false)?;
    for e in [
        maximal_minors_estimate(&a, 1, DEFAULT_SLICE_CAP),
        submaximal_minors_estimate(&a, 1, DEFAULT_SLICE_CAP),
    ] {
        println!(
            "{}: ambient P^{}, {} cuts, h = {:?}, empty {:?}",
            e.label, e.ambient, e.hyperplane_cuts, e.values, e.examined_locus_empty()
        );
    }
    for d in column_deletion_report(&a, DEFAULT_SLICE_CAP)? {
        println!("without column {}: remaining minors have no common zero {:?}", d.column, d.empty());
    }
    Ok(())
}
