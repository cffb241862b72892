//! Parsing polynomial entries, building a homogeneous matrix and listing its minors.

use detdeform::detmodel::{DegreeData, HomogeneousMatrix};
use detdeform::exactalg::Rationals;
use detdeform::gradedpoly::parse_polynomial;

fn main() -> detdeform::Result<()> {
    let entries = [["x0", "x1", "x2"], ["x1", "x2", "x3"]];
    let dd = DegreeData::new(3, vec![0, 0], vec![1, 1, 1])?;
    let a = HomogeneousMatrix::from_fn(dd, Rationals, true, |i, j| {
        parse_polynomial(entries[i][j], 3, Rationals).expect("entry")
    })?;
    println!("twisted cubic, {} x {}", a.rows(), a.cols());
    for m in a.maximal_minors() {
        println!("  minor on columns {:?}: {}", m.cols, m.poly);
    }

    let p = parse_polynomial("x0^2 + 4*x0*x1 + 4*x1^2 - 3*x0*x2", 3, Rationals)?;
    println!("parsed {p}, degree {:?}", p.homogeneous_degree());
    match parse_polynomial("x0 + x9", 3, Rationals) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
