//! Eagon-Northcott and Buchsbaum-Rim complexes of a random 2 x 4 quadric matrix:
//! shapes, d^2 = 0, exactness and the Hilbert polynomial.

use detdeform::complexes::{build_buchsbaum_rim, build_eagon_northcott, hilbert_polynomial};
use detdeform::detmodel::{random_matrix, DegreeData};
use detdeform::exactalg::PrimeField;

fn main() -> detdeform::Result<()> {
    let dd = DegreeData::new(4, vec![0, 0], vec![2, 2, 2, 2])?;
    let a = random_matrix(&dd, PrimeField::default(), 1, false)?;
    for cx in [build_eagon_northcott(&a), build_buchsbaum_rim(&a)] {
        let bound = cx.default_bound();
        let exact = cx.verify_exactness(bound);
        println!("{:?}", cx.kind());
        println!("  ranks {:?}", cx.ranks());
        for (k, m) in cx.modules().iter().enumerate() {
            println!("  twists of level {k}: {:?}", m.twists());
        }
        println!("  d^2 = 0: {}", cx.verify_dd_zero());
        println!("  exact up to degree {bound}: {}", exact.is_exact());
    }
    let hp = hilbert_polynomial(&build_eagon_northcott(&a), 10);
    println!("Hilbert polynomial {}", hp.polynomial);
    println!("dim {}  degree {}  genus {:?}", hp.scheme_dim, hp.degree, hp.genus);
    Ok(())
}
