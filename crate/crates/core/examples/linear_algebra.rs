//! Exact ranks and kernels over GF(p) and over Q.

use detdeform::exactalg::{DenseMatrix, Field, PrimeField, Rationals};

fn show<F: Field>(m: &DenseMatrix<F>) -> detdeform::Result<()> {
    let kernel = m.kernel_basis();
    println!(
        "{} x {} over {}: rank {}, nullity {}",
        m.rows(),
        m.cols(),
        m.field().tag(),
        m.rank(),
        kernel.len()
    );
    for v in &kernel {
        let image = m.mul_vec(v)?;
        assert!(image.iter().all(|x| m.field().is_zero(x)));
        let shown: Vec<String> = v.iter().map(|x| m.field().render(x)).collect();
        println!("  kernel vector [{}]", shown.join(", "));
    }
    Ok(())
}

fn main() -> detdeform::Result<()> {
    let rows: [&[i64]; 3] = [&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 7, 1]];
    show(&DenseMatrix::from_i64_rows(Rationals, &rows)?)?;
    show(&DenseMatrix::from_i64_rows(PrimeField::default(), &rows)?)?;
    // 3 * 5 = 15 = 0 mod 5: the rank drops in characteristic 5.
    let rows: [&[i64]; 2] = [&[1, 3], &[5, 15]];
    show(&DenseMatrix::from_i64_rows(Rationals, &rows)?)?;
    show(&DenseMatrix::from_i64_rows(PrimeField::new(5)?, &[&[1, 3], &[0, 1]])?)?;
    Ok(())
}
