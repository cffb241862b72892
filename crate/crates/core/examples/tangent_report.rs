//! Tangent-space dimensions and the component certificate for the quadric curve.

use detdeform::detmodel::{random_matrix, DegreeData};
use detdeform::exactalg::PrimeField;
use detdeform::gradeddef::{certificate, Preconditions, DEFAULT_SLICE_CAP};

fn main() -> detdeform::Result<()> {
    let dd = DegreeData::new(4, vec![0, 0], vec![2, 2, 2, 2])?;
    let a = random_matrix(&dd, PrimeField::default(), 1, false)?;
    let pre = Preconditions::gather(&a, 1, DEFAULT_SLICE_CAP);
    println!("standard determinantal {:?}", pre.standard_determinantal());
    println!("good determinantal     {:?}", pre.good_determinantal());
    let r = certificate(&a, &pre)?;
    println!("hom(G*, M)_0  {}", r.hom_g_m);
    println!("hom(F*, M)_0  {}", r.hom_f_m);
    println!("hom(M, M)_0   {}", r.hom_m_m);
    println!("ext1_R(M,M)_0 {}", r.ext1_r);
    println!("hom(I/I^2,A)_0 {}", r.hom_ix_a);
    println!("edge rank     {} of {}", r.rank_edge, r.perturbation_dim);
    println!("ext1_A        {}", r.ext1_a);
    println!("formula       {}", r.formula_lambda);
    println!("verdict       {}", r.verdict);
    Ok(())
}
