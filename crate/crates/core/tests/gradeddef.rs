use detdeform::detmodel::{random_matrix, DegreeData, HomogeneousMatrix};
use detdeform::exactalg::{Field, PrimeField};
use detdeform::gradeddef::{
    certificate, codim_estimate, column_deletion_report, edge_image, edge_map_rank, ext1_a_dim, ext1_r_dim, ext1_r_from_resolution, hom_ix_a_dim, hom_mm_dim,
    module_presentation, module_slice_dim, perturbation_dim, quotient_ring, restriction_data,
    ring_slice_dim, Preconditions, Refusal, Verdict, DEFAULT_SLICE_CAP,
};
use detdeform::gradedpoly::{parse_polynomial, Polynomial};
use rand::{Rng, SeedableRng};

fn field() -> PrimeField {
    PrimeField::default()
}

fn dd(n: usize, b: &[i64], a: &[i64]) -> DegreeData {
    DegreeData::new(n, b.to_vec(), a.to_vec()).unwrap()
}

fn quadric_curve() -> HomogeneousMatrix<PrimeField> {
    random_matrix(&dd(4, &[0, 0], &[2, 2, 2, 2]), field(), 1, false).unwrap()
}

fn twisted_cubic() -> HomogeneousMatrix<PrimeField> {
    let f = field();
    let text = [["x0", "x1", "x2"], ["x1", "x2", "x3"]];
    HomogeneousMatrix::from_fn(dd(3, &[0, 0], &[1, 1, 1]), f, false, |i, j| {
        parse_polynomial(text[i][j], 3, f).unwrap()
    })
    .unwrap()
}

#[test]
fn module_and_ring_slices() {
    let a = quadric_curve();
    let mut m = module_presentation(&a);
    assert_eq!(module_slice_dim(&mut m, 0), 2);
    assert_eq!(module_slice_dim(&mut m, 2), 26);
    let mut q = quotient_ring(&a);
    assert_eq!(ring_slice_dim(&mut q, 3), 35);
    assert_eq!(ring_slice_dim(&mut q, 4), 64);

    let c = twisted_cubic();
    assert_eq!(module_slice_dim(&mut module_presentation(&c), 1), 5);
    assert_eq!(ring_slice_dim(&mut quotient_ring(&c), 2), 7);
}

#[test]
fn quadric_curve_tangent_numbers() {
    let a = quadric_curve();
    let mut m = module_presentation(&a);
    assert_eq!(hom_mm_dim(&a), 1);
    let ext1_r = ext1_r_dim(&a, &mut m);
    assert_eq!(ext1_r, 101);
    let rho = restriction_data(&a, &mut m);
    assert_eq!(rho.hom_mm(), 1);
    assert_eq!(rho.ext1_r(), 101);

    let mut q = quotient_ring(&a);
    assert_eq!(hom_ix_a_dim(&a, &mut q), 101);
    assert_eq!(perturbation_dim(&a), 120);
    let rank = edge_map_rank(&a, &mut q);
    assert_eq!(rank, 101);
    assert_eq!(ext1_a_dim(ext1_r, rank).unwrap(), 0);
}

#[test]
fn twisted_cubic_tangent_numbers() {
    let a = twisted_cubic();
    let mut m = module_presentation(&a);
    assert_eq!(hom_mm_dim(&a), 1);
    let ext1_r = ext1_r_dim(&a, &mut m);
    assert_eq!(ext1_r, 12);
    let mut q = quotient_ring(&a);
    assert_eq!(hom_ix_a_dim(&a, &mut q), 12);
    let rank = edge_map_rank(&a, &mut q);
    assert_eq!(ext1_a_dim(ext1_r, rank).unwrap(), 0);
}

#[test]
fn block_diagonal_has_extra_endomorphisms() {
    // [[x0, x1, 0], [0, 0, x2]]: M splits as a sum of two modules
    let f = field();
    let text = [["x0", "x1", "0"], ["0", "0", "x2"]];
    let a = HomogeneousMatrix::from_fn(dd(3, &[0, 0], &[1, 1, 1]), f, false, |i, j| {
        parse_polynomial(text[i][j], 3, f).unwrap()
    })
    .unwrap();
    assert!(hom_mm_dim(&a) >= 2);
    let rho = restriction_data(&a, &mut module_presentation(&a));
    assert_eq!(rho.hom_mm(), hom_mm_dim(&a));
}

#[test]
fn trivial_perturbations_vanish() {
    let a = quadric_curve();
    let f = a.field();
    let mut q = quotient_ring(&a);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut draw = || f.from_i64(rng.gen_range(0..32003));
    let bm: Vec<Vec<u32>> = (0..2).map(|_| (0..2).map(|_| draw()).collect()).collect();
    let cm: Vec<Vec<u32>> = (0..4).map(|_| (0..4).map(|_| draw()).collect()).collect();
    let pert = HomogeneousMatrix::from_fn(a.degree_data().clone(), f, false, |i, j| {
        let mut p = Polynomial::zero(f, 5);
        for k in 0..2 {
            p = p.add(&a.entry(k, j).scale(&bm[i][k]));
        }
        for l in 0..4 {
            p = p.add(&a.entry(i, l).scale(&cm[l][j]));
        }
        p
    })
    .unwrap();
    let image = edge_image(&a, &pert, &mut q).unwrap();
    assert!(image.iter().all(|x| f.is_zero(x)));

    let zero = HomogeneousMatrix::from_fn(a.degree_data().clone(), f, false, |_, _| {
        Polynomial::zero(f, 5)
    })
    .unwrap();
    assert!(edge_image(&a, &zero, &mut q).unwrap().iter().all(|x| f.is_zero(x)));
}

#[test]
fn certificate_quadric_curve() {
    let a = quadric_curve();
    let pre = Preconditions::gather(&a, 1, DEFAULT_SLICE_CAP);
    assert_eq!(pre.standard_determinantal(), Some(true));
    assert_eq!(pre.good_determinantal(), Some(true));
    let r = certificate(&a, &pre).unwrap();
    assert_eq!((r.ext1_r, r.hom_ix_a, r.ext1_a, r.tangent_excess), (101, 101, 0, 0));
    assert_eq!(r.verdict, Verdict::ComponentCertified);
}

#[test]
fn certificate_twisted_cubic() {
    let a = twisted_cubic();
    let pre = Preconditions::gather(&a, 1, DEFAULT_SLICE_CAP);
    let r = certificate(&a, &pre).unwrap();
    assert_eq!(r.hom_ix_a, 12);
    assert_eq!(r.verdict, Verdict::ComponentCertified);
}

#[test]
fn exception_points_get_the_caveat() {
    let a = random_matrix(&dd(3, &[0, 0], &[1, 1, 1, 1]), field(), 1, false).unwrap();
    let pre = Preconditions::gather(&a, 1, DEFAULT_SLICE_CAP);
    let r = certificate(&a, &pre).unwrap();
    assert_eq!(r.formula_lambda, 13);
    assert_eq!(r.verdict, Verdict::GradalgCaveat);
}

#[test]
fn repeated_column_is_refused() {
    let a = quadric_curve();
    let f = a.field();
    let b = HomogeneousMatrix::from_fn(a.degree_data().clone(), f, false, |i, j| {
        a.entry(i, if j == 1 { 0 } else { j }).clone()
    })
    .unwrap();
    let pre = Preconditions::gather(&b, 1, DEFAULT_SLICE_CAP);
    let r = certificate(&b, &pre).unwrap();
    assert_eq!(r.verdict, Verdict::Refused(Refusal::NotStandardDeterminantal));
}

#[test]
fn codim_examples() {
    let f = field();
    let c = twisted_cubic();
    let minors: Vec<Polynomial<PrimeField>> = c.maximal_minors().into_iter().map(|m| m.poly).collect();
    assert_eq!(codim_estimate("I_t", &minors, 3, 8).unwrap().dim, Some(1));
    assert!(codim_estimate("I_t", &minors, 3, 4).is_err());

    let a = quadric_curve();
    let entries: Vec<Polynomial<PrimeField>> = (0..2)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| a.entry(i, j).clone())
        .collect();
    assert_eq!(codim_estimate("I_1", &entries, 4, 10).unwrap().dim, Some(-1));

    let zero = vec![Polynomial::zero(f, 4)];
    assert_eq!(codim_estimate("0", &zero, 3, 6).unwrap().dim, Some(3));
}

#[test]
fn column_deletion() {
    let a = quadric_curve();
    let report = column_deletion_report(&a, DEFAULT_SLICE_CAP).unwrap();
    assert_eq!(report.len(), 4);
    assert!(report.iter().all(|c| c.empty() == Some(true)));
    assert!(column_deletion_report(&twisted_cubic(), DEFAULT_SLICE_CAP).is_err());

    // zero first column: deleting any other column keeps it, so I_1(B) misses x-directions
    let f = field();
    let b = HomogeneousMatrix::from_fn(a.degree_data().clone(), f, false, |i, j| {
        if j == 0 {
            Polynomial::zero(f, 5)
        } else {
            a.entry(i, j).clone()
        }
    })
    .unwrap();
    let report = column_deletion_report(&b, DEFAULT_SLICE_CAP).unwrap();
    assert_eq!(report[0].empty(), Some(true));
    assert!(report[1..].iter().all(|c| c.empty() == Some(false)));
}

#[test]
fn ext1_from_the_resolution_matches_the_sequence() {
    for a in [quadric_curve(), twisted_cubic()] {
        let mut m = module_presentation(&a);
        assert_eq!(ext1_r_from_resolution(&a, &mut m), ext1_r_dim(&a, &mut m));
    }
    let a = quadric_curve();
    assert_eq!(ext1_r_from_resolution(&a, &mut module_presentation(&a)), 101);
}
