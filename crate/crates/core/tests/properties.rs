use detdeform::complexes::{build_buchsbaum_rim, build_eagon_northcott};
use detdeform::detmodel::{
    dim_w_formula, k_term, lambda_c, nonempty, random_matrix, DegreeData, HypothesisReport,
    InvariantSet,
};
use detdeform::exactalg::{DenseMatrix, Field, PrimeField, Rationals};
use detdeform::gradeddef::{
    certificate, edge_map_rank, ext1_r_from_resolution, hom_ix_a_dim, hom_mm_dim, module_presentation, module_slice_dim,
    perturbation_dim, quotient_ring, restriction_data, ring_slice_dim, Preconditions,
};
use detdeform::gradedpoly::{basis_size, binomial, monomial_basis, mult_slice_matrix, parse_polynomial, Polynomial};
use detdeform::cli::tangent_cost;
use proptest::prelude::*;

fn small_field() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
    })
}

fn dense<F: Field>(field: F, rows: &[Vec<i64>]) -> DenseMatrix<F> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    DenseMatrix::from_i64_rows(field, &refs).unwrap()
}

fn check_rank_nullity<F: Field>(m: &DenseMatrix<F>) -> Result<(), TestCaseError> {
    let kernel = m.kernel_basis();
    prop_assert_eq!(m.rank() + kernel.len(), m.cols());
    prop_assert_eq!(m.rank(), m.transpose().rank());
    for v in &kernel {
        prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| m.field().is_zero(x)));
    }
    Ok(())
}

/// Random homogeneous polynomial of degree `d` in `x0..x_n`.
fn poly_strategy(n: usize, d: i64) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let len = basis_size(n, d);
    prop::collection::vec(0i64..101, len).prop_map(move |coeffs| {
        let f = small_field();
        let c: Vec<_> = coeffs.iter().map(|&x| f.from_i64(x)).collect();
        Polynomial::from_coordinates(f, n + 1, d, &c)
    })
}

/// Degree data with `t ∈ {2,3}`, `c ∈ {2,3}`, `n - c ∈ {0,1,2}` and entry degrees in `0..=2`.
fn degree_data_strategy() -> impl Strategy<Value = DegreeData> {
    (2usize..4, 2usize..4, 0usize..3).prop_flat_map(|(t, c, e)| {
        (
            prop::collection::vec(0i64..2, t - 1),
            prop::collection::vec(0i64..3, t + c - 1),
            Just((t, c, e)),
        )
            .prop_map(|(steps, offs, (_, c, e))| {
                let mut b = vec![0i64];
                for s in steps {
                    b.push(b.last().unwrap() + s);
                }
                let top = *b.last().unwrap();
                let mut a: Vec<i64> = offs.iter().map(|o| top + o).collect();
                a.sort_unstable();
                DegreeData::new(c + e, b, a).unwrap()
            })
    })
}

/// Nonempty degree data cheap enough for the tangent computations.
fn cheap_degree_data() -> impl Strategy<Value = DegreeData> {
    degree_data_strategy().prop_filter("nonempty and small", |dd| {
        nonempty(dd) && dd.n() > dd.c() && tangent_cost(dd) <= 300
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_over_fp(rows in matrix_strategy()) {
        check_rank_nullity(&dense(small_field(), &rows))?;
    }

    #[test]
    fn rank_nullity_over_q(rows in matrix_strategy()) {
        check_rank_nullity(&dense(Rationals, &rows))?;
    }

    #[test]
    fn rank_never_grows_mod_p(rows in matrix_strategy()) {
        prop_assert!(dense(small_field(), &rows).rank() <= dense(Rationals, &rows).rank());
    }

    #[test]
    fn basis_counts(n in 0usize..6, v in -2i64..7) {
        let expected = if v < 0 { 0 } else { binomial(n as u64 + v as u64, n as u64) as usize };
        prop_assert_eq!(basis_size(n, v), expected);
        prop_assert_eq!(monomial_basis(n, v).len(), expected);
        prop_assert!(monomial_basis(n, v).iter().all(|m| m.degree() as i64 == v));
    }

    #[test]
    fn multiplication_slices_compose(
        (p, q, v) in (1i64..3, 1i64..3, 0i64..3).prop_flat_map(|(dp, dq, v)| {
            (poly_strategy(2, dp), poly_strategy(2, dq), Just(v))
        })
    ) {
        let (dp, dq) = (p.homogeneous_degree().unwrap_or(0), q.homogeneous_degree().unwrap_or(0));
        prop_assume!(!p.is_zero() && !q.is_zero());
        let pq = mult_slice_matrix(&p.mul(&q), dp + dq, v).unwrap();
        let mq = mult_slice_matrix(&q, dq, v).unwrap();
        let mp = mult_slice_matrix(&p, dp, v + dq as i64).unwrap();
        prop_assert_eq!(pq, mp.mul(&mq).unwrap());
    }

    #[test]
    fn print_then_parse(p in (0i64..4).prop_flat_map(|d| poly_strategy(3, d))) {
        let back = parse_polynomial(&p.to_string(), 3, small_field()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn formula_is_lambda_plus_k(dd in degree_data_strategy()) {
        let inv = InvariantSet::compute(&dd).unwrap();
        let sum: i128 = lambda_c(&dd).unwrap()
            + (3..=dd.c()).map(|i| k_term(&dd, i).unwrap()).sum::<i128>();
        prop_assert_eq!(inv.dim_w_formula, sum);
        prop_assert_eq!(dim_w_formula(&dd).unwrap(), sum);
    }

    #[test]
    fn invariants_are_twist_invariant(dd in degree_data_strategy(), s in -3i64..4) {
        let tw = dd.twisted(s);
        let (x, y) = (InvariantSet::compute(&dd).unwrap(), InvariantSet::compute(&tw).unwrap());
        prop_assert_eq!(x.lambda_c, y.lambda_c);
        prop_assert_eq!(&x.k, &y.k);
        prop_assert_eq!(x.dim_w_formula, y.dim_w_formula);
        prop_assert_eq!(x.h.first(), y.h.first());
        // ℓ_i moves by (i-1)s and h_{i-3} by (3-i)s.
        for (i, (l, m)) in x.ell.iter().zip(&y.ell).enumerate() {
            prop_assert_eq!(m - l, (i as i128 + 1) * s as i128);
        }
        for (i, (l, m)) in x.h.iter().zip(&y.h).enumerate() {
            prop_assert_eq!(m - l, -(i as i128) * s as i128);
        }
        prop_assert_eq!(HypothesisReport::evaluate(&dd), HypothesisReport::evaluate(&tw));
    }

    #[test]
    fn nonempty_is_monotone(dd in degree_data_strategy(), j in 0usize..6) {
        let j = j % dd.a().len();
        let mut a = dd.a().to_vec();
        for x in a.iter_mut().skip(j) {
            *x += 1;
        }
        let raised = DegreeData::new(dd.n(), dd.b().to_vec(), a).unwrap();
        prop_assert!(!nonempty(&dd) || nonempty(&raised));
    }

    #[test]
    fn random_entries_are_homogeneous(dd in degree_data_strategy(), seed in any::<u64>()) {
        let a = random_matrix(&dd, small_field(), seed, true).unwrap();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let d = dd.entry_degree(i, j);
                let e = a.entry(i, j);
                prop_assert!(e.is_homogeneous_of(d));
                if d <= 0 {
                    prop_assert!(e.is_zero());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn complexes_are_graded_and_square_to_zero(dd in degree_data_strategy(), seed in any::<u64>()) {
        let a = random_matrix(&dd, PrimeField::default(), seed, false).unwrap();
        for cx in [build_eagon_northcott(&a), build_buchsbaum_rim(&a)] {
            prop_assert!(cx.is_graded());
            prop_assert!(cx.verify_dd_zero());
            for m in cx.modules() {
                prop_assert_eq!(m.rank(), m.twists().len());
            }
        }
    }

    #[test]
    fn module_vanishes_below_b1(dd in degree_data_strategy(), seed in any::<u64>()) {
        let a = random_matrix(&dd, PrimeField::default(), seed, false).unwrap();
        let mut m = module_presentation(&a);
        let b1 = dd.b()[0];
        prop_assert_eq!(module_slice_dim(&mut m, b1 - 1), 0);
        prop_assert_eq!(module_slice_dim(&mut m, b1 - 2), 0);
    }

    #[test]
    fn tangent_identities(dd in cheap_degree_data(), seed in any::<u64>()) {
        let a = random_matrix(&dd, PrimeField::default(), seed, false).unwrap();
        let mut m = module_presentation(&a);
        let rho = restriction_data(&a, &mut m);
        // ext1_R = hom(G*, M) - hom(F*, M) + hom(M, M), with hom(M, M) from the
        // endomorphism system rather than the restriction kernel.
        let hom_mm = hom_mm_dim(&a);
        prop_assert_eq!(rho.hom_mm(), hom_mm);
        prop_assert_eq!(
            rho.ext1_r() as i64,
            rho.hom_g_m as i64 - rho.hom_f_m as i64 + hom_mm as i64
        );

        prop_assert_eq!(ext1_r_from_resolution(&a, &mut m), rho.ext1_r());

        let mut q = quotient_ring(&a);
        let hom_ix_a = hom_ix_a_dim(&a, &mut q);
        let rank = edge_map_rank(&a, &mut q);
        prop_assert!(rank <= perturbation_dim(&a));
        prop_assert!(rank <= hom_ix_a);
        prop_assert!(rank <= rho.ext1_r());
    }

    #[test]
    fn ext1_r_is_twist_invariant(dd in cheap_degree_data(), seed in any::<u64>(), s in -2i64..3) {
        let a = random_matrix(&dd, PrimeField::default(), seed, false).unwrap();
        let b = random_matrix(&dd.twisted(s), PrimeField::default(), seed, false).unwrap();
        let ra = restriction_data(&a, &mut module_presentation(&a));
        let rb = restriction_data(&b, &mut module_presentation(&b));
        prop_assert_eq!(ra.ext1_r(), rb.ext1_r());
        prop_assert_eq!(ra.hom_mm(), rb.hom_mm());
    }

    #[test]
    fn certified_means_no_excess_deficit(dd in cheap_degree_data(), seed in any::<u64>()) {
        let a = random_matrix(&dd, PrimeField::default(), seed, false).unwrap();
        let pre = Preconditions::gather(&a, seed, 2500);
        let r = certificate(&a, &pre).unwrap();
        if r.ext1_a == 0 && pre.good_determinantal() == Some(true) {
            prop_assert!(r.tangent_excess >= 0);
        }
        prop_assert_eq!(r.ext1_a + r.rank_edge, r.ext1_r);
    }

    #[test]
    fn zeroing_an_entry_never_shrinks_slices(dd in cheap_degree_data(), seed in any::<u64>(), v in 0i64..4) {
        let f = PrimeField::default();
        let a = random_matrix(&dd, f, seed, false).unwrap();
        let special = a.with_entry(0, 0, Polynomial::zero(f, dd.n() + 1)).unwrap();
        prop_assert!(
            module_slice_dim(&mut module_presentation(&special), v)
                >= module_slice_dim(&mut module_presentation(&a), v)
        );
        prop_assert!(
            ring_slice_dim(&mut quotient_ring(&special), v) >= ring_slice_dim(&mut quotient_ring(&a), v)
        );
    }
}
