use detpinv::{
    fixtures, lss_ax, lss_axb_with, lss_xa, mp_det, mp_det_variant, parse_matrix, parse_scalar,
    penrose_check, subsets, CramerForm, ExactMatrix, GaussianRational, GramVariant, SolvePath,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5)
        .prop_map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d))
}

fn square(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec((-2i64..=2, -2i64..=2), n * n).prop_map(move |v| {
            let data = v
                .into_iter()
                .map(|(re, im)| GaussianRational::from_integers(re, im))
                .collect();
            ExactMatrix::from_vec(n, n, data).unwrap()
        })
    })
}

/// Any shape up to 4×5 with a chosen rank.
fn suite_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=5, any::<u64>()).prop_flat_map(|(m, n, seed)| {
        (0..=m.min(n))
            .prop_map(move |r| fixtures::random_matrix_with_rank(&mut fixtures::rng(seed), m, n, r))
    })
}

fn laplace(x: &ExactMatrix) -> GaussianRational {
    let n = x.rows();
    if n == 1 {
        return x.get(1, 1).clone();
    }
    let mut total = GaussianRational::zero();
    for j in 1..=n {
        let rows: Vec<Vec<GaussianRational>> = (2..=n)
            .map(|i| {
                (1..=n)
                    .filter(|&c| c != j)
                    .map(|c| x.get(i, c).clone())
                    .collect()
            })
            .collect();
        let term = x.get(1, j) * &laplace(&ExactMatrix::from_rows(rows).unwrap());
        if j % 2 == 1 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, GaussianRational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        }
        prop_assert_eq!((&a * &b).abs_sq(), a.abs_sq() * b.abs_sq());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn determinant_matches_laplace(x in square(4)) {
        prop_assert_eq!(x.determinant().unwrap(), laplace(&x));
    }

    #[test]
    fn determinant_is_multiplicative(x in square(3), seed in any::<u64>()) {
        let y = fixtures::random_matrix(&mut fixtures::rng(seed), x.rows(), x.rows());
        let lhs = x.matmul(&y).unwrap().determinant().unwrap();
        prop_assert_eq!(lhs, &x.determinant().unwrap() * &y.determinant().unwrap());
        prop_assert_eq!(x.adjoint().determinant().unwrap(), x.determinant().unwrap().conj());
    }

    #[test]
    fn rank_identities(a in suite_matrix()) {
        let r = a.rank();
        prop_assert_eq!(a.adjoint().rank(), r);
        prop_assert_eq!(a.adjoint().matmul(&a).unwrap().rank(), r);
        prop_assert_eq!(a.matmul(&a.adjoint()).unwrap().rank(), r);
    }

    #[test]
    fn gram_minor_sums_real_and_positive(a in suite_matrix()) {
        let r = a.rank();
        prop_assume!(r >= 1);
        for g in [a.adjoint().matmul(&a).unwrap(), a.matmul(&a.adjoint()).unwrap()] {
            let sum: GaussianRational = subsets(r, g.rows()).unwrap().map(|s| g.principal_minor(&s).unwrap()).sum();
            prop_assert!(sum.is_real());
            prop_assert!(sum.re() > &Zero::zero());
        }
    }

    #[test]
    fn pinv_symmetries(a in suite_matrix()) {
        let x = mp_det(&a);
        prop_assert!(penrose_check(&a, &x).unwrap().all_pass());
        prop_assert_eq!(mp_det(&a.adjoint()), x.adjoint());
        prop_assert_eq!(mp_det(&x), a.clone());
        if a.rank() > 0 {
            prop_assert_eq!(
                mp_det_variant(&a, GramVariant::ColumnGram).unwrap(),
                mp_det_variant(&a, GramVariant::RowGram).unwrap()
            );
        }
    }

    #[test]
    fn xa_ax_duality(a in suite_matrix(), seed in any::<u64>(), s in 1usize..=3) {
        let b = fixtures::random_matrix(&mut fixtures::rng(seed), s, a.cols());
        let xa = lss_xa(&a, &b).unwrap();
        let ax = lss_ax(&a.adjoint(), &b.adjoint()).unwrap();
        prop_assert_eq!(xa.x, ax.x.adjoint());
    }

    #[test]
    fn minor_sum_form_matches_auto(a in suite_matrix(), bseed in any::<u64>(), p in 1usize..=3) {
        let mut rng = fixtures::rng(bseed);
        let q = (p + 1).min(4);
        let rank_b = (bseed as usize) % (p.min(q) + 1);
        let b = fixtures::random_matrix_with_rank(&mut rng, p, q, rank_b);
        let d = fixtures::random_matrix(&mut rng, a.rows(), q);
        let auto = lss_axb_with(&a, &b, &d, SolvePath::Both, CramerForm::Auto).unwrap();
        let sums = lss_axb_with(&a, &b, &d, SolvePath::Both, CramerForm::MinorSum).unwrap();
        prop_assert_eq!(auto, sums);
    }

    #[test]
    fn matrix_text_round_trip(a in suite_matrix()) {
        prop_assert_eq!(parse_matrix(&a.to_text()).unwrap(), a.clone());
        let scaled = a.scale(&GaussianRational::from_fractions(1, 3, -2, 7));
        prop_assert_eq!(parse_matrix(&scaled.to_text()).unwrap(), scaled);
    }
}
