use detpinv::{
    classify, fixtures, general_solution_ax, general_solution_axb, general_solution_xa, lss_ax,
    lss_axb, lss_xa, mp_det, mp_oracle, residual_sq_ax, residual_sq_axb, SolvePath,
};

#[test]
fn mp_det_equals_oracle_on_suite() {
    for a in fixtures::matrix_suite(101, 3) {
        assert_eq!(mp_det(&a), mp_oracle(&a), "{a}");
    }
}

#[test]
fn solvers_equal_pseudoinverse_products() {
    let mut rng = fixtures::rng(202);
    for a in fixtures::matrix_suite(203, 1) {
        let (m, n) = a.shape();
        let pinv = mp_oracle(&a);

        let b = fixtures::random_matrix(&mut rng, m, 2);
        assert_eq!(lss_ax(&a, &b).unwrap().x, pinv.matmul(&b).unwrap());
        let b = fixtures::random_matrix(&mut rng, 2, n);
        assert_eq!(lss_xa(&a, &b).unwrap().x, b.matmul(&pinv).unwrap());

        for (p, q, rank) in [(2, 3, 1), (3, 2, 2), (2, 2, 2), (3, 3, 1)] {
            let bm = fixtures::random_matrix_with_rank(&mut rng, p, q, rank);
            let d = fixtures::random_matrix(&mut rng, m, q);
            let expected = pinv.matmul(&d).unwrap().matmul(&mp_oracle(&bm)).unwrap();
            assert_eq!(lss_axb(&a, &bm, &d, SolvePath::Both).unwrap().x, expected);
        }
    }
}

#[test]
fn general_solutions_keep_residual() {
    let mut rng = fixtures::rng(303);
    for a in fixtures::matrix_suite(304, 1).into_iter().step_by(3) {
        let (m, n) = a.shape();
        let b = fixtures::random_matrix(&mut rng, m, 2);
        let ls = lss_ax(&a, &b).unwrap();
        let c = fixtures::random_matrix(&mut rng, n, 2);
        let x = general_solution_ax(&a, &b, &c).unwrap();
        assert_eq!(residual_sq_ax(&a, &x, &b).unwrap(), ls.residual_sq);
        assert!(x.frobenius_norm_sq() >= ls.norm_sq);

        let bx = fixtures::random_matrix(&mut rng, 2, n);
        let ls = lss_xa(&a, &bx).unwrap();
        let x = general_solution_xa(&a, &bx, &fixtures::random_matrix(&mut rng, 2, m)).unwrap();
        assert_eq!(
            x.matmul(&a).unwrap().sub(&bx).unwrap().frobenius_norm_sq(),
            ls.residual_sq
        );

        let bm = fixtures::random_matrix_with_rank(&mut rng, 3, 2, 1);
        let d = fixtures::random_matrix(&mut rng, m, 2);
        let ls = lss_axb(&a, &bm, &d, SolvePath::DB).unwrap();
        let v = fixtures::random_matrix(&mut rng, n, 3);
        let w = fixtures::random_matrix(&mut rng, n, 3);
        let x = general_solution_axb(&a, &bm, &d, &v, &w).unwrap();
        assert_eq!(residual_sq_axb(&a, &x, &bm, &d).unwrap(), ls.residual_sq);
        assert!(x.frobenius_norm_sq() >= ls.norm_sq);
    }
}

#[test]
fn consistent_systems_have_zero_residual() {
    let mut rng = fixtures::rng(404);
    for a in fixtures::matrix_suite(405, 1) {
        let x0 = fixtures::random_matrix(&mut rng, a.cols(), 2);
        let b2 = fixtures::random_matrix_with_rank(&mut rng, 2, 3, 2);
        let d = a.matmul(&x0).unwrap().matmul(&b2).unwrap();
        let sol = lss_axb(&a, &b2, &d, SolvePath::Both).unwrap();
        assert!(num_traits::Zero::is_zero(&sol.residual_sq));
        assert_eq!(classify(&b2).rank, 2);
    }
}
