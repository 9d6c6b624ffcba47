//! Exact Moore–Penrose inverses over the Gaussian rationals via
//! determinantal minor sums, and Cramer-rule solvers for the minimum-norm
//! least-squares solutions of `AX = B`, `XA = B` and `AXB = D`.
//!
//! ```
//! use detpinv::{mp_det, parse_matrix, penrose_check};
//!
//! let a = parse_matrix("2 2\n1 1\n1 1\n").unwrap();
//! let x = mp_det(&a);
//! assert_eq!(x.to_text(), "2 2\n1/4 1/4\n1/4 1/4\n");
//! assert!(penrose_check(&a, &x).unwrap().all_pass());
//! ```

pub mod combinatorics;
pub mod cramer;
pub mod error;
mod exec;
pub mod fixtures;
pub mod matrix;
pub mod minors;
pub mod pinv;
pub mod scalar;

pub use combinatorics::{
    count_subsets, count_subsets_containing, subsets, subsets_containing, IndexSubset,
};
pub use cramer::{
    aux_vectors, general_solution_ax, general_solution_axb, general_solution_xa, gram_b_check,
    gram_b_hat, lss_ax, lss_ax_with, lss_axb, lss_axb_with, lss_xa, lss_xa_with, residual_sq_ax,
    residual_sq_axb, residual_sq_xa, tilde_d, AuxVectors, CaseTag, CramerForm, LsSolution,
    SolvePath,
};
pub use error::{Error, Result};
pub use exec::{is_parallel, with_threads};
pub use matrix::{parse_matrix, ExactMatrix, MinorSpec};
pub use pinv::{
    classify, mp_det, mp_det_variant, mp_limit, mp_oracle, penrose_check, FloatMatrix, GramVariant,
    LimitApprox, LimitStep, PenroseReport, RankKind, RankProfile, DEFAULT_LAMBDAS,
};
pub use scalar::{parse_scalar, BigRational, GaussianRational};
