//! Cramer-rule analogs for the minimum-norm least-squares solutions of
//! `AX = B`, `XA = B` and `AXB = D`.
//!
//! Each entry of the solution is a ratio of minor sums of a Gram matrix
//! with one column (or row) replaced by a column (or row) of the projected
//! right-hand side. When the relevant Gram matrix is invertible the minor
//! sums collapse to plain determinants.

use std::fmt;

use num_traits::Zero;

use crate::error::{mismatch, Error, Result};
use crate::exec;
use crate::matrix::ExactMatrix;
use crate::minors::{
    column_cramer, column_replaced_minor_sum, gram_denominator, principal_minor_sum, row_cramer,
    row_replaced_minor_sum,
};
use crate::pinv::{classify, mp_det, RankProfile};
use crate::scalar::{BigRational, GaussianRational};

/// Which formula family produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// A (or B) is zero; the solution is the zero matrix.
    RankZero,
    /// `AX = B` with full column rank: determinant ratios of `A*A`.
    AxFullColumn,
    /// `AX = B` otherwise: minor sums of `A*A`.
    AxDeficient,
    /// `XA = B` with full row rank: determinant ratios of `AA*`.
    XaFullRow,
    /// `XA = B` otherwise: minor sums of `AA*`.
    XaDeficient,
    /// `AXB = D`, rank A = n and rank B = p.
    AxbBothFull,
    /// `AXB = D`, rank A < n and rank B < p.
    AxbBothDeficient,
    /// `AXB = D`, rank A = n and rank B < p.
    AxbLeftFull,
    /// `AXB = D`, rank A < n and rank B = p.
    AxbRightFull,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::RankZero => "rank zero",
            CaseTag::AxFullColumn => "(i) full column rank",
            CaseTag::AxDeficient => "(ii) deficient column rank",
            CaseTag::XaFullRow => "(i) full row rank",
            CaseTag::XaDeficient => "(ii) deficient row rank",
            CaseTag::AxbBothFull => "(i) both full",
            CaseTag::AxbBothDeficient => "(ii) both deficient",
            CaseTag::AxbLeftFull => "(iii) A full, B deficient",
            CaseTag::AxbRightFull => "(iiii) A deficient, B full",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsSolution {
    pub x: ExactMatrix,
    /// Squared Frobenius norm of the equation residual at `x`.
    pub residual_sq: BigRational,
    /// Squared Frobenius norm of `x`.
    pub norm_sq: BigRational,
    pub case_tag: CaseTag,
}

/// Which formula `lss_axb` evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolvePath {
    /// Through the column vectors `d^B_{.j}`.
    DB,
    /// Through the row vectors `d^A_{i.}`.
    DA,
    /// Both, with an exact equality check.
    Both,
}

impl Default for SolvePath {
    /// `Both` in debug builds, `DB` in release builds.
    fn default() -> Self {
        if cfg!(debug_assertions) {
            SolvePath::Both
        } else {
            SolvePath::DB
        }
    }
}

/// Whether full-rank branches may use determinant ratios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CramerForm {
    #[default]
    Auto,
    /// Always enumerate minor sums, even when the index family is a
    /// singleton.
    MinorSum,
}

fn numer_col(
    form: CramerForm,
    g: &ExactMatrix,
    i: usize,
    v: &[GaussianRational],
    r: usize,
) -> GaussianRational {
    match form {
        CramerForm::Auto => column_cramer(g, i, v, r),
        CramerForm::MinorSum => column_replaced_minor_sum(g, i, v, r),
    }
}

fn numer_row(
    form: CramerForm,
    g: &ExactMatrix,
    j: usize,
    v: &[GaussianRational],
    r: usize,
) -> GaussianRational {
    match form {
        CramerForm::Auto => row_cramer(g, j, v, r),
        CramerForm::MinorSum => row_replaced_minor_sum(g, j, v, r),
    }
}

fn denom(form: CramerForm, g: &ExactMatrix, r: usize) -> GaussianRational {
    match form {
        CramerForm::Auto => gram_denominator(g, r),
        CramerForm::MinorSum => principal_minor_sum(g, r),
    }
}

/// `B̂ = A*B`.
pub fn gram_b_hat(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.rows() != b.rows() {
        return Err(mismatch(
            "gram_b_hat",
            format!("{} rows", a.rows()),
            format!("{}", b.rows()),
        ));
    }
    a.adjoint().matmul(b)
}

/// `B̌ = BA*`.
pub fn gram_b_check(b: &ExactMatrix, a: &ExactMatrix) -> Result<ExactMatrix> {
    if b.cols() != a.cols() {
        return Err(mismatch(
            "gram_b_check",
            format!("{} columns", a.cols()),
            format!("{}", b.cols()),
        ));
    }
    b.matmul(&a.adjoint())
}

/// `D̃ = A*DB*`.
pub fn tilde_d(a: &ExactMatrix, d: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.rows() != d.rows() || d.cols() != b.cols() {
        return Err(mismatch(
            "tilde_d",
            format!("D with {} rows and {} columns", a.rows(), b.cols()),
            format!("{}x{}", d.rows(), d.cols()),
        ));
    }
    a.adjoint().matmul(d)?.matmul(&b.adjoint())
}

pub fn residual_sq_ax(a: &ExactMatrix, x: &ExactMatrix, b: &ExactMatrix) -> Result<BigRational> {
    Ok(a.matmul(x)?.sub(b)?.frobenius_norm_sq())
}

pub fn residual_sq_xa(a: &ExactMatrix, x: &ExactMatrix, b: &ExactMatrix) -> Result<BigRational> {
    Ok(x.matmul(a)?.sub(b)?.frobenius_norm_sq())
}

pub fn residual_sq_axb(
    a: &ExactMatrix,
    x: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
) -> Result<BigRational> {
    Ok(a.matmul(x)?.matmul(b)?.sub(d)?.frobenius_norm_sq())
}

/// Minimum-norm least-squares solution of `AX = B`.
pub fn lss_ax(a: &ExactMatrix, b: &ExactMatrix) -> Result<LsSolution> {
    lss_ax_with(a, b, CramerForm::Auto)
}

pub fn lss_ax_with(a: &ExactMatrix, b: &ExactMatrix, form: CramerForm) -> Result<LsSolution> {
    let b_hat = gram_b_hat(a, b)?;
    let profile = classify(a);
    let (n, s) = (a.cols(), b.cols());
    let (x, case_tag) = if profile.rank == 0 {
        (ExactMatrix::zeros(n, s)?, CaseTag::RankZero)
    } else {
        let r = profile.rank;
        let gram = a.adjoint().matmul(a)?;
        let den_inv = denom(form, &gram, r).inv()?;
        let cols: Vec<Vec<GaussianRational>> = (1..=s)
            .map(|j| b_hat.column(j).map(|c| c.entries().to_vec()))
            .collect::<Result<_>>()?;
        let data = exec::map_indices(n * s, |idx| {
            let (i, j) = (idx / s + 1, idx % s);
            &numer_col(form, &gram, i, &cols[j], r) * &den_inv
        });
        let tag = if profile.full_column_rank() {
            CaseTag::AxFullColumn
        } else {
            CaseTag::AxDeficient
        };
        (ExactMatrix::from_parts(n, s, data), tag)
    };
    Ok(LsSolution {
        residual_sq: residual_sq_ax(a, &x, b)?,
        norm_sq: x.frobenius_norm_sq(),
        x,
        case_tag,
    })
}

/// Minimum-norm least-squares solution of `XA = B`.
pub fn lss_xa(a: &ExactMatrix, b: &ExactMatrix) -> Result<LsSolution> {
    lss_xa_with(a, b, CramerForm::Auto)
}

pub fn lss_xa_with(a: &ExactMatrix, b: &ExactMatrix, form: CramerForm) -> Result<LsSolution> {
    let b_check = gram_b_check(b, a)?;
    let profile = classify(a);
    let (s, m) = (b.rows(), a.rows());
    let (x, case_tag) = if profile.rank == 0 {
        (ExactMatrix::zeros(s, m)?, CaseTag::RankZero)
    } else {
        let r = profile.rank;
        let gram = a.matmul(&a.adjoint())?;
        let den_inv = denom(form, &gram, r).inv()?;
        let data = exec::map_indices(s * m, |idx| {
            let (i, j) = (idx / m, idx % m + 1);
            &numer_row(form, &gram, j, b_check.row_slice(i), r) * &den_inv
        });
        let tag = if profile.full_row_rank() {
            CaseTag::XaFullRow
        } else {
            CaseTag::XaDeficient
        };
        (ExactMatrix::from_parts(s, m, data), tag)
    };
    Ok(LsSolution {
        residual_sq: residual_sq_xa(a, &x, b)?,
        norm_sq: x.frobenius_norm_sq(),
        x,
        case_tag,
    })
}

/// `d^B_{.j}` and `d^A_{i.}` for a single `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxVectors {
    /// n×1.
    pub d_col: ExactMatrix,
    /// 1×p.
    pub d_row: ExactMatrix,
}

/// All auxiliary vectors at once: column `j` of `col_vectors` is `d^B_{.j}`
/// and row `i` of `row_vectors` is `d^A_{i.}`. Both are n×p.
struct AuxMatrices {
    col_vectors: ExactMatrix,
    row_vectors: ExactMatrix,
}

struct AxbGrams {
    gram_a: ExactMatrix,
    gram_b: ExactMatrix,
    rank_a: usize,
    rank_b: usize,
}

impl AxbGrams {
    fn new(
        a: &ExactMatrix,
        b: &ExactMatrix,
        profile_a: &RankProfile,
        profile_b: &RankProfile,
    ) -> Result<Self> {
        Ok(Self {
            gram_a: a.adjoint().matmul(a)?,
            gram_b: b.matmul(&b.adjoint())?,
            rank_a: profile_a.rank,
            rank_b: profile_b.rank,
        })
    }

    fn d_b_entry(
        &self,
        form: CramerForm,
        d_tilde: &ExactMatrix,
        k: usize,
        j: usize,
    ) -> GaussianRational {
        numer_row(form, &self.gram_b, j, d_tilde.row_slice(k - 1), self.rank_b)
    }

    fn d_a_entry(
        &self,
        form: CramerForm,
        d_tilde_cols: &[Vec<GaussianRational>],
        i: usize,
        t: usize,
    ) -> GaussianRational {
        numer_col(form, &self.gram_a, i, &d_tilde_cols[t - 1], self.rank_a)
    }

    fn aux(&self, form: CramerForm, d_tilde: &ExactMatrix) -> AuxMatrices {
        let (n, p) = d_tilde.shape();
        let cols = columns_of(d_tilde);
        let col_vectors = exec::map_indices(n * p, |idx| {
            self.d_b_entry(form, d_tilde, idx / p + 1, idx % p + 1)
        });
        let row_vectors = exec::map_indices(n * p, |idx| {
            self.d_a_entry(form, &cols, idx / p + 1, idx % p + 1)
        });
        AuxMatrices {
            col_vectors: ExactMatrix::from_parts(n, p, col_vectors),
            row_vectors: ExactMatrix::from_parts(n, p, row_vectors),
        }
    }
}

fn columns_of(x: &ExactMatrix) -> Vec<Vec<GaussianRational>> {
    (1..=x.cols())
        .map(|j| x.column(j).expect("in range").entries().to_vec())
        .collect()
}

/// `d^B_{.j}` (components from rows of `D̃` put into `BB*`) and `d^A_{i.}`
/// (components from columns of `D̃` put into `A*A`). Indices are 1-based.
pub fn aux_vectors(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d_tilde: &ExactMatrix,
    i: usize,
    j: usize,
    profile_a: &RankProfile,
    profile_b: &RankProfile,
) -> Result<AuxVectors> {
    let (n, p) = (a.cols(), b.rows());
    if d_tilde.shape() != (n, p) {
        return Err(mismatch(
            "aux_vectors",
            format!("{n}x{p}"),
            format!("{}x{}", d_tilde.rows(), d_tilde.cols()),
        ));
    }
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange {
            what: "row",
            index: i,
            bound: n,
        });
    }
    if j < 1 || j > p {
        return Err(Error::IndexOutOfRange {
            what: "column",
            index: j,
            bound: p,
        });
    }
    let grams = AxbGrams::new(a, b, profile_a, profile_b)?;
    let zero = || GaussianRational::zero();
    let cols = columns_of(d_tilde);
    let d_col = (1..=n)
        .map(|k| {
            if grams.rank_b == 0 {
                zero()
            } else {
                grams.d_b_entry(CramerForm::Auto, d_tilde, k, j)
            }
        })
        .collect();
    let d_row = (1..=p)
        .map(|t| {
            if grams.rank_a == 0 {
                zero()
            } else {
                grams.d_a_entry(CramerForm::Auto, &cols, i, t)
            }
        })
        .collect();
    Ok(AuxVectors {
        d_col: ExactMatrix::from_vec(n, 1, d_col)?,
        d_row: ExactMatrix::from_vec(1, p, d_row)?,
    })
}

/// Minimum-norm least-squares solution of `AXB = D`.
pub fn lss_axb(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    path: SolvePath,
) -> Result<LsSolution> {
    lss_axb_with(a, b, d, path, CramerForm::Auto)
}

pub fn lss_axb_with(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    path: SolvePath,
    form: CramerForm,
) -> Result<LsSolution> {
    let d_tilde = tilde_d(a, d, b)?;
    let (n, p) = (a.cols(), b.rows());
    let profile_a = classify(a);
    let profile_b = classify(b);
    let (x, case_tag) = if profile_a.rank == 0 || profile_b.rank == 0 {
        (ExactMatrix::zeros(n, p)?, CaseTag::RankZero)
    } else {
        let grams = AxbGrams::new(a, b, &profile_a, &profile_b)?;
        let den =
            &denom(form, &grams.gram_a, grams.rank_a) * &denom(form, &grams.gram_b, grams.rank_b);
        let den_inv = den.inv()?;
        let aux = grams.aux(form, &d_tilde);
        let via_db = || {
            let cols = columns_of(&aux.col_vectors);
            let data = exec::map_indices(n * p, |idx| {
                let (i, j) = (idx / p + 1, idx % p);
                &numer_col(form, &grams.gram_a, i, &cols[j], grams.rank_a) * &den_inv
            });
            ExactMatrix::from_parts(n, p, data)
        };
        let via_da = || {
            let data = exec::map_indices(n * p, |idx| {
                let (i, j) = (idx / p, idx % p + 1);
                &numer_row(
                    form,
                    &grams.gram_b,
                    j,
                    aux.row_vectors.row_slice(i),
                    grams.rank_b,
                ) * &den_inv
            });
            ExactMatrix::from_parts(n, p, data)
        };
        let x = match path {
            SolvePath::DB => via_db(),
            SolvePath::DA => via_da(),
            SolvePath::Both => {
                let x = via_db();
                if x != via_da() {
                    return Err(Error::PathDisagreement);
                }
                x
            }
        };
        let tag = match (profile_a.full_column_rank(), p == profile_b.rank) {
            (true, true) => CaseTag::AxbBothFull,
            (false, false) => CaseTag::AxbBothDeficient,
            (true, false) => CaseTag::AxbLeftFull,
            (false, true) => CaseTag::AxbRightFull,
        };
        (x, tag)
    };
    Ok(LsSolution {
        residual_sq: residual_sq_axb(a, &x, b, d)?,
        norm_sq: x.frobenius_norm_sq(),
        x,
        case_tag,
    })
}

fn projector_complement(p: &ExactMatrix) -> Result<ExactMatrix> {
    ExactMatrix::identity(p.rows())?.sub(p)
}

/// `X = A⁺B + (I − A⁺A)C`.
pub fn general_solution_ax(
    a: &ExactMatrix,
    b: &ExactMatrix,
    c: &ExactMatrix,
) -> Result<ExactMatrix> {
    if c.shape() != (a.cols(), b.cols()) {
        return Err(mismatch(
            "general_solution_ax",
            format!("C {}x{}", a.cols(), b.cols()),
            format!("{}x{}", c.rows(), c.cols()),
        ));
    }
    let pinv = mp_det(a);
    let base = pinv.matmul(b)?;
    base.add(&projector_complement(&pinv.matmul(a)?)?.matmul(c)?)
}

/// `X = BA⁺ + C(I − AA⁺)`.
pub fn general_solution_xa(
    a: &ExactMatrix,
    b: &ExactMatrix,
    c: &ExactMatrix,
) -> Result<ExactMatrix> {
    if c.shape() != (b.rows(), a.rows()) {
        return Err(mismatch(
            "general_solution_xa",
            format!("C {}x{}", b.rows(), a.rows()),
            format!("{}x{}", c.rows(), c.cols()),
        ));
    }
    let pinv = mp_det(a);
    let base = b.matmul(&pinv)?;
    base.add(&c.matmul(&projector_complement(&a.matmul(&pinv)?)?)?)
}

/// `X = A⁺DB⁺ + (I − A⁺A)V + W(I − BB⁺)`.
pub fn general_solution_axb(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    v: &ExactMatrix,
    w: &ExactMatrix,
) -> Result<ExactMatrix> {
    let shape = (a.cols(), b.rows());
    for (name, x) in [("V", v), ("W", w)] {
        if x.shape() != shape {
            return Err(mismatch(
                "general_solution_axb",
                format!("{name} {}x{}", shape.0, shape.1),
                format!("{}x{}", x.rows(), x.cols()),
            ));
        }
    }
    if a.rows() != d.rows() || d.cols() != b.cols() {
        return Err(mismatch(
            "general_solution_axb",
            format!("D {}x{}", a.rows(), b.cols()),
            format!("{}x{}", d.rows(), d.cols()),
        ));
    }
    let a_pinv = mp_det(a);
    let b_pinv = mp_det(b);
    let base = a_pinv.matmul(d)?.matmul(&b_pinv)?;
    let left = projector_complement(&a_pinv.matmul(a)?)?.matmul(v)?;
    let right = w.matmul(&projector_complement(&b.matmul(&b_pinv)?)?)?;
    base.add(&left)?.add(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(rows: &[&[(i64, i64)]]) -> ExactMatrix {
        ExactMatrix::from_gaussian_integers(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gram_helpers() {
        let a = fixtures::example_a();
        let d = fixtures::example_d();
        let b = fixtures::example_b();
        assert_eq!(
            gram_b_hat(&a, &d).unwrap(),
            m(&[
                &[(2, 0), (-1, 1), (1, -2)],
                &[(1, -2), (1, 1), (-1, -1)],
                &[(0, -2), (1, 1), (-2, -1)],
            ])
        );
        assert_eq!(
            gram_b_hat(&ExactMatrix::identity(4).unwrap(), &d).unwrap(),
            d
        );
        assert!(gram_b_hat(&ExactMatrix::zeros(4, 2).unwrap(), &d)
            .unwrap()
            .is_zero());
        assert!(gram_b_hat(&b, &d).is_err());

        assert_eq!(
            gram_b_check(&b, &b).unwrap(),
            m(&[&[(3, 0), (0, -3)], &[(0, 3), (3, 0)]])
        );
        assert_eq!(
            gram_b_check(&b, &ExactMatrix::identity(3).unwrap()).unwrap(),
            b
        );
        assert!(gram_b_check(&ExactMatrix::zeros(2, 3).unwrap(), &b)
            .unwrap()
            .is_zero());

        assert_eq!(
            tilde_d(&a, &d, &b).unwrap(),
            m(&[&[(1, 0), (0, -1)], &[(0, -1), (-1, 0)], &[(0, -1), (-1, 0)]])
        );
        let id4 = ExactMatrix::identity(4).unwrap();
        let id3 = ExactMatrix::identity(3).unwrap();
        assert_eq!(tilde_d(&id4, &d, &id3).unwrap(), d);
        assert!(tilde_d(&a, &ExactMatrix::zeros(4, 3).unwrap(), &b)
            .unwrap()
            .is_zero());
        assert!(tilde_d(&a, &b, &b).is_err());
    }

    #[test]
    fn lss_ax_examples() {
        let id = ExactMatrix::identity(2).unwrap();
        let rhs = m(&[&[(1, 0)], &[(0, 1)]]);
        let sol = lss_ax(&id, &rhs).unwrap();
        assert_eq!(sol.x, rhs);
        assert!(sol.residual_sq.is_zero());

        let sol = lss_ax(&m(&[&[(1, 0)], &[(0, 0)]]), &m(&[&[(3, 0)], &[(4, 0)]])).unwrap();
        assert_eq!(sol.x, m(&[&[(3, 0)]]));
        assert_eq!(sol.residual_sq, q(16, 1));
        assert_eq!(sol.case_tag, CaseTag::AxFullColumn);

        let sol = lss_ax(&m(&[&[(1, 0), (1, 0)]]), &m(&[&[(2, 0)]])).unwrap();
        assert_eq!(sol.x, m(&[&[(1, 0)], &[(1, 0)]]));
        assert_eq!(sol.norm_sq, q(2, 1));
        assert!(sol.residual_sq.is_zero());
        assert_eq!(sol.case_tag, CaseTag::AxDeficient);

        assert!(matches!(
            lss_ax(&id, &fixtures::example_d()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lss_xa_examples() {
        let b = fixtures::example_b();
        assert_eq!(lss_xa(&ExactMatrix::identity(3).unwrap(), &b).unwrap().x, b);
        let sol = lss_xa(&m(&[&[(1, 0)], &[(0, 1)]]), &m(&[&[(1, 0)]])).unwrap();
        let half = GaussianRational::real(q(1, 2));
        assert_eq!(sol.x, m(&[&[(1, 0), (0, -1)]]).scale(&half));
        assert_eq!(sol.case_tag, CaseTag::XaDeficient);
        assert!(lss_xa(&b, &ExactMatrix::zeros(2, 2).unwrap()).is_err());
    }

    #[test]
    fn lss_axb_worked_example() {
        let (a, b, d) = (
            fixtures::example_a(),
            fixtures::example_b(),
            fixtures::example_d(),
        );
        let sixtieth = GaussianRational::real(q(1, 60));
        let expected =
            m(&[&[(1, 0), (0, -1)], &[(0, -2), (-2, 0)], &[(0, -1), (-1, 0)]]).scale(&sixtieth);
        for path in [SolvePath::DB, SolvePath::DA, SolvePath::Both] {
            let sol = lss_axb(&a, &b, &d, path).unwrap();
            assert_eq!(sol.x, expected);
            assert_eq!(sol.case_tag, CaseTag::AxbBothDeficient);
        }
    }

    #[test]
    fn lss_axb_identity_and_rank_one() {
        let d = fixtures::example_d();
        let sol = lss_axb(
            &ExactMatrix::identity(4).unwrap(),
            &ExactMatrix::identity(3).unwrap(),
            &d,
            SolvePath::Both,
        )
        .unwrap();
        assert_eq!(sol.x, d);
        assert_eq!(sol.case_tag, CaseTag::AxbBothFull);

        // A⁺ = (1/2)(1, -i), B⁺ = (1/2)(1; 1), A⁺D = (2, 2), A⁺DB⁺ = 2
        let a = m(&[&[(1, 0)], &[(0, 1)]]);
        let b = m(&[&[(1, 0), (1, 0)]]);
        let d = m(&[&[(2, 0), (2, 0)], &[(0, 2), (0, 2)]]);
        let sol = lss_axb(&a, &b, &d, SolvePath::Both).unwrap();
        assert_eq!(sol.x, m(&[&[(2, 0)]]));
        assert!(sol.residual_sq.is_zero());
        assert_eq!(sol.case_tag, CaseTag::AxbBothFull);
    }

    #[test]
    fn lss_axb_rank_zero_factor() {
        let sol = lss_axb(
            &ExactMatrix::zeros(4, 3).unwrap(),
            &fixtures::example_b(),
            &fixtures::example_d(),
            SolvePath::Both,
        )
        .unwrap();
        assert!(sol.x.is_zero());
        assert_eq!(sol.x.shape(), (3, 2));
        assert_eq!(sol.case_tag, CaseTag::RankZero);
        assert_eq!(sol.residual_sq, fixtures::example_d().frobenius_norm_sq());
    }

    #[test]
    fn aux_vectors_worked_example() {
        let (a, b, d) = (
            fixtures::example_a(),
            fixtures::example_b(),
            fixtures::example_d(),
        );
        let dt = tilde_d(&a, &d, &b).unwrap();
        let (pa, pb) = (classify(&a), classify(&b));
        let v1 = aux_vectors(&a, &b, &dt, 1, 1, &pa, &pb).unwrap();
        assert_eq!(v1.d_col, m(&[&[(1, 0)], &[(0, -1)], &[(0, -1)]]));
        let v2 = aux_vectors(&a, &b, &dt, 1, 2, &pa, &pb).unwrap();
        assert_eq!(v2.d_col, m(&[&[(0, -1)], &[(-1, 0)], &[(-1, 0)]]));
        assert!(matches!(
            aux_vectors(&a, &b, &dt, 4, 1, &pa, &pb),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            aux_vectors(&a, &b, &dt, 1, 3, &pa, &pb),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn aux_vectors_identity_b() {
        let a = fixtures::example_a();
        let b = ExactMatrix::identity(2).unwrap();
        let d = fixtures::random_matrix(&mut fixtures::rng(3), 4, 2);
        let dt = tilde_d(&a, &d, &b).unwrap();
        let (pa, pb) = (classify(&a), classify(&b));
        for j in 1..=2 {
            let v = aux_vectors(&a, &b, &dt, 1, j, &pa, &pb).unwrap();
            assert_eq!(v.d_col, dt.column(j).unwrap());
        }
    }

    #[test]
    fn general_solutions() {
        let a = fixtures::example_a();
        let b = fixtures::random_matrix(&mut fixtures::rng(5), 4, 2);
        let ls = lss_ax(&a, &b).unwrap();
        assert_eq!(
            general_solution_ax(&a, &b, &ExactMatrix::zeros(3, 2).unwrap()).unwrap(),
            ls.x
        );

        let inv = m(&[&[(1, 0), (0, 1)], &[(0, 0), (2, 0)]]);
        let rhs = m(&[&[(1, 0)], &[(3, 0)]]);
        let c = m(&[&[(5, 5)], &[(-7, 0)]]);
        assert_eq!(
            general_solution_ax(&inv, &rhs, &c).unwrap(),
            inv.inverse().unwrap().matmul(&rhs).unwrap()
        );

        let (b2, d) = (fixtures::example_b(), fixtures::example_d());
        let zero = ExactMatrix::zeros(3, 2).unwrap();
        let ls = lss_axb(&a, &b2, &d, SolvePath::Both).unwrap();
        assert_eq!(
            general_solution_axb(&a, &b2, &d, &zero, &zero).unwrap(),
            ls.x
        );
        assert!(
            general_solution_axb(&a, &b2, &d, &ExactMatrix::zeros(2, 2).unwrap(), &zero).is_err()
        );
        assert!(general_solution_ax(&a, &b, &ExactMatrix::zeros(2, 2).unwrap()).is_err());
    }

    #[test]
    fn residual_helpers() {
        let a = m(&[&[(1, 0)], &[(0, 0)]]);
        assert_eq!(
            residual_sq_ax(&a, &m(&[&[(3, 0)]]), &m(&[&[(3, 0)], &[(4, 0)]])).unwrap(),
            q(16, 1)
        );
        let x0 = m(&[&[(1, 1)]]);
        assert!(residual_sq_ax(&a, &x0, &a.matmul(&x0).unwrap())
            .unwrap()
            .is_zero());
        assert!(residual_sq_xa(&a, &x0, &a).is_err());
    }

    #[test]
    fn default_path_depends_on_profile() {
        if cfg!(debug_assertions) {
            assert_eq!(SolvePath::default(), SolvePath::Both);
        } else {
            assert_eq!(SolvePath::default(), SolvePath::DB);
        }
    }
}
