//! Moore-Penrose inverses.
//!
//! [`mp_det`] evaluates the determinantal (minor-sum) representation:
//!
//! ```text
//! a⁺_ij = Σ_{β ∈ J_{r,n}{i}} |((A*A)_{.i}(a*_{.j}))_β^β|  /  Σ_{β ∈ J_{r,n}} |(A*A)_β^β|
//! a⁺_ij = Σ_{α ∈ I_{r,m}{j}} |((AA*)_{j.}(a*_{i.}))_α^α|  /  Σ_{α ∈ I_{r,m}} |(AA*)_α^α|
//! ```
//!
//! [`mp_oracle`] is an independent route through an exact full-rank
//! factorization, and [`mp_limit`] checks the regularized limit
//! `A*(AA* + λI)⁻¹ → A⁺` in floating point.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{mismatch, Error, Result};
use crate::exec;
use crate::matrix::ExactMatrix;
use crate::minors::{column_cramer, gram_denominator, row_cramer};
use crate::scalar::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankKind {
    Zero,
    SquareInvertible,
    FullColumn,
    FullRow,
    Deficient,
}

impl fmt::Display for RankKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankKind::Zero => "Zero",
            RankKind::SquareInvertible => "SquareInvertible",
            RankKind::FullColumn => "FullColumn",
            RankKind::FullRow => "FullRow",
            RankKind::Deficient => "Deficient",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankProfile {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kind: RankKind,
}

impl RankProfile {
    pub fn new(rows: usize, cols: usize, rank: usize) -> Self {
        let kind = if rank == 0 {
            RankKind::Zero
        } else if rank == rows && rank == cols {
            RankKind::SquareInvertible
        } else if rank == cols {
            RankKind::FullColumn
        } else if rank == rows {
            RankKind::FullRow
        } else {
            RankKind::Deficient
        };
        Self {
            rows,
            cols,
            rank,
            kind,
        }
    }

    pub fn full_column_rank(&self) -> bool {
        self.rank == self.cols
    }

    pub fn full_row_rank(&self) -> bool {
        self.rank == self.rows
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (m={}, n={}, r={})",
            self.kind, self.rows, self.cols, self.rank
        )
    }
}

pub fn classify(a: &ExactMatrix) -> RankProfile {
    RankProfile::new(a.rows(), a.cols(), a.rank())
}

/// Which Gram matrix the determinantal representation is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GramVariant {
    /// Minors of `A*A`, summed over `J_{r,n}`.
    ColumnGram,
    /// Minors of `AA*`, summed over `I_{r,m}`.
    RowGram,
}

/// Moore-Penrose inverse through the determinantal representation, total
/// over all inputs. Rank zero yields the n×m zero matrix; otherwise the
/// smaller Gram matrix is used.
pub fn mp_det(a: &ExactMatrix) -> ExactMatrix {
    let profile = classify(a);
    match profile.kind {
        RankKind::Zero => zero_inverse(a),
        RankKind::SquareInvertible => classical_inverse(a),
        RankKind::FullColumn => det_representation(a, profile.rank, GramVariant::ColumnGram),
        RankKind::FullRow => det_representation(a, profile.rank, GramVariant::RowGram),
        RankKind::Deficient if a.cols() <= a.rows() => {
            det_representation(a, profile.rank, GramVariant::ColumnGram)
        }
        RankKind::Deficient => det_representation(a, profile.rank, GramVariant::RowGram),
    }
}

/// Moore-Penrose inverse through the requested representation.
pub fn mp_det_variant(a: &ExactMatrix, variant: GramVariant) -> Result<ExactMatrix> {
    let r = a.rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    Ok(det_representation(a, r, variant))
}

pub(crate) fn zero_inverse(a: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::zeros(a.cols(), a.rows()).expect("positive dims")
}

/// `a⁻¹_ij = det(A_{.i}(e_j)) / det(A)`.
fn classical_inverse(a: &ExactMatrix) -> ExactMatrix {
    let n = a.rows();
    let det_inv = a.determinant().and_then(|d| d.inv()).expect("invertible");
    let data = exec::map_indices(n * n, |idx| {
        let (i, j) = (idx / n + 1, idx % n + 1);
        let mut e = vec![GaussianRational::zero(); n];
        e[j - 1] = GaussianRational::one();
        &a.replace_column_with(i, &e).determinant().expect("square") * &det_inv
    });
    ExactMatrix::from_parts(n, n, data)
}

pub(crate) fn det_representation(a: &ExactMatrix, r: usize, variant: GramVariant) -> ExactMatrix {
    let (m, n) = a.shape();
    let adj = a.adjoint();
    match variant {
        GramVariant::ColumnGram => {
            let gram = adj.matmul(a).expect("conformal");
            let den_inv = gram_denominator(&gram, r)
                .inv()
                .expect("positive denominator");
            // a*_{.j} is column j of A*, the conjugate of row j of A
            let cols: Vec<Vec<GaussianRational>> = (1..=m)
                .map(|j| adj.column(j).expect("in range").entries().to_vec())
                .collect();
            let data = exec::map_indices(n * m, |idx| {
                let (i, j) = (idx / m + 1, idx % m);
                &column_cramer(&gram, i, &cols[j], r) * &den_inv
            });
            ExactMatrix::from_parts(n, m, data)
        }
        GramVariant::RowGram => {
            let gram = a.matmul(&adj).expect("conformal");
            let den_inv = gram_denominator(&gram, r)
                .inv()
                .expect("positive denominator");
            let data = exec::map_indices(n * m, |idx| {
                let (i, j) = (idx / m, idx % m + 1);
                &row_cramer(&gram, j, adj.row_slice(i), r) * &den_inv
            });
            ExactMatrix::from_parts(n, m, data)
        }
    }
}

/// Independent oracle: `A = FG` from the reduced row echelon form, then
/// `A⁺ = G*(GG*)⁻¹(F*F)⁻¹F*`.
pub fn mp_oracle(a: &ExactMatrix) -> ExactMatrix {
    let (rref, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return zero_inverse(a);
    }
    let all_rows: Vec<usize> = (0..a.rows()).collect();
    let all_cols: Vec<usize> = (0..a.cols()).collect();
    let first_rows: Vec<usize> = (0..r).collect();
    let f = a.select(&all_rows, &pivots);
    let g = rref.select(&first_rows, &all_cols);
    let gs = g.adjoint();
    let fs = f.adjoint();
    let ggs_inv = g
        .matmul(&gs)
        .and_then(|x| x.inverse())
        .expect("full row rank factor");
    let fsf_inv = fs
        .matmul(&f)
        .and_then(|x| x.inverse())
        .expect("full column rank factor");
    gs.matmul(&ggs_inv)
        .and_then(|x| x.matmul(&fsf_inv))
        .and_then(|x| x.matmul(&fs))
        .expect("conformal")
}

/// Outcome of the four Penrose equations for a candidate `X`:
/// 1) (AX)* = AX, 2) (XA)* = XA, 3) AXA = A, 4) XAX = X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PenroseReport {
    pub eq1: bool,
    pub eq2: bool,
    pub eq3: bool,
    pub eq4: bool,
    /// `(equation number, lhs − rhs)` for each failed equation.
    pub residuals: Vec<(u8, ExactMatrix)>,
}

impl PenroseReport {
    pub fn all_pass(&self) -> bool {
        self.eq1 && self.eq2 && self.eq3 && self.eq4
    }

    pub fn passed(&self) -> [bool; 4] {
        [self.eq1, self.eq2, self.eq3, self.eq4]
    }
}

pub fn penrose_check(a: &ExactMatrix, x: &ExactMatrix) -> Result<PenroseReport> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(mismatch(
            "penrose_check",
            format!("{}x{}", a.cols(), a.rows()),
            format!("{}x{}", x.rows(), x.cols()),
        ));
    }
    let ax = a.matmul(x)?;
    let xa = x.matmul(a)?;
    let pairs = [
        (ax.adjoint(), ax.clone()),
        (xa.adjoint(), xa.clone()),
        (ax.matmul(a)?, a.clone()),
        (xa.matmul(x)?, x.clone()),
    ];
    let mut ok = [false; 4];
    let mut residuals = Vec::new();
    for (k, (lhs, rhs)) in pairs.iter().enumerate() {
        ok[k] = lhs == rhs;
        if !ok[k] {
            residuals.push((k as u8 + 1, lhs.sub(rhs)?));
        }
    }
    Ok(PenroseReport {
        eq1: ok[0],
        eq2: ok[1],
        eq3: ok[2],
        eq4: ok[3],
        residuals,
    })
}

/// Default λ schedule for [`mp_limit`].
pub const DEFAULT_LAMBDAS: [f64; 3] = [1e-3, 1e-6, 1e-9];

/// Dense row-major complex double matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl FloatMatrix {
    pub fn from_exact(x: &ExactMatrix) -> Self {
        Self {
            rows: x.rows(),
            cols: x.cols(),
            data: x
                .entries()
                .iter()
                .map(GaussianRational::to_complex64)
                .collect(),
        }
    }

    /// `(A*A + λI)⁻¹A*` as the solution of the damped least-squares problem
    /// `[A; √λ I] X ≈ [I; 0]`, by Householder QR.
    fn damped_pinv(&self, lambda: f64) -> Option<Self> {
        let (m, n) = (self.rows, self.cols);
        let h = m + n;
        let mut aug = vec![Complex64::zero(); h * n];
        aug[..m * n].copy_from_slice(&self.data);
        let root = lambda.sqrt();
        for k in 0..n {
            aug[(m + k) * n + k] = Complex64::new(root, 0.0);
        }
        let mut rhs = vec![Complex64::zero(); h * m];
        for k in 0..m {
            rhs[k * m + k] = Complex64::one();
        }
        for k in 0..n {
            let norm = (k..h)
                .map(|r| aug[r * n + k].norm_sqr())
                .sum::<f64>()
                .sqrt();
            if norm == 0.0 || !norm.is_finite() {
                return None;
            }
            let x0 = aug[k * n + k];
            let phase = if x0.norm() == 0.0 {
                Complex64::one()
            } else {
                x0 / x0.norm()
            };
            let alpha = -phase * norm;
            let mut v: Vec<Complex64> = (k..h).map(|r| aug[r * n + k]).collect();
            v[0] -= alpha;
            let vv: f64 = v.iter().map(Complex64::norm_sqr).sum();
            if vv == 0.0 {
                continue;
            }
            let reflect = |data: &mut [Complex64], width: usize, col: usize| {
                let s: Complex64 = v
                    .iter()
                    .enumerate()
                    .map(|(t, vi)| vi.conj() * data[(k + t) * width + col])
                    .sum();
                let f = s * (2.0 / vv);
                for (t, vi) in v.iter().enumerate() {
                    data[(k + t) * width + col] -= f * vi;
                }
            };
            for c in k..n {
                reflect(&mut aug, n, c);
            }
            for c in 0..m {
                reflect(&mut rhs, m, c);
            }
        }
        let mut x = vec![Complex64::zero(); n * m];
        for c in 0..m {
            for r in (0..n).rev() {
                let mut acc = rhs[r * m + c];
                for t in r + 1..n {
                    acc -= aug[r * n + t] * x[t * m + c];
                }
                let d = aug[r * n + r];
                if d.norm() == 0.0 {
                    return None;
                }
                x[r * m + c] = acc / d;
            }
        }
        x.iter().all(|z| z.is_finite()).then_some(Self {
            rows: n,
            cols: m,
            data: x,
        })
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitApprox {
    pub matrix: FloatMatrix,
    /// Max-entry deviation from the exact `mp_det(a)`.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitStep {
    pub lambda: f64,
    pub outcome: std::result::Result<LimitApprox, Error>,
}

/// Evaluate `A*(AA* + λI)⁻¹` for each λ and compare with `mp_det(a)`.
pub fn mp_limit(a: &ExactMatrix, lambdas: &[f64]) -> Result<Vec<LimitStep>> {
    let valid = lambdas.iter().all(|l| *l > 0.0 && l.is_finite())
        && lambdas.windows(2).all(|w| w[1] < w[0]);
    if !valid {
        return Err(Error::InvalidLambdaSchedule);
    }
    let exact = FloatMatrix::from_exact(&mp_det(a));
    let float_a = FloatMatrix::from_exact(a);
    let steps = lambdas
        .iter()
        .map(|&lambda| {
            let outcome = float_a
                .damped_pinv(lambda)
                .map(|matrix| {
                    let deviation = matrix.max_deviation(&exact);
                    LimitApprox { matrix, deviation }
                })
                .ok_or(Error::Singular);
            LimitStep { lambda, outcome }
        })
        .collect();
    Ok(steps)
}
