//! Minor sums over index families, the building blocks of every
//! determinantal formula in the crate.
//!
//! For a square Gram matrix `g` of order `n` and a target size `r`:
//!
//! * [`principal_minor_sum`]: Σ_{β ∈ L_{r,n}} |g_β^β|
//! * [`column_replaced_minor_sum`]: Σ_{β ∈ J_{r,n}{i}} |(g_{.i}(v))_β^β|
//! * [`row_replaced_minor_sum`]: Σ_{α ∈ I_{r,n}{j}} |(g_{j.}(v))_α^α|
//!
//! These always enumerate. The `*_cramer` and [`gram_denominator`] helpers
//! take the full-determinant shortcut when `r` equals the order, where the
//! families collapse to the single full index set.

use num_traits::Zero;

use crate::combinatorics::{subsets, subsets_containing};
use crate::matrix::ExactMatrix;
use crate::scalar::GaussianRational;

pub fn principal_minor_sum(g: &ExactMatrix, r: usize) -> GaussianRational {
    debug_assert!(g.is_square());
    let Ok(family) = subsets(r, g.rows()) else {
        return GaussianRational::zero();
    };
    family
        .map(|beta| g.principal_minor_raw(beta.indices(), beta.indices()))
        .sum()
}

/// `i` is 1-based; `v` has `g.rows()` entries.
pub fn column_replaced_minor_sum(
    g: &ExactMatrix,
    i: usize,
    v: &[GaussianRational],
    r: usize,
) -> GaussianRational {
    replaced_minor_sum(&g.replace_column_with(i, v), i, r)
}

/// `j` is 1-based; `v` has `g.cols()` entries.
pub fn row_replaced_minor_sum(
    g: &ExactMatrix,
    j: usize,
    v: &[GaussianRational],
    r: usize,
) -> GaussianRational {
    replaced_minor_sum(&g.replace_row_with(j, v), j, r)
}

fn replaced_minor_sum(replaced: &ExactMatrix, fixed: usize, r: usize) -> GaussianRational {
    let Ok(family) = subsets_containing(r, replaced.rows(), fixed) else {
        return GaussianRational::zero();
    };
    family
        .map(|beta| replaced.principal_minor_raw(beta.indices(), beta.indices()))
        .sum()
}

pub fn gram_denominator(g: &ExactMatrix, r: usize) -> GaussianRational {
    if r == g.rows() {
        g.determinant().expect("square gram")
    } else {
        principal_minor_sum(g, r)
    }
}

pub fn column_cramer(
    g: &ExactMatrix,
    i: usize,
    v: &[GaussianRational],
    r: usize,
) -> GaussianRational {
    if r == g.rows() {
        g.replace_column_with(i, v)
            .determinant()
            .expect("square gram")
    } else {
        column_replaced_minor_sum(g, i, v, r)
    }
}

pub fn row_cramer(g: &ExactMatrix, j: usize, v: &[GaussianRational], r: usize) -> GaussianRational {
    if r == g.rows() {
        g.replace_row_with(j, v).determinant().expect("square gram")
    } else {
        row_replaced_minor_sum(g, j, v, r)
    }
}
