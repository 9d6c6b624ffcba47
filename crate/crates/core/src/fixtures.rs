//! Reference inputs: the worked AXB = D example and a deterministic random
//! suite of small Gaussian-integer matrices covering every shape up to 4×5
//! and every achievable rank.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::ExactMatrix;
use crate::scalar::GaussianRational;

/// 4×3, rank 2.
pub fn example_a() -> ExactMatrix {
    ExactMatrix::from_gaussian_integers(&[
        &[(1, 0), (0, 1), (0, 1)],
        &[(0, 1), (-1, 0), (-1, 0)],
        &[(0, 0), (1, 0), (0, 0)],
        &[(-1, 0), (0, 0), (0, -1)],
    ])
    .expect("static fixture")
}

/// 2×3, rank 1.
pub fn example_b() -> ExactMatrix {
    ExactMatrix::from_gaussian_integers(&[&[(0, 1), (1, 0), (0, -1)], &[(-1, 0), (0, 1), (1, 0)]])
        .expect("static fixture")
}

/// 4×3 right-hand side.
pub fn example_d() -> ExactMatrix {
    ExactMatrix::from_gaussian_integers(&[
        &[(1, 0), (0, 1), (1, 0)],
        &[(0, 1), (0, 0), (1, 0)],
        &[(1, 0), (0, 1), (0, 0)],
        &[(0, 0), (1, 0), (0, 1)],
    ])
    .expect("static fixture")
}

/// Gaussian integers with re, im in -2..=2 and modulus at most 2.
const SMALL_ENTRIES: [(i64, i64); 13] = [
    (0, 0),
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
    (2, 0),
    (-2, 0),
    (0, 2),
    (0, -2),
];

const UNITS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_entry<R: Rng>(rng: &mut R) -> GaussianRational {
    // zero is over-weighted
    if rng.gen_bool(0.25) {
        return GaussianRational::from_integers(0, 0);
    }
    let (re, im) = SMALL_ENTRIES[rng.gen_range(0..SMALL_ENTRIES.len())];
    GaussianRational::from_integers(re, im)
}

/// Uniform random m×n matrix of small Gaussian integers.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> ExactMatrix {
    let data = (0..rows * cols).map(|_| small_entry(rng)).collect();
    ExactMatrix::from_vec(rows, cols, data).expect("positive dims")
}

/// Random m×n matrix of exact rank `rank` whose entries still have modulus
/// at most 2: `rank` independent rows, the rest zero rows or unit multiples
/// of those, in shuffled order.
pub fn random_matrix_with_rank<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    rank: usize,
) -> ExactMatrix {
    assert!(rank <= rows.min(cols));
    let zero = GaussianRational::from_integers(0, 0);
    if rank == 0 {
        return ExactMatrix::zeros(rows, cols).expect("positive dims");
    }
    let basis = loop {
        let candidate = random_matrix(rng, rank, cols);
        if candidate.rank() == rank {
            break candidate;
        }
    };
    let mut out_rows: Vec<Vec<GaussianRational>> =
        (0..rank).map(|r| basis.row_slice(r).to_vec()).collect();
    for _ in rank..rows {
        if rng.gen_bool(0.2) {
            out_rows.push(vec![zero.clone(); cols]);
        } else {
            let src = rng.gen_range(0..rank);
            let (re, im) = UNITS[rng.gen_range(0..UNITS.len())];
            let u = GaussianRational::from_integers(re, im);
            out_rows.push(basis.row_slice(src).iter().map(|x| x * &u).collect());
        }
    }
    out_rows.shuffle(rng);
    let m = ExactMatrix::from_rows(out_rows).expect("rectangular");
    debug_assert_eq!(m.rank(), rank);
    m
}

/// Every `(rows, cols, rank)` with rows ≤ 4, cols ≤ 5.
pub fn suite_shapes() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for rows in 1..=4 {
        for cols in 1..=5 {
            for rank in 0..=rows.min(cols) {
                out.push((rows, cols, rank));
            }
        }
    }
    out
}

/// Deterministic suite: `per_shape` matrices for every shape/rank triple.
pub fn matrix_suite(seed: u64, per_shape: usize) -> Vec<ExactMatrix> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for (rows, cols, rank) in suite_shapes() {
        for _ in 0..per_shape {
            out.push(random_matrix_with_rank(&mut rng, rows, cols, rank));
        }
    }
    out
}
