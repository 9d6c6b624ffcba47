//! Dense exact matrices over the Gaussian rationals.
//!
//! Storage is row-major and values are immutable: every operation returns a
//! new matrix. Public row and column indices are 1-based.
//!
//! Text format:
//!
//! ```text
//! # comment lines start with '#'
//! m n
//! a11 a12 ... a1n
//! ...
//! am1 am2 ... amn
//! ```

use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::IndexSubset;
use crate::error::{mismatch, Error, Result};
use crate::exec;
use crate::scalar::{parse_scalar, BigRational, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

/// Row and column selections for a minor `|A_β^α|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    pub row_set: IndexSubset,
    pub col_set: IndexSubset,
}

impl MinorSpec {
    pub fn principal(set: IndexSubset) -> Self {
        Self {
            row_set: set.clone(),
            col_set: set,
        }
    }
}

impl ExactMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(mismatch(
                "from_vec",
                format!("{} entries", rows * cols),
                format!("{}", data.len()),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(mismatch(
                "from_rows",
                format!("{n} columns in every row"),
                "ragged rows",
            ));
        }
        Self::from_vec(m, n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer `(re, im)` pairs.
    pub fn from_gaussian_integers(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&(a, b)| GaussianRational::from_integers(a, b))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_vec(rows, cols, vec![GaussianRational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut data = vec![GaussianRational::zero(); n * n];
        for k in 0..n {
            data[k * n + k] = GaussianRational::one();
        }
        Self::from_vec(n, n, data)
    }

    pub(crate) fn from_fn(
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> GaussianRational,
    ) -> Self {
        assert!(rows > 0 && cols > 0);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub(crate) fn from_parts(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Self {
        debug_assert!(rows > 0 && cols > 0 && data.len() == rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    /// Entry at 1-based `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    #[inline]
    pub(crate) fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    /// 0-based row slice.
    pub fn row_slice(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Column `j` (1-based) as an m×1 matrix.
    pub fn column(&self, j: usize) -> Result<Self> {
        self.check_col(j)?;
        Ok(Self::from_fn(self.rows, 1, |r, _| {
            self.at(r, j - 1).clone()
        }))
    }

    /// Row `i` (1-based) as a 1×n matrix.
    pub fn row(&self, i: usize) -> Result<Self> {
        self.check_row(i)?;
        Ok(Self::from_parts(
            1,
            self.cols,
            self.row_slice(i - 1).to_vec(),
        ))
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.rows {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: i,
                bound: self.rows,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j < 1 || j > self.cols {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: j,
                bound: self.cols,
            });
        }
        Ok(())
    }

    fn dims(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(mismatch(
                "matmul",
                format!("{} rows on the right", self.cols),
                rhs.dims(),
            ));
        }
        let (m, n, k) = (self.rows, rhs.cols, self.cols);
        let data = exec::map_indices(m * n, |idx| {
            let (r, c) = (idx / n, idx % n);
            let mut acc = GaussianRational::zero();
            for t in 0..k {
                let a = self.at(r, t);
                if a.is_zero() {
                    continue;
                }
                acc += &(a * rhs.at(t, c));
            }
            acc
        });
        Ok(Self::from_parts(m, n, data))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(mismatch("add", self.dims(), rhs.dims()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_parts(self.rows, self.cols, data))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(mismatch("sub", self.dims(), rhs.dims()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::from_parts(self.rows, self.cols, data))
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self::from_parts(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * k).collect(),
        )
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Squared Frobenius norm.
    pub fn frobenius_norm_sq(&self) -> BigRational {
        self.data
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x.abs_sq())
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "determinant",
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_in_place(self.data.clone(), self.rows))
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and the 0-based pivot columns. Pivots are
    /// taken as the first nonzero entry in column order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(p) = (row..m).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..n {
                    a.swap(p * n + c, row * n + c);
                }
            }
            let inv = a[row * n + col].inv().expect("nonzero pivot");
            for c in col..n {
                a[row * n + c] = &a[row * n + c] * &inv;
            }
            for r in 0..m {
                if r == row || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for c in col..n {
                    let t = &f * &a[row * n + c];
                    a[r * n + c] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (Self::from_parts(m, n, a), pivots)
    }

    /// Classical inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "inverse",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |r, c| red.at(r, n + c).clone()))
    }

    /// Submatrix on 0-based row and column index lists.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.at(r, c).clone());
            }
        }
        Self::from_parts(rows.len(), cols.len(), data)
    }

    pub fn minor(&self, spec: &MinorSpec) -> Result<GaussianRational> {
        let (rs, cs) = (&spec.row_set, &spec.col_set);
        if rs.len() != cs.len() {
            return Err(Error::InvalidCardinality {
                k: cs.len(),
                n: rs.len(),
            });
        }
        if rs.universe() != self.rows || cs.universe() != self.cols {
            return Err(mismatch(
                "minor",
                self.dims(),
                format!("selection over {}x{}", rs.universe(), cs.universe()),
            ));
        }
        Ok(self.principal_minor_raw(rs.indices(), cs.indices()))
    }

    /// `|A_set^set|` for a 1-based principal index set.
    pub fn principal_minor(&self, set: &IndexSubset) -> Result<GaussianRational> {
        self.minor(&MinorSpec::principal(set.clone()))
    }

    /// Determinant of the submatrix on 1-based `rows` × `cols`, unchecked.
    pub(crate) fn principal_minor_raw(&self, rows: &[usize], cols: &[usize]) -> GaussianRational {
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for &r in rows {
            for &c in cols {
                data.push(self.at(r - 1, c - 1).clone());
            }
        }
        det_in_place(data, k)
    }

    /// Copy with column `j` (1-based) replaced by the column vector `b`.
    pub fn replace_column(&self, j: usize, b: &Self) -> Result<Self> {
        self.check_col(j)?;
        if b.cols != 1 || b.rows != self.rows {
            return Err(mismatch(
                "replace_column",
                format!("{}x1", self.rows),
                b.dims(),
            ));
        }
        Ok(self.replace_column_with(j, b.entries()))
    }

    pub(crate) fn replace_column_with(&self, j: usize, b: &[GaussianRational]) -> Self {
        let mut out = self.clone();
        for (r, v) in b.iter().enumerate() {
            out.data[r * self.cols + (j - 1)] = v.clone();
        }
        out
    }

    /// Copy with row `i` (1-based) replaced by the row vector `b`.
    pub fn replace_row(&self, i: usize, b: &Self) -> Result<Self> {
        self.check_row(i)?;
        if b.rows != 1 || b.cols != self.cols {
            return Err(mismatch(
                "replace_row",
                format!("1x{}", self.cols),
                b.dims(),
            ));
        }
        Ok(self.replace_row_with(i, b.entries()))
    }

    pub(crate) fn replace_row_with(&self, i: usize, b: &[GaussianRational]) -> Self {
        let mut out = self.clone();
        out.data[(i - 1) * self.cols..i * self.cols].clone_from_slice(b);
        out
    }

    /// Exact text form, re-parseable by [`parse_matrix`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row_slice(r).iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

fn det_in_place(mut a: Vec<GaussianRational>, n: usize) -> GaussianRational {
    match n {
        0 => return GaussianRational::one(),
        1 => return a.pop().expect("1x1"),
        2 => return &(&a[0] * &a[3]) - &(&a[1] * &a[2]),
        _ => {}
    }
    let mut det = GaussianRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return GaussianRational::zero();
        };
        if p != col {
            for c in col..n {
                a.swap(p * n + c, col * n + c);
            }
            det = -det;
        }
        let pivot = a[col * n + col].clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r * n + col].is_zero() {
                continue;
            }
            let f = &a[r * n + col] * &inv;
            for c in col + 1..n {
                let t = &f * &a[col * n + c];
                a[r * n + c] -= &t;
            }
        }
    }
    det
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parse the matrix text format. Errors carry 1-based line and column.
pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let perr = |line: usize, column: usize, message: String| Error::ParseMatrix {
        line,
        column,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines
        .next()
        .ok_or_else(|| perr(1, 1, "missing 'rows cols' header".into()))?;
    let toks = tokens(header);
    if toks.len() != 2 {
        let col = toks.get(2).map_or(header.len() + 1, |t| t.0);
        return Err(perr(hline, col, "header must be 'rows cols'".into()));
    }
    let mut dims = [0usize; 2];
    for (slot, &(col, tok)) in dims.iter_mut().zip(&toks) {
        *slot = tok
            .parse()
            .map_err(|_| perr(hline, col, format!("invalid dimension '{tok}'")))?;
        if *slot == 0 {
            return Err(perr(hline, col, "dimensions must be positive".into()));
        }
    }
    let [m, n] = dims;
    let mut data = Vec::with_capacity(m * n);
    for r in 0..m {
        let Some((no, line)) = lines.next() else {
            return Err(perr(
                text.lines().count().max(1),
                1,
                format!("expected {m} rows, found {r}"),
            ));
        };
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.len() + 1, |t| t.0);
            return Err(perr(
                no,
                col,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        for (col, tok) in toks {
            let v = parse_scalar(tok).map_err(|e| match e {
                Error::ParseScalar { position, message } => perr(no, col + position, message),
                other => other,
            })?;
            data.push(v);
        }
    }
    if let Some((no, line)) = lines.next() {
        let col = tokens(line).first().map_or(1, |t| t.0);
        return Err(perr(no, col, "unexpected data after last row".into()));
    }
    ExactMatrix::from_vec(m, n, data)
}

/// Whitespace-separated tokens with 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..pos]));
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}
