//! Dense linear algebra over the coefficient rings: just enough for
//! coordinate changes, Reynolds projectors, decomposition solves and
//! unimodularity checks. Matrices are `Vec<Vec<Elem>>` in row-major order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::ring::Ring;

pub type Matrix<R> = Vec<Vec<<R as Ring>::Elem>>;

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![ring.zero(); m]; n];
    for i in 0..n {
        assert_eq!(a[i].len(), k, "inner dimensions differ");
        for (t, a_it) in a[i].iter().enumerate() {
            if ring.is_zero(a_it) {
                continue;
            }
            for j in 0..m {
                out[i][j] = ring.add(&out[i][j], &ring.mul(a_it, &b[t][j]));
            }
        }
    }
    out
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R>, v: &[R::Elem]) -> Vec<R::Elem> {
    a.iter()
        .map(|row| {
            let mut acc = ring.zero();
            for (x, y) in row.iter().zip(v) {
                acc = ring.add(&acc, &ring.mul(x, y));
            }
            acc
        })
        .collect()
}

pub fn scale<R: Ring>(ring: &R, a: &Matrix<R>, c: &R::Elem) -> Matrix<R> {
    a.iter()
        .map(|row| row.iter().map(|x| ring.mul(x, c)).collect())
        .collect()
}

pub fn add<R: Ring>(ring: &R, a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| ring.add(x, y)).collect())
        .collect()
}

/// Inverse over a field; `None` when singular.
pub fn invert<R: Ring>(ring: &R, a: &Matrix<R>) -> Option<Matrix<R>> {
    assert!(ring.is_field(), "matrix inversion needs a field");
    let n = a.len();
    let mut work: Vec<Vec<R::Elem>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !ring.is_zero(&work[r][col]))?;
        work.swap(col, pivot);
        let inv = ring.inv(&work[col][col])?;
        for j in 0..2 * n {
            work[col][j] = ring.mul(&work[col][j], &inv);
        }
        for r in 0..n {
            if r == col || ring.is_zero(&work[r][col]) {
                continue;
            }
            let factor = work[r][col].clone();
            for j in 0..2 * n {
                let t = ring.mul(&factor, &work[col][j]);
                work[r][j] = ring.sub(&work[r][j], &t);
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome<E> {
    Unique(Vec<E>),
    NoSolution,
    /// Consistent but underdetermined; carries one particular solution.
    Underdetermined(Vec<E>),
}

/// Solves `A x = b` over a field by Gaussian elimination with deterministic
/// first-nonzero pivoting.
pub fn solve<R: Ring>(ring: &R, a: &Matrix<R>, b: &[R::Elem]) -> SolveOutcome<R::Elem> {
    assert!(ring.is_field());
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut work: Vec<Vec<R::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !ring.is_zero(&work[r][col])) else {
            continue;
        };
        work.swap(rank, p);
        let inv = ring.inv(&work[rank][col]).expect("field inverse");
        for j in col..=cols {
            work[rank][j] = ring.mul(&work[rank][j], &inv);
        }
        for r in 0..rows {
            if r == rank || ring.is_zero(&work[r][col]) {
                continue;
            }
            let factor = work[r][col].clone();
            for j in col..=cols {
                let t = ring.mul(&factor, &work[rank][j]);
                work[r][j] = ring.sub(&work[r][j], &t);
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    for row in work.iter().skip(rank) {
        if !ring.is_zero(&row[cols]) {
            return SolveOutcome::NoSolution;
        }
    }
    let mut x = vec![ring.zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = work[r][cols].clone();
    }
    if rank == cols {
        SolveOutcome::Unique(x)
    } else {
        SolveOutcome::Underdetermined(x)
    }
}

pub fn trace<R: Ring>(ring: &R, a: &Matrix<R>) -> R::Elem {
    let mut acc = ring.zero();
    for (i, row) in a.iter().enumerate() {
        acc = ring.add(&acc, &row[i]);
    }
    acc
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
pub fn det_bigint(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = t;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// |det| == 1 test for integer matrices.
pub fn is_unimodular(a: &[Vec<BigInt>]) -> bool {
    det_bigint(a).abs().is_one()
}
