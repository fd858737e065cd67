//! Integer lattice reduction and recognition of algebraic numbers from
//! p-adic and high-precision decimal approximations.
//!
//! The LLL here is exact: Gram-Schmidt data is kept as rationals, so the
//! size-reduction and Lovász conditions are decided without rounding and
//! the output is platform-independent. Default delta is 99/100.

mod recognize;

pub use recognize::{
    minpoly_from_float, minpoly_from_padic, recognize_in_field, FloatApprox, MinPolyCandidate,
    RecognizeError,
};

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("basis rows are linearly dependent")]
    DependentRows,
    #[error("delta must lie in (1/4, 1]")]
    BadDelta,
    #[error("reduction cancelled")]
    Cancelled,
    #[error("empty basis")]
    Empty,
}

/// Cooperative cancellation for long reductions; observable only as an
/// error result.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Integer matrix whose rows span a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        if rows.is_empty() {
            return Err(LatticeError::Empty);
        }
        let width = rows[0].len();
        if rows.iter().any(|r| r.len() != width) {
            return Err(LatticeError::Empty);
        }
        Ok(LatticeBasis { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        LatticeBasis {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn norm_sq(&self, i: usize) -> BigInt {
        self.rows[i].iter().map(|x| x * x).sum()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// An LLL run: the reduced basis together with the unimodular transform,
/// `basis = transform * input`.
#[derive(Clone, Debug)]
pub struct LllResult {
    pub basis: LatticeBasis,
    pub transform: Vec<Vec<BigInt>>,
}

fn rat_dot(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| BigRational::from_integer(x.clone()) * y)
        .sum()
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest integer (ties rounded toward negative infinity, any tie rule
/// keeps |mu - q| <= 1/2).
fn round_rational(q: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let shifted = q + BigRational::new(BigInt::one(), two);
    shifted.floor().to_integer()
}

/// LLL reduction with rational parameter `delta` in (1/4, 1].
pub fn lll_reduce(basis: &LatticeBasis, delta: &BigRational) -> Result<LllResult, LatticeError> {
    lll_reduce_with(basis, delta, None)
}

/// Default-parameter reduction, delta = 99/100.
pub fn lll_reduce_default(basis: &LatticeBasis) -> Result<LllResult, LatticeError> {
    lll_reduce(basis, &default_delta())
}

pub fn default_delta() -> BigRational {
    BigRational::new(BigInt::from(99), BigInt::from(100))
}

/// All-integer LLL state: `d[i+1]` is the Gram determinant of the first
/// `i+1` rows and `lambda[i][j] = d[j+1] * mu[i][j]`, so every update is an
/// exact integer division (Cohen's integral variant).
struct IntLll {
    rows: Vec<Vec<BigInt>>,
    transform: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
    lambda: Vec<Vec<BigInt>>,
}

impl IntLll {
    /// Gram data for row `i` against rows `0..=i`.
    fn init_row(&mut self, i: usize) -> Result<(), LatticeError> {
        for j in 0..=i {
            let mut u = int_dot(&self.rows[i], &self.rows[j]);
            for k in 0..j {
                u = (&self.d[k + 1] * u - &self.lambda[i][k] * &self.lambda[j][k]) / &self.d[k];
            }
            if j < i {
                self.lambda[i][j] = u;
            } else {
                if u.is_zero() {
                    return Err(LatticeError::DependentRows);
                }
                self.d[i + 1] = u;
            }
        }
        Ok(())
    }

    /// Size-reduces row `k` against row `l` when `2|lambda| > d`.
    fn reduce(&mut self, k: usize, l: usize) {
        let two_lambda = BigInt::from(2) * self.lambda[k][l].abs();
        if two_lambda <= self.d[l + 1] {
            return;
        }
        // nearest integer to lambda / d
        let num = BigInt::from(2) * &self.lambda[k][l] + &self.d[l + 1];
        let den = BigInt::from(2) * &self.d[l + 1];
        let q = num.div_floor(&den);
        if q.is_zero() {
            return;
        }
        for t in 0..self.rows[0].len() {
            let v = &self.rows[k][t] - &q * &self.rows[l][t];
            self.rows[k][t] = v;
        }
        for t in 0..self.transform[0].len() {
            let v = &self.transform[k][t] - &q * &self.transform[l][t];
            self.transform[k][t] = v;
        }
        for i in 0..l {
            let v = &self.lambda[k][i] - &q * &self.lambda[l][i];
            self.lambda[k][i] = v;
        }
        let v = &self.lambda[k][l] - &q * &self.d[l + 1];
        self.lambda[k][l] = v;
    }

    /// Exchanges rows `k` and `k-1`, updating the integer GSO data.
    fn swap(&mut self, k: usize, k_max: usize) {
        self.rows.swap(k, k - 1);
        self.transform.swap(k, k - 1);
        for j in 0..k.saturating_sub(1) {
            let a = self.lambda[k][j].clone();
            let b = self.lambda[k - 1][j].clone();
            self.lambda[k][j] = b;
            self.lambda[k - 1][j] = a;
        }
        let lam = self.lambda[k][k - 1].clone();
        let b = (&self.d[k - 1] * &self.d[k + 1] + &lam * &lam) / &self.d[k];
        for i in k + 1..=k_max {
            let t = self.lambda[i][k].clone();
            self.lambda[i][k] = (&self.d[k + 1] * &self.lambda[i][k - 1] - &lam * &t) / &self.d[k];
            self.lambda[i][k - 1] = (&b * &t + &lam * &self.lambda[i][k]) / &self.d[k + 1];
        }
        self.d[k] = b;
    }
}

pub fn lll_reduce_with(
    basis: &LatticeBasis,
    delta: &BigRational,
    cancel: Option<&CancelToken>,
) -> Result<LllResult, LatticeError> {
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    if *delta <= quarter || *delta > BigRational::one() {
        return Err(LatticeError::BadDelta);
    }
    let n = basis.rank();
    let mut st = IntLll {
        rows: basis.rows.clone(),
        transform: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect(),
        d: {
            let mut d = vec![BigInt::zero(); n + 1];
            d[0] = BigInt::one();
            d
        },
        lambda: (0..n).map(|i| vec![BigInt::zero(); i]).collect(),
    };
    st.init_row(0)?;
    if n == 1 {
        return Ok(LllResult {
            basis: LatticeBasis { rows: st.rows },
            transform: st.transform,
        });
    }

    let (dp, dq) = (delta.numer().clone(), delta.denom().clone());
    let mut k = 1usize;
    let mut k_max = 0usize;
    while k < n {
        if let Some(token) = cancel {
            if token.is_cancelled() {
                return Err(LatticeError::Cancelled);
            }
        }
        if k > k_max {
            k_max = k;
            st.init_row(k)?;
        }
        st.reduce(k, k - 1);
        // Lovász in integer form:
        //   d[k+1] d[k-1] + lambda^2 >= delta * d[k]^2
        let lam = &st.lambda[k][k - 1];
        let lhs = &dq * (&st.d[k + 1] * &st.d[k - 1] + lam * lam);
        let rhs = &dp * (&st.d[k] * &st.d[k]);
        if lhs < rhs {
            st.swap(k, k_max);
            k = k.max(2) - 1;
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                st.reduce(k, l);
            }
            k += 1;
        }
    }
    Ok(LllResult {
        basis: LatticeBasis { rows: st.rows },
        transform: st.transform,
    })
}

/// Direct check of the LLL output conditions from fresh Gram-Schmidt data.
pub fn verify_lll_invariants(basis: &LatticeBasis, delta: &BigRational) -> bool {
    let Ok(gso) = compute_gso(&basis.rows) else {
        return false;
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for i in 0..basis.rank() {
        for j in 0..i {
            if gso.mu[i][j].abs() > half {
                return false;
            }
        }
    }
    for k in 1..basis.rank() {
        let mu = &gso.mu[k][k - 1];
        if gso.norms[k] < (delta - mu * mu) * &gso.norms[k - 1] {
            return false;
        }
    }
    true
}

/// Result of [`shrink_basis`]: same row lattice, smaller entries, rows
/// sorted by max-norm; `transform * input = matrix`.
#[derive(Clone, Debug)]
pub struct ShrinkResult {
    pub matrix: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
}

/// Trades equation sparsity for coefficient size: LLL-reduces the row
/// lattice of an integer equation matrix. The output never has a larger
/// maximum entry than the input (the input is returned when reduction
/// would not help), rows come back sorted by max-norm ascending.
pub fn shrink_basis(matrix: &[Vec<BigInt>]) -> Result<ShrinkResult, LatticeError> {
    let basis = LatticeBasis::new(matrix.to_vec())?;
    let reduced = lll_reduce_default(&basis)?;
    let n = matrix.len();
    let max_abs = |rows: &[Vec<BigInt>]| -> BigInt {
        rows.iter()
            .flat_map(|r| r.iter())
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    };
    let (mut rows, mut transform) = if max_abs(reduced.basis.rows()) <= max_abs(matrix) {
        (reduced.basis.rows.clone(), reduced.transform)
    } else {
        (matrix.to_vec(), linalg::identity(&crate::exact::IntegerRing, n))
    };
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| {
        (
            rows[i].iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero),
            rows[i].clone(),
        )
    });
    rows = idx.iter().map(|&i| rows[i].clone()).collect();
    transform = idx.iter().map(|&i| transform[i].clone()).collect();
    debug_assert!(linalg::is_unimodular(&transform));
    Ok(ShrinkResult {
        matrix: rows,
        transform,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_fixed() {
        let b = LatticeBasis::from_i64(&[&[1, 0], &[0, 1]]);
        let r = lll_reduce(&b, &BigRational::new(BigInt::from(3), BigInt::from(4))).unwrap();
        assert_eq!(r.basis, b);
        assert!(linalg::is_unimodular(&r.transform));
    }

    #[test]
    fn rank3_short_vector() {
        let b = LatticeBasis::from_i64(&[&[1, 1, 1], &[-1, 0, 2], &[3, 5, 6]]);
        let r = lll_reduce(&b, &BigRational::new(BigInt::from(3), BigInt::from(4))).unwrap();
        assert!(verify_lll_invariants(&r.basis, &BigRational::new(BigInt::from(3), BigInt::from(4))));
        let min = oracle::shortest_vector_norm_sq(b.rows());
        assert_eq!(min, BigInt::one());
        assert!(r.basis.norm_sq(0) <= BigInt::from(2));
        // with delta = 3/4 on this lattice the first vector is the minimum
        assert_eq!(r.basis.norm_sq(0), min);
        assert!(linalg::is_unimodular(&r.transform));
        // transform really maps input to output
        let prod = mat_mul_z(&r.transform, b.rows());
        assert_eq!(prod, r.basis.rows);
    }

    fn mat_mul_z(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let cols = b[0].len();
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| row.iter().zip(b).map(|(c, br)| c * &br[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn knapsack_style_unimodular_recovery() {
        let b = LatticeBasis::from_i64(&[&[1, 0], &[1_000_000, 1]]);
        let r = lll_reduce_default(&b).unwrap();
        // the lattice is Z^2: reduced rows are +-unit vectors
        let mut norms: Vec<BigInt> = (0..2).map(|i| r.basis.norm_sq(i)).collect();
        norms.sort();
        assert_eq!(norms, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn dependent_rows_detected() {
        let b = LatticeBasis::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            lll_reduce_default(&b).unwrap_err(),
            LatticeError::DependentRows
        );
    }

    #[test]
    fn bad_delta_rejected() {
        let b = LatticeBasis::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            lll_reduce(&b, &BigRational::new(BigInt::from(1), BigInt::from(4))).unwrap_err(),
            LatticeError::BadDelta
        );
    }

    #[test]
    fn cancellation_reports_as_error() {
        let token = CancelToken::new();
        token.cancel();
        let b = LatticeBasis::from_i64(&[&[7, 8], &[12, 5]]);
        assert_eq!(
            lll_reduce_with(&b, &default_delta(), Some(&token)).unwrap_err(),
            LatticeError::Cancelled
        );
    }

    #[test]
    fn random_lattices_invariants_and_shortest_vector() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1234);
        let delta = default_delta();
        for _ in 0..20 {
            let n = rng.gen_range(2..=4usize);
            let rows: Vec<Vec<BigInt>> = loop {
                let cand: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-10i64..=10))).collect())
                    .collect();
                if !linalg::det_bigint(&cand).is_zero() {
                    break cand;
                }
            };
            let b = LatticeBasis::new(rows.clone()).unwrap();
            let r = lll_reduce(&b, &delta).unwrap();
            assert!(verify_lll_invariants(&r.basis, &delta));
            assert!(linalg::is_unimodular(&r.transform));
            assert_eq!(mat_mul_z(&r.transform, &rows), r.basis.rows);
            let min = oracle::shortest_vector_norm_sq(&rows);
            assert_eq!(
                r.basis.norm_sq(0),
                min,
                "first reduced vector is not shortest for {rows:?}"
            );
        }
    }

    #[test]
    fn shrink_finds_difference_vector() {
        let rows = vec![
            vec![BigInt::from(1_000_000), BigInt::from(999_999)],
            vec![BigInt::from(999_999), BigInt::from(999_998)],
        ];
        let r = shrink_basis(&rows).unwrap();
        let target = vec![BigInt::from(1), BigInt::from(1)];
        let neg: Vec<BigInt> = target.iter().map(|x| -x).collect();
        assert!(
            r.matrix.contains(&target) || r.matrix.contains(&neg),
            "expected (1,1) in {:?}",
            r.matrix
        );
        assert!(linalg::is_unimodular(&r.transform));
        assert_eq!(mat_mul_z(&r.transform, &rows), r.matrix);
    }

    #[test]
    fn shrink_already_reduced_is_stable() {
        let rows = vec![
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)],
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(0)],
        ];
        let r = shrink_basis(&rows).unwrap();
        let mut sorted = rows.clone();
        sorted.sort_by_key(|row| {
            (
                row.iter().map(|x| x.abs()).max().unwrap(),
                row.clone(),
            )
        });
        assert_eq!(r.matrix, sorted);
    }

    #[test]
    fn shrink_recovers_planted_small_rows() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let n = 5usize;
            let plant: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect())
                .collect();
            if linalg::det_bigint(&plant).is_zero() {
                continue;
            }
            // scramble by a product of random elementary unimodular moves
            let mut mixed = plant.clone();
            for _ in 0..40 {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                let c = BigInt::from(rng.gen_range(-7i64..=7));
                for t in 0..n {
                    let v = &mixed[i][t] + &c * &mixed[j][t];
                    mixed[i][t] = v;
                }
            }
            let r = shrink_basis(&mixed).unwrap();
            let plant_max = plant
                .iter()
                .flat_map(|row| row.iter())
                .map(|x| x.abs())
                .max()
                .unwrap();
            let out_max = r
                .matrix
                .iter()
                .flat_map(|row| row.iter())
                .map(|x| x.abs())
                .max()
                .unwrap();
            assert!(
                out_max <= BigInt::from(4) * &plant_max,
                "entries {out_max} vs plant {plant_max}"
            );
            let in_max = mixed
                .iter()
                .flat_map(|row| row.iter())
                .map(|x| x.abs())
                .max()
                .unwrap();
            assert!(out_max <= in_max);
        }
    }
}
