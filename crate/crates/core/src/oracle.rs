//! Independent brute-force reference computations used by the test suites.
//!
//! Nothing here shares code with the algorithms it cross-checks: monomial
//! counting is plain enumeration, the shortest-vector search is a bounded
//! coefficient-box sweep, and the high-precision constants come from
//! integer square roots and complex Newton iteration on exact rationals.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::GaussianRational;
use crate::mpoly::Monomial;

/// All exponent vectors of the given arity and total degree.
pub fn monomials_of_degree(arity: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; arity];
    fn rec(current: &mut Vec<u16>, pos: usize, remaining: usize, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = remaining as u16;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for d in 0..=remaining {
            current[pos] = d as u16;
            rec(current, pos + 1, remaining - d, out);
        }
    }
    if arity == 0 {
        return out;
    }
    rec(&mut current, 0, degree, &mut out);
    out
}

/// Number of degree-`degree` monomials not divisible by any of the leading
/// monomials: the brute-force Hilbert function of the quotient.
pub fn standard_monomial_count(leading: &[Monomial], arity: usize, degree: usize) -> u64 {
    monomials_of_degree(arity, degree)
        .into_iter()
        .filter(|m| !leading.iter().any(|l| l.divides(m)))
        .count() as u64
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact squared norm of the shortest nonzero vector of the row lattice,
/// by enumerating a coefficient box whose soundness follows from
/// Cauchy-Schwarz against the rows of `G^{-1} B`. Intended for small ranks.
pub fn shortest_vector_norm_sq(basis: &[Vec<BigInt>]) -> BigInt {
    let n = basis.len();
    assert!(n >= 1 && n <= 6, "oracle is for small ranks");
    let b: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from_integer(c.clone())).collect())
        .collect();
    // radius: the shortest input row
    let mut radius_sq = dot(&b[0], &b[0]);
    for row in &b[1..] {
        let ns = dot(row, row);
        if ns < radius_sq {
            radius_sq = ns;
        }
    }
    // Gram inverse
    let gram: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| dot(&b[i], &b[j])).collect())
        .collect();
    let q = crate::exact::RationalField;
    let ginv = crate::linalg::invert(&q, &gram).expect("rows must be independent");
    let ginv_b = crate::linalg::mat_mul(&q, &ginv, &b);
    // |c_i| <= |v| * |row_i(G^-1 B)| for v = c B
    let bounds: Vec<i64> = ginv_b
        .iter()
        .map(|row| {
            let bound_sq = &radius_sq * dot(row, row);
            // smallest integer t with t^2 >= bound_sq
            let num = bound_sq.numer().clone();
            let den = bound_sq.denom().clone();
            let mut t = (num / den).sqrt();
            while BigRational::from_integer(&t * &t) < bound_sq {
                t += BigInt::one();
            }
            t.to_string().parse::<i64>().expect("oracle bound fits i64")
        })
        .collect();

    let mut best: Option<BigInt> = None;
    let mut coeffs = vec![0i64; n];
    fn sweep(
        pos: usize,
        coeffs: &mut Vec<i64>,
        bounds: &[i64],
        basis: &[Vec<BigInt>],
        best: &mut Option<BigInt>,
    ) {
        if pos == coeffs.len() {
            if coeffs.iter().all(|&c| c == 0) {
                return;
            }
            let dim = basis[0].len();
            let mut v = vec![BigInt::zero(); dim];
            for (c, row) in coeffs.iter().zip(basis) {
                if *c == 0 {
                    continue;
                }
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi += BigInt::from(*c) * ri;
                }
            }
            let norm: BigInt = v.iter().map(|x| x * x).sum();
            if norm.is_zero() {
                return;
            }
            match best {
                Some(b) if *b <= norm => {}
                _ => *best = Some(norm),
            }
            return;
        }
        for c in -bounds[pos]..=bounds[pos] {
            coeffs[pos] = c;
            sweep(pos + 1, coeffs, bounds, basis, best);
        }
        coeffs[pos] = 0;
    }
    sweep(0, &mut coeffs, &bounds, basis, &mut best);
    best.expect("nonzero lattice vector exists")
}

/// `sqrt(n)` truncated to `digits` decimal digits, via the integer square
/// root of `n * 10^(2*digits)`.
pub fn approx_sqrt(n: u64, digits: usize) -> BigRational {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = BigInt::from(n) * &scale * &scale;
    BigRational::new(scaled.sqrt(), scale)
}

fn round_to_digits(q: &BigRational, digits: usize) -> BigRational {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    BigRational::new(rounded, scale)
}

/// A cube root of `c` to `digits` decimal digits by Newton iteration
/// `z <- (2 z^3 + c) / (3 z^2)` in exact rational complex arithmetic,
/// started from a double-precision seed and verified by substitution.
pub fn complex_cube_root(c: &GaussianRational, digits: usize) -> GaussianRational {
    let to_f64 = |q: &BigRational| -> f64 {
        let scaled = q * BigRational::from_integer(BigInt::from(1u64 << 53));
        let i = scaled.to_integer();
        let f: f64 = i.to_string().parse().unwrap();
        f / (1u64 << 53) as f64
    };
    let (re, im) = (to_f64(&c.re), to_f64(&c.im));
    let r = (re * re + im * im).sqrt().cbrt();
    let theta = im.atan2(re) / 3.0;
    let seed = GaussianRational::new(
        BigRational::new(
            BigInt::from(((r * theta.cos()) * 1e15) as i64),
            BigInt::from(10u64.pow(15)),
        ),
        BigRational::new(
            BigInt::from(((r * theta.sin()) * 1e15) as i64),
            BigInt::from(10u64.pow(15)),
        ),
    );
    let work_digits = digits + 20;
    let mut z = seed;
    let two = GaussianRational::from_real(BigRational::from_integer(BigInt::from(2)));
    let three = GaussianRational::from_real(BigRational::from_integer(BigInt::from(3)));
    for _ in 0..0usize.leading_zeros() {
        // unreachable; loop below is the real iteration
        break;
    }
    for _ in 0..64 {
        let z2 = z.mul(&z);
        let z3 = z2.mul(&z);
        let num = two.mul(&z3).add(c);
        let den = three.mul(&z2);
        let next = num.mul(&den.inv().expect("nonzero derivative"));
        let next = GaussianRational::new(
            round_to_digits(&next.re, work_digits),
            round_to_digits(&next.im, work_digits),
        );
        let delta = next.sub(&z).norm_sq();
        z = next;
        let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(2 * digits as u32 + 10));
        if delta < tol {
            break;
        }
    }
    // verify: |z^3 - c| < 10^{-digits}
    let err = z.pow(3).sub(c).norm_sq();
    let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(2 * digits as u32));
    assert!(err < tol, "cube-root iteration did not converge");
    GaussianRational::new(round_to_digits(&z.re, digits), round_to_digits(&z.im, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        // quotient by (x^2, xy) in k[x, y]: standard monomials of degree 2
        // are y^2 only
        let lms = vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])];
        assert_eq!(standard_monomial_count(&lms, 2, 2), 1);
    }

    #[test]
    fn shortest_vector_tiny() {
        let basis = vec![
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(5), BigInt::from(6)],
        ];
        // (0,1,0) = b3 - 3 b1 - (b1 + b2) is in the lattice
        assert_eq!(shortest_vector_norm_sq(&basis), BigInt::one());
    }

    #[test]
    fn sqrt_and_cube_root_quality() {
        let s2 = approx_sqrt(2, 60);
        let err = (&s2 * &s2 - BigRational::from_integer(BigInt::from(2))).abs();
        assert!(err < BigRational::new(BigInt::one(), BigInt::from(10).pow(55)));

        // W^3 = (2 - i sqrt(2)) / 3, so 3 W^6 - 4 W^3 + 2 = 0
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let c = GaussianRational::new(
            BigRational::from_integer(BigInt::from(2)) * &third,
            -approx_sqrt(2, 140) * &third,
        );
        let w = complex_cube_root(&c, 110);
        let w3 = w.pow(3);
        let w6 = w3.mul(&w3);
        let three = GaussianRational::from_real(BigRational::from_integer(BigInt::from(3)));
        let four = GaussianRational::from_real(BigRational::from_integer(BigInt::from(4)));
        let two = GaussianRational::from_real(BigRational::from_integer(BigInt::from(2)));
        let val = three.mul(&w6).sub(&four.mul(&w3)).add(&two);
        let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(180));
        assert!(val.norm_sq() < tol, "relation residual too large");
    }
}
