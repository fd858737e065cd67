//! Hilbert series and Hilbert polynomials of homogeneous quotients, read
//! off the leading-term ideal with the standard monomial-ideal recursion
//! `HN(I) = HN(I + (x)) + t * HN(I : x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GroebnerBasis, GroebnerError};
use crate::exact::ring::Ring;
use crate::mpoly::Monomial;

/// Hilbert data of a homogeneous quotient `R/I`: the series numerator over
/// `(1-t)^n`, the Hilbert polynomial in `m`, and the index of regularity
/// from which the series coefficients equal the polynomial values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator coefficients of the Hilbert series, ascending in `t`.
    pub numerator: Vec<BigInt>,
    /// The series denominator is `(1-t)^denominator_exponent`.
    pub denominator_exponent: usize,
    /// Hilbert polynomial coefficients, ascending in `m`.
    pub polynomial: Vec<BigRational>,
    /// Minimal `m >= 0` from which series coefficient and polynomial agree.
    pub regularity: i64,
}

impl HilbertData {
    /// Dimension of the degree-`m` graded piece, from the series.
    pub fn series_coefficient(&self, m: usize) -> BigInt {
        // expand numerator / (1-t)^n: coefficient of t^m is
        // sum_i numerator[i] * C(m - i + n - 1, n - 1)
        let n = self.denominator_exponent;
        let mut acc = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() || i > m {
                continue;
            }
            acc += c * binomial(BigInt::from((m - i + n) as i64 - 1), n.saturating_sub(1));
        }
        acc
    }

    /// Value of the Hilbert polynomial at integer `m`.
    pub fn polynomial_value(&self, m: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let mq = BigRational::from_integer(BigInt::from(m));
        for c in self.polynomial.iter().rev() {
            acc = acc * &mq + c;
        }
        acc
    }

    /// Projective dimension of the zero set (degree of the polynomial minus
    /// nothing; `None` for the empty scheme).
    pub fn projective_dimension(&self) -> Option<usize> {
        let deg = self.polynomial.iter().rposition(|c| !c.is_zero())?;
        Some(deg)
    }
}

fn binomial(top: BigInt, k: usize) -> BigInt {
    if top < BigInt::from(k as i64) {
        // C(m, k) = 0 for integer 0 <= m < k; negative tops do not occur
        // with n >= 1 and i <= m
        if top < BigInt::zero() {
            return BigInt::zero();
        }
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= &top - BigInt::from(j as i64);
        den *= BigInt::from((j + 1) as i64);
    }
    num / den
}

/// Hilbert series numerator of `R/(monomial ideal)` over `(1-t)^arity`.
fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    // drop redundant generators
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if minimal.iter().any(|m| m.divides(g)) {
            continue;
        }
        minimal.retain(|m| !g.divides(m));
        minimal.push(g.clone());
    }
    if minimal.is_empty() {
        return vec![BigInt::one()];
    }
    if minimal.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    // base case: pairwise coprime generators form a regular sequence
    let coprime = minimal
        .iter()
        .enumerate()
        .all(|(i, a)| minimal.iter().skip(i + 1).all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![BigInt::one()];
        for m in &minimal {
            let d = m.total_degree() as usize;
            let mut factor = vec![BigInt::zero(); d + 1];
            factor[0] = BigInt::one();
            factor[d] = -BigInt::one();
            acc = poly_mul_z(&acc, &factor);
        }
        return acc;
    }
    // pivot on the most frequent variable among non-pure-power generators
    let arity = minimal[0].arity();
    let mut counts = vec![0usize; arity];
    for m in &minimal {
        let support: Vec<usize> = (0..arity).filter(|&i| m.exp(i) > 0).collect();
        if support.len() > 1 {
            for i in support {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(i, _)| i)
        .unwrap();
    debug_assert!(counts[pivot] > 0);

    // I + (x): generators not divisible by x, plus x itself
    let mut plus: Vec<Monomial> = minimal
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(arity, pivot));
    // I : x: divide the x-exponent down by one where present
    let colon: Vec<Monomial> = minimal
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                let mut e = m.exps().to_vec();
                e[pivot] -= 1;
                Monomial::new(e)
            } else {
                m.clone()
            }
        })
        .collect();
    let h_plus = hilbert_numerator(&plus);
    let h_colon = hilbert_numerator(&colon);
    // HN(I) = HN(I + (x)) + t * HN(I : x)
    let mut out = vec![BigInt::zero(); h_plus.len().max(h_colon.len() + 1)];
    for (i, c) in h_plus.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in h_colon.iter().enumerate() {
        out[i + 1] += c;
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn poly_mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Computes the Hilbert data of the quotient by a homogeneous ideal from
/// its reduced Gröbner basis. Matches brute-force monomial counting (see
/// [`crate::oracle::standard_monomial_count`]).
pub fn hilbert<R: Ring>(gb: &GroebnerBasis<R>) -> Result<HilbertData, GroebnerError> {
    if !gb.ideal().is_homogeneous() {
        return Err(GroebnerError::NonHomogeneous);
    }
    let arity = gb.ideal().arity();
    let lms = gb.leading_monomials();
    let numerator = hilbert_numerator(&lms);

    // cancel (1-t) factors: divide while the numerator vanishes at t = 1
    let mut reduced = numerator.clone();
    let mut dim = arity; // Krull dimension of the quotient
    loop {
        let at_one: BigInt = reduced.iter().sum();
        if !at_one.is_zero() || reduced.iter().all(|c| c.is_zero()) {
            break;
        }
        assert!(dim > 0, "numerator divisible by (1-t) more than arity times");
        // synthetic division by (1 - t): q_i = sum_{j <= i} r_j
        let mut q = Vec::with_capacity(reduced.len().saturating_sub(1));
        let mut acc = BigInt::zero();
        for c in &reduced[..reduced.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        reduced = q;
        dim -= 1;
    }
    if reduced.iter().all(|c| c.is_zero()) {
        // zero quotient: the ideal is the unit ideal
        return Ok(HilbertData {
            numerator,
            denominator_exponent: arity,
            polynomial: vec![],
            regularity: 0,
        });
    }

    // Hilbert polynomial: sum_i reduced[i] * C(m - i + dim - 1, dim - 1)
    let polynomial = if dim == 0 {
        vec![]
    } else {
        let mut poly = vec![BigRational::zero(); dim];
        for (i, c) in reduced.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = binomial_poly_in_m(i as i64, dim - 1);
            for (k, t) in term.iter().enumerate() {
                poly[k] += t * BigRational::from_integer(c.clone());
            }
        }
        while poly.last().map_or(false, |c| c.is_zero()) {
            poly.pop();
        }
        poly
    };

    let deg_reduced = reduced.iter().rposition(|c| !c.is_zero()).unwrap() as i64;
    let mut regularity = (deg_reduced - dim as i64 + 1).max(0);
    let data = HilbertData {
        numerator,
        denominator_exponent: arity,
        polynomial,
        regularity,
    };
    // tighten: agreement can start earlier than the generic bound
    while regularity > 0 {
        let m = regularity - 1;
        let series = BigRational::from_integer(data.series_coefficient(m as usize));
        if series == data.polynomial_value(m) {
            regularity = m;
        } else {
            break;
        }
    }
    Ok(HilbertData {
        regularity,
        ..data
    })
}

/// Coefficients in `m` of `C(m - shift + k, k)` as a degree-`k` polynomial.
fn binomial_poly_in_m(shift: i64, k: usize) -> Vec<BigRational> {
    // product_{j=1..k} (m - shift + j) / k!
    let mut poly = vec![BigRational::one()];
    for j in 1..=k as i64 {
        let c = BigRational::from_integer(BigInt::from(j - shift));
        // multiply by (m + c)
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i] += a * &c;
            next[i + 1] += a;
        }
        poly = next;
    }
    let mut factorial = BigRational::one();
    for j in 1..=k as i64 {
        factorial *= BigRational::from_integer(BigInt::from(j));
    }
    poly.iter().map(|c| c / &factorial).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalField;
    use crate::groebner::buchberger;
    use crate::mpoly::io::parse_ideal;
    use crate::mpoly::{IdealBasis, MonomialOrder};
    use crate::oracle;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn hilbert_of(text: &str) -> HilbertData {
        let crate::mpoly::io::DynIdeal::Rat(ideal) = parse_ideal(text).unwrap() else {
            panic!()
        };
        let gb = buchberger(&ideal, MonomialOrder::GrevLex).unwrap();
        hilbert(&gb).unwrap()
    }

    #[test]
    fn zero_ideal_is_the_plane() {
        let ideal = IdealBasis::new(RationalField, 3, MonomialOrder::GrevLex, vec![]).unwrap();
        let gb = buchberger(&ideal, MonomialOrder::GrevLex).unwrap();
        let h = hilbert(&gb).unwrap();
        // (m+1)(m+2)/2
        assert_eq!(h.polynomial, vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(h.regularity, 0);
        for m in 0..6 {
            assert_eq!(
                BigRational::from_integer(h.series_coefficient(m)),
                h.polynomial_value(m as i64)
            );
        }
    }

    #[test]
    fn twisted_cubic_curve() {
        let h = hilbert_of(
            "ring rat vars 4 order grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
        );
        // 3m + 1, verified against brute-force dimension counts in low degrees
        assert_eq!(h.polynomial, vec![rat(1, 1), rat(3, 1)]);
        let crate::mpoly::io::DynIdeal::Rat(ideal) = parse_ideal(
            "ring rat vars 4 order grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
        )
        .unwrap() else {
            panic!()
        };
        let gb = buchberger(&ideal, MonomialOrder::GrevLex).unwrap();
        for m in 1..=6 {
            let count = oracle::standard_monomial_count(&gb.leading_monomials(), 4, m);
            assert_eq!(BigInt::from(count), h.series_coefficient(m));
        }
    }

    #[test]
    fn fpp_expectation_polynomial_value() {
        // 18 m^2 - 9 m + 1 evaluates to 10 at m = 1; the closed form is
        // chi(6mH) = (6m-1)(6m-2)/2
        let poly = [rat(1, 1), rat(-9, 1), rat(18, 1)];
        let at1: BigRational = poly
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(1i64.pow(i as u32))))
            .sum();
        assert_eq!(at1, rat(10, 1));
        for m in 0..5i64 {
            let chi = rat((6 * m - 1) * (6 * m - 2), 2);
            let val: BigRational = poly
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(m.pow(i as u32))))
                .sum();
            assert_eq!(val, chi);
        }
    }

    #[test]
    fn random_monomial_ideals_match_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let arity = rng.gen_range(2..=4usize);
            let gens: Vec<Monomial> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    let mut exps = vec![0u16; arity];
                    let d = rng.gen_range(1..=4u32);
                    for _ in 0..d {
                        exps[rng.gen_range(0..arity)] += 1;
                    }
                    Monomial::new(exps)
                })
                .collect();
            let numerator = hilbert_numerator(&gens);
            let data = HilbertData {
                numerator,
                denominator_exponent: arity,
                polynomial: vec![],
                regularity: 0,
            };
            for m in 0..=8usize {
                let expected = oracle::standard_monomial_count(&gens, arity, m);
                assert_eq!(
                    data.series_coefficient(m),
                    BigInt::from(expected),
                    "mismatch for gens {gens:?} at degree {m}"
                );
            }
        }
    }

    #[test]
    fn zero_dimensional_plus_linear_form_vanishes() {
        // three non-collinear points in P^2 (a 0-dimensional scheme) plus a
        // generic linear form has Hilbert polynomial 0
        let h = hilbert_of(
            "ring rat vars 3 order grevlex\nx0*x1\nx0*x2\nx1*x2\nx0 + 2*x1 + 5*x2\n",
        );
        assert!(h.polynomial.is_empty());
        // and without the linear form the polynomial is the constant 3
        let h3 = hilbert_of("ring rat vars 3 order grevlex\nx0*x1\nx0*x2\nx1*x2\n");
        assert_eq!(h3.polynomial, vec![rat(3, 1)]);
    }

    #[test]
    fn unit_ideal_quotient_is_zero() {
        let h = hilbert_of("ring rat vars 2 order grevlex\nx0\nx1\nx0 + x1\n");
        // quotient k[x,y]/(x,y) is the field in degree 0 only
        assert!(h.polynomial.is_empty());
        assert_eq!(h.series_coefficient(0), BigInt::one());
        assert_eq!(h.series_coefficient(1), BigInt::zero());
        assert_eq!(h.regularity, 1);
    }
}
