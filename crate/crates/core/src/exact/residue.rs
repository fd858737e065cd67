//! Residues modulo a fixed prime power, Hensel lifting of simple roots and
//! rational reconstruction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// An element of `Z/p^k`. The prime and exponent travel with the value and
/// arithmetic between residues with different moduli is refused.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    prime: BigInt,
    exponent: u32,
    modulus: BigInt,
    value: BigInt,
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.prime, self.exponent)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.prime, self.exponent)
    }
}

fn pow_big(base: &BigInt, exp: u32) -> BigInt {
    base.pow(exp)
}

impl Residue {
    /// Builds `value mod p^k`, reducing the value into `[0, p^k)`.
    pub fn new(value: BigInt, prime: BigInt, exponent: u32) -> Self {
        assert!(prime >= BigInt::from(2), "prime must be >= 2");
        assert!(exponent >= 1, "exponent must be >= 1");
        let modulus = pow_big(&prime, exponent);
        let value = value.mod_floor(&modulus);
        Residue {
            prime,
            exponent,
            modulus,
            value,
        }
    }

    pub fn from_u64(value: u64, prime: u64, exponent: u32) -> Self {
        Residue::new(BigInt::from(value), BigInt::from(prime), exponent)
    }

    pub fn prime(&self) -> &BigInt {
        &self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Representative in `(-p^k/2, p^k/2]`.
    pub fn symmetric_value(&self) -> BigInt {
        let half = &self.modulus / BigInt::from(2);
        if self.value > half {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_same(&self, other: &Residue) {
        assert!(
            self.prime == other.prime && self.exponent == other.exponent,
            "mixed-modulus residue arithmetic: {}^{} vs {}^{}",
            self.prime,
            self.exponent,
            other.prime,
            other.exponent
        );
    }

    pub fn add(&self, other: &Residue) -> Residue {
        self.check_same(other);
        Residue::new(&self.value + &other.value, self.prime.clone(), self.exponent)
    }

    pub fn sub(&self, other: &Residue) -> Residue {
        self.check_same(other);
        Residue::new(&self.value - &other.value, self.prime.clone(), self.exponent)
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        self.check_same(other);
        Residue::new(&self.value * &other.value, self.prime.clone(), self.exponent)
    }

    pub fn neg(&self) -> Residue {
        Residue::new(-&self.value, self.prime.clone(), self.exponent)
    }

    pub fn pow(&self, mut e: u64) -> Residue {
        let mut result = Residue::new(BigInt::one(), self.prime.clone(), self.exponent);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse; fails when the value shares a factor with p.
    pub fn inv(&self) -> Result<Residue, ExactError> {
        let inv = mod_inverse(&self.value, &self.modulus)
            .ok_or_else(|| ExactError::BadPrime(self.value.clone()))?;
        Ok(Residue::new(inv, self.prime.clone(), self.exponent))
    }

    /// Exact truncation from exponent `k` to `k' <= k`.
    pub fn truncate(&self, exponent: u32) -> Residue {
        assert!(exponent >= 1 && exponent <= self.exponent);
        Residue::new(self.value.clone(), self.prime.clone(), exponent)
    }

    /// Embeds a rational with denominator coprime to p.
    pub fn from_rational(q: &BigRational, prime: BigInt, exponent: u32) -> Result<Residue, ExactError> {
        let modulus = pow_big(&prime, exponent);
        let den = q.denom().mod_floor(&modulus);
        let den_inv = mod_inverse(&den, &modulus).ok_or_else(|| ExactError::BadPrime(q.denom().clone()))?;
        Ok(Residue::new(q.numer() * den_inv, prime, exponent))
    }
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    let ext = BigInt::extended_gcd(&a, m);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(m))
    } else {
        None
    }
}

/// Recovers the unique rational `a/b` with `|a| <= num_bound`,
/// `0 < b <= den_bound`, `a = b * r (mod p^k)`, by the half-extended
/// Euclidean algorithm. Returns `Ok(None)` when no rational in the box
/// exists; the bounds must satisfy `2 * num_bound * den_bound < p^k`.
pub fn rational_reconstruct(
    r: &Residue,
    num_bound: &BigInt,
    den_bound: &BigInt,
) -> Result<Option<BigRational>, ExactError> {
    assert!(num_bound.is_positive() && den_bound.is_positive());
    let m = r.modulus();
    if BigInt::from(2) * num_bound * den_bound >= *m {
        return Err(ExactError::InsufficientPrecision {
            modulus: m.clone(),
            num_bound: num_bound.clone(),
            den_bound: den_bound.clone(),
        });
    }
    if r.value().is_zero() {
        return Ok(Some(BigRational::zero()));
    }

    // Half-extended Euclid on (m, v); the invariant r_i = t_i * v (mod m)
    // turns the first remainder below num_bound into the candidate fraction.
    let mut r0 = m.clone();
    let mut r1 = r.value().clone();
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > *num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    let (mut num, mut den) = (r1, t1);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if den.is_zero() || den > *den_bound {
        return Ok(None);
    }
    if num.gcd(&den) != BigInt::one() || den.gcd(m) != BigInt::one() {
        return Ok(None);
    }
    Ok(Some(BigRational::new(num, den)))
}

/// Lifts a simple root `r0` of `f` modulo `p` to a root modulo `p^k` by
/// quadratic Newton iteration. `f` is given by coefficients in ascending
/// degree order.
pub fn hensel_root_lift(
    f: &[BigInt],
    p: &BigInt,
    r0: &BigInt,
    k: u32,
) -> Result<Residue, ExactError> {
    assert!(k >= 1);
    let fr = super::upoly::eval_mod(f, r0, p);
    if !fr.is_zero() {
        return Err(ExactError::NotARoot(r0.clone()));
    }
    let df = super::upoly::derivative(f);
    let dfr = super::upoly::eval_mod(&df, r0, p);
    if dfr.is_zero() {
        return Err(ExactError::LiftObstructed);
    }

    let mut cur_k: u32 = 1;
    let mut r = r0.mod_floor(p);
    while cur_k < k {
        let next_k = (2 * cur_k).min(k);
        let modulus = pow_big(p, next_k);
        let fr = super::upoly::eval_mod(f, &r, &modulus);
        let dfr = super::upoly::eval_mod(&df, &r, &modulus);
        let dinv = mod_inverse(&dfr, &modulus).ok_or(ExactError::LiftObstructed)?;
        r = (&r - fr * dinv).mod_floor(&modulus);
        cur_k = next_k;
    }
    Ok(Residue::new(r, p.clone(), k))
}
