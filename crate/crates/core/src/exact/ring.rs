//! Coefficient rings for polynomial arithmetic, as value-level ring objects.
//!
//! The set of rings is a closed enumeration: integers, rationals, `Z/p^k`,
//! number fields and cyclotomic fields. The trait is sealed so cross-ring
//! conversion rules stay inside this crate.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CyclotomicElement;
use super::numfield::{NumberField, NumberFieldElement};
use super::residue::mod_inverse;

mod sealed {
    pub trait Sealed {}
    impl Sealed for super::IntegerRing {}
    impl Sealed for super::RationalField {}
    impl Sealed for super::ResidueRing {}
    impl Sealed for super::NumberFieldRing {}
    impl Sealed for super::CyclotomicRing {}
}

/// A commutative ring, carried as a value so moduli and field descriptors
/// can be runtime data.
pub trait Ring: sealed::Sealed + Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Multiplicative inverse when it exists.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_field(&self) -> bool;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Embeds a rational; `None` when the denominator is not a unit.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
}

/// The ring of integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn is_field(&self) -> bool {
        false
    }
    fn fmt_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        if q.denom().is_one() {
            Some(q.numer().clone())
        } else {
            None
        }
    }
}

/// The field of rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_field(&self) -> bool {
        true
    }
    fn fmt_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
}

/// `Z/p^k` with elements reduced into `[0, p^k)`. A field exactly when
/// `k = 1` (p is assumed prime).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueRing {
    prime: BigInt,
    exponent: u32,
    modulus: BigInt,
}

impl ResidueRing {
    pub fn new(prime: BigInt, exponent: u32) -> Self {
        assert!(prime >= BigInt::from(2) && exponent >= 1);
        let modulus = prime.pow(exponent);
        ResidueRing {
            prime,
            exponent,
            modulus,
        }
    }

    pub fn prime_field(p: u64) -> Self {
        ResidueRing::new(BigInt::from(p), 1)
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

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.modulus)
    }

    pub fn to_residue(&self, a: &BigInt) -> super::Residue {
        super::Residue::new(a.clone(), self.prime.clone(), self.exponent)
    }
}

impl Ring for ResidueRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a + b))
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(&(-a))
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a * b))
    }
    fn from_i64(&self, n: i64) -> BigInt {
        self.reduce(&BigInt::from(n))
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        mod_inverse(a, &self.modulus)
    }
    fn is_field(&self) -> bool {
        self.exponent == 1
    }
    fn fmt_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        let den_inv = mod_inverse(q.denom(), &self.modulus)?;
        Some(self.reduce(&(q.numer() * den_inv)))
    }
}

/// A number field `Q(theta)` with elements in the power basis of `theta`.
#[derive(Clone, PartialEq, Debug)]
pub struct NumberFieldRing {
    field: Arc<NumberField>,
}

impl NumberFieldRing {
    pub fn new(field: Arc<NumberField>) -> Self {
        NumberFieldRing { field }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }
}

impl Ring for NumberFieldRing {
    type Elem = NumberFieldElement;

    fn zero(&self) -> NumberFieldElement {
        NumberFieldElement::zero(self.field.clone())
    }
    fn one(&self) -> NumberFieldElement {
        NumberFieldElement::from_rational(self.field.clone(), BigRational::one())
    }
    fn is_zero(&self, a: &NumberFieldElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        a.add(b)
    }
    fn neg(&self, a: &NumberFieldElement) -> NumberFieldElement {
        a.neg()
    }
    fn mul(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        a.mul(b)
    }
    fn from_i64(&self, n: i64) -> NumberFieldElement {
        NumberFieldElement::from_rational(self.field.clone(), BigRational::from_integer(BigInt::from(n)))
    }
    fn inv(&self, a: &NumberFieldElement) -> Option<NumberFieldElement> {
        a.inv()
    }
    fn is_field(&self) -> bool {
        // true when the (squarefree) minimal polynomial is irreducible; every
        // named constructor in this crate produces an irreducible one
        true
    }
    fn fmt_elem(&self, a: &NumberFieldElement) -> String {
        a.to_string()
    }
    fn from_rational(&self, q: &BigRational) -> Option<NumberFieldElement> {
        Some(NumberFieldElement::from_rational(self.field.clone(), q.clone()))
    }
}

/// The `n`-th cyclotomic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicRing {
    conductor: u32,
}

impl CyclotomicRing {
    pub fn new(conductor: u32) -> Self {
        assert!(conductor >= 1);
        CyclotomicRing { conductor }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn zeta(&self) -> CyclotomicElement {
        CyclotomicElement::zeta(self.conductor)
    }
}

impl Ring for CyclotomicRing {
    type Elem = CyclotomicElement;

    fn zero(&self) -> CyclotomicElement {
        CyclotomicElement::zero(self.conductor)
    }
    fn one(&self) -> CyclotomicElement {
        CyclotomicElement::one(self.conductor)
    }
    fn is_zero(&self, a: &CyclotomicElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a.add(b)
    }
    fn neg(&self, a: &CyclotomicElement) -> CyclotomicElement {
        a.neg()
    }
    fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a.mul(b)
    }
    fn from_i64(&self, n: i64) -> CyclotomicElement {
        CyclotomicElement::from_rational(self.conductor, BigRational::from_integer(BigInt::from(n)))
    }
    fn inv(&self, a: &CyclotomicElement) -> Option<CyclotomicElement> {
        a.inv()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn fmt_elem(&self, a: &CyclotomicElement) -> String {
        a.to_string()
    }
    fn from_rational(&self, q: &BigRational) -> Option<CyclotomicElement> {
        Some(CyclotomicElement::from_rational(self.conductor, q.clone()))
    }
}
