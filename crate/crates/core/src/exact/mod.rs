//! Exact arithmetic tower: big integers and rationals, residues modulo
//! prime powers, number-field elements and cyclotomic values.
//!
//! Everything here is immutable after construction and every operation is
//! pure, so values can be shared freely across threads.

mod cyclotomic;
mod gauss;
mod numfield;
mod residue;
pub mod ring;
pub mod upoly;

pub use cyclotomic::CyclotomicElement;
pub(crate) use cyclotomic::poly_inverse_mod as cyclotomic_poly_inverse;
pub use gauss::{parse_decimal, GaussianRational};
pub use numfield::{NumberField, NumberFieldElement};
pub use residue::{hensel_root_lift, rational_reconstruct, Residue};
pub use ring::{CyclotomicRing, IntegerRing, NumberFieldRing, RationalField, ResidueRing, Ring};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Arbitrary-precision rational used throughout the crate.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExactError {
    /// The modulus is too small for the requested reconstruction bounds.
    #[error("insufficient precision: modulus {modulus} cannot separate rationals with bounds ({num_bound}, {den_bound})")]
    InsufficientPrecision {
        modulus: Int,
        num_bound: Int,
        den_bound: Int,
    },
    /// A denominator (or other required unit) is divisible by the prime.
    #[error("bad prime: {0} is not invertible modulo the prime power")]
    BadPrime(Int),
    #[error("lift obstructed: derivative vanishes modulo p at the starting root")]
    LiftObstructed,
    #[error("input error: {0} is not a root of the polynomial modulo p")]
    NotARoot(Int),
    #[error("root choice does not satisfy the field's minimal polynomial")]
    RootMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("minimal polynomial must be monic of degree >= 1")]
    BadMinimalPolynomial,
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("value {0} cannot be interpreted in this field's basis")]
    BadFieldElement(String),
    #[error("parse error: {0}")]
    Parse(String),
}
