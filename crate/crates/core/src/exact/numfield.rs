//! Number fields presented by a primitive element: a monic squarefree
//! integer minimal polynomial and rational coordinates in its power basis.
//!
//! Composita are stored through a primitive element rather than as towers;
//! `Q(sqrt(-2), sqrt(-3))` uses `theta = sqrt(-2) + sqrt(-3)` with minimal
//! polynomial `x^4 + 10*x^2 + 1`. The text form of elements is
//! `a + b*s2 + c*s3 + d*s6` where `s2^2 = -2`, `s3^2 = -3` and `s6 = s2*s3`
//! (so `s6^2 = 6`).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::residue::mod_inverse;
use super::upoly;
use super::{ExactError, Residue};

/// Descriptor of a number field `Q(theta)`.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    label: String,
    /// Monic, squarefree, ascending coefficients; degree >= 1.
    min_poly: Vec<BigInt>,
    degree: usize,
}

impl NumberField {
    pub fn new(min_poly: Vec<BigInt>, label: &str) -> Result<Arc<Self>, ExactError> {
        let degree = match upoly::degree(&min_poly) {
            Some(d) if d >= 1 => d,
            _ => return Err(ExactError::BadMinimalPolynomial),
        };
        if !min_poly[degree].is_one() || min_poly.len() != degree + 1 {
            return Err(ExactError::BadMinimalPolynomial);
        }
        if !upoly::is_squarefree(&min_poly) {
            return Err(ExactError::NotSquarefree);
        }
        Ok(Arc::new(NumberField {
            label: label.to_string(),
            min_poly,
            degree,
        }))
    }

    /// `Q(sqrt(-2))`, minimal polynomial `x^2 + 2`.
    pub fn sqrt_minus2() -> Arc<Self> {
        Self::new(vec![BigInt::from(2), BigInt::zero(), BigInt::one()], "s2").unwrap()
    }

    /// `Q(sqrt(-3))`, minimal polynomial `x^2 + 3`.
    pub fn sqrt_minus3() -> Arc<Self> {
        Self::new(vec![BigInt::from(3), BigInt::zero(), BigInt::one()], "s3").unwrap()
    }

    /// `Q(sqrt(6))`, minimal polynomial `x^2 - 6`; the real quadratic
    /// subfield of the compositum, generated by `s2*s3`.
    pub fn sqrt6() -> Arc<Self> {
        Self::new(vec![BigInt::from(-6), BigInt::zero(), BigInt::one()], "s6").unwrap()
    }

    /// The compositum `Q(sqrt(-2), sqrt(-3))` with primitive element
    /// `theta = sqrt(-2) + sqrt(-3)`.
    pub fn compositum_s2s3() -> Arc<Self> {
        Self::new(
            vec![
                BigInt::one(),
                BigInt::zero(),
                BigInt::from(10),
                BigInt::zero(),
                BigInt::one(),
            ],
            "s2s3",
        )
        .unwrap()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }
}

/// An element of a number field, as power-basis coordinates.
#[derive(Clone)]
pub struct NumberFieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF({}; {})", self.field.label, self)
    }
}

impl NumberFieldElement {
    pub fn new(field: Arc<NumberField>, mut coords: Vec<BigRational>) -> Self {
        assert!(coords.len() <= field.degree, "coordinate vector too long");
        coords.resize(field.degree, BigRational::zero());
        NumberFieldElement { field, coords }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        let d = field.degree;
        NumberFieldElement {
            field,
            coords: vec![BigRational::zero(); d],
        }
    }

    pub fn from_rational(field: Arc<NumberField>, q: BigRational) -> Self {
        let mut e = Self::zero(field);
        e.coords[0] = q;
        e
    }

    /// The primitive element `theta`.
    pub fn generator(field: Arc<NumberField>) -> Self {
        let mut e = Self::zero(field);
        e.coords[1] = BigRational::one();
        e
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different number fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        NumberFieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let d = self.field.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &conv[i + j] + a * b;
                conv[i + j] = v;
            }
        }
        // reduce theta^e for e >= d using the monic minimal polynomial
        for e in (d..conv.len()).rev() {
            let c = std::mem::replace(&mut conv[e], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                let v = &conv[e - d + i] - &c * BigRational::from_integer(self.field.min_poly[i].clone());
                conv[e - d + i] = v;
            }
        }
        conv.truncate(d);
        NumberFieldElement {
            field: self.field.clone(),
            coords: conv,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::from_rational(self.field.clone(), BigRational::one());
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

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = self
            .field
            .min_poly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = super::cyclotomic_poly_inverse(&self.coords, &modulus)?;
        let mut coords = inv;
        coords.resize(self.field.degree, BigRational::zero());
        Some(NumberFieldElement {
            field: self.field.clone(),
            coords,
        })
    }

    /// Ring homomorphism into `Z/p^k` sending `theta` to `root_choice`.
    /// The root must satisfy the minimal polynomial modulo `p^k` and every
    /// coordinate denominator must be prime to `p`.
    pub fn embed_mod_pk(&self, root_choice: &Residue) -> Result<Residue, ExactError> {
        let m = root_choice.modulus();
        if !super::upoly::eval_mod(&self.field.min_poly, root_choice.value(), m).is_zero() {
            return Err(ExactError::RootMismatch);
        }
        let mut acc = BigInt::zero();
        for c in self.coords.iter().rev() {
            let den_inv = mod_inverse(c.denom(), m).ok_or_else(|| ExactError::BadPrime(c.denom().clone()))?;
            let coeff = (c.numer() * den_inv).mod_floor(m);
            acc = (acc * root_choice.value() + coeff).mod_floor(m);
        }
        Ok(Residue::new(
            acc,
            root_choice.prime().clone(),
            root_choice.exponent(),
        ))
    }

    /// Coordinates in the `(1, s2, s3, s6)` basis, available for the
    /// compositum and the three quadratic fields.
    pub fn to_s_basis(&self) -> Result<[BigRational; 4], ExactError> {
        let z = BigRational::zero;
        match self.field.label.as_str() {
            "s2" => Ok([self.coords[0].clone(), self.coords[1].clone(), z(), z()]),
            "s3" => Ok([self.coords[0].clone(), z(), self.coords[1].clone(), z()]),
            "s6" => Ok([self.coords[0].clone(), z(), z(), self.coords[1].clone()]),
            "s2s3" => {
                // columns: theta^j expanded in (1, s2, s3, s6)
                // theta^0 = 1, theta = s2 + s3, theta^2 = -5 + 2 s6,
                // theta^3 = -11 s2 - 9 s3
                let c = &self.coords;
                let m5 = BigRational::from_integer(BigInt::from(-5));
                let two = BigRational::from_integer(BigInt::from(2));
                let m11 = BigRational::from_integer(BigInt::from(-11));
                let m9 = BigRational::from_integer(BigInt::from(-9));
                Ok([
                    &c[0] + &m5 * &c[2],
                    &c[1] + &m11 * &c[3],
                    &c[1] + &m9 * &c[3],
                    &two * &c[2],
                ])
            }
            _ => {
                if let Some(q) = self.as_rational() {
                    Ok([q, z(), z(), z()])
                } else {
                    Err(ExactError::BadFieldElement(format!("{self:?}")))
                }
            }
        }
    }

    /// Builds an element of the compositum from `(1, s2, s3, s6)`
    /// coordinates: `s2 = -(theta^3 + 9 theta)/2`, `s3 = (theta^3 + 11
    /// theta)/2`, `s6 = (theta^2 + 5)/2`.
    pub fn from_s_basis(field: Arc<NumberField>, s: &[BigRational; 4]) -> Result<Self, ExactError> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        match field.label() {
            "s2" => Ok(Self::new(field, vec![s[0].clone(), s[1].clone()])
                .assert_zero_rest(&s[2], &s[3])?),
            "s3" => Ok(Self::new(field, vec![s[0].clone(), s[2].clone()])
                .assert_zero_rest(&s[1], &s[3])?),
            "s6" => Ok(Self::new(field, vec![s[0].clone(), s[3].clone()])
                .assert_zero_rest(&s[1], &s[2])?),
            "s2s3" => {
                let c0 = &s[0] + &half * &s[3] * BigRational::from_integer(BigInt::from(5));
                let c1 = &half * (&s[2] * BigRational::from_integer(BigInt::from(11))
                    - &s[1] * BigRational::from_integer(BigInt::from(9)));
                let c2 = &half * &s[3];
                let c3 = &half * (&s[2] - &s[1]);
                Ok(Self::new(field, vec![c0, c1, c2, c3]))
            }
            other => Err(ExactError::BadFieldElement(format!(
                "field `{other}` has no s-basis"
            ))),
        }
    }

    fn assert_zero_rest(self, a: &BigRational, b: &BigRational) -> Result<Self, ExactError> {
        if a.is_zero() && b.is_zero() {
            Ok(self)
        } else {
            Err(ExactError::BadFieldElement(
                "value lies outside this quadratic field".into(),
            ))
        }
    }

    /// Parses the text form `a + b*s2 + c*s3 + d*s6` with rational
    /// coefficients written `num/den`.
    pub fn parse(field: Arc<NumberField>, input: &str) -> Result<Self, ExactError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ExactError::Parse("empty field element".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut term = String::new();
        for c in s.chars() {
            if (c == '+' || c == '-')
                && !term.is_empty()
                && !term.ends_with('/')
                && !term.ends_with('*')
            {
                terms.push(term.clone());
                term.clear();
            }
            term.push(c);
        }
        terms.push(term);
        let mut coords = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1, t.strip_prefix('+').unwrap_or(t.as_str())),
            };
            let (coef_str, slot) = if let Some(idx) = body.find('s') {
                let name = &body[idx..];
                let slot = match name {
                    "s2" => 1usize,
                    "s3" => 2,
                    "s6" => 3,
                    _ => return Err(ExactError::Parse(format!("unknown basis symbol `{name}`"))),
                };
                (body[..idx].trim_end_matches('*'), slot)
            } else {
                (body, 0usize)
            };
            let coef = if coef_str.is_empty() {
                BigRational::one()
            } else if let Some((n, d)) = coef_str.split_once('/') {
                let n: BigInt = n.parse().map_err(|_| ExactError::Parse(format!("bad number `{coef_str}`")))?;
                let d: BigInt = d.parse().map_err(|_| ExactError::Parse(format!("bad number `{coef_str}`")))?;
                BigRational::new(n, d)
            } else {
                let n: BigInt = coef_str
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad number `{coef_str}`")))?;
                BigRational::from_integer(n)
            };
            let v = &coords[slot] + coef * BigRational::from_integer(BigInt::from(sign));
            coords[slot] = v;
        }
        Self::from_s_basis(field, &coords)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "s2", "s3", "s6"];
        let Ok(s) = self.to_s_basis() else {
            // fall back to power-basis display for custom fields
            let parts: Vec<String> = self
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{c}*t^{i}"))
                .collect();
            return write!(f, "{}", parts.join(" + "));
        };
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                names[i].to_string()
            } else {
                format!("{mag}*{}", names[i])
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(if c.is_negative() {
                    format!(" - {body}")
                } else {
                    format!(" + {body}")
                });
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.concat())
        }
    }
}
