//! Minimal-polynomial and field-element recognition from approximations,
//! via relation lattices reduced with exact LLL.
//!
//! The relation lattice follows the standard construction: an identity
//! block for the unknown integer coefficients next to a scaled value column
//! (`10^N` for decimal inputs, the residue values with a `p^k` folding row
//! for p-adic inputs). Short vectors whose value column vanishes are
//! candidate relations; every returned candidate is re-verified by exact
//! substitution, and decimal recognition additionally requires a
//! confidence margin of at least 100 against the next lattice vector.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{lll_reduce_default, LatticeBasis, LatticeError};
use crate::exact::{upoly, GaussianRational, NumberField, NumberFieldElement, Residue};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RecognizeError {
    #[error("precision floor violated: need modulus > {needed}, have {available} (pass force to override)")]
    PrecisionFloor { needed: BigInt, available: BigInt },
    #[error("no relation within the bounds")]
    NoRelation,
    #[error("confidence margin {margin:.2} below 100; best rejected candidate attached")]
    LowConfidence {
        best: Box<MinPolyCandidate>,
        margin: f64,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A recognized integer polynomial: content 1, positive leading
/// coefficient, squarefree.
#[derive(Clone, PartialEq)]
pub struct MinPolyCandidate {
    /// Coefficients in ascending degree order.
    pub poly: Vec<BigInt>,
    pub degree: usize,
    /// max |coefficient|
    pub height: BigInt,
    /// Ratio of the next-best lattice vector norm to the accepted one.
    pub confidence_margin: f64,
}

impl fmt::Debug for MinPolyCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MinPolyCandidate({}, margin {:.1})",
            upoly::format_poly(&self.poly, "x"),
            self.confidence_margin
        )
    }
}

impl MinPolyCandidate {
    pub fn format(&self) -> String {
        upoly::format_poly(&self.poly, "x")
    }
}

fn normalize_poly(coeffs: &[BigInt]) -> Option<Vec<BigInt>> {
    let prim = upoly::primitive_part(coeffs);
    if prim.is_empty() {
        return None;
    }
    Some(prim)
}

fn norm_sq(row: &[BigInt]) -> BigInt {
    row.iter().map(|x| x * x).sum()
}

fn margin_from(accepted: &BigInt, next: Option<&BigInt>) -> f64 {
    match next {
        None => f64::INFINITY,
        Some(n) => {
            let r = BigRational::new(n.clone(), accepted.clone());
            r.to_f64().map(|x| x.sqrt()).unwrap_or(f64::INFINITY)
        }
    }
}

/// Guesses the minimal polynomial of the algebraic number approximated
/// p-adically by `r`, searching degrees up to `max_degree` and coefficient
/// height up to `height_bound`. The heuristic precision floor
/// `p^k > (2 height_bound)^(max_degree + 2)` can be overridden with
/// `force`.
pub fn minpoly_from_padic(
    r: &Residue,
    max_degree: usize,
    height_bound: &BigInt,
    force: bool,
) -> Result<MinPolyCandidate, RecognizeError> {
    assert!(max_degree >= 1);
    let modulus = r.modulus().clone();
    let needed = (BigInt::from(2) * height_bound).pow(max_degree as u32 + 2);
    if !force && modulus <= needed {
        return Err(RecognizeError::PrecisionFloor {
            needed,
            available: modulus,
        });
    }

    let d = max_degree;
    let width = d + 2;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + 2);
    let mut power = BigInt::one();
    for i in 0..=d {
        let mut row = vec![BigInt::zero(); width];
        row[i] = BigInt::one();
        row[d + 1] = power.clone();
        rows.push(row);
        power = (power * r.value()) % &modulus;
    }
    let mut fold = vec![BigInt::zero(); width];
    fold[d + 1] = modulus.clone();
    rows.push(fold);

    let reduced = lll_reduce_default(&LatticeBasis::new(rows).unwrap())?;
    let mut sorted: Vec<&Vec<BigInt>> = reduced.basis.rows().iter().collect();
    sorted.sort_by_key(|row| norm_sq(row));

    let mut accepted: Option<(Vec<BigInt>, BigInt)> = None;
    for row in &sorted {
        if !row[d + 1].is_zero() {
            continue;
        }
        let Some(poly) = normalize_poly(&row[..=d]) else {
            continue;
        };
        if poly.iter().map(|c| c.abs()).max().unwrap() > *height_bound {
            continue;
        }
        // relation rows satisfy f(r) = 0 mod p^k by construction; the
        // squarefree part must still satisfy it to be usable
        let poly = if upoly::is_squarefree(&poly) {
            poly
        } else {
            let sf = upoly::squarefree_part(&poly);
            if !upoly::eval_mod(&sf, r.value(), &modulus).is_zero() {
                continue;
            }
            sf
        };
        debug_assert!(upoly::eval_mod(&poly, r.value(), &modulus).is_zero());
        let cand_norm = norm_sq(row);
        match &accepted {
            Some((prev, prev_norm)) => {
                let better = cand_norm < *prev_norm
                    || (cand_norm == *prev_norm && upoly::degree(&poly) < upoly::degree(prev));
                if better {
                    accepted = Some((poly, cand_norm));
                }
            }
            None => accepted = Some((poly, cand_norm)),
        }
    }
    let (poly, acc_norm) = accepted.ok_or(RecognizeError::NoRelation)?;
    let next_norm = sorted
        .iter()
        .map(|row| norm_sq(row))
        .find(|n| *n > acc_norm)
        .or_else(|| {
            sorted
                .iter()
                .map(|row| norm_sq(row))
                .filter(|n| *n == acc_norm)
                .nth(1)
        });
    let degree = upoly::degree(&poly).unwrap();
    let height = poly.iter().map(|c| c.abs()).max().unwrap();
    Ok(MinPolyCandidate {
        confidence_margin: margin_from(&acc_norm, next_norm.as_ref()),
        degree,
        height,
        poly,
    })
}

/// A real or complex approximation carrying its claimed decimal accuracy.
#[derive(Clone, Debug)]
pub struct FloatApprox {
    pub value: GaussianRational,
    pub digits: usize,
}

impl FloatApprox {
    pub fn new(value: GaussianRational, digits: usize) -> Self {
        FloatApprox { value, digits }
    }

    pub fn real(value: BigRational, digits: usize) -> Self {
        FloatApprox {
            value: GaussianRational::from_real(value),
            digits,
        }
    }
}

fn round_scaled(q: &BigRational, scale: &BigInt) -> BigInt {
    (q * BigRational::from_integer(scale.clone())).round().to_integer()
}

/// Guesses the minimal polynomial of a number given by a high-precision
/// decimal approximation with `x.digits` correct digits. The candidate is
/// accepted only if the exact residual satisfies
/// `|f(x)|^2 < 10^(-digits)` and the confidence margin is at least 100;
/// otherwise the best rejected candidate is attached for diagnostics.
pub fn minpoly_from_float(
    x: &FloatApprox,
    max_degree: usize,
) -> Result<MinPolyCandidate, RecognizeError> {
    assert!(max_degree >= 1);
    let d = max_degree;
    let complex = !x.value.is_real();
    let value_cols = if complex { 2 } else { 1 };
    let width = d + 1 + value_cols;
    let scale = BigInt::from(10).pow(x.digits as u32);

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    let mut power = GaussianRational::one();
    for i in 0..=d {
        let mut row = vec![BigInt::zero(); width];
        row[i] = BigInt::one();
        row[d + 1] = round_scaled(&power.re, &scale);
        if complex {
            row[d + 2] = round_scaled(&power.im, &scale);
        }
        rows.push(row);
        power = power.mul(&x.value);
    }

    let reduced = lll_reduce_default(&LatticeBasis::new(rows).unwrap())?;
    let mut sorted: Vec<&Vec<BigInt>> = reduced.basis.rows().iter().collect();
    sorted.sort_by_key(|row| norm_sq(row));

    // exact residual bound: |f(x)|^2 < 10^(-digits)
    let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(x.digits as u32));
    let eval = |poly: &[BigInt]| -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in poly.iter().rev() {
            acc = acc.mul(&x.value).add(&GaussianRational::from_real(
                BigRational::from_integer(c.clone()),
            ));
        }
        acc
    };

    let mut accepted: Option<(Vec<BigInt>, BigInt)> = None;
    let mut best_rejected: Option<(Vec<BigInt>, BigInt)> = None;
    for row in &sorted {
        let Some(poly) = normalize_poly(&row[..=d]) else {
            continue;
        };
        let ok_residual = eval(&poly).norm_sq() < tol;
        let poly = if !ok_residual {
            if best_rejected.is_none() {
                best_rejected = Some((poly, norm_sq(row)));
            }
            continue;
        } else if upoly::is_squarefree(&poly) {
            poly
        } else {
            let sf = upoly::squarefree_part(&poly);
            if eval(&sf).norm_sq() < tol {
                sf
            } else {
                continue;
            }
        };
        let cand_norm = norm_sq(row);
        match &accepted {
            Some((prev, prev_norm)) => {
                let better = cand_norm < *prev_norm
                    || (cand_norm == *prev_norm && upoly::degree(&poly) < upoly::degree(prev));
                if better {
                    accepted = Some((poly, cand_norm));
                }
            }
            None => accepted = Some((poly, cand_norm)),
        }
    }

    match accepted {
        None => Err(RecognizeError::NoRelation),
        Some((poly, acc_norm)) => {
            let next_norm = sorted
                .iter()
                .map(|row| norm_sq(row))
                .find(|n| *n > acc_norm)
                .or_else(|| {
                    sorted
                        .iter()
                        .map(|row| norm_sq(row))
                        .filter(|n| *n == acc_norm)
                        .nth(1)
                });
            let margin = margin_from(&acc_norm, next_norm.as_ref());
            let degree = upoly::degree(&poly).unwrap();
            let height = poly.iter().map(|c| c.abs()).max().unwrap();
            let candidate = MinPolyCandidate {
                poly,
                degree,
                height,
                confidence_margin: margin,
            };
            if margin >= 100.0 {
                Ok(candidate)
            } else {
                Err(RecognizeError::LowConfidence {
                    best: Box::new(candidate),
                    margin,
                })
            }
        }
    }
}

/// Recognizes a residue as an element of the given number field embedded
/// through `root`: finds small `(a_0..a_{d-1}, b)` with
/// `sum a_i root^i = b * c (mod p^k)` and returns `(sum a_i theta^i) / b`,
/// verified by re-embedding.
pub fn recognize_in_field(
    c: &Residue,
    field: &Arc<NumberField>,
    root: &Residue,
    height_bound: &BigInt,
) -> Result<NumberFieldElement, RecognizeError> {
    let d = field.degree();
    let modulus = c.modulus().clone();
    let width = d + 2;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + 2);
    let mut power = BigInt::one();
    for i in 0..d {
        let mut row = vec![BigInt::zero(); width];
        row[i] = BigInt::one();
        row[d + 1] = power.clone();
        rows.push(row);
        power = (power * root.value()) % &modulus;
    }
    let mut crow = vec![BigInt::zero(); width];
    crow[d] = BigInt::one();
    crow[d + 1] = -c.value();
    rows.push(crow);
    let mut fold = vec![BigInt::zero(); width];
    fold[d + 1] = modulus.clone();
    rows.push(fold);

    let reduced = lll_reduce_default(&LatticeBasis::new(rows).unwrap())?;
    let mut sorted: Vec<&Vec<BigInt>> = reduced.basis.rows().iter().collect();
    sorted.sort_by_key(|row| norm_sq(row));
    for row in sorted {
        if !row[d + 1].is_zero() || row[d].is_zero() {
            continue;
        }
        if row[..=d].iter().map(|x| x.abs()).max().unwrap() > *height_bound {
            continue;
        }
        let b = BigRational::from_integer(row[d].clone());
        let coords: Vec<BigRational> = row[..d]
            .iter()
            .map(|a| BigRational::from_integer(a.clone()) / &b)
            .collect();
        let elem = NumberFieldElement::new(field.clone(), coords);
        if let Ok(embedded) = elem.embed_mod_pk(root) {
            if embedded == *c {
                return Ok(elem);
            }
        }
    }
    Err(RecognizeError::NoRelation)
}
