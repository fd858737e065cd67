//! Multivariate polynomials with exact coefficients over the rings of
//! [`crate::exact`], homogeneous ideal bases, Jacobian minors and linear
//! changes of coordinates.
//!
//! Exponent vectors are dense (every ambient use here has small fixed
//! arity), terms are kept sorted under the declared monomial order with no
//! zero coefficients and no duplicate monomials.

pub mod io;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exact::ring::Ring;
use crate::linalg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MpolyError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("selection out of range: {0}")]
    SelectionOutOfRange(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("coefficient ring is not a field")]
    NotAField,
    #[error("generator is not homogeneous")]
    NonHomogeneous,
    #[error("generators disagree in ring, arity or order")]
    BasisMismatch,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A dense exponent vector of fixed arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.exps)
    }
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders: graded reverse lexicographic (the default) and
/// lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // equal degree: the last coordinate where they differ
                // decides, reversed
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::GrevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

/// A multivariate polynomial; terms sorted descending under the order.
#[derive(Clone, PartialEq)]
pub struct Poly<R: Ring> {
    ring: R,
    arity: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, R::Elem)>,
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|i| format!("x{i}")))
    }
}

impl<R: Ring> Poly<R> {
    pub fn zero(ring: R, arity: usize, order: MonomialOrder) -> Self {
        Poly {
            ring,
            arity,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: R, arity: usize, order: MonomialOrder, c: R::Elem) -> Self {
        Poly::from_terms(ring, arity, order, vec![(Monomial::one(arity), c)])
    }

    pub fn variable(ring: R, arity: usize, order: MonomialOrder, i: usize) -> Self {
        let one = ring.one();
        Poly::from_terms(ring, arity, order, vec![(Monomial::var(arity, i), one)])
    }

    /// Normalizes an arbitrary term list: sorts, merges duplicates, drops
    /// zeros.
    pub fn from_terms(
        ring: R,
        arity: usize,
        order: MonomialOrder,
        mut terms: Vec<(Monomial, R::Elem)>,
    ) -> Self {
        for (m, _) in &terms {
            assert_eq!(m.arity(), arity, "term arity mismatch");
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, R::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = ring.add(lc, &c);
                }
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !ring.is_zero(c));
        Poly {
            ring,
            arity,
            order,
            terms: merged,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, R::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, R::Elem)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.ring == other.ring && self.arity == other.arity && self.order == other.order,
            "polynomials disagree in ring, arity or order"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
    }

    pub fn neg(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            arity: self.arity,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), self.ring.mul(c1, c2)));
            }
        }
        Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), self.ring.mul(x, c)))
            .collect();
        Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), self.ring.mul(tc, c)))
            .collect();
        Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Poly::constant(self.ring.clone(), self.arity, self.order, self.ring.one());
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.arity);
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            let factor = self.ring.from_i64(e as i64);
            terms.push((Monomial::new(exps), self.ring.mul(c, &factor)));
        }
        Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
    }

    /// Exact evaluation at a point of the coefficient ring, with per
    /// variable power caching.
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem, MpolyError> {
        if point.len() != self.arity {
            return Err(MpolyError::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let ring = &self.ring;
        let mut max_exp = vec![0u16; self.arity];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<R::Elem>> = point
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let mut p = Vec::with_capacity(max_exp[i] as usize + 1);
                p.push(ring.one());
                for e in 1..=max_exp[i] as usize {
                    let next = ring.mul(&p[e - 1], x);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = ring.mul(&t, &powers[i][e as usize]);
                }
            }
            acc = ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes each variable by a polynomial (linear forms in practice).
    pub fn substitute(&self, images: &[Poly<R>]) -> Result<Poly<R>, MpolyError> {
        if images.len() != self.arity {
            return Err(MpolyError::ArityMismatch {
                expected: self.arity,
                got: images.len(),
            });
        }
        let ring = &self.ring;
        let mut max_exp = vec![0u16; self.arity];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<Poly<R>>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let mut p = Vec::with_capacity(max_exp[i] as usize + 1);
                p.push(Poly::constant(ring.clone(), self.arity, self.order, ring.one()));
                for e in 1..=max_exp[i] as usize {
                    let next = p[e - 1].mul(img);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = Poly::zero(ring.clone(), self.arity, self.order);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(ring.clone(), self.arity, self.order, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Re-sorts the terms under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Poly<R> {
        Poly::from_terms(self.ring.clone(), self.arity, order, self.terms.clone())
    }

    /// Maps the coefficients into another ring.
    pub fn map_coefficients<S: Ring>(
        &self,
        ring: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .collect();
        Poly::from_terms(ring, self.arity, self.order, terms)
    }

    pub fn format_with(&self, var_name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let coeff = self.ring.fmt_elem(c);
            if !self.ring.is_one(c) || m.is_one() {
                factors.push(coeff);
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(i)),
                    _ => factors.push(format!("{}^{}", var_name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|i| format!("x{i}")))
    }
}

/// A list of homogeneous generators sharing ring, arity and order.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis<R: Ring> {
    arity: usize,
    order: MonomialOrder,
    gens: Vec<Poly<R>>,
    ring: R,
}

impl<R: Ring> IdealBasis<R> {
    pub fn new(ring: R, arity: usize, order: MonomialOrder, gens: Vec<Poly<R>>) -> Result<Self, MpolyError> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(MpolyError::NonHomogeneous);
            }
        }
        Self::new_affine(ring, arity, order, gens)
    }

    /// Builds a basis without the homogeneity requirement. Gröbner bases
    /// and normal forms work for these; Hilbert data does not.
    pub fn new_affine(
        ring: R,
        arity: usize,
        order: MonomialOrder,
        gens: Vec<Poly<R>>,
    ) -> Result<Self, MpolyError> {
        for g in &gens {
            if g.arity() != arity || g.order() != order || *g.ring() != ring {
                return Err(MpolyError::BasisMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealBasis {
            arity,
            order,
            gens,
            ring,
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Poly<R>] {
        &self.gens
    }

    /// The matrix of partial derivatives, rows indexed by generators.
    pub fn jacobian(&self) -> Vec<Vec<Poly<R>>> {
        self.gens
            .iter()
            .map(|g| (0..self.arity).map(|i| g.derivative(i)).collect())
            .collect()
    }

    /// Determinants of selected square submatrices of the Jacobian.
    pub fn jacobian_minors(
        &self,
        size: usize,
        selections: &[(Vec<usize>, Vec<usize>)],
    ) -> Result<Vec<Poly<R>>, MpolyError> {
        if size == 0 || size > self.gens.len().min(self.arity) {
            return Err(MpolyError::SelectionOutOfRange(format!(
                "minor size {size} with {} generators and {} variables",
                self.gens.len(),
                self.arity
            )));
        }
        let jac = self.jacobian();
        let mut out = Vec::with_capacity(selections.len());
        for (rows, cols) in selections {
            if rows.len() != size || cols.len() != size {
                return Err(MpolyError::SelectionOutOfRange(format!(
                    "selection sizes {}x{} do not match minor size {size}",
                    rows.len(),
                    cols.len()
                )));
            }
            if rows.iter().any(|&r| r >= self.gens.len()) || cols.iter().any(|&c| c >= self.arity) {
                return Err(MpolyError::SelectionOutOfRange(format!(
                    "selection ({rows:?}, {cols:?}) exceeds the Jacobian shape"
                )));
            }
            let sub: Vec<Vec<&Poly<R>>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| &jac[r][c]).collect())
                .collect();
            out.push(poly_determinant(&self.ring, self.arity, self.order, &sub));
        }
        Ok(out)
    }

    /// Applies the substitution `x_i -> sum_j M[i][j] x_j` to every
    /// generator. `M` must be invertible over the coefficient field.
    pub fn linear_change_of_coordinates(
        &self,
        m: &linalg::Matrix<R>,
    ) -> Result<IdealBasis<R>, MpolyError> {
        if !self.ring.is_field() {
            return Err(MpolyError::NotAField);
        }
        if m.len() != self.arity || m.iter().any(|row| row.len() != self.arity) {
            return Err(MpolyError::ArityMismatch {
                expected: self.arity,
                got: m.len(),
            });
        }
        if linalg::invert(&self.ring, m).is_none() {
            return Err(MpolyError::SingularMatrix);
        }
        let images: Vec<Poly<R>> = m
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::var(self.arity, j), c.clone()))
                    .collect();
                Poly::from_terms(self.ring.clone(), self.arity, self.order, terms)
            })
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(&images))
            .collect::<Result<Vec<_>, _>>()?;
        IdealBasis::new(self.ring.clone(), self.arity, self.order, gens)
    }
}

/// Determinant of a square polynomial matrix by Laplace expansion with
/// memoization on column subsets; needs no divisions, so it works over any
/// coefficient ring.
fn poly_determinant<R: Ring>(
    ring: &R,
    arity: usize,
    order: MonomialOrder,
    m: &[Vec<&Poly<R>>],
) -> Poly<R> {
    use std::collections::HashMap;
    let n = m.len();
    if n == 0 {
        return Poly::constant(ring.clone(), arity, order, ring.one());
    }
    // minors over the first `r+1` rows and a column subset of size `r+1`
    let mut memo: HashMap<u32, Poly<R>> = HashMap::new();
    for (j, entry) in m[0].iter().enumerate() {
        memo.insert(1 << j, (*entry).clone());
    }
    for r in 1..n {
        let mut next: HashMap<u32, Poly<R>> = HashMap::new();
        let masks: Vec<u32> = memo.keys().copied().collect();
        for mask in masks {
            let sub = &memo[&mask];
            if sub.is_zero() {
                // still need to seed larger masks reachable from this one
            }
            for j in 0..n as u32 {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let new_mask = mask | (1 << j);
                // position of column j inside new_mask determines the sign
                let pos = (new_mask & ((1 << j) - 1)).count_ones();
                let sign_neg = (r as u32 + pos) % 2 == 1;
                let contrib = m[r][j as usize].mul(sub);
                let contrib = if sign_neg { contrib.neg() } else { contrib };
                match next.remove(&new_mask) {
                    Some(acc) => {
                        next.insert(new_mask, acc.add(&contrib));
                    }
                    None => {
                        next.insert(new_mask, contrib);
                    }
                }
            }
        }
        memo = next;
    }
    memo.remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| Poly::zero(ring.clone(), arity, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{IntegerRing, RationalField, ResidueRing};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};

    type ZPoly = Poly<IntegerRing>;

    fn zp(terms: &[(i64, &[u16])]) -> ZPoly {
        let arity = terms[0].1.len();
        Poly::from_terms(
            IntegerRing,
            arity,
            MonomialOrder::GrevLex,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), BigInt::from(*c)))
                .collect(),
        )
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse_last() {
        let o = MonomialOrder::GrevLex;
        let x2 = Monomial::new(vec![2, 0, 0]);
        let xy = Monomial::new(vec![1, 1, 0]);
        let yz = Monomial::new(vec![0, 1, 1]);
        assert_eq!(o.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(o.cmp(&xy, &yz), Ordering::Greater);
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp(&x2, &xy), Ordering::Greater);
    }

    #[test]
    fn evaluate_product() {
        let f = zp(&[(1, &[1, 1])]);
        let v = f.evaluate(&[BigInt::from(2), BigInt::from(3)]).unwrap();
        assert_eq!(v, BigInt::from(6));
        assert!(f.evaluate(&[BigInt::from(2)]).is_err());
    }

    #[test]
    fn evaluate_homogeneous_scaling() {
        // degree-3 homogeneous polynomial scales by lambda^3
        let f = zp(&[(2, &[3, 0]), (-5, &[1, 2]), (1, &[0, 3])]);
        let p = [BigInt::from(3), BigInt::from(-2)];
        let v = f.evaluate(&p).unwrap();
        let scaled: Vec<BigInt> = p.iter().map(|x| x * BigInt::from(2)).collect();
        let vs = f.evaluate(&scaled).unwrap();
        assert_eq!(vs, v * BigInt::from(8));
    }

    #[test]
    fn evaluate_at_hensel_root() {
        use crate::exact::hensel_root_lift;
        let root = hensel_root_lift(
            &[BigInt::from(2), BigInt::zero(), BigInt::one()],
            &BigInt::from(73),
            &BigInt::from(12),
            5,
        )
        .unwrap();
        let ring = ResidueRing::new(BigInt::from(73), 5);
        let f = Poly::from_terms(
            ring.clone(),
            1,
            MonomialOrder::GrevLex,
            vec![
                (Monomial::new(vec![2]), BigInt::from(1)),
                (Monomial::new(vec![0]), BigInt::from(2)),
            ],
        );
        let v = f.evaluate(&[root.value().clone()]).unwrap();
        assert!(ring.is_zero(&v));
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut rand_poly = |arity: usize| -> ZPoly {
            let terms: Vec<(Monomial, BigInt)> = (0..rng.gen_range(0..6))
                .map(|_| {
                    let exps: Vec<u16> = (0..arity).map(|_| rng.gen_range(0..3)).collect();
                    (Monomial::new(exps), BigInt::from(rng.gen_range(-4i64..=4)))
                })
                .collect();
            Poly::from_terms(IntegerRing, arity, MonomialOrder::GrevLex, terms)
        };
        for _ in 0..200 {
            let f = rand_poly(3);
            let g = rand_poly(3);
            let h = rand_poly(3);
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }
    }

    #[test]
    fn leibniz_rule_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut rand_poly = |arity: usize| -> ZPoly {
            let terms: Vec<(Monomial, BigInt)> = (0..rng.gen_range(1..6))
                .map(|_| {
                    let exps: Vec<u16> = (0..arity).map(|_| rng.gen_range(0..4)).collect();
                    (Monomial::new(exps), BigInt::from(rng.gen_range(-4i64..=4)))
                })
                .collect();
            Poly::from_terms(IntegerRing, arity, MonomialOrder::GrevLex, terms)
        };
        for _ in 0..100 {
            let f = rand_poly(3);
            let g = rand_poly(3);
            for i in 0..3 {
                let lhs = f.mul(&g).derivative(i);
                let rhs = f.derivative(i).mul(&g).add(&f.mul(&g.derivative(i)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn jacobian_single_derivatives() {
        let ring = ResidueRing::prime_field(7);
        let f = Poly::from_terms(
            ring.clone(),
            3,
            MonomialOrder::GrevLex,
            vec![
                (Monomial::new(vec![2, 0, 0]), BigInt::from(1)),
                (Monomial::new(vec![0, 2, 0]), BigInt::from(1)),
                (Monomial::new(vec![0, 0, 2]), BigInt::from(1)),
            ],
        );
        let ideal = IdealBasis::new(ring.clone(), 3, MonomialOrder::GrevLex, vec![f]).unwrap();
        let minors = ideal.jacobian_minors(1, &[(vec![0], vec![0])]).unwrap();
        let expected = Poly::from_terms(
            ring,
            3,
            MonomialOrder::GrevLex,
            vec![(Monomial::new(vec![1, 0, 0]), BigInt::from(2))],
        );
        assert_eq!(minors[0], expected);
    }

    #[test]
    fn jacobian_all_one_by_one_minors() {
        // xy - z^2 has gradient (y, x, -2z)
        let f = zp(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let ideal = IdealBasis::new(IntegerRing, 3, MonomialOrder::GrevLex, vec![f]).unwrap();
        let sels: Vec<(Vec<usize>, Vec<usize>)> =
            (0..3).map(|c| (vec![0], vec![c])).collect();
        let minors = ideal.jacobian_minors(1, &sels).unwrap();
        assert_eq!(minors[0], zp(&[(1, &[0, 1, 0])]));
        assert_eq!(minors[1], zp(&[(1, &[1, 0, 0])]));
        assert_eq!(minors[2], zp(&[(-2, &[0, 0, 1])]));
    }

    #[test]
    fn jacobian_two_by_two_minor() {
        // I = (x^2 - yz, y^2 - xz); rows are gradients
        //   (2x, -z, -y)
        //   (-z, 2y, -x)
        // columns {x, y}: det = 4xy - z^2, cross-checked by evaluation
        let f1 = zp(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let f2 = zp(&[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]);
        let ideal = IdealBasis::new(IntegerRing, 3, MonomialOrder::GrevLex, vec![f1, f2]).unwrap();
        let minors = ideal
            .jacobian_minors(2, &[(vec![0, 1], vec![0, 1])])
            .unwrap();
        let expected = zp(&[(4, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        assert_eq!(minors[0], expected);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let p: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
            let direct = {
                let j = ideal.jacobian();
                let a = j[0][0].evaluate(&p).unwrap();
                let b = j[0][1].evaluate(&p).unwrap();
                let c = j[1][0].evaluate(&p).unwrap();
                let d = j[1][1].evaluate(&p).unwrap();
                a * d - b * c
            };
            assert_eq!(minors[0].evaluate(&p).unwrap(), direct);
        }
    }

    #[test]
    fn jacobian_selection_errors() {
        let f = zp(&[(1, &[2, 0, 0])]);
        let ideal = IdealBasis::new(IntegerRing, 3, MonomialOrder::GrevLex, vec![f]).unwrap();
        assert!(ideal.jacobian_minors(2, &[]).is_err());
        assert!(ideal.jacobian_minors(1, &[(vec![5], vec![0])]).is_err());
    }

    #[test]
    fn coordinate_change_identity_and_swap() {
        let q = RationalField;
        let rat = |n: i64| BigRational::from_integer(BigInt::from(n));
        let f = Poly::from_terms(
            q,
            3,
            MonomialOrder::GrevLex,
            vec![
                (Monomial::new(vec![2, 0, 0]), rat(1)),
                (Monomial::new(vec![0, 1, 1]), rat(-1)),
            ],
        );
        let ideal = IdealBasis::new(q, 3, MonomialOrder::GrevLex, vec![f.clone()]).unwrap();
        let id = linalg::identity(&q, 3);
        assert_eq!(ideal.linear_change_of_coordinates(&id).unwrap(), ideal);
        // swap y and z: x^2 - zy is the same polynomial
        let swap = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
        ];
        let swapped = ideal.linear_change_of_coordinates(&swap).unwrap();
        assert_eq!(swapped.generators()[0], f);

        let singular = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ];
        assert_eq!(
            ideal.linear_change_of_coordinates(&singular).unwrap_err(),
            MpolyError::SingularMatrix
        );
    }

    #[test]
    fn coordinate_change_round_trip_random() {
        let ring = ResidueRing::prime_field(101);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let arity = 3usize;
            let gens: Vec<Poly<ResidueRing>> = (0..2)
                .map(|_| {
                    let d = rng.gen_range(1..=3u32);
                    let terms: Vec<(Monomial, BigInt)> = (0..4)
                        .map(|_| {
                            // random homogeneous degree-d exponent vector
                            let mut exps = vec![0u16; arity];
                            for _ in 0..d {
                                exps[rng.gen_range(0..arity)] += 1;
                            }
                            (Monomial::new(exps), BigInt::from(rng.gen_range(0..101)))
                        })
                        .collect();
                    Poly::from_terms(ring.clone(), arity, MonomialOrder::GrevLex, terms)
                })
                .collect();
            let ideal = IdealBasis::new(ring.clone(), arity, MonomialOrder::GrevLex, gens).unwrap();
            // random invertible matrix
            let m: linalg::Matrix<ResidueRing> = loop {
                let cand: Vec<Vec<BigInt>> = (0..arity)
                    .map(|_| (0..arity).map(|_| BigInt::from(rng.gen_range(0..101))).collect())
                    .collect();
                if linalg::invert(&ring, &cand).is_some() {
                    break cand;
                }
            };
            let minv = linalg::invert(&ring, &m).unwrap();
            let forward = ideal.linear_change_of_coordinates(&m).unwrap();
            // homogeneity must be preserved
            assert!(forward.generators().iter().all(|g| g.is_homogeneous()));
            let back = forward.linear_change_of_coordinates(&minv).unwrap();
            assert_eq!(back, ideal);
        }
    }
}
