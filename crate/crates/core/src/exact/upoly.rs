//! Small helpers for univariate polynomials with big-integer or rational
//! coefficients, stored as coefficient slices in ascending degree order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Evaluates `f(x) mod m`.
pub fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

/// Evaluates `f(x)` over the rationals.
pub fn eval_rat(f: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in f.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

pub fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    if f.len() <= 1 {
        return vec![];
    }
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub fn degree(f: &[BigInt]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

/// gcd of all coefficients, always nonnegative; zero for the zero polynomial.
pub fn content(f: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in f {
        g = g.gcd(c);
    }
    g
}

/// Divides by the content and makes the leading coefficient positive.
pub fn primitive_part(f: &[BigInt]) -> Vec<BigInt> {
    let c = content(f);
    if c.is_zero() {
        return vec![];
    }
    let deg = degree(f).unwrap();
    let mut out: Vec<BigInt> = f[..=deg].iter().map(|x| x / &c).collect();
    if out[deg].is_negative() {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

fn rat_poly_trim(f: &mut Vec<BigRational>) {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
}

fn rat_poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = a.to_vec();
    rat_poly_trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / lb;
        for i in 0..=db {
            let v = &r[dr - db + i] - &factor * &b[i];
            r[dr - db + i] = v;
        }
        rat_poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Monic gcd over the rationals.
pub fn gcd_rat(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = a.to_vec();
    let mut b: Vec<BigRational> = b.to_vec();
    rat_poly_trim(&mut a);
    rat_poly_trim(&mut b);
    while !b.is_empty() {
        let r = rat_poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

pub fn to_rat(f: &[BigInt]) -> Vec<BigRational> {
    f.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Squarefree test via gcd with the derivative.
pub fn is_squarefree(f: &[BigInt]) -> bool {
    match degree(f) {
        None => false,
        Some(0) => true,
        Some(_) => {
            let g = gcd_rat(&to_rat(f), &to_rat(&derivative(f)));
            g.len() == 1
        }
    }
}

/// Squarefree part `f / gcd(f, f')`, primitive with positive leading
/// coefficient. Assumes `f` nonzero.
pub fn squarefree_part(f: &[BigInt]) -> Vec<BigInt> {
    let fr = to_rat(f);
    let g = gcd_rat(&fr, &to_rat(&derivative(f)));
    if g.len() == 1 {
        return primitive_part(f);
    }
    // exact division f / g over the rationals
    let mut quo = vec![BigRational::zero(); fr.len() - g.len() + 1];
    let mut rem = fr;
    rat_poly_trim(&mut rem);
    let dg = g.len() - 1;
    while rem.len() > dg {
        let dr = rem.len() - 1;
        let factor = &rem[dr] / &g[dg];
        quo[dr - dg] = factor.clone();
        for i in 0..=dg {
            let v = &rem[dr - dg + i] - &factor * &g[i];
            rem[dr - dg + i] = v;
        }
        rat_poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "squarefree part: non-exact division");
    // clear denominators
    let mut den = BigInt::one();
    for c in &quo {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = quo.iter().map(|c| c.numer() * &den / c.denom()).collect();
    primitive_part(&ints)
}

pub fn format_poly(f: &[BigInt], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in f.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if i == 0 {
            format!("{mag}")
        } else {
            let pow = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
            if mag.is_one() {
                pow
            } else {
                format!("{mag}*{pow}")
            }
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(if c.is_negative() { format!(" - {body}") } else { format!(" + {body}") });
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn squarefree_detection() {
        // (x-1)^2 = x^2 - 2x + 1
        assert!(!is_squarefree(&[big(1), big(-2), big(1)]));
        assert!(is_squarefree(&[big(-2), big(0), big(1)]));
        assert_eq!(squarefree_part(&[big(1), big(-2), big(1)]), vec![big(-1), big(1)]);
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_poly(&[big(2), big(-4), big(0), big(3)], "x"), "3*x^3 - 4*x + 2");
        assert_eq!(format_poly(&[], "x"), "0");
    }
}
