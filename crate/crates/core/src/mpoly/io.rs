//! Text format for ideal bases, shared by the Gröbner, lifting and
//! verification tools.
//!
//! ```text
//! # comment
//! ring rat vars 3 order grevlex
//! x0^2*x1 - 2*x2^3
//! 1/2*x0*x1^2 + x2^3
//! ```
//!
//! Ring tags: `int`, `rat`, `zmod:<p>` (prime field) and `zmod:<p>^<k>`.
//! Terms are `coef*x<i>^<e>*...`; a missing coefficient means 1, a missing
//! exponent means 1. Blank lines and `#` comments are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{IdealBasis, Monomial, MonomialOrder, MpolyError, Poly};
use crate::exact::{IntegerRing, RationalField, ResidueRing, Ring};

/// Coefficient ring named in an ideal file header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingTag {
    Int,
    Rat,
    ZMod { prime: BigInt, exponent: u32 },
}

impl RingTag {
    pub fn parse(s: &str) -> Option<RingTag> {
        match s {
            "int" => Some(RingTag::Int),
            "rat" => Some(RingTag::Rat),
            _ => {
                let body = s.strip_prefix("zmod:")?;
                let (p, k) = match body.split_once('^') {
                    Some((p, k)) => (p, k.parse().ok()?),
                    None => (body, 1u32),
                };
                let prime: BigInt = p.parse().ok()?;
                if prime < BigInt::from(2) || k == 0 {
                    return None;
                }
                Some(RingTag::ZMod {
                    prime,
                    exponent: k,
                })
            }
        }
    }

    pub fn format(&self) -> String {
        match self {
            RingTag::Int => "int".to_string(),
            RingTag::Rat => "rat".to_string(),
            RingTag::ZMod { prime, exponent } => {
                if *exponent == 1 {
                    format!("zmod:{prime}")
                } else {
                    format!("zmod:{prime}^{exponent}")
                }
            }
        }
    }
}

/// An ideal over whichever ring the file declared.
#[derive(Clone, Debug)]
pub enum DynIdeal {
    Int(IdealBasis<IntegerRing>),
    Rat(IdealBasis<RationalField>),
    Mod(IdealBasis<ResidueRing>),
}

impl DynIdeal {
    pub fn arity(&self) -> usize {
        match self {
            DynIdeal::Int(i) => i.arity(),
            DynIdeal::Rat(i) => i.arity(),
            DynIdeal::Mod(i) => i.arity(),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        match self {
            DynIdeal::Int(i) => i.order(),
            DynIdeal::Rat(i) => i.order(),
            DynIdeal::Mod(i) => i.order(),
        }
    }

    pub fn ring_tag(&self) -> RingTag {
        match self {
            DynIdeal::Int(_) => RingTag::Int,
            DynIdeal::Rat(_) => RingTag::Rat,
            DynIdeal::Mod(i) => RingTag::ZMod {
                prime: i.ring().prime().clone(),
                exponent: i.ring().exponent(),
            },
        }
    }

    /// Reduction modulo `p`; denominators must be prime to `p`.
    pub fn to_mod_p(&self, p: &BigInt) -> Result<IdealBasis<ResidueRing>, MpolyError> {
        let ring = ResidueRing::new(p.clone(), 1);
        let convert_rat = |q: &BigRational| -> Result<BigInt, MpolyError> {
            ring.from_rational(q).ok_or_else(|| MpolyError::Parse {
                line: 0,
                message: format!("denominator of {q} not invertible mod {p}"),
            })
        };
        match self {
            DynIdeal::Int(i) => {
                let gens = i
                    .generators()
                    .iter()
                    .map(|g| g.map_coefficients(ring.clone(), |c| ring.reduce(c)))
                    .collect();
                IdealBasis::new(ring, i.arity(), i.order(), gens)
            }
            DynIdeal::Rat(i) => {
                let mut gens = Vec::new();
                for g in i.generators() {
                    let mut terms = Vec::new();
                    for (m, c) in g.terms() {
                        terms.push((m.clone(), convert_rat(c)?));
                    }
                    gens.push(Poly::from_terms(ring.clone(), i.arity(), i.order(), terms));
                }
                IdealBasis::new(ring, i.arity(), i.order(), gens)
            }
            DynIdeal::Mod(i) => {
                if i.ring().prime() != p || i.ring().exponent() != 1 {
                    let gens = i
                        .generators()
                        .iter()
                        .map(|g| g.map_coefficients(ring.clone(), |c| ring.reduce(c)))
                        .collect();
                    IdealBasis::new(ring, i.arity(), i.order(), gens)
                } else {
                    Ok(i.clone())
                }
            }
        }
    }

    /// The rational-coefficient view (exact for `int` and `rat` files).
    pub fn to_rational(&self) -> Option<IdealBasis<RationalField>> {
        match self {
            DynIdeal::Int(i) => {
                let gens = i
                    .generators()
                    .iter()
                    .map(|g| {
                        g.map_coefficients(RationalField, |c| BigRational::from_integer(c.clone()))
                    })
                    .collect();
                Some(IdealBasis::new(RationalField, i.arity(), i.order(), gens).unwrap())
            }
            DynIdeal::Rat(i) => Some(i.clone()),
            DynIdeal::Mod(_) => None,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> MpolyError {
    MpolyError::Parse {
        line,
        message: message.into(),
    }
}

/// Splits a polynomial body into signed term strings.
fn split_terms(body: &str) -> Vec<String> {
    let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for c in compact.chars() {
        if (c == '+' || c == '-')
            && !cur.is_empty()
            && !cur.ends_with('^')
            && !cur.ends_with('*')
            && !cur.ends_with('/')
        {
            terms.push(cur.clone());
            cur.clear();
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    terms
}

/// Parses one term `[coef][*]x<i>[^e][*x<j>[^e]...]` into a monomial and a
/// rational coefficient.
fn parse_term(arity: usize, term: &str, line: usize) -> Result<(Monomial, BigRational), MpolyError> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, term.strip_prefix('+').unwrap_or(term)),
    };
    let mut coef = BigRational::from_integer(BigInt::from(sign));
    let mut exps = vec![0u16; arity];
    let mut saw_anything = false;
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(parse_err(line, format!("empty factor in `{term}`")));
        }
        saw_anything = true;
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx_str, exp) = match rest.split_once('^') {
                Some((i, e)) => {
                    let e: u16 = e
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad exponent in `{factor}`")))?;
                    (i, e)
                }
                None => (rest, 1u16),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| parse_err(line, format!("bad variable in `{factor}`")))?;
            if idx >= arity {
                return Err(parse_err(
                    line,
                    format!("variable x{idx} exceeds declared arity {arity}"),
                ));
            }
            exps[idx] += exp;
        } else {
            let q = if let Some((n, d)) = factor.split_once('/') {
                let n: BigInt = n
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad coefficient `{factor}`")))?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad coefficient `{factor}`")))?;
                BigRational::new(n, d)
            } else {
                let n: BigInt = factor
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad coefficient `{factor}`")))?;
                BigRational::from_integer(n)
            };
            coef *= q;
        }
    }
    if !saw_anything {
        return Err(parse_err(line, "empty term"));
    }
    Ok((Monomial::new(exps), coef))
}

/// Parses the whole ideal file.
pub fn parse_ideal(text: &str) -> Result<DynIdeal, MpolyError> {
    let mut header: Option<(RingTag, usize, MonomialOrder)> = None;
    let mut raw_gens: Vec<Vec<(Monomial, BigRational)>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if header.is_none() {
            let mut it = content.split_whitespace();
            let (Some("ring"), Some(tag), Some("vars"), Some(n), Some("order"), Some(ord)) = (
                it.next(),
                it.next(),
                it.next(),
                it.next(),
                it.next(),
                it.next(),
            ) else {
                return Err(parse_err(line, "expected `ring <tag> vars <n> order <grevlex|lex>`"));
            };
            let tag = RingTag::parse(tag).ok_or_else(|| parse_err(line, format!("unknown ring tag `{tag}`")))?;
            let n: usize = n
                .parse()
                .map_err(|_| parse_err(line, "bad variable count"))?;
            let ord = MonomialOrder::parse(ord)
                .ok_or_else(|| parse_err(line, format!("unknown order `{ord}`")))?;
            header = Some((tag, n, ord));
            continue;
        }
        let (_, arity, _) = header.as_ref().unwrap();
        let mut terms = Vec::new();
        for t in split_terms(content) {
            terms.push(parse_term(*arity, &t, line)?);
        }
        raw_gens.push(terms);
    }
    let Some((tag, arity, order)) = header else {
        return Err(parse_err(0, "missing header line"));
    };
    match tag {
        RingTag::Int => {
            let ring = IntegerRing;
            let mut gens = Vec::new();
            for terms in raw_gens {
                let mut out = Vec::new();
                for (m, c) in terms {
                    if !c.denom().is_one() {
                        return Err(parse_err(0, format!("non-integer coefficient {c} in an `int` file")));
                    }
                    out.push((m, c.numer().clone()));
                }
                gens.push(Poly::from_terms(ring, arity, order, out));
            }
            Ok(DynIdeal::Int(IdealBasis::new(ring, arity, order, gens)?))
        }
        RingTag::Rat => {
            let ring = RationalField;
            let gens = raw_gens
                .into_iter()
                .map(|terms| Poly::from_terms(ring, arity, order, terms))
                .collect();
            Ok(DynIdeal::Rat(IdealBasis::new(ring, arity, order, gens)?))
        }
        RingTag::ZMod { prime, exponent } => {
            let ring = ResidueRing::new(prime, exponent);
            let mut gens = Vec::new();
            for terms in raw_gens {
                let mut out = Vec::new();
                for (m, c) in terms {
                    let v = ring.from_rational(&c).ok_or_else(|| {
                        parse_err(0, format!("denominator of {c} not invertible in the residue ring"))
                    })?;
                    out.push((m, v));
                }
                gens.push(Poly::from_terms(ring.clone(), arity, order, out));
            }
            Ok(DynIdeal::Mod(IdealBasis::new(ring, arity, order, gens)?))
        }
    }
}

/// Serializes an ideal basis in the shared file format.
pub fn format_ideal<R: Ring>(tag: &RingTag, basis: &IdealBasis<R>) -> String {
    let mut out = format!(
        "ring {} vars {} order {}\n",
        tag.format(),
        basis.arity(),
        basis.order().name()
    );
    for g in basis.generators() {
        out.push_str(&format_poly_line(g));
        out.push('\n');
    }
    out
}

pub fn format_poly_line<R: Ring>(g: &Poly<R>) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (m, c) in g.terms() {
        let coeff = g.ring().fmt_elem(c);
        let mut factors: Vec<String> = Vec::new();
        if coeff != "1" || m.is_one() {
            factors.push(coeff);
        }
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{i}")),
                _ => factors.push(format!("x{i}^{e}")),
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reformat_rat() {
        let text = "# twisted cubic\nring rat vars 4 order grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(ideal.arity(), 4);
        let DynIdeal::Rat(basis) = &ideal else {
            panic!("expected rational ideal")
        };
        assert_eq!(basis.generators().len(), 3);
        let reformatted = format_ideal(&ideal.ring_tag(), basis);
        let reparsed = parse_ideal(&reformatted).unwrap();
        let DynIdeal::Rat(basis2) = reparsed else {
            panic!()
        };
        assert_eq!(basis.generators(), basis2.generators());
    }

    #[test]
    fn parse_modular() {
        let text = "ring zmod:7 vars 3 order lex\n3*x0^2 + 6*x1*x2\n";
        let DynIdeal::Mod(basis) = parse_ideal(text).unwrap() else {
            panic!()
        };
        assert_eq!(basis.ring().prime(), &BigInt::from(7));
        assert_eq!(basis.order(), MonomialOrder::Lex);
        assert!(RingTag::parse("zmod:73^30").is_some());
        assert!(RingTag::parse("zmod:1").is_none());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "ring rat vars 2 order grevlex\nx0 + x5\n";
        match parse_ideal(text).unwrap_err() {
            MpolyError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reduction_mod_p() {
        let text = "ring rat vars 2 order grevlex\n1/2*x0^2 - x1^2\n";
        let ideal = parse_ideal(text).unwrap();
        let modp = ideal.to_mod_p(&BigInt::from(7)).unwrap();
        // 1/2 = 4 mod 7
        let lt = modp.generators()[0].leading_term().unwrap();
        assert_eq!(lt.1, BigInt::from(4));
    }
}
