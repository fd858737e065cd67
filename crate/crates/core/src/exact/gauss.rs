//! Complex numbers with exact rational real and imaginary parts, used to
//! carry high-precision decimal approximations without floating error.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactError;

/// Parses a plain decimal string (optional sign, optional fractional part,
/// optional `e`/`E` exponent) into an exact rational.
pub fn parse_decimal(input: &str) -> Result<BigRational, ExactError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ExactError::Parse("empty decimal".into()));
    }
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| ExactError::Parse(format!("bad exponent in `{input}`")))?;
            (m, e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ExactError::Parse(format!("bad decimal `{input}`")));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(ExactError::Parse(format!("bad decimal `{input}`")));
    }
    let joined = format!("{int_part}{frac_part}");
    let mut num: BigInt = if joined.is_empty() {
        BigInt::zero()
    } else {
        joined
            .parse()
            .map_err(|_| ExactError::Parse(format!("bad decimal `{input}`")))?
    };
    if neg {
        num = -num;
    }
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let q = if shift >= 0 {
        BigRational::from_integer(num * ten.pow(shift as u32))
    } else {
        BigRational::new(num, ten.pow((-shift) as u32))
    };
    Ok(q)
}

/// An element of `Q(i)`: exact complex rational arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn neg(&self) -> Self {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * q,
            im: &self.im * q,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one();
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

    /// Parses `a`, `a+bi`, `a-bi` or `bi` with decimal parts.
    pub fn parse(input: &str) -> Result<Self, ExactError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = s.strip_suffix('i') {
            // split the imaginary part off at the last top-level sign
            let bytes = body.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                let c = bytes[idx] as char;
                if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                    split = Some(idx);
                    break;
                }
            }
            match split {
                Some(idx) => {
                    let re = parse_decimal(&body[..idx])?;
                    let im_str = &body[idx..];
                    let im = if im_str == "+" {
                        BigRational::one()
                    } else if im_str == "-" {
                        -BigRational::one()
                    } else {
                        parse_decimal(im_str)?
                    };
                    Ok(GaussianRational::new(re, im))
                }
                None => {
                    let im = if body.is_empty() {
                        BigRational::one()
                    } else {
                        parse_decimal(body)?
                    };
                    Ok(GaussianRational::new(BigRational::zero(), im))
                }
            }
        } else {
            Ok(GaussianRational::from_real(parse_decimal(&s)?))
        }
    }
}
