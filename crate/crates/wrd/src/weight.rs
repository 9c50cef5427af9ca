//! Exact rational arithmetic for vertex weights.
//!
//! All quantities in this crate (weights, domination numbers, bounds) are
//! exact rationals; nothing is ever rounded through floating point.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn ratio_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Build `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// True if `r` is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Canonical text form: `p/q` in lowest terms, or just `p` for integers.
pub fn ratio_to_string(r: &Rational) -> String {
    if is_integral(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse an exact rational from `INT`, `INT/UINT`, or `INT.DIGITS`.
///
/// Accepted forms: `7`, `-3`, `5/2`, `-5/2`, `2.5`, `-0.125`. The denominator
/// of the `/` form must be a plain unsigned integer; whitespace is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::BadNumber {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i32, rest),
        None => (1, s),
    };
    if body.is_empty() {
        return Err(bad("missing digits"));
    }
    let digits = |part: &str, what: &str| -> Result<BigInt> {
        if part.is_empty() {
            return Err(bad(&format!("missing digits in {what}")));
        }
        if !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(&format!("non-digit character in {what}")));
        }
        BigInt::from_str(part).map_err(|e| bad(&e.to_string()))
    };
    let magnitude = if let Some((num, den)) = body.split_once('/') {
        let num = digits(num, "numerator")?;
        let den = digits(den, "denominator")?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Rational::new(num, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        let int = digits(int, "integer part")?;
        let frac_digits = frac.len() as u32;
        let frac = digits(frac, "fractional part")?;
        let scale = BigInt::from(10u32).pow(frac_digits);
        Rational::new(int * &scale + frac, scale)
    } else {
        Rational::from_integer(digits(body, "integer")?)
    };
    Ok(if sign < 0 { -magnitude } else { magnitude })
}

/// Strictly positive vertex weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rational);

impl Weight {
    /// Wrap a rational, rejecting zero and negative values.
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_positive() {
            Ok(Weight(value))
        } else {
            Err(Error::NonPositiveWeight {
                value: ratio_to_string(&value),
            })
        }
    }

    /// Weight from a positive integer.
    pub fn from_integer(v: u64) -> Self {
        assert!(v > 0, "integer weight must be positive");
        Weight(Rational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(&self) -> &Rational {
        &self.0
    }

    pub fn into_ratio(self) -> Rational {
        self.0
    }

    /// True if the weight is an integer.
    pub fn is_integral(&self) -> bool {
        is_integral(&self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ratio_to_string(&self.0))
    }
}

/// Weights rescaled to integers by the least common denominator.
///
/// The enumeration inner loops compare and accumulate weights millions of
/// times; doing that on `BigInt` instead of reduced fractions skips a gcd
/// per operation. `denom` converts results back to exact rationals.
#[derive(Debug, Clone)]
pub(crate) struct ScaledWeights {
    pub scaled: Vec<BigInt>,
    pub denom: BigInt,
}

impl ScaledWeights {
    pub fn new(weights: &[Weight]) -> Self {
        use num::Integer;
        let denom = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.ratio().denom()));
        let scaled = weights
            .iter()
            .map(|w| w.ratio().numer() * (&denom / w.ratio().denom()))
            .collect();
        ScaledWeights { scaled, denom }
    }

    /// Interpret a scaled integer as the rational it represents.
    pub fn to_ratio(&self, v: &BigInt) -> Rational {
        Rational::new(v.clone(), self.denom.clone())
    }

    /// Scaled total weight.
    pub fn total(&self) -> BigInt {
        self.scaled.iter().sum()
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::new(parse_rational(s)?)
    }
}
