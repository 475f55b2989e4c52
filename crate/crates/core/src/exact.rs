//! Exact arbitrary-precision scalars: rationals in canonical form, the
//! combinatorial primitives (factorial, binomial), and decimal digits of π
//! computed in pure integer arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact fraction with arbitrary-precision numerator and positive
/// denominator, always reduced to lowest terms. Zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the canonical fraction `num/den`. The sign is carried by the
    /// numerator; a zero denominator is rejected.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Integer power; negative exponents invert (zero base rejected there).
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.pow(exp)))
    }

    /// Nearest-f64 approximation; exact values outside f64 range saturate.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

/// Convenience constructor mirroring `Rational::new` for machine integers.
pub fn rat(num: i64, den: i64) -> Result<Rational> {
    Rational::new(num, den)
}

impl fmt::Display for Rational {
    /// Always prints `num/den`, even for integers, so exact values survive
    /// serialization unambiguously.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Fixed-point decimal expansion: the full rendered string plus the count
/// of fractional digits it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalString {
    pub digits: String,
    pub precision: usize,
}

impl DecimalString {
    pub fn to_f64(&self) -> f64 {
        self.digits.parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for DecimalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

/// Exact `n!`.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Exact binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // Each partial product C(n-k+i, i) is integral, so the division is exact.
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

const PI_MAX_PRECISION: usize = 10_000;
const PI_GUARD_DIGITS: usize = 10;

/// First `precision` fractional digits of π, truncated fixed point.
///
/// Machin's identity π/4 = 4·arctan(1/5) − arctan(1/239), evaluated on
/// integers scaled by 10^(precision + 10); the guard digits absorb the
/// per-term truncation of the arctangent series.
pub fn pi_digits(precision: usize) -> Result<DecimalString> {
    if !(1..=PI_MAX_PRECISION).contains(&precision) {
        return Err(Error::PrecisionOutOfRange {
            got: precision,
            min: 1,
            max: PI_MAX_PRECISION,
        });
    }
    let scaled = pi_scaled(precision + PI_GUARD_DIGITS);
    let truncated = scaled / BigInt::from(10u32).pow(PI_GUARD_DIGITS as u32);
    Ok(fixed_point_string(&truncated, precision))
}

/// Integer floor approximation of π·10^digits (error well below the last
/// guard digit for the supported range).
pub(crate) fn pi_scaled(digits: usize) -> BigInt {
    let unit = BigInt::from(10u32).pow(digits as u32);
    let pi_quarter = &arctan_recip(5, &unit) * 4 - arctan_recip(239, &unit);
    pi_quarter * 4
}

/// Σ (−1)^i / ((2i+1)·x^(2i+1)) scaled by `unit`, by alternating integer
/// divisions until the term underflows to zero.
fn arctan_recip(x: u64, unit: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = unit / BigInt::from(x);
    let mut total = BigInt::zero();
    let mut denom = BigInt::one();
    let mut subtract = false;
    while !power.is_zero() {
        let term = &power / &denom;
        if term.is_zero() {
            break;
        }
        if subtract {
            total -= term;
        } else {
            total += term;
        }
        power /= &x2;
        denom += 2;
        subtract = !subtract;
    }
    total
}

/// Renders `value / 10^precision` with exactly `precision` fractional digits.
pub(crate) fn fixed_point_string(value: &BigInt, precision: usize) -> DecimalString {
    let ten_p = BigInt::from(10u32).pow(precision as u32);
    let (int_part, frac_part) = (value / &ten_p, value % &ten_p);
    let frac_digits = format!(
        "{:0>width$}",
        frac_part.abs().to_string(),
        width = precision
    );
    let sign = if value.is_negative() && int_part.is_zero() {
        "-"
    } else {
        ""
    };
    DecimalString {
        digits: format!("{sign}{int_part}.{frac_digits}"),
        precision,
    }
}
