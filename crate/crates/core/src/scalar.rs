//! Scalar backends.
//!
//! Every construction in the crate is generic over a real field `R`. Two
//! backends are provided: `f64`, and `BigRational` for exact arithmetic.
//! Complex numbers are `num_complex::Complex<R>`.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Complex scalar over a real backend.
pub type C<R> = num_complex::Complex<R>;

/// Real field underlying a scalar backend.
pub trait Real:
    Num + Clone + Neg<Output = Self> + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// `true` when arithmetic never rounds.
    const EXACT: bool;
    /// Short backend tag used in reports.
    const NAME: &'static str;

    fn from_i64(v: i64) -> Self;
    fn ratio(n: i64, d: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Square root if it lies inside the field. Always `Some` for floats
    /// (given a nonnegative input); only for perfect squares when exact.
    fn sqrt_exact(&self) -> Option<Self>;
    /// Parse a decimal (`0.25`, `1e-6`) or fraction (`1/4`) literal.
    fn parse_literal(s: &str) -> Result<Self>;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Real for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt_exact(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let d: f64 = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if d == 0.0 {
                return Err(Error::Parse(s.to_string()));
            }
            return Ok(n / d);
        }
        s.parse().map_err(|_| Error::Parse(s.to_string()))
    }
}

impl Real for BigRational {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // Ratio is kept reduced with a positive denominator.
        let n = int_sqrt(self.numer())?;
        let d = int_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }
    fn parse_literal(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

fn int_sqrt(v: &BigInt) -> Option<BigInt> {
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

/// Exact rational from a decimal or fraction literal. `0.3` becomes 3/10,
/// not the nearest binary double.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(n / d);
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    if shift >= 0 {
        value *= scale;
    } else {
        value /= scale;
    }
    Ok(if neg { -value } else { value })
}

/// `re + i·im` from integers.
pub fn ci<R: Real>(re: i64, im: i64) -> C<R> {
    C::new(R::from_i64(re), R::from_i64(im))
}

/// Embed a real.
pub fn cr<R: Real>(re: R) -> C<R> {
    C::new(re, R::zero())
}

/// `i·im` for a real `im`.
pub fn cim<R: Real>(im: R) -> C<R> {
    C::new(R::zero(), im)
}

pub fn to_c64<R: Real>(z: &C<R>) -> num_complex::Complex64 {
    num_complex::Complex64::new(z.re.to_f64(), z.im.to_f64())
}

pub(crate) fn half<R: Real>() -> R {
    R::one() / R::from_i64(2)
}
