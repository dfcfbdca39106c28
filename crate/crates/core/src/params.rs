use crate::error::{Error, Result};
use crate::scalar::Real;

/// ħ, β and δ = β/ħ. `√δ` is stored because every smeared operator needs it;
/// in the exact backend δ must therefore be the square of a rational.
#[derive(Clone, Debug, PartialEq)]
pub struct SmearingParams<R: Real> {
    hbar: R,
    delta: R,
    sqrt_delta: R,
}

impl<R: Real> SmearingParams<R> {
    pub fn new(hbar: R, beta: R) -> Result<Self> {
        if hbar <= R::zero() {
            return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
        }
        if beta < R::zero() {
            return Err(Error::InvalidParameter(format!("beta must be nonnegative, got {beta}")));
        }
        let delta = beta / hbar.clone();
        Self::with_hbar(hbar, delta)
    }

    /// ħ = 1, β = δ.
    pub fn from_delta(delta: R) -> Result<Self> {
        Self::with_hbar(R::one(), delta)
    }

    pub fn with_hbar(hbar: R, delta: R) -> Result<Self> {
        if hbar <= R::zero() {
            return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
        }
        if delta < R::zero() {
            return Err(Error::InvalidParameter(format!("delta must be nonnegative, got {delta}")));
        }
        let sqrt_delta = delta.sqrt_exact().ok_or_else(|| Error::NotRationalSquare(format!("delta = {delta}")))?;
        Ok(Self { hbar, delta, sqrt_delta })
    }

    pub fn canonical() -> Self {
        Self { hbar: R::one(), delta: R::zero(), sqrt_delta: R::zero() }
    }

    pub fn hbar(&self) -> &R {
        &self.hbar
    }
    pub fn beta(&self) -> R {
        self.hbar.clone() * self.delta.clone()
    }
    pub fn delta(&self) -> &R {
        &self.delta
    }
    pub fn sqrt_delta(&self) -> &R {
        &self.sqrt_delta
    }
    /// √(ħβ) = ħ√δ.
    pub fn sqrt_hbar_beta(&self) -> R {
        self.hbar.clone() * self.sqrt_delta.clone()
    }
    /// ħ + β.
    pub fn total(&self) -> R {
        self.hbar.clone() * (R::one() + self.delta.clone())
    }
    /// 1 + δ.
    pub fn one_plus_delta(&self) -> R {
        R::one() + self.delta.clone()
    }
    pub fn is_canonical(&self) -> bool {
        self.delta.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational as Q;

    #[test]
    fn delta_is_ratio() {
        let p = SmearingParams::<Q>::new(Q::from_i64(2), Q::ratio(1, 2)).unwrap();
        assert_eq!(*p.delta(), Q::ratio(1, 4));
        assert_eq!(*p.sqrt_delta(), Q::ratio(1, 2));
        assert_eq!(p.sqrt_hbar_beta(), Q::from_i64(1));
        assert_eq!(p.total(), Q::ratio(5, 2));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(SmearingParams::<f64>::new(0.0, 0.1).is_err());
        assert!(SmearingParams::<f64>::new(1.0, -0.1).is_err());
        assert!(matches!(SmearingParams::<Q>::from_delta(Q::ratio(3, 10)), Err(Error::NotRationalSquare(_))));
        assert!(SmearingParams::<f64>::from_delta(0.3).is_ok());
    }
}
