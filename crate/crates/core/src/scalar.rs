//! Field abstraction shared by the linear-algebra kernels.
//!
//! Everything Lie-theoretic in this crate is exact, but the matrix, polynomial
//! and elimination code only needs field operations, so it is written once
//! against [`Scalar`] and instantiated for rationals, Gaussian rationals and
//! (for quick experiments) floats.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, Zero};

/// A field element usable by [`crate::linalg`] and [`crate::poly`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    /// True when arithmetic is exact; pivoting uses exact zero tests then.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;

    /// Zero test used when choosing pivots.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Size used to rank pivot candidates; only meaningful for inexact types.
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
}

macro_rules! ref_ops {
    () => {
        fn add_ref(&self, rhs: &Self) -> Self {
            self + rhs
        }
        fn sub_ref(&self, rhs: &Self) -> Self {
            self - rhs
        }
        fn mul_ref(&self, rhs: &Self) -> Self {
            self * rhs
        }
        fn div_ref(&self, rhs: &Self) -> Self {
            self / rhs
        }
    };
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    ref_ops!();
}

impl Scalar for Rational64 {
    const EXACT: bool = true;
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }
    ref_ops!();
}

impl Scalar for Complex<BigRational> {
    const EXACT: bool = true;
    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_i64(n), BigRational::zero())
    }
    ref_ops!();
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    ref_ops!();
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-10
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    ref_ops!();
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-5
    }
    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

/// Shorthand for an exact rational from a numerator and denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Gaussian rational `re + im·i`.
pub fn gaussian(re: BigRational, im: BigRational) -> Complex<BigRational> {
    Complex::new(re, im)
}

/// Formats a Gaussian rational as `a+bi`, the witness serialization format.
pub fn format_gaussian(z: &Complex<BigRational>) -> String {
    if z.im.is_zero() {
        z.re.to_string()
    } else if z.im.is_negative() {
        format!("{}-{}i", z.re, -z.im.clone())
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// `base^exp` for a nonzero rational base and any integer exponent.
pub fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut acc = BigRational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc = &acc * &b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_formatting() {
        assert_eq!(format_gaussian(&gaussian(ratio(1, 2), ratio(-3, 4))), "1/2-3/4i");
        assert_eq!(format_gaussian(&gaussian(ratio(2, 1), ratio(0, 1))), "2");
        assert_eq!(format_gaussian(&gaussian(ratio(0, 1), ratio(1, 1))), "0+1i");
    }

    #[test]
    fn negative_exponents() {
        assert_eq!(rational_pow(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(rational_pow(&ratio(5, 1), 0), ratio(1, 1));
    }
}
