//! Coefficient types.
//!
//! Exact rationals are the default everywhere. Complex rationals back the
//! complexified algebras, and `f64` is available for large approximate
//! computations where exactness is not needed.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::signature::Field;

/// Exact rational number.
pub type Rational = BigRational;

/// Exact complex number with rational parts.
pub type ComplexRational = Complex<BigRational>;

/// Coefficients stored as exactly zero below this magnitude in float mode.
pub const ZERO_TOL: f64 = 1e-12;

/// A coefficient field for multivectors.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Field this scalar type realizes.
    const FIELD: Field;

    fn from_rational(r: &Rational) -> Self;

    /// Whether the value should be dropped from sparse storage.
    fn is_negligible(&self) -> bool;

    /// `|self|` as a float (complex modulus for complex scalars).
    fn modulus(&self) -> f64;

    /// `sqrt(|self|)` when it is representable in this type.
    fn sqrt_modulus(&self) -> Option<Self>;

    /// The imaginary unit, if this field has one.
    fn imaginary_unit() -> Option<Self>;

    /// Splits off a leading sign for printing: `(negative, magnitude text)`.
    /// The magnitude text must itself parse as an expression.
    fn sign_and_text(&self) -> (bool, String);

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn half() -> Self {
        Self::from_rational(&Rational::new(BigInt::from(1), BigInt::from(2)))
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for Rational {
    const FIELD: Field = Field::Real;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn modulus(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::NAN)
    }

    fn sqrt_modulus(&self) -> Option<Self> {
        rational_sqrt(&self.abs())
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn sign_and_text(&self) -> (bool, String) {
        (self.is_negative(), rational_text(&self.abs()))
    }
}

impl Scalar for ComplexRational {
    const FIELD: Field = Field::Complex;

    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }

    fn is_negligible(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn modulus(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::NAN);
        let im = self.im.to_f64().unwrap_or(f64::NAN);
        re.hypot(im)
    }

    fn sqrt_modulus(&self) -> Option<Self> {
        let norm_sqr = &self.re * &self.re + &self.im * &self.im;
        let modulus = rational_sqrt(&norm_sqr)?;
        rational_sqrt(&modulus).map(|r| Complex::new(r, Rational::zero()))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(Rational::zero(), Rational::one()))
    }

    fn sign_and_text(&self) -> (bool, String) {
        if self.im.is_zero() {
            return self.re.sign_and_text();
        }
        if self.re.is_zero() {
            let (neg, text) = self.im.sign_and_text();
            return (neg, format!("{text}*i"));
        }
        let (neg, im) = self.im.sign_and_text();
        let op = if neg { '-' } else { '+' };
        let re = if self.re.is_negative() {
            format!("-{}", rational_text(&self.re.abs()))
        } else {
            rational_text(&self.re)
        };
        (false, format!("({re} {op} {im}*i)"))
    }
}

impl Scalar for f64 {
    const FIELD: Field = Field::Real;

    fn from_rational(r: &Rational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= ZERO_TOL
    }

    fn modulus(&self) -> f64 {
        self.abs()
    }

    fn sqrt_modulus(&self) -> Option<Self> {
        Some(self.abs().sqrt())
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn sign_and_text(&self) -> (bool, String) {
        (self.is_sign_negative(), format!("{}", self.abs()))
    }
}

/// Builds an exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an exact integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_square_roots() {
        assert_eq!(rat(9, 4).sqrt_modulus(), Some(rat(3, 2)));
        assert_eq!(int(-16).sqrt_modulus(), Some(int(4)));
        assert_eq!(int(30).sqrt_modulus(), None);
        let z = Complex::new(int(3), int(4));
        // |3+4i| = 5, not a perfect square
        assert_eq!(z.sqrt_modulus(), None);
        let z = Complex::new(int(0), int(9));
        assert_eq!(z.sqrt_modulus(), Some(Complex::new(int(3), int(0))));
    }

    #[test]
    fn printing_splits_sign() {
        assert_eq!(int(-3).sign_and_text(), (true, "3".to_string()));
        assert_eq!(rat(1, 2).sign_and_text(), (false, "1/2".to_string()));
        let z = Complex::new(int(1), int(-2));
        assert_eq!(z.sign_and_text(), (false, "(1 - 2*i)".to_string()));
        let z = Complex::new(int(0), int(-2));
        assert_eq!(z.sign_and_text(), (true, "2*i".to_string()));
    }

    #[test]
    fn float_tolerance() {
        assert!(1e-13f64.is_negligible());
        assert!(!1e-11f64.is_negligible());
    }
}
