//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Everything downstream is generic over [`Field`], which is implemented by
//! [`Rat`] (ℚ) and [`CRat`] (ℚ(i)). No floating point appears anywhere in this
//! crate; all arithmetic is exact and values are always kept in lowest terms
//! (which [`num_rational::BigRational`] guarantees after every operation).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar, reduced to lowest terms with positive denominator.
pub type Rat = BigRational;

/// Gaussian rational scalar `re + i·im`.
pub type CRat = Complex<BigRational>;

/// Runtime tag distinguishing the two coefficient fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// The rationals ℚ.
    Q,
    /// The Gaussian rationals ℚ(i).
    Qi,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::Qi => write!(f, "Qi"),
        }
    }
}

/// Common interface of the two exact coefficient fields.
///
/// `conj` is the identity on ℚ and negates the imaginary part on ℚ(i); it is
/// an involutive field automorphism in both cases.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    fn real_part(&self) -> Rat;
    fn imag_part(&self) -> Rat;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    fn is_real(&self) -> bool {
        Field::is_zero(&self.imag_part())
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rat {
    const TAG: FieldTag = FieldTag::Q;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn real_part(&self) -> Rat {
        self.clone()
    }

    fn imag_part(&self) -> Rat {
        Zero::zero()
    }
}

impl Field for CRat {
    const TAG: FieldTag = FieldTag::Qi;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_rat(r: Rat) -> Self {
        Complex::new(r, Zero::zero())
    }

    fn real_part(&self) -> Rat {
        self.re.clone()
    }

    fn imag_part(&self) -> Rat {
        self.im.clone()
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`; panics when `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the Gaussian rational `re + i·im`.
pub fn crat(re: i64, im: i64) -> CRat {
    Complex::new(rat(re), rat(im))
}

/// The imaginary unit of ℚ(i).
pub fn imag_unit() -> CRat {
    Complex::new(Zero::zero(), One::one())
}
