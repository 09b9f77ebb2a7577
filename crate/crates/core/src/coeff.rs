//! The coefficient-ring abstraction the series engine is generic over.

use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use crate::poly::LambdaPoly;
use crate::Rational;

/// A commutative ring usable as the coefficient ring of a truncated
/// power series. `Zero`/`One` bring the additive and multiplicative
/// structure; `try_inv` exposes exactly the units of the ring, which is
/// what series division needs from its leading coefficient.
pub trait Coeff:
    Clone + PartialEq + Debug + Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Embed a small integer into the ring.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inv(&self) -> Option<Self>;
}

impl Coeff for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for LambdaPoly {
    fn from_int(n: i64) -> Self {
        LambdaPoly::constant(Rational::from_integer(n.into()))
    }

    /// Units of the polynomial ring are the nonzero constants.
    fn try_inv(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.is_zero() {
            None
        } else {
            Some(LambdaPoly::constant(c.recip()))
        }
    }
}

/// n! as a ring element, built by repeated multiplication so that the
/// embedding never overflows a machine integer.
pub fn factorial_in<C: Coeff>(n: usize) -> C {
    let mut acc = C::one();
    for k in 2..=n {
        acc = acc * C::from_int(k as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_units() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(half.try_inv(), Some(Rational::from_int(2)));
        assert_eq!(Rational::zero().try_inv(), None);
    }

    #[test]
    fn poly_units_are_nonzero_constants() {
        assert_eq!(
            LambdaPoly::from_int(2).try_inv(),
            Some(LambdaPoly::constant(Rational::new(1.into(), 2.into())))
        );
        assert_eq!(LambdaPoly::zero().try_inv(), None);
        assert_eq!(LambdaPoly::lambda_pow(1).try_inv(), None);
    }

    #[test]
    fn factorial_embedding() {
        assert_eq!(factorial_in::<Rational>(4), Rational::from_int(24));
        assert_eq!(factorial_in::<LambdaPoly>(0), LambdaPoly::one());
    }
}
