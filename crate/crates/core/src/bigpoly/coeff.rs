use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{NumAssign, Signed, Zero};

/// Scalar ring a [`Poly`](super::Poly) can carry as coefficients.
///
/// Implemented for arbitrary-precision integers, the fixed-width signed
/// integers and the matching rational types. Fixed-width coefficients
/// overflow like their primitive counterparts; only [`BigInt`] and
/// [`Ratio<BigInt>`] are exact for every input.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Send + Sync + Signed + NumAssign + 'static
{
    /// `self / divisor` if the quotient exists in the ring, `None` otherwise.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    fn add_ref(&mut self, rhs: &Self);

    fn sub_ref(&mut self, rhs: &Self);

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self);

    /// `self -= a * b`
    fn sub_product(&mut self, a: &Self, b: &Self);

    fn from_i64(value: i64) -> Self;

    /// Parses an unsigned decimal literal, `"12"` or (for rationals) `"3/4"`.
    fn parse_decimal(text: &str) -> Option<Self>;
}

macro_rules! impl_integer_coefficient {
    ($($ty:ty),*) => {$(
        impl Coefficient for $ty {
            fn exact_div(&self, divisor: &Self) -> Option<Self> {
                if divisor.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                r.is_zero().then_some(q)
            }

            fn add_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }

            fn sub_ref(&mut self, rhs: &Self) {
                *self -= rhs;
            }

            fn add_product(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }

            fn sub_product(&mut self, a: &Self, b: &Self) {
                *self -= a * b;
            }

            fn from_i64(value: i64) -> Self {
                <$ty>::from(value)
            }

            fn parse_decimal(text: &str) -> Option<Self> {
                text.parse().ok()
            }
        }
    )*};
}

impl_integer_coefficient!(BigInt, i64, i128);

macro_rules! impl_rational_coefficient {
    ($($int:ty),*) => {$(
        impl Coefficient for Ratio<$int> {
            fn exact_div(&self, divisor: &Self) -> Option<Self> {
                (!divisor.is_zero()).then(|| self / divisor)
            }

            fn add_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }

            fn sub_ref(&mut self, rhs: &Self) {
                *self -= rhs;
            }

            fn add_product(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }

            fn sub_product(&mut self, a: &Self, b: &Self) {
                *self -= a * b;
            }

            fn from_i64(value: i64) -> Self {
                Ratio::from_integer(<$int>::from(value))
            }

            fn parse_decimal(text: &str) -> Option<Self> {
                match text.split_once('/') {
                    None => text.parse().ok().map(Ratio::from_integer),
                    Some((n, d)) => {
                        let d: $int = d.parse().ok()?;
                        (!d.is_zero()).then(|| n.parse().ok().map(|n| Ratio::new(n, d)))?
                    }
                }
            }
        }
    )*};
}

impl_rational_coefficient!(BigInt, i64, i128);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_div() {
        assert_eq!(
            BigInt::from(12).exact_div(&BigInt::from(4)),
            Some(BigInt::from(3))
        );
        assert_eq!(
            BigInt::from(-12).exact_div(&BigInt::from(4)),
            Some(BigInt::from(-3))
        );
        assert_eq!(BigInt::from(13).exact_div(&BigInt::from(4)), None);
        assert_eq!(7i64.exact_div(&0), None);
    }

    #[test]
    fn rational_exact_div_always_succeeds_off_zero() {
        let a = Ratio::new(3i64, 4);
        let b = Ratio::new(5i64, 7);
        assert_eq!(a.exact_div(&b), Some(Ratio::new(21, 20)));
        assert_eq!(a.exact_div(&Ratio::from_integer(0)), None);
    }
}
