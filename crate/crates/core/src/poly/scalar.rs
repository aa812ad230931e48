use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Coefficient field for polynomials and the elimination routines.
///
/// The exact analyses run over [`BigRational`]; the float impls exist for
/// quick numeric experiments and are not exact.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Signed + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Positive factor whose removal leaves a primitive coefficient vector.
    /// Fields without a notion of content return one.
    fn content<'a, I>(_coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        Self::one()
    }

    /// Split a content value into (numerator, denominator) factors that can be
    /// pushed onto the two sides of a fraction.
    fn split_ratio(&self) -> (Self, Self) {
        (self.clone(), Self::one())
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        a.clone() * b.clone()
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        a.clone() + b.clone()
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        a.clone() - b.clone()
    }

    /// `self += a·b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = Self::add_ref(self, &Self::mul_ref(a, b));
    }

    /// `self -= a·b`.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = Self::sub_ref(self, &Self::mul_ref(a, b));
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn content<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in coeffs {
            if c.is_zero() {
                continue;
            }
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num, den)
    }

    fn split_ratio(&self) -> (Self, Self) {
        (
            BigRational::from_integer(self.numer().clone()),
            BigRational::from_integer(self.denom().clone()),
        )
    }

    // Integer operands skip the gcd normalisation of the general path.

    fn mul_ref(a: &Self, b: &Self) -> Self {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() * b.numer());
        }
        a * b
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() + b.numer());
        }
        a + b
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() - b.numer());
        }
        a - b
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if self.is_integer() && a.is_integer() && b.is_integer() {
            let n = std::mem::take(self).into_raw().0;
            *self = BigRational::from_integer(n + a.numer() * b.numer());
        } else {
            *self = &*self + a * b;
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if self.is_integer() && a.is_integer() && b.is_integer() {
            let n = std::mem::take(self).into_raw().0;
            *self = BigRational::from_integer(n - a.numer() * b.numer());
        } else {
            *self = &*self - a * b;
        }
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
}

/// Parse `p`, `-p`, `p/q` or a decimal `d.ddd` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{int_digits}{frac}").parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(digits, scale);
        return Some(if neg { -r } else { r });
    }
    let n: BigInt = text.parse().ok()?;
    Some(BigRational::from_integer(n))
}
