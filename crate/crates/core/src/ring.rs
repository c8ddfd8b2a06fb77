//! Commutative coefficient rings for [`Series`](crate::series::Series).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative unital ring with exact equality.
///
/// Operations take references; the series code multiplies coefficients in
/// tight loops and should not be forced to clone.
pub trait Coefficient: Clone + Eq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        self.add_assign_ref(&a.mul_ref(b));
    }

    /// The value as an integer, if the element is a constant.
    fn as_integer(&self) -> Option<BigInt>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

/// Write `value` as a signed term prefix: ` + `/` - ` (or a leading `-`)
/// followed by the magnitude. Shared by the text forms of series and polynomials.
pub(crate) fn write_signed(
    f: &mut std::fmt::Formatter<'_>,
    first: bool,
    value: &BigInt,
    omit_unit: bool,
) -> std::fmt::Result {
    let negative = value.is_negative();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let magnitude = value.abs();
    if !(omit_unit && One::is_one(&magnitude)) {
        write!(f, "{magnitude}")?;
    }
    Ok(())
}
