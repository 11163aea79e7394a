//! Exact rational arithmetic for the bound formulas.
//!
//! Backed by [`num_rational::BigRational`] over arbitrary-precision
//! integers: values are kept in canonical form (reduced, positive
//! denominator) and equality is structural, which is what the bound
//! certification relies on. Bounds like `25/2` must never be rounded
//! silently, so callers take explicit floors.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

pub type Rational = num_rational::BigRational;

/// Exact rational from an unsigned integer.
pub fn from_u64(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Exact quotient `num / den`.
pub fn ratio(num: u64, den: u64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Floor of a rational as a big integer.
pub fn floor_int(value: &Rational) -> BigInt {
    value.floor().to_integer()
}

pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Renders `p/q` with the denominator always spelled out, e.g. `40/1`.
pub fn fraction_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Converts a non-negative integral rational to `u64`; `None` when the
/// value has a fractional part, is negative, or overflows.
pub fn to_u64_exact(value: &Rational) -> Option<u64> {
    if !is_integer(value) || value.is_negative() {
        return None;
    }
    value.numer().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_rendering() {
        let half = ratio(25, 2);
        assert_eq!(fraction_string(&half), "25/2");
        assert_eq!(floor_int(&half), BigInt::from(12));
        assert!(!is_integer(&half));

        let forty = ratio(160, 4);
        assert_eq!(fraction_string(&forty), "40/1");
        assert_eq!(to_u64_exact(&forty), Some(40));
        assert_eq!(forty, from_u64(40));
    }

    #[test]
    fn non_integral_values_have_no_exact_u64() {
        assert_eq!(to_u64_exact(&ratio(10, 7)), None);
    }
}
