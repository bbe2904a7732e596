//! Maps truth values to exact rationals in `[-1, 1]` by reading the digit
//! list as a balanced-ternary expansion: position `i` (1-based) contributes
//! `d_i / 3^(i-1)` with `F = -1`, `0 = 0`, `T = 1`.
//!
//! Arithmetic is exact throughout; floating point never enters, the decimal
//! renderer included. The list order of the domain and the numeric order of
//! the images agree, which the property suites check exhaustively on
//! enumerated fragments.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::value::{Digit, TruthValue};

/// Decimal digits printed by default: `3^-18 > 10^-9`, so nine digits
/// separate all values of up to 19 digits.
pub const DEFAULT_DECIMAL_PRECISION: usize = 9;

/// An exact fraction in lowest terms with positive denominator.
///
/// The public surface is deliberately narrow: construction, comparison, and
/// rendering. No arithmetic is exposed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`, reduced. Panics when the
    /// denominator is zero.
    pub fn new(numerator: i64, denominator: i64) -> Rational {
        assert!(denominator != 0, "denominator must be non-zero");
        Rational(BigRational::new(BigInt::from(numerator), BigInt::from(denominator)))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Rounded decimal expansion with exactly `precision` fractional digits,
    /// round-half-even. `precision` 0 yields a bare integer.
    pub fn decimal_string(&self, precision: usize) -> String {
        let denom = self.0.denom();
        let negative = self.0.numer().is_negative();
        let scale = BigInt::from(10).pow(precision as u32);
        let scaled = self.0.numer().abs() * &scale;
        let mut quotient = &scaled / denom;
        let remainder = &scaled % denom;
        let doubled: BigInt = &remainder * 2;
        let round_up = match doubled.cmp(denom) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => (&quotient % 2) == BigInt::from(1),
            std::cmp::Ordering::Less => false,
        };
        if round_up {
            quotient += 1;
        }
        let digits = quotient.to_string();
        let mut out = String::new();
        if negative && !quotient.is_zero() {
            out.push('-');
        }
        if precision == 0 {
            out.push_str(&digits);
            return out;
        }
        if digits.len() <= precision {
            out.push('0');
            out.push('.');
            for _ in 0..precision - digits.len() {
                out.push('0');
            }
            out.push_str(&digits);
        } else {
            let split = digits.len() - precision;
            out.push_str(&digits[..split]);
            out.push('.');
            out.push_str(&digits[split..]);
        }
        out
    }
}

impl fmt::Display for Rational {
    /// Reduced fraction text: `num/den`, or just the numerator when the
    /// denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom() == &BigInt::from(1) {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// The balanced-ternary reading of a truth value. The numerator accumulates
/// by Horner's rule, the unreduced denominator is `3^(n-1)` for an `n`-digit
/// value, and reduction happens on construction.
pub fn value_of(value: &TruthValue) -> Rational {
    let mut numerator = BigInt::zero();
    for digit in value.digits() {
        numerator *= 3;
        match digit {
            Digit::T => numerator += 1,
            Digit::F => numerator -= 1,
            Digit::Zero => {}
        }
    }
    let denominator = BigInt::from(3).pow((value.digit_count() - 1) as u32);
    Rational(BigRational::new(numerator, denominator))
}
