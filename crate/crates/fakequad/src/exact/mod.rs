//! Exact rational and cyclotomic arithmetic.
//!
//! Every quantity in this crate (Euler numbers, discrepancies, Lefschetz
//! sums) is an exact rational or an element of a cyclotomic field Q(zeta_n);
//! no floating point appears anywhere on a computation path.
//!
//! - [`Rational`]: arbitrary-precision rationals, always in lowest terms
//!   with positive denominator (guaranteed by the underlying type).
//! - [`poly`]: dense univariate polynomials over the integers and rationals.
//! - [`cyclotomic`]: Q(zeta_n) in the power basis modulo the n-th
//!   cyclotomic polynomial, so equality against rationals is canonical.

pub mod cyclotomic;
pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use cyclotomic::{cyclotomic_polynomial, root_of_unity, CyclotomicNumber};
pub use poly::{IntPoly, QPoly};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Rational n/d from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse "a/b" or "a" into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("4/5"), Some(rat(4, 5)));
        assert_eq!(parse_rational("-12"), Some(rat_int(-12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
