//! The cyclotomic fields Q(zeta_n), represented in the power basis modulo
//! the n-th cyclotomic polynomial Phi_n.
//!
//! Reducing modulo Phi_n (rather than x^n - 1) makes representations
//! canonical, so a Lefschetz sum can be compared with the rational 1
//! exactly. Elements of different orders are combined by lifting both into
//! Q(zeta_lcm) via zeta_n = zeta_m^(m/n).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, QPoly};
use super::Rational;
use crate::arith::{divisors, euler_phi, moebius};
use crate::error::{Error, Result};

/// The n-th cyclotomic polynomial Phi_n, monic of degree phi(n).
///
/// Computed from the Moebius product Phi_n(x) = prod_{d | n} (x^(n/d) - 1)^mu(d),
/// with the mu = -1 factors cleared by exact division.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic_polynomial: n must be >= 1");
    let mut num = IntPoly::from_i64(&[1]);
    let mut den = IntPoly::from_i64(&[1]);
    for d in divisors(n) {
        match moebius(d) {
            1 => num = num.mul(&IntPoly::xn_minus_one(n / d)),
            -1 => den = den.mul(&IntPoly::xn_minus_one(n / d)),
            _ => {}
        }
    }
    num.div_exact(&den)
}

fn phi_n_cached(n: u64) -> QPoly {
    static CACHE: OnceLock<Mutex<HashMap<u64, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| cyclotomic_polynomial(n).to_qpoly())
        .clone()
}

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    /// Coefficient vector of length phi(order).
    coeffs: Vec<Rational>,
}

/// The root of unity zeta_n^k as an element of Q(zeta_n).
pub fn root_of_unity(n: u64, k: i64) -> CyclotomicNumber {
    assert!(n >= 1, "root_of_unity: n must be >= 1");
    let k = k.rem_euclid(n as i64) as usize;
    CyclotomicNumber::from_poly(n, QPoly::monomial(k, Rational::one()))
}

impl CyclotomicNumber {
    /// Reduce an arbitrary polynomial in zeta_n into the power basis.
    pub fn from_poly(order: u64, poly: QPoly) -> Self {
        let deg = euler_phi(order) as usize;
        let reduced = poly.rem(&phi_n_cached(order));
        let mut coeffs = reduced.coeffs().to_vec();
        coeffs.resize(deg, Rational::zero());
        CyclotomicNumber { order, coeffs }
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        Self::from_poly(order, QPoly::constant(value))
    }

    pub fn zero(order: u64) -> Self {
        Self::from_rational(order, Rational::zero())
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn as_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    /// Lift into Q(zeta_m) for order | m, sending zeta_order to zeta_m^(m/order).
    pub fn raise_order(&self, m: u64) -> CyclotomicNumber {
        assert!(
            m % self.order == 0,
            "raise_order: {} does not divide {}",
            self.order,
            m
        );
        if m == self.order {
            return self.clone();
        }
        let k = (m / self.order) as usize;
        CyclotomicNumber::from_poly(m, self.as_qpoly().substitute_power(k))
    }

    fn common_order(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = a.order.lcm(&b.order);
            (a.raise_order(m), b.raise_order(m))
        }
    }

    /// Multiplicative inverse via the extended euclidean algorithm mod Phi_n.
    pub fn inv(&self) -> Result<CyclotomicNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = phi_n_cached(self.order);
        let (g, u, _) = self.as_qpoly().extended_gcd(&phi);
        // Phi_n is irreducible over Q, so the gcd with a nonzero residue is 1.
        debug_assert_eq!(g.degree(), 0);
        let ginv = Rational::one() / g.coeffs()[0].clone();
        Ok(CyclotomicNumber::from_poly(self.order, u.scale(&ginv)))
    }

    pub fn div(&self, other: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let (a, b) = Self::common_order(self, other);
        Ok(&a * &b.inv()?)
    }

    /// Integer power, with negative exponents through the inverse.
    pub fn pow(&self, e: i64) -> Result<CyclotomicNumber> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CyclotomicNumber::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// The rational value of the element, if it lies in Q.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Ok(self
                .coeffs
                .first()
                .cloned()
                .unwrap_or_else(Rational::zero))
        } else {
            Err(Error::NotRational)
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common_order(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common_order(self, rhs);
        CyclotomicNumber::from_poly(a.order, a.as_qpoly().add(&b.as_qpoly()))
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common_order(self, rhs);
        CyclotomicNumber::from_poly(a.order, a.as_qpoly().sub(&b.as_qpoly()))
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common_order(self, rhs);
        CyclotomicNumber::from_poly(a.order, a.as_qpoly().mul(&b.as_qpoly()))
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber::from_poly(
            self.order,
            QPoly::zero().sub(&self.as_qpoly()),
        )
    }
}

// Render as a polynomial in z<n> = zeta_n.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if !mag.is_one() || i == 0 {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "z{}", self.order)?,
                _ => write!(f, "z{}^{}", self.order, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    /// Independent oracle: Phi_n by dividing x^n - 1 by the product of all
    /// lower-level cyclotomic polynomials, recursively.
    fn phi_by_division(n: u64) -> IntPoly {
        let mut quotient = IntPoly::xn_minus_one(n);
        for d in divisors(n) {
            if d < n {
                quotient = quotient.div_exact(&phi_by_division(d));
            }
        }
        quotient
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        // Frozen from the division oracle: Phi_8 = x^4 + 1, Phi_12 = x^4 - x^2 + 1.
        assert_eq!(cyclotomic_polynomial(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            IntPoly::from_i64(&[1, 0, -1, 0, 1])
        );
        assert_eq!(phi_by_division(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(phi_by_division(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_matches_division_oracle_up_to_60() {
        for n in 1..=60 {
            let phi = cyclotomic_polynomial(n);
            assert_eq!(phi, phi_by_division(n), "Phi_{}", n);
            assert!(phi.is_monic());
            assert_eq!(phi.degree() as u64, euler_phi(n));
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(
            root_of_unity(4, 2),
            CyclotomicNumber::from_rational(4, rat_int(-1))
        );
        assert_eq!(
            root_of_unity(6, 3),
            CyclotomicNumber::from_rational(6, rat_int(-1))
        );
        // zeta_5 is the class of x itself.
        let z5 = root_of_unity(5, 1);
        assert_eq!(z5.coeffs()[1], rat_int(1));
        assert!(z5.coeffs()[0].is_zero());
    }

    #[test]
    fn power_and_minimal_polynomial_up_to_60() {
        for n in 1..=60u64 {
            let z = root_of_unity(n, 1);
            assert!(z.pow(n as i64).unwrap().is_one(), "zeta_{}^{} != 1", n, n);
            // Every power of every root of unity of order n is killed by n.
            for k in [0i64, 1, (n as i64) - 1, (n as i64) / 2 + 1, 7 % n as i64] {
                let zk = root_of_unity(n, k);
                assert!(
                    zk.pow(n as i64).unwrap().is_one(),
                    "(zeta_{}^{})^{} != 1",
                    n,
                    k,
                    n
                );
            }
            // Phi_n(zeta_n) = 0, evaluated through the implemented arithmetic.
            let phi = cyclotomic_polynomial(n);
            let mut acc = CyclotomicNumber::zero(n);
            for (i, c) in phi.coeffs().iter().enumerate() {
                let term = &CyclotomicNumber::from_rational(n, Rational::from(c.clone()))
                    * &z.pow(i as i64).unwrap();
                acc = &acc + &term;
            }
            assert!(acc.is_zero(), "Phi_{}(zeta_{}) != 0", n, n);
        }
    }

    #[test]
    fn self_division_is_one() {
        let a = &CyclotomicNumber::one(2) - &root_of_unity(2, 1); // 1 - zeta_2 = 2
        assert!(a.div(&a).unwrap().is_one());
    }

    #[test]
    fn product_of_one_plus_cube_roots() {
        // (1 + zeta_3)(1 + zeta_3^2) = 1, frozen by expanding with
        // zeta_3^2 + zeta_3 + 1 = 0.
        let one = CyclotomicNumber::one(3);
        let a = &one + &root_of_unity(3, 1);
        let b = &one + &root_of_unity(3, 2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn as_rational_cases() {
        assert_eq!(
            CyclotomicNumber::from_rational(4, rat(7, 2)).as_rational(),
            Ok(rat(7, 2))
        );
        assert_eq!(root_of_unity(4, 1).as_rational(), Err(Error::NotRational));
        // zeta_6 + zeta_6^-1 = 1 since zeta_6 satisfies x^2 - x + 1 = 0.
        let z = root_of_unity(6, 1);
        let sum = &z + &z.pow(-1).unwrap();
        assert_eq!(sum.as_rational(), Ok(rat_int(1)));
    }

    #[test]
    fn mixed_order_arithmetic() {
        // zeta_6^3 = -1 = zeta_2, compared across orders.
        assert_eq!(root_of_unity(6, 3), root_of_unity(2, 1));
        let sum = &root_of_unity(2, 1) + &root_of_unity(3, 1); // -1 + zeta_3 in Q(zeta_6)
        assert_eq!(sum.order(), 6);
        let back = &sum - &root_of_unity(3, 1);
        assert_eq!(back.as_rational(), Ok(rat_int(-1)));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let z = root_of_unity(5, 1);
        assert_eq!(z.div(&CyclotomicNumber::zero(5)), Err(Error::DivisionByZero));
    }
}
