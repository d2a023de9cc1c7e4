//! Real quadratic fields k = Q(sqrt(d)): exact element arithmetic, norms,
//! traces, total positivity, splitting of rational primes, local square
//! tests, and the special value zeta_k(-1).
//!
//! Elements are pairs of rationals a + b*sqrt(d). The ring of integers is
//! Z[omega] with omega = sqrt(d) for d = 2, 3 (mod 4) and omega =
//! (1+sqrt(d))/2 for d = 1 (mod 4). All predicates (positivity, splitting,
//! local squares) are decided exactly, without floating point.

pub mod local;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, is_squarefree, kronecker_two, legendre, sigma1};
use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};

pub use local::is_local_square;

/// The real quadratic field Q(sqrt(d)) for a squarefree d > 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    d: i64,
    disc: i64,
}

impl QuadraticField {
    /// Validate d and compute the field discriminant:
    /// D = d for d = 1 (mod 4), D = 4d otherwise.
    pub fn new(d: i64) -> Result<Self> {
        if d <= 1 {
            return Err(Error::OutOfRange(format!(
                "quadratic field requires d > 1, got {}",
                d
            )));
        }
        if !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        let disc = if d % 4 == 1 { d } else { 4 * d };
        Ok(QuadraticField { d, disc })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    /// True when the integral basis is {1, (1+sqrt(d))/2}.
    pub fn has_half_integers(&self) -> bool {
        self.d % 4 == 1
    }

    /// The element a + b*sqrt(d) from rationals.
    pub fn element(&self, a: Rational, b: Rational) -> QFElement {
        QFElement { d: self.d, a, b }
    }

    /// The element a + b*sqrt(d) from integers.
    pub fn elem(&self, a: i64, b: i64) -> QFElement {
        self.element(rat_int(a), rat_int(b))
    }

    /// sqrt(d) itself.
    pub fn sqrt_gen(&self) -> QFElement {
        self.elem(0, 1)
    }

    /// Splitting of the rational prime p, decided by the Kronecker symbol
    /// (D/p): +1 split, -1 inert, 0 ramified.
    pub fn split_type(&self, p: u64) -> Result<PrimeSplit> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let symbol = if p == 2 {
            kronecker_two(self.disc)
        } else {
            legendre(self.disc, p)
        };
        let (kind, q) = match symbol {
            1 => (SplitKind::Split, p),
            -1 => (SplitKind::Inert, p * p),
            _ => (SplitKind::Ramified, p),
        };
        let root = if kind == SplitKind::Split {
            Some(self.default_split_root(p))
        } else {
            None
        };
        Ok(PrimeSplit {
            p,
            kind,
            q,
            label: format!("p{}", p),
            root,
        })
    }

    /// Smallest root of the splitting congruence; see [`PrimeSplit::root`].
    fn default_split_root(&self, p: u64) -> u64 {
        if p == 2 {
            // Root of x^2 - x + (1-d)/4 (mod 2); both 0 and 1 work when 2 splits.
            0
        } else {
            (1..p)
                .find(|&r| (r * r) % p == (self.d.rem_euclid(p as i64) as u64))
                .expect("split prime must admit a square root of d")
        }
    }

    /// Dedekind zeta value zeta_k(-1) via Siegel's finite sum
    ///
    /// ```text
    /// zeta_k(-1) = (1/60) * sum_{b^2 < D, b^2 = D (mod 4)} sigma_1((D - b^2)/4)
    /// ```
    pub fn zeta_minus_one(&self) -> Rational {
        let d_disc = self.disc;
        let mut total: u64 = 0;
        let mut b: i64 = if d_disc % 2 == 0 { 0 } else { 1 };
        // b runs over all integers of the right parity with b^2 < D;
        // nonzero b contributes twice (for +b and -b).
        while b * b < d_disc {
            let term = sigma1(((d_disc - b * b) / 4) as u64);
            total += if b == 0 { term } else { 2 * term };
            b += 2;
        }
        Rational::new(BigInt::from(total), BigInt::from(60))
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// How a rational prime sits in the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitKind {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitKind::Split => write!(f, "split"),
            SplitKind::Inert => write!(f, "inert"),
            SplitKind::Ramified => write!(f, "ramified"),
        }
    }
}

/// A prime of k above the rational prime p.
///
/// `q` is the residue field size (p for split/ramified, p^2 for inert).
/// For a split prime the two primes above p are distinguished by `root`:
/// the residue of sqrt(d) for odd p (the prime is (p, sqrt(d) - root)),
/// or the residue of omega = (1+sqrt(d))/2 for p = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSplit {
    p: u64,
    kind: SplitKind,
    q: u64,
    label: String,
    root: Option<u64>,
}

impl PrimeSplit {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn kind(&self) -> SplitKind {
        self.kind
    }

    /// Residue field size.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn root(&self) -> Option<u64> {
        self.root
    }

    /// Select the other prime above a split p (or pin a specific root).
    pub fn with_root(mut self, field: &QuadraticField, root: u64) -> Result<Self> {
        if self.kind != SplitKind::Split {
            return Err(Error::OutOfRange(format!(
                "{} is not split; no root choice to make",
                self.label
            )));
        }
        let valid = if self.p == 2 {
            root < 2
        } else {
            (root * root) % self.p == field.d().rem_euclid(self.p as i64) as u64
        };
        if !valid {
            return Err(Error::OutOfRange(format!(
                "{} is not a valid root for p = {}",
                root, self.p
            )));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }
}

impl fmt::Display for PrimeSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, q={})", self.label, self.kind, self.q)
    }
}

/// An element a + b*sqrt(d) of Q(sqrt(d)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFElement {
    d: i64,
    a: Rational,
    b: Rational,
}

impl QFElement {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> QFElement {
        QFElement {
            d: self.d,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a^2 - d*b^2.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat_int(self.d) * &self.b * &self.b
    }

    /// Field trace 2a.
    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    fn check_same_field(&self, other: &QFElement) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &QFElement) -> Result<QFElement> {
        self.check_same_field(other)?;
        Ok(QFElement {
            d: self.d,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn sub(&self, other: &QFElement) -> Result<QFElement> {
        self.check_same_field(other)?;
        Ok(QFElement {
            d: self.d,
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        })
    }

    pub fn neg(&self) -> QFElement {
        QFElement {
            d: self.d,
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, other: &QFElement) -> Result<QFElement> {
        self.check_same_field(other)?;
        let d = rat_int(self.d);
        Ok(QFElement {
            d: self.d,
            a: &self.a * &other.a + &d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    pub fn div(&self, other: &QFElement) -> Result<QFElement> {
        self.check_same_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = other.norm();
        let prod = self.mul(&other.conjugate())?;
        Ok(QFElement {
            d: self.d,
            a: prod.a / &n,
            b: prod.b / &n,
        })
    }

    pub fn scale(&self, c: &Rational) -> QFElement {
        QFElement {
            d: self.d,
            a: &self.a * c,
            b: &self.b * c,
        }
    }

    pub fn pow(&self, e: u32) -> QFElement {
        let mut acc = QFElement {
            d: self.d,
            a: Rational::one(),
            b: Rational::zero(),
        };
        for _ in 0..e {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Integrality test: an element is an algebraic integer exactly when its
    /// trace and norm are rational integers.
    pub fn is_integral(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    /// Exact sign of the real embedding a + b*sqrt(d) (for `plus` = true)
    /// or a - b*sqrt(d), decided by comparing a^2 with d*b^2.
    pub fn embedding_sign(&self, plus: bool) -> i32 {
        let b = if plus { self.b.clone() } else { -self.b.clone() };
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: the dominant term decides.
        let a2 = &self.a * &self.a;
        let db2 = rat_int(self.d) * &b * &b;
        match a2.cmp(&db2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Both real embeddings strictly positive.
    pub fn is_totally_positive(&self) -> bool {
        self.embedding_sign(true) > 0 && self.embedding_sign(false) > 0
    }

    /// True when the element is a square in Q(sqrt(d)).
    ///
    /// For b != 0 this reduces to: the norm a^2 - d*b^2 must be the square
    /// of a rational s, and (a+s)/2 or (a-s)/2 must be a rational square.
    pub fn is_square_in_field(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if self.b.is_zero() {
            let da = &self.a / rat_int(self.d);
            return rational_is_square(&self.a) || rational_is_square(&da);
        }
        let n = self.norm();
        let s = match rational_sqrt(&n) {
            Some(s) => s,
            None => return false,
        };
        let two = rat_int(2);
        let t1 = (&self.a + &s) / &two;
        let t2 = (&self.a - &s) / &two;
        rational_is_square(&t1) || rational_is_square(&t2)
    }

    /// Coordinates (x, y) with self = x + y*omega over the integral basis.
    pub fn integral_coords(&self) -> (Rational, Rational) {
        if self.d % 4 == 1 {
            // sqrt(d) = 2*omega - 1.
            (&self.a - &self.b, &self.b + &self.b)
        } else {
            (self.a.clone(), self.b.clone())
        }
    }
}

impl fmt::Display for QFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bmag = self.b.abs();
        let bterm = if bmag.is_one() {
            format!("sqrt({})", self.d)
        } else if bmag.is_integer() {
            format!("{}*sqrt({})", bmag, self.d)
        } else {
            format!("({})*sqrt({})", bmag, self.d)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}", bterm)
            } else {
                write!(f, "{}", bterm)
            }
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {} {}", self.a, sign, bterm)
        }
    }
}

fn rational_sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn rational_is_square(x: &Rational) -> bool {
    rational_sqrt(x).is_some()
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero rational.
pub fn rat_valuation(x: &Rational, p: u64) -> i64 {
    assert!(!x.is_zero());
    int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64
}
