//! Local square tests: is delta a square in the completion k_p?
//!
//! A prime p of k splits in the relative quadratic extension k(sqrt(delta))
//! exactly when delta is a square in k_p, so this test drives both the
//! embedding criterion for quaternion algebras and the torsion screening.
//!
//! Strategy, all exact:
//! - odd residue characteristic: factor delta = u * pi^v with pi a local
//!   uniformizer; delta is a square iff v is even and u is a square in the
//!   residue field (Legendre / finite-field power test).
//! - residue characteristic 2: reduce to a unit and test squares
//!   exhaustively modulo p^(2e+1) with e = v_p(2), the sharp Hensel bound.
//!
//! Valuations come from norms (v_p(eta) = v_p(N(eta)) at ramified primes,
//! half of it at inert primes) or from a Hensel-lifted embedding k -> Q_p
//! at split primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::pow_mod;
use crate::error::{Error, Result};
use crate::exact::Rational;

use super::{int_valuation, QFElement, QuadraticField, PrimeSplit, SplitKind};

/// True iff delta is a square in the completion of k = Q(sqrt(d)) at the
/// given prime.
///
/// Errors: `ZeroInput` for delta = 0, `PerfectSquareInput` when delta is
/// already a square in k (the extension k(sqrt(delta)) is not quadratic).
pub fn is_local_square(
    field: &QuadraticField,
    delta: &QFElement,
    prime: &PrimeSplit,
) -> Result<bool> {
    if delta.is_zero() {
        return Err(Error::ZeroInput);
    }
    if delta.d() != field.d() {
        return Err(Error::FieldMismatch);
    }
    if delta.is_square_in_field() {
        return Err(Error::PerfectSquareInput);
    }
    let eta = clear_denominators(delta);
    Ok(integral_is_local_square(field, &eta, prime))
}

/// True iff x = y modulo the prime (i.e. the difference has positive
/// valuation). Used for the trace congruence rules on torsion elements.
pub fn congruent_mod_prime(
    field: &QuadraticField,
    x: &QFElement,
    y: &QFElement,
    prime: &PrimeSplit,
) -> Result<bool> {
    let diff = x.sub(y)?;
    if diff.is_zero() {
        return Ok(true);
    }
    Ok(prime_valuation(field, &diff, prime)? >= 1)
}

/// Valuation of a nonzero element at a prime of k (denominators allowed).
pub fn prime_valuation(
    field: &QuadraticField,
    x: &QFElement,
    prime: &PrimeSplit,
) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if x.d() != field.d() {
        return Err(Error::FieldMismatch);
    }
    let (eta, c) = clear_denominators_with_factor(x);
    let e = if prime.kind() == SplitKind::Ramified {
        2
    } else {
        1
    };
    let vc = int_valuation(&c, prime.p()) as i64;
    Ok(eta.valuation(field, prime) as i64 - 2 * e * vc)
}

/// An element A + B*sqrt(d) of Z[sqrt(d)].
struct IntElement {
    d: i64,
    a: BigInt,
    b: BigInt,
}

fn clear_denominators(delta: &QFElement) -> IntElement {
    clear_denominators_with_factor(delta).0
}

/// Multiply by c^2 (a square: harmless for square testing) so that both
/// coordinates become integers.
fn clear_denominators_with_factor(delta: &QFElement) -> (IntElement, BigInt) {
    let c = delta.a().denom().lcm(delta.b().denom());
    let c2 = Rational::from(&c * &c);
    let a = (delta.a() * &c2).to_integer();
    let b = (delta.b() * &c2).to_integer();
    (
        IntElement {
            d: delta.d(),
            a,
            b,
        },
        c,
    )
}

impl IntElement {
    fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(self.d) * &self.b * &self.b
    }

    /// Coordinates over the integral basis {1, omega}.
    fn omega_coords(&self) -> (BigInt, BigInt) {
        if self.d % 4 == 1 {
            (&self.a - &self.b, &self.b + &self.b)
        } else {
            (self.a.clone(), self.b.clone())
        }
    }

    /// Valuation at the prime. The element must be nonzero.
    fn valuation(&self, field: &QuadraticField, prime: &PrimeSplit) -> u64 {
        let p = prime.p();
        match prime.kind() {
            SplitKind::Ramified => int_valuation(&self.norm(), p),
            SplitKind::Inert => {
                let v = int_valuation(&self.norm(), p);
                debug_assert!(v % 2 == 0, "inert norm valuation must be even");
                v / 2
            }
            SplitKind::Split => {
                // Embed into Q_p by sending the generator to a Hensel root;
                // precision beyond v_p(N) + 1 cannot be consumed.
                let bound = int_valuation(&self.norm(), p) + 1;
                let x = self.embed_split(field, prime, bound);
                int_valuation(&x, p)
            }
        }
    }

    /// Image in Z/p^prec under the embedding selected by the prime's root.
    /// Guaranteed nonzero mod p^prec when prec > v_p(N(eta)).
    fn embed_split(&self, field: &QuadraticField, prime: &PrimeSplit, prec: u64) -> BigInt {
        let p = prime.p();
        let root = prime.root().expect("split prime carries a root");
        let modulus = BigInt::from(p).pow(prec as u32);
        let x = if p == 2 {
            // Root of omega's minimal polynomial x^2 - x + (1-d)/4.
            let c0 = BigInt::from((1 - field.d()) / 4);
            let r = hensel_lift_poly(&BigInt::from(root), &c0, &modulus);
            let (x, y) = self.omega_coords();
            x + y * r
        } else {
            // Root of x^2 - d.
            let r = hensel_lift_sqrt(&BigInt::from(root), field.d(), p, &modulus);
            &self.a + &self.b * r
        };
        let x = x.mod_floor(&modulus);
        debug_assert!(!x.is_zero(), "split embedding lost the valuation");
        x
    }
}

fn integral_is_local_square(
    field: &QuadraticField,
    eta: &IntElement,
    prime: &PrimeSplit,
) -> bool {
    let p = prime.p();
    if p == 2 {
        return is_square_at_two(field, eta, prime);
    }
    let v = eta.valuation(field, prime);
    if v % 2 == 1 {
        return false;
    }
    // Reduce the unit part into the residue field and test there.
    match prime.kind() {
        SplitKind::Split => {
            let prec = int_valuation(&eta.norm(), p) + 1;
            let x = eta.embed_split(field, prime, prec);
            let u = exact_quotient(&x, p, v).mod_floor(&BigInt::from(p));
            legendre_big(&u, p) == 1
        }
        SplitKind::Inert => {
            let a = exact_quotient(&eta.a, p, v);
            let b = exact_quotient(&eta.b, p, v);
            fp2_is_square(&a, &b, field.d(), p)
        }
        SplitKind::Ramified => {
            // v = 2w with w = v_p(A); the residue is (A/p^w) / (d/p)^w mod p.
            let w = v / 2;
            let a_unit = exact_quotient(&eta.a, p, w).mod_floor(&BigInt::from(p));
            let d_prime = BigInt::from(field.d() / p as i64).mod_floor(&BigInt::from(p));
            let dw = d_prime.modpow(&BigInt::from(w), &BigInt::from(p));
            let dw_inv = mod_inverse(&dw, p);
            let u = (a_unit * dw_inv).mod_floor(&BigInt::from(p));
            legendre_big(&u, p) == 1
        }
    }
}

/// Square test at residue characteristic 2: exhaustive search modulo
/// p^(2e+1) on an explicit basis of the finite quotient ring.
fn is_square_at_two(field: &QuadraticField, eta: &IntElement, prime: &PrimeSplit) -> bool {
    match prime.kind() {
        SplitKind::Split => {
            // k_p = Q_2; a unit is a square iff it is 1 mod 8.
            let prec = int_valuation(&eta.norm(), 2) + 4;
            let x = eta.embed_split(field, prime, prec);
            let v = int_valuation(&x, 2);
            if v % 2 == 1 {
                return false;
            }
            let u = exact_quotient(&x, 2, v).mod_floor(&BigInt::from(8));
            u == BigInt::one()
        }
        SplitKind::Inert => {
            // d = 5 (mod 8); work in O/8O over the basis {1, omega}.
            let (x, y) = eta.omega_coords();
            // None means infinite valuation (zero coordinate).
            let v = match (opt_val(&x, 2), opt_val(&y, 2)) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => unreachable!("eta is nonzero"),
            };
            if v % 2 == 1 {
                return false;
            }
            let ux = exact_quotient_or_zero(&x, 2, v).mod_floor(&BigInt::from(8));
            let uy = exact_quotient_or_zero(&y, 2, v).mod_floor(&BigInt::from(8));
            let c = BigInt::from((field.d() - 1) / 4); // omega^2 = omega + c
            let eight = BigInt::from(8);
            for s0 in 0..8u32 {
                for s1 in 0..8u32 {
                    let (s0, s1) = (BigInt::from(s0), BigInt::from(s1));
                    // (s0 + s1*omega)^2 = s0^2 + c*s1^2 + (s1^2 + 2 s0 s1) omega
                    let r0 = (&s0 * &s0 + &c * &s1 * &s1).mod_floor(&eight);
                    let r1 = (&s1 * &s1 + BigInt::from(2) * &s0 * &s1).mod_floor(&eight);
                    if r0 == ux && r1 == uy {
                        return true;
                    }
                }
            }
            false
        }
        SplitKind::Ramified => {
            // e = v_p(2) = 2; test modulo p^5 = 4p.
            let v = int_valuation(&eta.norm(), 2);
            if v % 2 == 1 {
                return false;
            }
            // Divide out the uniformizer exactly in the field:
            // sqrt(d) for d = 2 (mod 4), 1 + sqrt(d) for d = 3 (mod 4).
            let k = *field;
            let pi = if field.d() % 4 == 2 {
                k.sqrt_gen()
            } else {
                k.elem(1, 1)
            };
            let elt = k.element(
                Rational::from(eta.a.clone()),
                Rational::from(eta.b.clone()),
            );
            let unit = elt.div(&pi.pow(v as u32)).expect("nonzero uniformizer");
            debug_assert!(unit.is_integral());
            let ua = unit.a().to_integer();
            let ub = unit.b().to_integer();
            let d = field.d();
            let in_lattice = |x: &BigInt, y: &BigInt| -> bool {
                if d.rem_euclid(4) == 2 {
                    // p^5 = span{(8,0), (0,4)} over {1, sqrt(d)}
                    x.mod_floor(&BigInt::from(8)).is_zero()
                        && y.mod_floor(&BigInt::from(4)).is_zero()
                } else {
                    // d = 3 (mod 4): p^5 = span{(8,0), (4,4)}
                    y.mod_floor(&BigInt::from(4)).is_zero()
                        && (x - y).mod_floor(&BigInt::from(8)).is_zero()
                }
            };
            for s0 in 0..8i64 {
                for s1 in 0..4i64 {
                    // (s0 + s1 sqrt d)^2 = s0^2 + d s1^2 + 2 s0 s1 sqrt d
                    let r0 = BigInt::from(s0 * s0 + d * s1 * s1) - &ua;
                    let r1 = BigInt::from(2 * s0 * s1) - &ub;
                    if in_lattice(&r0, &r1) {
                        return true;
                    }
                }
            }
            false
        }
    }
}

fn opt_val(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        None
    } else {
        Some(int_valuation(n, p))
    }
}

fn exact_quotient(n: &BigInt, p: u64, v: u64) -> BigInt {
    n / BigInt::from(p).pow(v as u32)
}

fn exact_quotient_or_zero(n: &BigInt, p: u64, v: u64) -> BigInt {
    if n.is_zero() {
        BigInt::zero()
    } else {
        exact_quotient(n, p, v)
    }
}

fn legendre_big(a: &BigInt, p: u64) -> i32 {
    let r = a.mod_floor(&BigInt::from(p));
    let r_u64 = u64::try_from(&r).expect("residue fits");
    if r_u64 == 0 {
        return 0;
    }
    if pow_mod(r_u64, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn mod_inverse(a: &BigInt, p: u64) -> BigInt {
    let pb = BigInt::from(p);
    a.modpow(&BigInt::from(p - 2), &pb)
}

/// Square test in F_{p^2} = F_p[t]/(t^2 - d), odd p with (d/p) = -1.
fn fp2_is_square(a: &BigInt, b: &BigInt, d: i64, p: u64) -> bool {
    let pb = BigInt::from(p);
    let a = a.mod_floor(&pb);
    let b = b.mod_floor(&pb);
    let d = BigInt::from(d).mod_floor(&pb);
    // u^((p^2-1)/2) with u = a + b t, via square-and-multiply on pairs.
    let exponent = (p * p - 1) / 2;
    let (mut ra, mut rb) = (BigInt::one(), BigInt::zero());
    let (mut sa, mut sb) = (a, b);
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            let na = (&ra * &sa + &d * &rb * &sb).mod_floor(&pb);
            let nb = (&ra * &sb + &rb * &sa).mod_floor(&pb);
            ra = na;
            rb = nb;
        }
        let na = (&sa * &sa + &d * &sb * &sb).mod_floor(&pb);
        let nb = (BigInt::from(2) * &sa * &sb).mod_floor(&pb);
        sa = na;
        sb = nb;
        e >>= 1;
    }
    ra.is_one() && rb.is_zero()
}

/// Newton lifting of a square root of d modulo p^prec (odd p).
fn hensel_lift_sqrt(r0: &BigInt, d: i64, p: u64, modulus: &BigInt) -> BigInt {
    let mut r = r0.clone();
    let mut m = BigInt::from(p);
    let d = BigInt::from(d);
    while &m < modulus {
        m = &m * &m;
        let m_clamped = if &m > modulus { modulus.clone() } else { m.clone() };
        let two_r_inv = invert_mod_big(&(BigInt::from(2) * &r), &m_clamped);
        r = (&r - (&r * &r - &d) * two_r_inv).mod_floor(&m_clamped);
        m = m_clamped;
    }
    r
}

/// Newton lifting of a root of x^2 - x + c0 modulo 2^prec.
fn hensel_lift_poly(r0: &BigInt, c0: &BigInt, modulus: &BigInt) -> BigInt {
    let mut r = r0.clone();
    let mut m = BigInt::from(2);
    while &m < modulus {
        m = &m * &m;
        let m_clamped = if &m > modulus { modulus.clone() } else { m.clone() };
        // f'(r) = 2r - 1 is odd, invertible mod 2^k.
        let fp = BigInt::from(2) * &r - BigInt::one();
        let fp_inv = invert_mod_big(&fp, &m_clamped);
        let f = &r * &r - &r + c0;
        r = (&r - f * fp_inv).mod_floor(&m_clamped);
        m = m_clamped;
    }
    r
}

/// Inverse modulo an arbitrary modulus via extended euclid.
fn invert_mod_big(a: &BigInt, modulus: &BigInt) -> BigInt {
    let e = a.extended_gcd(modulus);
    assert!(e.gcd.is_one(), "element not invertible");
    e.x.mod_floor(modulus)
}
