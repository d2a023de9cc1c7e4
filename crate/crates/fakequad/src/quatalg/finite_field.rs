//! Small finite fields F_{p^k} as polynomial quotient rings, built for one
//! purpose: enumerating the kernel of the norm map F_{q^2}* -> F_q*
//! explicitly. The enumeration is the oracle against which the cyclic
//! order-(q+1) description of congruence quotients is checked.

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};

/// F_{p^k} with elements as coefficient vectors modulo an irreducible
/// monic polynomial found by sieving.
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Coefficients of the monic modulus, ascending, length k (top degree
    /// coefficient of x^k is implicit).
    modulus_tail: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(k >= 1, "degree must be positive");
        let modulus_tail = find_irreducible_tail(p, k);
        Ok(FiniteField { p, k, modulus_tail })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }

    pub fn one(&self) -> Vec<u64> {
        let mut e = vec![0; self.k];
        e[0] = 1;
        e
    }

    /// Element with index i in the base-p enumeration of coefficient vectors.
    pub fn element(&self, mut i: u64) -> Vec<u64> {
        let mut e = vec![0; self.k];
        for c in e.iter_mut() {
            *c = i % self.p;
            i /= self.p;
        }
        e
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // Reduce x^m = -tail * x^(m-k) from the top down.
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus_tail.iter().enumerate() {
                let idx = i - self.k + j;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        prod.truncate(self.k);
        prod
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one();
        let mut sq = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            e >>= 1;
        }
        acc
    }
}

/// Tail coefficients (constant..degree k-1) of an irreducible monic
/// polynomial of degree k over F_p, found by exhaustive sieving.
fn find_irreducible_tail(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0]; // x itself
    }
    let total = p.pow(k as u32);
    for idx in 0..total {
        let mut tail = vec![0u64; k];
        let mut i = idx;
        for c in tail.iter_mut() {
            *c = i % p;
            i /= p;
        }
        if is_irreducible(p, &tail) {
            return tail;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Trial division of the monic polynomial x^k + tail by all monic
/// polynomials of degree 1..=k/2.
fn is_irreducible(p: u64, tail: &[u64]) -> bool {
    let k = tail.len();
    let mut poly = tail.to_vec();
    poly.push(1);
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut div = vec![0u64; deg];
            let mut i = idx;
            for c in div.iter_mut() {
                *c = i % p;
                i /= p;
            }
            div.push(1); // monic
            if poly_divides(p, &div, &poly) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u64, div: &[u64], poly: &[u64]) -> bool {
    let mut rem = poly.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (j, &c) in div.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + lead * (p - c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Order of the kernel of the norm map F_{q^2}* -> F_q*, by explicit
/// enumeration: the norm of alpha is alpha^(q+1), so the kernel consists
/// of the alpha with alpha^(q+1) = 1.
///
/// Also verifies that the kernel is cyclic by locating an element of
/// exact order equal to the kernel size. Errors when q is not a prime
/// power.
pub fn norm_kernel_order(q: u64) -> Result<u64> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let field = FiniteField::new(p, (2 * e) as usize)?;
    let q2 = field.order();
    debug_assert_eq!(q2, q * q);
    let mut kernel_size = 0u64;
    let mut has_full_order = false;
    for i in 1..q2 {
        let a = field.element(i);
        if field.is_zero(&a) {
            continue;
        }
        if field.pow(&a, q + 1) == field.one() {
            kernel_size += 1;
        }
    }
    // Cyclicity witness: some kernel element has exact order kernel_size.
    for i in 1..q2 {
        let a = field.element(i);
        if field.pow(&a, q + 1) != field.one() {
            continue;
        }
        let mut ord = 1;
        let mut acc = a.clone();
        while acc != field.one() {
            acc = field.mul(&acc, &a);
            ord += 1;
        }
        if ord == kernel_size {
            has_full_order = true;
            break;
        }
    }
    assert!(has_full_order, "norm kernel must be cyclic");
    Ok(kernel_size)
}
