//! Elementary integer arithmetic shared across the crate: gcd, primality by
//! trial division, divisor lists, Euler phi, Moebius, Kronecker symbols.
//!
//! Everything here operates on machine integers; the quantities involved
//! (prime levels, group orders, singularity indices) are tiny.

/// Greatest common divisor of two non-negative integers.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Modular inverse of `a` modulo `n`, for gcd(a, n) = 1.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

/// Modular exponentiation `a^e mod n`.
pub fn pow_mod(a: u64, mut e: u64, n: u64) -> u64 {
    let mut base = (a % n) as u128;
    let mut acc: u128 = 1;
    let n = n as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        e >>= 1;
    }
    acc as u64
}

/// Primality by trial division; adequate for the small inputs in this crate.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Decompose a prime power q = p^e; returns None when q is not one.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// True when n has no repeated prime factor.
pub fn is_squarefree(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    if n == 0 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        while n % d == 0 {
            n /= d;
        }
        d += 1;
    }
    true
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Moebius function.
pub fn moebius(n: u64) -> i32 {
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sum of positive divisors sigma_1(n).
pub fn sigma1(n: u64) -> u64 {
    divisors(n).into_iter().sum()
}

/// Units modulo n, ascending.
pub fn units_mod(n: u64) -> Vec<u64> {
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i32 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    match pow_mod(r, (p - 1) / 2, p) {
        1 => 1,
        _ => -1,
    }
}

/// Kronecker symbol (a/2): 0 for even a, +1 for a = ±1 (mod 8), -1 for a = ±3 (mod 8).
pub fn kronecker_two(a: i64) -> i32 {
    if a % 2 == 0 {
        0
    } else {
        match a.rem_euclid(8) {
            1 | 7 => 1,
            _ => -1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_helpers() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(inv_mod(3, 10), Some(7));
        assert_eq!(inv_mod(2, 10), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(sigma1(6), 12);
        assert!(is_prime(97) && !is_prime(91));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(12), None);
        assert!(is_squarefree(30) && !is_squarefree(12));
    }

    #[test]
    fn symbols() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(5, 7), -1);
        assert_eq!(legendre(21, 7), 0);
        assert_eq!(kronecker_two(8), 0);
        assert_eq!(kronecker_two(7), 1);
        assert_eq!(kronecker_two(5), -1);
        assert_eq!(kronecker_two(13), -1); // 13 = 5 (mod 8)
    }
}
