//! Congruence quotients at ramified primes: the norm-one quotient is the
//! kernel of the norm F_{q^2}* -> F_q*, cyclic of order q + 1. The closed
//! form is checked against explicit finite-field enumeration.

use fakequad::arith::prime_power;
use fakequad::quatalg::{gamma1_quotient_order, norm_kernel_order, riehm_norm1_quotient};

fn main() {
    for q in 2..=32u64 {
        if prime_power(q).is_none() {
            continue;
        }
        let (p, _) = prime_power(q).unwrap();
        let formula = riehm_norm1_quotient(q).unwrap();
        let enumerated = norm_kernel_order(q).unwrap();
        println!(
            "q = {:>2}: norm kernel {} (enumerated order {}), quotient order mod +-1: {}",
            q,
            formula,
            enumerated,
            gamma1_quotient_order(q, p)
        );
    }
}
