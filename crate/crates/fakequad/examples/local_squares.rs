//! Prime splitting and local square tests: the relative extension
//! k(sqrt(delta)) splits at a prime exactly when delta is a square in the
//! completion, which drives the quaternionic embedding criterion.

use fakequad::quadfield::{is_local_square, QuadraticField};

fn main() {
    let k2 = QuadraticField::new(2).unwrap();
    let k5 = QuadraticField::new(5).unwrap();

    for (field, deltas, primes) in [
        (&k2, vec![(-1i64, 0i64), (-2, 0), (-3, -1)], vec![2u64, 3, 7]),
        (&k5, vec![(-1, 0), (-2, 0), (-3, 0)], vec![2, 5, 11]),
    ] {
        println!("{}:", field);
        for p in &primes {
            let prime = field.split_type(*p).unwrap();
            println!("  {}", prime);
            for (a, b) in &deltas {
                let delta = field.elem(*a, *b);
                match is_local_square(field, &delta, &prime) {
                    Ok(sq) => println!(
                        "    {} is {} square locally",
                        delta,
                        if sq { "a" } else { "not a" }
                    ),
                    Err(e) => println!("    {}: {}", delta, e),
                }
            }
        }
        println!();
    }
}
