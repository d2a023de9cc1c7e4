//! Euler numbers of norm-one quotients from the volume formula:
//! c2 = 2 zeta_k(-1) prod (q_p - 1) over the ramified primes, with the
//! zeta value from Siegel's finite sum.

use fakequad::quadfield::QuadraticField;
use fakequad::quatalg::make_algebra;

fn main() {
    let cases: &[(i64, &[u64])] = &[
        (2, &[3, 7]),
        (2, &[2, 5]),
        (5, &[2, 5]),
        (5, &[2, 11]),
        (2, &[2, 3]),
        (2, &[2, 7]),
        (3, &[2, 3]),
        (13, &[2, 3]),
    ];
    for (d, primes) in cases {
        let field = QuadraticField::new(*d).unwrap();
        println!(
            "{}: discriminant {}, zeta(-1) = {}",
            field,
            field.discriminant(),
            field.zeta_minus_one()
        );
        let ramified = primes
            .iter()
            .map(|&p| field.split_type(p).unwrap())
            .collect();
        let algebra = make_algebra(&field, ramified).unwrap();
        for p in algebra.ramified() {
            println!("  {}", p);
        }
        println!("  c2 of the norm-one quotient: {}", algebra.shimizu_euler());
        println!();
    }
}
