//! The quotient table: invariants of the minimal resolution of S/G for
//! every group acting on a fake quadric, assembled from the fixed-point
//! enumeration, the resolution calculus and the Noether filter.

use fakequad::quotient::theorem_b_table;

fn main() {
    println!(
        "{:<9} {:>5} {:>4}  {:<26} {:<8} {:<8} {}",
        "group", "K^2", "c2", "singularities", "minimal", "kodaira", "candidates"
    );
    for row in theorem_b_table().unwrap() {
        println!(
            "{:<9} {:>5} {:>4}  {:<26} {:<8} {:<8} {}",
            row.group.to_string(),
            row.invariants.k2.to_string(),
            row.invariants.c2.to_string(),
            row.config.to_string(),
            row.invariants.minimal.to_string(),
            row.invariants.kodaira.to_string(),
            row.candidates
        );
    }
}
