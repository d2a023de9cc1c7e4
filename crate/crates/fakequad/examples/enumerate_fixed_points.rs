//! Fixed-point configurations of automorphisms on a fake quadric: the
//! exhaustive Lefschetz search for cyclic groups, the Klein four and
//! dihedral analyses, and the impossibility of (Z/3)^2 and (Z/5)^2.

use fakequad::fixedpoints::{
    enumerate_cyclic, enumerate_dihedral, enumerate_klein_four, impossibility, BranchOutcome,
};

fn main() {
    for n in 2..=10u64 {
        let configs = enumerate_cyclic(n).unwrap();
        println!("order {:>2}: {} configuration(s)", n, configs.len());
        for c in &configs {
            println!("          {}", c);
        }
    }

    let klein = enumerate_klein_four();
    println!(
        "\nKlein four: {} (e(S/G) = {}, common fixed point possible: {})",
        klein.configuration, klein.euler_quotient, klein.common_fixed_point_possible
    );

    for m in [4u64, 8] {
        let analysis = enumerate_dihedral(m).unwrap();
        println!("\nD{} branches:", m);
        for b in &analysis.branches {
            match &b.outcome {
                BranchOutcome::Accepted(c) => println!(
                    "  rotation fixes {} points, e = {}: {}",
                    b.rotation_fixed_points, b.euler_quotient, c
                ),
                BranchOutcome::Rejected { reason } => println!(
                    "  rotation fixes {} points, e = {}: rejected ({})",
                    b.rotation_fixed_points, b.euler_quotient, reason
                ),
            }
        }
    }

    println!();
    for p in [3u64, 5] {
        println!("{}", impossibility(p).unwrap());
    }
}
