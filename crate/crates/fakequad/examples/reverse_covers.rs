//! Reverse constructions: weight-4 binary codes selecting the branch loci
//! of double and bidouble covers, the F_3 branch closure for triple
//! covers, and the blow-down ledgers landing on c_1^2 = 2 c_2 = 8.

use fakequad::covers::{double_cover_pipeline, triple_cover_pipeline, weight4_codes};

fn main() {
    for k in 1..=8usize {
        let codes = weight4_codes(k).unwrap();
        println!("length {}: {} full-support weight-4 code(s)", k, codes.len());
        for c in &codes {
            let basis: Vec<String> = c
                .basis
                .iter()
                .map(|b| b.iter().map(|x| x.to_string()).collect())
                .collect();
            println!("  dimension {}: basis {}", c.dimension(), basis.join(", "));
        }
    }
    println!();
    for k2 in [4i64, 2] {
        println!("double cover pipeline from K^2 = {}:", k2);
        for step in double_cover_pipeline(k2).unwrap() {
            println!("  {}: {}", step.label, step.invariants);
        }
    }
    println!("triple cover pipeline:");
    for step in triple_cover_pipeline().unwrap() {
        println!("  {}: {}", step.label, step.invariants);
    }
}
