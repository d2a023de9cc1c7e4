//! Hirzebruch-Jung resolution data: continued fraction chains,
//! discrepancies, and the contributions of each singularity to K^2 and
//! the Euler number of the minimal resolution.

use fakequad::singres::{resolve, SingularityType};

fn main() {
    let types = [
        (2, 1),
        (3, 1),
        (5, 1),
        (5, 2),
        (5, 4),
        (6, 1),
        (8, 3),
        (8, 5),
        (10, 3),
        (10, 9),
    ];
    for (n, q) in types {
        let s = SingularityType::new(n, q).unwrap();
        let data = resolve(&s);
        let discs: Vec<String> = data.discrepancies.iter().map(|a| a.to_string()).collect();
        println!(
            "{:<8} chain {:<16} discrepancies [{}]",
            s.to_string(),
            data.chain.to_string(),
            discs.join(", ")
        );
        println!(
            "         delta K^2 = {:<6} delta e = {}",
            data.delta_k2.to_string(),
            data.delta_e
        );
    }
}
