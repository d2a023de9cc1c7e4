//! Replay the catalog of known fake quadrics: every recorded arithmetic
//! fact (splitting, Euler numbers, congruence indices, torsion data,
//! automorphism groups) is recomputed through the library and compared.

use fakequad::registry;

fn main() {
    let reports = registry::replay_all().unwrap();
    for report in &reports {
        print!("{}", report);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{}/{} records pass", passed, reports.len());
}
