//! Torsion in norm-one groups and torsion-freeness of congruence
//! subgroups: the embedding criterion k(zeta_2m) c B via local square
//! tests, then the pro-p and trace rules at each congruence level.

use fakequad::quadfield::QuadraticField;
use fakequad::quatalg::{
    make_algebra, nrd_one_plus_torsion, torsion_free_check, CongruenceLevel, LevelKind,
    SubgroupSpec, TorsionVerdict,
};

enum Level {
    Principal(&'static [u64]),
    Intermediate { p: u64, image_order: u64 },
}

fn main() {
    let cases: &[(i64, &[u64], Level)] = &[
        (5, &[2, 5], Level::Principal(&[2])),
        (
            5,
            &[2, 11],
            Level::Intermediate {
                p: 11,
                image_order: 3,
            },
        ),
        (2, &[2, 3], Level::Principal(&[2])),
        (2, &[2, 7], Level::Principal(&[7])),
        (3, &[2, 3], Level::Principal(&[2, 3])),
    ];
    for (d, ramified, level) in cases {
        let field = QuadraticField::new(*d).unwrap();
        let primes = ramified
            .iter()
            .map(|&p| field.split_type(p).unwrap())
            .collect();
        let b = make_algebra(&field, primes).unwrap();
        let orders = b.torsion_orders().unwrap();
        println!("{}: torsion orders {:?}", b, orders);
        if let Some(&m) = orders.iter().max() {
            println!(
                "  Nrd(1 + lambda) for the top order: {}",
                nrd_one_plus_torsion(&field, m).unwrap()
            );
        }
        let spec = match level {
            Level::Principal(ps) => SubgroupSpec::principal(
                ps.iter().map(|&p| field.split_type(p).unwrap()).collect(),
            ),
            Level::Intermediate { p, image_order } => SubgroupSpec {
                levels: vec![CongruenceLevel {
                    prime: field.split_type(*p).unwrap(),
                    kind: LevelKind::Intermediate {
                        image_order: *image_order,
                    },
                }],
            },
        };
        println!("  congruence level index: {}", spec.index_in_base());
        match torsion_free_check(&b, &spec).unwrap() {
            TorsionVerdict::TorsionFree { exclusions } => {
                println!("  torsion-free: yes");
                for e in exclusions {
                    println!("    order {} excluded by {:?}", e.order, e.rule);
                }
            }
            TorsionVerdict::Obstructed { order, detail } => {
                println!("  torsion-free: no (order {}): {}", order, detail);
            }
        }
        println!();
    }
}
