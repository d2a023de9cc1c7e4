//! The catalog of known fake quadrics and recorded results: the example
//! surfaces with their arithmetic data, the quotient-table rows, and the
//! facts that are data rather than derivation. The catalog lives in a
//! human-readable TOML file (`examples.toml`, schema documented there) so
//! new surfaces can be added without code changes.
//!
//! [`replay`] re-derives every computable field of a record through the
//! library (splitting, Shimizu Euler numbers, congruence indices, torsion
//! screening, torsion-freeness, group assembly) and reports agreement
//! field by field.

use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat_int, Rational};
use crate::fixedpoints::{parse_configuration, SingularConfiguration};
use crate::quadfield::{PrimeSplit, QFElement, QuadraticField};
use crate::quatalg::{
    self, assemble_automorphism_group, euler_of_subgroup, make_algebra, parse_group,
    torsion_free_check, CongruenceLevel, GroupDescriptor, LevelKind, QuaternionData,
    SubgroupSpec,
};
use crate::quotient::Verdict;

const CATALOG: &str = include_str!("examples.toml");

/// How the surface's lattice relates to the norm-one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRelation {
    /// The norm-one group itself.
    NormOne,
    /// A congruence subgroup of the norm-one group.
    Congruence(Vec<LevelSpec>),
    /// A lattice containing the norm-one group with the given index.
    Overgroup { index: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSpec {
    pub p: u64,
    pub kind: LevelKindSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelKindSpec {
    Principal,
    Intermediate { image_order: u64 },
}

/// Whether a fact is derived by the library or recorded catalog data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Derived,
    Recorded,
}

/// One cataloged fake quadric.
#[derive(Clone, Debug)]
pub struct ExampleRecord {
    pub id: String,
    pub d: i64,
    pub ramified: Vec<(u64, Option<u64>)>,
    pub group: GroupRelation,
    pub norm_one_euler: Rational,
    pub index: u64,
    pub euler: Rational,
    pub torsion_orders: Vec<u64>,
    pub torsion_freeness: Provenance,
    pub aut: GroupDescriptor,
    /// delta such that sqrt(delta) generates the inverting involution of
    /// the dihedral automorphism group, when one is recorded.
    pub involution_delta: Option<(Rational, Rational)>,
}

impl ExampleRecord {
    pub fn field(&self) -> Result<QuadraticField> {
        QuadraticField::new(self.d)
    }

    pub fn primes(&self) -> Result<Vec<PrimeSplit>> {
        let field = self.field()?;
        self.ramified
            .iter()
            .map(|&(p, root)| {
                let prime = field.split_type(p)?;
                match root {
                    Some(r) => prime.with_root(&field, r),
                    None => Ok(prime),
                }
            })
            .collect()
    }

    pub fn algebra(&self) -> Result<QuaternionData> {
        make_algebra(&self.field()?, self.primes()?)
    }

    pub fn subgroup_spec(&self) -> Result<Option<SubgroupSpec>> {
        let field = self.field()?;
        match &self.group {
            GroupRelation::NormOne => Ok(Some(SubgroupSpec::norm_one())),
            GroupRelation::Overgroup { .. } => Ok(None),
            GroupRelation::Congruence(levels) => {
                let levels = levels
                    .iter()
                    .map(|l| {
                        Ok(CongruenceLevel {
                            prime: field.split_type(l.p)?,
                            kind: match l.kind {
                                LevelKindSpec::Principal => LevelKind::Principal,
                                LevelKindSpec::Intermediate { image_order } => {
                                    LevelKind::Intermediate { image_order }
                                }
                            },
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Some(SubgroupSpec { levels }))
            }
        }
    }

    pub fn involution_delta_element(&self) -> Result<Option<QFElement>> {
        let field = self.field()?;
        Ok(self
            .involution_delta
            .as_ref()
            .map(|(a, b)| field.element(a.clone(), b.clone())))
    }
}

/// All cataloged examples, in catalog order.
pub fn all_examples() -> &'static [ExampleRecord] {
    &catalog().examples
}

pub fn example(id: &str) -> Option<&'static ExampleRecord> {
    all_examples().iter().find(|r| r.id == id)
}

/// A recorded quotient-table row.
#[derive(Clone, Debug)]
pub struct TheoremBRecord {
    pub group: GroupDescriptor,
    pub k2: Rational,
    pub c2: Rational,
    pub config: SingularConfiguration,
    pub minimal: Verdict,
}

pub fn theorem_b_records() -> &'static [TheoremBRecord] {
    &catalog().theorem_b
}

pub fn theorem_b_record(group: &GroupDescriptor) -> Option<&'static TheoremBRecord> {
    theorem_b_records().iter().find(|r| &r.group == group)
}

/// Recorded facts.
#[derive(Clone, Debug)]
pub struct Facts {
    pub aut_order_bound: u64,
    pub klein_cubed_excluded: bool,
    pub z4xz2: HypotheticalQuotient,
}

#[derive(Clone, Debug)]
pub struct HypotheticalQuotient {
    pub k2: Rational,
    pub c2: Rational,
    pub config: SingularConfiguration,
    pub exists: String,
}

pub fn facts() -> &'static Facts {
    &catalog().facts
}

/// One replayed field of a record.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// Replay report for one record.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.id,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<22} expected {:<28} got {:<28} {}",
                c.name,
                c.expected,
                c.got,
                if c.pass { "ok" } else { "MISMATCH" }
            )?;
        }
        Ok(())
    }
}

fn push_check<T: PartialEq + fmt::Display>(
    checks: &mut Vec<Check>,
    name: &str,
    expected: T,
    got: T,
) {
    checks.push(Check {
        name: name.to_string(),
        pass: expected == got,
        expected: expected.to_string(),
        got: got.to_string(),
    });
}

/// Recompute every derivable field of the record and compare.
pub fn replay(record: &ExampleRecord) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let algebra = record.algebra()?;

    // Shimizu Euler number of the norm-one quotient.
    push_check(
        &mut checks,
        "norm-one euler",
        record.norm_one_euler.clone(),
        algebra.shimizu_euler(),
    );

    // Index and Euler number of the surface.
    match (&record.group, record.subgroup_spec()?) {
        (GroupRelation::Overgroup { index }, _) => {
            push_check(&mut checks, "index", record.index, *index);
            let euler = algebra.shimizu_euler() / rat_int(*index as i64);
            push_check(&mut checks, "euler", record.euler.clone(), euler);
        }
        (_, Some(spec)) => {
            push_check(&mut checks, "index", record.index, spec.index_in_base());
            let euler = euler_of_subgroup(&algebra.shimizu_euler(), &spec);
            push_check(&mut checks, "euler", record.euler.clone(), euler);
        }
        (_, None) => unreachable!("non-overgroup records have a spec"),
    }

    // Torsion screening of the norm-one group.
    push_check(
        &mut checks,
        "torsion orders",
        format!("{:?}", record.torsion_orders),
        format!("{:?}", algebra.torsion_orders()?),
    );

    // Torsion-freeness of the surface group.
    match record.subgroup_spec()? {
        Some(spec) => {
            let verdict = torsion_free_check(&algebra, &spec)?;
            push_check(&mut checks, "torsion-free", true, verdict.is_torsion_free());
        }
        None => {
            // Overgroup records carry the verdict as catalog data; check
            // only that the norm-one part is consistent.
            push_check(
                &mut checks,
                "torsion-free (recorded)",
                Provenance::Recorded == record.torsion_freeness,
                true,
            );
        }
    }

    // Inverting involution, when recorded: sqrt(delta) must embed.
    if let Some(delta) = record.involution_delta_element()? {
        push_check(
            &mut checks,
            "involution embeds",
            true,
            algebra.embeds_quadratic(&delta)?,
        );
    }

    // The element 1 + lambda doubling the top torsion order has reduced
    // norm 2 + t_m; it normalizes only if that norm is totally positive.
    if let Some(&m) = record.torsion_orders.iter().max() {
        let nrd = quatalg::nrd_one_plus_torsion(&record.field()?, m)?;
        push_check(
            &mut checks,
            "Nrd(1 + torsion) >> 0",
            true,
            nrd.is_totally_positive() && nrd.is_integral(),
        );
    }

    // Automorphism group assembly.
    let rank = algebra.normalizer_quotient_rank().rank;
    let derived_order = match &record.group {
        GroupRelation::Overgroup { index } => (1u64 << rank) / index,
        _ => (1u64 << rank) * record.index,
    };
    push_check(
        &mut checks,
        "aut order",
        record.aut.order(),
        derived_order,
    );
    let derived_group = match &record.aut {
        GroupDescriptor::Dihedral(_) => {
            let m = *record.torsion_orders.iter().max().expect("dihedral needs torsion");
            Some(assemble_automorphism_group(
                2 * m,
                record.involution_delta.is_some(),
            ))
        }
        GroupDescriptor::Extension { .. } => {
            let m = *record.torsion_orders.iter().max().expect("extension needs torsion");
            Some(GroupDescriptor::Extension {
                cyclic_order: record.index,
                contains_cyclic: Some(2 * m),
            })
        }
        GroupDescriptor::Cyclic(_) | GroupDescriptor::ElemAbelian2(_) => None,
    };
    if let Some(g) = derived_group {
        push_check(
            &mut checks,
            "aut group",
            record.aut.to_string(),
            g.to_string(),
        );
    }

    Ok(VerificationReport {
        id: record.id.clone(),
        checks,
    })
}

/// Replay every record.
pub fn replay_all() -> Result<Vec<VerificationReport>> {
    all_examples().iter().map(replay).collect()
}

// ---- Catalog parsing ----

struct Catalog {
    examples: Vec<ExampleRecord>,
    theorem_b: Vec<TheoremBRecord>,
    facts: Facts,
}

fn catalog() -> &'static Catalog {
    static CACHE: OnceLock<Catalog> = OnceLock::new();
    CACHE.get_or_init(|| parse_catalog(CATALOG).expect("embedded catalog is well-formed"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    example: Vec<RawExample>,
    theorem_b: Vec<RawTheoremB>,
    facts: RawFacts,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExample {
    id: String,
    d: i64,
    ramified: Vec<RawPrime>,
    group: RawGroup,
    norm_one_euler: String,
    index: u64,
    euler: String,
    torsion_orders: Vec<u64>,
    torsion_freeness: String,
    aut: RawAut,
    involution_delta: Option<RawDelta>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPrime {
    p: u64,
    root: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    kind: String,
    index: Option<u64>,
    levels: Option<Vec<RawLevel>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLevel {
    p: u64,
    kind: String,
    image_order: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAut {
    kind: String,
    n: Option<u64>,
    l: Option<u32>,
    cyclic: Option<u64>,
    contains_cyclic: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    a: String,
    b: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTheoremB {
    group: String,
    k2: String,
    c2: String,
    config: String,
    minimal: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFacts {
    aut_order_bound: u64,
    klein_cubed_excluded: bool,
    z4xz2: RawHypothetical,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHypothetical {
    k2: String,
    c2: String,
    config: String,
    exists: String,
}

fn rational_field(s: &str, what: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::OutOfRange(format!("bad rational {} '{}'", what, s)))
}

fn parse_catalog(text: &str) -> Result<Catalog> {
    let raw: RawCatalog = toml::from_str(text)
        .map_err(|e| Error::OutOfRange(format!("catalog parse error: {}", e)))?;
    let examples = raw
        .example
        .into_iter()
        .map(parse_example)
        .collect::<Result<Vec<_>>>()?;
    let theorem_b = raw
        .theorem_b
        .into_iter()
        .map(|r| {
            Ok(TheoremBRecord {
                group: parse_group(&r.group)?,
                k2: rational_field(&r.k2, "k2")?,
                c2: rational_field(&r.c2, "c2")?,
                config: parse_configuration(&r.config)?,
                minimal: parse_verdict(&r.minimal)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let facts = Facts {
        aut_order_bound: raw.facts.aut_order_bound,
        klein_cubed_excluded: raw.facts.klein_cubed_excluded,
        z4xz2: HypotheticalQuotient {
            k2: rational_field(&raw.facts.z4xz2.k2, "k2")?,
            c2: rational_field(&raw.facts.z4xz2.c2, "c2")?,
            config: parse_configuration(&raw.facts.z4xz2.config)?,
            exists: raw.facts.z4xz2.exists,
        },
    };
    Ok(Catalog {
        examples,
        theorem_b,
        facts,
    })
}

fn parse_verdict(s: &str) -> Result<Verdict> {
    match s {
        "yes" => Ok(Verdict::Yes),
        "no" => Ok(Verdict::No),
        "-" | "undetermined" => Ok(Verdict::Undetermined),
        other => Err(Error::OutOfRange(format!("bad verdict '{}'", other))),
    }
}

fn parse_example(raw: RawExample) -> Result<ExampleRecord> {
    let group = match raw.group.kind.as_str() {
        "norm-one" => GroupRelation::NormOne,
        "overgroup" => GroupRelation::Overgroup {
            index: raw
                .group
                .index
                .ok_or_else(|| Error::OutOfRange("overgroup needs an index".into()))?,
        },
        "congruence" => {
            let levels = raw
                .group
                .levels
                .ok_or_else(|| Error::OutOfRange("congruence needs levels".into()))?
                .into_iter()
                .map(|l| {
                    Ok(LevelSpec {
                        p: l.p,
                        kind: match l.kind.as_str() {
                            "principal" => LevelKindSpec::Principal,
                            "intermediate" => LevelKindSpec::Intermediate {
                                image_order: l.image_order.ok_or_else(|| {
                                    Error::OutOfRange(
                                        "intermediate level needs image_order".into(),
                                    )
                                })?,
                            },
                            other => {
                                return Err(Error::OutOfRange(format!(
                                    "bad level kind '{}'",
                                    other
                                )))
                            }
                        },
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GroupRelation::Congruence(levels)
        }
        other => return Err(Error::OutOfRange(format!("bad group kind '{}'", other))),
    };
    let aut = match raw.aut.kind.as_str() {
        "cyclic" => GroupDescriptor::Cyclic(
            raw.aut
                .n
                .ok_or_else(|| Error::OutOfRange("cyclic needs n".into()))?,
        ),
        "dihedral" => GroupDescriptor::Dihedral(
            raw.aut
                .n
                .ok_or_else(|| Error::OutOfRange("dihedral needs n".into()))?,
        ),
        "elem-abelian-2" => GroupDescriptor::ElemAbelian2(
            raw.aut
                .l
                .ok_or_else(|| Error::OutOfRange("elem-abelian-2 needs l".into()))?,
        ),
        "extension" => GroupDescriptor::Extension {
            cyclic_order: raw
                .aut
                .cyclic
                .ok_or_else(|| Error::OutOfRange("extension needs cyclic".into()))?,
            contains_cyclic: raw.aut.contains_cyclic,
        },
        other => return Err(Error::OutOfRange(format!("bad aut kind '{}'", other))),
    };
    let torsion_freeness = match raw.torsion_freeness.as_str() {
        "derived" => Provenance::Derived,
        "recorded" => Provenance::Recorded,
        other => {
            return Err(Error::OutOfRange(format!(
                "bad torsion_freeness '{}'",
                other
            )))
        }
    };
    let involution_delta = raw
        .involution_delta
        .map(|d| {
            Ok::<_, Error>((
                rational_field(&d.a, "delta.a")?,
                rational_field(&d.b, "delta.b")?,
            ))
        })
        .transpose()?;
    Ok(ExampleRecord {
        id: raw.id,
        d: raw.d,
        ramified: raw.ramified.into_iter().map(|p| (p.p, p.root)).collect(),
        group,
        norm_one_euler: rational_field(&raw.norm_one_euler, "norm_one_euler")?,
        index: raw.index,
        euler: rational_field(&raw.euler, "euler")?,
        torsion_orders: raw.torsion_orders,
        torsion_freeness,
        aut,
        involution_delta,
    })
}

// Re-export for callers that want the level kinds without reaching into
// quatalg directly.
pub use quatalg::LevelKind as QuatalgLevelKind;
