//! Quaternion algebras B(k, d_B) over real quadratic fields, given by their
//! finite ramified primes, and the arithmetic of their norm-one groups:
//! embedding and torsion criteria, congruence quotient orders, Shimizu
//! Euler numbers, torsion-freeness of congruence subgroups, and assembly
//! of the automorphism groups they generate.

pub mod finite_field;

use std::fmt;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};
use crate::quadfield::local::{congruent_mod_prime, is_local_square};
use crate::quadfield::{PrimeSplit, QFElement, QuadraticField, SplitKind};

pub use finite_field::norm_kernel_order;

/// A quaternion algebra over k determined by its even set of finite
/// ramified primes (the reduced discriminant d_B).
#[derive(Clone, Debug)]
pub struct QuaternionData {
    field: QuadraticField,
    ramified: Vec<PrimeSplit>,
}

/// Validated algebra datum B(k, d_B).
///
/// The ramified set must have even cardinality; a rational prime may
/// appear twice only through the two distinct primes above a split prime.
pub fn make_algebra(field: &QuadraticField, primes: Vec<PrimeSplit>) -> Result<QuaternionData> {
    if primes.len() % 2 != 0 {
        return Err(Error::OddRamification);
    }
    for (i, a) in primes.iter().enumerate() {
        for b in primes.iter().skip(i + 1) {
            let same = a.p() == b.p()
                && (a.kind() != SplitKind::Split || a.root() == b.root());
            if same {
                return Err(Error::OutOfRange(format!(
                    "duplicate ramified prime over {}",
                    a.p()
                )));
            }
        }
    }
    Ok(QuaternionData {
        field: *field,
        ramified: primes,
    })
}

impl QuaternionData {
    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn ramified(&self) -> &[PrimeSplit] {
        &self.ramified
    }

    /// k(sqrt(delta)) embeds into B iff no ramified prime of B splits in it,
    /// i.e. delta is a nonsquare in every completion at a ramified prime.
    pub fn embeds_quadratic(&self, delta: &QFElement) -> Result<bool> {
        for prime in &self.ramified {
            if is_local_square(&self.field, delta, prime)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the norm-one group (mod +-1) contains an element of order m.
    ///
    /// Order m comes from a primitive 2m-th root of unity lambda with
    /// lambda^m = -1; its reduced trace t_m = zeta_2m + zeta_2m^-1 must lie
    /// in k, and then k(zeta_2m) = k(sqrt(t_m^2 - 4)) must embed into B.
    pub fn torsion_order_exists(&self, m: u64) -> Result<bool> {
        let t = match torsion_trace(&self.field, m)? {
            Some(t) => t,
            None => return Ok(false),
        };
        let four = self.field.elem(4, 0);
        let delta = t.mul(&t)?.sub(&four)?;
        self.embeds_quadratic(&delta)
    }

    /// All torsion orders present in the norm-one group. The range 2..=6 is
    /// exhaustive: t_m in k forces [Q(t_m):Q] <= 2, hence phi(2m) <= 4.
    pub fn torsion_orders(&self) -> Result<Vec<u64>> {
        let mut orders = Vec::new();
        for m in 2..=6 {
            if self.torsion_order_exists(m)? {
                orders.push(m);
            }
        }
        Ok(orders)
    }

    /// Euler number of the norm-one quotient from Shimizu's volume formula:
    ///
    /// ```text
    /// c_2 = 2 * zeta_k(-1) * prod_{p ramified} (q_p - 1)
    /// ```
    pub fn shimizu_euler(&self) -> Rational {
        let mut c2 = rat_int(2) * self.field.zeta_minus_one();
        for prime in &self.ramified {
            c2 *= rat_int(prime.q() as i64 - 1);
        }
        c2
    }

    /// Rank of the elementary abelian 2-group N Gamma+ / Gamma^1; the number
    /// of ramified primes is a lower bound, and equals it in every
    /// class-number-one case treated here.
    pub fn normalizer_quotient_rank(&self) -> RankBound {
        RankBound {
            rank: self.ramified.len() as u32,
            is_lower_bound: true,
        }
    }
}

impl fmt::Display for QuaternionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, ", self.field)?;
        for (i, p) in self.ramified.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", p.label())?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBound {
    pub rank: u32,
    pub is_lower_bound: bool,
}

/// Reduced trace t_m = zeta_2m + zeta_2m^-1 of an order-2m torsion element,
/// as an element of k, or None when t_m does not lie in k.
///
/// t_2 = 0, t_3 = 1, t_4 = sqrt 2, t_5 = (1 + sqrt 5)/2, t_6 = sqrt 3.
pub fn torsion_trace(field: &QuadraticField, m: u64) -> Result<Option<QFElement>> {
    let elem = match m {
        2 => Some(field.elem(0, 0)),
        3 => Some(field.elem(1, 0)),
        4 if field.d() == 2 => Some(field.elem(0, 1)),
        4 => None,
        5 if field.d() == 5 => Some(field.element(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
        )),
        5 => None,
        6 if field.d() == 3 => Some(field.elem(0, 1)),
        6 => None,
        _ => return Err(Error::UnsupportedOrder(m)),
    };
    Ok(elem)
}

/// Reduced norm of 1 + lambda for a torsion element lambda of order 2m:
/// Nrd(1 + lambda) = Nrd(lambda) + Trd(lambda) + 1 = 2 + t_m.
pub fn nrd_one_plus_torsion(field: &QuadraticField, m: u64) -> Result<QFElement> {
    let t = torsion_trace(field, m)?.ok_or(Error::UnsupportedOrder(m))?;
    t.add(&field.elem(2, 0))
}

/// Cyclic structure of the norm-one congruence quotient at a ramified
/// prime with residue field size q: the norm kernel of F_{q^2}* -> F_q*,
/// cyclic of order q + 1.
pub fn riehm_norm1_quotient(q: u64) -> Result<GroupDescriptor> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(GroupDescriptor::Cyclic(q + 1))
}

/// Order of Gamma^1 / Gamma^1(P) at a ramified prime with residue field
/// size q and residue characteristic p: the Riehm quotient of order q + 1,
/// divided by 2 unless p = 2 (when -1 is already congruent to 1 mod P).
pub fn gamma1_quotient_order(q: u64, p: u64) -> u64 {
    if p == 2 {
        q + 1
    } else {
        (q + 1) / 2
    }
}

/// A congruence level at one ramified prime.
#[derive(Clone, Debug)]
pub struct CongruenceLevel {
    pub prime: PrimeSplit,
    pub kind: LevelKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelKind {
    /// The full principal congruence subgroup Gamma^1(P).
    Principal,
    /// Elements whose image mod P lies in the subgroup of the stated order
    /// inside the cyclic quotient Gamma^1/Gamma^1(P).
    Intermediate { image_order: u64 },
}

/// A finite-index subgroup of the norm-one group cut out by congruence
/// levels. The index is the product of the per-level quotient orders,
/// divided by the orders of the chosen intermediate images.
#[derive(Clone, Debug, Default)]
pub struct SubgroupSpec {
    pub levels: Vec<CongruenceLevel>,
}

impl SubgroupSpec {
    pub fn norm_one() -> Self {
        SubgroupSpec { levels: Vec::new() }
    }

    pub fn principal(primes: Vec<PrimeSplit>) -> Self {
        SubgroupSpec {
            levels: primes
                .into_iter()
                .map(|prime| CongruenceLevel {
                    prime,
                    kind: LevelKind::Principal,
                })
                .collect(),
        }
    }

    pub fn index_in_base(&self) -> u64 {
        self.levels
            .iter()
            .map(|level| {
                let full = gamma1_quotient_order(level.prime.q(), level.prime.p());
                match level.kind {
                    LevelKind::Principal => full,
                    LevelKind::Intermediate { image_order } => full / image_order,
                }
            })
            .product()
    }
}

/// Euler number of a finite-index subgroup: e scales by the index.
pub fn euler_of_subgroup(e: &Rational, spec: &SubgroupSpec) -> Rational {
    e * rat_int(spec.index_in_base() as i64)
}

/// Outcome of the torsion-freeness screen for a congruence subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionVerdict {
    TorsionFree { exclusions: Vec<Exclusion> },
    Obstructed { order: u64, detail: String },
}

impl TorsionVerdict {
    pub fn is_torsion_free(&self) -> bool {
        matches!(self, TorsionVerdict::TorsionFree { .. })
    }
}

/// How one torsion order was excluded from the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub order: u64,
    pub rule: ExclusionRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExclusionRule {
    /// No torsion of this order exists in the norm-one group at all.
    AbsentFromNormOne,
    /// The image in the cyclic quotient at this prime must be trivial
    /// (gcd(2m, image order) = 1), pushing the element into the principal
    /// kernel, where one of the other rules applies.
    IntermediateImageTrivial { label: String },
    /// Torsion of order coprime to p cannot lie in the pro-p principal
    /// congruence kernel.
    ProP { label: String, p: u64 },
    /// Neither t_m nor -t_m is congruent to 2 modulo the level prime, so
    /// no torsion unit is congruent to 1 mod P.
    TraceRule { label: String },
}

/// Decide torsion-freeness of the congruence subgroup.
///
/// For each torsion order m present in the norm-one group, the subgroup
/// avoids it when some level excludes it:
/// - an intermediate level with image subgroup of order h and gcd(2m, h) = 1
///   forces the image trivial, reducing to the principal rules at that prime;
/// - at a principal level over p: gcd(m, p) = 1 rules it out (pro-p kernel),
///   or the trace rule does (t_m and -t_m both not congruent to 2 mod p).
pub fn torsion_free_check(b: &QuaternionData, spec: &SubgroupSpec) -> Result<TorsionVerdict> {
    let mut exclusions = Vec::new();
    for m in 2..=6u64 {
        if !b.torsion_order_exists(m)? {
            continue;
        }
        match exclude_order(b, spec, m)? {
            Some(rule) => exclusions.push(Exclusion { order: m, rule }),
            None => {
                return Ok(TorsionVerdict::Obstructed {
                    order: m,
                    detail: format!(
                        "no congruence level excludes torsion of order {}",
                        m
                    ),
                })
            }
        }
    }
    Ok(TorsionVerdict::TorsionFree { exclusions })
}

fn exclude_order(
    b: &QuaternionData,
    spec: &SubgroupSpec,
    m: u64,
) -> Result<Option<ExclusionRule>> {
    let field = b.field();
    let t = torsion_trace(field, m)?.expect("torsion order present implies trace in k");
    for level in &spec.levels {
        let prime = &level.prime;
        if let LevelKind::Intermediate { image_order } = level.kind {
            if crate::arith::gcd(2 * m, image_order) != 1 {
                continue; // this level cannot force the image trivial
            }
            // Image trivial: the element would lie in the principal kernel
            // at this prime; the principal rules must finish the argument.
            if principal_exclusion(field, &t, m, prime)?.is_some() {
                return Ok(Some(ExclusionRule::IntermediateImageTrivial {
                    label: prime.label().to_string(),
                }));
            }
            continue;
        }
        if let Some(rule) = principal_exclusion(field, &t, m, prime)? {
            return Ok(Some(rule));
        }
    }
    Ok(None)
}

fn principal_exclusion(
    field: &QuadraticField,
    t: &QFElement,
    m: u64,
    prime: &PrimeSplit,
) -> Result<Option<ExclusionRule>> {
    let p = prime.p();
    if crate::arith::gcd(m, p) == 1 {
        return Ok(Some(ExclusionRule::ProP {
            label: prime.label().to_string(),
            p,
        }));
    }
    let two = field.elem(2, 0);
    let plus = congruent_mod_prime(field, t, &two, prime)?;
    let minus = congruent_mod_prime(field, &t.neg(), &two, prime)?;
    if !plus && !minus {
        return Ok(Some(ExclusionRule::TraceRule {
            label: prime.label().to_string(),
        }));
    }
    Ok(None)
}

/// Isomorphism type of an automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(u64),
    /// Dihedral group D_n of order 2n.
    Dihedral(u64),
    /// Elementary abelian 2-group (Z/2)^l; KleinFour is (Z/2)^2.
    ElemAbelian2(u32),
    /// An extension of the stated cyclic group by the Klein four group
    /// whose precise structure is unresolved; it may be known to contain
    /// a cyclic subgroup of the given order.
    Extension {
        cyclic_order: u64,
        contains_cyclic: Option<u64>,
    },
}

impl GroupDescriptor {
    pub fn klein_four() -> Self {
        GroupDescriptor::ElemAbelian2(2)
    }

    pub fn order(&self) -> u64 {
        match self {
            GroupDescriptor::Cyclic(n) => *n,
            GroupDescriptor::Dihedral(n) => 2 * n,
            GroupDescriptor::ElemAbelian2(l) => 1 << l,
            GroupDescriptor::Extension { cyclic_order, .. } => 4 * cyclic_order,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "Z/{}", n),
            GroupDescriptor::Dihedral(n) => write!(f, "D{}", n),
            GroupDescriptor::ElemAbelian2(l) => {
                if *l == 1 {
                    write!(f, "Z/2")
                } else {
                    write!(f, "(Z/2)^{}", l)
                }
            }
            GroupDescriptor::Extension {
                cyclic_order,
                contains_cyclic,
            } => {
                write!(f, "extension of Z/{} by (Z/2)^2 (order {})", cyclic_order, 4 * cyclic_order)?;
                if let Some(c) = contains_cyclic {
                    write!(f, ", contains Z/{}", c)?;
                }
                Ok(())
            }
        }
    }
}

/// Assemble the automorphism group generated by an element g of the stated
/// order together with (optionally) an order-2 element outside <g> that
/// inverts it: the dihedral group of order 2 * g_order, or just the cyclic
/// group when no such involution exists.
pub fn assemble_automorphism_group(
    g_order: u64,
    inverting_involution_outside: bool,
) -> GroupDescriptor {
    assert!(g_order >= 2);
    if inverting_involution_outside {
        GroupDescriptor::Dihedral(g_order)
    } else {
        GroupDescriptor::Cyclic(g_order)
    }
}

/// Parse a group name in the display syntax: "Z/8", "D4", "(Z/2)^2".
pub fn parse_group(s: &str) -> Result<GroupDescriptor> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("Z/") {
        let n: u64 = n
            .parse()
            .map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
        if n < 2 {
            return Err(Error::UnsupportedGroup(s.to_string()));
        }
        return Ok(GroupDescriptor::Cyclic(n));
    }
    if let Some(n) = s.strip_prefix('D') {
        let n: u64 = n
            .parse()
            .map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
        return Ok(GroupDescriptor::Dihedral(n));
    }
    if let Some(l) = s.strip_prefix("(Z/2)^") {
        let l: u32 = l
            .parse()
            .map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
        return Ok(GroupDescriptor::ElemAbelian2(l));
    }
    Err(Error::UnsupportedGroup(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn field(d: i64) -> QuadraticField {
        QuadraticField::new(d).unwrap()
    }

    fn algebra(d: i64, primes: &[u64]) -> QuaternionData {
        let k = field(d);
        let ps = primes.iter().map(|&p| k.split_type(p).unwrap()).collect();
        make_algebra(&k, ps).unwrap()
    }

    #[test]
    fn algebra_validation() {
        let k = field(2);
        let p3 = k.split_type(3).unwrap();
        assert!(make_algebra(&k, vec![p3.clone()]).is_err());
        assert_eq!(
            make_algebra(&k, vec![p3.clone()]).unwrap_err(),
            Error::OddRamification
        );
        assert!(make_algebra(&k, vec![p3.clone(), p3.clone()]).is_err());
        // The two primes above a split rational prime are distinct.
        let p7a = k.split_type(7).unwrap().with_root(&k, 3).unwrap();
        let p7b = k.split_type(7).unwrap().with_root(&k, 4).unwrap();
        assert!(make_algebra(&k, vec![p7a, p7b]).is_ok());
    }

    #[test]
    fn shimizu_known_values() {
        assert_eq!(algebra(2, &[3, 7]).shimizu_euler(), rat(8, 1));
        assert_eq!(algebra(2, &[2, 5]).shimizu_euler(), rat(4, 1));
        assert_eq!(algebra(5, &[2, 5]).shimizu_euler(), rat(4, 5));
        assert_eq!(algebra(5, &[2, 11]).shimizu_euler(), rat(2, 1));
        assert_eq!(algebra(2, &[2, 3]).shimizu_euler(), rat(4, 3));
        assert_eq!(algebra(2, &[2, 7]).shimizu_euler(), rat(1, 1));
        assert_eq!(algebra(3, &[2, 3]).shimizu_euler(), rat(2, 3));
        assert_eq!(algebra(13, &[2, 3]).shimizu_euler(), rat(2, 1));
    }

    #[test]
    fn shimizu_multiplicative_in_ramified_factors() {
        // Each prime contributes the factor q - 1; the ramified prime over
        // 2 has q = 2 and multiplies the result by 1.
        let k = field(2);
        let base = make_algebra(&k, vec![]).unwrap();
        let with_two_three = algebra(2, &[2, 3]);
        assert_eq!(
            with_two_three.shimizu_euler(),
            base.shimizu_euler() * rat(2 - 1, 1) * rat(9 - 1, 1)
        );
        assert_eq!(
            algebra(2, &[3, 7]).shimizu_euler(),
            base.shimizu_euler() * rat(8, 1) * rat(6, 1)
        );
    }

    #[test]
    fn embeds_quadratic_known_cases() {
        // k(sqrt(-2)) embeds into B(Q(sqrt5), p2 p5).
        let b = algebra(5, &[2, 5]);
        let delta = b.field().elem(-2, 0);
        assert_eq!(b.embeds_quadratic(&delta), Ok(true));
        // p3 is decomposed in k(sqrt(-1)), so k(i) does not embed.
        let b = algebra(2, &[2, 3]);
        let delta = b.field().elem(-1, 0);
        assert_eq!(b.embeds_quadratic(&delta), Ok(false));
        // -pi7 with pi7 = 3 + sqrt 2: embeds into B(Q(sqrt2), p2 p7) for
        // the prime p7 containing pi7.
        let k = field(2);
        let p2 = k.split_type(2).unwrap();
        let p7 = k.split_type(7).unwrap().with_root(&k, 4).unwrap();
        let b = make_algebra(&k, vec![p2, p7]).unwrap();
        let delta = k.elem(-3, -1);
        assert_eq!(b.embeds_quadratic(&delta), Ok(true));
    }

    #[test]
    fn torsion_screening_matches_known_groups() {
        // Q(sqrt5), p2 p5: order 5 only.
        assert_eq!(algebra(5, &[2, 5]).torsion_orders().unwrap(), vec![5]);
        // Q(sqrt5), p2 p11: order 2 only.
        assert_eq!(algebra(5, &[2, 11]).torsion_orders().unwrap(), vec![2]);
        // Q(sqrt2), p2 p3: order 3, not 2.
        assert_eq!(algebra(2, &[2, 3]).torsion_orders().unwrap(), vec![3]);
        // Q(sqrt2), p2 p7: order 4 (and its power 2).
        assert_eq!(algebra(2, &[2, 7]).torsion_orders().unwrap(), vec![2, 4]);
        // Q(sqrt3), p2 p3: order 6 with powers 2, 3.
        assert_eq!(algebra(3, &[2, 3]).torsion_orders().unwrap(), vec![2, 3, 6]);
        // Torsion-free norm-one groups.
        assert!(algebra(2, &[3, 7]).torsion_orders().unwrap().is_empty());
        assert!(algebra(2, &[2, 5]).torsion_orders().unwrap().is_empty());
        // Q(sqrt13), p2 p3: order 2.
        assert_eq!(algebra(13, &[2, 3]).torsion_orders().unwrap(), vec![2]);
    }

    #[test]
    fn torsion_trace_values() {
        let k5 = field(5);
        assert_eq!(
            nrd_one_plus_torsion(&k5, 5).unwrap(),
            k5.element(rat(5, 2), rat(1, 2))
        );
        assert_eq!(nrd_one_plus_torsion(&k5, 2).unwrap(), k5.elem(2, 0));
        let k2 = field(2);
        assert_eq!(nrd_one_plus_torsion(&k2, 4).unwrap(), k2.elem(2, 1));
        assert_eq!(nrd_one_plus_torsion(&k2, 5), Err(Error::UnsupportedOrder(5)));
        assert!(matches!(torsion_trace(&k2, 7), Err(Error::UnsupportedOrder(7))));
    }

    #[test]
    fn riehm_quotients() {
        assert_eq!(riehm_norm1_quotient(4), Ok(GroupDescriptor::Cyclic(5)));
        assert_eq!(riehm_norm1_quotient(11), Ok(GroupDescriptor::Cyclic(12)));
        assert_eq!(riehm_norm1_quotient(2), Ok(GroupDescriptor::Cyclic(3)));
        assert_eq!(riehm_norm1_quotient(12), Err(Error::NotPrimePower(12)));
    }

    #[test]
    fn riehm_matches_enumeration_to_16() {
        for q in 2..=16u64 {
            if prime_power(q).is_none() {
                continue;
            }
            assert_eq!(
                norm_kernel_order(q).unwrap(),
                q + 1,
                "norm kernel for q = {}",
                q
            );
        }
    }

    #[test]
    fn gamma1_orders() {
        assert_eq!(gamma1_quotient_order(11, 11), 6);
        assert_eq!(gamma1_quotient_order(7, 7), 4);
        assert_eq!(gamma1_quotient_order(4, 2), 5);
        assert_eq!(gamma1_quotient_order(2, 2), 3);
        assert_eq!(gamma1_quotient_order(3, 3), 2);
        assert_eq!(gamma1_quotient_order(9, 3), 5);
    }

    #[test]
    fn subgroup_euler() {
        assert_eq!(
            euler_of_subgroup(&rat(4, 5), &spec_with_index(5)),
            rat(4, 1)
        );
        assert_eq!(euler_of_subgroup(&rat(2, 1), &spec_with_index(2)), rat(4, 1));
        assert_eq!(euler_of_subgroup(&rat(2, 3), &spec_with_index(6)), rat(4, 1));
    }

    fn spec_with_index(target: u64) -> SubgroupSpec {
        // Build a spec from real levels that reaches the desired index.
        match target {
            5 => {
                let k = field(5);
                SubgroupSpec::principal(vec![k.split_type(2).unwrap()])
            }
            2 => {
                let k = field(5);
                SubgroupSpec {
                    levels: vec![CongruenceLevel {
                        prime: k.split_type(11).unwrap(),
                        kind: LevelKind::Intermediate { image_order: 3 },
                    }],
                }
            }
            6 => {
                let k = field(3);
                SubgroupSpec::principal(vec![
                    k.split_type(2).unwrap(),
                    k.split_type(3).unwrap(),
                ])
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn torsion_free_congruence_subgroups() {
        // Gamma^1(P2) in B(Q(sqrt5), p2 p5): the 5-torsion dies in the
        // pro-2 kernel.
        let b = algebra(5, &[2, 5]);
        let spec = SubgroupSpec::principal(vec![field(5).split_type(2).unwrap()]);
        let verdict = torsion_free_check(&b, &spec).unwrap();
        assert!(verdict.is_torsion_free(), "{:?}", verdict);

        // The intermediate index-2 subgroup at p11 in B(Q(sqrt5), p2 p11).
        let b = algebra(5, &[2, 11]);
        let spec = SubgroupSpec {
            levels: vec![CongruenceLevel {
                prime: field(5).split_type(11).unwrap(),
                kind: LevelKind::Intermediate { image_order: 3 },
            }],
        };
        assert!(torsion_free_check(&b, &spec).unwrap().is_torsion_free());

        // Gamma^1(P2 P3) in B(Q(sqrt3), p2 p3): order 6 needs the trace rule.
        let k3 = field(3);
        let b = algebra(3, &[2, 3]);
        let spec = SubgroupSpec::principal(vec![
            k3.split_type(2).unwrap(),
            k3.split_type(3).unwrap(),
        ]);
        let verdict = torsion_free_check(&b, &spec).unwrap();
        match &verdict {
            TorsionVerdict::TorsionFree { exclusions } => {
                let six = exclusions.iter().find(|e| e.order == 6).unwrap();
                assert!(
                    matches!(six.rule, ExclusionRule::TraceRule { .. }),
                    "order 6 must fall to the trace rule, got {:?}",
                    six.rule
                );
            }
            other => panic!("expected torsion-free, got {:?}", other),
        }

        // The full norm-one group of B(Q(sqrt5), p2 p5) is NOT torsion-free.
        let b = algebra(5, &[2, 5]);
        let verdict = torsion_free_check(&b, &SubgroupSpec::norm_one()).unwrap();
        assert_eq!(
            verdict,
            TorsionVerdict::Obstructed {
                order: 5,
                detail: "no congruence level excludes torsion of order 5".to_string()
            }
        );
    }

    #[test]
    fn group_assembly() {
        assert_eq!(
            assemble_automorphism_group(10, true),
            GroupDescriptor::Dihedral(10)
        );
        assert_eq!(assemble_automorphism_group(10, true).order(), 20);
        assert_eq!(
            assemble_automorphism_group(8, true),
            GroupDescriptor::Dihedral(8)
        );
        assert_eq!(assemble_automorphism_group(8, true).order(), 16);
        assert_eq!(
            assemble_automorphism_group(4, true),
            GroupDescriptor::Dihedral(4)
        );
        assert_eq!(
            assemble_automorphism_group(6, false),
            GroupDescriptor::Cyclic(6)
        );
        assert_eq!(GroupDescriptor::klein_four().order(), 4);
        assert_eq!(GroupDescriptor::Dihedral(4).to_string(), "D4");
        assert_eq!(GroupDescriptor::klein_four().to_string(), "(Z/2)^2");
    }

    #[test]
    fn normalizer_rank() {
        let b = algebra(2, &[3, 7]);
        assert_eq!(
            b.normalizer_quotient_rank(),
            RankBound {
                rank: 2,
                is_lower_bound: true
            }
        );
        let k = field(2);
        let empty = make_algebra(&k, vec![]).unwrap();
        assert_eq!(empty.normalizer_quotient_rank().rank, 0);
    }
}
