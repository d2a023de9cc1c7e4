//! Exhaustive fixed-point enumeration for the groups acting on fake
//! quadrics: cyclic groups of order 2..12, the Klein four group, and the
//! dihedral groups D4 and D8, plus the impossibility arguments for
//! (Z/3)^2 and (Z/5)^2.
//!
//! The cyclic search walks all orbit structures (strata of points by
//! stabilizer order, with unit eigenvalue exponents) subject to the fixed
//! point counts, and keeps a configuration when the holomorphic Lefschetz
//! sum is exactly 1 for every nontrivial power. One power per divisor
//! class suffices: the sums for sigma^(gu), u a unit, are Galois
//! conjugates of the sum for sigma^g, and 1 is rational.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, root_of_unity, CyclotomicNumber, Rational};
use crate::singres::SingularityType;

use super::{eigen_alphabet, proper_divisors, EigenType, FixedConfig, SingularConfiguration};

/// All quotient singularity multisets realizable by an order-n automorphism,
/// 2 <= n <= 12, deduplicated and sorted.
pub fn enumerate_cyclic(n: u64) -> Result<Vec<SingularConfiguration>> {
    let configs = enumerate_cyclic_configs(n)?;
    let mut out: Vec<SingularConfiguration> = Vec::new();
    for c in &configs {
        let s = c.singularities();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// The surviving eigenvalue-level configurations for an order-n
/// automorphism.
pub fn enumerate_cyclic_configs(n: u64) -> Result<Vec<FixedConfig>> {
    if !(2..=12).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "cyclic enumeration covers orders 2..=12, got {}",
            n
        )));
    }
    let search = CyclicSearch::new(n);
    Ok(search.run())
}

struct Stratum {
    d: u64,
    alphabet: Vec<EigenType>,
    /// value[g_index][type_index]: the exact Lefschetz contribution
    /// d / ((1 - zeta^(a g))(1 - zeta^(b g))) of one orbit at power g.
    values: Vec<Vec<CyclotomicNumber>>,
    /// Pruning table for the stratum of ordinary fixed points (d = 1),
    /// which alone feeds the Lefschetz sum of sigma itself: the constant
    /// coordinate of each value at g = 1, with suffix minima and maxima.
    prune: Option<PruneTable>,
}

struct PruneTable {
    constants: Vec<Rational>,
    suffix_min: Vec<Rational>,
    suffix_max: Vec<Rational>,
}

struct CyclicSearch {
    n: u64,
    /// Representative powers: one divisor g per Galois class, g < n.
    powers: Vec<u64>,
    strata: Vec<Stratum>,
}

impl CyclicSearch {
    fn new(n: u64) -> Self {
        let powers = proper_divisors(n);
        // Orbits of size d contribute d points to each count; counts are
        // capped at 4, so only d <= 4 can occur.
        let ds: Vec<u64> = powers
            .iter()
            .copied()
            .filter(|&d| d <= 4 && n / d >= 2)
            .collect();
        let one = CyclotomicNumber::one(n);
        // inverse_terms[e] = 1/(1 - zeta_n^e) for e != 0 mod n.
        let mut inverse_terms: Vec<Option<CyclotomicNumber>> = vec![None; n as usize];
        for e in 1..n {
            let f = &one - &root_of_unity(n, e as i64);
            inverse_terms[e as usize] = Some(f.inv().expect("1 - zeta^e is nonzero"));
        }
        let strata = ds
            .iter()
            .map(|&d| {
                let alphabet = eigen_alphabet(n / d);
                let weight = CyclotomicNumber::from_rational(n, rat_int(d as i64));
                let mut values = Vec::new();
                for &g in &powers {
                    let mut row = Vec::new();
                    for t in &alphabet {
                        if g % d != 0 {
                            row.push(CyclotomicNumber::zero(n));
                            continue;
                        }
                        let (a, b) = t.exponents();
                        let ia = inverse_terms[((a * g) % n) as usize]
                            .clone()
                            .expect("unit times divisor is nonzero mod n");
                        let ib = inverse_terms[((b * g) % n) as usize]
                            .clone()
                            .expect("unit times divisor is nonzero mod n");
                        row.push(&(&ia * &ib) * &weight);
                    }
                    values.push(row);
                }
                let prune = if d == 1 {
                    let constants: Vec<Rational> =
                        values[0].iter().map(|v| v.coeffs()[0].clone()).collect();
                    let len = constants.len();
                    let mut suffix_min = constants.clone();
                    let mut suffix_max = constants.clone();
                    for i in (0..len.saturating_sub(1)).rev() {
                        if suffix_min[i + 1] < suffix_min[i] {
                            suffix_min[i] = suffix_min[i + 1].clone();
                        }
                        if suffix_max[i + 1] > suffix_max[i] {
                            suffix_max[i] = suffix_max[i + 1].clone();
                        }
                    }
                    Some(PruneTable {
                        constants,
                        suffix_min,
                        suffix_max,
                    })
                } else {
                    None
                };
                Stratum {
                    d,
                    alphabet,
                    values,
                    prune,
                }
            })
            .collect();
        CyclicSearch { n, powers, strata }
    }

    /// Required fixed point count for sigma^g: always 2 or 4, and exactly 4
    /// when sigma^g is a square in <sigma> (n odd, or g even).
    fn count_allowed(&self, g: u64, count: u64) -> bool {
        if self.n % 2 == 1 || g % 2 == 0 {
            count == 4
        } else {
            count == 2 || count == 4
        }
    }

    fn run(&self) -> Vec<FixedConfig> {
        let mut results = Vec::new();
        let max_counts: Vec<u64> = self.strata.iter().map(|s| 4 / s.d).collect();
        let mut counts = vec![0u64; self.strata.len()];
        self.iterate_counts(0, &max_counts, &mut counts, &mut results);
        results.sort();
        results
    }

    fn iterate_counts(
        &self,
        idx: usize,
        max_counts: &[u64],
        counts: &mut Vec<u64>,
        results: &mut Vec<FixedConfig>,
    ) {
        if idx == self.strata.len() {
            if self.counts_admissible(counts) {
                self.enumerate_assignments(counts, results);
            }
            return;
        }
        for c in 0..=max_counts[idx] {
            counts[idx] = c;
            self.iterate_counts(idx + 1, max_counts, counts, results);
        }
        counts[idx] = 0;
    }

    fn counts_admissible(&self, counts: &[u64]) -> bool {
        for &g in &self.powers {
            let total: u64 = self
                .strata
                .iter()
                .zip(counts)
                .filter(|(s, _)| g % s.d == 0)
                .map(|(s, &c)| s.d * c)
                .sum();
            if !self.count_allowed(g, total) {
                return false;
            }
        }
        true
    }

    /// Enumerate eigenvalue multisets stratum by stratum; the first stratum
    /// (orbit size 1, the largest alphabet) is enumerated innermost with a
    /// running rational prune against the Lefschetz sum for sigma itself.
    fn enumerate_assignments(&self, counts: &[u64], results: &mut Vec<FixedConfig>) {
        let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); self.strata.len()];
        self.assign_stratum(0, counts, &mut chosen, results);
    }

    fn assign_stratum(
        &self,
        s_idx: usize,
        counts: &[u64],
        chosen: &mut Vec<Vec<usize>>,
        results: &mut Vec<FixedConfig>,
    ) {
        if s_idx == self.strata.len() {
            if let Some(config) = self.check_candidate(chosen) {
                results.push(config);
            }
            return;
        }
        let size = counts[s_idx] as usize;
        let mut indices = Vec::with_capacity(size);
        self.multisets(s_idx, size, 0, Rational::zero(), &mut indices, counts, chosen, results);
    }

    #[allow(clippy::too_many_arguments)]
    fn multisets(
        &self,
        s_idx: usize,
        remaining: usize,
        from: usize,
        const_sum: Rational,
        indices: &mut Vec<usize>,
        counts: &[u64],
        chosen: &mut Vec<Vec<usize>>,
        results: &mut Vec<FixedConfig>,
    ) {
        let stratum = &self.strata[s_idx];
        if remaining == 0 {
            // The d = 1 stratum alone feeds the Lefschetz sum of sigma
            // itself; its constant coordinate must be exactly 1.
            if stratum.prune.is_some() && !const_sum.is_one() {
                return;
            }
            chosen[s_idx] = indices.clone();
            self.assign_stratum(s_idx + 1, counts, chosen, results);
            return;
        }
        for i in from..stratum.alphabet.len() {
            let next_sum = match &stratum.prune {
                Some(table) => {
                    let s = &const_sum + &table.constants[i];
                    // Bound: remaining picks come from indices >= i.
                    let lo = &s + &table.suffix_min[i] * rat_int(remaining as i64 - 1);
                    let hi = &s + &table.suffix_max[i] * rat_int(remaining as i64 - 1);
                    if lo > Rational::one() || hi < Rational::one() {
                        continue;
                    }
                    s
                }
                None => const_sum.clone(),
            };
            indices.push(i);
            self.multisets(
                s_idx,
                remaining - 1,
                i,
                next_sum,
                indices,
                counts,
                chosen,
                results,
            );
            indices.pop();
        }
    }

    fn check_candidate(&self, chosen: &[Vec<usize>]) -> Option<FixedConfig> {
        // Exact Lefschetz check at one representative power per divisor.
        for (g_idx, _) in self.powers.iter().enumerate() {
            let mut sum = CyclotomicNumber::zero(self.n);
            for (s, indices) in self.strata.iter().zip(chosen) {
                if self.powers[g_idx] % s.d != 0 {
                    continue;
                }
                for &i in indices {
                    sum = &sum + &s.values[g_idx][i];
                }
            }
            if !sum.is_one() {
                return None;
            }
        }
        let mut strata_map: BTreeMap<u64, Vec<EigenType>> = BTreeMap::new();
        for (s, indices) in self.strata.iter().zip(chosen) {
            if indices.is_empty() {
                continue;
            }
            let types: Vec<EigenType> = indices.iter().map(|&i| s.alphabet[i]).collect();
            strata_map.insert(s.d, types);
        }
        Some(FixedConfig::new(self.n, strata_map).expect("search builds valid strata"))
    }
}

/// Quotient analysis for the Klein four group.
///
/// No point is fixed by the whole group (a faithful two-dimensional
/// representation of (Z/2)^2 contains a reflection), each of the three
/// involutions has four fixed points, and their free pairing under the
/// complementary involutions yields two A_1 points each on the quotient.
#[derive(Clone, Debug)]
pub struct KleinFourAnalysis {
    pub configuration: SingularConfiguration,
    pub euler_quotient: Rational,
    pub census: BTreeMap<u64, u64>,
    pub common_fixed_point_possible: bool,
    pub per_involution: Vec<SingularConfiguration>,
}

pub fn enumerate_klein_four() -> KleinFourAnalysis {
    // A common fixed point needs a faithful reflection-free rep of (Z/2)^2.
    let common_fixed_point_possible = !all_faithful_reps_have_reflection(2);

    // Each involution: the unique order-2 configuration (4 fixed points).
    let involution_fix = enumerate_cyclic_configs(2)
        .expect("order 2 is in range")
        .into_iter()
        .map(|c| c.fixed_count(1))
        .collect::<Vec<_>>();
    assert_eq!(involution_fix, vec![4], "an involution has 4 fixed points");

    // 3 involutions x 4 points, no sharing; orbits of size 2 give 2A1 each.
    let a1 = SingularityType::new(2, 1).expect("A1");
    let per_involution = vec![SingularConfiguration::from_pairs(&[(a1, 2)]); 3];
    let configuration = SingularConfiguration::from_pairs(&[(a1, 6)]);
    let census = BTreeMap::from([(2u64, 12u64)]);
    let euler_quotient =
        (rat_int(4) + rat_int(1) * rat_int(12)) / rat_int(4); // (4 + (2-1)*12)/|G|
    KleinFourAnalysis {
        configuration,
        euler_quotient,
        census,
        common_fixed_point_possible,
        per_involution,
    }
}

/// One branch of the dihedral analysis: a choice of rotation fixed-point
/// structure, with the resulting census and verdict.
#[derive(Clone, Debug)]
pub struct DihedralBranch {
    pub rotation_fixed_points: u64,
    pub census: BTreeMap<u64, u64>,
    pub euler_quotient: Rational,
    pub outcome: BranchOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchOutcome {
    Accepted(SingularConfiguration),
    Rejected { reason: String },
}

#[derive(Clone, Debug)]
pub struct DihedralAnalysis {
    /// D_m of order 2m.
    pub m: u64,
    pub branches: Vec<DihedralBranch>,
}

impl DihedralAnalysis {
    /// Accepted quotient configurations, deduplicated (distinct rotation
    /// eigenstructures can fold to the same multiset).
    pub fn configurations(&self) -> Vec<SingularConfiguration> {
        let mut out: Vec<SingularConfiguration> = Vec::new();
        for b in &self.branches {
            if let BranchOutcome::Accepted(c) = &b.outcome {
                if !out.contains(c) {
                    out.push(c.clone());
                }
            }
        }
        out.sort();
        out
    }
}

/// Quotient analysis for the dihedral group D_m (order 2m), m in {4, 8}.
///
/// The rotation t contributes one branch per order-m cyclic configuration;
/// the m reflections are involutions with 4 fixed points each, pairwise
/// disjoint and away from Fix(t) (shared points would have a forbidden
/// stabilizer). Branches with a non-integral quotient Euler number are
/// reported and rejected.
pub fn enumerate_dihedral(m: u64) -> Result<DihedralAnalysis> {
    if m != 4 && m != 8 {
        return Err(Error::UnsupportedGroup(format!(
            "dihedral analysis covers D4 and D8, got D{}",
            m
        )));
    }
    let order = 2 * m;
    let mut branches = Vec::new();
    for rotation in enumerate_cyclic_configs(m)? {
        let rot_fixed = rotation.fixed_count(1);

        // Census: rotation strata keep their stabilizer orders inside D_m;
        // the m reflections contribute 4m points of stabilizer order 2.
        let mut census = rotation.census();
        *census.entry(2).or_insert(0) += 4 * m;

        let weighted: Rational = census
            .iter()
            .map(|(&s, &c)| rat_int((s as i64 - 1) * c as i64))
            .sum();
        let euler = (rat_int(4) + weighted) / rat_int(order as i64);

        if !euler.is_integer() {
            branches.push(DihedralBranch {
                rotation_fixed_points: rot_fixed,
                census,
                euler_quotient: euler,
                outcome: BranchOutcome::Rejected {
                    reason: "quotient Euler number is not an integer".to_string(),
                },
            });
            continue;
        }

        // Quotient singularities: 4 A_1 from the reflection orbits, plus
        // the rotation orbits folded in half by the inverting reflection.
        let mut config = SingularConfiguration::empty();
        config.add(SingularityType::new(2, 1).expect("A1"), 4);
        match fold_rotation_strata(&rotation, &mut config) {
            Ok(()) => branches.push(DihedralBranch {
                rotation_fixed_points: rot_fixed,
                census,
                euler_quotient: euler,
                outcome: BranchOutcome::Accepted(config),
            }),
            Err(reason) => branches.push(DihedralBranch {
                rotation_fixed_points: rot_fixed,
                census,
                euler_quotient: euler,
                outcome: BranchOutcome::Rejected { reason },
            }),
        }
    }
    Ok(DihedralAnalysis { m, branches })
}

/// The inverting reflection pairs rotation orbits with their inverse
/// eigenvalue types; each pair maps to a single quotient singularity.
fn fold_rotation_strata(
    rotation: &FixedConfig,
    config: &mut SingularConfiguration,
) -> std::result::Result<(), String> {
    for orbits in rotation.strata().values() {
        let mut counts: BTreeMap<EigenType, u64> = BTreeMap::new();
        for t in orbits {
            *counts.entry(*t).or_insert(0) += 1;
        }
        for (t, c) in &counts {
            let inv = t.inverse();
            if inv == *t {
                if c % 2 != 0 {
                    return Err(format!(
                        "self-inverse type {} has odd multiplicity {}",
                        t, c
                    ));
                }
                config.add(t.singularity(), c / 2);
            } else {
                match counts.get(&inv) {
                    Some(ci) if ci == c => {
                        if t < &inv {
                            config.add(t.singularity(), *c);
                        }
                    }
                    _ => {
                        return Err(format!(
                            "type {} is not matched by its inverse under the reflection",
                            t
                        ))
                    }
                }
            }
        }
    }
    Ok(())
}

/// True when the tangent eigenvalues (zeta^e1, zeta^e2) describe a
/// reflection: a nontrivial map with eigenvalue 1.
pub fn element_is_reflection(p: u64, e1: u64, e2: u64) -> bool {
    let z1 = e1 % p == 0;
    let z2 = e2 % p == 0;
    z1 != z2
}

/// Exhaustively verify that every faithful diagonal representation of
/// (Z/p)^2 on a two-dimensional space contains a reflection. A
/// representation is a 2x2 exponent matrix M over F_p (rows = characters);
/// it is faithful iff det M != 0, and g != 0 in the kernel of one row is a
/// reflection.
fn all_faithful_reps_have_reflection(p: u64) -> bool {
    let mut faithful = 0u64;
    let mut with_reflection = 0u64;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 0 {
                        continue; // det = 0: not faithful
                    }
                    faithful += 1;
                    if rep_has_reflection(p, [[a, b], [c, d]]) {
                        with_reflection += 1;
                    }
                }
            }
        }
    }
    faithful > 0 && faithful == with_reflection
}

fn rep_has_reflection(p: u64, m: [[u64; 2]; 2]) -> bool {
    for g1 in 0..p {
        for g2 in 0..p {
            if g1 == 0 && g2 == 0 {
                continue;
            }
            let e1 = (m[0][0] * g1 + m[0][1] * g2) % p;
            let e2 = (m[1][0] * g1 + m[1][1] * g2) % p;
            if element_is_reflection(p, e1, e2) {
                return true;
            }
        }
    }
    false
}

/// Structured impossibility argument for (Z/p)^2, p in {3, 5}: a common
/// fixed point of the whole group is forced by orbit counting on the four
/// fixed points of a generator, and every faithful two-dimensional
/// representation contains a reflection, contradicting isolated fixed
/// points.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub p: u64,
    pub group: String,
    /// Minimal number of points fixed by the whole group, from orbit sizes
    /// 1 or p partitioning the 4 fixed points of a generator.
    pub min_common_fixed_points: u64,
    pub faithful_representations: u64,
    pub representations_with_reflection: u64,
    pub impossible: bool,
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: >= {} common fixed points forced; all {} faithful 2-dim representations contain a reflection: impossible",
            self.group, self.min_common_fixed_points, self.faithful_representations
        )
    }
}

pub fn impossibility(p: u64) -> Result<ObstructionReport> {
    if p != 3 && p != 5 {
        return Err(Error::UnsupportedGroup(format!(
            "impossibility argument covers (Z/3)^2 and (Z/5)^2, got p = {}",
            p
        )));
    }
    // A generator fixes exactly 4 points (p odd: every element is a square).
    // The commuting generator permutes them in orbits of size 1 or p, so
    // the number fixed by both is = 4 (mod p) and cannot be 0.
    let residue = 4 % p;
    let min_common = if residue == 0 { p } else { residue };
    debug_assert!(min_common > 0);

    let mut faithful = 0u64;
    let mut with_reflection = 0u64;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 0 {
                        continue;
                    }
                    faithful += 1;
                    if rep_has_reflection(p, [[a, b], [c, d]]) {
                        with_reflection += 1;
                    }
                }
            }
        }
    }
    Ok(ObstructionReport {
        p,
        group: format!("(Z/{})^2", p),
        min_common_fixed_points: min_common,
        faithful_representations: faithful,
        representations_with_reflection: with_reflection,
        impossible: faithful == with_reflection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(configs: &[SingularConfiguration]) -> Vec<String> {
        configs.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn involution() {
        assert_eq!(strings(&enumerate_cyclic(2).unwrap()), vec!["4A1"]);
    }

    #[test]
    fn order_three() {
        assert_eq!(
            strings(&enumerate_cyclic(3).unwrap()),
            vec!["2A(3,1) + 2A2"]
        );
    }

    #[test]
    fn order_four_two_candidates() {
        assert_eq!(
            strings(&enumerate_cyclic(4).unwrap()),
            vec!["A1 + 2A3", "2A(4,1) + 2A3"]
        );
    }

    #[test]
    fn order_five_three_candidates() {
        assert_eq!(
            strings(&enumerate_cyclic(5).unwrap()),
            vec!["A(5,1) + 2A(5,2) + A4", "2A(5,1) + 2A4", "4A(5,2)"]
        );
    }

    #[test]
    fn order_six_unique() {
        assert_eq!(
            strings(&enumerate_cyclic(6).unwrap()),
            vec!["2A(6,1) + 2A5"]
        );
    }

    #[test]
    fn order_eight() {
        // The exhaustive search finds four admissible multisets. Only the
        // last is realized on the known surfaces (it is the one selected
        // for the quotient table); the others pass every local constraint:
        // e.g. (z, z), (z^7, z^7), (z, z^7), (z, z^7) has Lefschetz sum
        // (1 + z^2k - 2z^k)/(1 - z^k)^2 = 1 identically.
        assert_eq!(
            strings(&enumerate_cyclic(8).unwrap()),
            vec![
                "A3 + 2A(8,5)",
                "A(8,1) + A(8,3) + A(8,5) + A7",
                "2A(8,1) + 2A7",
                "2A(8,3) + 2A(8,5)"
            ]
        );
    }

    #[test]
    fn order_ten_three_candidates() {
        assert_eq!(
            strings(&enumerate_cyclic(10).unwrap()),
            vec![
                "A(10,1) + 2A(10,3) + A9",
                "2A(10,1) + 2A9",
                "4A(10,3)"
            ]
        );
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_cyclic(1).is_err());
        assert!(enumerate_cyclic(13).is_err());
    }

    #[test]
    fn emitted_configs_satisfy_all_powers() {
        use crate::exact::rat;
        for n in 2..=10u64 {
            for config in enumerate_cyclic_configs(n).unwrap() {
                for k in 1..n {
                    assert_eq!(
                        config.holomorphic_sum(k).unwrap().as_rational(),
                        Ok(rat(1, 1)),
                        "n = {} k = {} config = {}",
                        n,
                        k,
                        config
                    );
                    let count = config.fixed_count(k);
                    assert!(count == 2 || count == 4, "count {} at n={} k={}", count, n, k);
                }
            }
        }
    }

    #[test]
    fn prime_orders_agree_with_zhang() {
        use super::super::zhang_configurations;
        for p in [2u64, 3, 5, 7] {
            let from_lefschetz = enumerate_cyclic(p).unwrap();
            let from_zhang = zhang_configurations(p, 4).unwrap();
            assert_eq!(
                strings(&from_lefschetz),
                strings(&from_zhang),
                "two-oracle disagreement at p = {}",
                p
            );
        }
    }

    #[test]
    fn klein_four() {
        let analysis = enumerate_klein_four();
        assert_eq!(analysis.configuration.to_string(), "6A1");
        assert_eq!(analysis.euler_quotient, rat_int(4));
        assert!(!analysis.common_fixed_point_possible);
        assert_eq!(analysis.census, BTreeMap::from([(2, 12)]));
        assert_eq!(analysis.per_involution.len(), 3);
        for c in &analysis.per_involution {
            assert_eq!(c.to_string(), "2A1");
        }
    }

    #[test]
    fn dihedral_four() {
        let analysis = enumerate_dihedral(4).unwrap();
        assert_eq!(
            strings(&analysis.configurations()),
            vec!["4A1 + A(4,1) + A3"]
        );
        // The branch where the rotation has 2 fixed points dies with e = 7/2.
        let rejected: Vec<&DihedralBranch> = analysis
            .branches
            .iter()
            .filter(|b| matches!(b.outcome, BranchOutcome::Rejected { .. }))
            .collect();
        assert_eq!(rejected.len(), 1);
        assert_eq!(rejected[0].rotation_fixed_points, 2);
        assert_eq!(rejected[0].euler_quotient, crate::exact::rat(7, 2));
    }

    #[test]
    fn dihedral_eight() {
        let analysis = enumerate_dihedral(8).unwrap();
        // Two rotation structures survive the reflection pairing and the
        // integrality of the quotient Euler number; the realized one is
        // 4A1 + A(8,3) + A(8,5).
        assert_eq!(
            strings(&analysis.configurations()),
            vec!["4A1 + A(8,1) + A7", "4A1 + A(8,3) + A(8,5)"]
        );
        // The swap-type rotation structure (2 fixed points) dies with a
        // non-integral quotient Euler number here as well.
        assert!(analysis.branches.iter().any(|b| {
            matches!(b.outcome, BranchOutcome::Rejected { .. })
                && b.euler_quotient == crate::exact::rat(7, 2)
        }));
        assert!(enumerate_dihedral(6).is_err());
    }

    #[test]
    fn impossibility_reports() {
        for p in [3u64, 5] {
            let report = impossibility(p).unwrap();
            assert!(report.impossible, "(Z/{})^2 must be impossible", p);
            assert!(report.min_common_fixed_points >= 1);
            assert_eq!(
                report.faithful_representations,
                report.representations_with_reflection
            );
        }
        assert!(impossibility(7).is_err());
        // The diagonal representation (x, y) -> (zeta x, y) is a reflection.
        assert!(element_is_reflection(3, 1, 0));
        assert!(!element_is_reflection(3, 1, 1));
        assert!(!element_is_reflection(3, 0, 0));
    }
}
