//! Reverse constructions: rebuilding a surface with c_1^2 = 2 c_2 = 8 from
//! a quotient surface with the maximal number of nodal or quotient
//! singularities.
//!
//! - Over F_2: a set of k disjoint (-2)-curves on Y determines a map
//!   psi: F_2^k -> Pic(Y) (x) F_2; a nonzero kernel vector of weight 4
//!   yields a double cover branched over the corresponding curves. Kernel
//!   codes have every nonzero word of weight 4 (a smooth double cover of a
//!   surface with n nodes needs 4 | n) and length k >= 2^r - 1.
//! - Over F_3: branch data for a triple cover must meet every exceptional
//!   curve with multiplicity divisible by 3; the cover of a surface with
//!   r disjoint (-3)-branch curves has c_2 = 3c_2(W) - 4r and
//!   chi = 3chi(W) - r/3.
//!
//! Blow-down ledgers track (K^2, c_2) step by step, each blow-down trading
//! one unit between them, so each pipeline can be checked to land exactly
//! on (8, 4, 1).

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, Rational};

/// A set of disjoint nodal curves on an ambient surface, capped by the
/// Miyaoka bound when the ambient K^2 is 4 or 2.
#[derive(Clone, Debug)]
pub struct NodalSet {
    pub count: u64,
    pub ambient_k2: Rational,
    pub ambient_c2: Rational,
}

impl NodalSet {
    pub fn new(count: u64, ambient_k2: Rational, ambient_c2: Rational) -> Result<Self> {
        if let Ok(bound) = crate::quotient::miyaoka_nodal_bound(&ambient_k2) {
            if count > bound {
                return Err(Error::OutOfRange(format!(
                    "{} nodal curves exceed the bound {} at K^2 = {}",
                    count, bound, ambient_k2
                )));
            }
        }
        Ok(NodalSet {
            count,
            ambient_k2,
            ambient_c2,
        })
    }
}

/// A linear code over F_2 or F_3 recording branch divisibility classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCode {
    pub char_p: u32,
    pub length: usize,
    /// Basis vectors, each of the given length, entries in 0..char_p.
    pub basis: Vec<Vec<u8>>,
}

impl KernelCode {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// All nonzero codewords (F_2 case).
    pub fn nonzero_words(&self) -> Vec<Vec<u8>> {
        assert_eq!(self.char_p, 2, "word enumeration implemented over F_2");
        let r = self.basis.len();
        let mut words = Vec::new();
        for mask in 1u32..(1 << r) {
            let mut w = vec![0u8; self.length];
            for (i, b) in self.basis.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (x, y) in w.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
            }
            words.push(w);
        }
        words
    }
}

/// Lower bound max(0, k - floor(b2/2)) for the kernel dimension of psi:
/// the image is totally isotropic in a b2-dimensional intersection space.
pub fn isotropic_dimension_bound(b2: u64, k: u64) -> u64 {
    k.saturating_sub(b2 / 2)
}

/// All F_2-linear codes of length k in which every nonzero word has weight
/// exactly 4 and every coordinate is used (each curve appears in the
/// branch locus), up to coordinate permutation. The dimension is capped by
/// k >= 2^r - 1.
pub fn weight4_codes(k: usize) -> Result<Vec<KernelCode>> {
    if !(1..=8).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "code enumeration covers lengths 1..=8, got {}",
            k
        )));
    }
    // Candidate generators: all weight-4 vectors as bitmasks.
    let mut gens: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() == 4 {
            gens.push(mask);
        }
    }
    let max_dim = (1..=3).filter(|&r| (1usize << r) - 1 <= k).max().unwrap_or(0);
    let mut found: Vec<Vec<u32>> = Vec::new(); // sorted word sets
    let mut basis: Vec<u32> = Vec::new();
    search_codes(&gens, 0, &mut basis, max_dim, k, &mut found);
    // Deduplicate up to coordinate permutation via a canonical form.
    let mut canonical_seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    for words in found {
        let canon = canonical_code(&words, k);
        if canonical_seen.insert(canon) {
            let basis = code_basis(&words);
            out.push(KernelCode {
                char_p: 2,
                length: k,
                basis: basis
                    .iter()
                    .map(|&m| (0..k).map(|i| ((m >> i) & 1) as u8).collect())
                    .collect(),
            });
        }
    }
    out.sort_by_key(|c| (c.dimension(), c.basis.clone()));
    Ok(out)
}

fn search_codes(
    gens: &[u32],
    from: usize,
    basis: &mut Vec<u32>,
    max_dim: usize,
    k: usize,
    found: &mut Vec<Vec<u32>>,
) {
    if !basis.is_empty() {
        let words = span_words(basis);
        if words.iter().all(|w| w.count_ones() == 4) {
            let support = words.iter().fold(0u32, |acc, w| acc | w);
            if support == (1u32 << k) - 1 {
                let mut sorted = words.clone();
                sorted.sort();
                if !found.contains(&sorted) {
                    found.push(sorted);
                }
            }
        } else {
            return; // no extension can repair a bad word
        }
    }
    if basis.len() == max_dim {
        return;
    }
    for (i, &g) in gens.iter().enumerate().skip(from) {
        if span_words(basis).contains(&g) {
            continue;
        }
        basis.push(g);
        search_codes(gens, i + 1, basis, max_dim, k, found);
        basis.pop();
    }
}

fn span_words(basis: &[u32]) -> Vec<u32> {
    let mut words = Vec::new();
    for mask in 1u32..(1 << basis.len()) {
        let mut w = 0u32;
        for (i, &b) in basis.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w ^= b;
            }
        }
        words.push(w);
    }
    words
}

/// Canonical representative of the word set under coordinate permutations.
fn canonical_code(words: &[u32], k: usize) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = (0..k).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut permuted: Vec<u32> = words
            .iter()
            .map(|&w| {
                let mut out = 0u32;
                for (i, &pi) in p.iter().enumerate() {
                    if w & (1 << i) != 0 {
                        out |= 1 << pi;
                    }
                }
                out
            })
            .collect();
        permuted.sort();
        if best.as_ref().map_or(true, |b| &permuted < b) {
            best = Some(permuted);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_all(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute_all(perm, i + 1, f);
        perm.swap(i, j);
    }
}

/// Reduced basis (row echelon over F_2) of a word set.
fn code_basis(words: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &w in words {
        let mut v = w;
        for &b in &basis {
            let pivot = 1u32 << (31 - b.leading_zeros());
            if v & pivot != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_by_key(|b| std::cmp::Reverse(*b));
        }
    }
    basis.sort();
    basis
}

/// Invariants of a (possibly intermediate) covering surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInvariants {
    pub k2: Rational,
    pub c2: Rational,
    pub chi: Rational,
    /// Upper bound on the irregularity, when one is derived.
    pub irregularity_bound: Option<u64>,
}

impl fmt::Display for CoverInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K^2 = {}, c2 = {}, chi = {}", self.k2, self.c2, self.chi)?;
        if let Some(q) = self.irregularity_bound {
            write!(f, ", q <= {}", q)?;
        }
        Ok(())
    }
}

/// Invariants of the (Z/2)^r-cover of Y branched over k nodal curves,
/// after contracting the (-1)-curves over them:
///
/// ```text
/// K^2 = 2^r K_Y^2,    chi = 2^r chi(Y) - k 2^(r-3),    c_2 = 12 chi - K^2.
/// ```
///
/// The branch count must make chi integral (2^(3-r) | k); for a single
/// double cover this is the classical condition 4 | k. For (k, r) = (4, 1)
/// the cover of a chi = 1, q = 0 surface has irregularity at most 1.
pub fn double_cover_invariants(
    y_k2: &Rational,
    y_chi: &Rational,
    k: u64,
    r: u32,
) -> Result<CoverInvariants> {
    if r > 3 {
        return Err(Error::BadWeight(k, r));
    }
    let correction = rat_int(k as i64) * rat(1, 8) * rat_int(1 << r);
    if !correction.is_integer() {
        return Err(Error::BadWeight(k, r));
    }
    let two_r = rat_int(1 << r);
    let k2 = &two_r * y_k2;
    let chi = &two_r * y_chi - correction;
    let c2 = rat_int(12) * &chi - &k2;
    let irregularity_bound = if (k, r) == (4, 1) && y_chi.is_one() {
        Some(1)
    } else {
        None
    };
    Ok(CoverInvariants {
        k2,
        c2,
        chi,
        irregularity_bound,
    })
}

/// Invariants of a triple cover of W branched over r disjoint (-3)-curves
/// C_i with K_W . C_i = 1:
///
/// ```text
/// K^2 = 3 (K_W + (2/3) Sigma)^2 = 3 K_W^2 + 4 (K_W . Sigma) + (4/3) Sigma^2
/// c_2 = 3 c_2(W) - 4r,    chi = 3 chi(W) - r/3.
/// ```
pub fn triple_cover_invariants(
    w_k2: &Rational,
    w_c2: &Rational,
    w_chi: &Rational,
    branch_curves: u64,
) -> Result<CoverInvariants> {
    if branch_curves % 3 != 0 {
        return Err(Error::BranchNotDivisible(branch_curves));
    }
    let r = rat_int(branch_curves as i64);
    // K_W . Sigma = r and Sigma^2 = -3r for r disjoint (-3)-curves.
    let k2 = rat_int(3) * (w_k2 + rat(4, 3) * &r + rat(4, 9) * rat_int(-3) * &r);
    let c2 = rat_int(3) * w_c2 - rat_int(4) * &r;
    let chi = rat_int(3) * w_chi - &r / rat_int(3);
    Ok(CoverInvariants {
        k2,
        c2,
        chi,
        irregularity_bound: None,
    })
}

/// F_3 branch-closure check: for each exceptional curve E, the pairing
/// E . sum(v_i C_i) must vanish mod 3. Reports, per curve with a violating
/// pairing, whether setting it nonzero is forced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub consistent: bool,
    /// Indices of branch candidates forced to join the branch locus.
    pub forced: Vec<usize>,
}

/// `incidence[e][i]` = intersection number of exceptional curve e with
/// branch candidate C_i (0 or 1); `v` = the F_3 assignment.
pub fn branch_closure_f3(incidence: &[Vec<u8>], v: &[u8]) -> ClosureReport {
    let mut forced = BTreeSet::new();
    let mut consistent = true;
    for row in incidence {
        assert_eq!(row.len(), v.len(), "incidence row length mismatch");
        let pairing: u32 = row
            .iter()
            .zip(v)
            .map(|(&e, &vi)| e as u32 * vi as u32)
            .sum();
        if pairing % 3 != 0 {
            consistent = false;
            // A single zero-assigned curve meeting E can absorb the defect.
            for (i, (&e, &vi)) in row.iter().zip(v).enumerate() {
                if e != 0 && vi == 0 {
                    forced.insert(i);
                }
            }
        }
    }
    ClosureReport {
        consistent,
        forced: forced.into_iter().collect(),
    }
}

/// Find all F_3 branch assignments for the standard two-exceptional-curve
/// configuration that satisfy the closure constraints, the divisibility
/// 3 | r (integral chi), and 3 | sum v_i (K_W . L integral, since each
/// branch candidate is a (-3)-curve with K . C = 1). Used by the triple
/// cover pipeline.
pub fn admissible_triple_branches(incidence: &[Vec<u8>], candidates: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let total = 3u32.pow(candidates as u32);
    for idx in 1..total {
        let mut v = vec![0u8; candidates];
        let mut n = idx;
        for x in v.iter_mut() {
            *x = (n % 3) as u8;
            n /= 3;
        }
        let r = v.iter().filter(|&&x| x != 0).count();
        let sum: u32 = v.iter().map(|&x| x as u32).sum();
        if r % 3 != 0 || sum % 3 != 0 {
            continue;
        }
        if branch_closure_f3(incidence, &v).consistent {
            out.push(v);
        }
    }
    out
}

/// Blow-down ledger: each of `count` blow-downs raises K^2 by 1 and lowers
/// c_2 by 1, keeping chi fixed.
pub fn blowdown_ledger(start: &CoverInvariants, count: u64) -> CoverInvariants {
    let c = rat_int(count as i64);
    CoverInvariants {
        k2: &start.k2 + &c,
        c2: &start.c2 - &c,
        chi: start.chi.clone(),
        irregularity_bound: start.irregularity_bound,
    }
}

/// Blow-up ledger: the inverse bookkeeping.
pub fn blow_up(start: &CoverInvariants, count: u64) -> CoverInvariants {
    let c = rat_int(count as i64);
    CoverInvariants {
        k2: &start.k2 - &c,
        c2: &start.c2 + &c,
        chi: start.chi.clone(),
        irregularity_bound: start.irregularity_bound,
    }
}

/// One step of a reconstruction pipeline, for reporting.
#[derive(Clone, Debug)]
pub struct PipelineStep {
    pub label: String,
    pub invariants: CoverInvariants,
}

/// The double / bidouble reconstruction: a surface Y with chi = 1 and the
/// maximal number of nodal curves (4 at K^2 = 4, 6 at K^2 = 2) has a
/// unique weight-4 kernel code; the associated (Z/2)^r-cover has
/// c_1^2 = 2 c_2 = 8.
pub fn double_cover_pipeline(y_k2: i64) -> Result<Vec<PipelineStep>> {
    let k = crate::quotient::miyaoka_nodal_bound(&rat_int(y_k2))?;
    let b2 = crate::quotient::b2_from_invariants(y_k2);
    let min_dim = isotropic_dimension_bound(b2 as u64, k);
    let codes = weight4_codes(k as usize)?;
    if codes.len() != 1 {
        return Err(Error::InconsistentScenario(format!(
            "expected a unique weight-4 code of length {}, found {}",
            k,
            codes.len()
        )));
    }
    let code = &codes[0];
    let r = code.dimension() as u32;
    if (r as u64) < min_dim {
        return Err(Error::InconsistentScenario(
            "kernel dimension below the isotropy bound".to_string(),
        ));
    }
    let y_c2 = rat_int(12 - y_k2);
    let start = CoverInvariants {
        k2: rat_int(y_k2),
        c2: y_c2,
        chi: rat_int(1),
        irregularity_bound: None,
    };
    let mut steps = vec![PipelineStep {
        label: format!("base surface with {} nodal curves", k),
        invariants: start,
    }];
    let cover = double_cover_invariants(&rat_int(y_k2), &rat_int(1), k, r)?;
    steps.push(PipelineStep {
        label: format!(
            "(Z/2)^{} cover branched over the nodal curves, (-1)-curves contracted",
            r
        ),
        invariants: cover,
    });
    Ok(steps)
}

/// The triple reconstruction: blow up the two intersection points of the
/// (-2)-curve pairs, close the F_3 branch data (forcing all six curves,
/// r = 6), take the triple cover, and blow down the 6 (-1)-curves plus the
/// 2 curves over the exceptional locus.
pub fn triple_cover_pipeline() -> Result<Vec<PipelineStep>> {
    let y = CoverInvariants {
        k2: rat_int(2),
        c2: rat_int(10),
        chi: rat_int(1),
        irregularity_bound: None,
    };
    let mut steps = vec![PipelineStep {
        label: "base surface with 2A(3,1) + 2A2 resolved".to_string(),
        invariants: y.clone(),
    }];
    let w = blow_up(&y, 2);
    steps.push(PipelineStep {
        label: "blow up the two intersection points of the (-2)-curve pairs".to_string(),
        invariants: w.clone(),
    });

    // Six branch candidates: C1, C2 from the A(3,1) points, C3..C6 the
    // strict transforms of the (-2)-pairs; E1 meets C3, C4 and E2 meets
    // C5, C6.
    let incidence = vec![
        vec![0, 0, 1, 1, 0, 0],
        vec![0, 0, 0, 0, 1, 1],
    ];
    let assignments = admissible_triple_branches(&incidence, 6);
    let supports: BTreeSet<Vec<bool>> = assignments
        .iter()
        .map(|v| v.iter().map(|&x| x != 0).collect())
        .collect();
    if supports.len() != 1 || !supports.iter().next().unwrap().iter().all(|&b| b) {
        return Err(Error::InconsistentScenario(
            "branch closure did not force all six curves".to_string(),
        ));
    }
    let r = 6u64;
    let cover = triple_cover_invariants(&w.k2, &w.c2, &w.chi, r)?;
    steps.push(PipelineStep {
        label: "triple cover branched over the six (-3)-curves".to_string(),
        invariants: cover.clone(),
    });
    let after_six = blowdown_ledger(&cover, 6);
    steps.push(PipelineStep {
        label: "blow down the 6 (-1)-curves over the branch curves".to_string(),
        invariants: after_six.clone(),
    });
    let final_surface = blowdown_ledger(&after_six, 2);
    steps.push(PipelineStep {
        label: "blow down the 2 curves over the exceptional locus".to_string(),
        invariants: final_surface,
    });
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropy_bounds() {
        assert_eq!(isotropic_dimension_bound(6, 4), 1);
        assert_eq!(isotropic_dimension_bound(8, 6), 2);
        assert_eq!(isotropic_dimension_bound(8, 0), 0);
    }

    #[test]
    fn nodal_sets_respect_miyaoka() {
        assert!(NodalSet::new(4, rat_int(4), rat_int(8)).is_ok());
        assert!(NodalSet::new(5, rat_int(4), rat_int(8)).is_err());
        assert!(NodalSet::new(6, rat_int(2), rat_int(10)).is_ok());
        assert!(NodalSet::new(7, rat_int(2), rat_int(10)).is_err());
        // No bound applies away from K^2 = 4, 2.
        assert!(NodalSet::new(9, rat_int(8), rat_int(4)).is_ok());
    }

    #[test]
    fn weight4_code_tables() {
        // k = 4: the single word (1,1,1,1).
        let codes = weight4_codes(4).unwrap();
        assert_eq!(codes.len(), 1);
        assert_eq!(codes[0].dimension(), 1);
        assert_eq!(codes[0].basis, vec![vec![1, 1, 1, 1]]);

        // k = 6: unique dimension-2 code, basis (1,1,1,1,0,0), (1,1,0,0,1,1)
        // up to permutation.
        let codes = weight4_codes(6).unwrap();
        assert_eq!(codes.len(), 1);
        assert_eq!(codes[0].dimension(), 2);
        for w in codes[0].nonzero_words() {
            assert_eq!(w.iter().filter(|&&x| x == 1).count(), 4);
        }

        // No full-support weight-4 codes at lengths 3 and 5.
        assert!(weight4_codes(3).unwrap().is_empty());
        assert!(weight4_codes(5).unwrap().is_empty());
        assert!(weight4_codes(9).is_err());
    }

    #[test]
    fn weight4_codes_obey_beauville_bound() {
        for k in 1..=8usize {
            for code in weight4_codes(k).unwrap() {
                let r = code.dimension();
                assert!(k >= (1 << r) - 1, "k = {} < 2^{} - 1", k, r);
                for w in code.nonzero_words() {
                    assert_eq!(
                        w.iter().filter(|&&x| x == 1).count(),
                        4,
                        "k = {} has a word of wrong weight",
                        k
                    );
                }
            }
        }
    }

    #[test]
    fn double_cover_instances() {
        // (K^2, chi, k, r) = (4, 1, 4, 1) -> K^2 = 8, chi = 1, q <= 1.
        let c = double_cover_invariants(&rat_int(4), &rat_int(1), 4, 1).unwrap();
        assert_eq!((c.k2, c.c2, c.chi), (rat_int(8), rat_int(4), rat_int(1)));
        assert_eq!(c.irregularity_bound, Some(1));
        // Bidouble: (2, 1, 6, 2) -> K^2 = 8, chi = 4 - 3 = 1.
        let c = double_cover_invariants(&rat_int(2), &rat_int(1), 6, 2).unwrap();
        assert_eq!((c.k2, c.c2, c.chi), (rat_int(8), rat_int(4), rat_int(1)));
        // Trivial cover.
        let c = double_cover_invariants(&rat_int(4), &rat_int(1), 0, 0).unwrap();
        assert_eq!((c.k2, c.c2), (rat_int(4), rat_int(8)));
        // A single double cover needs 4 | k.
        assert_eq!(
            double_cover_invariants(&rat_int(4), &rat_int(1), 6, 1),
            Err(Error::BadWeight(6, 1))
        );
        // Noether closure.
        for (k2, chi, k, r) in [(4i64, 1i64, 4u64, 1u32), (2, 1, 6, 2)] {
            let c =
                double_cover_invariants(&rat_int(k2), &rat_int(chi), k, r).unwrap();
            assert_eq!(rat_int(12) * &c.chi, &c.k2 + &c.c2);
        }
    }

    #[test]
    fn triple_cover_instances() {
        // The blown-up base: K^2 = 0, c2 = 12, chi = 1, r = 6.
        let c = triple_cover_invariants(&rat_int(0), &rat_int(12), &rat_int(1), 6).unwrap();
        assert_eq!((c.k2, c.c2, c.chi), (rat_int(0), rat_int(12), rat_int(1)));
        // Unramified: straight multiplication by 3.
        let c = triple_cover_invariants(&rat_int(2), &rat_int(10), &rat_int(1), 0).unwrap();
        assert_eq!((c.k2, c.c2, c.chi), (rat_int(6), rat_int(30), rat_int(3)));
        assert_eq!(
            triple_cover_invariants(&rat_int(0), &rat_int(12), &rat_int(1), 4),
            Err(Error::BranchNotDivisible(4))
        );
    }

    #[test]
    fn closure_forcing() {
        let incidence = vec![vec![0, 0, 1, 1, 0, 0], vec![0, 0, 0, 0, 1, 1]];
        // v3 nonzero, v4 zero: E1 pairing = 1, forces C4.
        let report = branch_closure_f3(&incidence, &[0, 0, 1, 0, 0, 0]);
        assert!(!report.consistent);
        assert_eq!(report.forced, vec![3]);
        // All zero: consistent.
        let report = branch_closure_f3(&incidence, &[0, 0, 0, 0, 0, 0]);
        assert!(report.consistent);
        // Balanced assignment: consistent.
        let report = branch_closure_f3(&incidence, &[1, 2, 1, 2, 1, 2]);
        assert!(report.consistent);
    }

    #[test]
    fn admissible_branches_force_r_six() {
        let incidence = vec![vec![0, 0, 1, 1, 0, 0], vec![0, 0, 0, 0, 1, 1]];
        let assignments = admissible_triple_branches(&incidence, 6);
        assert!(!assignments.is_empty());
        for v in &assignments {
            assert_eq!(v.iter().filter(|&&x| x != 0).count(), 6, "{:?}", v);
        }
    }

    #[test]
    fn ledgers() {
        let start = CoverInvariants {
            k2: rat_int(0),
            c2: rat_int(12),
            chi: rat_int(1),
            irregularity_bound: None,
        };
        let end = blowdown_ledger(&start, 8);
        assert_eq!((end.k2, end.c2, end.chi), (rat_int(8), rat_int(4), rat_int(1)));
        let same = blowdown_ledger(
            &CoverInvariants {
                k2: rat_int(8),
                c2: rat_int(4),
                chi: rat_int(1),
                irregularity_bound: None,
            },
            0,
        );
        assert_eq!(same.k2, rat_int(8));
        // Uncontracted double cover bookkeeping: (4, 8) with 4 branch
        // nodes, then contracting the 4 (-1)-curves reaches (8, 4).
        let uncontracted = CoverInvariants {
            k2: rat_int(4),
            c2: rat_int(8),
            chi: rat_int(1),
            irregularity_bound: None,
        };
        let contracted = blowdown_ledger(&uncontracted, 4);
        assert_eq!((contracted.k2, contracted.c2), (rat_int(8), rat_int(4)));
    }

    #[test]
    fn pipelines_end_on_fake_quadric_signature() {
        for k2 in [4i64, 2] {
            let steps = double_cover_pipeline(k2).unwrap();
            let last = &steps.last().unwrap().invariants;
            assert_eq!(
                (last.k2.clone(), last.c2.clone(), last.chi.clone()),
                (rat_int(8), rat_int(4), rat_int(1))
            );
        }
        let steps = triple_cover_pipeline().unwrap();
        let last = &steps.last().unwrap().invariants;
        assert_eq!(
            (last.k2.clone(), last.c2.clone(), last.chi.clone()),
            (rat_int(8), rat_int(4), rat_int(1))
        );
        // Every intermediate step satisfies Noether.
        for step in &steps {
            assert_eq!(
                rat_int(12) * &step.invariants.chi,
                &step.invariants.k2 + &step.invariants.c2,
                "step '{}'",
                step.label
            );
        }
    }
}
