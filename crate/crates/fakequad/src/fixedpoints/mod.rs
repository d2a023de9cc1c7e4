//! Fixed-point configurations of automorphisms acting on a fake quadric.
//!
//! An automorphism of order n has only isolated fixed points; at a point
//! with stabilizer of order m the action on the tangent plane has
//! eigenvalues (zeta_m^a, zeta_m^b) with a, b prime to m (faithful, no
//! reflection), and the image in the quotient is an A_{m, a^-1 b}
//! singularity. Configurations are constrained by
//!
//! - the holomorphic Lefschetz formula: for every nontrivial power sigma^k,
//!   `1 = sum over fixed points of 1/det(1 - d sigma^k)`, evaluated
//!   exactly in a cyclotomic field;
//! - the topological count: every nontrivial power fixes 2 or 4 points,
//!   and exactly 4 when it is a square in the acting cyclic group;
//! - the orbit bookkeeping behind the quotient Euler number.
//!
//! [`enumerate`] performs the exhaustive searches for cyclic, Klein four,
//! and dihedral groups; this module holds the data types, the Lefschetz
//! evaluation, and Zhang's rational form of the fixed-point relation for
//! prime order, which serves as an independent oracle.

pub mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{divisors, gcd, inv_mod, is_prime, units_mod};
use crate::error::{Error, Result};
use crate::exact::{rat_int, root_of_unity, CyclotomicNumber, Rational};
use crate::singres::SingularityType;

pub use enumerate::{
    enumerate_cyclic, enumerate_cyclic_configs, enumerate_dihedral, enumerate_klein_four,
    impossibility, BranchOutcome, DihedralAnalysis, DihedralBranch, KleinFourAnalysis,
    ObstructionReport,
};

/// Tangent eigenvalue data (zeta_m^a, zeta_m^b) at a fixed point, stored as
/// the unordered exponent pair with a <= b; both exponents are units mod m
/// (the no-reflection rule for every power of the stabilizer generator).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EigenType {
    modulus: u64,
    a: u64,
    b: u64,
}

impl EigenType {
    pub fn new(modulus: u64, a: u64, b: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::OutOfRange(
                "eigenvalue modulus must be >= 2".to_string(),
            ));
        }
        let a = a % modulus;
        let b = b % modulus;
        if gcd(a, modulus) != 1 || gcd(b, modulus) != 1 {
            return Err(Error::OutOfRange(format!(
                "eigenvalue exponents ({}, {}) must be units mod {}",
                a, b, modulus
            )));
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Ok(EigenType { modulus, a, b })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponents(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    /// The type seen by the inverse generator: exponents negated.
    pub fn inverse(&self) -> EigenType {
        EigenType::new(self.modulus, self.modulus - self.a, self.modulus - self.b)
            .expect("negated units are units")
    }

    /// The quotient singularity A_{m, q} with q = a^-1 b, canonical.
    pub fn singularity(&self) -> SingularityType {
        let ainv = inv_mod(self.a, self.modulus).expect("unit");
        let q = (ainv * self.b) % self.modulus;
        SingularityType::new(self.modulus, q).expect("unit ratio is coprime")
    }
}

impl fmt::Display for EigenType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(z{}^{}, z{}^{})",
            self.modulus, self.a, self.modulus, self.b
        )
    }
}

/// A complete fixed-point configuration for a cyclic group <sigma> of
/// order n. `strata[d]` lists the sigma-orbits of size d consisting of
/// points with stabilizer <sigma^d> of order n/d, one [`EigenType`]
/// (with modulus n/d) per orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FixedConfig {
    n: u64,
    strata: BTreeMap<u64, Vec<EigenType>>,
}

impl FixedConfig {
    pub fn new(n: u64, strata: BTreeMap<u64, Vec<EigenType>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange("group order must be >= 2".to_string()));
        }
        for (d, orbits) in &strata {
            if *d == 0 || n % d != 0 || n / d < 2 {
                return Err(Error::OutOfRange(format!(
                    "stratum {} is not a proper divisor of {}",
                    d, n
                )));
            }
            for t in orbits {
                if t.modulus() != n / d {
                    return Err(Error::OutOfRange(format!(
                        "stratum {} carries eigenvalues of modulus {}, expected {}",
                        d,
                        t.modulus(),
                        n / d
                    )));
                }
            }
        }
        let mut strata = strata;
        for orbits in strata.values_mut() {
            orbits.sort();
        }
        strata.retain(|_, orbits| !orbits.is_empty());
        Ok(FixedConfig { n, strata })
    }

    /// Configuration whose points are all fixed by the full group.
    pub fn from_types(n: u64, types: Vec<EigenType>) -> Result<Self> {
        let mut strata = BTreeMap::new();
        strata.insert(1, types);
        FixedConfig::new(n, strata)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn strata(&self) -> &BTreeMap<u64, Vec<EigenType>> {
        &self.strata
    }

    /// Number of points fixed by sigma^k (k not divisible by n): the
    /// orbits of size d with d | gcd(k, n) contribute d points each.
    pub fn fixed_count(&self, k: u64) -> u64 {
        let g = gcd(k, self.n);
        self.strata
            .iter()
            .filter(|(d, _)| g % *d == 0)
            .map(|(d, orbits)| d * orbits.len() as u64)
            .sum()
    }

    /// Exact holomorphic Lefschetz sum for sigma^k:
    /// sum over points fixed by sigma^k of 1/((1 - zeta^(ak))(1 - zeta^(bk)))
    /// as an element of Q(zeta_n). Equals 1 for a genuine configuration.
    pub fn holomorphic_sum(&self, k: u64) -> Result<CyclotomicNumber> {
        if k % self.n == 0 {
            return Err(Error::IdentityPower);
        }
        let g = gcd(k, self.n);
        let mut sum = CyclotomicNumber::zero(self.n);
        let one = CyclotomicNumber::one(self.n);
        for (d, orbits) in &self.strata {
            if g % d != 0 {
                continue;
            }
            let weight = CyclotomicNumber::from_rational(self.n, rat_int(*d as i64));
            for t in orbits {
                // zeta_m^(a * k/d) = zeta_n^(a * k) for m = n/d.
                let (a, b) = t.exponents();
                let fa = &one - &root_of_unity(self.n, (a * k) as i64);
                let fb = &one - &root_of_unity(self.n, (b * k) as i64);
                let term = weight.div(&(&fa * &fb))?;
                sum = &sum + &term;
            }
        }
        Ok(sum)
    }

    /// The singularities on the quotient: one A_{m,q} per orbit.
    pub fn singularities(&self) -> SingularConfiguration {
        let mut config = SingularConfiguration::empty();
        for orbits in self.strata.values() {
            for t in orbits {
                config.add(t.singularity(), 1);
            }
        }
        config
    }

    /// Census of stabilizer orders: number of points with stabilizer of
    /// order s, for the Euler number of the quotient.
    pub fn census(&self) -> BTreeMap<u64, u64> {
        let mut census = BTreeMap::new();
        for (d, orbits) in &self.strata {
            let stab = self.n / d;
            *census.entry(stab).or_insert(0) += d * orbits.len() as u64;
        }
        census
    }
}

impl fmt::Display for FixedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, orbits) in &self.strata {
            for t in orbits {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                if *d == 1 {
                    write!(f, "{}", t)?;
                } else {
                    write!(f, "{}x{}", d, t)?;
                }
            }
        }
        Ok(())
    }
}

/// Free-function form of the Lefschetz evaluation.
pub fn holomorphic_sum(config: &FixedConfig, k: u64) -> Result<CyclotomicNumber> {
    config.holomorphic_sum(k)
}

/// A multiset of quotient singularities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SingularConfiguration {
    counts: BTreeMap<SingularityType, u64>,
}

impl SingularConfiguration {
    pub fn empty() -> Self {
        SingularConfiguration {
            counts: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: &[(SingularityType, u64)]) -> Self {
        let mut c = Self::empty();
        for (s, m) in pairs {
            c.add(*s, *m);
        }
        c
    }

    pub fn add(&mut self, s: SingularityType, count: u64) {
        if count > 0 {
            *self.counts.entry(s).or_insert(0) += count;
        }
    }

    pub fn counts(&self) -> &BTreeMap<SingularityType, u64> {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total_points(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Sum of the exceptional chain lengths.
    pub fn total_delta_e(&self) -> u64 {
        self.counts.iter().map(|(s, c)| c * s.delta_e()).sum()
    }

    /// Sum of the K^2 contributions.
    pub fn total_delta_k2(&self) -> Rational {
        self.counts
            .iter()
            .map(|(s, c)| s.delta_k2() * rat_int(*c as i64))
            .sum()
    }
}

impl fmt::Display for SingularConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "none");
        }
        let mut first = true;
        for (s, c) in &self.counts {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c > 1 {
                write!(f, "{}{}", c, s)?;
            } else {
                write!(f, "{}", s)?;
            }
        }
        Ok(())
    }
}

/// Parse a configuration like "4A1 + A(8,3) + 2A(8,5)" (the inverse of the
/// display form; a bare "none" gives the empty configuration).
pub fn parse_configuration(s: &str) -> Result<SingularConfiguration> {
    let s = s.trim();
    let mut config = SingularConfiguration::empty();
    if s.is_empty() || s == "none" {
        return Ok(config);
    }
    for term in s.split('+') {
        let term = term.trim();
        let split_at = term
            .find(['A', 'a'])
            .ok_or_else(|| Error::OutOfRange(format!("cannot parse term '{}'", term)))?;
        let (count_str, sing_str) = term.split_at(split_at);
        let count: u64 = if count_str.trim().is_empty() {
            1
        } else {
            count_str
                .trim()
                .parse()
                .map_err(|_| Error::OutOfRange(format!("bad multiplicity in '{}'", term)))?
        };
        config.add(crate::singres::parse_singularity(sing_str)?, count);
    }
    Ok(config)
}

/// Zhang coefficients a_i(p) for a prime-order automorphism:
///
/// ```text
/// a_i(p) = (1/(p-1)) * sum_{j=1}^{p-1} 1/((1 - xi^j)(1 - xi^(ij)))
/// ```
///
/// returned for i = 1..p-1 (index i-1). Each value is rational because
/// the defining sum is Galois-stable; it is evaluated exactly in Q(zeta_p).
pub fn zhang_coefficients(p: u64) -> Result<Vec<Rational>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let one = CyclotomicNumber::one(p);
    // inv[j] = 1/(1 - zeta^j), shared across all i.
    let mut inv = Vec::with_capacity(p as usize);
    inv.push(CyclotomicNumber::zero(p)); // j = 0 unused
    for j in 1..p {
        let f = &one - &root_of_unity(p, j as i64);
        inv.push(f.inv()?);
    }
    let mut out = Vec::with_capacity(p as usize - 1);
    for i in 1..p {
        let mut sum = CyclotomicNumber::zero(p);
        for j in 1..p {
            let term = &inv[j as usize] * &inv[((i * j) % p) as usize];
            sum = &sum + &term;
        }
        let total = sum.as_rational()?;
        out.push(total / rat_int(p as i64 - 1));
    }
    Ok(out)
}

/// A single Zhang coefficient a_i(p), gcd(i, p) = 1.
pub fn zhang_coefficient(p: u64, i: u64) -> Result<Rational> {
    if i % p == 0 {
        return Err(Error::NotCoprime(p, i));
    }
    Ok(zhang_coefficients(p)?[(i % p) as usize - 1].clone())
}

/// All nonnegative integer solutions (r_1, ..., r_{p-1}) of
/// sum r_i a_i(p) = 1 with sum r_i = num_points.
pub fn zhang_solutions(p: u64, num_points: u64) -> Result<Vec<Vec<u64>>> {
    if num_points != 2 && num_points != 4 {
        return Err(Error::OutOfRange(
            "fixed point count must be 2 or 4".to_string(),
        ));
    }
    let coeffs = zhang_coefficients(p)?;
    let mut solutions = Vec::new();
    let mut current = vec![0u64; coeffs.len()];
    search_solutions(
        &coeffs,
        num_points,
        Rational::zero(),
        0,
        &mut current,
        &mut solutions,
    );
    Ok(solutions)
}

fn search_solutions(
    coeffs: &[Rational],
    remaining: u64,
    acc: Rational,
    idx: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if idx == coeffs.len() {
        if remaining == 0 && acc.is_one() {
            out.push(current.clone());
        }
        return;
    }
    for r in 0..=remaining {
        current[idx] = r;
        let acc2 = &acc + &coeffs[idx] * rat_int(r as i64);
        search_solutions(coeffs, remaining - r, acc2, idx + 1, current, out);
    }
    current[idx] = 0;
}

/// Collapse Zhang count vectors into singularity multisets, using the
/// convention that r_i + r_k (for ik = 1 mod p) counts the A_{p,i} = A_{p,k}
/// points.
pub fn zhang_configurations(p: u64, num_points: u64) -> Result<Vec<SingularConfiguration>> {
    let mut configs: Vec<SingularConfiguration> = Vec::new();
    for solution in zhang_solutions(p, num_points)? {
        let mut config = SingularConfiguration::empty();
        for (idx, &count) in solution.iter().enumerate() {
            if count > 0 {
                let i = idx as u64 + 1;
                config.add(SingularityType::new(p, i)?, count);
            }
        }
        if !configs.contains(&config) {
            configs.push(config);
        }
    }
    configs.sort();
    Ok(configs)
}

/// The exponent pairs (a, b) available for points with stabilizer of
/// order m: unordered pairs of units.
pub(crate) fn eigen_alphabet(m: u64) -> Vec<EigenType> {
    let units = units_mod(m);
    let mut out = Vec::new();
    for (i, &a) in units.iter().enumerate() {
        for &b in units.iter().skip(i) {
            out.push(EigenType::new(m, a, b).expect("units"));
        }
    }
    out
}

pub(crate) fn proper_divisors(n: u64) -> Vec<u64> {
    divisors(n).into_iter().filter(|&d| d < n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn et(m: u64, a: u64, b: u64) -> EigenType {
        EigenType::new(m, a, b).unwrap()
    }

    #[test]
    fn eigen_type_normalization() {
        assert_eq!(et(8, 5, 3), et(8, 3, 5));
        // ratio for (3, 5): 3^-1 * 5 = 3 * 5 = 7 mod 8, self-inverse: A7.
        assert_eq!(et(8, 3, 5).singularity().to_string(), "A7");
        assert_eq!(
            et(8, 1, 3).singularity(),
            SingularityType::new(8, 3).unwrap()
        );
        assert!(EigenType::new(8, 2, 3).is_err());
        assert!(EigenType::new(4, 0, 1).is_err());
    }

    #[test]
    fn involution_lefschetz() {
        // Four points of type (1,1) mod 2: each term 1/4, sum 1.
        let config = FixedConfig::from_types(2, vec![et(2, 1, 1); 4]).unwrap();
        let s = config.holomorphic_sum(1).unwrap();
        assert_eq!(s.as_rational(), Ok(rat(1, 1)));
        // Two points sum to 1/2, not a valid configuration.
        let config = FixedConfig::from_types(2, vec![et(2, 1, 1); 2]).unwrap();
        assert_eq!(
            config.holomorphic_sum(1).unwrap().as_rational(),
            Ok(rat(1, 2))
        );
        assert_eq!(config.holomorphic_sum(2), Err(Error::IdentityPower));
    }

    #[test]
    fn order_six_lefschetz() {
        // One point (zeta6, zeta6), one (zeta6^5, zeta6^5), two (zeta6, zeta6^5).
        let config = FixedConfig::from_types(
            6,
            vec![et(6, 1, 1), et(6, 5, 5), et(6, 1, 5), et(6, 1, 5)],
        )
        .unwrap();
        for k in 1..6 {
            assert_eq!(
                config.holomorphic_sum(k).unwrap().as_rational(),
                Ok(rat(1, 1)),
                "k = {}",
                k
            );
        }
        assert_eq!(config.singularities().to_string(), "2A(6,1) + 2A5");
    }

    #[test]
    fn order_eight_summed_over_powers() {
        // 2A_{8,3} + 2A_{8,5} realized by {1,3},{5,7},{1,5},{3,7}; summing
        // the Lefschetz values over k = 1..7 gives 7.
        let config = FixedConfig::from_types(
            8,
            vec![et(8, 1, 3), et(8, 5, 7), et(8, 1, 5), et(8, 3, 7)],
        )
        .unwrap();
        let mut total = Rational::zero();
        for k in 1..8 {
            total += config.holomorphic_sum(k).unwrap().as_rational().unwrap();
        }
        assert_eq!(total, rat(7, 1));
        assert_eq!(config.singularities().to_string(), "2A(8,3) + 2A(8,5)");
    }

    #[test]
    fn census_and_counts() {
        // Order 4, two fixed points plus one 2-orbit with stabilizer <t^2>.
        let mut strata = BTreeMap::new();
        strata.insert(1, vec![et(4, 1, 3), et(4, 1, 3)]);
        strata.insert(2, vec![et(2, 1, 1)]);
        let config = FixedConfig::new(4, strata).unwrap();
        assert_eq!(config.fixed_count(1), 2);
        assert_eq!(config.fixed_count(2), 4);
        assert_eq!(config.fixed_count(3), 2);
        assert_eq!(config.census(), BTreeMap::from([(4, 2), (2, 2)]));
        assert_eq!(config.singularities().to_string(), "A1 + 2A3");
        for k in 1..4 {
            assert_eq!(
                config.holomorphic_sum(k).unwrap().as_rational(),
                Ok(rat(1, 1)),
                "k = {}",
                k
            );
        }
    }

    #[test]
    fn zhang_closed_forms() {
        // a_1(p) = (5-p)/12 and a_2(p) = (11-p)/24 for all odd primes <= 23.
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let coeffs = zhang_coefficients(p).unwrap();
            assert_eq!(coeffs[0], rat(5 - p as i64, 12), "a_1({})", p);
            if p > 3 {
                assert_eq!(coeffs[1], rat(11 - p as i64, 24), "a_2({})", p);
            }
        }
        assert_eq!(zhang_coefficient(5, 1).unwrap(), rat(0, 1));
        assert_eq!(zhang_coefficient(5, 4).unwrap(), rat(1, 2));
        assert_eq!(zhang_coefficient(5, 3).unwrap(), rat(1, 4));
        assert_eq!(zhang_coefficient(3, 2).unwrap(), rat(1, 3));
        assert_eq!(zhang_coefficient(5, 10), Err(Error::NotCoprime(5, 10)));
    }

    #[test]
    fn zhang_symmetry_under_inversion() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let coeffs = zhang_coefficients(p).unwrap();
            for i in 1..p {
                let k = inv_mod(i, p).unwrap();
                assert_eq!(
                    coeffs[i as usize - 1],
                    coeffs[k as usize - 1],
                    "a_{}({}) != a_{}({})",
                    i,
                    p,
                    k,
                    p
                );
            }
        }
    }

    #[test]
    fn zhang_solution_sets() {
        // p = 3: unique solution (2, 2).
        assert_eq!(zhang_solutions(3, 4).unwrap(), vec![vec![2, 2]]);
        // p = 2: an involution has 4 fixed points.
        assert_eq!(zhang_solutions(2, 4).unwrap(), vec![vec![4]]);
        // p = 5: (0,i,j,0) with i+j = 4, (1,i,j,1) with i+j = 2, (2,0,0,2).
        let mut sols = zhang_solutions(5, 4).unwrap();
        let mut expected: Vec<Vec<u64>> = Vec::new();
        for i in 0..=4 {
            expected.push(vec![0, i, 4 - i, 0]);
        }
        for i in 0..=2 {
            expected.push(vec![1, i, 2 - i, 1]);
        }
        expected.push(vec![2, 0, 0, 2]);
        sols.sort();
        expected.sort();
        assert_eq!(sols, expected);
        // Collapsed configurations: exactly three multisets.
        let configs = zhang_configurations(5, 4).unwrap();
        let strings: Vec<String> = configs.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            strings,
            vec!["A(5,1) + 2A(5,2) + A4", "2A(5,1) + 2A4", "4A(5,2)"]
        );
    }

    #[test]
    fn singular_configuration_display() {
        let c = SingularConfiguration::from_pairs(&[
            (SingularityType::new(2, 1).unwrap(), 4),
            (SingularityType::new(4, 3).unwrap(), 1),
            (SingularityType::new(4, 1).unwrap(), 1),
        ]);
        assert_eq!(c.to_string(), "4A1 + A(4,1) + A3");
        assert_eq!(c.total_points(), 6);
        assert_eq!(c.total_delta_e(), 4 + 1 + 3);
    }
}
