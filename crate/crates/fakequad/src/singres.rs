//! Cyclic quotient singularity calculus.
//!
//! An A_{n,q} singularity is the quotient of C^2 by (x, y) -> (zeta x,
//! zeta^q y) with zeta a primitive n-th root of unity and gcd(n, q) = 1.
//! It is resolved by a chain of rational curves C_i with C_i^2 = -n_i,
//! where the n_i >= 2 come from the Hirzebruch-Jung continued fraction
//!
//! ```text
//! n/q = [n_1, [n_2, ..., n_k]] = n_1 - 1/(n_2 - 1/(...))
//! ```
//!
//! The discrepancies a_i in K_Z = pi*K_X - sum a_i C_i solve M a = b with
//! M the chain intersection matrix (M_ii = -n_i, M_{i,i+-1} = 1) and
//! b_i = 2 - n_i; each singularity then shifts K^2 by a.b <= 0 and the
//! Euler number by the chain length.

use std::fmt;

use num_traits::Zero;

use crate::arith::{gcd, inv_mod};
use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};

/// An A_{n,q} cyclic quotient singularity in canonical form
/// (q replaced by min(q, q^-1 mod n), so A_{n,q} = A_{n,q^-1} get one name).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingularityType {
    n: u64,
    q: u64,
}

impl SingularityType {
    /// Canonicalize A_{n,q}; errors unless gcd(n, q) = 1 and 1 <= q < n.
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n < 2 || q == 0 || q >= n {
            return Err(Error::OutOfRange(format!(
                "A({},{}) requires n >= 2 and 1 <= q < n",
                n, q
            )));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime(n, q));
        }
        let qinv = inv_mod(q, n).expect("coprime");
        Ok(SingularityType { n, q: q.min(qinv) })
    }

    /// The du Val point A_{n-1} = A_{n, n-1}.
    pub fn du_val(index: u64) -> Self {
        SingularityType::new(index + 1, index).expect("du Val data is valid")
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// True when the resolution consists of (-2)-curves only.
    pub fn is_du_val(&self) -> bool {
        inv_mod(self.q, self.n) == Some(self.n - 1)
    }

    /// The Hirzebruch-Jung chain of self-intersection numbers, from the
    /// greedy ceiling-division expansion of n/q.
    pub fn hj_chain(&self) -> ExceptionalChain {
        hj_expand(self.n, self.q)
    }

    /// Contribution of this singularity to K^2 of the minimal resolution.
    pub fn delta_k2(&self) -> Rational {
        self.hj_chain().delta_k2()
    }

    /// Contribution to the Euler number: the number of exceptional curves.
    pub fn delta_e(&self) -> u64 {
        self.hj_chain().len() as u64
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_du_val() {
            write!(f, "A{}", self.n - 1)
        } else {
            write!(f, "A({},{})", self.n, self.q)
        }
    }
}

/// Greedy expansion of n/q with every entry >= 2 (n, q need not be reduced
/// to canonical singularity form).
pub fn hj_expand(n: u64, q: u64) -> ExceptionalChain {
    let mut chain = Vec::new();
    let (mut n, mut q) = (n, q);
    while q > 0 {
        let a = n.div_ceil(q);
        chain.push(a);
        let next_q = a * q - n;
        n = q;
        q = next_q;
    }
    ExceptionalChain { selfints: chain }
}

/// The exceptional chain of a resolution: curve C_i has C_i^2 = -selfints[i],
/// consecutive curves meet once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalChain {
    selfints: Vec<u64>,
}

impl ExceptionalChain {
    pub fn from_selfints(selfints: Vec<u64>) -> Result<Self> {
        if selfints.iter().any(|&n| n < 2) {
            return Err(Error::OutOfRange("chain entries must be >= 2".to_string()));
        }
        Ok(ExceptionalChain { selfints })
    }

    pub fn selfints(&self) -> &[u64] {
        &self.selfints
    }

    pub fn len(&self) -> usize {
        self.selfints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selfints.is_empty()
    }

    /// Evaluate the continued fraction [n_1, [n_2, ...]] back to n/q.
    pub fn evaluate(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        for &n in self.selfints.iter().rev() {
            let n = rat_int(n as i64);
            acc = Some(match acc {
                None => n,
                Some(prev) => n - rat_int(1) / prev,
            });
        }
        acc.expect("chain is nonempty")
    }

    /// Discrepancies a_i: the unique solution of M a = b with b_i = 2 - n_i,
    /// solved by sweeping the tridiagonal system. All a_i lie in [0, 1).
    pub fn discrepancies(&self) -> Vec<Rational> {
        let k = self.selfints.len();
        if k == 0 {
            return Vec::new();
        }
        let mut diag: Vec<Rational> = self
            .selfints
            .iter()
            .map(|&n| rat_int(-(n as i64)))
            .collect();
        let mut rhs: Vec<Rational> = self
            .selfints
            .iter()
            .map(|&n| rat_int(2 - n as i64))
            .collect();
        for i in 1..k {
            let factor = rat_int(1) / diag[i - 1].clone();
            diag[i] = diag[i].clone() - &factor;
            let adj = factor * rhs[i - 1].clone();
            rhs[i] = rhs[i].clone() - adj;
        }
        let mut a = vec![Rational::zero(); k];
        a[k - 1] = rhs[k - 1].clone() / diag[k - 1].clone();
        for i in (0..k - 1).rev() {
            a[i] = (rhs[i].clone() - a[i + 1].clone()) / diag[i].clone();
        }
        a
    }

    /// a . b = the K^2 contribution of the chain; always <= 0, and 0 exactly
    /// for a chain of (-2)-curves.
    pub fn delta_k2(&self) -> Rational {
        let a = self.discrepancies();
        self.selfints
            .iter()
            .zip(&a)
            .map(|(&n, ai)| ai * rat_int(2 - n as i64))
            .sum()
    }

    /// Residual of M a - b after substituting candidate discrepancies;
    /// exposed so the defining linear system can be re-checked exactly.
    pub fn adjunction_residual(&self, a: &[Rational]) -> Vec<Rational> {
        let k = self.selfints.len();
        assert_eq!(a.len(), k);
        (0..k)
            .map(|i| {
                let mut v = rat_int(-(self.selfints[i] as i64)) * &a[i];
                if i > 0 {
                    v += &a[i - 1];
                }
                if i + 1 < k {
                    v += &a[i + 1];
                }
                v - rat_int(2 - self.selfints[i] as i64)
            })
            .collect()
    }

    pub fn reversed(&self) -> ExceptionalChain {
        let mut selfints = self.selfints.clone();
        selfints.reverse();
        ExceptionalChain { selfints }
    }
}

impl fmt::Display for ExceptionalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.selfints.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", n)?;
        }
        write!(f, "]")
    }
}

/// Full resolution data of one singularity.
#[derive(Clone, Debug)]
pub struct ResolutionData {
    pub chain: ExceptionalChain,
    pub discrepancies: Vec<Rational>,
    pub delta_k2: Rational,
    pub delta_e: u64,
}

pub fn resolve(s: &SingularityType) -> ResolutionData {
    let chain = s.hj_chain();
    let discrepancies = chain.discrepancies();
    let delta_k2 = chain.delta_k2();
    let delta_e = chain.len() as u64;
    ResolutionData {
        chain,
        discrepancies,
        delta_k2,
        delta_e,
    }
}

/// Parse singularity notation: "A(10,3)", "A 10 3", "A10,3", or the du Val
/// shorthand "A9" meaning A_{10,9}.
pub fn parse_singularity(s: &str) -> Result<SingularityType> {
    let body = s
        .trim()
        .strip_prefix(['A', 'a'])
        .ok_or_else(|| Error::OutOfRange(format!("cannot parse singularity '{}'", s)))?;
    let body = body.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = body.split([',', ' ']).filter(|t| !t.is_empty()).collect();
    let nums: Vec<u64> = parts
        .iter()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::OutOfRange(format!("cannot parse singularity '{}'", s)))
        })
        .collect::<Result<_>>()?;
    match nums.as_slice() {
        [index] if *index >= 1 => Ok(SingularityType::du_val(*index)),
        [n, q] => SingularityType::new(*n, *q),
        _ => Err(Error::OutOfRange(format!(
            "cannot parse singularity '{}'",
            s
        ))),
    }
}
