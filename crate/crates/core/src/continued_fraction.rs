//! Finite simple continued fractions `[n0, n1, ..., nk]` for values in `[0, 1]`.
//!
//! The canonical expansion of a rational ends in a coefficient of at least 2
//! (or is a single coefficient). If the center of `F_{n,N}` expands to
//! `[0, c1, ..., ck, T]`, then its neighbors are `[0, c1, ..., ck]` and
//! `[0, c1, ..., ck, T − 1]`, the first landing on the left when `k` is even.
//! The second form may end in 1; it is evaluated as written.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FareyError, Result};
use crate::fraction::{FareyOrder, Fraction};
use crate::subsequence::{check_center, FareyTriple, ReductionChain};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ContinuedFraction {
    coeffs: Vec<u64>,
}

impl ContinuedFraction {
    /// Accepts any well-formed coefficient list; canonical form is not required.
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(FareyError::EmptyContinuedFraction);
        }
        if let Some(index) = coeffs.iter().skip(1).position(|&c| c == 0) {
            return Err(FareyError::InvalidCoefficient { index: index + 1 });
        }
        Ok(ContinuedFraction { coeffs })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.coeffs.len() == 1 || self.coeffs.last().is_some_and(|&c| c >= 2)
    }
}

impl TryFrom<Vec<u64>> for ContinuedFraction {
    type Error = FareyError;

    fn try_from(coeffs: Vec<u64>) -> Result<Self> {
        ContinuedFraction::new(coeffs)
    }
}

impl From<ContinuedFraction> for Vec<u64> {
    fn from(cf: ContinuedFraction) -> Vec<u64> {
        cf.coeffs
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason| FareyError::Parse {
            input: s.to_string(),
            reason,
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| parse_err("expected [n0,n1,...]"))?;
        let coeffs = inner
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| parse_err("bad coefficient"))?;
        ContinuedFraction::new(coeffs)
    }
}

/// Canonical expansion of `x` by the Euclidean algorithm.
pub fn cf_expand(x: Fraction) -> ContinuedFraction {
    let (mut p, mut q) = (x.num(), x.den());
    let mut coeffs = Vec::new();
    while q != 0 {
        coeffs.push(p / q);
        (p, q) = (q, p % q);
    }
    ContinuedFraction { coeffs }
}

/// Exact value via the convergent recurrence `h_i = n_i h_{i−1} + h_{i−2}`.
pub fn cf_evaluate(cf: &ContinuedFraction) -> Result<Fraction> {
    let overflow = || FareyError::Overflow("continued fraction evaluation");
    let (mut h, mut h_prev) = (1u64, 0u64);
    let (mut k, mut k_prev) = (0u64, 1u64);
    for &c in &cf.coeffs {
        let h_next = c
            .checked_mul(h)
            .and_then(|v| v.checked_add(h_prev))
            .ok_or_else(overflow)?;
        let k_next = c
            .checked_mul(k)
            .and_then(|v| v.checked_add(k_prev))
            .ok_or_else(overflow)?;
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
    }
    Fraction::new(h, k)
}

/// Folds a trailing 1 into the previous coefficient.
pub fn cf_canonicalize(cf: &ContinuedFraction) -> ContinuedFraction {
    let mut coeffs = cf.coeffs.clone();
    if coeffs.len() > 1 && coeffs.last() == Some(&1) {
        coeffs.pop();
        *coeffs.last_mut().expect("length was above 1") += 1;
    }
    ContinuedFraction { coeffs }
}

/// `[0, ρ1, ..., ρk, T]` for a reduction chain with terminal `T`.
pub fn cf_of_chain(chain: &ReductionChain) -> ContinuedFraction {
    let mut coeffs = Vec::with_capacity(chain.len() + 2);
    coeffs.push(0);
    coeffs.extend_from_slice(chain.quotients());
    coeffs.push(chain.terminal());
    ContinuedFraction { coeffs }
}

/// `F_{n,N}` for `center = n/N`, read off the expansion of the center.
pub fn neighbors_from_cf(center: Fraction) -> Result<FareyTriple> {
    let order = FareyOrder::new(center.den())?;
    check_center(center.num(), order)?;
    let mut coeffs = cf_expand(center).coeffs;
    // center < 1, so coeffs = [0, c1, ..., ck, T] with T >= 2
    let terminal = coeffs.pop().expect("center expansion has a tail");
    let k = coeffs.len() - 1;
    let primed = cf_evaluate(&ContinuedFraction {
        coeffs: coeffs.clone(),
    })?;
    coeffs.push(terminal - 1);
    let double_primed = cf_evaluate(&ContinuedFraction { coeffs })?;
    let (left, right) = if k.is_multiple_of(2) {
        (primed, double_primed)
    } else {
        (double_primed, primed)
    };
    FareyTriple::new(left, center, right, order)
}
