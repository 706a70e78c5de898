//! Construction of `F_{n,N}`, the three consecutive terms of `F_N` centered
//! on `n/N`, without enumerating `F_N`.
//!
//! The map `a/b ↦ b/(ρb + a)` sends a consecutive triple of `F_M` centered
//! on a term with denominator `M` to a consecutive triple of `F_{ρM + m}`,
//! reversing its order. Running the Euclidean reduction `n/N → (N mod n)/n`
//! down to some `1/T` and then lifting the base triple `0/1, 1/T, 1/(T−1)`
//! back through the same quotients yields `F_{n,N}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FareyError, Result};
use crate::fraction::{delta, gcd, mediant, FareyOrder, Fraction};

/// Validates that `n/N` can be the center of a triple.
pub(crate) fn check_center(n: u64, order: FareyOrder) -> Result<Fraction> {
    let big_n = order.get();
    if big_n < 2 || n == 0 || n >= big_n {
        return Err(FareyError::InvalidCenter { num: n, den: big_n });
    }
    if gcd(n, big_n) != 1 {
        return Err(FareyError::NotIrreducible { num: n, den: big_n });
    }
    Fraction::reduced(n, big_n)
}

fn check_center_fraction(center: Fraction) -> Result<FareyOrder> {
    let order = FareyOrder::new(center.den())?;
    check_center(center.num(), order)?;
    Ok(order)
}

/// Three consecutive terms `left, center, right` of `F_N` with `center = n/N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct FareyTriple {
    left: Fraction,
    center: Fraction,
    right: Fraction,
    order: FareyOrder,
}

#[derive(Deserialize)]
struct RawTriple {
    left: Fraction,
    center: Fraction,
    right: Fraction,
    order: FareyOrder,
}

impl TryFrom<RawTriple> for FareyTriple {
    type Error = FareyError;

    fn try_from(raw: RawTriple) -> Result<Self> {
        FareyTriple::new(raw.left, raw.center, raw.right, raw.order)
    }
}

impl FareyTriple {
    /// Checks every triple invariant before accepting the parts.
    pub fn new(left: Fraction, center: Fraction, right: Fraction, order: FareyOrder) -> Result<Self> {
        let t = FareyTriple {
            left,
            center,
            right,
            order,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn left(&self) -> Fraction {
        self.left
    }

    pub fn center(&self) -> Fraction {
        self.center
    }

    pub fn right(&self) -> Fraction {
        self.right
    }

    pub fn order(&self) -> FareyOrder {
        self.order
    }

    pub fn parts(&self) -> (Fraction, Fraction, Fraction) {
        (self.left, self.center, self.right)
    }

    /// Re-checks the invariants: unit determinants on both sides, center
    /// denominator equal to the order, outer denominators below it, and
    /// numerators and denominators of the outer terms summing to the center.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(FareyError::InvalidTriple(msg));
        let (l, c, r) = self.parts();
        let n = self.order.get();
        if c.den() != n || c.num() == 0 {
            return bad(format!("center {c} is not n/{n} with n >= 1"));
        }
        if !(l < c && c < r) {
            return bad(format!("{l}, {c}, {r} not increasing"));
        }
        if delta(l, c)? != 1 || delta(c, r)? != 1 {
            return bad(format!("{l}, {c}, {r} not unimodular"));
        }
        if l.den() >= n || r.den() >= n {
            return bad(format!("outer denominators of {l}, {r} not below {n}"));
        }
        let sum = |a: u64, b: u64| u128::from(a) + u128::from(b);
        if sum(l.num(), r.num()) != c.num().into() || sum(l.den(), r.den()) != c.den().into() {
            return bad(format!("{l} and {r} do not sum to {c}"));
        }
        debug_assert_eq!(mediant(l, r), Ok(c));
        Ok(())
    }
}

impl fmt::Display for FareyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.left, self.center, self.right)
    }
}

/// Euclidean reduction of a center `n/N` down to `1/T`.
///
/// Each step takes `ρ = ⌊N/n⌋` and moves to `(N − ρn)/n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionChain {
    quotients: Vec<u64>,
    terminal: u64,
    start: Fraction,
}

impl ReductionChain {
    /// Rebuilds a chain from its quotients and terminal, replaying the lift
    /// to recover the starting fraction.
    pub fn from_parts(quotients: Vec<u64>, terminal: u64) -> Result<Self> {
        if terminal < 2 {
            return Err(FareyError::InvalidTerminal(terminal));
        }
        if quotients.contains(&0) {
            return Err(FareyError::InvalidRho);
        }
        let start = replay(&quotients, terminal)?;
        Ok(ReductionChain {
            quotients,
            terminal,
            start,
        })
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn terminal(&self) -> u64 {
        self.terminal
    }

    pub fn start(&self) -> Fraction {
        self.start
    }

    /// Number of reduction steps `k`.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Reconstructs the starting center from the quotients and terminal.
    pub fn replay(&self) -> Result<Fraction> {
        replay(&self.quotients, self.terminal)
    }
}

fn replay(quotients: &[u64], terminal: u64) -> Result<Fraction> {
    // n_i/N_i = 1/(ρ_i + n_{i+1}/N_{i+1}) = N_{i+1}/(ρ_i N_{i+1} + n_{i+1})
    let (mut n, mut big_n) = (1u64, terminal);
    for &rho in quotients.iter().rev() {
        let next = rho
            .checked_mul(big_n)
            .and_then(|v| v.checked_add(n))
            .ok_or(FareyError::Overflow("chain replay"))?;
        n = big_n;
        big_n = next;
    }
    Fraction::new(n, big_n)
}

/// Whether `x < y` are consecutive in `F_N`: `Δ(x, y) = 1` and
/// `max(b, b') <= N < b + b'`.
pub fn are_adjacent(x: Fraction, y: Fraction, order: FareyOrder) -> Result<bool> {
    if x >= y {
        return Err(FareyError::NotIncreasing {
            left: x.to_string(),
            right: y.to_string(),
        });
    }
    let n = u128::from(order.get());
    let (b, b2) = (u128::from(x.den()), u128::from(y.den()));
    Ok(delta(x, y)? == 1 && b.max(b2) <= n && n < b + b2)
}

fn lift(x: Fraction, rho: u64) -> Result<Fraction> {
    let den = rho
        .checked_mul(x.den())
        .and_then(|v| v.checked_add(x.num()))
        .ok_or(FareyError::Overflow("rho map"))?;
    // gcd(b, ρb + a) = gcd(b, a) = 1
    Fraction::reduced(x.den(), den)
}

/// Applies `a/b ↦ b/(ρb + a)` to each term and reverses the order.
///
/// The result is `F_{n',N'}` with `N' = ρN + n`.
pub fn rho_map(triple: &FareyTriple, rho: u64) -> Result<FareyTriple> {
    if rho == 0 {
        return Err(FareyError::InvalidRho);
    }
    let center = lift(triple.center, rho)?;
    let mapped = FareyTriple {
        left: lift(triple.right, rho)?,
        center,
        right: lift(triple.left, rho)?,
        order: FareyOrder::new(center.den())?,
    };
    debug_assert_eq!(mapped.validate(), Ok(()));
    Ok(mapped)
}

/// The quotient chain of a center `n/N` with `1 <= n < N`.
pub fn reduce_chain(center: Fraction) -> Result<ReductionChain> {
    check_center_fraction(center)?;
    let mut quotients = Vec::new();
    let (mut n, mut big_n) = (center.num(), center.den());
    while n != 1 {
        let rho = big_n / n;
        quotients.push(rho);
        (n, big_n) = (big_n - rho * n, n);
    }
    Ok(ReductionChain {
        quotients,
        terminal: big_n,
        start: center,
    })
}

/// `0/1, 1/T, 1/(T−1)`, the triple of `F_T` around `1/T`.
pub fn fundamental_triple(terminal: u64) -> Result<FareyTriple> {
    if terminal < 2 {
        return Err(FareyError::InvalidTerminal(terminal));
    }
    Ok(FareyTriple {
        left: Fraction::ZERO,
        center: Fraction::reduced(1, terminal)?,
        right: Fraction::reduced(1, terminal - 1)?,
        order: FareyOrder::new(terminal)?,
    })
}

/// Lifts the fundamental triple of the chain's terminal back to the chain's
/// start by applying [`rho_map`] with `ρ_k, ..., ρ_1`.
///
/// Each map reverses orientation, so for odd `k` the image of `0/1` ends up
/// on the right.
pub fn lift_triple(chain: &ReductionChain) -> Result<FareyTriple> {
    chain
        .quotients
        .iter()
        .rev()
        .try_fold(fundamental_triple(chain.terminal)?, |t, &rho| rho_map(&t, rho))
}

/// `F_{n,N}` via the reduction chain.
pub fn triple(n: u64, order: FareyOrder) -> Result<FareyTriple> {
    let center = check_center(n, order)?;
    if n == 1 {
        return fundamental_triple(order.get());
    }
    lift_triple(&reduce_chain(center)?)
}
