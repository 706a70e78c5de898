//! Brute-force Farey sequences.
//!
//! This module is the ground truth that every fast path in the crate is
//! checked against. It walks `F_N` term by term with the classical
//! next-term recurrence: if `a/b < c/d` are consecutive in `F_N`, the term
//! after `c/d` is `(kc - a)/(kd - b)` with `k = ⌊(N + b)/d⌋`.

use std::fmt;

use crate::error::{FareyError, Result};
use crate::fraction::{delta, mediant, FareyOrder, Fraction};
use crate::subsequence::{check_center, FareyTriple};

/// Default bound on the number of terms an enumeration may produce.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Streams the terms of `F_N` in increasing order, `0/1` through `1/1`.
#[derive(Debug, Clone)]
pub struct FareyIter {
    order: u128,
    prev: (u128, u128),
    cur: (u128, u128),
    started: bool,
    done: bool,
}

impl FareyIter {
    pub fn new(order: FareyOrder) -> Self {
        let n = u128::from(order.get());
        FareyIter {
            order: n,
            prev: (0, 1),
            cur: (1, n),
            started: false,
            done: false,
        }
    }
}

impl Iterator for FareyIter {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        if self.done {
            return None;
        }
        let (a, b) = if !self.started {
            self.started = true;
            self.prev
        } else {
            let (a, b) = self.cur;
            if a == b {
                self.done = true;
            } else {
                let k = (self.order + self.prev.1) / b;
                let next = (k * a - self.prev.0, k * b - self.prev.1);
                self.prev = self.cur;
                self.cur = next;
            }
            (a, b)
        };
        // every term has den <= order, which came from a u64
        Some(Fraction::reduced(a as u64, b as u64).expect("recurrence yields reduced terms"))
    }
}

/// Exact `|F_N| = 1 + φ(1) + ... + φ(N)`, using a totient sieve of size `N`.
pub fn sequence_length(order: FareyOrder) -> u128 {
    let n = usize::try_from(order.get()).expect("order too large to sieve");
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    1 + phi[1..].iter().map(|&v| u128::from(v)).sum::<u128>()
}

/// Whether `F_N` has more than `cap` terms.
///
/// `F_N` always contains the `N + 1` terms `0/1, 1/N, ..., 1/1`, so orders
/// at or above the cap are rejected without sieving.
pub fn exceeds_cap(order: FareyOrder, cap: u64) -> bool {
    order.get() >= cap || sequence_length(order) > u128::from(cap)
}

/// A complete Farey sequence, or an externally supplied candidate for one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareySequence {
    pub order: FareyOrder,
    pub terms: Vec<Fraction>,
}

impl FareySequence {
    /// Wraps an arbitrary term list; use [`verify_properties`] to check it.
    pub fn from_terms(order: FareyOrder, terms: Vec<Fraction>) -> Self {
        FareySequence { order, terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `F_N` under the default cap.
pub fn enumerate(order: FareyOrder) -> Result<FareySequence> {
    enumerate_capped(order, DEFAULT_CAP)
}

pub fn enumerate_capped(order: FareyOrder, cap: u64) -> Result<FareySequence> {
    if exceeds_cap(order, cap) {
        return Err(FareyError::CapExceeded {
            order: order.get(),
            cap,
        });
    }
    let len = sequence_length(order) as usize;
    let mut terms = Vec::with_capacity(len);
    terms.extend(FareyIter::new(order));
    debug_assert_eq!(terms.len(), len);
    Ok(FareySequence { order, terms })
}

/// Which law of consecutive Farey terms a candidate sequence broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    TooShort,
    FirstTermNotZero(Fraction),
    LastTermNotOne(Fraction),
    /// `a'b - ab' != 1` for a consecutive pair.
    Unimodularity {
        left: Fraction,
        right: Fraction,
        delta: i128,
    },
    DenominatorAboveOrder(Fraction),
    /// `b + b' <= N` for a consecutive pair.
    DenominatorSum { left: Fraction, right: Fraction },
    /// The middle of three consecutive terms is not the mediant of the outer two.
    Mediant {
        left: Fraction,
        center: Fraction,
        right: Fraction,
    },
    /// The neighbors of a term `n/N` do not sum to `n` and `N`.
    NeighborSums {
        left: Fraction,
        center: Fraction,
        right: Fraction,
    },
}

/// The first broken property and the index of the term where it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for PropertyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ViolationKind::*;
        write!(f, "at index {}: ", self.index)?;
        match &self.kind {
            TooShort => write!(f, "sequence has fewer than two terms"),
            FirstTermNotZero(x) => write!(f, "first term is {x}, expected 0/1"),
            LastTermNotOne(x) => write!(f, "last term is {x}, expected 1/1"),
            Unimodularity { left, right, delta } => {
                write!(f, "delta({left}, {right}) = {delta}, expected 1")
            }
            DenominatorAboveOrder(x) => write!(f, "{x} has denominator above the order"),
            DenominatorSum { left, right } => {
                write!(f, "denominators of {left}, {right} sum to at most the order")
            }
            Mediant {
                left,
                center,
                right,
            } => write!(f, "{center} is not the mediant of {left} and {right}"),
            NeighborSums {
                left,
                center,
                right,
            } => write!(f, "neighbors {left}, {right} of {center} do not sum to it"),
        }
    }
}

impl std::error::Error for PropertyViolation {}

/// Tally of what [`verify_properties`] checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropertyReport {
    pub terms: usize,
    pub pairs: usize,
    pub triples: usize,
    pub centers: usize,
}

/// Checks the consecutive-term laws of `F_N` on `seq`.
///
/// For each pair: unit determinant, both denominators at most `N`, and their
/// sum above `N`. For each triple: the middle is the mediant of the outer
/// terms. For each term `n/N` (when `N >= 2`): its neighbors' numerators sum
/// to `n` and denominators to `N`, each strictly below `N`.
///
/// Together the pair laws imply the list is strictly increasing and
/// complete, since any missing `c/d` between unimodular neighbors would need
/// `d >= b + b' > N`.
pub fn verify_properties(seq: &FareySequence) -> std::result::Result<PropertyReport, PropertyViolation> {
    let n = seq.order.get();
    let terms = &seq.terms;
    let fail = |index, kind| Err(PropertyViolation { index, kind });
    if terms.len() < 2 {
        return fail(0, ViolationKind::TooShort);
    }
    if terms[0] != Fraction::ZERO {
        return fail(0, ViolationKind::FirstTermNotZero(terms[0]));
    }
    let mut report = PropertyReport {
        terms: terms.len(),
        ..Default::default()
    };
    for i in 1..terms.len() {
        let (left, right) = (terms[i - 1], terms[i]);
        for x in [left, right] {
            if x.den() > n {
                return fail(i, ViolationKind::DenominatorAboveOrder(x));
            }
        }
        // denominators are bounded by the order here, so delta cannot overflow
        let d = delta(left, right).expect("bounded denominators");
        if d != 1 {
            return fail(i, ViolationKind::Unimodularity { left, right, delta: d });
        }
        if u128::from(left.den()) + u128::from(right.den()) <= u128::from(n) {
            return fail(i, ViolationKind::DenominatorSum { left, right });
        }
        report.pairs += 1;

        if i >= 2 {
            let outer = terms[i - 2];
            if mediant(outer, right).ok() != Some(left) {
                return fail(
                    i - 1,
                    ViolationKind::Mediant {
                        left: outer,
                        center: left,
                        right,
                    },
                );
            }
            report.triples += 1;
            if n >= 2 && left.den() == n {
                let sums_ok = outer.num() + right.num() == left.num()
                    && outer.den() + right.den() == n
                    && outer.num() <= left.num()
                    && right.num() <= left.num()
                    && outer.den() < n
                    && right.den() < n;
                if !sums_ok {
                    return fail(
                        i - 1,
                        ViolationKind::NeighborSums {
                            left: outer,
                            center: left,
                            right,
                        },
                    );
                }
                report.centers += 1;
            }
        }
    }
    let last = terms[terms.len() - 1];
    if last != Fraction::ONE {
        return fail(terms.len() - 1, ViolationKind::LastTermNotOne(last));
    }
    Ok(report)
}

/// `F_{n,N}` read off the enumeration of `F_N` under the default cap.
pub fn triple_by_scan(n: u64, order: FareyOrder) -> Result<FareyTriple> {
    triple_by_scan_capped(n, order, DEFAULT_CAP)
}

/// Scans `F_N` for `n/N`, visiting at most `cap` terms.
pub fn triple_by_scan_capped(n: u64, order: FareyOrder, cap: u64) -> Result<FareyTriple> {
    let center = check_center(n, order)?;
    let cap_err = FareyError::CapExceeded {
        order: order.get(),
        cap,
    };
    let mut iter = FareyIter::new(order);
    let mut left = iter.next().expect("F_N starts at 0/1");
    let mut visited: u64 = 1;
    for term in iter.by_ref() {
        visited += 1;
        if visited > cap {
            return Err(cap_err);
        }
        if term == center {
            let right = iter.next().expect("n/N < 1 is never the last term");
            return FareyTriple::new(left, center, right, order);
        }
        left = term;
    }
    unreachable!("every irreducible n/N with N >= 2 is a term of F_N")
}

/// Every `F_{n,N}` in an already enumerated `F_N`, in increasing `n`.
pub fn center_triples(seq: &FareySequence) -> Vec<FareyTriple> {
    let n = seq.order.get();
    seq.terms
        .windows(3)
        .filter(|w| w[1].den() == n)
        .map(|w| FareyTriple::new(w[0], w[1], w[2], seq.order).expect("enumerated window"))
        .collect()
}
