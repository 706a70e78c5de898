//! Cross-checks every fast path against enumeration, order by order.

use std::fmt;

use farey_core::{
    center_triples, enumerate_capped, left_neighbor, neighbors_from_cf, right_neighbor, triple,
    verify_properties, FareyError, FareyOrder, FareyTriple, Fraction, NeighborResult,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub type TripleFn = fn(u64, FareyOrder) -> farey_core::Result<FareyTriple>;
pub type NeighborFn = fn(Fraction, FareyOrder) -> farey_core::Result<NeighborResult>;

/// The implementations under test. Swapping one out is how the harness
/// itself gets tested.
#[derive(Clone, Copy)]
pub struct Methods {
    pub chain: TripleFn,
    pub cf: TripleFn,
    pub right: NeighborFn,
    pub left: NeighborFn,
}

pub fn cf_triple(n: u64, order: FareyOrder) -> farey_core::Result<FareyTriple> {
    neighbors_from_cf(Fraction::reduced(n, order.get())?)
}

impl Default for Methods {
    fn default() -> Self {
        Methods {
            chain: triple,
            cf: cf_triple,
            right: right_neighbor,
            left: left_neighbor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub orders: u64,
    pub terms: u64,
    pub triples: u64,
    pub neighbor_queries: u64,
    pub mismatches: u64,
}

impl VerifyReport {
    fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.orders += other.orders;
        self.terms += other.terms;
        self.triples += other.triples;
        self.neighbor_queries += other.neighbor_queries;
        self.mismatches += other.mismatches;
        self
    }
}

/// Why verification stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    Domain(FareyError),
    Mismatch {
        order: u64,
        detail: String,
        reproduce: String,
    },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Domain(e) => e.fmt(f),
            VerifyFailure::Mismatch {
                order,
                detail,
                reproduce,
            } => write!(f, "mismatch in F_{order}: {detail}; reproduce with: {reproduce}"),
        }
    }
}

fn mismatch(order: u64, detail: String, reproduce: String) -> VerifyFailure {
    VerifyFailure::Mismatch {
        order,
        detail,
        reproduce,
    }
}

fn check_triple(
    method: &str,
    f: TripleFn,
    expected: &FareyTriple,
    order: FareyOrder,
) -> Result<(), VerifyFailure> {
    let n = expected.center().num();
    let got = f(n, order);
    if got.as_ref() == Ok(expected) {
        return Ok(());
    }
    let got = match got {
        Ok(t) => t.to_string(),
        Err(e) => format!("error: {e}"),
    };
    Err(mismatch(
        order.get(),
        format!("triple {n} {order} by {method} gave {got}, enumeration gives {expected}"),
        format!("farey triple {n} {order} --method {method}"),
    ))
}

fn check_order(n: u64, cap: u64, methods: &Methods) -> Result<VerifyReport, VerifyFailure> {
    let order = FareyOrder::new(n).map_err(VerifyFailure::Domain)?;
    let seq = enumerate_capped(order, cap).map_err(VerifyFailure::Domain)?;
    verify_properties(&seq)
        .map_err(|v| mismatch(n, v.to_string(), format!("farey list {n}")))?;

    let triples = center_triples(&seq);
    for expected in &triples {
        check_triple("chain", methods.chain, expected, order)?;
        check_triple("cf", methods.cf, expected, order)?;
    }

    let mut queries = 0;
    for w in seq.terms.windows(2) {
        let (x, y) = (w[0], w[1]);
        let right = (methods.right)(x, order).map(|r| r.neighbor);
        if right != Ok(y) {
            return Err(mismatch(
                n,
                format!("next of {x} gave {right:?}, enumeration gives {y}"),
                format!("farey next {x} {n}"),
            ));
        }
        let left = (methods.left)(y, order).map(|r| r.neighbor);
        if left != Ok(x) {
            return Err(mismatch(
                n,
                format!("prev of {y} gave {left:?}, enumeration gives {x}"),
                format!("farey prev {y} {n}"),
            ));
        }
        queries += 2;
    }

    Ok(VerifyReport {
        orders: 1,
        terms: seq.len() as u64,
        triples: triples.len() as u64,
        neighbor_queries: queries,
        mismatches: 0,
    })
}

/// Checks orders `2..=max_order` on `jobs` threads (0 = rayon default).
///
/// On failure, returns the failure at the smallest order.
pub fn verify(
    max_order: u64,
    cap: u64,
    jobs: usize,
    methods: &Methods,
) -> Result<VerifyReport, VerifyFailure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let results: Vec<_> = pool.install(|| {
        (2..=max_order)
            .into_par_iter()
            .map(|n| check_order(n, cap, methods))
            .collect()
    });
    results
        .into_iter()
        .try_fold(VerifyReport::default(), |acc, r| r.map(|r| acc.merge(r)))
}
