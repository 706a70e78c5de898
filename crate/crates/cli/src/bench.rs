//! Timing of triple queries: reduction chain, continued fraction, and scan.

use std::time::{Duration, Instant};

use farey_core::{
    exceeds_cap, gcd, reduce_chain, triple, triple_by_scan_capped, FareyOrder, FareyTriple,
    Fraction,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::verify::cf_triple;

/// min / median / max of a set of wall-clock samples, in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub min_ns: u64,
    pub median_ns: u64,
    pub max_ns: u64,
}

impl Timing {
    fn from_samples(mut samples: Vec<Duration>) -> Timing {
        samples.sort();
        let ns = |d: Duration| u64::try_from(d.as_nanos()).unwrap_or(u64::MAX);
        Timing {
            min_ns: ns(samples[0]),
            median_ns: ns(samples[samples.len() / 2]),
            max_ns: ns(samples[samples.len() - 1]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Timed(Timing),
    Skipped(String),
}

impl Cell {
    pub fn timing(&self) -> Option<&Timing> {
        match self {
            Cell::Timed(t) => Some(t),
            Cell::Skipped(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub order: u64,
    pub samples: u64,
    pub chain: Cell,
    pub cf: Cell,
    pub oracle: Cell,
    /// Mean chain length, two decimals.
    pub mean_chain_len: String,
    pub max_chain_len: u64,
    /// Whether every method that ran produced the same triple.
    pub agree: bool,
}

/// `count` numerators coprime to `order`, drawn uniformly.
pub fn sample_centers(order: u64, count: usize, rng: &mut StdRng) -> Vec<u64> {
    assert!(order >= 2);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..order);
        if gcd(n, order) == 1 {
            out.push(n);
        }
    }
    out
}

fn time_method<F>(centers: &[u64], mut f: F) -> (Cell, Vec<FareyTriple>)
where
    F: FnMut(u64) -> farey_core::Result<FareyTriple>,
{
    let mut samples = Vec::with_capacity(centers.len());
    let mut results = Vec::with_capacity(centers.len());
    for &n in centers {
        let start = Instant::now();
        let r = f(n);
        samples.push(start.elapsed());
        match r {
            Ok(t) => results.push(t),
            Err(e) => return (Cell::Skipped(e.to_string()), Vec::new()),
        }
    }
    (Cell::Timed(Timing::from_samples(samples)), results)
}

/// One row per order; `reps` sampled centers per order.
pub fn run(orders: &[u64], reps: usize, cap: u64, seed: u64) -> farey_core::Result<Vec<BenchRow>> {
    let reps = reps.max(1);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(orders.len());
    for &n in orders {
        let order = FareyOrder::new(n)?;
        if n < 2 {
            return Err(farey_core::FareyError::InvalidCenter { num: 1, den: n });
        }
        let centers = sample_centers(n, reps, &mut rng);

        let lens = centers
            .iter()
            .map(|&k| reduce_chain(Fraction::reduced(k, n)?).map(|c| c.len() as u64))
            .collect::<farey_core::Result<Vec<_>>>()?;
        let mean_len = lens.iter().sum::<u64>() as f64 / lens.len() as f64;

        let (chain, chain_out) = time_method(&centers, |k| triple(k, order));
        let (cf, cf_out) = time_method(&centers, |k| cf_triple(k, order));
        let (oracle, oracle_out) = if exceeds_cap(order, cap) {
            (Cell::Skipped(format!("skipped (F_{n} exceeds cap {cap})")), Vec::new())
        } else {
            time_method(&centers, |k| triple_by_scan_capped(k, order, cap))
        };

        let agree = chain_out == cf_out && (oracle_out.is_empty() || oracle_out == chain_out);
        rows.push(BenchRow {
            order: n,
            samples: reps as u64,
            chain,
            cf,
            oracle,
            mean_chain_len: format!("{mean_len:.2}"),
            max_chain_len: lens.iter().copied().max().unwrap_or(0),
            agree,
        });
    }
    Ok(rows)
}

fn fmt_cell(cell: &Cell) -> String {
    match cell {
        Cell::Timed(t) => format!("{:.3}", t.median_ns as f64 / 1000.0),
        Cell::Skipped(_) => "skipped".to_string(),
    }
}

/// Fixed-width table of median latencies in microseconds.
pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>16} {:>8} {:>14} {:>14} {:>14} {:>10} {:>9} {:>6}\n",
        "order", "samples", "chain_us", "cf_us", "oracle_us", "mean_len", "max_len", "agree"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>16} {:>8} {:>14} {:>14} {:>14} {:>10} {:>9} {:>6}\n",
            r.order,
            r.samples,
            fmt_cell(&r.chain),
            fmt_cell(&r.cf),
            fmt_cell(&r.oracle),
            r.mean_chain_len,
            r.max_chain_len,
            r.agree
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_run_every_method() {
        let rows = run(&[5, 1000], 5, farey_core::DEFAULT_CAP, 1).unwrap();
        for r in &rows {
            assert!(r.chain.timing().is_some());
            assert!(r.cf.timing().is_some());
            assert!(r.oracle.timing().is_some());
            assert!(r.agree);
        }
    }

    #[test]
    fn huge_order_skips_oracle() {
        let rows = run(&[1_000_000_000_000], 20, farey_core::DEFAULT_CAP, 7).unwrap();
        let r = &rows[0];
        assert!(r.chain.timing().is_some());
        assert!(r.oracle.timing().is_none());
        assert!(r.max_chain_len <= 60);
        assert!(render_table(&rows).contains("skipped"));
    }

    #[test]
    fn order_one_is_rejected() {
        assert!(run(&[1], 3, 100, 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rows = run(&[5, 1_000_000_000_000], 3, farey_core::DEFAULT_CAP, 3).unwrap();
        let json = serde_json::to_string(&rows).unwrap();
        let back: Vec<BenchRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rows);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
