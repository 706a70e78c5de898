//! Neighbors of a fraction in `F_N` for arbitrary `N`, without enumeration.
//!
//! If `a0/b0` follows `a/b` in `F_b`, the pair `a/b, (la + a0)/(lb + b0)`
//! stays unimodular for every `l >= 0`, and is consecutive in `F_N` exactly
//! when `lb + b0 <= N < (l + 1)b + b0`. So `l = ⌊(N − b0)/b⌋`.

use serde::{Deserialize, Serialize};

use crate::continued_fraction::neighbors_from_cf;
use crate::error::{FareyError, Result};
use crate::fraction::{FareyOrder, Fraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NeighborResult {
    pub query: Fraction,
    pub order: FareyOrder,
    pub neighbor: Fraction,
    /// The multiplier `l`.
    pub steps: u64,
    pub side: Side,
}

/// The term after `x` in `F_b`, where `b` is the denominator of `x`.
pub fn base_right_neighbor(x: Fraction) -> Result<Fraction> {
    if x == Fraction::ONE {
        return Err(FareyError::NoRightNeighbor);
    }
    if x == Fraction::ZERO {
        return Ok(Fraction::ONE);
    }
    Ok(neighbors_from_cf(x)?.right())
}

fn check_member(x: Fraction, order: FareyOrder) -> Result<()> {
    if order.contains(x) {
        Ok(())
    } else {
        Err(FareyError::NotInSequence {
            fraction: x.to_string(),
            order: order.get(),
        })
    }
}

/// The term immediately after `x` in `F_N`.
pub fn right_neighbor(x: Fraction, order: FareyOrder) -> Result<NeighborResult> {
    if x == Fraction::ONE {
        return Err(FareyError::NoRightNeighbor);
    }
    check_member(x, order)?;
    let base = base_right_neighbor(x)?;
    let (a, b) = (x.num(), x.den());
    let (a0, b0) = (base.num(), base.den());
    // b0 <= b <= N
    let steps = (order.get() - b0) / b;
    let neighbor = if steps == 0 {
        base
    } else {
        let overflow = || FareyError::Overflow("right neighbor");
        let num = steps
            .checked_mul(a)
            .and_then(|v| v.checked_add(a0))
            .ok_or_else(overflow)?;
        // steps·b + b0 <= N, so the denominator fits
        Fraction::reduced(num, steps * b + b0)?
    };
    Ok(NeighborResult {
        query: x,
        order,
        neighbor,
        steps,
        side: Side::Right,
    })
}

/// The term immediately before `x` in `F_N`, via `t ↦ 1 − t`.
pub fn left_neighbor(x: Fraction, order: FareyOrder) -> Result<NeighborResult> {
    if x == Fraction::ZERO {
        return Err(FareyError::NoLeftNeighbor);
    }
    check_member(x, order)?;
    let mirrored = right_neighbor(x.complement(), order)?;
    Ok(NeighborResult {
        query: x,
        order,
        neighbor: mirrored.neighbor.complement(),
        steps: mirrored.steps,
        side: Side::Left,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::delta;
    use crate::oracle::enumerate;

    fn fr(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn order(n: u64) -> FareyOrder {
        FareyOrder::new(n).unwrap()
    }

    #[test]
    fn right_examples() {
        let r = right_neighbor(fr(9, 25), order(100)).unwrap();
        assert_eq!((r.neighbor, r.steps), (fr(31, 86), 3));
        let r = right_neighbor(fr(9, 25), order(25)).unwrap();
        assert_eq!((r.neighbor, r.steps), (fr(4, 11), 0));
        // l = ⌊(5 − 1)/2⌋ = 2, (2·1 + 1)/(2·2 + 1)
        let r = right_neighbor(fr(1, 2), order(5)).unwrap();
        assert_eq!((r.neighbor, r.steps), (fr(3, 5), 2));
        let r = right_neighbor(Fraction::ZERO, order(9)).unwrap();
        assert_eq!((r.neighbor, r.steps), (fr(1, 9), 8));
    }

    #[test]
    fn left_examples() {
        assert_eq!(left_neighbor(fr(9, 25), order(25)).unwrap().neighbor, fr(5, 14));
        assert_eq!(left_neighbor(fr(1, 2), order(5)).unwrap().neighbor, fr(2, 5));
        assert_eq!(left_neighbor(Fraction::ONE, order(7)).unwrap().neighbor, fr(6, 7));
    }

    #[test]
    fn base_examples() {
        assert_eq!(base_right_neighbor(fr(9, 25)), Ok(fr(4, 11)));
        assert_eq!(base_right_neighbor(fr(5, 39)), Ok(fr(4, 31)));
        assert_eq!(base_right_neighbor(Fraction::ZERO), Ok(Fraction::ONE));
        assert_eq!(base_right_neighbor(Fraction::ONE), Err(FareyError::NoRightNeighbor));
    }

    #[test]
    fn errors() {
        assert_eq!(right_neighbor(Fraction::ONE, order(10)), Err(FareyError::NoRightNeighbor));
        assert_eq!(left_neighbor(Fraction::ZERO, order(10)), Err(FareyError::NoLeftNeighbor));
        assert!(matches!(
            right_neighbor(fr(9, 25), order(24)),
            Err(FareyError::NotInSequence { .. })
        ));
        assert!(matches!(
            left_neighbor(fr(9, 25), order(24)),
            Err(FareyError::NotInSequence { .. })
        ));
    }

    #[test]
    fn unified_branch_agrees_at_zero_steps() {
        let x = fr(9, 25);
        let base = base_right_neighbor(x).unwrap();
        let l = 0u64;
        let unified = Fraction::new(l * x.num() + base.num(), l * x.den() + base.den()).unwrap();
        assert_eq!(unified, base);
        assert_eq!(right_neighbor(x, order(25)).unwrap().neighbor, base);
    }

    #[test]
    fn range_law_for_9_25() {
        let x = fr(9, 25);
        let (a0, b0) = (4u64, 11u64);
        for n in 25..=200u64 {
            let seq = enumerate(order(n)).unwrap();
            let i = seq.terms.iter().position(|&t| t == x).unwrap();
            let r = right_neighbor(x, order(n)).unwrap();
            assert_eq!(r.neighbor, seq.terms[i + 1], "N={n}");
            let l = (n - b0) / 25;
            assert_eq!(r.steps, l);
            assert!(l * 25 + b0 <= n && n < (l + 1) * 25 + b0);
            assert_eq!(r.neighbor, fr(l * 9 + a0, l * 25 + b0));
        }
    }

    #[test]
    fn results_satisfy_adjacency() {
        for n in 1..=60u64 {
            let seq = enumerate(order(n)).unwrap();
            for &x in &seq.terms {
                if x != Fraction::ONE {
                    let r = right_neighbor(x, order(n)).unwrap();
                    assert_eq!(delta(x, r.neighbor), Ok(1));
                    assert!(r.neighbor.den() <= n && x.den() + r.neighbor.den() > n);
                }
                if x != Fraction::ZERO {
                    let r = left_neighbor(x, order(n)).unwrap();
                    assert_eq!(delta(r.neighbor, x), Ok(1));
                    assert!(r.neighbor.den() <= n && x.den() + r.neighbor.den() > n);
                }
            }
        }
    }
}
