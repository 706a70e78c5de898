//! Reduced fractions on the unit interval.
//!
//! Every value of [`Fraction`] is stored in lowest terms with
//! `0 <= num <= den`. Zero is always `0/1` and one is always `1/1`, so
//! structural equality coincides with equality of rational values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{FareyError, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An irreducible fraction `num/den` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(FareyError::ZeroDenominator);
        }
        if num > den {
            return Err(FareyError::OutOfRange {
                num: num.into(),
                den: den.into(),
            });
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Like [`Fraction::new`] but accepts signed input, rejecting negatives.
    pub fn from_signed(num: i128, den: i128) -> Result<Self> {
        if den <= 0 {
            return Err(FareyError::ZeroDenominator);
        }
        if num < 0 {
            return Err(FareyError::NegativeNumerator(num));
        }
        if num > den {
            return Err(FareyError::OutOfRange { num, den });
        }
        let den = u64::try_from(den).map_err(|_| FareyError::Overflow("fraction construction"))?;
        // num <= den, so this cannot fail once den fits
        Fraction::new(num as u64, den)
    }

    /// Builds a fraction that must already be in lowest terms.
    pub fn reduced(num: u64, den: u64) -> Result<Self> {
        let f = Fraction::new(num, den)?;
        if f.num != num {
            return Err(FareyError::NotIrreducible { num, den });
        }
        Ok(f)
    }

    #[inline]
    pub fn num(&self) -> u64 {
        self.num
    }

    #[inline]
    pub fn den(&self) -> u64 {
        self.den
    }

    /// `1 - x`. Maps `F_N` onto itself while reversing order.
    pub fn complement(&self) -> Fraction {
        // gcd(den - num, den) = gcd(num, den) = 1
        Fraction {
            num: self.den - self.num,
            den: self.den,
        }
    }
}

/// The determinant `Δ(a/b, c/d) = cb - ad`, positive exactly when `x < y`.
pub fn delta(x: Fraction, y: Fraction) -> Result<i128> {
    let cb = i128::from(y.num).checked_mul(i128::from(x.den));
    let ad = i128::from(x.num).checked_mul(i128::from(y.den));
    match (cb, ad) {
        (Some(cb), Some(ad)) => Ok(cb - ad),
        _ => Err(FareyError::Overflow("delta")),
    }
}

/// `(a + c) / (b + d)`, reduced.
pub fn mediant(x: Fraction, y: Fraction) -> Result<Fraction> {
    let num = x.num.checked_add(y.num).ok_or(FareyError::Overflow("mediant"))?;
    let den = x.den.checked_add(y.den).ok_or(FareyError::Overflow("mediant"))?;
    Fraction::new(num, den)
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // u64 * u64 always fits in u128
        let lhs = u128::from(self.num) * u128::from(other.den);
        let rhs = u128::from(other.num) * u128::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = FareyError;

    /// Accepts `num/den`, reducing on input. A bare integer is read as `n/1`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason| FareyError::Parse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: i128 = num.parse().map_err(|_| parse_err("bad numerator"))?;
        let den: i128 = den.parse().map_err(|_| parse_err("bad denominator"))?;
        Fraction::from_signed(num, den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// The order `N >= 1` of a Farey sequence `F_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FareyOrder(u64);

impl FareyOrder {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            Err(FareyError::ZeroOrder)
        } else {
            Ok(FareyOrder(n))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Whether `x` is a term of `F_N`.
    pub fn contains(self, x: Fraction) -> bool {
        x.den() <= self.0
    }
}

impl TryFrom<u64> for FareyOrder {
    type Error = FareyError;

    fn try_from(n: u64) -> Result<Self> {
        FareyOrder::new(n)
    }
}

impl From<FareyOrder> for u64 {
    fn from(order: FareyOrder) -> u64 {
        order.0
    }
}

impl fmt::Display for FareyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
