//! Integer partitions (Young diagrams) with arbitrary-precision parts.
//!
//! A [`Partition`] is stored without trailing zeros; padding to a rank `n`
//! happens only where a caller needs a length-`n` vector. The empty
//! partition is an ordinary value and renders as `"0"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<BigUint>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts, stripping trailing zeros.
    pub fn new(mut parts: Vec<BigUint>) -> Result<Self> {
        while parts.last().is_some_and(Zero::is_zero) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(format!("{} < {}", w[0], w[1])));
        }
        Ok(Self { parts })
    }

    pub fn from_u64s(parts: &[u64]) -> Result<Self> {
        Self::new(parts.iter().map(|&p| BigUint::from(p)).collect())
    }

    pub fn parts(&self) -> &[BigUint] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the height.
    pub fn part(&self, i: usize) -> BigUint {
        self.parts.get(i).cloned().unwrap_or_default()
    }

    pub fn size(&self) -> BigUint {
        self.parts.iter().sum()
    }

    /// Sum of the bit lengths of the parts.
    pub fn bit_length(&self) -> u64 {
        self.parts.iter().map(BigUint::bits).sum()
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<BigUint>> {
        self.check_rank(n)?;
        let mut out = self.parts.clone();
        out.resize(n, BigUint::zero());
        Ok(out)
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.height() > n {
            return Err(Error::HeightExceedsRank {
                height: self.height(),
                rank: n,
            });
        }
        Ok(())
    }

    /// Multiplies every part by `q`.
    pub fn scale(&self, q: &BigUint) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::NonpositiveScale);
        }
        Ok(Self {
            parts: self.parts.iter().map(|p| p * q).collect(),
        })
    }

    /// Whether the diagram of `self` fits inside the diagram of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.height() <= other.height() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Dimension of the irreducible GL_n module with highest weight `self`,
    /// from the product formula over pairs `i < j` of
    /// `(λ_i - λ_j + j - i) / (j - i)`.
    pub fn weyl_dimension(&self, n: usize) -> Result<BigUint> {
        let lambda: Vec<BigInt> = self.padded(n)?.into_iter().map(BigInt::from).collect();
        let mut num = BigInt::from(1u32);
        let mut den = BigInt::from(1u32);
        for i in 0..n {
            for j in i + 1..n {
                let gap = BigInt::from(j - i);
                num *= &lambda[i] - &lambda[j] + &gap;
                den *= gap;
            }
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        Ok(q.to_biguint().expect("dimension is positive"))
    }

    /// Parts as `u64`, for desk-scale enumeration.
    pub fn to_u64s(&self) -> Result<Vec<u64>> {
        self.parts
            .iter()
            .map(|p| {
                p.to_u64()
                    .ok_or_else(|| Error::TooLarge(format!("part {p}")))
            })
            .collect()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts, so a descending sort lists `(2)` before `(1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

/// Parses a comma-separated list of decimal integers. The empty string and
/// `"0"` both denote the empty partition; trailing zeros are dropped.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value = BigInt::from_str(token)
            .map_err(|_| Error::MalformedInput(format!("not an integer: {token:?}")))?;
        match value.sign() {
            Sign::Minus => return Err(Error::NegativePart(token.to_string())),
            _ => parts.push(value.magnitude().clone()),
        }
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter().map(|p| p.to_string()))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let parts = raw
            .iter()
            .map(|s| BigUint::from_str(s).map_err(|_| D::Error::custom(format!("bad part {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `size` with at most `max_height` parts, in descending
/// lexicographic order.
pub fn partitions_of(size: u64, max_height: usize) -> Vec<Partition> {
    fn rec(rest: u64, max_part: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_u64s(cur).expect("generated parts are decreasing"));
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=rest.min(max_part)).rev() {
            // the remaining slots must be able to absorb what is left
            if first.saturating_mul(slots as u64) < rest {
                break;
            }
            cur.push(first);
            rec(rest - first, first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, max_height, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` and height at most
/// `max_height`, ordered by size and then descending lexicographically.
pub fn partitions_up_to(max_size: u64, max_height: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|m| partitions_of(m, max_height))
        .collect()
}
