//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordered graded-lexicographically: by weight, then lexicographically on
/// the parts. Within one weight this refines dominance order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates the parts. Trailing zeros are accepted and stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(k)` for `k > 0`, `∅` for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Zero-based part access, padded with zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Union of parts, i.e. the partition indexing `h_λ h_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v: Vec<u32> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts; the empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let txt: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", txt.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Shorthand for literal partitions in tests and examples. Panics on
/// invalid input.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("invalid partition literal")
}

/// All partitions of `k`, lexicographically descending.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    partitions_bounded(k, usize::MAX)
}

/// Partitions of `k` with at most `max_len` parts, lexicographically
/// descending.
pub fn partitions_bounded(k: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            rec(rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions of weight at most `max_weight` and length at most `max_len`,
/// in ascending graded-lex order.
pub fn partitions_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=max_weight {
        let mut layer = partitions_bounded(k, max_len);
        layer.reverse();
        out.extend(layer);
    }
    out
}

/// Every way to add a horizontal strip of `k` boxes to `nu`.
pub fn add_horizontal_strip(nu: &Partition, k: u32) -> Vec<Partition> {
    fn rec(nu: &[u32], i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == nu.len() + 1 {
            if rem == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let base = nu.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { rem } else { (nu[i - 1] - base).min(rem) };
        for add in 0..=cap {
            cur.push(base + add);
            rec(nu, i + 1, rem - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nu.parts(), 0, k, &mut Vec::new(), &mut out);
    out
}
