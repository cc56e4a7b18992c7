//! Integer partitions and box combinatorics.
//!
//! A [`Partition`] never stores zero parts; the empty partition indexes the
//! unit class. Partitions order by length first, then lexicographically.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates a weakly decreasing sequence. Trailing zeros are dropped;
    /// a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any multiset of parts is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The i-th part, 0-based, with zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// Transpose of the Young diagram: part i is the number of rows of length at least i.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    /// Complement inside the `rows x cols` box, rotated by 180 degrees.
    pub fn box_complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits_in_box(rows, cols) {
            return Err(Error::NotInBox { partition: self.clone(), rows, cols });
        }
        let parts = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect();
        Partition::new(parts)
    }

    /// True when the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts the JSON form `[3,1]`, and also `3,1` or `()`-style input.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{text}: {e}")))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in the crate's canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

/// All partitions with at most `rows` parts and largest part at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=rows * cols {
        let mut current = Vec::new();
        fill(n, cols, rows, &mut current, &mut out);
    }
    out.sort();
    out
}

/// All partitions of weight at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn fill(remaining: usize, max_part: usize, max_len: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, max_len, current, out);
        current.pop();
    }
}
