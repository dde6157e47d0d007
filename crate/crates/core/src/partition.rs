//! Partitions with a fixed row bound `d`, their bar-sequences, and the
//! identification of the `d x (n - d)` rectangle with `d`-subsets of `{1..n}`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with at most `d` rows, stored with trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    d: usize,
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(d: usize, rows: Vec<u32>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidPartition {
            rows: rows.iter().map(|&r| r as i64).collect(),
            reason: reason.to_string(),
        };
        if d == 0 {
            return Err(invalid("row bound d must be positive"));
        }
        if rows.len() != d {
            return Err(invalid("row list must have exactly d entries"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("rows must be weakly decreasing"));
        }
        Ok(Partition { d, rows })
    }

    /// Pads `rows` with zeros up to length `d`.
    pub fn padded(d: usize, rows: &[u32]) -> Result<Self> {
        if rows.len() > d {
            return Err(Error::InvalidPartition {
                rows: rows.iter().map(|&r| r as i64).collect(),
                reason: format!("more than d = {d} rows"),
            });
        }
        let mut v = rows.to_vec();
        v.resize(d, 0);
        Partition::new(d, v)
    }

    pub fn empty(d: usize) -> Self {
        Partition { d, rows: vec![0; d] }
    }

    /// The one-box partition `(1, 0, ..., 0)`.
    pub fn div(d: usize) -> Self {
        let mut rows = vec![0; d];
        rows[0] = 1;
        Partition { d, rows }
    }

    /// Builds a partition from a bar-sequence (any order of distinct positive
    /// integers is accepted; it is sorted first).
    pub fn from_bar(d: usize, entries: &[u32]) -> Result<Self> {
        let mut e = entries.to_vec();
        e.sort_unstable_by(|a, b| b.cmp(a));
        if e.len() != d || e.windows(2).any(|w| w[0] == w[1]) || e.last().is_some_and(|&x| x == 0)
        {
            return Err(Error::InvalidPartition {
                rows: entries.iter().map(|&r| r as i64).collect(),
                reason: "not a bar-sequence of distinct positive integers".into(),
            });
        }
        let rows = e
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (d - i) as u32)
            .collect();
        Partition::new(d, rows)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows[0] == 0
    }

    pub fn first_row(&self) -> u32 {
        self.rows[0]
    }

    /// Strictly decreasing sequence `b_i + (d - i + 1)`.
    pub fn bar(&self) -> BarSequence {
        BarSequence(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, &b)| b + (self.d - i) as u32)
                .collect(),
        )
    }

    /// `b_i^self >= b_i^other` for all rows.
    pub fn contains(&self, other: &Partition) -> Result<bool> {
        if self.d != other.d {
            return Err(Error::RowBoundMismatch(self.d, other.d));
        }
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a >= b))
    }

    /// Containment for partitions known to share `d`.
    pub fn contains_same_d(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.d, other.d);
        self.rows.iter().zip(&other.rows).all(|(a, b)| a >= b)
    }

    /// `self` lies in `P(d, n)`, i.e. in the `d x (n - d)` rectangle.
    pub fn in_rectangle(&self, n: usize) -> bool {
        n > self.d && (self.rows[0] as usize) <= n - self.d
    }

    pub fn to_subset(&self, n: usize) -> Result<SubsetDN> {
        if !self.in_rectangle(n) {
            return Err(Error::NotInRectangle {
                partition: self.clone(),
                d: self.d,
                cols: n.saturating_sub(self.d),
            });
        }
        let mut elements: Vec<u32> = self
            .bar()
            .entries()
            .iter()
            .map(|&b| n as u32 + 1 - b)
            .collect();
        elements.sort_unstable();
        Ok(SubsetDN { n, elements })
    }

    /// Partitions obtained by adding one box, staying within `d` rows.
    pub fn covers_adding_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.d {
            if i == 0 || self.rows[i - 1] > self.rows[i] {
                let mut rows = self.rows.clone();
                rows[i] += 1;
                out.push(Partition { d: self.d, rows });
            }
        }
        out.sort();
        out
    }

    /// `[self]_-`: partitions whose bar-set shares exactly `d - 1` entries
    /// with the bar-set of `self` and which are contained in `self`. Computed
    /// by lowering a single bar entry to a smaller unused positive integer.
    pub fn lower_set(&self) -> Vec<Partition> {
        let bar = self.bar();
        let present: BTreeSet<u32> = bar.entries().iter().copied().collect();
        let mut out = BTreeSet::new();
        for (k, &e) in bar.entries().iter().enumerate() {
            for smaller in 1..e {
                if present.contains(&smaller) {
                    continue;
                }
                let mut entries = bar.entries().to_vec();
                entries[k] = smaller;
                let rho = Partition::from_bar(self.d, &entries)
                    .expect("lowering one bar entry keeps entries distinct and positive");
                out.insert(rho);
            }
        }
        out.into_iter().collect()
    }

    /// All partitions with at most `d` rows, at most `max_size` boxes and at
    /// most `max_cols` columns, in (size, reverse-lexicographic) order.
    pub fn enumerate(d: usize, max_size: u32, max_cols: Option<u32>) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            let mut rows = Vec::with_capacity(d);
            fill_rows(d, size, size.min(max_cols.unwrap_or(u32::MAX)), &mut rows, &mut out);
        }
        out
    }

    /// All of `P(d, n)`.
    pub fn rectangle(d: usize, n: usize) -> Vec<Partition> {
        assert!(n > d, "need n > d");
        let cols = (n - d) as u32;
        Partition::enumerate(d, cols * d as u32, Some(cols))
    }
}

fn fill_rows(d: usize, remaining: u32, cap: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rows.len() == d {
        if remaining == 0 {
            out.push(Partition { d, rows: rows.clone() });
        }
        return;
    }
    let slots = (d - rows.len()) as u32;
    for b in (0..=cap.min(remaining)).rev() {
        if (b as u64) * (slots as u64) < remaining as u64 {
            break;
        }
        rows.push(b);
        fill_rows(d, remaining - b, b, rows, out);
        rows.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then(self.size().cmp(&other.size()))
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<u32>::deserialize(de)?;
        let d = rows.len();
        Partition::new(d, rows).map_err(serde::de::Error::custom)
    }
}

/// `bar(lambda)`, strictly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarSequence(Vec<u32>);

impl BarSequence {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn as_set(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }
}

/// A `d`-subset `{l_1 < ... < l_d}` of `{1..n}`: the fixed point label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubsetDN {
    #[serde(skip)]
    pub n: usize,
    pub elements: Vec<u32>,
}

impl SubsetDN {
    /// Inverse of [`Partition::to_subset`].
    pub fn to_partition(&self) -> Result<Partition> {
        let d = self.elements.len();
        let n = self.n as u32;
        if self.elements.iter().any(|&e| e == 0 || e > n)
            || self.elements.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidPartition {
                rows: self.elements.iter().map(|&e| e as i64).collect(),
                reason: format!("not a strictly increasing subset of 1..{n}"),
            });
        }
        let bar: Vec<u32> = self.elements.iter().map(|&e| n + 1 - e).collect();
        Partition::from_bar(d, &bar)
    }

    /// The image under the stage inclusion `{l_i} -> {l_i + 1}`.
    pub fn shifted(&self) -> SubsetDN {
        SubsetDN {
            n: self.n + 1,
            elements: self.elements.iter().map(|e| e + 1).collect(),
        }
    }
}

impl fmt::Display for SubsetDN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
