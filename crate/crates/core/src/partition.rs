//! Partitions, the three families of interest, and exhaustive enumeration.
//!
//! A [`ClassTag`] names one of
//!
//! - `Q(n)`: strict partitions (all parts distinct),
//! - `S_k(n)`: the smallest part occurs exactly `k` times, every other part once,
//! - `L_k(n)`: the largest part occurs exactly `k` times, every other part once.
//!
//! `S_1(n) = L_1(n) = Q(n)`, so those tags are normalized to [`Family::Strict`].
//! The enumerators here are the ground truth every faster method is checked
//! against.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    /// Validates `raw` without reordering it.
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let raw: Vec<i64> = raw.into_iter().map(Into::into).collect();
        let mut parts = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if value < 1 {
                return Err(Error::NonPositivePart { index, value });
            }
            if index > 0 && raw[index - 1] < value {
                return Err(Error::NotWeaklyDecreasing { index });
            }
            parts.push(value as u64);
        }
        Ok(Self::from_sorted(parts))
    }

    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    // Caller guarantees positivity and weak decrease.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.parts.last().copied()
    }

    /// Number of copies of the smallest part.
    pub fn smallest_multiplicity(&self) -> usize {
        match self.smallest() {
            Some(m) => self.parts.iter().rev().take_while(|&&p| p == m).count(),
            None => 0,
        }
    }

    /// Number of copies of the largest part.
    pub fn largest_multiplicity(&self) -> usize {
        match self.largest() {
            Some(m) => self.parts.iter().take_while(|&&p| p == m).count(),
            None => 0,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Strict,
    SmallestRepeat,
    LargestRepeat,
}

/// A partition family together with its multiplicity parameter.
///
/// Construct through [`ClassTag::strict`], [`ClassTag::smallest`] or
/// [`ClassTag::largest`]; `k = 1` collapses to the strict family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassTag {
    family: Family,
    k: usize,
}

impl ClassTag {
    pub const STRICT: ClassTag = ClassTag { family: Family::Strict, k: 1 };

    pub fn strict() -> Self {
        Self::STRICT
    }

    pub fn smallest(k: usize) -> Result<Self> {
        Self::new(Family::SmallestRepeat, k)
    }

    pub fn largest(k: usize) -> Result<Self> {
        Self::new(Family::LargestRepeat, k)
    }

    pub fn new(family: Family, k: usize) -> Result<Self> {
        match (family, k) {
            (_, 0) => Err(Error::InvalidMultiplicity(0)),
            (_, 1) => Ok(Self::STRICT),
            (Family::Strict, k) => Err(Error::InvalidMultiplicity(k)),
            (family, k) => Ok(Self { family, k }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Family membership. Unlike [`classify`], a single-valued partition
    /// such as `(4,4)` belongs to both `S_2` and `L_2`.
    pub fn contains(&self, p: &Partition) -> bool {
        if p.is_empty() {
            return self.family == Family::Strict;
        }
        match self.family {
            Family::Strict => p.is_strict(),
            Family::SmallestRepeat => {
                let m = p.smallest_multiplicity();
                m == self.k && p.parts[..p.len() - m + 1].windows(2).all(|w| w[0] > w[1])
            }
            Family::LargestRepeat => {
                let m = p.largest_multiplicity();
                m == self.k && p.parts[m - 1..].windows(2).all(|w| w[0] > w[1])
            }
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Strict => f.write_str("Q"),
            Family::SmallestRepeat => write!(f, "S_{}", self.k),
            Family::LargestRepeat => write!(f, "L_{}", self.k),
        }
    }
}

impl Serialize for ClassTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Canonical tag of a nonempty partition, or `None` when it lies in no family.
///
/// Single-valued partitions `(a,…,a)` with at least two copies report as
/// smallest-repeat even though they are also largest-repeat members.
pub fn classify(p: &Partition) -> Result<Option<ClassTag>> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if p.is_strict() {
        return Ok(Some(ClassTag::STRICT));
    }
    let small = ClassTag::smallest(p.smallest_multiplicity())?;
    if small.contains(p) {
        return Ok(Some(small));
    }
    let large = ClassTag::largest(p.largest_multiplicity())?;
    if large.contains(p) {
        return Ok(Some(large));
    }
    Ok(None)
}

/// All members of `tag`'s family of weight `n`, in lexicographically
/// decreasing order of part sequences.
pub fn enumerate(tag: ClassTag, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    match tag.family {
        Family::Strict => strict_into(n, n, 1, &mut prefix, &mut out),
        Family::SmallestRepeat => {
            let k = tag.k as u64;
            // Smallest part m repeated k times, strict remainder above m.
            for m in 1..=n / k {
                let rest = n - k * m;
                let mut tails = Vec::new();
                strict_into(rest, rest, m + 1, &mut prefix, &mut tails);
                for tail in tails {
                    let mut parts = tail.into_parts();
                    parts.extend(std::iter::repeat_n(m, tag.k));
                    out.push(Partition::from_sorted(parts));
                }
            }
            out.sort_unstable_by(|a, b| b.parts.cmp(&a.parts));
        }
        Family::LargestRepeat => {
            let k = tag.k as u64;
            for top in (1..=n / k).rev() {
                prefix.clear();
                prefix.extend(std::iter::repeat_n(top, tag.k));
                let rest = n - k * top;
                strict_into(rest, top - 1, 1, &mut prefix, &mut out);
            }
        }
    }
    out
}

/// Pushes `prefix ++ s` for each strict `s` of weight `rest` with parts in
/// `[lo, hi]`, in lexicographically decreasing order.
fn strict_into(rest: u64, hi: u64, lo: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    let mut part = hi.min(rest);
    while part >= lo {
        // The remaining parts are distinct and below `part`; bail out once
        // even the largest such set cannot reach `rest`.
        if part + part.saturating_sub(1) * part / 2 < rest {
            break;
        }
        prefix.push(part);
        strict_into(rest - part, part - 1, lo, prefix, out);
        prefix.pop();
        part -= 1;
    }
}

/// Every partition of `n`, lexicographically decreasing. Exponential; for
/// tests and small cross-checks only.
pub fn all_partitions(n: u64) -> Vec<Partition> {
    fn go(rest: u64, hi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for part in (1..=hi.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `|enumerate(tag, n)|`.
pub fn count_oracle(tag: ClassTag, n: u64) -> crate::Count {
    crate::Count::from(enumerate(tag, n).len())
}
