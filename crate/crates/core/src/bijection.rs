//! Invertible maps between the partition families.
//!
//! For `k >= 2` split `S_k(n) ∪ S_{k-1}(n)` by last part into `C(n)` (last
//! part 1) and `D(n)` (last part > 1). Then
//!
//! - `C(n) → Q(n-k+1)` removes the trailing `k-1` ones,
//! - `D(n) → S_{k-1}(n-k+1)` lowers the trailing `k-1` parts by one,
//! - `L_k(n) ∪ L_{k-1}(n) → L_{k-1}(n+k-1)` raises the leading `k-1` parts by one.
//!
//! With `k = 2` the first two are the maps `A(n) → Q(n-1)` and
//! `B(n) → Q(n-1)`. Every map checks its precondition and fails loudly.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate, ClassTag, Partition};

fn violation(map: &'static str, p: &Partition, reason: impl Into<String>) -> Error {
    Error::Precondition { map, partition: p.to_string(), reason: reason.into() }
}

fn check_k(map: &'static str, p: &Partition, k: usize) -> Result<()> {
    if k < 2 {
        return Err(violation(map, p, format!("k = {k}, need k >= 2")));
    }
    Ok(())
}

/// Source class of `p` within `S_k ∪ S_{k-1}`, if any.
fn smallest_union_class(p: &Partition, k: usize) -> Result<Option<ClassTag>> {
    for tag in [ClassTag::smallest(k)?, ClassTag::smallest(k - 1)?] {
        if tag.contains(p) {
            return Ok(Some(tag));
        }
    }
    Ok(None)
}

fn largest_union_class(p: &Partition, k: usize) -> Result<Option<ClassTag>> {
    for tag in [ClassTag::largest(k)?, ClassTag::largest(k - 1)?] {
        if tag.contains(p) {
            return Ok(Some(tag));
        }
    }
    Ok(None)
}

/// `C(n) → Q(n-k+1)`: drop the final `k-1` parts, which must all be 1.
pub fn strip_trailing_ones(p: &Partition, k: usize) -> Result<Partition> {
    const MAP: &str = "strip_trailing_ones";
    check_k(MAP, p, k)?;
    if smallest_union_class(p, k)?.is_none() {
        return Err(violation(MAP, p, format!("not in S_{k} ∪ S_{}", k - 1)));
    }
    if p.smallest() != Some(1) {
        return Err(violation(MAP, p, "last part is not 1"));
    }
    let mut parts = p.parts().to_vec();
    parts.truncate(parts.len() - (k - 1));
    Ok(Partition::from_sorted(parts))
}

/// `Q(m) → C(m+k-1)`: append `k-1` parts equal to 1.
pub fn append_ones(p: &Partition, k: usize) -> Result<Partition> {
    const MAP: &str = "append_ones";
    check_k(MAP, p, k)?;
    if !p.is_strict() {
        return Err(violation(MAP, p, "not a strict partition"));
    }
    let mut parts = p.parts().to_vec();
    parts.extend(std::iter::repeat_n(1, k - 1));
    Ok(Partition::from_sorted(parts))
}

/// `D(n) → S_{k-1}(n-k+1)`: lower each of the final `k-1` parts by one.
pub fn decrement_tail_block(p: &Partition, k: usize) -> Result<Partition> {
    const MAP: &str = "decrement_tail_block";
    check_k(MAP, p, k)?;
    if smallest_union_class(p, k)?.is_none() {
        return Err(violation(MAP, p, format!("not in S_{k} ∪ S_{}", k - 1)));
    }
    if p.smallest() == Some(1) {
        return Err(violation(MAP, p, "smallest part is 1"));
    }
    let mut parts = p.parts().to_vec();
    let start = parts.len() - (k - 1);
    for part in &mut parts[start..] {
        *part -= 1;
    }
    Ok(Partition::from_sorted(parts))
}

/// `S_{k-1}(m) → D(m+k-1)`: raise each of the final `k-1` parts by one.
pub fn increment_tail_block(p: &Partition, k: usize) -> Result<Partition> {
    const MAP: &str = "increment_tail_block";
    check_k(MAP, p, k)?;
    if p.is_empty() || !ClassTag::smallest(k - 1)?.contains(p) {
        return Err(violation(MAP, p, format!("not in S_{}", k - 1)));
    }
    let mut parts = p.parts().to_vec();
    let start = parts.len() - (k - 1);
    for part in &mut parts[start..] {
        *part += 1;
    }
    Ok(Partition::from_sorted(parts))
}

/// `L_k(n) ∪ L_{k-1}(n) → L_{k-1}(n+k-1)`: raise each of the first `k-1`
/// parts by one.
pub fn increment_head_block(p: &Partition, k: usize) -> Result<Partition> {
    const MAP: &str = "increment_head_block";
    check_k(MAP, p, k)?;
    if p.is_empty() || largest_union_class(p, k)?.is_none() {
        return Err(violation(MAP, p, format!("not in L_{k} ∪ L_{}", k - 1)));
    }
    let mut parts = p.parts().to_vec();
    for part in &mut parts[..k - 1] {
        *part += 1;
    }
    Ok(Partition::from_sorted(parts))
}

/// `L_{k-1}(m) → L_k(m-k+1) ∪ L_{k-1}(m-k+1)`: lower each of the first `k-1`
/// parts by one. The returned tag says which half the image lands in.
pub fn decrement_head_block(p: &Partition, k: usize) -> Result<(Partition, ClassTag)> {
    const MAP: &str = "decrement_head_block";
    check_k(MAP, p, k)?;
    if p.is_empty() || !ClassTag::largest(k - 1)?.contains(p) {
        return Err(violation(MAP, p, format!("not in L_{}", k - 1)));
    }
    let parts = p.parts();
    let top = parts[0];
    let next = parts.get(k - 1).copied().unwrap_or(0);
    if top - 1 < next || top == 1 {
        return Err(violation(MAP, p, "lowering the leading block breaks the partition"));
    }
    let mut lowered = parts.to_vec();
    for part in &mut lowered[..k - 1] {
        *part -= 1;
    }
    let class = if top - 1 == next { ClassTag::largest(k)? } else { ClassTag::largest(k - 1)? };
    Ok((Partition::from_sorted(lowered), class))
}

/// `S_k(n) ∪ S_{k-1}(n)` split by last part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSets {
    pub n: u64,
    pub k: usize,
    /// `C(n)`, or `A(n)` when `k = 2`.
    pub with_last_one: Vec<Partition>,
    /// `D(n)`, or `B(n)` when `k = 2`.
    pub with_last_greater: Vec<Partition>,
}

/// Members of each group are in source-class order (`S_k` first), then
/// lexicographically decreasing.
pub fn split_smallest_union(n: u64, k: usize) -> Result<SplitSets> {
    if k < 2 {
        return Err(Error::InvalidMultiplicity(k));
    }
    let mut with_last_one = Vec::new();
    let mut with_last_greater = Vec::new();
    for tag in [ClassTag::smallest(k)?, ClassTag::smallest(k - 1)?] {
        for p in enumerate(tag, n) {
            match p.smallest() {
                Some(1) => with_last_one.push(p),
                Some(_) => with_last_greater.push(p),
                None => {}
            }
        }
    }
    Ok(SplitSets { n, k, with_last_one, with_last_greater })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MapName {
    A,
    B,
    C,
    D,
    L,
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            "D" | "d" => Ok(Self::D),
            "L" | "l" => Ok(Self::L),
            other => Err(Error::UnknownMap(other.to_string())),
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::L => "L",
        };
        f.write_str(s)
    }
}

impl MapName {
    /// The `k` the map is defined for: A and B only exist at `k = 2`.
    pub fn check_k(self, k: usize) -> Result<()> {
        match self {
            Self::A | Self::B if k != 2 => Err(Error::InvalidMultiplicity(k)),
            _ if k < 2 => Err(Error::InvalidMultiplicity(k)),
            _ => Ok(()),
        }
    }

    pub fn source_name(self, n: u64) -> String {
        format!("{self}({n})")
    }

    /// Family of the images together with their weight.
    pub fn target(self, n: u64, k: usize) -> Result<(ClassTag, u64)> {
        let shift = k as u64 - 1;
        Ok(match self {
            Self::A | Self::B | Self::C => (ClassTag::STRICT, n.saturating_sub(shift)),
            Self::D => (ClassTag::smallest(k - 1)?, n.saturating_sub(shift)),
            Self::L => (ClassTag::largest(k - 1)?, n + shift),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionRow {
    pub source: Partition,
    pub source_class: ClassTag,
    pub image: Partition,
    pub image_class: ClassTag,
}

/// Applies `map` to one source partition and checks the round trip.
pub fn apply(map: MapName, p: &Partition, k: usize) -> Result<BijectionRow> {
    map.check_k(k)?;
    let (image, back, source_class) = match map {
        MapName::A | MapName::C => {
            let image = strip_trailing_ones(p, k)?;
            let back = append_ones(&image, k)?;
            (image, back, smallest_union_class(p, k)?)
        }
        MapName::B | MapName::D => {
            let image = decrement_tail_block(p, k)?;
            let back = increment_tail_block(&image, k)?;
            (image, back, smallest_union_class(p, k)?)
        }
        MapName::L => {
            let image = increment_head_block(p, k)?;
            let (back, predicted) = decrement_head_block(&image, k)?;
            let actual = largest_union_class(p, k)?;
            if actual != Some(predicted) {
                return Err(Error::Internal(format!(
                    "{p}: inverse predicts {predicted}, source is in {actual:?}"
                )));
            }
            (image, back, actual)
        }
    };
    if back != *p {
        return Err(Error::Internal(format!("{map} round trip sent {p} to {image} and back to {back}")));
    }
    let (image_class, _) = map.target(p.weight(), k)?;
    Ok(BijectionRow {
        source: p.clone(),
        source_class: source_class.expect("precondition checked by the map"),
        image,
        image_class,
    })
}

/// Sources of `map` at weight `n`, grouped by class (`k` before `k-1`), each
/// group lexicographically decreasing.
pub fn sources(map: MapName, n: u64, k: usize) -> Result<Vec<Partition>> {
    map.check_k(k)?;
    Ok(match map {
        MapName::A | MapName::C => split_smallest_union(n, k)?.with_last_one,
        MapName::B | MapName::D => split_smallest_union(n, k)?.with_last_greater,
        MapName::L if n == 0 => Vec::new(),
        MapName::L => {
            let mut all = enumerate(ClassTag::largest(k)?, n);
            all.extend(enumerate(ClassTag::largest(k - 1)?, n));
            all
        }
    })
}

/// One row per source partition; every row has passed its round trip.
pub fn bijection_table(map: MapName, n: u64, k: usize) -> Result<Vec<BijectionRow>> {
    sources(map, n, k)?.iter().map(|p| apply(map, p, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn strip_and_append() {
        assert_eq!(strip_trailing_ones(&p(&[8, 1, 1]), 3).unwrap(), p(&[8]));
        assert_eq!(strip_trailing_ones(&p(&[7, 1, 1]), 2).unwrap(), p(&[7, 1]));
        assert_eq!(append_ones(&p(&[5, 3]), 3).unwrap(), p(&[5, 3, 1, 1]));
        assert!(matches!(strip_trailing_ones(&p(&[5, 2, 2]), 2), Err(Error::Precondition { .. })));
        assert!(strip_trailing_ones(&p(&[6, 1]), 3).is_err());
        assert!(append_ones(&p(&[3, 3]), 2).is_err());
    }

    #[test]
    fn a_map_follows_the_remove_final_one_rule() {
        // Both halves of A(n): from S_2 (λ_{t-1} = 1) and from Q (λ_{t-1} > 1).
        assert_eq!(strip_trailing_ones(&p(&[5, 2, 1, 1]), 2).unwrap(), p(&[5, 2, 1]));
        assert_eq!(strip_trailing_ones(&p(&[6, 2, 1]), 2).unwrap(), p(&[6, 2]));
    }

    #[test]
    fn tail_block() {
        assert_eq!(decrement_tail_block(&p(&[4, 2, 2, 2]), 3).unwrap(), p(&[4, 2, 1, 1]));
        assert_eq!(decrement_tail_block(&p(&[9]), 2).unwrap(), p(&[8]));
        assert_eq!(decrement_tail_block(&p(&[5, 5]), 3).unwrap(), p(&[4, 4]));
        assert_eq!(decrement_tail_block(&p(&[5, 2, 2]), 2).unwrap(), p(&[5, 2, 1]));
        assert_eq!(increment_tail_block(&p(&[4, 2, 1, 1]), 3).unwrap(), p(&[4, 2, 2, 2]));
        assert!(decrement_tail_block(&p(&[5, 3, 1]), 2).is_err());
        assert!(increment_tail_block(&Partition::empty(), 2).is_err());
    }

    #[test]
    fn head_block() {
        assert_eq!(increment_head_block(&p(&[4, 4, 4]), 3).unwrap(), p(&[5, 5, 4]));
        assert_eq!(increment_head_block(&p(&[3, 3, 3, 2, 1]), 3).unwrap(), p(&[4, 4, 3, 2, 1]));
        let (back, class) = decrement_head_block(&p(&[7, 7]), 3).unwrap();
        assert_eq!(back, p(&[6, 6]));
        assert_eq!(class, ClassTag::largest(2).unwrap());
        let (back, class) = decrement_head_block(&p(&[5, 5, 4]), 3).unwrap();
        assert_eq!(back, p(&[4, 4, 4]));
        assert_eq!(class, ClassTag::largest(3).unwrap());
        assert!(decrement_head_block(&p(&[1, 1]), 3).is_err());
        assert!(increment_head_block(&p(&[4, 3, 3]), 3).is_err());
    }

    #[test]
    fn split_examples() {
        let s = split_smallest_union(10, 3).unwrap();
        assert_eq!((s.with_last_one.len(), s.with_last_greater.len()), (6, 4));
        let s = split_smallest_union(9, 2).unwrap();
        assert_eq!((s.with_last_one.len(), s.with_last_greater.len()), (6, 6));
        let s = split_smallest_union(2, 2).unwrap();
        assert_eq!(s.with_last_greater, vec![Partition::from_sorted(vec![2])]);
        for k in 3..=6 {
            let s = split_smallest_union(k as u64, k).unwrap();
            assert_eq!(s.with_last_one, vec![Partition::from_sorted(vec![1; k])]);
            assert!(s.with_last_greater.is_empty());
        }
    }

    #[test]
    fn table_sizes() {
        assert_eq!(bijection_table(MapName::C, 10, 3).unwrap().len(), 6);
        assert_eq!(bijection_table(MapName::L, 12, 3).unwrap().len(), 5);
        let d = bijection_table(MapName::D, 10, 3).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.iter().any(|r| r.source == p(&[5, 5]) && r.image == p(&[4, 4])));
        assert!(bijection_table(MapName::A, 9, 3).is_err());
        assert!("X".parse::<MapName>().is_err());
    }
}
