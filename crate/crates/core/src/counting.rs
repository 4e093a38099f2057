//! Exact counts `q(n)`, `s_k(n)` and `ℓ_k(n)`.
//!
//! `q(n)` is computed twice, once by expanding the truncated product
//! `∏ (1 + x^i)` and once by a dynamic program over (largest allowed part,
//! remaining weight); [`q_table`] refuses to return unless both agree.
//! `s_k` and `ℓ_k` are then built level by level from
//!
//! ```text
//! s_k(n) = -s_{k-1}(n) + s_{k-1}(n-k+1) + q(n-k+1)      (n >= k, else 0)
//! ℓ_k(n) = -ℓ_{k-1}(n) + ℓ_{k-1}(n+k-1)                 (n >= 1, ℓ_k(0) = 0)
//! ```
//!
//! with `s_1 = ℓ_1 = q` and `q(m) = 0` for `m < 0`. The `ℓ` recurrence looks
//! forward, so `ℓ_k` up to `n` needs `q` up to `n + k(k-1)/2`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{ClassTag, Family};
use crate::Count;

/// Largest `max_n` accepted by [`q_table`].
pub const DEFAULT_Q_LIMIT: usize = 50_000;

/// Dense table of counts `values[n]` for `n = 0..=max_n` of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    family: ClassTag,
    values: Vec<Count>,
}

impl CountTable {
    pub fn new(family: ClassTag, values: Vec<Count>) -> Self {
        assert!(!values.is_empty(), "a count table covers at least n = 0");
        Self { family, values }
    }

    pub fn family(&self) -> ClassTag {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }

    /// Value at `n`; negative arguments read as zero.
    pub fn get(&self, n: i64) -> Result<Count> {
        if n < 0 {
            return Ok(Count::zero());
        }
        self.values
            .get(n as usize)
            .cloned()
            .ok_or(Error::TableCoverage { needed: n, max_n: self.max_n() })
    }

    fn at(&self, n: usize) -> &Count {
        &self.values[n]
    }
}

/// `q(0..=max_n)` by expanding `∏_{i=1}^{max_n} (1 + x^i)` modulo `x^{max_n+1}`.
pub fn q_by_series(max_n: usize) -> Vec<Count> {
    let mut coeffs = vec![Count::zero(); max_n + 1];
    coeffs[0] = Count::one();
    for i in 1..=max_n {
        // Multiply by (1 + x^i): c[w] += c[w - i], highest degree first so
        // each factor is used at most once.
        for w in (i..=max_n).rev() {
            let (low, high) = coeffs.split_at_mut(w);
            high[0] += &low[w - i];
        }
    }
    coeffs
}

/// `q(0..=max_n)` from `f(m, w)`, the number of strict partitions of `w` with
/// every part at most `m`: `f(m, w) = f(m-1, w) + f(m-1, w-m)`.
pub fn q_by_dp(max_n: usize) -> Vec<Count> {
    // row[w] = f(m, w); only w <= m(m+1)/2 can be nonzero.
    let mut row: Vec<Count> = vec![Count::one()];
    for m in 1..=max_n {
        let reach = (m * (m + 1) / 2).min(max_n);
        let mut next = Vec::with_capacity(reach + 1);
        for w in 0..=reach {
            let mut value = row.get(w).cloned().unwrap_or_default();
            if w >= m {
                if let Some(prev) = row.get(w - m) {
                    value += prev;
                }
            }
            next.push(value);
        }
        row = next;
    }
    row.resize(max_n + 1, Count::zero());
    row
}

/// `q(0..=max_n)`, cross-checked by both methods.
pub fn q_table(max_n: usize) -> Result<CountTable> {
    q_table_with_limit(max_n, DEFAULT_Q_LIMIT)
}

pub fn q_table_with_limit(max_n: usize, limit: usize) -> Result<CountTable> {
    if max_n > limit {
        return Err(Error::ResourceLimit { requested: max_n, limit });
    }
    let series = q_by_series(max_n);
    let dp = q_by_dp(max_n);
    if let Some(n) = (0..=max_n).find(|&n| series[n] != dp[n]) {
        return Err(Error::Internal(format!(
            "q({n}) disagrees: series {} vs dp {}",
            series[n], dp[n]
        )));
    }
    Ok(CountTable::new(ClassTag::STRICT, series))
}

fn sub_nonneg(total: Count, minus: &Count, what: impl FnOnce() -> String) -> Result<Count> {
    if total < *minus {
        return Err(Error::Internal(format!("{} would be negative", what())));
    }
    Ok(total - minus)
}

fn require(q: &CountTable, needed: usize) -> Result<()> {
    if q.family() != ClassTag::STRICT {
        return Err(Error::Internal(format!("expected a q table, got {}", q.family())));
    }
    if q.max_n() < needed {
        return Err(Error::TableCoverage { needed: needed as i64, max_n: q.max_n() });
    }
    Ok(())
}

/// `s_1, …, s_k` over `0..=max_n`; element `j - 1` holds `s_j`.
pub fn s_levels(k: usize, max_n: usize, q: &CountTable) -> Result<Vec<CountTable>> {
    if k == 0 {
        return Err(Error::InvalidMultiplicity(0));
    }
    require(q, max_n)?;
    let mut levels = vec![CountTable::new(ClassTag::STRICT, q.values()[..=max_n].to_vec())];
    for j in 2..=k {
        let prev = &levels[j - 2];
        let mut values = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            if n < j {
                values.push(Count::zero());
                continue;
            }
            let back = n - j + 1;
            let total = prev.at(back) + q.at(back);
            values.push(sub_nonneg(total, prev.at(n), || format!("s_{j}({n})"))?);
        }
        levels.push(CountTable::new(ClassTag::smallest(j)?, values));
    }
    Ok(levels)
}

/// `ℓ_1, …, ℓ_k`; level `j` covers `0..=max_n + Σ_{i=j+1}^{k} (i-1)`, so the
/// last one covers exactly `0..=max_n`.
pub fn l_levels(k: usize, max_n: usize, q: &CountTable) -> Result<Vec<CountTable>> {
    if k == 0 {
        return Err(Error::InvalidMultiplicity(0));
    }
    let reach = max_n + k * (k - 1) / 2;
    require(q, reach)?;
    let mut levels = vec![CountTable::new(ClassTag::STRICT, q.values()[..=reach].to_vec())];
    for j in 2..=k {
        let prev = &levels[j - 2];
        let len = prev.values.len() - (j - 1);
        let mut values = Vec::with_capacity(len);
        values.push(Count::zero());
        for n in 1..len {
            let ahead = prev.at(n + j - 1).clone();
            values.push(sub_nonneg(ahead, prev.at(n), || format!("ℓ_{j}({n})"))?);
        }
        levels.push(CountTable::new(ClassTag::largest(j)?, values));
    }
    Ok(levels)
}

/// `s_k(0..=max_n)`.
pub fn s_table(k: usize, max_n: usize, q: &CountTable) -> Result<CountTable> {
    Ok(s_levels(k, max_n, q)?.pop().expect("k >= 1"))
}

/// `ℓ_k(0..=max_n)`; `q` must reach `max_n + k(k-1)/2`.
pub fn l_table(k: usize, max_n: usize, q: &CountTable) -> Result<CountTable> {
    let mut top = l_levels(k, max_n, q)?.pop().expect("k >= 1");
    top.values.truncate(max_n + 1);
    Ok(top)
}

pub fn s_count(k: usize, n: usize, q: &CountTable) -> Result<Count> {
    Ok(s_table(k, n, q)?.at(n).clone())
}

pub fn l_count(k: usize, n: usize, q: &CountTable) -> Result<Count> {
    Ok(l_table(k, n, q)?.at(n).clone())
}

/// Memoized `s_j` and `ℓ_j` tables for `j <= k_max`, all covering `0..=max_n`.
#[derive(Clone, Debug)]
pub struct FamilyCounts {
    q: CountTable,
    smallest: Vec<CountTable>,
    largest: Vec<CountTable>,
}

impl FamilyCounts {
    /// Builds its own `q` table wide enough for the forward-looking `ℓ_k`.
    pub fn build(k_max: usize, max_n: usize) -> Result<Self> {
        let q = q_table(max_n + k_max * k_max.saturating_sub(1) / 2)?;
        Self::from_q(q, k_max, max_n)
    }

    pub fn from_q(q: CountTable, k_max: usize, max_n: usize) -> Result<Self> {
        let smallest = s_levels(k_max, max_n, &q)?;
        let mut largest = l_levels(k_max, max_n, &q)?;
        for level in &mut largest {
            level.values.truncate(max_n + 1);
        }
        Ok(Self { q, smallest, largest })
    }

    /// The underlying `q` table, which may extend past `max_n`.
    pub fn q(&self) -> &CountTable {
        &self.q
    }

    pub fn max_n(&self) -> usize {
        self.smallest[0].max_n()
    }

    pub fn k_max(&self) -> usize {
        self.smallest.len()
    }

    pub fn table(&self, tag: ClassTag) -> Result<&CountTable> {
        let k = tag.k();
        if k > self.k_max() {
            return Err(Error::InvalidMultiplicity(k));
        }
        Ok(match tag.family() {
            Family::Strict | Family::SmallestRepeat => &self.smallest[k - 1],
            Family::LargestRepeat => &self.largest[k - 1],
        })
    }

    /// Count at `n`, zero for negative `n`.
    pub fn count(&self, tag: ClassTag, n: i64) -> Result<Count> {
        self.table(tag)?.get(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::count_oracle;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn q_first_values() {
        let q = q_table(10).unwrap();
        let expected: Vec<Count> = [1u64, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10].into_iter().map(c).collect();
        assert_eq!(q.values(), expected.as_slice());
        assert_eq!(q.get(8).unwrap(), c(6));
        assert_eq!(q.get(0).unwrap(), c(1));
        assert_eq!(q.get(-3).unwrap(), c(0));
        assert!(matches!(q.get(11), Err(Error::TableCoverage { needed: 11, max_n: 10 })));
    }

    #[test]
    fn q_methods_agree_with_enumeration() {
        let series = q_by_series(30);
        let dp = q_by_dp(30);
        for n in 0..=30u64 {
            let oracle = count_oracle(ClassTag::STRICT, n);
            assert_eq!(series[n as usize], oracle);
            assert_eq!(dp[n as usize], oracle);
        }
    }

    #[test]
    fn q_exceeds_u64_eventually() {
        let q = q_table(1500).unwrap();
        assert!(q.values()[1500] > Count::from(u64::MAX));
    }

    #[test]
    fn resource_limit() {
        assert!(matches!(
            q_table_with_limit(101, 100),
            Err(Error::ResourceLimit { requested: 101, limit: 100 })
        ));
    }

    #[test]
    fn s_examples() {
        let q = q_table(12).unwrap();
        assert_eq!(s_count(2, 9, &q).unwrap(), c(4));
        assert_eq!(s_count(3, 3, &q).unwrap(), c(1));
        assert_eq!(s_count(5, 10, &q).unwrap(), c(3));
        assert_eq!(s_count(4, 10, &q).unwrap(), c(2));
        assert_eq!(s_count(1, 9, &q).unwrap(), c(8));
        assert_eq!(s_count(3, 0, &q).unwrap(), c(0));
        assert!(matches!(s_count(2, 13, &q), Err(Error::TableCoverage { .. })));
    }

    #[test]
    fn l_examples() {
        let q = q_table(30).unwrap();
        assert_eq!(l_count(2, 8, &q).unwrap(), c(2));
        assert_eq!(l_count(2, 12, &q).unwrap(), c(3));
        assert_eq!(l_count(3, 12, &q).unwrap(), c(2));
        assert_eq!(l_count(2, 14, &q).unwrap(), c(5));
        assert_eq!(l_count(4, 0, &q).unwrap(), c(0));
    }

    #[test]
    fn l_needs_forward_coverage() {
        // ℓ_3(12) reads q up to 12 + 3.
        let q = q_table(14).unwrap();
        assert!(matches!(l_count(3, 12, &q), Err(Error::TableCoverage { needed: 15, .. })));
        let q = q_table(15).unwrap();
        assert_eq!(l_count(3, 12, &q).unwrap(), c(2));
    }

    #[test]
    fn union_cardinality_form() {
        let counts = FamilyCounts::build(6, 60).unwrap();
        for k in 2..=6usize {
            let sk = ClassTag::smallest(k).unwrap();
            let sk1 = ClassTag::smallest(k - 1).unwrap();
            for n in k as i64..=60 {
                let lhs = counts.count(sk, n).unwrap() + counts.count(sk1, n).unwrap();
                let back = n - k as i64 + 1;
                let rhs = counts.q().get(back).unwrap() + counts.count(sk1, back).unwrap();
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn family_counts_match_oracle() {
        let counts = FamilyCounts::build(5, 24).unwrap();
        for k in 1..=5 {
            for n in 0..=24u64 {
                for tag in [ClassTag::smallest(k).unwrap(), ClassTag::largest(k).unwrap()] {
                    assert_eq!(counts.count(tag, n as i64).unwrap(), count_oracle(tag, n), "{tag} {n}");
                }
            }
        }
    }
}
