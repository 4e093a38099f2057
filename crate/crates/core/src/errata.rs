//! Side-by-side checks of every published formula, bound, listing and table
//! against the forms derived here.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijection::{bijection_table, MapName};
use crate::counting::FamilyCounts;
use crate::error::Result;
use crate::identity::{expand_largest, expand_smallest, to_inequality, verify_expression, QExpression};
use crate::partition::{enumerate, ClassTag, Family};
use crate::published::{self, PublishedBound, PublishedExpansion};
use crate::report::{Relation, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Published,
    Derived,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrataEntry {
    pub item: String,
    pub form: Form,
    pub expected: Status,
    pub report: VerificationReport,
}

impl ErrataEntry {
    pub fn as_expected(&self) -> bool {
        self.report.status() == self.expected
    }
}

fn expected(known_typo: bool) -> Status {
    if known_typo {
        Status::Fail
    } else {
        Status::Pass
    }
}

fn tag(family: Family, k: usize) -> Result<ClassTag> {
    ClassTag::new(family, k)
}

pub fn derived_expansion(family: Family, k: usize) -> Result<QExpression> {
    match family {
        Family::LargestRepeat => expand_largest(k),
        _ => expand_smallest(k),
    }
}

fn expansion_entries(
    item: &PublishedExpansion,
    range: &RangeInclusive<i64>,
    counts: &FamilyCounts,
) -> Result<Vec<ErrataEntry>> {
    let class = tag(item.family, item.k)?;
    let count = |n: i64| -> Result<BigInt> { Ok(counts.count(class, n)?.into()) };
    let printed = QExpression::new(format!("{} [published]", item.label), item.n_min, item.terms.iter().copied());
    let derived = derived_expansion(item.family, item.k)?.with_label(format!("{} [derived]", item.label));
    let mut printed_report = verify_expression(&printed, count, range.clone(), counts.q())?;
    printed_report.identity_label = printed.label().to_string();
    let mut derived_report = verify_expression(&derived, count, range.clone(), counts.q())?;
    derived_report.identity_label = derived.label().to_string();
    Ok(vec![
        ErrataEntry {
            item: item.label.to_string(),
            form: Form::Published,
            expected: expected(item.known_typo),
            report: printed_report,
        },
        ErrataEntry { item: item.label.to_string(), form: Form::Derived, expected: Status::Pass, report: derived_report },
    ])
}

fn bound_entries(item: &PublishedBound, range: &RangeInclusive<i64>, counts: &FamilyCounts) -> Result<Vec<ErrataEntry>> {
    let q = counts.q();
    let rhs = QExpression::new(item.label, item.n_min, item.terms.iter().copied());
    let (lo, hi) = (*range.start(), *range.end());
    let mut printed = VerificationReport::new(format!("{} [published]", item.label), item.relation, lo, hi);
    for n in lo.max(item.n_min)..=hi {
        printed.push(n, BigInt::from(q.get(n)?), rhs.evaluate(n, q)?);
    }
    let mut derived = to_inequality(&derived_expansion(item.family, item.k)?)?;
    if item.backward {
        derived = derived.normalize_backward()?;
    }
    // Published ranges may start later than the derived threshold.
    let mut derived_report = derived.verify(lo.max(item.n_min)..=hi, q)?;
    derived_report.identity_label = format!("{} [derived]", item.label);
    derived_report.start = lo;
    Ok(vec![
        ErrataEntry {
            item: item.label.to_string(),
            form: Form::Published,
            expected: expected(item.known_typo),
            report: printed,
        },
        ErrataEntry { item: item.label.to_string(), form: Form::Derived, expected: Status::Pass, report: derived_report },
    ])
}

/// Compares a published set of rows against the complete one; `lhs` is the
/// published size, `rhs` the complete size, and the record fails unless the
/// sets coincide.
fn set_report<T: Ord>(label: String, n: i64, published: BTreeSet<T>, complete: BTreeSet<T>) -> VerificationReport {
    let mut report = VerificationReport::new(label, Relation::Equal, n, n);
    let (lhs, rhs) = (BigInt::from(published.len()), BigInt::from(complete.len()));
    report.push_outcome(n, lhs, rhs, published == complete);
    report
}

fn listing_entries() -> Result<Vec<ErrataEntry>> {
    let mut out = Vec::new();
    for item in published::LISTINGS {
        let class = tag(item.family, item.k)?;
        let printed: BTreeSet<Vec<u64>> = item.members.iter().map(|m| m.to_vec()).collect();
        let complete: BTreeSet<Vec<u64>> = enumerate(class, item.n).into_iter().map(|p| p.into_parts()).collect();
        out.push(ErrataEntry {
            item: item.label.to_string(),
            form: Form::Published,
            expected: expected(item.known_typo),
            report: set_report(format!("{} [published]", item.label), item.n as i64, printed, complete),
        });
    }
    Ok(out)
}

fn table_entries() -> Result<Vec<ErrataEntry>> {
    let mut out = Vec::new();
    for item in published::TABLES {
        let map: MapName = item.map.parse()?;
        let printed: BTreeSet<(Vec<u64>, Vec<u64>)> =
            item.rows.iter().map(|(s, i)| (s.to_vec(), i.to_vec())).collect();
        let complete: BTreeSet<(Vec<u64>, Vec<u64>)> = bijection_table(map, item.n, item.k)?
            .into_iter()
            .map(|r| (r.source.into_parts(), r.image.into_parts()))
            .collect();
        out.push(ErrataEntry {
            item: item.label.to_string(),
            form: Form::Published,
            expected: expected(item.known_typo),
            report: set_report(format!("{} [published]", item.label), item.n as i64, printed, complete),
        });
    }
    Ok(out)
}

/// `s_k(n) + s_{k-1}(n) = q(n-k+1) + s_{k-1}(n - k + 1 + back_offset)`;
/// the published closing line of the union argument has `back_offset = -2`.
fn union_entries(range: &RangeInclusive<i64>, counts: &FamilyCounts) -> Result<Vec<ErrataEntry>> {
    let mut out = Vec::new();
    let q = counts.q();
    for k in 2..=5usize {
        let (sk, sk1) = (ClassTag::smallest(k)?, ClassTag::smallest(k - 1)?);
        let ki = k as i64;
        for (form, offset) in [(Form::Published, -2), (Form::Derived, 0)] {
            let label = format!(
                "s_{k}(n) + s_{}(n) = q(n-{}) + s_{}(n-{}) [{}]",
                k - 1,
                ki - 1,
                k - 1,
                ki - 1 - offset,
                if form == Form::Published { "published" } else { "derived" }
            );
            let mut report = VerificationReport::new(label, Relation::Equal, *range.start(), *range.end());
            for n in (*range.start()).max(ki)..=*range.end() {
                let lhs = BigInt::from(counts.count(sk, n)?) + BigInt::from(counts.count(sk1, n)?);
                let rhs = BigInt::from(q.get(n - ki + 1)?) + BigInt::from(counts.count(sk1, n - ki + 1 + offset)?);
                report.push(n, lhs, rhs);
            }
            out.push(ErrataEntry {
                item: format!("union count identity, k = {k}"),
                form,
                expected: if form == Form::Published { Status::Fail } else { Status::Pass },
                report,
            });
        }
    }
    Ok(out)
}

/// Every published item next to its derived counterpart over `range`.
pub fn errata_report(range: RangeInclusive<i64>) -> Result<Vec<ErrataEntry>> {
    let hi = (*range.end()).max(12) as usize;
    let counts = FamilyCounts::build(5, hi)?;
    let mut out = Vec::new();
    for item in published::EXPANSIONS {
        out.extend(expansion_entries(item, &range, &counts)?);
    }
    for item in published::BOUNDS {
        out.extend(bound_entries(item, &range, &counts)?);
    }
    out.extend(union_entries(&range, &counts)?);
    out.extend(listing_entries()?);
    out.extend(table_entries()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_behaves_as_expected() {
        let entries = errata_report(1..=40).unwrap();
        for e in &entries {
            assert!(e.as_expected(), "{}: {}", e.item, e.report.summary());
        }
    }

    #[test]
    fn s5_witness() {
        let entries = errata_report(1..=40).unwrap();
        let printed = entries
            .iter()
            .find(|e| e.item == "s_5 expansion" && e.form == Form::Published)
            .unwrap();
        let w = printed.report.witness.as_ref().unwrap();
        assert_eq!((w.n, w.lhs.clone(), w.rhs.clone()), (11, BigInt::from(-2), BigInt::from(2)));
    }

    #[test]
    fn listing_fails_on_missing_member() {
        let entries = listing_entries().unwrap();
        let s2 = &entries[0];
        let w = s2.report.witness.as_ref().unwrap();
        assert_eq!((w.n, w.lhs.clone(), w.rhs.clone()), (8, BigInt::from(3), BigInt::from(4)));
        assert!(entries[1].report.passed());
    }
}
