//! Symbolic `q`-combinations for `s_k(n)` and `ℓ_k(n)`.
//!
//! A [`QExpression`] is a finite sum `Σ c_j · q(n + j)` with integer
//! coefficients. Unrolling the two recurrences over such sums writes every
//! `s_k` and `ℓ_k` in terms of `q` alone; nonnegativity of the counts then
//! turns each expansion into a bound on `q(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::report::{Relation, VerificationReport};

/// `Σ c_j · q(n + j)`, claimed to equal its count for `n >= n_min`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QExpression {
    coeffs: BTreeMap<i64, i64>,
    n_min: i64,
    label: String,
}

impl QExpression {
    /// Zero coefficients are dropped; repeated shifts are summed.
    pub fn new(label: impl Into<String>, n_min: i64, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut expr = Self { coeffs: BTreeMap::new(), n_min, label: label.into() };
        for (shift, c) in terms {
            expr.add_term(shift, c);
        }
        expr
    }

    /// `q(n)`.
    pub fn q() -> Self {
        Self::new("q", 0, [(0, 1)])
    }

    fn add_term(&mut self, shift: i64, c: i64) {
        let slot = self.coeffs.entry(shift).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&shift);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, shift: i64) -> i64 {
        self.coeffs.get(&shift).copied().unwrap_or(0)
    }

    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_n_min(mut self, n_min: i64) -> Self {
        self.n_min = n_min;
        self
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `expr(n + by)`: every shift moves by `by`.
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&j, &c)| (j + by, c)).collect(),
            n_min: self.n_min,
            label: self.label.clone(),
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&j, &c)| (j, -c)).collect(),
            n_min: self.n_min,
            label: self.label.clone(),
        }
    }

    /// Termwise sum; keeps `self`'s label and threshold.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&j, &c) in &other.coeffs {
            out.add_term(j, c);
        }
        out
    }

    /// Same terms, ignoring label and threshold.
    pub fn same_terms(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }

    /// `Σ c_j · q(n + j)` with `q(m) = 0` for `m < 0`.
    pub fn evaluate(&self, n: i64, q: &CountTable) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (&j, &c) in &self.coeffs {
            let value = BigInt::from(q.get(n + j)?);
            total += value * c;
        }
        Ok(total)
    }

    /// Sum of the coefficients, i.e. the value against `q ≡ 1`.
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

fn term(c: i64, shift: i64, first: bool) -> String {
    let arg = match shift {
        0 => "n".to_string(),
        j if j > 0 => format!("n+{j}"),
        j => format!("n-{}", -j),
    };
    let mag = c.abs();
    let body = if mag == 1 { format!("q({arg})") } else { format!("{mag}q({arg})") };
    match (first, c < 0) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, true) => format!(" - {body}"),
        (false, false) => format!(" + {body}"),
    }
}

impl QExpression {
    /// Renders the sum with terms ordered by distance from `q(n)`.
    pub fn render(&self, nearest_first: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.coeffs.iter().map(|(&j, &c)| (j, c)).collect();
        terms.sort_by_key(|&(j, _)| j.abs());
        if !nearest_first {
            terms.reverse();
        }
        terms.iter().enumerate().map(|(i, &(j, c))| term(c, j, i == 0)).collect()
    }
}

impl fmt::Display for QExpression {
    /// Farthest terms first, e.g. `2q(n-6) - 2q(n-4) + 2q(n-1) - q(n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Threshold from which the `s_k` expansion holds: `k(k-1)/2 + 1`.
pub fn smallest_threshold(k: usize) -> i64 {
    (k * (k - 1) / 2) as i64 + 1
}

/// `s_k(n)` in terms of `q`, by unrolling
/// `s_k(n) = -s_{k-1}(n) + s_{k-1}(n-k+1) + q(n-k+1)` from `s_1 = q`.
pub fn expand_smallest(k: usize) -> Result<QExpression> {
    if k == 0 {
        return Err(Error::InvalidMultiplicity(0));
    }
    let mut expr = QExpression::q();
    for j in 2..=k {
        let back = -(j as i64 - 1);
        expr = expr.negated().plus(&expr.shifted(back)).plus(&QExpression::q().shifted(back));
    }
    Ok(expr.with_label(format!("s_{k}")).with_n_min(smallest_threshold(k)))
}

/// `ℓ_k(n)` in terms of `q`, by unrolling
/// `ℓ_k(n) = -ℓ_{k-1}(n) + ℓ_{k-1}(n+k-1)` from `ℓ_1 = q`. Valid for `n >= 1`.
pub fn expand_largest(k: usize) -> Result<QExpression> {
    if k == 0 {
        return Err(Error::InvalidMultiplicity(0));
    }
    let mut expr = QExpression::q();
    for j in 2..=k {
        expr = expr.negated().plus(&expr.shifted(j as i64 - 1));
    }
    let n_min = if k == 1 { 0 } else { 1 };
    Ok(expr.with_label(format!("l_{k}")).with_n_min(n_min))
}

/// Checks `expr(n) == count(n)` for `n` in `range` from `expr.n_min()` on,
/// and records the largest `n < n_min` (not below 0) where they differ.
pub fn verify_expression<F>(
    expr: &QExpression,
    count: F,
    range: RangeInclusive<i64>,
    q: &CountTable,
) -> Result<VerificationReport>
where
    F: Fn(i64) -> Result<BigInt>,
{
    let (lo, hi) = (*range.start(), *range.end());
    let mut report = VerificationReport::new(format!("{} = {}", expr.label(), expr), Relation::Equal, lo, hi);
    for n in lo.max(expr.n_min())..=hi {
        report.push(n, expr.evaluate(n, q)?, count(n)?);
    }
    for n in (0..expr.n_min().min(hi + 1)).rev() {
        if expr.evaluate(n, q)? != count(n)? {
            report.failure_below_threshold = Some(n);
            break;
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    /// `q(n) >= rhs`
    LowerBound,
    /// `q(n) <= rhs`
    UpperBound,
}

/// A bound on `q(n)` obtained from a nonnegative expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub direction: Direction,
    /// The bound, free of any `q(n)` term.
    pub rhs: QExpression,
    pub n_min: i64,
    /// The nonnegative expression this bound came from; its value is the slack.
    pub source: QExpression,
}

impl Inequality {
    pub fn relation(&self) -> Relation {
        match self.direction {
            Direction::LowerBound => Relation::AtLeast,
            Direction::UpperBound => Relation::AtMost,
        }
    }

    pub fn bound(&self, n: i64, q: &CountTable) -> Result<BigInt> {
        self.rhs.evaluate(n, q)
    }

    /// `|q(n) - bound|`, which equals the source count.
    pub fn slack(&self, n: i64, q: &CountTable) -> Result<BigInt> {
        let q_n = BigInt::from(q.get(n)?);
        let bound = self.bound(n, q)?;
        Ok(match self.direction {
            Direction::LowerBound => q_n - bound,
            Direction::UpperBound => bound - q_n,
        })
    }

    pub fn holds(&self, n: i64, q: &CountTable) -> Result<bool> {
        Ok(self.slack(n, q)? >= BigInt::zero())
    }

    /// The same bound with every argument at or below `n`.
    pub fn normalize_backward(&self) -> Result<Inequality> {
        to_inequality(&normalize_backward(&self.source))
    }

    /// Checks the bound for `n` in `range` from `n_min` on; `lhs` is `q(n)`.
    pub fn verify(&self, range: RangeInclusive<i64>, q: &CountTable) -> Result<VerificationReport> {
        let (lo, hi) = (*range.start(), *range.end());
        let mut report = VerificationReport::new(self.to_string(), self.relation(), lo, hi);
        for n in lo.max(self.n_min)..=hi {
            report.push(n, BigInt::from(q.get(n)?), self.bound(n, q)?);
        }
        Ok(report)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q(n) {} {}, n >= {}", self.relation().symbol(), self.rhs.render(true), self.n_min)
    }
}

/// Solves `expr >= 0` for `q(n)`; needs a `±1` coefficient on `q(n)`.
pub fn to_inequality(expr: &QExpression) -> Result<Inequality> {
    let c0 = expr.coeff(0);
    let (direction, sign) = match c0 {
        1 => (Direction::LowerBound, -1),
        -1 => (Direction::UpperBound, 1),
        coefficient => {
            return Err(Error::NotNormalizable { label: expr.label().to_string(), coefficient });
        }
    };
    let rhs = QExpression::new(
        format!("{} bound", expr.label()),
        expr.n_min(),
        expr.coeffs().iter().filter(|(&j, _)| j != 0).map(|(&j, &c)| (j, sign * c)),
    );
    Ok(Inequality { direction, rhs, n_min: expr.n_min(), source: expr.clone() })
}

/// Substitutes `n → n - max_shift` so no argument exceeds `n`; the threshold
/// moves up by the same amount. Expressions already looking backward are
/// returned unchanged.
pub fn normalize_backward(expr: &QExpression) -> QExpression {
    match expr.max_shift() {
        Some(top) if top > 0 => expr
            .shifted(-top)
            .with_n_min(expr.n_min() + top)
            .with_label(format!("{}(n-{top})", expr.label())),
        _ => expr.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{q_table, FamilyCounts};
    use crate::partition::ClassTag;

    fn terms(expr: &QExpression) -> Vec<(i64, i64)> {
        expr.coeffs().iter().map(|(&j, &c)| (j, c)).collect()
    }

    #[test]
    fn smallest_expansions() {
        let e = expand_smallest(2).unwrap();
        assert_eq!(terms(&e), vec![(-1, 2), (0, -1)]);
        assert_eq!(e.n_min(), 2);
        let e = expand_smallest(3).unwrap();
        assert_eq!(terms(&e), vec![(-3, 2), (-1, -2), (0, 1)]);
        assert_eq!(e.n_min(), 4);
        let e = expand_smallest(4).unwrap();
        assert_eq!(terms(&e), vec![(-6, 2), (-4, -2), (-1, 2), (0, -1)]);
        assert_eq!(e.n_min(), 7);
        assert_eq!(e.to_string(), "2q(n-6) - 2q(n-4) + 2q(n-1) - q(n)");
        let e = expand_smallest(5).unwrap();
        assert_eq!(terms(&e), vec![(-10, 2), (-8, -2), (-6, -2), (-5, 2), (-4, 2), (-1, -2), (0, 1)]);
        assert_eq!(e.n_min(), 11);
    }

    #[test]
    fn largest_expansions() {
        assert_eq!(terms(&expand_largest(2).unwrap()), vec![(0, -1), (1, 1)]);
        assert_eq!(terms(&expand_largest(3).unwrap()), vec![(0, 1), (1, -1), (2, -1), (3, 1)]);
        assert_eq!(
            terms(&expand_largest(5).unwrap()),
            vec![(0, 1), (1, -1), (2, -1), (5, 2), (8, -1), (9, -1), (10, 1)]
        );
        assert_eq!(expand_largest(3).unwrap().to_string(), "q(n+3) - q(n+2) - q(n+1) + q(n)");
    }

    #[test]
    fn evaluate_examples() {
        let q = q_table(20).unwrap();
        assert_eq!(expand_smallest(2).unwrap().evaluate(9, &q).unwrap(), BigInt::from(4));
        assert_eq!(expand_smallest(3).unwrap().evaluate(3, &q).unwrap(), BigInt::from(2));
        assert_eq!(expand_largest(2).unwrap().evaluate(12, &q).unwrap(), BigInt::from(3));
        assert!(matches!(
            expand_largest(3).unwrap().evaluate(18, &q),
            Err(Error::TableCoverage { .. })
        ));
    }

    #[test]
    fn inequalities() {
        let i = to_inequality(&expand_smallest(2).unwrap()).unwrap();
        assert_eq!(i.direction, Direction::UpperBound);
        assert_eq!(i.to_string(), "q(n) <= 2q(n-1), n >= 2");
        let i = to_inequality(&expand_smallest(4).unwrap()).unwrap();
        assert_eq!(i.to_string(), "q(n) <= 2q(n-1) - 2q(n-4) + 2q(n-6), n >= 7");
        let i = to_inequality(&expand_largest(2).unwrap()).unwrap();
        assert_eq!(i.to_string(), "q(n) <= q(n+1), n >= 1");
        let bad = QExpression::new("x", 0, [(0, 2), (-1, 1)]);
        assert!(matches!(to_inequality(&bad), Err(Error::NotNormalizable { coefficient: 2, .. })));
    }

    #[test]
    fn backward_normalization() {
        let i = to_inequality(&expand_largest(4).unwrap()).unwrap().normalize_backward().unwrap();
        assert_eq!(i.direction, Direction::LowerBound);
        assert_eq!(i.n_min, 7);
        assert_eq!(terms(&i.rhs), vec![(-6, 1), (-5, -1), (-4, -1), (-2, 1), (-1, 1)]);
        let i = to_inequality(&expand_largest(2).unwrap()).unwrap().normalize_backward().unwrap();
        assert_eq!(i.to_string(), "q(n) >= q(n-1), n >= 2");
        let back = expand_smallest(3).unwrap();
        assert_eq!(normalize_backward(&back), back);
    }

    #[test]
    fn verify_reports_sharp_threshold() {
        let counts = FamilyCounts::build(4, 60).unwrap();
        let tag = ClassTag::smallest(4).unwrap();
        let expr = expand_smallest(4).unwrap();
        let report =
            verify_expression(&expr, |n| Ok(counts.count(tag, n)?.into()), 0..=60, counts.q()).unwrap();
        assert!(report.passed());
        assert_eq!(report.failure_below_threshold, Some(6));
        assert_eq!(report.records.first().unwrap().n, 7);
    }

    #[test]
    fn coefficient_sums() {
        assert_eq!(expand_largest(1).unwrap().coefficient_sum(), 1);
        for k in 2..=8 {
            assert_eq!(expand_largest(k).unwrap().coefficient_sum(), 0);
        }
    }
}
