//! Formulas, bounds, and example tables exactly as published, kept as data so
//! they can be checked against the derived forms. Entries flagged
//! `known_typo` are expected to fail.

use crate::partition::Family;
use crate::report::Relation;

/// A published closed form for `s_k(n)` or `ℓ_k(n)` as `(shift, coefficient)` terms.
#[derive(Clone, Copy, Debug)]
pub struct PublishedExpansion {
    pub label: &'static str,
    pub family: Family,
    pub k: usize,
    pub terms: &'static [(i64, i64)],
    pub n_min: i64,
    pub known_typo: bool,
}

pub const EXPANSIONS: &[PublishedExpansion] = &[
    PublishedExpansion {
        label: "s_2 expansion",
        family: Family::SmallestRepeat,
        k: 2,
        terms: &[(-1, 2), (0, -1)],
        n_min: 2,
        known_typo: false,
    },
    PublishedExpansion {
        label: "s_3 expansion",
        family: Family::SmallestRepeat,
        k: 3,
        terms: &[(-3, 2), (-1, -2), (0, 1)],
        n_min: 4,
        known_typo: false,
    },
    PublishedExpansion {
        label: "s_4 expansion",
        family: Family::SmallestRepeat,
        k: 4,
        terms: &[(-6, 2), (-4, -2), (-1, 2), (0, -1)],
        n_min: 7,
        known_typo: false,
    },
    // Signs of the n-6 and n-5 terms are swapped relative to the recurrence.
    PublishedExpansion {
        label: "s_5 expansion",
        family: Family::SmallestRepeat,
        k: 5,
        terms: &[(-10, 2), (-8, -2), (-6, 2), (-5, -2), (-4, 2), (-1, -2), (0, 1)],
        n_min: 11,
        known_typo: true,
    },
    PublishedExpansion {
        label: "l_2 expansion",
        family: Family::LargestRepeat,
        k: 2,
        terms: &[(1, 1), (0, -1)],
        n_min: 1,
        known_typo: false,
    },
    PublishedExpansion {
        label: "l_3 expansion",
        family: Family::LargestRepeat,
        k: 3,
        terms: &[(3, 1), (2, -1), (1, -1), (0, 1)],
        n_min: 1,
        known_typo: false,
    },
    PublishedExpansion {
        label: "l_4 expansion",
        family: Family::LargestRepeat,
        k: 4,
        terms: &[(6, 1), (5, -1), (4, -1), (2, 1), (1, 1), (0, -1)],
        n_min: 1,
        known_typo: false,
    },
    // Prints q(n-2), q(n-1) where the recurrence gives q(n+2), q(n+1).
    PublishedExpansion {
        label: "l_5 expansion",
        family: Family::LargestRepeat,
        k: 5,
        terms: &[(10, 1), (9, -1), (8, -1), (5, 2), (-2, -1), (-1, -1), (0, 1)],
        n_min: 1,
        known_typo: true,
    },
];

/// A published bound `q(n) <relation> Σ c_j q(n+j)`.
#[derive(Clone, Copy, Debug)]
pub struct PublishedBound {
    pub label: &'static str,
    pub relation: Relation,
    pub terms: &'static [(i64, i64)],
    pub n_min: i64,
    /// Family and `k` whose nonnegativity yields the bound.
    pub family: Family,
    pub k: usize,
    /// Whether the bound is stated with descending arguments only.
    pub backward: bool,
    pub known_typo: bool,
}

pub const BOUNDS: &[PublishedBound] = &[
    PublishedBound {
        label: "upper bound from s_2",
        relation: Relation::AtMost,
        terms: &[(-1, 2)],
        n_min: 4,
        family: Family::SmallestRepeat,
        k: 2,
        backward: false,
        known_typo: false,
    },
    PublishedBound {
        label: "lower bound from s_3",
        relation: Relation::AtLeast,
        terms: &[(-1, 2), (-3, -2)],
        n_min: 4,
        family: Family::SmallestRepeat,
        k: 3,
        backward: false,
        known_typo: false,
    },
    PublishedBound {
        label: "upper bound from s_4",
        relation: Relation::AtMost,
        terms: &[(-1, 2), (-4, -2), (-6, 2)],
        n_min: 7,
        family: Family::SmallestRepeat,
        k: 4,
        backward: false,
        known_typo: false,
    },
    // Inherits the sign swap of the published s_5 expansion.
    PublishedBound {
        label: "lower bound from s_5",
        relation: Relation::AtLeast,
        terms: &[(-1, 2), (-4, -2), (-5, 2), (-6, -2), (-8, 2), (-10, -2)],
        n_min: 11,
        family: Family::SmallestRepeat,
        k: 5,
        backward: false,
        known_typo: true,
    },
    PublishedBound {
        label: "upper bound from l_2",
        relation: Relation::AtMost,
        terms: &[(1, 1)],
        n_min: 1,
        family: Family::LargestRepeat,
        k: 2,
        backward: false,
        known_typo: false,
    },
    PublishedBound {
        label: "lower bound from l_3",
        relation: Relation::AtLeast,
        terms: &[(1, 1), (2, 1), (3, -1)],
        n_min: 1,
        family: Family::LargestRepeat,
        k: 3,
        backward: false,
        known_typo: false,
    },
    PublishedBound {
        label: "upper bound from l_4",
        relation: Relation::AtMost,
        terms: &[(1, 1), (2, 1), (4, -1), (5, -1), (6, 1)],
        n_min: 1,
        family: Family::LargestRepeat,
        k: 4,
        backward: false,
        known_typo: false,
    },
    // The bound is right even though the l_5 expansion printed beside it is not.
    PublishedBound {
        label: "lower bound from l_5",
        relation: Relation::AtLeast,
        terms: &[(1, 1), (2, 1), (5, -2), (8, 1), (9, 1), (10, -1)],
        n_min: 1,
        family: Family::LargestRepeat,
        k: 5,
        backward: false,
        known_typo: false,
    },
    PublishedBound {
        label: "descending lower bound from l_4",
        relation: Relation::AtLeast,
        terms: &[(-1, 1), (-2, 1), (-4, -1), (-5, -1), (-6, 1)],
        n_min: 7,
        family: Family::LargestRepeat,
        k: 4,
        backward: true,
        known_typo: false,
    },
];

/// A published list of partitions of one weight in one family.
#[derive(Clone, Copy, Debug)]
pub struct PublishedListing {
    pub label: &'static str,
    pub family: Family,
    pub k: usize,
    pub n: u64,
    pub members: &'static [&'static [u64]],
    pub known_typo: bool,
}

pub const LISTINGS: &[PublishedListing] = &[
    // Omits (4,2,1,1).
    PublishedListing {
        label: "listing of S_2(8)",
        family: Family::SmallestRepeat,
        k: 2,
        n: 8,
        members: &[&[6, 1, 1], &[4, 4], &[4, 2, 2]],
        known_typo: true,
    },
    PublishedListing {
        label: "listing of L_2(8)",
        family: Family::LargestRepeat,
        k: 2,
        n: 8,
        members: &[&[4, 4], &[3, 3, 2]],
        known_typo: false,
    },
];

/// A published bijection example: `(source, image)` rows for one map.
#[derive(Clone, Copy, Debug)]
pub struct PublishedTable {
    pub label: &'static str,
    /// One of `A`, `B`, `C`, `D`, `L`.
    pub map: &'static str,
    pub n: u64,
    pub k: usize,
    pub rows: &'static [(&'static [u64], &'static [u64])],
    pub known_typo: bool,
}

pub const TABLES: &[PublishedTable] = &[
    PublishedTable {
        label: "A(9) -> Q(8) example",
        map: "A",
        n: 9,
        k: 2,
        rows: &[
            (&[7, 1, 1], &[7, 1]),
            (&[5, 2, 1, 1], &[5, 2, 1]),
            (&[4, 3, 1, 1], &[4, 3, 1]),
            (&[8, 1], &[8]),
            (&[6, 2, 1], &[6, 2]),
            (&[5, 3, 1], &[5, 3]),
        ],
        known_typo: false,
    },
    PublishedTable {
        label: "B(9) -> Q(8) example",
        map: "B",
        n: 9,
        k: 2,
        rows: &[
            (&[5, 2, 2], &[5, 2, 1]),
            (&[9], &[8]),
            (&[7, 2], &[7, 1]),
            (&[6, 3], &[6, 2]),
            (&[5, 4], &[5, 3]),
            (&[4, 3, 2], &[4, 3, 1]),
        ],
        known_typo: false,
    },
    PublishedTable {
        label: "C(10) -> Q(8) example",
        map: "C",
        n: 10,
        k: 3,
        rows: &[
            (&[7, 1, 1, 1], &[7, 1]),
            (&[5, 2, 1, 1, 1], &[5, 2, 1]),
            (&[4, 3, 1, 1, 1], &[4, 3, 1]),
            (&[8, 1, 1], &[8]),
            (&[6, 2, 1, 1], &[6, 2]),
            (&[5, 3, 1, 1], &[5, 3]),
        ],
        known_typo: false,
    },
    // Missing (5,5) -> (4,4).
    PublishedTable {
        label: "D(10) -> S_2(8) example",
        map: "D",
        n: 10,
        k: 3,
        rows: &[(&[4, 2, 2, 2], &[4, 2, 1, 1]), (&[6, 2, 2], &[6, 1, 1]), (&[4, 3, 3], &[4, 2, 2])],
        known_typo: true,
    },
    PublishedTable {
        label: "L_3(12) u L_2(12) -> L_2(14) example",
        map: "L",
        n: 12,
        k: 3,
        rows: &[
            (&[4, 4, 4], &[5, 5, 4]),
            (&[3, 3, 3, 2, 1], &[4, 4, 3, 2, 1]),
            (&[6, 6], &[7, 7]),
            (&[5, 5, 2], &[6, 6, 2]),
            (&[4, 4, 3, 1], &[5, 5, 3, 1]),
        ],
        known_typo: false,
    },
];

/// Published table for `(map, n, k)`, if there is one.
pub fn table(map: &str, n: u64, k: usize) -> Option<&'static PublishedTable> {
    TABLES.iter().find(|t| t.map.eq_ignore_ascii_case(map) && t.n == n && t.k == k)
}
