use std::sync::OnceLock;

use kfold_partitions::bijection::{apply, sources, MapName};
use kfold_partitions::counting::FamilyCounts;
use kfold_partitions::identity::{expand_largest, expand_smallest, smallest_threshold, to_inequality, QExpression};
use kfold_partitions::oeis::{parse_bfile, SequenceFixture, Source};
use kfold_partitions::partition::{classify, enumerate, ClassTag, Partition};
use kfold_partitions::Count;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

fn counts() -> &'static FamilyCounts {
    static COUNTS: OnceLock<FamilyCounts> = OnceLock::new();
    COUNTS.get_or_init(|| FamilyCounts::build(8, 500).unwrap())
}

fn map_strategy() -> impl Strategy<Value = MapName> {
    prop_oneof![Just(MapName::A), Just(MapName::B), Just(MapName::C), Just(MapName::D), Just(MapName::L)]
}

fn pick<T: Clone>(items: &[T], at: Index) -> Option<T> {
    (!items.is_empty()).then(|| items[at.index(items.len())].clone())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn forward_then_inverse_is_identity(map in map_strategy(), n in 0u64..=30, k in 2usize..=6, at in any::<Index>()) {
        let k = if matches!(map, MapName::A | MapName::B) { 2 } else { k };
        let srcs = sources(map, n, k).unwrap();
        if let Some(p) = pick(&srcs, at) {
            let row = apply(map, &p, k).unwrap();
            prop_assert!(row.source_class.contains(&p));
            prop_assert!(row.image_class.contains(&row.image) || row.image.is_empty());
            let shift = k as u64 - 1;
            match map {
                MapName::L => prop_assert_eq!(row.image.weight(), n + shift),
                _ => prop_assert_eq!(row.image.weight() + shift, n),
            }
        }
    }

    #[test]
    fn c_map_class_is_read_off_the_image(n in 2u64..=30, k in 2usize..=6, at in any::<Index>()) {
        if let Some(p) = pick(&sources(MapName::C, n, k).unwrap(), at) {
            let row = apply(MapName::C, &p, k).unwrap();
            let in_sk = ClassTag::smallest(k).unwrap().contains(&p);
            prop_assert_eq!(in_sk, row.image.smallest() == Some(1));
        }
    }

    #[test]
    fn members_have_the_right_multiplicities(n in 1u64..=30, k in 1usize..=6, at in any::<Index>()) {
        for tag in [ClassTag::smallest(k).unwrap(), ClassTag::largest(k).unwrap()] {
            if let Some(p) = pick(&enumerate(tag, n), at) {
                let (end_mult, inner) = if tag == ClassTag::largest(k).unwrap() && k > 1 {
                    (p.largest_multiplicity(), p.parts()[k..].to_vec())
                } else {
                    (p.smallest_multiplicity(), p.parts()[..p.len() - k].to_vec())
                };
                prop_assert_eq!(end_mult, k);
                prop_assert!(inner.windows(2).all(|w| w[0] > w[1]));
                prop_assert_eq!(p.weight(), n);
            }
        }
    }

    #[test]
    fn classify_agrees_with_membership(parts in prop::collection::vec(1u64..=9, 1..8)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts.iter().map(|&x| x as i64)).unwrap();
        if let Some(tag) = classify(&p).unwrap() {
            prop_assert!(tag.contains(&p));
            prop_assert!(enumerate(tag, p.weight()).contains(&p));
        }
    }

    #[test]
    fn bfile_parse_inverts_render(offset in -2i64..=3, values in prop::collection::vec(any::<u128>(), 1..40)) {
        let fixture = SequenceFixture {
            sequence_id: "A000009".into(),
            offset,
            values: values.into_iter().map(Count::from).collect(),
            source: Source::Bundled,
        };
        let back = parse_bfile("A000009", &fixture.to_bfile(), Source::Bundled).unwrap();
        prop_assert_eq!(back, fixture);
    }

    #[test]
    fn slack_equals_count(k in 2usize..=6, n in 0i64..=500, largest in any::<bool>()) {
        let (expr, tag) = if largest {
            (expand_largest(k).unwrap(), ClassTag::largest(k).unwrap())
        } else {
            (expand_smallest(k).unwrap(), ClassTag::smallest(k).unwrap())
        };
        let Ok(bound) = to_inequality(&expr) else { return Ok(()) };
        if n >= bound.n_min {
            let slack = bound.slack(n, counts().q()).unwrap();
            prop_assert_eq!(slack.clone(), BigInt::from(counts().count(tag, n).unwrap()));
            prop_assert!(bound.holds(n, counts().q()).unwrap());
        }
    }
}

#[test]
fn every_expansion_normalizes() {
    for k in 1..=8 {
        for expr in [expand_smallest(k).unwrap(), expand_largest(k).unwrap()] {
            assert_eq!(expr.coeff(0).abs(), 1, "{expr}");
        }
    }
}

#[test]
fn expansions_are_sound_up_to_200() {
    let c = counts();
    for k in 1..=8 {
        for (expr, tag) in [
            (expand_smallest(k).unwrap(), ClassTag::smallest(k).unwrap()),
            (expand_largest(k).unwrap(), ClassTag::largest(k).unwrap()),
        ] {
            for n in expr.n_min()..=200 {
                let value = expr.evaluate(n, c.q()).unwrap();
                assert_eq!(value, BigInt::from(c.count(tag, n).unwrap()), "{tag} at n={n}");
            }
        }
    }
}

#[test]
fn thresholds_are_sharp() {
    let c = counts();
    for k in 2..=6 {
        let expr = expand_smallest(k).unwrap();
        let n_min = smallest_threshold(k);
        assert_eq!(expr.n_min(), n_min);
        let tag = ClassTag::smallest(k).unwrap();
        let below = expr.evaluate(n_min - 1, c.q()).unwrap();
        assert_ne!(below, BigInt::from(c.count(tag, n_min - 1).unwrap()), "s_{k}");
    }
}

#[test]
fn expansion_follows_the_recurrence_symbolically() {
    let q = QExpression::new("q", 0, [(0, 1)]);
    for k in 2..=8 {
        let prev = expand_smallest(k - 1).unwrap();
        let back = -(k as i64 - 1);
        let combined = prev.negated().plus(&prev.shifted(back)).plus(&q.shifted(back));
        assert!(expand_smallest(k).unwrap().same_terms(&combined), "k={k}");
    }
}

#[test]
fn largest_coefficients_cancel() {
    for k in 2..=8 {
        assert_eq!(expand_largest(k).unwrap().coefficient_sum(), 0, "k={k}");
    }
}
