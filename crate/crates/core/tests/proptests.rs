mod common;

use irrepcount::census::enumerate_group;
use irrepcount::claims::map_type2;
use irrepcount::lie::{dim, formula_factors, l_to_lambda, lambda_to_l, sl_formula_factors};
use irrepcount::{Family, GroupId, LTuple, WeightTuple};
use num_bigint::BigUint;
use proptest::prelude::*;

fn classical_group() -> impl Strategy<Value = GroupId> {
    (0usize..4, 1u64..=9).prop_map(|(i, r)| {
        let f = Family::CLASSICAL[i];
        GroupId::new(f, r.max(f.min_rank())).unwrap()
    })
}

/// A group with a random dominant weight (partition or shifted labels).
fn group_and_weight() -> impl Strategy<Value = (GroupId, WeightTuple)> {
    classical_group().prop_flat_map(|g| {
        let len = g.tuple_len();
        let coords = if g.family() == Family::Sl {
            prop::collection::vec(1u64..=12, len).boxed()
        } else {
            prop::collection::vec(0u64..=12, len)
                .prop_map(|mut v| {
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                })
                .boxed()
        };
        (Just(g), coords.prop_map(WeightTuple))
    })
}

fn orthogonal(g: GroupId) -> bool {
    g.family() != Family::Sl
}

proptest! {
    #[test]
    fn factors_at_least_one((g, w) in group_and_weight()) {
        let factors = if orthogonal(g) {
            formula_factors(&lambda_to_l(g, &w).unwrap())
        } else {
            sl_formula_factors(w.coords())
        };
        for (a, b) in factors {
            prop_assert!(b > 0 && a >= b, "{g} {w}: {a}/{b}");
        }
    }

    #[test]
    fn l_round_trip((g, w) in group_and_weight()) {
        prop_assume!(orthogonal(g));
        let l = lambda_to_l(g, &w).unwrap();
        prop_assert_eq!(l_to_lambda(&l).unwrap(), w);
    }

    #[test]
    fn trivial_iff_one((g, w) in group_and_weight()) {
        let d = dim(g, &w).unwrap();
        prop_assert_eq!(d == BigUint::from(1u32), w.is_trivial(g));
    }

    /// Adding a column `(1^p)` (or raising one shifted label) strictly
    /// increases the dimension.
    #[test]
    fn monotone_in_labels((g, w) in group_and_weight(), p in 0usize..9) {
        let p = p % g.tuple_len();
        let mut bigger = w.coords().to_vec();
        if orthogonal(g) {
            for x in &mut bigger[..=p] {
                *x += 1;
            }
        } else {
            bigger[p] += 1;
        }
        let bigger = WeightTuple(bigger);
        prop_assert!(dim(g, &bigger).unwrap() > dim(g, &w).unwrap(), "{g}: {w} -> {bigger}");
    }

    #[test]
    fn enumeration_matches_literal(g in classical_group(), n in 1u64..400) {
        let recs = enumerate_group(g, n).unwrap();
        for r in &recs {
            prop_assert_eq!(&dim(g, &r.weight).unwrap(), &r.dim);
            prop_assert!(r.dim <= BigUint::from(n));
        }
        let mut want: Vec<WeightTuple> = common::oracle_group(g, n).into_iter().map(|r| r.1).collect();
        let mut got: Vec<WeightTuple> = recs.into_iter().map(|r| r.weight).collect();
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    /// Only `l_1` and `l_1 + 1` (for the right parity) share an image under
    /// the type-2 map; the other coordinates are untouched.
    #[test]
    fn type2_preimages_at_most_two(rank in 2u64..10, tail in prop::collection::vec(0u64..8, 10), head in 2u64..30) {
        let g = GroupId::new(Family::SoEven, rank).unwrap();
        let mut lam: Vec<u64> = tail[..rank as usize].to_vec();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        lam[0] += head;
        let l = lambda_to_l(g, &WeightTuple(lam)).unwrap();
        let v = l.values();
        prop_assume!(v[0] > v[1] + 1);
        let image = map_type2(&l).unwrap();
        prop_assert_eq!(&image.values()[1..], &v[1..]);
        let mut same = 0;
        for first in v[1] + 2..=2 * v[0] + 2 {
            let mut other = v.to_vec();
            other[0] = first;
            let other = LTuple::new(Family::SoEven, other).unwrap();
            if map_type2(&other).unwrap() == image {
                same += 1;
            }
        }
        prop_assert!((1..=2).contains(&same));
    }
}
