//! Property tests for the crate's spec-level invariants.

use proptest::prelude::*;

use alcuin::counting::{
    count_bruteforce, count_closed_form, count_mod12, count_sum, enumerate_bijection,
    enumerate_triples,
};
use alcuin::geometry::{
    area_argmax_bruteforce, heron_16esq, max_area_triple, range_lemma_holds,
};
use alcuin::num::{ceil_rat, decompose, floor_rat, nearest_int, Rational};
use alcuin::series::{representation_count, series_multiply, TruncatedSeries};
use alcuin::{Error, TriangleTriple};

const SIDE_MAX: i64 = 2_000_000;

fn series_strategy() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1000i128..=1000, 1..=12).prop_map(TruncatedSeries::from_coefficients)
}

proptest! {
    #[test]
    fn floor_is_greatest_integer_below(n in any::<i64>(), d in 1i64..=1_000_000) {
        let f = floor_rat(Rational::new(n as i128, d as i128));
        prop_assert!(f * d as i128 <= n as i128);
        prop_assert!((f + 1) * d as i128 > n as i128);
    }

    #[test]
    fn ceil_is_negated_floor_of_negation(n in any::<i64>(), d in 1i64..=1_000_000) {
        let q = Rational::new(n as i128, d as i128);
        let neg = Rational::new(-(n as i128), d as i128);
        prop_assert_eq!(ceil_rat(q), -floor_rat(neg));
    }

    #[test]
    fn nearest_minimizes_distance(n in any::<i64>(), d in 1i64..=1_000_000) {
        let (n, d) = (n as i128, d as i128);
        let k = nearest_int(Rational::new(n, d));
        // |k - n/d| <= 1/2, i.e. |2(k*d - n)| <= d
        prop_assert!((2 * (k * d - n)).abs() <= d);
    }

    #[test]
    fn nearest_breaks_ties_away_from_zero(m in -1_000_000i128..=1_000_000) {
        // (2m+1)/2 is exactly halfway between m and m+1
        let k = nearest_int(Rational::new(2 * m + 1, 2));
        let expected = if 2 * m + 1 >= 0 { m + 1 } else { m };
        prop_assert_eq!(k, expected);
    }

    #[test]
    fn decompose_reconstructs(p in 0i64..=i64::MAX, m in 1i64..=i64::MAX) {
        let d = decompose(p, m);
        prop_assert!(d.residue >= 0 && d.residue < m);
        prop_assert_eq!(
            (m as i128) * (d.quotient as i128) + d.residue as i128,
            p as i128
        );
    }

    #[test]
    fn triple_construction_is_canonical_or_rejected(
        a in -10i64..=SIDE_MAX, b in 1i64..=SIDE_MAX, c in 1i64..=SIDE_MAX
    ) {
        let mut sorted = [a, b, c];
        sorted.sort_unstable();
        match TriangleTriple::new(a, b, c) {
            Ok(t) => {
                prop_assert_eq!(t.sides(), (sorted[0], sorted[1], sorted[2]));
                prop_assert!(sorted[0] >= 1 && sorted[0] + sorted[1] > sorted[2]);
                prop_assert_eq!(t.perimeter(), a + b + c);
                // rebuilding from canonical sides is the identity
                prop_assert_eq!(TriangleTriple::new(sorted[2], sorted[0], sorted[1]).unwrap(), t);
            }
            Err(Error::NotATriangle { .. }) => {
                prop_assert!(sorted[0] < 1 || sorted[0] + sorted[1] <= sorted[2]);
            }
            Err(other) => prop_assert!(false, "unexpected error {:?}", other),
        }
    }

    #[test]
    fn all_methods_match_the_oracle(p in 1i64..=1500) {
        let oracle = count_bruteforce(p);
        prop_assert_eq!(count_closed_form(p), oracle);
        prop_assert_eq!(count_mod12(p), oracle);
        prop_assert_eq!(count_sum(p), oracle);
        if p >= 3 {
            prop_assert_eq!(representation_count(p as usize - 3), oracle);
        }
    }

    #[test]
    fn closed_form_and_table_agree_far_out(p in 1i64..=1_000_000_000_000) {
        // two O(1) formulas derived independently
        prop_assert_eq!(count_closed_form(p), count_mod12(p));
    }

    #[test]
    fn sum_formula_agrees_at_scale(p in 1i64..=300_000) {
        prop_assert_eq!(count_sum(p), count_closed_form(p));
    }

    #[test]
    fn parabola_band_bounds_the_count(p in 3i64..=1_000_000_000) {
        let p128 = p as i128;
        let t = count_closed_form(p);
        prop_assert!((48 * t - p128 * p128).abs() <= 6 * p128 + 33);
    }

    #[test]
    fn bijection_enumeration_matches_scan(p in 1i64..=500) {
        let mut by_scan = enumerate_triples(p);
        let mut by_pairs = enumerate_bijection(p);
        prop_assert_eq!(by_pairs.len() as i128, count_bruteforce(p));
        by_scan.sort();
        by_pairs.sort();
        prop_assert_eq!(by_scan, &by_pairs[..]);
        by_pairs.dedup();
        prop_assert_eq!(by_pairs.len() as i128, count_bruteforce(p));
    }

    #[test]
    fn series_multiply_commutes(a in series_strategy(), b in series_strategy()) {
        let n = a.max_degree().min(b.max_degree());
        let a = TruncatedSeries::from_coefficients(a.coefficients()[..=n].to_vec());
        let b = TruncatedSeries::from_coefficients(b.coefficients()[..=n].to_vec());
        prop_assert_eq!(
            series_multiply(&a, &b).unwrap(),
            series_multiply(&b, &a).unwrap()
        );
    }

    #[test]
    fn closed_form_argmax_matches_scan(p in 3i64..=600) {
        prop_assume!(p != 4);
        let closed = max_area_triple(p).unwrap();
        prop_assert_eq!(closed.triple, area_argmax_bruteforce(p).unwrap());
        prop_assert_eq!(
            closed.area_sq_432,
            27 * heron_16esq(closed.triple).unwrap().0
        );
    }

    #[test]
    fn range_lemma_on_generated_pairs(
        (b, k, da1, da2) in (3i64..=80).prop_flat_map(|b| {
            (Just(b), 0..b).prop_flat_map(move |(b, k)| {
                let top = (b - k - 1) / 2;
                (Just(b), Just(k), 0..=top, 0..=top)
            })
        })
    ) {
        // legs b - da and b + da + k share the sum 2b + k and the base b
        let t1 = TriangleTriple::new(b - da1, b, b + da1 + k).unwrap();
        let t2 = TriangleTriple::new(b - da2, b, b + da2 + k).unwrap();
        prop_assert_eq!(range_lemma_holds(t1, t2), Ok(true));
        prop_assert_eq!(range_lemma_holds(t2, t1), Ok(true));
    }

    #[test]
    fn heron_is_positive_on_triangles(
        (b, da, dc) in (2i64..=2000).prop_flat_map(|b| {
            (Just(b), 0..b).prop_flat_map(|(b, da)| (Just(b), Just(da), 0..b - da))
        })
    ) {
        let t = TriangleTriple::new(b - da, b, b + dc).unwrap();
        prop_assert!(heron_16esq(t).unwrap().0 > 0);
    }
}

