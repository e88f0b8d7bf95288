//! Deterministic sweeps pinning the five counting routes to each other
//! and the closed-form area maximizer to exhaustive search.

use alcuin::counting::{
    count_bruteforce, count_closed_form, count_mod12, count_sum, enumerate_triples,
};
use alcuin::geometry::{heron_16esq, max_area_triple, range_of};
use alcuin::series::{alcuin_coefficients, product_check};

#[test]
fn five_way_agreement_to_2000() {
    let table = alcuin_coefficients(2000);
    for p in 1..=2000i64 {
        let oracle = count_bruteforce(p);
        assert_eq!(count_closed_form(p), oracle, "closed form, p={p}");
        assert_eq!(count_mod12(p), oracle, "mod12, p={p}");
        assert_eq!(count_sum(p), oracle, "sum, p={p}");
        assert_eq!(table.coefficient(p as usize), oracle, "series, p={p}");
    }
}

#[test]
fn factored_product_matches_table() {
    assert_eq!(product_check(1000), Ok(true));
    // an awkward truncation point, not a multiple of any part size
    assert_eq!(product_check(1001), Ok(true));
}

#[test]
fn area_maximizer_is_the_unique_tightest_triple() {
    for p in 3..=2000i64 {
        if p == 4 {
            continue;
        }
        let best = max_area_triple(p).unwrap();
        let best_area = heron_16esq(best.triple).unwrap();
        let expected_range = if p % 3 == 0 { 0 } else { 1 };
        assert_eq!(range_of(best.triple), expected_range, "p={p}");

        for t in enumerate_triples(p) {
            if t == best.triple {
                continue;
            }
            // every rival is strictly wider and strictly smaller in area
            assert!(heron_16esq(t).unwrap() < best_area, "p={p} t={t}");
            assert!(range_of(t) > range_of(best.triple), "p={p} t={t}");
        }
    }
}
