//! Five routes to `T(p)`, the number of incongruent integer triangles
//! with perimeter `p`.
//!
//! | method        | cost     | idea                                                  |
//! |---------------|----------|-------------------------------------------------------|
//! | closed form   | O(1)     | nearest integer to `p^2/48`, or `(p+3)^2/48` for odd `p` |
//! | mod-12 table  | O(1)     | twelve quadratics `3n^2 + k1*n + k0`, one per `p mod 12` |
//! | bijection sum | O(p)     | count admissible `(longest, shortest)` side pairs       |
//! | series        | O(p)     | coefficient of `x^p` in `x^3/((1-x^2)(1-x^3)(1-x^4))`  |
//! | brute force   | O(p^2)   | scan all side pairs, keep the triangles                |
//!
//! The brute-force scan is the oracle: it transcribes the definition and
//! nothing else, so the other four are tested against it. All five agree
//! for every `p >= 1`.
//!
//! The sequence opens
//!
//! ```text
//! p    : 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 ...
//! T(p) : 0 0 0 1 0 1 1 2 1 3  2  4  3  5  4  7  5 ...
//! ```
//!
//! and obeys the curious shift `T(2k+1) = T(2k+4)`: scaling every side of
//! an odd-perimeter triangle up by the flat triple (1, 1, 1) is a
//! bijection onto the triangles of perimeter `2k+4`.

use std::fmt;
use std::str::FromStr;

use crate::num::{ceil_rat, decompose, floor_rat, nearest_int, Rational};
use crate::triangle::TriangleTriple;
use crate::{Error, Result};

/// The first 25 values of `T(p)`, starting at `T(0) = 0`.
pub const SEQUENCE_PREFIX: [i128; 25] = [
    0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7, 5, 8, 7, 10, 8, 12, 10, 14, 12,
];

/// Selects one of the five counting implementations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    ClosedForm,
    Mod12,
    BijectionSum,
    Series,
    BruteForce,
}

impl CountMethod {
    /// Every method, cheapest first.
    pub const ALL: [CountMethod; 5] = [
        CountMethod::ClosedForm,
        CountMethod::Mod12,
        CountMethod::BijectionSum,
        CountMethod::Series,
        CountMethod::BruteForce,
    ];

    /// The hyphenated name used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            CountMethod::ClosedForm => "closed-form",
            CountMethod::Mod12 => "mod12",
            CountMethod::BijectionSum => "bijection-sum",
            CountMethod::Series => "series",
            CountMethod::BruteForce => "brute-force",
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for a method name that matches none of the five.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMethodError {
    input: String,
}

impl fmt::Display for ParseMethodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown counting method '{}' (expected one of: closed-form, mod12, \
             bijection-sum, series, brute-force)",
            self.input
        )
    }
}

impl std::error::Error for ParseMethodError {}

impl FromStr for CountMethod {
    type Err = ParseMethodError;

    /// Case-insensitive parse of the hyphenated method names.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "closed-form" => Ok(CountMethod::ClosedForm),
            "mod12" => Ok(CountMethod::Mod12),
            "bijection-sum" => Ok(CountMethod::BijectionSum),
            "series" => Ok(CountMethod::Series),
            "brute-force" => Ok(CountMethod::BruteForce),
            _ => Err(ParseMethodError {
                input: s.to_string(),
            }),
        }
    }
}

/// One row of the mod-12 table: for `p = 12n + residue`,
/// `T(p) = 3n^2 + k1*n + k0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mod12Row {
    pub residue: i64,
    pub k1: i64,
    pub k0: i64,
}

/// The twelve counting quadratics, indexed by `p mod 12`.
///
/// Each row restricts the closed form to one residue class, where the
/// nearest-integer rounding resolves into an exact polynomial in
/// `n = p div 12`.
pub const MOD12_TABLE: [Mod12Row; 12] = [
    Mod12Row { residue: 0, k1: 0, k0: 0 },
    Mod12Row { residue: 1, k1: 2, k0: 0 },
    Mod12Row { residue: 2, k1: 1, k0: 0 },
    Mod12Row { residue: 3, k1: 3, k0: 1 },
    Mod12Row { residue: 4, k1: 2, k0: 0 },
    Mod12Row { residue: 5, k1: 4, k0: 1 },
    Mod12Row { residue: 6, k1: 3, k0: 1 },
    Mod12Row { residue: 7, k1: 5, k0: 2 },
    Mod12Row { residue: 8, k1: 4, k0: 1 },
    Mod12Row { residue: 9, k1: 6, k0: 3 },
    Mod12Row { residue: 10, k1: 5, k0: 2 },
    Mod12Row { residue: 11, k1: 7, k0: 4 },
];

/// `T(p)` as a single rounded quotient: the nearest integer to `p^2/48`
/// for even `p`, and to `(p+3)^2/48` for odd `p`.
///
/// The quotient is never an exact half, so the rounding is unambiguous.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn count_closed_form(p: i64) -> i128 {
    assert!(p >= 1, "count requires p >= 1");
    let p = p as i128;
    let base = if p % 2 == 0 { p } else { p + 3 };
    nearest_int(Rational::new(base * base, 48))
}

/// `T(p)` from the mod-12 table: split `p = 12n + r` and evaluate the
/// row-`r` quadratic at `n`.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn count_mod12(p: i64) -> i128 {
    assert!(p >= 1, "count requires p >= 1");
    let d = decompose(p, 12);
    let row = &MOD12_TABLE[d.residue as usize];
    let n = d.quotient as i128;
    3 * n * n + (row.k1 as i128) * n + (row.k0 as i128)
}

/// `T(p)` as a sum over the longest side `c`: for each `c` from
/// `ceil(p/3)` to `floor((p-1)/2)` there are
/// `floor((p-c)/2) - (p - 2c) + 1` admissible shortest sides, and every
/// term in that range is positive.
///
/// An empty range (as for `p` in {1, 2, 4}) sums to zero.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn count_sum(p: i64) -> i128 {
    assert!(p >= 1, "count requires p >= 1");
    let p = p as i128;
    let lo = ceil_rat(Rational::new(p, 3));
    let hi = floor_rat(Rational::new(p - 1, 2));
    let mut total = 0i128;
    for c in lo..=hi {
        total += floor_rat(Rational::new(p - c, 2)) - (p - 2 * c) + 1;
    }
    total
}

/// `T(p)` straight from the definition: scan every `a <= b <= c` with
/// `a + b + c = p` and keep the triples with `a + b > c`. Quadratic in
/// `p`; this is the oracle the other methods are checked against.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn count_bruteforce(p: i64) -> i128 {
    assert!(p >= 1, "count requires p >= 1");
    let p = p as u64;
    let mut total: u128 = 0;
    for a in 1..=p / 3 {
        let mut hits: u64 = 0;
        for b in a..=(p - a) / 2 {
            let c = p - a - b;
            if b <= c && a + b > c {
                hits += 1;
            }
        }
        total += hits as u128;
    }
    total as i128
}

/// `T(p)` by the chosen method.
///
/// The only fallible route is [`CountMethod::Series`], which materializes
/// a coefficient table indexed by `p` and so needs `p` to fit in `usize`;
/// everything else is total. Values themselves cannot overflow: `T(p)`
/// fits comfortably in `i128` for every `i64` perimeter.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn count(p: i64, method: CountMethod) -> Result<i128> {
    assert!(p >= 1, "count requires p >= 1");
    match method {
        CountMethod::ClosedForm => Ok(count_closed_form(p)),
        CountMethod::Mod12 => Ok(count_mod12(p)),
        CountMethod::BijectionSum => Ok(count_sum(p)),
        CountMethod::BruteForce => Ok(count_bruteforce(p)),
        CountMethod::Series => {
            let idx = usize::try_from(p).map_err(|_| Error::Overflow)?;
            Ok(crate::series::alcuin_coefficients(idx).coefficient(idx))
        }
    }
}

/// All triangles of perimeter `p` in lexicographic side order
/// (ascending `a`, then `b`). Empty exactly when `T(p) = 0`.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn enumerate_triples(p: i64) -> Vec<TriangleTriple> {
    assert!(p >= 1, "enumerate requires p >= 1");
    let mut out = Vec::new();
    for a in 1..=p / 3 {
        for b in a..=(p - a) / 2 {
            let c = p - a - b;
            if b <= c && a + b > c {
                out.push(TriangleTriple::new(a, b, c).expect("scan emits valid triangles"));
            }
        }
    }
    out
}

/// All triangles of perimeter `p` generated from the side-pair ranges
/// underlying [`count_sum`]: longest side `c` sweeps `ceil(p/3)` to
/// `floor((p-1)/2)`, shortest side `a` sweeps `p - 2c` to
/// `floor((p-c)/2)`, and `b = p - a - c` lands in between.
///
/// Returns the same set as [`enumerate_triples`], ordered by longest
/// side first. Each emitted pair already satisfies `a <= b <= c` and the
/// strict triangle inequality, which is exactly the bijection that makes
/// the sum formula count triangles.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn enumerate_bijection(p: i64) -> Vec<TriangleTriple> {
    assert!(p >= 1, "enumerate requires p >= 1");
    let p = p as i128;
    let lo_c = ceil_rat(Rational::new(p, 3));
    let hi_c = floor_rat(Rational::new(p - 1, 2));
    let mut out = Vec::new();
    for c in lo_c..=hi_c {
        let lo_a = p - 2 * c;
        let hi_a = floor_rat(Rational::new(p - c, 2));
        for a in lo_a..=hi_a {
            let b = p - a - c;
            out.push(
                TriangleTriple::new(a as i64, b as i64, c as i64)
                    .expect("pair ranges produce valid triangles"),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_are_indexed_by_residue() {
        assert_eq!(MOD12_TABLE.len(), 12);
        for (i, row) in MOD12_TABLE.iter().enumerate() {
            assert_eq!(row.residue, i as i64);
        }
    }

    #[test]
    fn every_method_reproduces_the_sequence_prefix() {
        for p in 1..SEQUENCE_PREFIX.len() as i64 {
            let want = SEQUENCE_PREFIX[p as usize];
            for method in CountMethod::ALL {
                assert_eq!(count(p, method).unwrap(), want, "p={p} method={method}");
            }
        }
    }

    #[test]
    fn frozen_spot_values() {
        // cross-checked by hand against the brute-force definition
        assert_eq!(count_bruteforce(12), 3);
        assert_eq!(count_bruteforce(23), 14);
        assert_eq!(count_bruteforce(100), 208);
        assert_eq!(count_bruteforce(1000), 20833);
        assert_eq!(count_closed_form(100), 208);
        assert_eq!(count_closed_form(1000), 20833);
        assert_eq!(count_mod12(23), 14);
        assert_eq!(count_sum(23), 14);
    }

    #[test]
    fn sum_terms_for_p12() {
        // c = 4 contributes one triple, c = 5 contributes two
        assert_eq!(count_sum(12), 3);
        assert_eq!(
            enumerate_bijection(12)
                .iter()
                .map(|t| t.sides())
                .collect::<Vec<_>>(),
            vec![(4, 4, 4), (2, 5, 5), (3, 4, 5)]
        );
    }

    #[test]
    fn sum_range_is_empty_for_gap_perimeters() {
        for p in [1, 2, 4] {
            assert_eq!(count_sum(p), 0, "p={p}");
            assert!(enumerate_bijection(p).is_empty(), "p={p}");
        }
    }

    #[test]
    fn enumerate_is_lexicographic_and_canonical() {
        let triples = enumerate_triples(12);
        let sides: Vec<_> = triples.iter().map(|t| t.sides()).collect();
        assert_eq!(sides, vec![(2, 5, 5), (3, 4, 5), (4, 4, 4)]);
        let mut sorted = triples.clone();
        sorted.sort();
        assert_eq!(triples, sorted);

        assert_eq!(
            enumerate_triples(3)[0],
            TriangleTriple::new(1, 1, 1).unwrap()
        );
        assert!(enumerate_triples(4).is_empty());
    }

    #[test]
    fn bijection_matches_enumeration_as_a_set() {
        for p in 1..=120 {
            let mut a = enumerate_triples(p);
            let mut b = enumerate_bijection(p);
            a.sort();
            b.sort();
            assert_eq!(a, b, "p={p}");
            assert_eq!(a.len() as i128, count_bruteforce(p), "p={p}");
        }
    }

    #[test]
    fn methods_agree_on_a_dense_sweep() {
        for p in 1..=400 {
            let oracle = count_bruteforce(p);
            assert_eq!(count_closed_form(p), oracle, "closed form, p={p}");
            assert_eq!(count_mod12(p), oracle, "mod12, p={p}");
            assert_eq!(count_sum(p), oracle, "sum, p={p}");
        }
    }

    #[test]
    fn odd_perimeters_shift_onto_even_ones() {
        for k in 0..300 {
            let p = 2 * k + 1;
            assert_eq!(count_closed_form(p), count_closed_form(p + 3), "p={p}");
        }
        for k in 0..60 {
            let p = 2 * k + 1;
            assert_eq!(count_bruteforce(p), count_bruteforce(p + 3), "p={p}");
        }
    }

    #[test]
    fn closed_form_tracks_parabola_within_linear_band() {
        // |T(p) - p^2/48| <= (6p + 33)/48, scaled through by 48
        for p in 3i128..=5000 {
            let t = count_closed_form(p as i64);
            assert!((48 * t - p * p).abs() <= 6 * p + 33, "p={p}");
        }
    }

    #[test]
    fn method_names_roundtrip_and_parse_caselessly() {
        for method in CountMethod::ALL {
            assert_eq!(method.name().parse::<CountMethod>().unwrap(), method);
        }
        assert_eq!("Series".parse::<CountMethod>().unwrap(), CountMethod::Series);
        assert_eq!(
            "BRUTE-FORCE".parse::<CountMethod>().unwrap(),
            CountMethod::BruteForce
        );
        assert_eq!(
            "Closed-Form".parse::<CountMethod>().unwrap(),
            CountMethod::ClosedForm
        );
        let err = "quantum".parse::<CountMethod>().unwrap_err();
        assert!(err.to_string().contains("unknown counting method 'quantum'"));
    }

    #[test]
    fn dispatcher_matches_direct_calls() {
        for p in [3, 12, 23, 57, 240] {
            let want = count_bruteforce(p);
            for method in CountMethod::ALL {
                assert_eq!(count(p, method).unwrap(), want, "p={p} method={method}");
            }
        }
    }
}
